"""Group core: builders, subgroup machinery, quotients, duals, isomorphism.

The subgroup oracle is a raw subset scan (feasible through order 8), so the
join-closure enumerator is checked against something with no shared logic.
"""

import itertools
import random

import numpy as np
import pytest

import crossbraid as cb
from crossbraid.errors import (
    GroupTooLarge,
    InvalidElement,
    NotAbelian,
    NotAGroup,
    NotAHomomorphism,
    NotNormal,
    NotSurjective,
    UnknownBuiltin,
)


def brute_subgroup_sets(G):
    """Every subgroup of G as a frozenset, by scanning all subsets (|G| <= 8)."""
    assert G.order <= 8
    out = set()
    ids = list(range(1, G.order))
    for r in range(G.order):
        for extra in itertools.combinations(ids, r):
            cand = {0, *extra}
            ok = all(G.table[a][b] in cand for a in cand for b in cand)
            if ok:
                out.add(frozenset(cand))
    return out


def relabeled_copy(G, rng):
    """Same group under a random relabeling fixing the identity."""
    perm = [0] + rng.sample(range(1, G.order), G.order - 1)
    table = [[0] * G.order for _ in range(G.order)]
    for a in range(G.order):
        for b in range(G.order):
            table[perm[a]][perm[b]] = perm[G.table[a][b]]
    return cb.FiniteGroup(table)


BATTERY = ["C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8"]


class TestValidation:
    def test_cyclic_tables_validate(self):
        for n in (1, 2, 5, 8):
            G = cb.FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])
            assert G.order == n

    def test_rejects_non_square(self):
        with pytest.raises(NotAGroup):
            cb.FiniteGroup([[0, 1], [1]])

    def test_rejects_bad_identity(self):
        with pytest.raises(NotAGroup):
            cb.FiniteGroup([[1, 0], [0, 1]])

    def test_rejects_non_latin(self):
        with pytest.raises(NotAGroup):
            cb.FiniteGroup([[0, 1, 2], [1, 1, 1], [2, 0, 1]])

    def test_rejects_non_associative(self):
        # order-5 Latin square with identity that is not the cyclic group
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(NotAGroup, match="associativity"):
            cb.FiniteGroup(table)

    def test_rejects_out_of_range(self):
        with pytest.raises(NotAGroup):
            cb.FiniteGroup([[0, 1], [1, 7]])

    def test_builders_produce_valid_tables(self):
        for name in BATTERY + ["S4", "D12", "C2xC3xC4"]:
            G = cb.builtin_group(name)
            again = cb.FiniteGroup(G.table)  # runs full validation
            assert again.order == G.order


class TestBuilders:
    def test_cyclic(self):
        C4 = cb.cyclic(4)
        assert C4.table[1][3] == 0 and C4.table[2][3] == 1
        assert C4.is_abelian and C4.exponent == 4

    def test_dihedral_structure(self):
        D8 = cb.dihedral(8)
        assert sorted(D8.element_orders) == [1, 2, 2, 2, 2, 2, 4, 4]
        assert not D8.is_abelian
        with pytest.raises(UnknownBuiltin):
            cb.dihedral(7)

    def test_quaternion_structure(self):
        Q8 = cb.quaternion()
        assert sorted(Q8.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]
        # i * j = k, j * i = -k
        assert Q8.labels[Q8.mul(2, 4)] == "k"
        assert Q8.labels[Q8.mul(4, 2)] == "-k"

    def test_symmetric(self):
        S3 = cb.symmetric(3)
        assert S3.order == 6 and not S3.is_abelian
        S4 = cb.symmetric(4)
        assert sorted(len(c) for _, c in cb.conjugacy_classes(S4)) == [1, 3, 6, 6, 8]
        with pytest.raises(UnknownBuiltin):
            cb.symmetric(7)

    def test_product_and_multifactor_names(self):
        G = cb.builtin_group("C2xC2xC2")
        assert G.order == 8 and G.exponent == 2
        assert cb.builtin_group("C2xC3").exponent == 6

    def test_from_generators(self):
        S3 = cb.from_generators(["(0 1)", "(0 1 2)"], 3)
        assert cb.is_isomorphic(S3, cb.symmetric(3))
        D8 = cb.from_generators(["(0 1 2 3)", "(0 2)"], 4)
        assert cb.is_isomorphic(D8, cb.dihedral(8))
        with pytest.raises(NotAGroup):
            cb.from_generators([(0, 0, 1)], 3)

    def test_parse_permutation(self):
        from crossbraid.groups import parse_permutation

        assert parse_permutation("(0 1 2)(3 4)", 5) == (1, 2, 0, 4, 3)
        assert parse_permutation("e", 3) == (0, 1, 2)
        with pytest.raises(ValueError):
            parse_permutation("(0 9)", 3)
        with pytest.raises(ValueError):
            parse_permutation("(0 0)", 3)

    def test_build_group_dispatch(self):
        assert cb.build_group("Q8").order == 8
        assert cb.build_group({"builtin": "S3"}).order == 6
        g = cb.build_group({"generators": ["(0 1)"], "degree": 2})
        assert g.order == 2
        assert cb.build_group({"table": [[0, 1], [1, 0]], "order": 2}).order == 2
        with pytest.raises(NotAGroup):
            cb.build_group({"table": [[0, 1], [1, 0]], "order": 3})
        with pytest.raises(UnknownBuiltin):
            cb.build_group("F17")

    def test_element_ops(self):
        S3 = cb.symmetric(3)
        for a in S3.elements:
            assert S3.mul(a, S3.inv(a)) == 0
            assert S3.power(a, S3.element_orders[a]) == 0
            assert S3.power(a, -1) == S3.inv(a)
        with pytest.raises(InvalidElement):
            S3.check_element(6)


class TestSubgroups:
    @pytest.mark.parametrize("name", BATTERY)
    def test_matches_subset_oracle(self, name):
        G = cb.builtin_group(name)
        got = {frozenset(S.elements) for S in cb.all_subgroups(G)}
        assert got == brute_subgroup_sets(G)

    def test_counts(self):
        counts = {"C4": 3, "S3": 6, "Q8": 6, "D8": 10, "C2xC2xC2": 16}
        for name, k in counts.items():
            assert len(cb.all_subgroups(cb.builtin_group(name))) == k

    def test_sorted_and_lagrange(self):
        G = cb.dihedral(8)
        subs = cb.all_subgroups(G)
        keys = [S.sort_key() for S in subs]
        assert keys == sorted(keys)
        assert all(G.order % S.order == 0 for S in subs)

    def test_closed_under_intersection(self):
        for name in ("D8", "Q8", "S3", "C2xC2xC2"):
            G = cb.builtin_group(name)
            found = {S.elements for S in cb.all_subgroups(G)}
            for a, b in itertools.combinations(found, 2):
                meet = tuple(sorted(set(a) & set(b)))
                assert meet in found

    def test_order_bound(self):
        with pytest.raises(GroupTooLarge):
            cb.all_subgroups(cb.symmetric(5))

    def test_subgroup_validation(self):
        S3 = cb.symmetric(3)
        with pytest.raises(NotAGroup):
            cb.Subgroup(S3, (0, 3))  # 3-cycle alone: not closed
        with pytest.raises(NotAGroup):
            cb.Subgroup(S3, (1, 2))  # no identity

    def test_normality(self):
        S3 = cb.symmetric(3)
        normals = cb.normal_subgroups(S3)
        assert [S.order for S in normals] == [1, 3, 6]
        Q8 = cb.quaternion()
        assert len(cb.normal_subgroups(Q8)) == len(cb.all_subgroups(Q8)) == 6

    def test_subgroup_as_group(self):
        S3 = cb.symmetric(3)
        A3 = next(S for S in cb.all_subgroups(S3) if S.order == 3)
        H, embed = cb.subgroup_as_group(A3)
        assert H.order == 3
        for i in range(3):
            for j in range(3):
                assert embed[H.table[i][j]] == S3.table[embed[i]][embed[j]]


class TestStructureQueries:
    def test_conjugacy_classes(self):
        assert [(r, len(c)) for r, c in cb.conjugacy_classes(cb.symmetric(3))] == [
            (0, 1), (1, 3), (3, 2)]
        assert sorted(len(c) for _, c in cb.conjugacy_classes(cb.quaternion())) == [
            1, 1, 2, 2, 2]
        C4 = cb.cyclic(4)
        classes = cb.conjugacy_classes(C4)
        assert len(classes) == 4  # abelian: all singletons

    def test_center_and_centralizer(self):
        S3 = cb.symmetric(3)
        assert cb.center(S3).elements == (0,)
        three_cycle = next(a for a in S3.elements if S3.element_orders[a] == 3)
        assert cb.centralizer(S3, three_cycle).order == 3
        assert cb.center(cb.cyclic(4)).order == 4
        assert cb.center(cb.dihedral(8)).order == 2
        assert cb.center(cb.quaternion()).elements == (0, 1)

    def test_derived_subgroup(self):
        assert cb.derived_subgroup(cb.symmetric(3)).order == 3
        assert cb.derived_subgroup(cb.quaternion()).elements == (0, 1)
        assert cb.derived_subgroup(cb.cyclic(6)).order == 1

    def test_closure_minimal(self):
        G = cb.dihedral(8)
        got = cb.closure(G, (4,))
        for sub in brute_subgroup_sets(G):
            if 4 in sub:
                assert set(got) <= sub or not (set(got) > sub)
        assert set(got) == min(
            (s for s in brute_subgroup_sets(G) if 4 in s), key=len)

    def test_commuting_normal_pairs(self):
        S3 = cb.symmetric(3)
        pairs = {(L.elements, M.elements) for L, M in cb.commuting_normal_pairs(S3)}
        one, a3, s3 = (0,), (0, 3, 4), tuple(range(6))
        assert pairs == {(one, one), (one, a3), (one, s3),
                         (a3, one), (a3, a3), (s3, one)}
        assert len(cb.commuting_normal_pairs(cb.quaternion())) == 23
        assert len(cb.commuting_normal_pairs(cb.dihedral(8))) == 23
        # abelian: every ordered pair of subgroups
        assert len(cb.commuting_normal_pairs(cb.cyclic(4))) == 9


class TestQuotient:
    def test_cyclic_quotient(self):
        C4 = cb.cyclic(4)
        N = cb.Subgroup(C4, (0, 2))
        Q, proj = cb.quotient(C4, N)
        assert Q.order == 2
        assert proj.images == (0, 1, 0, 1)

    def test_s3_quotient(self):
        S3 = cb.symmetric(3)
        A3 = next(S for S in cb.all_subgroups(S3) if S.order == 3)
        Q, proj = cb.quotient(S3, A3)
        assert Q.order == 2 and proj.is_surjective
        assert proj.kernel().elements == A3.elements

    def test_not_normal(self):
        S3 = cb.symmetric(3)
        H = next(S for S in cb.all_subgroups(S3) if S.order == 2)
        with pytest.raises(NotNormal):
            cb.quotient(S3, H)

    def test_projection_section_roundtrip(self):
        Q8 = cb.quaternion()
        Q, proj = cb.quotient(Q8, cb.center(Q8))
        sec = proj.min_section()
        assert all(proj(sec[q]) == q for q in Q.elements)
        assert cb.is_isomorphic(Q, cb.builtin_group("C2xC2"))


class TestGroupHom:
    def test_valid_hom(self):
        C4, C2 = cb.cyclic(4), cb.cyclic(2)
        f = cb.GroupHom(C4, C2, (0, 1, 0, 1))
        assert f(3) == 1 and f.is_surjective and not f.is_injective
        assert f.kernel().elements == (0, 2)

    def test_invalid_hom(self):
        C4, C2 = cb.cyclic(4), cb.cyclic(2)
        with pytest.raises(NotAHomomorphism):
            cb.GroupHom(C4, C2, (0, 1, 1, 0))
        with pytest.raises(NotAHomomorphism):
            cb.GroupHom(C4, C2, (1, 0, 1, 0))
        with pytest.raises(NotAHomomorphism):
            cb.GroupHom(C4, C2, (0, 1, 0))

    def test_min_section_requires_surjective(self):
        C4, C2 = cb.cyclic(4), cb.cyclic(2)
        emb = cb.GroupHom(C2, C4, (0, 2))
        with pytest.raises(NotSurjective):
            emb.min_section()


class TestHomEnumeration:
    def brute_homs(self, G, A):
        out = set()
        for images in itertools.product(A.elements, repeat=G.order):
            if images[0] != 0:
                continue
            if all(images[G.table[a][b]] == A.table[images[a]][images[b]]
                   for a in G.elements for b in G.elements):
                out.add(images)
        return out

    def test_against_brute(self):
        for gname, aname in [("C4", "C2"), ("C2xC2", "C4"), ("S3", "C6"), ("C6", "C6")]:
            G, A = cb.builtin_group(gname), cb.builtin_group(aname)
            got = cb.enumerate_homs_to_abelian(G, A)
            assert set(got) == self.brute_homs(G, A)
            assert got == sorted(got)

    def test_counts(self):
        C2 = cb.cyclic(2)
        assert len(cb.enumerate_homs_to_abelian(cb.quaternion(), C2)) == 4
        assert len(cb.enumerate_homs_to_abelian(cb.symmetric(3), cb.cyclic(3))) == 1
        assert len(cb.enumerate_homs_to_abelian(cb.trivial_group(), C2)) == 1

    def test_rejects_nonabelian_target(self):
        with pytest.raises(NotAbelian):
            cb.enumerate_homs_to_abelian(cb.cyclic(2), cb.symmetric(3))


class TestAbelianBasis:
    @pytest.mark.parametrize("name,factors", [
        ("C12", (12,)),
        ("C2xC4", (4, 2)),
        ("C2xC2xC2", (2, 2, 2)),
        ("C2xC6", (6, 2)),
        ("C3xC3", (3, 3)),
        ("C8", (8,)),
        ("C2xC2xC4", (4, 2, 2)),
        ("C4xC4", (4, 4)),
    ])
    def test_invariant_factors(self, name, factors):
        A = cb.builtin_group(name)
        basis = cb.abelian_basis(A)
        assert tuple(order for _, order in basis) == factors

    def test_unique_representation(self):
        for name in ("C2xC4", "C2xC6", "C4xC4", "C12"):
            A = cb.builtin_group(name)
            basis = cb.abelian_basis(A)
            seen = set()
            for coeffs in itertools.product(*(range(o) for _, o in basis)):
                x = 0
                for c, (g, _) in zip(coeffs, basis):
                    x = A.table[x][A.power(g, c)]
                seen.add(x)
            assert len(seen) == A.order

    def test_rejects_nonabelian(self):
        with pytest.raises(NotAbelian):
            cb.abelian_basis(cb.symmetric(3))


class TestDualGroup:
    def test_c4_pairing(self):
        D = cb.dual_group(cb.cyclic(4))
        assert D.modulus == 4
        # characters sorted lexicographically: id k pairs as e(k,a) = k*a mod 4
        assert D.pairing == ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 0, 2), (0, 3, 2, 1))
        assert D.character(1, 3).value == 3

    def test_dual_is_isomorphic(self):
        for name in ("C2", "C6", "C2xC2", "C2xC4"):
            A = cb.builtin_group(name)
            D = cb.dual_group(A)
            assert D.group.order == A.order
            assert cb.is_isomorphic(D.group, A)

    def test_trivial_character_is_zero(self):
        D = cb.dual_group(cb.builtin_group("C2xC4"))
        assert all(v == 0 for v in D.pairing[0])

    def test_annihilator(self):
        C4 = cb.cyclic(4)
        D = cb.dual_group(C4)
        H = cb.Subgroup(C4, (0, 2))
        ann = cb.annihilator(D, H)
        assert ann.order == C4.order // H.order
        assert all(D.pairing[chi][2] == 0 for chi in ann.elements)

    def test_double_annihilator_recovers_subgroup(self):
        A = cb.builtin_group("C2xC4")
        D = cb.dual_group(A)
        for S in cb.all_subgroups(A):
            ann = cb.annihilator(D, S)
            back = tuple(a for a in A.elements
                         if all(D.pairing[chi][a] == 0 for chi in ann.elements))
            assert back == S.elements

    def test_rejects_nonabelian(self):
        with pytest.raises(NotAbelian):
            cb.dual_group(cb.symmetric(3))


class TestIsomorphism:
    def test_known_pairs(self):
        assert cb.is_isomorphic(cb.dihedral(6), cb.symmetric(3))
        assert not cb.is_isomorphic(cb.cyclic(4), cb.builtin_group("C2xC2"))
        assert not cb.is_isomorphic(cb.quaternion(), cb.dihedral(8))
        assert not cb.is_isomorphic(cb.cyclic(4), cb.cyclic(8))

    def test_order_eight_types_distinct(self):
        names = ["C8", "C2xC4", "C2xC2xC2", "D8", "Q8"]
        groups = [cb.builtin_group(n) for n in names]
        for i, G in enumerate(groups):
            for j, H in enumerate(groups):
                assert cb.is_isomorphic(G, H) == (i == j)

    def test_relabeling_invariance(self):
        rng = random.Random(41)
        for name in ("S3", "D8", "Q8", "C2xC4"):
            G = cb.builtin_group(name)
            for _ in range(3):
                assert cb.is_isomorphic(G, relabeled_copy(G, rng))

    def test_bound(self):
        with pytest.raises(GroupTooLarge):
            cb.is_isomorphic(cb.symmetric(4), cb.symmetric(4))


def test_abelian_class_count_equals_order():
    for name in ("C2", "C6", "C2xC4", "C2xC2xC2"):
        G = cb.builtin_group(name)
        assert len(cb.conjugacy_classes(G)) == G.order


def test_labels_roundtrip():
    S3 = cb.symmetric(3)
    assert S3.label(0) == "e"
    assert all(isinstance(S3.label(a), str) for a in S3.elements)
    D8 = cb.dihedral(8)
    assert D8.label(0) == "r0"
