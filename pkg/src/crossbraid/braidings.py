"""Deciding and enumerating crossed braidings on pointed and Rep categories.

A crossed braiding is certified by a subcategory datum S(L,M,B) passing
three conditions against a chosen grading: it centralizes the canonical
copy of the grading group's representations, its dimension complements
the grading, and it is transverse to the identity component.  Pointed
ambients are graded by a surjection out of G; Rep(G) ambients by a
central subgroup.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidGrading, NotCentral, ParentMismatch
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    center,
    dual_group,
    normal_subgroups,
    quotient,
    subgroup_as_group,
)
from .subcats import (
    OmegaBicharacter,
    SubcatData,
    _pair_solutions,
    _same_twist,
    contains,
    fpdim,
    verify_bicharacter,
)
from .twisted_center import TwistedGroupData


@dataclass(frozen=True)
class GradingSpec:
    """Grading data for a crossed braiding problem.

    Pointed case: a surjection pi out of G plus its minimal-id section.
    Rep case: a central subgroup H; the grading group is the quotient of
    the dual of the center by the annihilator of H.
    """

    projection: GroupHom | None = None
    section: tuple[int, ...] | None = None
    central: Subgroup | None = None

    def __post_init__(self):
        if (self.projection is None) == (self.central is None):
            raise InvalidGrading("need exactly one of projection or central")
        if self.projection is not None:
            sec = self.projection.min_section()
            if self.section is None:
                object.__setattr__(self, "section", sec)
            else:
                pi = self.projection
                if len(self.section) != pi.target.order or self.section[0] != 0 \
                        or any(pi(g) != h for h, g in enumerate(self.section)):
                    raise InvalidGrading("section does not split the projection")
        else:
            G = self.central.parent
            inside = set(center(G).elements)
            if not set(self.central.elements) <= inside:
                raise NotCentral("grading subgroup must be central")

    @classmethod
    def pointed(cls, pi: GroupHom, section: tuple[int, ...] | None = None):
        return cls(projection=pi, section=section)

    @classmethod
    def rep(cls, H: Subgroup):
        return cls(central=H)

    @property
    def kind(self) -> str:
        return "pointed" if self.projection is not None else "rep"

    @property
    def group(self) -> FiniteGroup:
        if self.projection is not None:
            return self.projection.source
        return self.central.parent

    def grading_group(self) -> FiniteGroup:
        if self.projection is not None:
            return self.projection.target
        cached = getattr(self, "_grading_group", None)
        if cached is None:
            G = self.central.parent
            Zgrp, emb = subgroup_as_group(center(G))
            dual = dual_group(Zgrp)
            pos = {a: i for i, a in enumerate(emb)}
            H_in_Z = Subgroup(Zgrp, tuple(pos[h] for h in self.central.elements))
            cached, _ = quotient(dual.group, dual.annihilator(H_in_Z))
            object.__setattr__(self, "_grading_group", cached)
        return cached


@dataclass(frozen=True)
class TheoremChecks:
    """The three crossed-braiding conditions, evaluated separately."""

    centralizes: bool
    fpdim: bool
    transverse: bool

    def __bool__(self) -> bool:
        return self.centralizes and self.fpdim and self.transverse


@dataclass(frozen=True)
class CrossedBraidingCertificate:
    """A grading together with a witness passing all three conditions."""

    grading: GradingSpec
    witness: SubcatData
    checks: TheoremChecks

    def __post_init__(self):
        if not self.checks:
            raise ValueError("certificate requires all three checks to pass")


@lru_cache(maxsize=512)
def _canonical_copy(data: TwistedGroupData, L: Subgroup,
                    M: Subgroup) -> SubcatData:
    table = (0,) * (L.order * M.order)
    return SubcatData(data, L, M, OmegaBicharacter(data, L, M, table))


def _reindex(M: Subgroup, H: Subgroup) -> tuple[int, ...]:
    pos = {a: i for i, a in enumerate(M.elements)}
    return tuple(pos[h] for h in H.elements)


def check_theorem_conditions(ambient: TwistedGroupData, grading: GradingSpec,
                             s: SubcatData) -> TheoremChecks:
    """Evaluate the three conditions of the crossed-braiding theorem.

    Pointed case: the witness must centralize Rep of the grading group
    (equivalently L inside ker pi), complement it in dimension, and have
    M = G.  Rep case: the witness must lie in the centralizer of the
    canonical S(H,G,1), complement the grading, and pair L injectively
    against M modulo H.
    """
    G = ambient.group
    if not _same_twist(ambient, s.parent):
        raise ParentMismatch("witness lives over a different twist")
    if not grading.group.same_table(G):
        raise InvalidGrading("grading is for a different group")
    if grading.kind == "pointed":
        K = grading.projection.kernel()
        centralizes = contains(_canonical_copy(ambient, K, Subgroup(G, (0,))), s)
        dim_ok = grading.projection.target.order * fpdim(s) == G.order
        transverse = s.M.order == G.order
        return TheoremChecks(centralizes, dim_ok, transverse)
    if not ambient.omega.is_zero:
        raise InvalidGrading("rep gradings require a trivial twist")
    H = grading.central
    dual_copy = _canonical_copy(ambient, Subgroup(G, G.elements), H)
    centralizes = contains(dual_copy, s)
    dim_ok = grading.grading_group().order * fpdim(s) == G.order
    transverse = all(
        any(s.B.exponent_at(l, m) for m in s.M.elements)
        for l in s.L.elements if l != 0)
    return TheoremChecks(centralizes, dim_ok, transverse)


def _certify(grading: GradingSpec, witness: SubcatData) -> CrossedBraidingCertificate:
    checks = check_theorem_conditions(witness.parent, grading, witness)
    return CrossedBraidingCertificate(grading, witness, checks)


def _witness_key(s: SubcatData):
    return (s.L.order, s.M.order, s.L.elements, s.M.elements, s.B.table)


def enumerate_pointed(data: TwistedGroupData,
                      pi: GroupHom) -> list[CrossedBraidingCertificate]:
    """Crossed braidings on the pointed category, graded along pi.

    Empty when ker(pi) is not central; otherwise one certificate per
    valid pairing on ker(pi) x G, each passing the theorem conditions.
    """
    G = data.group
    if not pi.source.same_table(G):
        raise ParentMismatch("projection is for a different group")
    grading = GradingSpec.pointed(pi)
    K = pi.kernel()
    if not set(K.elements) <= set(center(G).elements):
        return []
    whole = Subgroup(G, G.elements)
    sol = _pair_solutions(data, K, whole)
    out = []
    if sol is not None:
        for tab in sol.enumerate():
            cand = OmegaBicharacter(data, K, whole, tab)
            if verify_bicharacter(cand):
                out.append(_certify(grading, SubcatData(data, K, whole, cand)))
    out.sort(key=lambda c: _witness_key(c.witness))
    return out


def enumerate_rep(G: FiniteGroup, H: Subgroup) -> list[CrossedBraidingCertificate]:
    """Crossed braidings on Rep(G) for the grading cut out by central H.

    Witnesses are S(L,M,B) with H <= M normal, M/H abelian, L abelian
    normal commuting with M of order [M:H], and B an invariant pairing
    killing H that pairs L with M/H nondegenerately.
    """
    if not H.parent.same_table(G):
        raise ParentMismatch("grading subgroup is for a different group")
    if not set(H.elements) <= set(center(G).elements):
        raise NotCentral("grading subgroup must be central")
    data = TwistedGroupData.trivial(G)
    grading = GradingSpec.rep(H)
    h_set = set(H.elements)
    t = G.table
    out = []
    for M in normal_subgroups(G):
        if not h_set <= set(M.elements):
            continue
        Mgrp, _ = subgroup_as_group(M)
        Q, _ = quotient(Mgrp, Subgroup(Mgrp, _reindex(M, H)))
        if not Q.is_abelian:
            continue
        target = M.order // H.order
        for L in normal_subgroups(G):
            if L.order != target:
                continue
            if not all(t[a][b] == t[b][a]
                       for a in L.elements for b in L.elements):
                continue
            if not all(t[a][b] == t[b][a]
                       for a in L.elements for b in M.elements):
                continue
            sol = _pair_solutions(data, L, M)
            if sol is None:
                continue
            for tab in sol.enumerate():
                cand = OmegaBicharacter(data, L, M, tab)
                if not verify_bicharacter(cand):
                    continue
                if any(cand.exponent_at(l, h) for l in L.elements
                       for h in H.elements):
                    continue
                if any(not any(cand.exponent_at(l, m) for m in M.elements)
                       for l in L.elements if l != 0):
                    continue
                out.append(_certify(grading, SubcatData(data, L, M, cand)))
    out.sort(key=lambda c: _witness_key(c.witness))
    return out


def gradings_of_rep(G: FiniteGroup) -> list[GradingSpec]:
    """One grading per central subgroup, smallest first."""
    inside = set(center(G).elements)
    out = []
    for S in all_subgroups(G):
        if set(S.elements) <= inside:
            out.append(GradingSpec.rep(S))
    out.sort(key=lambda g: (g.central.order, g.central.elements))
    return out
