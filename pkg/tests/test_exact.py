"""Exact arithmetic: unity exponents, Smith form, congruence solving.

Oracles here are deliberately naive: Laplace determinants, brute-force
enumeration of (Z/N)^n, and direct matrix reconstruction, so the fast
implementations are checked against something independently simple.
"""

import itertools
import random

import numpy as np
import pytest

from crossbraid.exact import (
    CongruenceSolution,
    UnityExponent,
    as_int_matrix,
    diagonalize_mod,
    int_det,
    smith_normal_form,
    solve_congruences,
)


def laplace_det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * laplace_det(minor)
    return total


def brute_congruence(A, b, N):
    """All x in (Z/N)^n with A x = b mod N, as a set of tuples."""
    A = np.array(A, dtype=np.int64)
    m, n = A.shape
    out = set()
    for x in itertools.product(range(N), repeat=n):
        if all((int(A[i] @ x) - b[i]) % N == 0 for i in range(m)):
            out.add(x)
    return out


class TestUnityExponent:
    def test_arithmetic(self):
        u = UnityExponent(3, 8)
        v = UnityExponent(7, 8)
        assert (u * v).value == 2
        assert u.inverse().value == 5
        assert (u * u.inverse()).is_identity
        assert (u ** 3).value == 1
        assert (u ** -1) == u.inverse()
        assert UnityExponent.one(5).value == 0

    def test_normalization(self):
        assert UnityExponent(13, 4).value == 1
        assert UnityExponent(-1, 4).value == 3

    def test_mixed_moduli_rejected(self):
        with pytest.raises(ValueError):
            UnityExponent(1, 4) * UnityExponent(1, 8)
        with pytest.raises(ValueError):
            UnityExponent(0, 0)

    def test_lift(self):
        u = UnityExponent(3, 4)
        w = u.lift(12)
        assert (w.value, w.modulus) == (9, 12)
        with pytest.raises(ValueError):
            u.lift(6)

    def test_str(self):
        assert str(UnityExponent(3, 8)) == "zeta_8^3"


class TestIntDet:
    def test_against_laplace(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 4)
            mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert int_det(mat) == laplace_det(mat)

    def test_singular_and_empty(self):
        assert int_det([[1, 2], [2, 4]]) == 0
        assert int_det(np.zeros((0, 0), dtype=np.int64)) == 1


class TestSmithNormalForm:
    def test_known_small(self):
        assert smith_normal_form([[2, 0], [0, 3]]).invariant_factors == (1, 6)
        assert smith_normal_form([[1, 0], [0, 0]]).invariant_factors == (1,)
        assert smith_normal_form(np.zeros((3, 3), dtype=int)).invariant_factors == ()

    def test_random_reconstruction(self):
        rng = random.Random(5)
        for _ in range(200):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            A = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(m)]
            snf = smith_normal_form(A)
            assert snf.verify(A)
            facts = snf.invariant_factors
            assert all(d > 0 for d in facts)
            assert all(facts[i + 1] % facts[i] == 0 for i in range(len(facts) - 1))
            # zeros only at the tail
            seen_zero = False
            for d in snf.diagonal:
                if d == 0:
                    seen_zero = True
                else:
                    assert not seen_zero

    def test_determinant_preserved(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 4)
            A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            snf = smith_normal_form(A)
            prod = 1
            for d in snf.diagonal:
                prod *= d
            assert prod == abs(laplace_det(A)) or prod == 0 == laplace_det(A)

    def test_large_entries_fall_back_exactly(self):
        rng = random.Random(13)
        A = [[rng.randint(-10**14, 10**14) for _ in range(5)] for _ in range(5)]
        snf = smith_normal_form(A)
        assert snf.verify(A)

    def test_deterministic(self):
        A = [[6, 4, 2], [4, 2, 8], [2, 8, 6]]
        s1, s2 = smith_normal_form(A), smith_normal_form(A)
        assert s1.diagonal == s2.diagonal
        assert np.array_equal(s1.U, s2.U) and np.array_equal(s1.V, s2.V)

    def test_inverse_transforms(self):
        rng = random.Random(11)
        for _ in range(50):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            A = np.array([[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)])
            snf = smith_normal_form(A)
            D = np.zeros((m, n), dtype=object)
            for i, d in enumerate(snf.diagonal):
                D[i, i] = d
            # A recovered from the diagonal via the inverse transforms
            back = snf.Uinv.astype(object) @ D @ snf.Vinv.astype(object)
            assert np.array_equal(back, A.astype(object))


class TestSolveCongruences:
    def test_pinned_pair_system(self):
        # x+y = 1, x-y = 1 mod 3 has the single solution (1, 0)
        sol = solve_congruences([[1, 1], [1, -1]], [1, 1], 3)
        assert sol.count == 1
        assert set(sol.enumerate()) == {(1, 0)}

    def test_pinned_single(self):
        sol = solve_congruences([[2]], [0], 4)
        assert set(sol.enumerate()) == {(0,), (2,)}
        assert solve_congruences([[2]], [1], 4) is None

    def test_modulus_one(self):
        sol = solve_congruences([[3, 1]], [2], 1)
        assert sol.count == 1 and set(sol.enumerate()) == {(0, 0)}

    def test_no_equations(self):
        sol = solve_congruences(np.zeros((0, 2), dtype=int), [], 3)
        assert sol.count == 9
        assert set(sol.enumerate()) == set(itertools.product(range(3), repeat=2))

    def test_brute_force_sweep(self):
        rng = random.Random(23)
        for _ in range(300):
            N = rng.choice([1, 2, 3, 4, 6, 12])
            m, n = rng.randint(0, 3), rng.randint(1, 4)
            A = np.array([[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)],
                         dtype=np.int64).reshape(m, n)
            b = [rng.randint(-6, 6) for _ in range(m)]
            expected = brute_congruence(A, b, N)
            sol = solve_congruences(A, b, N)
            if sol is None:
                assert expected == set()
                continue
            got = list(sol.enumerate())
            assert len(got) == len(set(got)) == sol.count
            assert set(got) == expected

    def test_wide_system(self):
        # six unknowns, the widest system brute comparison stays cheap for
        A = [[1, 2, 3, 4, 5, 6], [0, 1, 0, 1, 0, 1]]
        sol = solve_congruences(A, [3, 2], 4)
        expected = brute_congruence(np.array(A), [3, 2], 4)
        assert set(sol.enumerate()) == expected

    def test_deterministic_enumeration_order(self):
        a = solve_congruences([[2, 4]], [2], 6)
        b = solve_congruences([[2, 4]], [2], 6)
        assert list(a.enumerate()) == list(b.enumerate())


class TestDiagonalizeMod:
    def test_transforms_invert(self):
        rng = random.Random(31)
        for _ in range(100):
            N = rng.choice([2, 3, 4, 6, 8])
            m, n = rng.randint(1, 3), rng.randint(1, 4)
            A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
            d, V, Vinv = diagonalize_mod(A, N)
            eye = np.eye(n, dtype=np.int64)
            assert np.array_equal((V @ Vinv) % N, eye % N)
            assert np.array_equal((Vinv @ V) % N, eye % N)

    def test_kernel_description(self):
        rng = random.Random(37)
        for _ in range(100):
            N = rng.choice([2, 3, 4, 6])
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            A = np.array([[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)],
                         dtype=np.int64)
            d, V, Vinv = diagonalize_mod(A, N)
            described = set()
            for y in itertools.product(range(N), repeat=n):
                if all(d[j] * y[j] % N == 0 for j in range(min(len(d), n))):
                    x = tuple(int(v) % N for v in (V @ np.array(y)))
                    described.add(x)
            assert described == brute_congruence(A, [0] * m, N)


def test_as_int_matrix_rejects_non_integer():
    with pytest.raises(ValueError):
        as_int_matrix([[1.5, 2.0]])
    with pytest.raises(ValueError):
        as_int_matrix([1, 2, 3])


def test_congruence_solution_count_matches_generators():
    sol = CongruenceSolution(6, (1, 2), (((2, 0), 3), ((0, 3), 2)))
    assert sol.count == 6
    assert len(set(sol.enumerate())) == 6
