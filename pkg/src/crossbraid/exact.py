"""Exact integer linear algebra: roots of unity, Smith normal form, congruences.

Matrices are plain numpy integer arrays (rows x cols).  All reductions are
exact; the int64 fast path promotes itself to Python-int (object dtype) arrays
if entries threaten to overflow.  Roots of unity are stored as exponents
modulo a fixed N and never touch floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

import numpy as np

# safe bound for the int64 path: with entries below this, a nearest-quotient
# elimination step (q*entry + entry) cannot overflow 63 bits
_INT64_GUARD = 1 << 31


@dataclass(frozen=True)
class UnityExponent:
    """An N-th root of unity, stored as an exponent modulo N."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    @classmethod
    def one(cls, modulus: int) -> "UnityExponent":
        return cls(0, modulus)

    def _check(self, other: "UnityExponent") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"mixed moduli {self.modulus} and {other.modulus}; lift first"
            )

    def __mul__(self, other: "UnityExponent") -> "UnityExponent":
        self._check(other)
        return UnityExponent(self.value + other.value, self.modulus)

    def inverse(self) -> "UnityExponent":
        return UnityExponent(-self.value, self.modulus)

    def __pow__(self, k: int) -> "UnityExponent":
        return UnityExponent(self.value * k, self.modulus)

    @property
    def is_identity(self) -> bool:
        return self.value == 0

    def lift(self, new_modulus: int) -> "UnityExponent":
        """Rewrite as a root of unity of order dividing new_modulus."""
        if new_modulus % self.modulus:
            raise ValueError(f"{self.modulus} does not divide {new_modulus}")
        return UnityExponent(self.value * (new_modulus // self.modulus), new_modulus)

    def __str__(self) -> str:
        return f"zeta_{self.modulus}^{self.value}"


def as_int_matrix(data) -> np.ndarray:
    """Coerce to a 2-D integer array, rejecting anything non-integral."""
    arr = np.array(data)
    if arr.ndim != 2:
        raise ValueError(f"expected 2-D matrix, got shape {arr.shape}")
    if arr.dtype == object:
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"expected integer entries, got dtype {arr.dtype}")
    return arr.astype(np.int64)


def int_det(mat) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    a = [[int(x) for x in row] for row in np.asarray(mat)]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


class _Overflow(Exception):
    pass


class _Reduction:
    """In-place diagonalization workspace with optional transform tracking.

    Row operations accumulate U (and Uinv / carried right-hand sides), column
    operations accumulate V (and Vinv).  With ``mod`` set, every array is kept
    reduced to symmetric representatives mod N; the transforms then only make
    sense modulo N, which is all the congruence solvers need.
    """

    def __init__(self, a, mod=None, want_u=False, want_uinv=False,
                 want_v=False, want_vinv=False, carry=None, dtype=np.int64):
        self.mod = mod
        a = np.array(a, dtype=dtype)
        self.a = a
        m, n = a.shape
        eye = lambda k: np.eye(k, dtype=dtype) if dtype != object else np.array(
            [[int(i == j) for j in range(k)] for i in range(k)], dtype=object)
        self.u = eye(m) if want_u else None
        self.uinv = eye(m) if want_uinv else None
        self.v = eye(n) if want_v else None
        self.vinv = eye(n) if want_vinv else None
        self.carry = None if carry is None else np.array(carry, dtype=dtype)
        if self.carry is not None and self.carry.ndim == 1:
            self.carry = self.carry[:, None]
        self._reduce_all()

    # -- representative handling ------------------------------------------

    def _sym(self, arr):
        if self.mod is None or arr is None or arr.size == 0:
            return arr
        # representatives in [-(N-1)//2, N//2]: N/2 sits on the positive side
        # so making a pivot positive is stable under re-reduction
        half = (self.mod - 1) // 2
        arr += half
        arr %= self.mod
        arr -= half
        return arr

    def _reduce_all(self):
        for arr in (self.a, self.u, self.uinv, self.v, self.vinv, self.carry):
            self._sym(arr)

    def _guard(self):
        if self.mod is not None or self.a.dtype == object:
            return
        worst = max(
            int(np.max(np.abs(arr))) if arr.size else 0
            for arr in (self.a, self.u, self.uinv, self.v, self.vinv, self.carry)
            if arr is not None
        )
        if worst > _INT64_GUARD:
            raise _Overflow

    # -- elementary operations --------------------------------------------

    def swap_rows(self, i, j):
        if i == j:
            return
        self.a[[i, j]] = self.a[[j, i]]
        if self.u is not None:
            self.u[[i, j]] = self.u[[j, i]]
        if self.uinv is not None:
            self.uinv[:, [i, j]] = self.uinv[:, [j, i]]
        if self.carry is not None:
            self.carry[[i, j]] = self.carry[[j, i]]

    def swap_cols(self, i, j):
        if i == j:
            return
        self.a[:, [i, j]] = self.a[:, [j, i]]
        if self.v is not None:
            self.v[:, [i, j]] = self.v[:, [j, i]]
        if self.vinv is not None:
            self.vinv[[i, j]] = self.vinv[[j, i]]

    def add_rows(self, i, q, p):
        """row i -= q * row p."""
        self.a[i] -= q * self.a[p]
        self._sym(self.a[i])
        if self.u is not None:
            self.u[i] -= q * self.u[p]
            self._sym(self.u[i])
        if self.uinv is not None:
            self.uinv[:, p] += q * self.uinv[:, i]
            self._sym(self.uinv[:, p])
        if self.carry is not None:
            self.carry[i] -= q * self.carry[p]
            self._sym(self.carry[i])

    def add_cols(self, j, q, p):
        """col j -= q * col p."""
        self.a[:, j] -= q * self.a[:, p]
        self._sym(self.a[:, j])
        if self.v is not None:
            self.v[:, j] -= q * self.v[:, p]
            self._sym(self.v[:, j])
        if self.vinv is not None:
            self.vinv[p] += q * self.vinv[j]
            self._sym(self.vinv[p])

    def bulk_row_clear(self, t, q):
        """rows t+1.. -= q ⊗ row t, one vectorized elimination sweep.

        Only called mid-pivot, when rows below t are zero left of column t,
        so the matrix update can stay inside the active block.
        """
        self.a[t + 1:, t:] -= np.outer(q, self.a[t, t:])
        self._sym(self.a[t + 1:, t:])
        if self.u is not None:
            self.u[t + 1:] -= np.outer(q, self.u[t])
            self._sym(self.u[t + 1:])
        if self.uinv is not None:
            self.uinv[:, t] += self.uinv[:, t + 1:].dot(q)
            self._sym(self.uinv[:, t])
        if self.carry is not None:
            self.carry[t + 1:] -= np.outer(q, self.carry[t])
            self._sym(self.carry[t + 1:])

    def bulk_col_clear(self, t, q):
        """cols t+1.. -= col t ⊗ q; column t is zero above row t mid-pivot."""
        self.a[t:, t + 1:] -= np.outer(self.a[t:, t], q)
        self._sym(self.a[t:, t + 1:])
        if self.v is not None:
            self.v[:, t + 1:] -= np.outer(self.v[:, t], q)
            self._sym(self.v[:, t + 1:])
        if self.vinv is not None:
            self.vinv[t] += q.dot(self.vinv[t + 1:])
            self._sym(self.vinv[t])

    def negate_row(self, i):
        self.a[i] = -self.a[i]
        self._sym(self.a[i])
        if self.u is not None:
            self.u[i] = -self.u[i]
            self._sym(self.u[i])
        if self.uinv is not None:
            self.uinv[:, i] = -self.uinv[:, i]
            self._sym(self.uinv[:, i])
        if self.carry is not None:
            self.carry[i] = -self.carry[i]
            self._sym(self.carry[i])

    def negate_col(self, j):
        self.a[:, j] = -self.a[:, j]
        self._sym(self.a[:, j])
        if self.v is not None:
            self.v[:, j] = -self.v[:, j]
            self._sym(self.v[:, j])
        if self.vinv is not None:
            self.vinv[j] = -self.vinv[j]
            self._sym(self.vinv[j])

    # -- diagonalization ---------------------------------------------------

    def _pick_pivot(self, t):
        sub = self.a[t:, t:]
        mags = np.abs(sub)
        nz = mags != 0
        if not nz.any():
            return None
        if sub.dtype == object:
            best, where = None, None
            for i in range(sub.shape[0]):
                for j in range(sub.shape[1]):
                    val = abs(int(sub[i, j]))
                    if val and (best is None or val < best):
                        best, where = val, (i, j)
            i, j = where
        else:
            masked = np.where(nz, mags, np.iinfo(np.int64).max)
            flat = int(np.argmin(masked))
            i, j = divmod(flat, sub.shape[1])
        return t + i, t + j

    @staticmethod
    def _min_nonzero(vec):
        if vec.dtype == object:
            return min(
                (i for i in range(vec.shape[0]) if vec[i] != 0),
                key=lambda i: abs(int(vec[i])),
            )
        mags = np.where(vec != 0, np.abs(vec), np.iinfo(np.int64).max)
        return int(np.argmin(mags))

    def _clear_pivot(self, t):
        """Zero out row t and column t beyond the pivot, growing gcds as needed."""
        while True:
            self._guard()
            piv = int(self.a[t, t])
            if piv < 0:
                self.negate_row(t)
                piv = -piv
            col = self.a[t + 1:, t]
            if col.size and np.any(col != 0):
                # nearest-quotient sweep; residues end up at most piv/2
                q = (col + piv // 2) // piv
                self.bulk_row_clear(t, q)
                col = self.a[t + 1:, t]
                if np.any(col != 0):
                    self.swap_rows(t, t + 1 + self._min_nonzero(col))
                    continue
            row = self.a[t, t + 1:]
            if row.size and np.any(row != 0):
                piv = int(self.a[t, t])
                q = (row + piv // 2) // piv
                self.bulk_col_clear(t, q)
                row = self.a[t, t + 1:]
                if np.any(row != 0):
                    self.swap_cols(t, t + 1 + self._min_nonzero(row))
                    continue
            break

    def diagonalize(self):
        m, n = self.a.shape
        for t in range(min(m, n)):
            loc = self._pick_pivot(t)
            if loc is None:
                break
            self.swap_rows(t, loc[0])
            self.swap_cols(t, loc[1])
            self._clear_pivot(t)
            if int(self.a[t, t]) < 0:
                self.negate_row(t)
            self._guard()
        return self.diagonal()

    def diagonal(self):
        m, n = self.a.shape
        return [int(self.a[t, t]) for t in range(min(m, n))]

    def enforce_chain(self):
        """Make d_i | d_{i+1} along the nonzero diagonal (exact mode)."""
        while True:
            d = self.diagonal()
            bad = None
            for i in range(len(d) - 1):
                if d[i] and d[i + 1] % d[i]:
                    bad = i
                    break
                if d[i] == 0 and d[i + 1] != 0:
                    bad = i
                    break
            if bad is None:
                return
            j = bad + 1
            self.add_cols(bad, -1, j)  # col bad += col j, brings d_j into column bad
            for t in range(bad, min(self.a.shape)):
                loc = self._pick_pivot(t)
                if loc is None:
                    break
                self.swap_rows(t, loc[0])
                self.swap_cols(t, loc[1])
                self._clear_pivot(t)
                if int(self.a[t, t]) < 0:
                    self.negate_row(t)
            self._guard()


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == diag(diagonal), with U, V unimodular.

    Uinv and Vinv are the exact integer inverses of U and V.
    """

    diagonal: tuple[int, ...]
    U: np.ndarray
    V: np.ndarray
    Uinv: np.ndarray
    Vinv: np.ndarray

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    def verify(self, A) -> bool:
        A = as_int_matrix(A)
        m, n = A.shape
        D = np.zeros((m, n), dtype=object)
        for i, d in enumerate(self.diagonal):
            D[i, i] = d
        if not np.array_equal(self.U.astype(object) @ A.astype(object) @ self.V.astype(object), D):
            return False
        if not np.array_equal(self.U.astype(object) @ self.Uinv.astype(object),
                              np.eye(m, dtype=object)):
            return False
        if not np.array_equal(self.V.astype(object) @ self.Vinv.astype(object),
                              np.eye(n, dtype=object)):
            return False
        return abs(int_det(self.U)) == 1 and abs(int_det(self.V)) == 1


def smith_normal_form(A) -> SmithDecomposition:
    """Exact Smith normal form over Z with both transforms and their inverses.

    Diagonal entries are nonnegative and satisfy d_1 | d_2 | ... ; pivoting
    always takes a smallest-magnitude nonzero entry (earliest position on
    ties), so the reduction is deterministic.
    """
    A = as_int_matrix(A)
    for dtype in (np.int64, object):
        try:
            red = _Reduction(A, want_u=True, want_uinv=True,
                             want_v=True, want_vinv=True, dtype=dtype)
            red.diagonalize()
            red.enforce_chain()
            break
        except _Overflow:
            continue
    return SmithDecomposition(tuple(red.diagonal()), red.u, red.v,
                              red.uinv, red.vinv)


@dataclass(frozen=True)
class CongruenceSolution:
    """All solutions of A x = b (mod N): particular + kernel generators.

    The solution set is exactly ``particular + sum_j t_j * gen_j`` with
    t_j ranging over range(order_j); distinct tuples give distinct vectors.
    """

    modulus: int
    particular: tuple[int, ...]
    generators: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def count(self) -> int:
        return prod((order for _, order in self.generators), start=1)

    def enumerate(self):
        n = len(self.particular)
        gens = [np.array(g, dtype=np.int64) for g, _ in self.generators]
        orders = [order for _, order in self.generators]
        base = np.array(self.particular, dtype=np.int64)
        for ts in itertools.product(*(range(o) for o in orders)):
            x = base.copy()
            for t, g in zip(ts, gens):
                x += t * g
            yield tuple(int(w) % self.modulus for w in x)


def solve_congruences(A, b, modulus: int) -> CongruenceSolution | None:
    """Solve A x = b over Z/modulus, or return None when infeasible."""
    A = as_int_matrix(A)
    m, n = A.shape
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (m,):
        raise ValueError(f"rhs shape {b.shape} does not match {m} rows")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if modulus == 1:
        return CongruenceSolution(1, (0,) * n, ())
    red = _Reduction(A % modulus, mod=modulus, want_v=True, carry=b % modulus)
    d = red.diagonalize()
    c = red.carry[:, 0] % modulus
    r = len(d)
    y0 = [0] * n
    for i in range(m):
        di = d[i] % modulus if i < r else 0
        g = gcd(di, modulus)
        ci = int(c[i])
        if ci % g:
            return None
        if i < n and modulus // g > 1 and di:
            y0[i] = (ci // g) * pow(di // g, -1, modulus // g) % (modulus // g)
    V = red.v % modulus
    x0 = (V @ np.array(y0, dtype=np.int64)) % modulus
    gens = []
    for j in range(n):
        dj = d[j] % modulus if j < r else 0
        g = gcd(dj, modulus)
        if g > 1:
            vec = tuple(int(w) for w in (V[:, j] * (modulus // g)) % modulus)
            gens.append((vec, g))
    return CongruenceSolution(modulus, tuple(int(w) for w in x0), tuple(gens))


def diagonalize_mod(A, modulus: int):
    """Diagonal form of A over Z/modulus with column transform and its inverse.

    Returns (diagonal, V, Vinv) such that x solves A x = 0 (mod N) exactly
    when x = V y with d_j y_j = 0 (mod N).  No divisibility chain is enforced;
    only gcd(d_j, N) matters downstream.
    """
    A = as_int_matrix(A)
    red = _Reduction(A % modulus, mod=modulus, want_v=True, want_vinv=True)
    d = red.diagonalize()
    return [x % modulus for x in d], red.v % modulus, red.vinv % modulus
