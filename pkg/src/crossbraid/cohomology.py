"""Group cohomology H^n(G, A) for finite abelian coefficients, n <= 3.

Cochains are dense tables over G^n with values recorded as element ids of the
coefficient group.  Internally every computation is pushed through an exact
integer lattice: a coefficient group with invariant factors (m_1 >= m_2 >= ...)
embeds into (Z/e)^k by scaling the i-th coordinate by e/m_i, where e is the
exponent.  Kernels, images and quotients then reduce to Smith normal form and
congruence solving from the exact module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, log2, prod

import numpy as np

from .errors import (
    BudgetExceeded,
    DegreeTooHigh,
    NonTrivialAction,
    NotACocycle,
    NotAbelian,
    NotAHomomorphism,
    ParentMismatch,
)
from .exact import diagonalize_mod, smith_normal_form, solve_congruences
from .groups import FiniteGroup, GroupHom, abelian_basis, count_homs_to_abelian, cyclic

MAX_DEGREE = 3
DEFAULT_BUDGET = 10_000_000


class CoefficientModule:
    """Finite abelian coefficient group with an optional left G-action.

    The action is given per acting-group element as a permutation of the
    coefficient ids; it must consist of automorphisms and be a homomorphism
    into Aut(A).  With no action the module works with any group.
    """

    __slots__ = ("group", "acting_group", "action", "basis", "orders",
                 "exponent", "rank", "coords", "_elem_of", "_scaled")

    def __init__(self, group: FiniteGroup, acting_group: FiniteGroup | None = None,
                 action=None):
        if not group.is_abelian:
            raise NotAbelian("coefficients must form an abelian group")
        if (acting_group is None) != (action is None):
            raise ValueError("acting_group and action must be given together")
        self.group = group
        self.acting_group = acting_group
        if action is None:
            self.action = None
        else:
            act = np.array(action, dtype=np.int64)
            if act.shape != (acting_group.order, group.order):
                raise NotAHomomorphism("action table has wrong shape")
            self._check_action(act)
            self.action = act
        pairs = abelian_basis(group)
        self.basis = tuple(g for g, _ in pairs)
        self.orders = tuple(o for _, o in pairs)
        self.exponent = self.orders[0] if pairs else 1
        self.rank = len(pairs)
        self.coords, self._elem_of = self._coordinate_maps()
        self._scaled = self._scaled_actions()

    def _check_action(self, act: np.ndarray) -> None:
        A, G = self.group, self.acting_group
        idline = np.arange(A.order)
        T = A.np_table
        for g in G.elements:
            p = act[g]
            if not np.array_equal(np.sort(p), idline):
                raise NotAHomomorphism(f"action of {g} is not a bijection")
            if not np.array_equal(p[T], T[p[:, None], p[None, :]]):
                raise NotAHomomorphism(f"action of {g} is not an automorphism")
        if not np.array_equal(act[0], idline):
            raise NotAHomomorphism("identity must act trivially")
        for g in G.elements:
            for h in G.elements:
                if not np.array_equal(act[G.mul(g, h)], act[g][act[h]]):
                    raise NotAHomomorphism(
                        f"action is not multiplicative at ({g},{h})")

    def _coordinate_maps(self):
        A = self.group
        coords = np.zeros((A.order, self.rank), dtype=np.int64)
        elem_of = {}
        for cs in itertools.product(*(range(m) for m in self.orders)):
            x = 0
            for c, b in zip(cs, self.basis):
                x = A.mul(x, A.power(b, c))
            coords[x] = cs
            elem_of[cs] = x
        return coords, elem_of

    def _scaled_actions(self):
        if self.action is None or self.rank == 0:
            return None
        e, k = self.exponent, self.rank
        mats = []
        for g in self.acting_group.elements:
            M = np.zeros((k, k), dtype=np.int64)
            for i, b in enumerate(self.basis):
                co = self.coords[self.action[g, b]]
                for j in range(k):
                    num = int(co[j]) * self.orders[i]
                    if num % self.orders[j]:
                        raise NotAHomomorphism("action does not preserve orders")
                    M[j, i] = num // self.orders[j] % e
            mats.append(M)
        return mats

    @property
    def is_trivial_action(self) -> bool:
        if self.action is None:
            return True
        idline = np.arange(self.group.order)
        return all(np.array_equal(row, idline) for row in self.action)

    def act(self, g: int, a: int) -> int:
        if self.action is None:
            return a
        return int(self.action[g, a])

    def scaled_action(self, g: int) -> np.ndarray:
        """Matrix of the g-action on scaled coordinates mod the exponent."""
        if self._scaled is None:
            return np.eye(self.rank, dtype=np.int64)
        return self._scaled[g]

    def element_of(self, coords) -> int:
        return self._elem_of[tuple(int(c) % m for c, m in zip(coords, self.orders))]

    def compatible_with(self, other: "CoefficientModule") -> bool:
        if not self.group.same_table(other.group):
            return False
        if (self.action is None) != (other.action is None):
            return self.is_trivial_action and other.is_trivial_action
        if self.action is None:
            return True
        return (self.acting_group.same_table(other.acting_group)
                and np.array_equal(self.action, other.action))

    def __repr__(self) -> str:
        tag = "trivial" if self.action is None else "with action"
        return f"CoefficientModule({self.group!r}, {tag})"


def trivial_module(A: FiniteGroup) -> CoefficientModule:
    return CoefficientModule(A)


def mu_module(n: int) -> CoefficientModule:
    """Roots of unity mu_n as coefficients; ids are exponents mod n."""
    return CoefficientModule(cyclic(n))


@dataclass(frozen=True)
class Cochain:
    """Dense n-cochain; table index runs over G^n with the first argument
    most significant (itertools.product order)."""

    degree: int
    group: FiniteGroup
    module: CoefficientModule
    table: tuple[int, ...]
    normalized: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(x) for x in self.table))
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.table) != self.group.order ** self.degree:
            raise ValueError(
                f"table has {len(self.table)} entries, expected "
                f"{self.group.order ** self.degree}")
        n = self.module.group.order
        if any(not 0 <= x < n for x in self.table):
            raise ValueError("table entry is not a coefficient id")
        if self.normalized and not self._check_normalized():
            raise ValueError("flagged normalized but a degenerate entry is nonzero")

    def _check_normalized(self) -> bool:
        s = self.group.order
        for i, gs in enumerate(itertools.product(range(s), repeat=self.degree)):
            if 0 in gs and self.table[i] != 0:
                return False
        return True

    @classmethod
    def zero(cls, group: FiniteGroup, module: CoefficientModule,
             degree: int) -> "Cochain":
        return cls(degree, group, module, (0,) * group.order ** degree,
                   normalized=True)

    @classmethod
    def from_function(cls, group: FiniteGroup, module: CoefficientModule,
                      degree: int, fn, normalized: bool = False) -> "Cochain":
        table = tuple(fn(*gs) for gs in
                      itertools.product(range(group.order), repeat=degree))
        return cls(degree, group, module, table, normalized=normalized)

    def index(self, gs) -> int:
        s = self.group.order
        i = 0
        for g in gs:
            i = i * s + g
        return i

    def value(self, *gs) -> int:
        if len(gs) != self.degree:
            raise ValueError(f"expected {self.degree} arguments")
        return self.table[self.index(gs)]

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.table)

    @property
    def is_normalized(self) -> bool:
        return self._check_normalized()

    def _match(self, other: "Cochain") -> None:
        if (self.degree != other.degree
                or not self.group.same_table(other.group)
                or not self.module.compatible_with(other.module)):
            raise ParentMismatch("cochains live over different parents")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._match(other)
        A = self.module.group
        table = tuple(A.table[a][b] for a, b in zip(self.table, other.table))
        return Cochain(self.degree, self.group, self.module, table,
                       normalized=self.normalized and other.normalized)

    def __neg__(self) -> "Cochain":
        A = self.module.group
        return Cochain(self.degree, self.group, self.module,
                       tuple(A.inverse[a] for a in self.table),
                       normalized=self.normalized)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, k: int) -> "Cochain":
        A = self.module.group
        return Cochain(self.degree, self.group, self.module,
                       tuple(A.power(a, k) for a in self.table),
                       normalized=self.normalized)


def random_cochain(group: FiniteGroup, module: CoefficientModule, degree: int,
                   rng, normalized: bool = True) -> Cochain:
    """Uniform random cochain from a random.Random source."""
    s, n = group.order, module.group.order
    table = []
    for gs in itertools.product(range(s), repeat=degree):
        if normalized and 0 in gs:
            table.append(0)
        else:
            table.append(rng.randrange(n))
    return Cochain(degree, group, module, tuple(table), normalized=normalized)


def differential(c: Cochain) -> Cochain:
    """Bar-resolution differential; the module action applies to the first slot."""
    if c.degree > MAX_DEGREE:
        raise DegreeTooHigh(f"differential limited to degree {MAX_DEGREE}")
    G, M = c.group, c.module
    A = M.group
    s, n = G.order, c.degree
    Atable = A.np_table
    Ainv = np.array(A.inverse, dtype=np.int64)
    act = M.action
    if n == 0:
        a = c.table[0]
        if act is None:
            out = np.zeros(s, dtype=np.int64)
        else:
            out = Atable[act[:, a], Ainv[a]]
        return Cochain(1, G, M, tuple(int(x) for x in out),
                       normalized=c.normalized)
    tbl = np.array(c.table, dtype=np.int64).reshape((s,) * n)
    idx = np.indices((s,) * (n + 1))
    first = tbl[tuple(idx[1:])]
    if act is not None:
        first = act[idx[0], first]
    acc = first
    sign = -1
    for i in range(1, n + 1):
        merged = G.np_table[idx[i - 1], idx[i]]
        slots = [idx[j] for j in range(i - 1)] + [merged] + \
                [idx[j] for j in range(i + 1, n + 1)]
        term = tbl[tuple(slots)]
        acc = Atable[acc, Ainv[term] if sign < 0 else term]
        sign = -sign
    last = tbl[tuple(idx[:n])]
    acc = Atable[acc, Ainv[last] if sign < 0 else last]
    return Cochain(n + 1, G, M, tuple(int(x) for x in acc.ravel()),
                   normalized=c.normalized)


def is_cocycle(c: Cochain) -> bool:
    return differential(c).is_zero


def _bar_matrix(G: FiniteGroup, module: CoefficientModule, n: int,
                normalized: bool):
    """Matrix of the degree-n differential on scaled coordinates.

    Rows index (n+1)-tuples, columns index n-tuples, both in lex order over
    range(1, s) when restricted to the normalized subcomplex and range(s)
    otherwise.  Returns (matrix mod e, input tuples, output tuples).
    """
    s, k, e = G.order, module.rank, module.exponent
    rng = range(1, s) if normalized else range(s)
    ins = list(itertools.product(rng, repeat=n))
    outs = list(itertools.product(rng, repeat=n + 1))
    pos = {t: i for i, t in enumerate(ins)}
    D = np.zeros((len(outs) * k, len(ins) * k), dtype=np.int64)
    eye = np.eye(k, dtype=np.int64)
    for o, h in enumerate(outs):
        row = o * k

        def put(t, blk):
            col = pos[t] * k
            D[row:row + k, col:col + k] += blk

        put(h[1:], module.scaled_action(h[0]))
        sign = -1
        for i in range(1, n + 1):
            m = G.mul(h[i - 1], h[i])
            if not (normalized and m == 0):
                put(h[:i - 1] + (m,) + h[i + 1:], sign * eye)
            sign = -sign
        put(h[:n], sign * eye)
    return D % e, ins, outs


def _scaled_vector(c: Cochain, tuples) -> np.ndarray:
    """Scaled coordinates of a cochain restricted to the given tuples."""
    M = c.module
    e, k = M.exponent, M.rank
    out = np.zeros(len(tuples) * k, dtype=np.int64)
    for i, t in enumerate(tuples):
        co = M.coords[c.value(*t)]
        for j in range(k):
            out[i * k + j] = int(co[j]) * (e // M.orders[j]) % e
    return out


def _constraint_rows(num_vars: int, module: CoefficientModule) -> np.ndarray:
    """Rows forcing each scaled coordinate into its (e/m_j) Z sublattice."""
    e, k = module.exponent, module.rank
    rows = []
    for v in range(num_vars):
        m = module.orders[v % k]
        if m < e:
            row = np.zeros(num_vars, dtype=np.int64)
            row[v] = m
            rows.append(row)
    if not rows:
        return np.zeros((0, num_vars), dtype=np.int64)
    return np.stack(rows)


def _unscale(module: CoefficientModule, vec: np.ndarray, tuples, G: FiniteGroup,
             degree: int, normalized: bool = True) -> Cochain:
    """Rebuild a dense cochain from scaled coordinates on the given tuples."""
    e, k = module.exponent, module.rank
    s = G.order
    table = [0] * (s ** degree)
    for i, t in enumerate(tuples):
        coords = []
        for j in range(k):
            scale = e // module.orders[j]
            x = int(vec[i * k + j]) % e
            if x % scale:
                raise NotACocycle("scaled vector leaves the coefficient lattice")
            coords.append(x // scale)
        flat = 0
        for g in t:
            flat = flat * s + g
        table[flat] = module.element_of(coords)
    return Cochain(degree, G, module, tuple(table), normalized=normalized)


def _check_parents(G: FiniteGroup, module: CoefficientModule) -> None:
    if module.action is not None and not module.acting_group.same_table(G):
        raise ParentMismatch("module action belongs to a different group")


def is_coboundary(c: Cochain) -> Cochain | None:
    """Witness w with d(w) = c, or None; solves linear congruences exactly."""
    if c.degree < 1:
        raise ValueError("coboundary testing needs degree >= 1")
    G, M = c.group, c.module
    n = c.degree
    if M.rank == 0:
        return Cochain.zero(G, M, n - 1)
    e = M.exponent
    D, ins, outs = _bar_matrix(G, M, n - 1, normalized=False)
    b = _scaled_vector(c, outs)
    cons = _constraint_rows(D.shape[1], M)
    system = np.vstack([D, cons])
    rhs = np.concatenate([b, np.zeros(len(cons), dtype=np.int64)])
    sol = solve_congruences(system, rhs, e)
    if sol is None:
        return None
    witness = _unscale(M, np.array(sol.particular, dtype=np.int64), ins, G,
                       n - 1, normalized=False)
    if differential(witness) != c:
        raise NotACocycle("congruence witness failed exact verification")
    return witness


def _kernel_generators(D: np.ndarray, e: int):
    """Generators (columns, orders) of {x : D x = 0 mod e} via diagonalization."""
    cols = D.shape[1]
    diag, V, _Vinv = diagonalize_mod(D, e)
    gens, orders = [], []
    for j in range(cols):
        d = diag[j] if j < len(diag) else 0
        g = gcd(d, e)
        if g > 1:
            gens.append((V[:, j].astype(np.int64) * (e // g)) % e)
            orders.append(g)
    return gens, orders, V, _Vinv, diag


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    """H^n(G, A): invariant factors in ascending divisibility order plus one
    representative normalized cocycle per factor."""

    group: FiniteGroup
    degree: int
    module: CoefficientModule
    invariant_factors: tuple[int, ...]
    representatives: tuple[Cochain, ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors, start=1)

    @property
    def class_count(self) -> int:
        return self.order

    def class_representative(self, index: int) -> Cochain:
        """index-th class, mixed-radix over the factors (first most significant)."""
        if not 0 <= index < self.order:
            raise ValueError(f"class index {index} out of range 0..{self.order - 1}")
        digits = []
        for f in reversed(self.invariant_factors):
            digits.append(index % f)
            index //= f
        digits.reverse()
        acc = Cochain.zero(self.group, self.module, self.degree)
        for t, rep in zip(digits, self.representatives):
            if t:
                acc = acc + rep.scale(t)
        return acc

    def classes(self):
        for i in range(self.order):
            yield self.class_representative(i)


def _trivial_cohomology(G, degree, module) -> CohomologyGroup:
    return CohomologyGroup(G, degree, module, (), ())


def cohomology_group(G: FiniteGroup, degree: int, module: CoefficientModule,
                     budget: int = DEFAULT_BUDGET) -> CohomologyGroup:
    """H^degree(G, module) on the normalized subcomplex, degree <= 3.

    Kernel and image lattices are handled mod the coefficient exponent; the
    quotient is an exact Smith normal form, so the invariant factors satisfy
    f_1 | f_2 | ... and the representatives realize independent generators.
    """
    if not 0 <= degree <= MAX_DEGREE:
        raise DegreeTooHigh(f"cohomology limited to degrees 0..{MAX_DEGREE}")
    _check_parents(G, module)
    s = G.order
    nA = module.group.order
    if s ** degree * max(log2(nA), 1.0) > budget:
        raise BudgetExceeded(
            f"|G|^n log2|A| = {s ** degree * max(log2(nA), 1.0):.3g} "
            f"exceeds budget {budget}")
    k, e = module.rank, module.exponent
    num_vars = (s - 1) ** degree * k
    if k == 0 or num_vars == 0:
        return _trivial_cohomology(G, degree, module)

    D_n, ins, _outs = _bar_matrix(G, module, degree, normalized=True)
    cons = _constraint_rows(num_vars, module)
    stacked = np.vstack([D_n, cons])
    gens, gen_orders, _V, Vinv, diag = _kernel_generators(stacked, e)
    if not gens:
        return _trivial_cohomology(G, degree, module)
    r = len(gens)

    # image generators of d_{n-1}, expressed in kernel-generator coordinates
    if degree == 0:
        tau = np.zeros((r, 0), dtype=np.int64)
    else:
        D_prev, _pins, pouts = _bar_matrix(G, module, degree - 1, normalized=True)
        assert pouts == ins
        im_cols = []
        for v in range(D_prev.shape[1]):
            m = module.orders[v % k]
            col = (D_prev[:, v] * (e // m)) % e
            if col.any():
                im_cols.append(col)
        tau = np.zeros((r, len(im_cols)), dtype=np.int64)
        kept = [j for j in range(num_vars)
                if gcd(diag[j] if j < len(diag) else 0, e) > 1]
        for p, w in enumerate(im_cols):
            y = Vinv.astype(np.int64).dot(w) % e
            for j in range(num_vars):
                d = diag[j] if j < len(diag) else 0
                g = gcd(d, e)
                if y[j] % (e // g):
                    raise NotACocycle("image vector escapes the cocycle kernel")
            for jj, j in enumerate(kept):
                g = gen_orders[jj]
                tau[jj, p] = (y[j] // (e // g)) % g
        if tau.shape[1]:
            tau = np.unique(tau, axis=1)

    relations = np.hstack([tau, np.diag(np.array(gen_orders, dtype=np.int64))])
    snf = smith_normal_form(relations)
    factors, reps = [], []
    kgen = np.stack(gens, axis=1)  # num_vars x r
    for i, d in enumerate(snf.diagonal):
        if d <= 1:
            continue
        u = np.array([int(snf.Uinv[j, i]) % gen_orders[j] for j in range(r)],
                     dtype=np.int64)
        vec = kgen.dot(u) % e
        rep = _unscale(module, vec, ins, G, degree)
        if not is_cocycle(rep):
            raise NotACocycle("representative failed the cocycle check")
        factors.append(int(d))
        reps.append(rep)
    return CohomologyGroup(G, degree, module, tuple(factors), tuple(reps))


def pushforward(c: Cochain, f: GroupHom,
                target: CoefficientModule | None = None) -> Cochain:
    """Apply a coefficient homomorphism entrywise."""
    M = c.module
    if not f.source.same_table(M.group):
        raise NotAHomomorphism("map domain does not match the coefficients")
    if target is None:
        target = trivial_module(f.target)
    elif not target.group.same_table(f.target):
        raise NotAHomomorphism("map codomain does not match the target module")
    # actions must intertwine: f(g.a) = g.f(a)
    if not (M.is_trivial_action and target.is_trivial_action):
        if target.action is not None and not target.acting_group.same_table(c.group):
            raise ParentMismatch("target action belongs to a different group")
        for g in c.group.elements:
            for a in M.group.elements:
                if f(M.act(g, a)) != target.act(g, f(a)):
                    raise NotAHomomorphism(
                        f"map is not action-equivariant at ({g},{a})")
    table = tuple(f(x) for x in c.table)
    return Cochain(c.degree, c.group, target, table, normalized=c.normalized)


def count_splittings(module: CoefficientModule, G: FiniteGroup,
                     omega: Cochain) -> int:
    """Number of splittings of the central extension classified by omega.

    Zero when the class is nontrivial; otherwise sections form a torsor over
    Hom(G, A), which is counted by brute force over generators.
    """
    if not module.is_trivial_action:
        raise NonTrivialAction("splitting count implemented for trivial actions")
    if omega.degree != 2 or not omega.group.same_table(G) \
            or not omega.module.compatible_with(module):
        raise ParentMismatch("omega must be a 2-cochain over (G, module)")
    if not is_cocycle(omega):
        raise NotACocycle("omega is not a 2-cocycle")
    if module.group.order == 1:
        return 1
    if is_coboundary(omega) is None:
        return 0
    return count_homs_to_abelian(G, module.group)
