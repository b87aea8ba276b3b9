"""The S(L,M,B) calculus over a twisted group double.

A subcategory datum is a pair of commuting normal subgroups L, M of G
together with a pairing B: L x M -> roots of unity that is multiplicative
in each slot up to beta corrections and invariant under conjugation.
Everything runs on exponent tables modulo one fixed working modulus, so
verification and enumeration are exact.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceeded,
    InvalidElement,
    NotCentral,
    NotNormal,
    ParentMismatch,
)
from .exact import UnityExponent, solve_congruences
from .groups import Subgroup, commuting_normal_pairs, is_normal
from .twisted_center import TwistedGroupData

DEFAULT_BUDGET = 1_000_000


def working_modulus(data: TwistedGroupData) -> int:
    """Root-of-unity order large enough for every pairing over this twist.

    Iterating the first pairing axiom gives B(l,m)^ord(m) in mu_N, so any
    pairing value has order dividing exponent(G) * N.  The naive choice
    lcm(exponent(G), N) is too small: over C2 with the nontrivial twist
    the only solutions have B(x,x) a primitive 4th root of unity.
    """
    return data.group.exponent * data.modulus


@dataclass(frozen=True)
class OmegaBicharacter:
    """Exponent table of a candidate pairing L x M -> mu_N'.

    Entries are stored row-major over (L.elements, M.elements) and reduced
    modulo the working modulus of the parent twist.  Construction does not
    check the pairing axioms; run verify_bicharacter for that.
    """

    parent: TwistedGroupData
    L: Subgroup
    M: Subgroup
    table: tuple[int, ...]

    def __post_init__(self):
        G = self.parent.group
        if not (self.L.parent.same_table(G) and self.M.parent.same_table(G)):
            raise ParentMismatch("subgroups live over a different group")
        if len(self.table) != self.L.order * self.M.order:
            raise ValueError(
                f"table needs {self.L.order * self.M.order} entries, "
                f"got {len(self.table)}")
        mod = self.modulus
        object.__setattr__(self, "table",
                           tuple(int(x) % mod for x in self.table))
        object.__setattr__(self, "_pos_l",
                           {a: i for i, a in enumerate(self.L.elements)})
        object.__setattr__(self, "_pos_m",
                           {a: i for i, a in enumerate(self.M.elements)})

    @property
    def modulus(self) -> int:
        return working_modulus(self.parent)

    def exponent_at(self, l: int, m: int) -> int:
        try:
            return self.table[self._pos_l[l] * self.M.order + self._pos_m[m]]
        except KeyError:
            raise InvalidElement(f"({l}, {m}) is not in L x M") from None

    def value(self, l: int, m: int) -> UnityExponent:
        return UnityExponent(self.exponent_at(l, m), self.modulus)


@dataclass(frozen=True)
class BicharacterReport:
    """Outcome of an axiom sweep; falsy when some axiom failed."""

    ok: bool
    axiom: int | None = None
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_bicharacter(cand: OmegaBicharacter) -> BicharacterReport:
    """Exhaustive check of slot multiplicativity and conjugation invariance.

    Returns a report instead of raising; on failure it carries the first
    failing axiom (1: right slot, 2: left slot, 3: invariance) and the
    element tuple where it broke.  Element ids are swept in ascending
    order, so the witness is deterministic.  L and M are assumed commuting
    normal; conjugation stays inside them only under that assumption.
    """
    data = cand.parent
    G = data.group
    mod = cand.modulus
    lift = mod // data.modulus
    b = cand.exponent_at
    beta = data.beta_exp
    for l in cand.L.elements:
        for m1 in cand.M.elements:
            for m2 in cand.M.elements:
                rhs = (b(l, m1) + b(l, m2) - lift * beta(l, m1, m2)) % mod
                if b(l, G.mul(m1, m2)) != rhs:
                    return BicharacterReport(False, 1, (l, m1, m2))
    for k in cand.L.elements:
        for l in cand.L.elements:
            for m in cand.M.elements:
                rhs = (b(k, m) + b(l, m) + lift * beta(m, k, l)) % mod
                if b(G.mul(k, l), m) != rhs:
                    return BicharacterReport(False, 2, (k, l, m))
    for g in G.elements:
        gi = G.inv(g)
        for l in cand.L.elements:
            for m in cand.M.elements:
                off = (beta(l, g, m) + beta(l, G.mul(g, m), gi)
                       - beta(l, g, gi))
                rhs = (b(l, G.conj(g, m)) + lift * off) % mod
                if b(G.conj(gi, l), m) != rhs:
                    return BicharacterReport(False, 3, (g, l, m))
    # mark the instance so later constructions skip the re-sweep
    object.__setattr__(cand, "_verified", True)
    return BicharacterReport(True)


def _same_twist(d1: TwistedGroupData, d2: TwistedGroupData) -> bool:
    return (d1.group.same_table(d2.group) and d1.modulus == d2.modulus
            and d1.omega.table == d2.omega.table)


@dataclass(frozen=True)
class SubcatData:
    """Verified subcategory datum S(L, M, B) over a twisted double."""

    parent: TwistedGroupData
    L: Subgroup
    M: Subgroup
    B: OmegaBicharacter

    def __post_init__(self):
        if self.B.parent is not self.parent and \
                not _same_twist(self.B.parent, self.parent):
            raise ParentMismatch("pairing belongs to a different twist")
        if self.B.L != self.L or self.B.M != self.M:
            raise ParentMismatch("pairing is indexed by different subgroups")
        G = self.parent.group
        if not (is_normal(G, self.L) and is_normal(G, self.M)):
            raise NotNormal("L and M must both be normal")
        t = G.table
        for a in self.L.elements:
            for b in self.M.elements:
                if t[a][b] != t[b][a]:
                    raise NotCentral(
                        f"L and M must commute elementwise; ({a}, {b}) do not")
        if not getattr(self.B, "_verified", False):
            report = verify_bicharacter(self.B)
            if not report:
                raise ValueError(
                    f"pairing fails axiom {report.axiom} at {report.witness}")


def fpdim(s: SubcatData) -> int:
    """Frobenius-Perron dimension |L| * [G : M]."""
    return s.L.order * (s.parent.group.order // s.M.order)


def centralizer_subcat(s: SubcatData) -> SubcatData:
    """The centralizer S(M, L, B') with B'(m, l) = B(l, m)^-1."""
    mod = s.B.modulus
    table = tuple((-s.B.exponent_at(l, m)) % mod
                  for m in s.M.elements for l in s.L.elements)
    flipped = OmegaBicharacter(s.parent, s.M, s.L, table)
    return SubcatData(s.parent, s.M, s.L, flipped)


def contains(s1: SubcatData, s2: SubcatData) -> bool:
    """Whether s2 is a subcategory of s1.

    Holds exactly when L2 <= L1, M1 <= M2, and the pairings agree on
    L2 x M1.
    """
    if not _same_twist(s1.parent, s2.parent):
        raise ParentMismatch("subcategory data over different twists")
    if not set(s2.L.elements) <= set(s1.L.elements):
        return False
    if not set(s1.M.elements) <= set(s2.M.elements):
        return False
    return all(s2.B.exponent_at(l, m) == s1.B.exponent_at(l, m)
               for l in s2.L.elements for m in s1.M.elements)


def _pair_solutions(data: TwistedGroupData, L: Subgroup, M: Subgroup):
    """Solve the two multiplicativity axioms over the pair as congruences.

    Unknowns are the table entries; beta terms are constant offsets, so
    each axiom instance is one linear row.  Coefficients accumulate since
    slots can collide (for example m2 = identity).
    """
    G = data.group
    mod = working_modulus(data)
    lift = G.exponent
    nm = M.order
    pos_l = {a: i for i, a in enumerate(L.elements)}
    pos_m = {a: i for i, a in enumerate(M.elements)}
    nunk = L.order * nm
    rows = np.zeros((L.order * nm * nm + L.order * L.order * nm, nunk),
                    dtype=np.int64)
    rhs = np.zeros(rows.shape[0], dtype=np.int64)
    r = 0
    for l in L.elements:
        i = pos_l[l] * nm
        for m1 in M.elements:
            for m2 in M.elements:
                rows[r, i + pos_m[G.mul(m1, m2)]] += 1
                rows[r, i + pos_m[m1]] -= 1
                rows[r, i + pos_m[m2]] -= 1
                rhs[r] = -lift * data.beta_exp(l, m1, m2)
                r += 1
    for k in L.elements:
        for l in L.elements:
            for m in M.elements:
                j = pos_m[m]
                rows[r, pos_l[G.mul(k, l)] * nm + j] += 1
                rows[r, pos_l[k] * nm + j] -= 1
                rows[r, pos_l[l] * nm + j] -= 1
                rhs[r] = lift * data.beta_exp(m, k, l)
                r += 1
    return solve_congruences(rows, rhs % mod, mod)


def enumerate_subcats(data: TwistedGroupData,
                      budget: int = DEFAULT_BUDGET) -> list[SubcatData]:
    """All subcategory data over the twist, in canonical order.

    Per commuting normal pair the solutions of the multiplicativity axioms
    form a coset of a lattice, enumerated exactly; conjugation invariance
    is then a finite filter.  The result is sorted by (|L|, |M|, L ids,
    M ids, table), is duplicate free, and always includes S(1, G, 1) and
    S(1, 1, 1).
    """
    examined = 0
    out = []
    for L, M in commuting_normal_pairs(data.group):
        sol = _pair_solutions(data, L, M)
        if sol is None:
            continue
        examined += sol.count
        if examined > budget:
            raise BudgetExceeded(
                f"{examined} candidate pairings exceed budget {budget}")
        for tab in sol.enumerate():
            cand = OmegaBicharacter(data, L, M, tab)
            if verify_bicharacter(cand):
                out.append(SubcatData(data, L, M, cand))
    out.sort(key=lambda s: (s.L.order, s.M.order, s.L.elements,
                            s.M.elements, s.B.table))
    return out
