"""Finite groups as validated multiplication tables.

Element ids are 0..order-1 and the identity is always id 0.  Builders for the
usual small families are provided; arbitrary groups come from explicit tables
or permutation generators.  All derived objects (subgroups, quotients, duals)
use deterministic orderings so repeated runs are byte-identical.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import lcm, prod

import numpy as np

from .errors import (
    GroupTooLarge,
    InvalidElement,
    NotAbelian,
    NotAGroup,
    NotAHomomorphism,
    NotNormal,
    NotSurjective,
    UnknownBuiltin,
)
from .exact import UnityExponent

DEFAULT_ORDER_BOUND = 64
ISO_SEARCH_BOUND = 16


class FiniteGroup:
    """Immutable finite group given by its full multiplication table."""

    __slots__ = ("order", "table", "name", "labels", "inverse", "np_table",
                 "is_abelian", "element_orders", "exponent")

    def __init__(self, table, name: str | None = None,
                 labels: tuple[str, ...] | None = None, validate: bool = True):
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise NotAGroup("table must be square and nonempty")
        T = np.array(table, dtype=np.int64)
        if validate:
            self._validate(T, n)
        self.order = n
        self.table = table
        self.name = name
        self.labels = tuple(labels) if labels else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise NotAGroup("label tuple has wrong length")
        self.np_table = T
        self.inverse = tuple(int(x) for x in (T == 0).argmax(axis=1))
        self.is_abelian = bool(np.array_equal(T, T.T))
        orders = [1] * n
        for a in range(n):
            x, k = a, 1
            while x != 0:
                x = table[x][a]
                k += 1
            orders[a] = k
        self.element_orders = tuple(orders)
        self.exponent = lcm(*orders)

    @staticmethod
    def _validate(T: np.ndarray, n: int):
        if T.min() < 0 or T.max() >= n:
            raise NotAGroup("table entry out of range")
        idline = np.arange(n)
        if not (np.array_equal(T[0], idline) and np.array_equal(T[:, 0], idline)):
            raise NotAGroup("id 0 is not a two-sided identity")
        if not (np.array_equal(np.sort(T, axis=1), np.tile(idline, (n, 1)))
                and np.array_equal(np.sort(T, axis=0), np.tile(idline[:, None], (1, n)))):
            raise NotAGroup("table is not a Latin square")
        left = T[T]        # left[a,b,c] = T[T[a,b], c]
        right = T[:, T]    # right[a,b,c] = T[a, T[b,c]]
        if not np.array_equal(left, right):
            a, b, c = (int(v) for v in np.argwhere(left != right)[0])
            raise NotAGroup(f"associativity fails on ({a},{b},{c})")
        if not np.all((T == 0).any(axis=1)):
            raise NotAGroup("some element has no inverse")

    # -- basic operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, a: int) -> int:
        """g a g^-1."""
        return self.table[self.table[g][a]][self.inverse[g]]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        t = self.table
        return t[t[t[a][b]][self.inverse[a]]][self.inverse[b]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        x = 0
        for _ in range(k):
            x = self.table[x][a]
        return x

    def check_element(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise InvalidElement(f"element id {a} out of range for order {self.order}")

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"

    def same_table(self, other: "FiniteGroup") -> bool:
        return self.table == other.table


@dataclass(frozen=True)
class Subgroup:
    """A subgroup recorded as a sorted tuple of parent element ids."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted({int(x) for x in self.elements}))
        object.__setattr__(self, "elements", elems)
        G = self.parent
        if not elems or elems[0] != 0:
            raise NotAGroup("subgroup must contain the identity")
        inside = set(elems)
        for a in elems:
            G.check_element(a)
            if G.inverse[a] not in inside:
                raise NotAGroup(f"subgroup not closed under inverse at {a}")
            for b in elems:
                if G.table[a][b] not in inside:
                    raise NotAGroup(f"subgroup not closed under product at ({a},{b})")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.elements)

    def contains(self, a: int) -> bool:
        return a in self.elements

    def sort_key(self):
        return (len(self.elements), self.elements)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism recorded as the image tuple over source ids."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        f = np.array(self.images, dtype=np.int64)
        if f.shape != (self.source.order,):
            raise NotAHomomorphism("image tuple has wrong length")
        if f.min() < 0 or f.max() >= self.target.order:
            raise NotAHomomorphism("image id out of range")
        if f[0] != 0:
            raise NotAHomomorphism("identity must map to identity")
        Ts, Tt = self.source.np_table, self.target.np_table
        if not np.array_equal(f[Ts], Tt[f[:, None], f[None, :]]):
            a, b = (int(v) for v in
                    np.argwhere(f[Ts] != Tt[f[:, None], f[None, :]])[0])
            raise NotAHomomorphism(f"multiplicativity fails at ({a},{b})")

    def __call__(self, a: int) -> int:
        return self.images[a]

    def kernel(self) -> Subgroup:
        return Subgroup(self.source,
                        tuple(a for a, x in enumerate(self.images) if x == 0))

    def image_elements(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    def min_section(self) -> tuple[int, ...]:
        """For each target id, the smallest preimage id (requires surjective)."""
        if not self.is_surjective:
            raise NotSurjective("section requires a surjective homomorphism")
        sec: list[int | None] = [None] * self.target.order
        for a, x in enumerate(self.images):
            if sec[x] is None:
                sec[x] = a
        return tuple(sec)  # type: ignore[arg-type]


# -- builders ---------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise UnknownBuiltin("cyclic order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"C{n}", validate=False)


def product_group(*factors: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Direct product with ids packed row-major (last factor fastest)."""
    if not factors:
        return cyclic(1)
    sizes = [g.order for g in factors]
    n = prod(sizes)
    if name is None:
        name = "x".join(g.name or f"?{g.order}" for g in factors)

    def pack(tup):
        x = 0
        for v, s in zip(tup, sizes):
            x = x * s + v
        return x

    def unpack(x):
        out = []
        for s in reversed(sizes):
            out.append(x % s)
            x //= s
        return tuple(reversed(out))

    table = [[0] * n for _ in range(n)]
    for i in range(n):
        ti = unpack(i)
        for j in range(n):
            tj = unpack(j)
            table[i][j] = pack(tuple(g.table[a][b]
                                     for g, a, b in zip(factors, ti, tj)))
    labels = tuple(
        "(" + ",".join(g.labels[v] for g, v in zip(factors, unpack(i))) + ")"
        for i in range(n)
    )
    return FiniteGroup(table, name=name, labels=labels, validate=False)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given even order.

    Ids 0..n-1 are the rotations r^i, ids n..2n-1 the reflections s r^i.
    """
    if order < 2 or order % 2:
        raise UnknownBuiltin(f"dihedral order must be even >= 2, got {order}")
    n = order // 2
    table = [[0] * order for _ in range(order)]
    for k1 in (0, 1):
        for i1 in range(n):
            a = k1 * n + i1
            for k2 in (0, 1):
                for i2 in range(n):
                    b = k2 * n + i2
                    if k2 == 0:
                        table[a][b] = k1 * n + (i1 + i2) % n
                    else:
                        table[a][b] = (1 - k1) * n + (i2 - i1) % n
    labels = tuple(f"r{i}" if k == 0 else f"sr{i}" for k in (0, 1) for i in range(n))
    return FiniteGroup(table, name=f"D{order}", labels=labels, validate=False)


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) or "e"


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters; elements in lexicographic one-line order."""
    if not 1 <= n <= 6:
        raise UnknownBuiltin(f"symmetric degree must be 1..6, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = tuple(_cycle_label(p) for p in perms)
    return FiniteGroup(table, name=f"S{n}", labels=labels, validate=False)


def quaternion() -> FiniteGroup:
    """Quaternion group; element order 1, -1, i, -i, j, -j, k, -k."""
    base = {
        (2, 2): (-1, 1), (2, 3): (1, 4), (2, 4): (-1, 3),
        (3, 2): (-1, 4), (3, 3): (-1, 1), (3, 4): (1, 2),
        (4, 2): (1, 3), (4, 3): (-1, 2), (4, 4): (-1, 1),
    }

    def mul_pair(x, y):
        s1, b1 = x
        s2, b2 = y
        if b1 == 1:
            s, b = 1, b2
        elif b2 == 1:
            s, b = 1, b1
        else:
            s, b = base[(b1, b2)]
        return (s1 * s2 * s, b)

    elems = [(1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3), (1, 4), (-1, 4)]
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mul_pair(x, y)] for y in elems] for x in elems]
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    return FiniteGroup(table, name="Q8", labels=labels, validate=False)


def parse_permutation(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation like "(0 1 2)(3 4)" into a one-line tuple."""
    perm = list(range(degree))
    body = text.strip()
    if body in ("", "e", "()"):
        return tuple(perm)
    if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", body):
        raise ValueError(f"cannot parse permutation {text!r}")
    for cyc in re.findall(r"\(([^()]*)\)", body):
        pts = [int(tok) for tok in re.split(r"[\s,]+", cyc.strip()) if tok]
        if any(p >= degree for p in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle ({cyc}) for degree {degree}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def from_generators(gens, degree: int, name: str | None = None,
                    max_order: int = 1024) -> FiniteGroup:
    """Group generated by permutations, in breadth-first closure order.

    The identity gets id 0; new elements are appended as old*generator
    products are discovered, scanning generators in the given order.
    """
    parsed = []
    for g in gens:
        if isinstance(g, str):
            parsed.append(parse_permutation(g, degree))
        else:
            parsed.append(tuple(int(x) for x in g))
    for p in parsed:
        if sorted(p) != list(range(degree)):
            raise NotAGroup(f"not a permutation of 0..{degree - 1}: {p}")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elems):
        p = elems[head]
        head += 1
        for q in parsed:
            r = tuple(p[q[x]] for x in range(degree))
            if r not in index:
                if len(elems) >= max_order:
                    raise GroupTooLarge(f"closure exceeded {max_order} elements")
                index[r] = len(elems)
                elems.append(r)
    table = [[index[tuple(p[q[x]] for x in range(degree))] for q in elems]
             for p in elems]
    labels = tuple(_cycle_label(p) for p in elems)
    return FiniteGroup(table, name=name, labels=labels, validate=False)


def builtin_group(name: str) -> FiniteGroup:
    name = name.strip()
    if name == "Q8":
        return quaternion()
    m = re.fullmatch(r"S(\d+)", name)
    if m:
        return symmetric(int(m.group(1)))
    m = re.fullmatch(r"D(\d+)", name)
    if m:
        return dihedral(int(m.group(1)))
    if re.fullmatch(r"C\d+(?:xC\d+)*", name):
        ns = [int(s) for s in re.findall(r"C(\d+)", name)]
        if len(ns) == 1:
            return cyclic(ns[0])
        return product_group(*(cyclic(n) for n in ns), name=name)
    raise UnknownBuiltin(f"unknown builtin group {name!r}")


def build_group(spec) -> FiniteGroup:
    """Build a group from a builtin name, a JSON-style dict, or a raw table."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, str):
        return builtin_group(spec)
    if isinstance(spec, dict):
        if "builtin" in spec:
            return builtin_group(spec["builtin"])
        if "generators" in spec:
            if "degree" not in spec:
                raise NotAGroup("generator spec needs a degree")
            return from_generators(spec["generators"], int(spec["degree"]),
                                   name=spec.get("name"))
        if "table" in spec:
            g = FiniteGroup(spec["table"], name=spec.get("name"))
            if "order" in spec and int(spec["order"]) != g.order:
                raise NotAGroup("declared order does not match table size")
            return g
        raise NotAGroup(f"cannot interpret group spec with keys {sorted(spec)}")
    return FiniteGroup(spec)


def trivial_group() -> FiniteGroup:
    return cyclic(1)


# -- structure queries ------------------------------------------------------


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, tuple[int, ...]]]:
    """Conjugacy classes as (representative, members), representatives
    ascending; the representative is the least id in its class."""
    seen = [False] * G.order
    out = []
    for a in G.elements:
        if seen[a]:
            continue
        orbit = sorted({G.conj(g, a) for g in G.elements})
        for x in orbit:
            seen[x] = True
        out.append((a, tuple(orbit)))
    return out


def centralizer(G: FiniteGroup, a: int) -> Subgroup:
    G.check_element(a)
    t = G.table
    return Subgroup(G, tuple(g for g in G.elements if t[g][a] == t[a][g]))


def center(G: FiniteGroup) -> Subgroup:
    t = G.table
    return Subgroup(
        G,
        tuple(a for a in G.elements if all(t[a][g] == t[g][a] for g in G.elements)),
    )


def closure(G: FiniteGroup, seed) -> tuple[int, ...]:
    """Subgroup generated by the seed elements, as a sorted id tuple."""
    gens = sorted({0, *(int(s) for s in seed)})
    for s in gens:
        G.check_element(s)
    have = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for y in list(have):
            for z in (G.table[x][y], G.table[y][x]):
                if z not in have:
                    have.add(z)
                    frontier.append(z)
    return tuple(sorted(have))


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    comms = {G.commutator(a, b) for a in G.elements for b in G.elements}
    return Subgroup(G, closure(G, comms))


def all_subgroups(G: FiniteGroup, bound: int = DEFAULT_ORDER_BOUND) -> list[Subgroup]:
    """Every subgroup, found by closing cyclic seeds under pairwise join.

    Deterministic order: by (order, element tuple).
    """
    if G.order > bound:
        raise GroupTooLarge(
            f"subgroup enumeration capped at order {bound}, group has {G.order}"
        )
    found: set[tuple[int, ...]] = {closure(G, (a,)) for a in G.elements}
    while True:
        new = set()
        items = sorted(found)
        for h, k in itertools.combinations(items, 2):
            join = closure(G, h + k)
            if join not in found:
                new.add(join)
        if not new:
            break
        found |= new
    subs = [Subgroup(G, elems) for elems in found]
    subs.sort(key=Subgroup.sort_key)
    return subs


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    if S.parent is not G:
        S = Subgroup(G, S.elements)
    inside = set(S.elements)
    return all(G.conj(g, a) in inside for g in G.elements for a in S.elements)


def normal_subgroups(G: FiniteGroup, bound: int = DEFAULT_ORDER_BOUND) -> list[Subgroup]:
    return [S for S in all_subgroups(G, bound) if is_normal(G, S)]


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """Quotient by a normal subgroup, with the projection.

    Coset representatives are minimal ids; quotient ids sort those reps
    ascending, so the identity coset is id 0.
    """
    if N.parent is not G:
        N = Subgroup(G, N.elements)
    if not is_normal(G, N):
        raise NotNormal(f"subgroup {N.elements} is not normal")
    rep_of: list[int | None] = [None] * G.order
    reps = []
    for a in G.elements:
        if rep_of[a] is None:
            coset = sorted(G.table[a][x] for x in N.elements)
            for y in coset:
                rep_of[y] = coset[0]
            reps.append(coset[0])
    reps.sort()
    idx = {r: i for i, r in enumerate(reps)}
    k = len(reps)
    table = [[idx[rep_of[G.table[reps[i]][reps[j]]]] for j in range(k)]
             for i in range(k)]
    name = None
    if G.name:
        name = f"{G.name}/{{{','.join(str(x) for x in N.elements)}}}"
    labels = tuple(f"[{G.labels[r]}]" for r in reps)
    Q = FiniteGroup(table, name=name, labels=labels, validate=False)
    proj = GroupHom(G, Q, tuple(idx[rep_of[a]] for a in G.elements))
    return Q, proj


def subgroup_as_group(S: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Reindex a subgroup as a group in its own right.

    Returns (group, embedding): embedding[i] is the parent id of element i.
    """
    G = S.parent
    elems = S.elements
    idx = {a: i for i, a in enumerate(elems)}
    table = [[idx[G.table[a][b]] for b in elems] for a in elems]
    labels = tuple(G.labels[a] for a in elems)
    name = None
    if G.name:
        name = f"{G.name}[{','.join(str(a) for a in elems)}]"
    return FiniteGroup(table, name=name, labels=labels, validate=False), elems


def commuting_normal_pairs(G: FiniteGroup,
                           bound: int = DEFAULT_ORDER_BOUND) -> list[tuple[Subgroup, Subgroup]]:
    """Ordered pairs (L, M) of normal subgroups commuting elementwise."""
    normals = normal_subgroups(G, bound)
    t = G.table
    out = []
    for L in normals:
        for M in normals:
            if all(t[a][b] == t[b][a] for a in L.elements for b in M.elements):
                out.append((L, M))
    return out


# -- abelian structure ------------------------------------------------------


def _greedy_generators(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    have = closure(G, ())
    while len(have) < G.order:
        inside = set(have)
        gens.append(next(x for x in G.elements if x not in inside))
        have = closure(G, gens)
    return gens


def enumerate_homs_to_abelian(G: FiniteGroup, A: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms G -> A (A abelian), as image tuples, sorted.

    Brute force over generator images with incremental consistency checks.
    """
    if not A.is_abelian:
        raise NotAbelian("target of hom enumeration must be abelian")
    gens = _greedy_generators(G)
    out = []
    for imgs in itertools.product(A.elements, repeat=len(gens)):
        table = {0: 0}
        ok = True
        frontier = [0]
        while frontier and ok:
            x = frontier.pop()
            fx = table[x]
            for s, v in zip(gens, imgs):
                y = G.table[x][s]
                fy = A.table[fx][v]
                if y in table:
                    if table[y] != fy:
                        ok = False
                        break
                else:
                    table[y] = fy
                    frontier.append(y)
        if ok and len(table) == G.order:
            out.append(tuple(table[a] for a in G.elements))
    out.sort()
    return out


def count_homs_to_abelian(G: FiniteGroup, A: FiniteGroup) -> int:
    return len(enumerate_homs_to_abelian(G, A))


def _is_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def abelian_basis(A: FiniteGroup) -> list[tuple[int, int]]:
    """Invariant-factor basis [(generator, order), ...], orders descending.

    Every element is uniquely sum_i c_i g_i with c_i in range(order_i).
    Built per prime: greedily take an element of maximal order in the
    quotient by the span so far, restricted to order-matching lifts.
    """
    if not A.is_abelian:
        raise NotAbelian("basis requires an abelian group")
    if A.order == 1:
        return []
    primes = [p for p in range(2, A.order + 1)
              if A.order % p == 0 and all(p % q for q in range(2, p))]
    per_prime: dict[int, list[tuple[int, int]]] = {}
    for p in primes:
        members = [a for a in A.elements if _is_power(A.element_orders[a], p)]
        basis_p: list[tuple[int, int]] = []
        span = closure(A, ())
        size = 1
        while size < len(members):
            span_set = set(span)
            best = None
            for a in members:
                if a in span_set:
                    continue
                x, k = a, 1
                while x not in span_set:
                    x = A.table[x][a]
                    k += 1
                # k = least power of a landing in the span; accept only lifts
                # whose true order matches (guarantees a direct summand)
                if A.element_orders[a] == k and (best is None or k > best[1]):
                    best = (a, k)
            if best is None:
                raise NotAGroup("abelian basis construction failed")
            basis_p.append(best)
            span = closure(A, [g for g, _ in basis_p])
            size *= best[1]
            if len(span) != size:
                raise NotAGroup("abelian basis construction failed")
        basis_p.sort(key=lambda t: -t[1])
        per_prime[p] = basis_p
    width = max(len(b) for b in per_prime.values())
    out = []
    for i in range(width):
        g, order = 0, 1
        for p in primes:
            if i < len(per_prime[p]):
                gp, op = per_prime[p][i]
                g = A.table[g][gp]
                order *= op
        out.append((g, order))
    if prod(o for _, o in out) != A.order:
        raise NotAGroup("abelian basis construction failed")
    return out


@dataclass(frozen=True)
class DualGroup:
    """Character group of a finite abelian group, with the exact pairing.

    pairing[chi][a] is the exponent of chi(a) as a root of unity modulo
    `modulus` (the exponent of the source group).
    """

    group: FiniteGroup
    source: FiniteGroup
    pairing: tuple[tuple[int, ...], ...]
    modulus: int

    def character(self, chi: int, a: int) -> UnityExponent:
        return UnityExponent(self.pairing[chi][a], self.modulus)

    def annihilator(self, H: Subgroup) -> Subgroup:
        """Characters trivial on H, as a subgroup of the dual."""
        if H.parent is not self.source:
            H = Subgroup(self.source, H.elements)
        members = tuple(
            chi for chi in self.group.elements
            if all(self.pairing[chi][h] == 0 for h in H.elements)
        )
        return Subgroup(self.group, members)


def dual_group(A: FiniteGroup) -> DualGroup:
    """Characters of an abelian group.  Character ids sort the value tables
    lexicographically, so the trivial character is id 0."""
    if not A.is_abelian:
        raise NotAbelian("dual group requires an abelian group")
    e = A.exponent
    chars = enumerate_homs_to_abelian(A, cyclic(e))
    assert len(chars) == A.order, "character count must equal group order"
    idx = {c: i for i, c in enumerate(chars)}
    table = [
        [idx[tuple((x + y) % e for x, y in zip(c1, c2))] for c2 in chars]
        for c1 in chars
    ]
    name = f"dual({A.name})" if A.name else None
    grp = FiniteGroup(table, name=name, validate=False)
    return DualGroup(grp, A, tuple(chars), e)


def annihilator(dual: DualGroup, H: Subgroup) -> Subgroup:
    return dual.annihilator(H)


# -- isomorphism testing ----------------------------------------------------


def _hom_extend(G1: FiniteGroup, G2: FiniteGroup, partial: dict, a: int, fa: int):
    """Close partial (a multiplicative map) after adding a -> fa; None on clash."""
    new = dict(partial)
    work = [(a, fa)]
    while work:
        x, fx = work.pop()
        if x in new:
            if new[x] != fx:
                return None
            continue
        new[x] = fx
        for b, fb in list(new.items()):
            work.append((G1.table[x][b], G2.table[fx][fb]))
            work.append((G1.table[b][x], G2.table[fb][fx]))
    return new


def _iso_search(G1, G2, gens, cand_lists, partial):
    if not gens:
        return len(partial) == G1.order
    g, rest = gens[0], gens[1:]
    for img in cand_lists[0]:
        new = _hom_extend(G1, G2, partial, g, img)
        if new is None or len(set(new.values())) != len(new):
            continue
        if _iso_search(G1, G2, rest, cand_lists[1:], new):
            return True
    return False


def is_isomorphic(G1: FiniteGroup, G2: FiniteGroup,
                  bound: int = ISO_SEARCH_BOUND) -> bool:
    """Brute-force isomorphism search, only for small orders."""
    if G1.order != G2.order:
        return False
    if G1.order > bound:
        raise GroupTooLarge(f"isomorphism search capped at order {bound}")
    if sorted(G1.element_orders) != sorted(G2.element_orders):
        return False
    if G1.is_abelian != G2.is_abelian:
        return False
    sizes1 = sorted(len(c) for _, c in conjugacy_classes(G1))
    sizes2 = sorted(len(c) for _, c in conjugacy_classes(G2))
    if sizes1 != sizes2:
        return False
    gens = _greedy_generators(G1)
    cand_lists = [
        [h for h in G2.elements if G2.element_orders[h] == G1.element_orders[g]]
        for g in gens
    ]
    return _iso_search(G1, G2, gens, cand_lists, {0: 0})
