"""Counting layer for the center of a twisted pointed category.

A pair (G, omega) with omega a normalized 3-cocycle valued in mu_N determines
derived 2-cocycles beta_a on centralizers and a census of simple labels
(a, chi) indexed by conjugacy classes a and projective characters chi.  Only
counts and dimension aggregates are produced; no representations are built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .cohomology import Cochain, is_cocycle, mu_module
from .errors import BetaNotCocycle, NotACocycle, ParentMismatch
from .exact import UnityExponent
from .groups import (
    FiniteGroup,
    GroupHom,
    center,
    centralizer,
    conjugacy_classes,
    derived_subgroup,
    dual_group,
    product_group,
    quotient,
    subgroup_as_group,
)


class TwistedGroupData:
    """A finite group together with a verified normalized 3-cocycle twist."""

    __slots__ = ("group", "omega", "modulus", "_w")

    def __init__(self, group: FiniteGroup, omega: Cochain):
        if not omega.group.same_table(group):
            raise ParentMismatch("twist lives over a different group")
        if omega.degree != 3:
            raise NotACocycle("twist must be a 3-cochain")
        A = omega.module.group
        if not omega.module.is_trivial_action or A.exponent != A.order:
            raise NotACocycle("twist values must lie in a cyclic mu_N")
        if not omega.is_normalized:
            raise NotACocycle("twist must be normalized")
        if not is_cocycle(omega):
            raise NotACocycle("twist fails the 3-cocycle identity")
        self.group = group
        self.omega = omega
        self.modulus = A.order
        s = group.order
        self._w = np.array(omega.table, dtype=np.int64).reshape((s, s, s))

    @classmethod
    def trivial(cls, group: FiniteGroup, modulus: int = 1) -> "TwistedGroupData":
        return cls(group, Cochain.zero(group, mu_module(modulus), 3))

    def omega_exp(self, g: int, h: int, k: int) -> int:
        return int(self._w[g, h, k])

    def beta_exp(self, a: int, g: int, h: int) -> int:
        """Exponent of beta_a(g,h) = w(a,g,h) w(g,h,(gh)^-1 a gh) / w(g, g^-1 a g, h)."""
        G = self.group
        gh = G.mul(g, h)
        t1 = self._w[a, g, h]
        t2 = self._w[g, h, G.conj(G.inv(gh), a)]
        t3 = self._w[g, G.conj(G.inv(g), a), h]
        return int(t1 + t2 - t3) % self.modulus

    def __repr__(self) -> str:
        return f"TwistedGroupData({self.group!r}, mu_{self.modulus})"


def beta(data: TwistedGroupData, a: int, g: int, h: int) -> UnityExponent:
    for x in (a, g, h):
        data.group.check_element(x)
    return UnityExponent(data.beta_exp(a, g, h), data.modulus)


def beta_restricted_cocycle(data: TwistedGroupData, a: int) -> Cochain:
    """beta_a as a verified 2-cocycle on the centralizer of a."""
    data.group.check_element(a)
    C = centralizer(data.group, a)
    Cgrp, emb = subgroup_as_group(C)
    table = tuple(data.beta_exp(a, emb[x], emb[y])
                  for x in Cgrp.elements for y in Cgrp.elements)
    c = Cochain(2, Cgrp, mu_module(data.modulus), table)
    if not is_cocycle(c):
        raise BetaNotCocycle(
            f"beta_{a} violates the 2-cocycle identity on the centralizer")
    return c


@dataclass(frozen=True)
class SimpleLabel:
    """Counting data for the simples sitting over one conjugacy class."""

    representative: int
    class_size: int
    centralizer_order: int
    irrep_count: int
    dim_square_sum: int

    @property
    def fpdim_square(self) -> int:
        return self.class_size ** 2 * self.dim_square_sum


@dataclass(frozen=True)
class CenterCensus:
    labels: tuple[SimpleLabel, ...]
    total_simples: int
    fpdim_square_total: int


def _is_beta_regular(data: TwistedGroupData, a: int, x: int,
                     centralizer_elems: Iterable[int]) -> bool:
    G = data.group
    for h in centralizer_elems:
        if G.mul(h, x) != G.mul(x, h):
            continue
        if data.beta_exp(a, x, h) != data.beta_exp(a, h, x):
            return False
    return True


def simple_census(data: TwistedGroupData) -> CenterCensus:
    """Count the simples (a, chi): one label per conjugacy class of G, with
    chi running over irreducible beta_a-projective characters of C_G(a).

    The character count equals the number of beta_a-regular classes of the
    centralizer; the squared-dimension sum is its order, so the census always
    totals |G|^2.
    """
    G = data.group
    labels = []
    for a, members in conjugacy_classes(G):
        C = centralizer(G, a)
        Cgrp, emb = subgroup_as_group(C)
        count = 0
        for x_local, _ in conjugacy_classes(Cgrp):
            if _is_beta_regular(data, a, emb[x_local], C.elements):
                count += 1
        labels.append(SimpleLabel(a, len(members), C.order, count, C.order))
    total_sq = sum(l.fpdim_square for l in labels)
    if total_sq != G.order ** 2:
        raise BetaNotCocycle("dimension census failed the |G|^2 identity")
    return CenterCensus(tuple(labels), sum(l.irrep_count for l in labels),
                        total_sq)


@dataclass(frozen=True)
class InvertiblesOfCenter:
    """The invertible objects N-hat x Z(N) of an untwisted center, with the
    canonical projection onto the Z(N) factor."""

    group: FiniteGroup
    character_part: FiniteGroup
    center_part: FiniteGroup
    center_embedding: tuple[int, ...]
    projection: GroupHom


def invertibles_of_center(N: FiniteGroup) -> InvertiblesOfCenter:
    ab, _proj = quotient(N, derived_subgroup(N))
    chars = dual_group(ab).group
    Zgrp, emb = subgroup_as_group(center(N))
    prod = product_group(chars, Zgrp)
    k = Zgrp.order
    R = GroupHom(prod, Zgrp, tuple(i % k for i in prod.elements))
    return InvertiblesOfCenter(prod, chars, Zgrp, emb, R)
