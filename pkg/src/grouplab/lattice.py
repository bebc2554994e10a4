"""Subgroup lattices: enumeration, maximality, normality, normalizers, conjugacy."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .group import FiniteGroup, Subgroup, bits_from_mask, closure_of, join

__all__ = [
    "DEFAULT_SUBGROUP_CAP",
    "LatticeCapExceeded",
    "Lattice",
    "enumerate_subgroups",
    "maximal_subgroups",
    "is_normal",
    "normalizer",
    "intersect",
    "conjugate_subgroup",
    "subgroup_conjugacy_classes",
    "frattini",
]

DEFAULT_SUBGROUP_CAP = 20000


class LatticeCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"lattice cap exceeded: more than {cap} subgroups")


def _sort_key(H: Subgroup):
    return (H.order, tuple(H.indices.tolist()))


@dataclass(eq=False)
class Lattice:
    """Every subgroup of ``ambient``, sorted by (order, element indices)."""

    ambient: FiniteGroup
    subgroups: list[Subgroup]
    maximal_flags: list[bool]
    position: dict[int, int] = field(repr=False)
    cache: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def lookup(self, bits: int) -> Subgroup:
        return self.subgroups[self.position[bits]]

    def __contains__(self, H: Subgroup) -> bool:
        return H.bits in self.position

    @property
    def maximal(self) -> list[Subgroup]:
        return [H for H, flag in zip(self.subgroups, self.maximal_flags) if flag]


def enumerate_subgroups(G: FiniteGroup, subgroup_cap: int = DEFAULT_SUBGROUP_CAP) -> Lattice:
    """All subgroups of ``G`` by join-closure from the cyclic subgroups.

    Every subgroup is reached as ``<<<g1>, g2>, ...>``, so joining each known
    subgroup with single elements until nothing new appears is complete.
    ``<H, g>`` depends only on the coset ``Hg`` and on ``<g>``'s generator
    choice, so each (coset, power) class is joined once.
    """
    if subgroup_cap < 2:
        raise ValueError("subgroup_cap must be >= 2")
    T = G.table
    orders = G.element_orders
    found: dict[int, Subgroup] = {}
    gens_of: dict[int, tuple[int, ...]] = {}
    queue: deque[int] = deque()

    def add(H: Subgroup, gens: tuple[int, ...]):
        if H.bits in found:
            return
        if len(found) >= subgroup_cap:
            raise LatticeCapExceeded(subgroup_cap)
        found[H.bits] = H
        gens_of[H.bits] = gens
        queue.append(H.bits)

    add(G.trivial, ())
    cyclic_done = np.zeros(G.order, dtype=bool)
    cyclic_done[0] = True
    for g in range(1, G.order):
        if cyclic_done[g]:
            continue
        C = closure_of(G, [g])
        # generators of <g> are the powers coprime to its order
        for i in C.indices:
            if orders[i] == orders[g]:
                cyclic_done[i] = True
        add(C, (g,))

    while queue:
        bits = queue.popleft()
        H = found[bits]
        h_gens = gens_of[bits]
        h_idx = H.indices
        done = H.mask.copy()
        for g in range(G.order):
            if done[g]:
                continue
            K = join(H, g, h_gens)
            # <H, g'> = <H, g> for g' in Hg, and for g' = h g^k with k coprime to |g|
            powers = _cyclic_generators(G, g)
            done[T[np.ix_(h_idx, powers)].ravel()] = True
            add(K, h_gens + (g,))

    subs = sorted(found.values(), key=_sort_key)
    position = {H.bits: i for i, H in enumerate(subs)}
    flags = _maximal_flags(G, subs)
    return Lattice(G, subs, flags, position)


def _cyclic_generators(G: FiniteGroup, g: int) -> np.ndarray:
    T = G.table
    n = int(G.element_orders[g])
    out = []
    x = g
    for k in range(1, n + 1):
        if np.gcd(k, n) == 1:
            out.append(x)
        x = int(T[x, g])
    return np.array(out, dtype=np.int64)


def _maximal_flags(G: FiniteGroup, subs: Sequence[Subgroup]) -> list[bool]:
    flags = []
    full = G.order
    for i, M in enumerate(subs):
        if M.order == full:
            flags.append(False)
            continue
        maximal = True
        for K in subs[i + 1:]:
            if K.order == full:
                continue
            if K.order > M.order and K.order % M.order == 0 and M.bits & ~K.bits == 0:
                maximal = False
                break
        flags.append(maximal)
    return flags


def maximal_subgroups(L: Lattice) -> list[Subgroup]:
    return L.maximal


def conjugate_subgroup(H: Subgroup, g: int) -> Subgroup:
    """``{g^-1 h g : h in H}``."""
    G = H.ambient
    mask = np.zeros(G.order, dtype=bool)
    mask[G.conj[g, H.indices]] = True
    return Subgroup(G, bits_from_mask(mask))


def is_normal(H: Subgroup, within: Subgroup | None = None) -> bool:
    """Normality in the ambient group (or in ``within``), tested on generators only."""
    G = H.ambient
    gens = G.generator_indices if within is None else within.generators
    mask = H.mask
    for g in gens:
        if not mask[G.conj[g, H.indices]].all():
            return False
    return True


def normalizer(H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """``N(H) = {g : g^-1 H g = H}`` in the ambient group, or inside ``within``."""
    G = H.ambient
    stable = H.mask[G.conj[:, H.indices]].all(axis=1)
    if within is not None:
        stable &= within.mask
    return Subgroup(G, bits_from_mask(stable))


def intersect(subs: Sequence[Subgroup]) -> Subgroup:
    if not subs:
        raise ValueError("intersection of an empty family is undefined here")
    G = subs[0].ambient
    bits = subs[0].bits
    for H in subs[1:]:
        if H.ambient is not G:
            raise ValueError("subgroups live in different ambient groups")
        bits &= H.bits
    return Subgroup(G, bits)


def conjugates(H: Subgroup, within: Subgroup | None = None) -> list[Subgroup]:
    """Orbit of ``H`` under conjugation, in discovery order (starting with ``H``)."""
    G = H.ambient
    gens = G.generator_indices if within is None else within.generators
    orbit = {H.bits: H}
    queue = deque([H])
    while queue:
        K = queue.popleft()
        for g in gens:
            C = conjugate_subgroup(K, g)
            if C.bits not in orbit:
                orbit[C.bits] = C
                queue.append(C)
    return list(orbit.values())


def subgroup_conjugacy_classes(L: Lattice) -> list[list[Subgroup]]:
    """Partition of the lattice into conjugacy classes, each in lattice order."""
    if "classes" in L.cache:
        return L.cache["classes"]
    seen: set[int] = set()
    classes = []
    for H in L.subgroups:
        if H.bits in seen:
            continue
        orbit = conjugates(H)
        members = sorted((L.lookup(K.bits) for K in orbit), key=lambda K: L.position[K.bits])
        seen.update(K.bits for K in members)
        classes.append(members)
    L.cache["classes"] = classes
    return classes


def frattini(L: Lattice) -> Subgroup:
    maxes = L.maximal
    if not maxes:
        return L.ambient.trivial
    return intersect(maxes)
