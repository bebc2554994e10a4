"""Fully enumerated finite permutation groups.

A :class:`FiniteGroup` holds every element, indexed in breadth-first discovery
order from the generators (index 0 is the identity).  Subsets of a group are
Python ``int`` bitsets over these indices; products are looked up in a
multiplication table built on first use.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .perm import Permutation, compose, element_order, identity

__all__ = [
    "DEFAULT_ORDER_CAP",
    "OrderCapExceeded",
    "FiniteGroup",
    "ElementSet",
    "Subgroup",
    "generate",
    "conjugate_element",
    "closure_of",
    "direct_product",
    "bits_from_indices",
    "indices_from_bits",
]

DEFAULT_ORDER_CAP = 1000


class OrderCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"order cap exceeded: group has more than {cap} elements")


def bits_from_indices(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


def bits_from_mask(mask: np.ndarray) -> int:
    packed = np.packbits(mask.astype(bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def mask_from_bits(bits: int, size: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def indices_from_bits(bits: int, size: int) -> np.ndarray:
    return np.flatnonzero(mask_from_bits(bits, size))


class FiniteGroup:
    """A permutation group with every element enumerated.

    Treat instances as immutable.  ``elements[0]`` is the identity and
    ``index_of`` maps each element back to its index.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation], name: str | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index_of = {p: i for i, p in enumerate(self.elements)}
        self.order = len(self.elements)
        self.name = name

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"<FiniteGroup {label}degree={self.degree} order={self.order}>"

    def __len__(self) -> int:
        return self.order

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(sorted({self.index_of[g] for g in self.generators} - {0}))

    @cached_property
    def images(self) -> np.ndarray:
        """Element images as an ``order x degree`` array (0-based points)."""
        return np.array([p.images for p in self.elements], dtype=np.int64).reshape(self.order, self.degree)

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``compose(elements[i], elements[j])``."""
        m, n = self.order, self.degree
        E = self.images
        out = np.empty((m, m), dtype=np.int32)
        if n ** n < 2 ** 62:
            weights = n ** np.arange(n, dtype=np.int64)
            codes = E @ weights
            order = np.argsort(codes)
            sorted_codes = codes[order]
            for j in range(m):
                c = E[j][E] @ weights
                out[:, j] = order[np.searchsorted(sorted_codes, c)]
        else:
            lookup = {row.tobytes(): i for i, row in enumerate(E)}
            for j in range(m):
                rows = E[j][E]
                out[:, j] = [lookup[r.tobytes()] for r in rows]
        return out

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmin(self.table, axis=1).astype(np.int32)

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[g, x]`` is the index of ``g^-1 x g``."""
        T = self.table
        left = T[self.inverses]  # row g: g^-1 * x
        return T[left, np.arange(self.order)[:, None]]

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([element_order(p) for p in self.elements], dtype=np.int64)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, (1 << self.order) - 1)

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self, 1)

    def element_set(self, indices: Iterable[int]) -> ElementSet:
        return ElementSet(self, bits_from_indices(indices))

    def subgroup_generated_by(self, perms: Iterable[Permutation]) -> Subgroup:
        return closure_of(self, [self.index_of[p] for p in perms])


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of an ambient group's elements, as a bitset over indices."""

    ambient: FiniteGroup
    bits: int

    def __eq__(self, other) -> bool:
        return (isinstance(other, ElementSet) and other.ambient is self.ambient
                and other.bits == self.bits)

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> int(index) & 1)

    def __le__(self, other: ElementSet) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.bits != other.bits

    @cached_property
    def mask(self) -> np.ndarray:
        return mask_from_bits(self.bits, self.ambient.order)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def permutations(self) -> list[Permutation]:
        return [self.ambient.elements[i] for i in self.indices]


@dataclass(frozen=True, eq=False)
class Subgroup(ElementSet):
    """A subgroup of ``ambient``; construct through :func:`closure_of` or lattice code."""

    @cached_property
    def order(self) -> int:
        return self.bits.bit_count()

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set (element indices), found greedily."""
        G = self.ambient
        gens: list[int] = []
        current = G.trivial
        by_order = sorted(self.indices[1:], key=lambda i: (-G.element_orders[i], i))
        for i in by_order:
            if current.order == self.order:
                break
            if i not in current:
                gens.append(int(i))
                current = join(current, int(i), gens[:-1])
        return tuple(gens)

    def is_trivial(self) -> bool:
        return self.bits == 1

    def is_whole(self) -> bool:
        return self.order == self.ambient.order

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.ambient!r}>"


def generate(degree: int, gens: Sequence[Permutation], cap: int = DEFAULT_ORDER_CAP,
             name: str | None = None) -> FiniteGroup:
    """Breadth-first closure of ``gens``; raise :class:`OrderCapExceeded` past ``cap``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
    e = identity(degree)
    elements = [e]
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = compose(x, s)
            if y not in seen:
                if len(elements) >= cap:
                    raise OrderCapExceeded(cap)
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return FiniteGroup(degree, gens, elements, name=name)


def conjugate_element(G: FiniteGroup, x: int, g: int) -> int:
    """Index of ``g^-1 x g``."""
    for i in (x, g):
        if not 0 <= i < G.order:
            raise IndexError(f"element index {i} out of range 0..{G.order - 1}")
    return int(G.conj[g, x])


def _close(G: FiniteGroup, mask: np.ndarray, gens: np.ndarray, frontier: np.ndarray) -> np.ndarray:
    T = G.table
    while frontier.size and gens.size:
        cand = T[np.ix_(frontier, gens)].ravel()
        cand = np.unique(cand[~mask[cand]])
        mask[cand] = True
        frontier = cand
    return mask


def closure_of(G: FiniteGroup, seed) -> Subgroup:
    """Smallest subgroup containing ``seed`` (an ElementSet or iterable of indices)."""
    if isinstance(seed, ElementSet):
        idx = seed.indices
    else:
        idx = np.fromiter((int(i) for i in seed), dtype=np.int64)
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    mask[idx] = True
    gens = np.unique(idx[idx != 0])
    _close(G, mask, gens, np.flatnonzero(mask))
    return Subgroup(G, bits_from_mask(mask))


def join(H: Subgroup, g: int, h_gens: Sequence[int] | None = None) -> Subgroup:
    """``<H, g>`` for a subgroup ``H``; ``h_gens`` should generate ``H`` if given."""
    G = H.ambient
    if g in H:
        return H
    if h_gens is None:
        h_gens = H.generators
    mask = H.mask.copy()
    mask[g] = True
    gens = np.array(sorted(set(h_gens) | {g}), dtype=np.int64)
    frontier = np.append(H.indices, g)
    _close(G, mask, gens, frontier)
    return Subgroup(G, bits_from_mask(mask))


def direct_product(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ORDER_CAP,
                   name: str | None = None) -> FiniteGroup:
    """``G x H`` acting on ``degree(G) + degree(H)`` points, ``H`` on the shifted block."""
    if G.order * H.order > cap:
        raise OrderCapExceeded(cap)
    n, k = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(g.images + tuple(range(n, n + k))))
    for h in H.generators:
        gens.append(Permutation(tuple(range(n)) + tuple(x + n for x in h.images)))
    gens = [p for p in gens if not p.is_identity()]
    return generate(n + k, gens, cap, name=name)

