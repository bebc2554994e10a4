"""Nilpotency, solvability, commutator series and Sylow subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .group import FiniteGroup, Subgroup, closure_of, join
from .lattice import Lattice, conjugates, is_normal, normalizer

__all__ = [
    "SeriesReport",
    "SylowEntry",
    "SylowSystem",
    "NilpotencyMismatch",
    "factorize",
    "p_part",
    "commutator_subgroup",
    "derived_subgroup",
    "derived_series",
    "lower_central_series",
    "is_solvable",
    "is_nilpotent",
    "is_nilpotent_by_sylow",
    "sylow_subgroup",
    "sylow_system",
]

CROSS_CHECK = True
"""When true, every :func:`is_nilpotent` call also runs the Sylow criterion."""


class NilpotencyMismatch(AssertionError):
    pass


def factorize(n: int) -> list[tuple[int, int]]:
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


@dataclass(frozen=True)
class SeriesReport:
    kind: Literal["derived", "lower_central"]
    terms: list[Subgroup]
    terminated_trivially: bool

    @property
    def orders(self) -> list[int]:
        return [H.order for H in self.terms]


def commutator_subgroup(A: Subgroup, B: Subgroup) -> Subgroup:
    """``[A, B]``, generated by all ``a^-1 b^-1 a b``."""
    G = A.ambient
    T, inv = G.table, G.inverses
    a = A.indices[:, None]
    b = B.indices[None, :]
    comm = T[T[T[inv[a], inv[b]], a], b]
    return closure_of(G, np.unique(comm))


def derived_subgroup(H: Subgroup) -> Subgroup:
    return commutator_subgroup(H, H)


def _series(H: Subgroup, kind) -> SeriesReport:
    terms = [H]
    while True:
        cur = terms[-1]
        nxt = derived_subgroup(cur) if kind == "derived" else commutator_subgroup(cur, H)
        if nxt.bits == cur.bits:
            break
        terms.append(nxt)
    return SeriesReport(kind, terms, terms[-1].is_trivial())


def derived_series(H: Subgroup) -> SeriesReport:
    return _series(H, "derived")


def lower_central_series(H: Subgroup) -> SeriesReport:
    return _series(H, "lower_central")


def is_solvable(H: Subgroup) -> bool:
    return derived_series(H).terminated_trivially


def is_nilpotent_by_sylow(H: Subgroup) -> bool:
    """Every Sylow subgroup of ``H`` is normal in ``H``."""
    for p, _ in factorize(H.order):
        P = sylow_subgroup(H, p)
        if not is_normal(P, within=H):
            return False
    return True


def is_nilpotent(H: Subgroup, cross_check: bool | None = None) -> bool:
    verdict = lower_central_series(H).terminated_trivially
    if CROSS_CHECK if cross_check is None else cross_check:
        other = is_nilpotent_by_sylow(H)
        if other != verdict:
            raise NilpotencyMismatch(
                f"lower central series says {verdict}, Sylow criterion says {other} "
                f"for a subgroup of order {H.order}")
    return verdict


def _as_subgroup(H) -> Subgroup:
    return H.whole if isinstance(H, FiniteGroup) else H


def sylow_subgroup(H, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup of ``H`` (a group or subgroup), by normalizer ascent."""
    H = _as_subgroup(H)
    G = H.ambient
    target = p_part(H.order, p)
    if target == 1:
        return G.trivial
    orders = G.element_orders
    idx = H.indices
    is_p_elem = np.array([p_part(int(o), p) == o for o in orders], dtype=bool)
    p_elems = idx[is_p_elem[idx] & (orders[idx] > 1)]
    # start from a p-element of largest order; ties broken by index
    start = int(p_elems[np.argmax(orders[p_elems])])
    P = closure_of(G, [start])
    while P.order < target:
        N = normalizer(P, within=H)
        cand = N.indices[is_p_elem[N.indices] & ~P.mask[N.indices]]
        if cand.size == 0:
            raise AssertionError(f"Sylow ascent stalled at order {P.order} (target {target})")
        P = join(P, int(cand[0]))
    assert P.order == target
    return P


@dataclass(frozen=True)
class SylowEntry:
    prime: int
    representative: Subgroup
    conjugates: list[Subgroup]
    is_normal: bool

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def count(self) -> int:
        return len(self.conjugates)


@dataclass(frozen=True)
class SylowSystem:
    prime_map: dict[int, SylowEntry]

    def __getitem__(self, p: int) -> SylowEntry:
        return self.prime_map[p]

    def __iter__(self):
        return iter(self.prime_map.values())

    def all_sylows(self) -> list[Subgroup]:
        return [P for e in self for P in e.conjugates]


def sylow_system(G, L: Lattice | None = None) -> SylowSystem:
    """Sylow representative, conjugates and normality flag for each prime of ``|G|``.

    With a lattice, the representative's order is cross-checked against the
    largest ``p``-subgroup the lattice contains.
    """
    whole = _as_subgroup(G)
    if L is not None and "sylow" in L.cache:
        return L.cache["sylow"]
    order = whole.order
    entries = {}
    for p, _ in factorize(order):
        P = sylow_subgroup(whole, p)
        conj = conjugates(P, within=None if whole.is_whole() else whole)
        n_p = len(conj)
        assert n_p % p == 1, f"Sylow {p}-count {n_p} is not 1 mod {p}"
        assert (order // P.order) % n_p == 0, f"Sylow {p}-count {n_p} does not divide the index"
        if L is not None:
            biggest = max(H.order for H in L if p_part(H.order, p) == H.order)
            assert biggest == P.order, f"lattice p-subgroup order {biggest} != Sylow order {P.order}"
            conj = [L.lookup(C.bits) for C in conj]
        entries[p] = SylowEntry(p, conj[0], conj, n_p == 1)
    system = SylowSystem(entries)
    if L is not None:
        L.cache["sylow"] = system
    return system
