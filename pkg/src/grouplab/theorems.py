"""Intersection operators over families of maximal subgroups and Sylow normalizers.

Each operator intersects one family of subgroups of ``G`` and reports whether
the result is nilpotent.  Where the governing theorem's hypothesis holds, a
non-nilpotent intersection (or an empty family, which the classical results
rule out) is recorded as a violation: those outcomes mean an engine bug.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .classify import (factorize, is_nilpotent, is_solvable, p_part, sylow_subgroup,
                       sylow_system)
from .group import FiniteGroup, Subgroup
from .lattice import (Lattice, frattini, intersect, is_normal, normalizer,
                      subgroup_conjugacy_classes)

__all__ = [
    "FamilyName",
    "FamilySpec",
    "FAMILIES",
    "THEOREMS",
    "TheoremReport",
    "family_members",
    "run_theorem",
    "existence_check_th2",
    "frattini_argument_check",
    "nilpotent_maximal_structure_check",
    "th2_claim_check",
    "th3_claim_check",
    "literature_property_checks",
    "monotonicity_check",
    "GroupVerification",
    "verify_group",
]

FamilyName = Literal[
    "all_maximal",
    "nonnormal_maximal",
    "nonnilpotent_maximal",
    "nonnormal_nonnilpotent_maximal",
    "sylownormalizer_maximal",
    "nonnormal_sylow_normalizers",
]
Hypothesis = Literal["none", "non_nilpotent", "non_solvable"]


@dataclass(frozen=True)
class FamilySpec:
    name: FamilyName
    hypothesis: Hypothesis = "none"


FAMILIES: tuple[str, ...] = FamilyName.__args__

THEOREMS: dict[str, FamilySpec] = {
    "frattini": FamilySpec("all_maximal", "none"),
    "gaschutz": FamilySpec("nonnormal_maximal", "non_nilpotent"),
    "shidov": FamilySpec("nonnilpotent_maximal", "non_solvable"),
    "shlyk": FamilySpec("nonnormal_nonnilpotent_maximal", "non_solvable"),
    "th2": FamilySpec("sylownormalizer_maximal", "non_solvable"),
    "th3": FamilySpec("nonnormal_sylow_normalizers", "non_nilpotent"),
}


# -- cached per-lattice facts ------------------------------------------------

def _cached(L: Lattice, key, compute):
    if key not in L.cache:
        L.cache[key] = compute()
    return L.cache[key]


def _nilpotent(L: Lattice, H: Subgroup) -> bool:
    memo = L.cache.setdefault("nilpotent", {})
    if H.bits not in memo:
        memo[H.bits] = is_nilpotent(H)
    return memo[H.bits]


def _normal(L: Lattice, H: Subgroup) -> bool:
    memo = L.cache.setdefault("normal", {})
    if H.bits not in memo:
        memo[H.bits] = is_normal(H)
    return memo[H.bits]


def _normalizer(L: Lattice, H: Subgroup) -> Subgroup:
    memo = L.cache.setdefault("normalizer", {})
    if H.bits not in memo:
        memo[H.bits] = normalizer(H)
    return memo[H.bits]


def group_is_nilpotent(G: FiniteGroup, L: Lattice) -> bool:
    return _nilpotent(L, G.whole)


def group_is_solvable(G: FiniteGroup, L: Lattice) -> bool:
    return _cached(L, "solvable", lambda: is_solvable(G.whole))


def hypothesis_holds(G: FiniteGroup, L: Lattice, hypothesis: Hypothesis) -> bool:
    if hypothesis == "none":
        return True
    if hypothesis == "non_nilpotent":
        return not group_is_nilpotent(G, L)
    if hypothesis == "non_solvable":
        return not group_is_solvable(G, L)
    raise ValueError(f"unknown hypothesis {hypothesis!r}")


def _sylow_normalizers(G: FiniteGroup, L: Lattice) -> list[tuple[int, Subgroup, Subgroup]]:
    """(prime, P, N_G(P)) for every Sylow subgroup P of G, all conjugates."""
    def compute():
        out = []
        for entry in sylow_system(G, L):
            for P in entry.conjugates:
                out.append((entry.prime, P, _normalizer(L, P)))
        return out
    return _cached(L, "sylow_normalizers", compute)


def contains_sylow_normalizer(G: FiniteGroup, L: Lattice, M: Subgroup) -> bool:
    return any(N <= M for _, _, N in _sylow_normalizers(G, L))


# -- families and operators --------------------------------------------------

def family_members(G: FiniteGroup, L: Lattice, spec: FamilySpec | str) -> list[Subgroup]:
    """Members of a family, in lattice order (``nonnormal_sylow_normalizers`` deduplicated)."""
    name = spec.name if isinstance(spec, FamilySpec) else spec
    maxes = L.maximal
    if name == "all_maximal":
        return list(maxes)
    if name == "nonnormal_maximal":
        return [M for M in maxes if not _normal(L, M)]
    if name == "nonnilpotent_maximal":
        return [M for M in maxes if not _nilpotent(L, M)]
    if name == "nonnormal_nonnilpotent_maximal":
        return [M for M in maxes if not _normal(L, M) and not _nilpotent(L, M)]
    if name == "sylownormalizer_maximal":
        return [M for M in maxes
                if not _nilpotent(L, M) and contains_sylow_normalizer(G, L, M)]
    if name == "nonnormal_sylow_normalizers":
        found = {}
        for entry in sylow_system(G, L):
            if entry.is_normal:
                continue
            for P in entry.conjugates:
                N = _normalizer(L, P)
                found[N.bits] = L.lookup(N.bits)
        return sorted(found.values(), key=lambda H: L.position[H.bits])
    raise ValueError(f"unknown family {name!r}")


@dataclass
class TheoremReport:
    group_name: str
    group_order: int
    theorem: str
    family: FamilySpec
    family_size: int
    vacuous: bool
    intersection_order: int
    intersection_is_nilpotent: bool
    frattini_order: int
    equals_frattini: bool
    hypothesis_satisfied: bool
    violations: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0
    intersection: Subgroup | None = field(default=None, repr=False, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "group_name": self.group_name,
            "group_order": self.group_order,
            "theorem": self.theorem,
            "family": self.family.name,
            "hypothesis": self.family.hypothesis,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "family_size": self.family_size,
            "vacuous": self.vacuous,
            "intersection_order": self.intersection_order,
            "intersection_is_nilpotent": self.intersection_is_nilpotent,
            "frattini_order": self.frattini_order,
            "equals_frattini": self.equals_frattini,
            "violations": list(self.violations),
        }
        if timing:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d


def run_theorem(G: FiniteGroup, L: Lattice, spec: FamilySpec | str,
                theorem: str | None = None) -> TheoremReport:
    """Evaluate one intersection operator on ``G``.

    ``spec`` may be a :class:`FamilySpec`, a theorem name from ``THEOREMS``,
    or a family name (which selects the theorem built on that family).
    """
    start = time.perf_counter()
    if isinstance(spec, str):
        by_family = {v.name: k for k, v in THEOREMS.items()}
        if spec in by_family:
            spec = by_family[spec]
        if spec not in THEOREMS:
            raise ValueError(f"unknown theorem or family {spec!r}")
        theorem = spec
        spec = THEOREMS[spec]
    if theorem is None:
        theorem = next((k for k, v in THEOREMS.items() if v == spec), spec.name)
    members = family_members(G, L, spec)
    vacuous = not members
    N = G.whole if vacuous else intersect(members)
    nilpotent = _nilpotent(L, N)
    phi = _cached(L, "frattini", lambda: frattini(L))
    hyp = hypothesis_holds(G, L, spec.hypothesis)

    violations = []
    if hyp:
        # all_maximal is empty only for the trivial group
        if vacuous and spec.name != "all_maximal":
            violations.append(f"{theorem}: family is empty although the hypothesis holds")
        if not vacuous and not nilpotent:
            violations.append(f"{theorem}: intersection of order {N.order} is not nilpotent")
        if theorem == "shidov" and not vacuous and N.bits != phi.bits:
            violations.append(
                f"shidov: intersection of order {N.order} differs from the Frattini subgroup "
                f"(order {phi.order})")
    return TheoremReport(
        group_name=G.name or "?",
        group_order=G.order,
        theorem=theorem,
        family=spec,
        family_size=len(members),
        vacuous=vacuous,
        intersection_order=N.order,
        intersection_is_nilpotent=nilpotent,
        frattini_order=phi.order,
        equals_frattini=N.bits == phi.bits,
        hypothesis_satisfied=hyp,
        violations=violations,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        intersection=N,
    )


def existence_check_th2(G: FiniteGroup, L: Lattice) -> bool:
    """Some non-nilpotent maximal subgroup contains a Sylow normalizer."""
    return bool(family_members(G, L, "sylownormalizer_maximal"))


# -- proof-trace checks ------------------------------------------------------

def _product_size(A: Subgroup, B: Subgroup) -> int:
    T = A.ambient.table
    return int(np.unique(T[np.ix_(A.indices, B.indices)]).size)


def frattini_argument_check(G: FiniteGroup, N: Subgroup, p: int) -> bool:
    """``G = N * N_G(P ∩ N)`` for a Sylow ``p``-subgroup ``P`` of ``G``.

    Also asserts that ``P ∩ N`` is a Sylow ``p``-subgroup of ``N``.
    """
    if not is_normal(N):
        raise ValueError("frattini_argument_check needs a normal subgroup")
    if N.order % p:
        return _product_size(N, G.whole) == G.order
    P = sylow_subgroup(G, p)
    Q = intersect([P, N])
    assert Q.order == p_part(N.order, p), (
        f"P ∩ N has order {Q.order}, expected the {p}-part {p_part(N.order, p)} of |N|")
    return _product_size(N, normalizer(Q)) == G.order


def nilpotent_maximal_structure_check(G: FiniteGroup, L: Lattice) -> list[str]:
    """Structure of nilpotent maximal subgroups of a non-solvable group.

    Each must have even order, its Sylow 2-subgroup ``Q`` must be a Sylow
    2-subgroup of ``G`` with ``N_G(Q)`` equal to the maximal subgroup, and all
    of them must be conjugate.  An empty set passes.
    """
    out = []
    nil_max = [M for M in L.maximal if _nilpotent(L, M)]
    two_part = p_part(G.order, 2)
    for M in nil_max:
        label = f"nilpotent maximal subgroup #{L.position[M.bits]} (order {M.order})"
        if M.order % 2:
            out.append(f"{label} has odd order")
            continue
        Q = sylow_subgroup(M, 2)
        if Q.order != two_part:
            out.append(f"{label}: Sylow 2-subgroup order {Q.order} != 2-part {two_part} of |G|")
        if normalizer(Q).bits != M.bits:
            out.append(f"{label}: normalizer of its Sylow 2-subgroup is not itself")
    if nil_max:
        classes = [c for c in subgroup_conjugacy_classes(L)
                   if any(H.bits == nil_max[0].bits for H in c)]
        cls_bits = {H.bits for H in classes[0]}
        if cls_bits != {M.bits for M in nil_max}:
            out.append(f"nilpotent maximal subgroups ({len(nil_max)}) do not form one conjugacy class")
    return out


def th2_claim_check(G: FiniteGroup, L: Lattice) -> list[str]:
    """Intermediate claims about the Theorem-1.2 intersection ``N``.

    ``N`` is normal; for each Sylow ``P`` of ``G``, ``P ∩ N`` is Sylow in
    ``N``, and either it is normal in ``G`` and lies in every nilpotent
    maximal subgroup, or its normalizer lies in some nilpotent maximal
    subgroup.
    """
    members = family_members(G, L, "sylownormalizer_maximal")
    if not members:
        return []
    N = intersect(members)
    out = []
    if not is_normal(N):
        out.append("th2: intersection is not normal")
    nil_max = [M for M in L.maximal if _nilpotent(L, M)]
    for p, P, _ in _sylow_normalizers(G, L):
        Q = intersect([P, N])
        if Q.order != p_part(N.order, p):
            out.append(f"th2: P ∩ N is not a Sylow {p}-subgroup of N")
            continue
        if Q.is_trivial():
            continue
        if is_normal(Q):
            if not all(Q <= M for M in nil_max):
                out.append(f"th2: normal Sylow {p}-subgroup of N misses a nilpotent maximal subgroup")
        elif not any(normalizer(Q) <= M for M in nil_max):
            out.append(f"th2: N_G(P ∩ N) for p={p} lies in no nilpotent maximal subgroup")
    return out


def th3_claim_check(G: FiniteGroup, L: Lattice) -> list[str]:
    """``P ∩ N`` is normal in ``G`` for every Sylow ``P``; Sylows of ``N`` are normal in ``N``."""
    members = family_members(G, L, "nonnormal_sylow_normalizers")
    if not members:
        return []
    N = intersect(members)
    out = []
    if not is_normal(N):
        out.append("th3: intersection is not normal")
    for p, P, _ in _sylow_normalizers(G, L):
        Q = intersect([P, N])
        if Q.order != p_part(N.order, p):
            out.append(f"th3: P ∩ N is not a Sylow {p}-subgroup of N")
        elif not is_normal(Q):
            out.append(f"th3: P ∩ N is not normal in G (p={p})")
    for p, _ in factorize(N.order):
        if not is_normal(sylow_subgroup(N, p), within=N):
            out.append(f"th3: Sylow {p}-subgroup of N is not normal in N")
    return out


def monotonicity_check(G: FiniteGroup, L: Lattice) -> list[str]:
    """th2 family ⊆ Shlyk family ⊆ non-normal maximals, intersections reversed."""
    chain = [family_members(G, L, name) for name in
             ("sylownormalizer_maximal", "nonnormal_nonnilpotent_maximal", "nonnormal_maximal")]
    labels = ("th2", "shlyk", "nonnormal_maximal")
    out = []
    for (a, la), (b, lb) in zip(zip(chain, labels), zip(chain[1:], labels[1:])):
        if not {M.bits for M in a} <= {M.bits for M in b}:
            out.append(f"monotonicity: {la} family is not contained in the {lb} family")
        elif a and b and not intersect(b) <= intersect(a):
            out.append(f"monotonicity: {lb} intersection is not inside the {la} intersection")
    return out


def literature_property_checks(G: FiniteGroup, L: Lattice) -> list[str]:
    """Classical statements about maximal-subgroup intersections, where applicable."""
    out = []
    nilpotent = group_is_nilpotent(G, L)
    solvable = group_is_solvable(G, L)
    maxes = L.maximal
    nonnormal = family_members(G, L, "nonnormal_maximal")
    nonnil = family_members(G, L, "nonnilpotent_maximal")
    phi = _cached(L, "frattini", lambda: frattini(L))

    if not nilpotent:
        if not nonnormal:
            out.append("gaschutz: non-nilpotent group without non-normal maximal subgroups")
        elif not _nilpotent(L, intersect(nonnormal)):
            out.append("gaschutz: intersection of non-normal maximal subgroups is not nilpotent")
    if not solvable:
        if not nonnil:
            out.append("shidov: non-solvable group without non-nilpotent maximal subgroups")
        else:
            D = intersect(nonnil)
            if not _nilpotent(L, D):
                out.append("shidov: intersection of non-nilpotent maximal subgroups is not nilpotent")
            if D.bits != phi.bits:
                out.append("shidov: intersection of non-nilpotent maximal subgroups != Frattini subgroup")
    if maxes and all(_nilpotent(L, M) for M in maxes) and not solvable:
        out.append("redei: every maximal subgroup is nilpotent but the group is not solvable")
    if maxes and all(_normal(L, M) for M in nonnil) and not solvable:
        out.append("li-shi: every non-nilpotent maximal subgroup is normal but the group is not solvable")
    if not solvable:
        shlyk = family_members(G, L, "nonnormal_nonnilpotent_maximal")
        if not shlyk or not nonnormal:
            out.append("shi-zhang-guo: empty family in a non-solvable group")
        elif intersect(shlyk).bits != intersect(nonnormal).bits:
            out.append("shi-zhang-guo: non-normal non-nilpotent and non-normal maximal "
                       "intersections differ")
    return out


# -- whole-group pipeline ----------------------------------------------------

FRATTINI_FULL_ORDER = 200
FRATTINI_SAMPLE = 6


def frattini_argument_pairs(G: FiniteGroup, L: Lattice) -> list[tuple[Subgroup, int]]:
    """(normal subgroup, prime) pairs to test.

    Every pair for ``|G| <= 200``; above that an evenly spaced sample of the
    normal subgroups, always keeping the trivial and whole group.
    """
    normals = [H for H in L if _normal(L, H)]
    if G.order > FRATTINI_FULL_ORDER and len(normals) > FRATTINI_SAMPLE:
        step = (len(normals) - 1) / (FRATTINI_SAMPLE - 1)
        normals = [normals[round(i * step)] for i in range(FRATTINI_SAMPLE)]
    return [(N, p) for N in normals for p, _ in factorize(N.order)]


@dataclass
class GroupVerification:
    group_name: str
    group_order: int
    solvable: bool
    nilpotent: bool
    reports: list[TheoremReport]
    checks: dict[str, list[str]]
    frattini_pairs_tested: int

    @property
    def violations(self) -> list[str]:
        out = [v for r in self.reports for v in r.violations]
        for name in sorted(self.checks):
            out.extend(self.checks[name])
        return out

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "group_name": self.group_name,
            "group_order": self.group_order,
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "reports": [r.to_dict(timing) for r in self.reports],
            "checks": {k: list(self.checks[k]) for k in sorted(self.checks)},
            "frattini_argument_pairs_tested": self.frattini_pairs_tested,
            "violations_total": len(self.violations),
        }


def verify_group(G: FiniteGroup, L: Lattice, theorems=None) -> GroupVerification:
    """Every operator in ``theorems`` (default: all) plus the proof-trace checks."""
    names = list(THEOREMS) if theorems is None else list(theorems)
    reports = [run_theorem(G, L, name) for name in names]
    solvable = group_is_solvable(G, L)
    nilpotent = group_is_nilpotent(G, L)
    checks: dict[str, list[str]] = {
        "literature": literature_property_checks(G, L),
        "th3_claims": th3_claim_check(G, L) if not nilpotent else [],
    }
    if not solvable:
        checks["nilpotent_maximal_structure"] = nilpotent_maximal_structure_check(G, L)
        checks["th2_claims"] = th2_claim_check(G, L)
        checks["monotonicity"] = monotonicity_check(G, L)
        if not existence_check_th2(G, L):
            checks["th2_existence"] = ["th2: no non-nilpotent maximal subgroup contains a Sylow normalizer"]
        else:
            checks["th2_existence"] = []
    pairs = frattini_argument_pairs(G, L)
    checks["frattini_argument"] = [
        f"frattini argument fails for a normal subgroup of order {N.order}, p={p}"
        for N, p in pairs if not frattini_argument_check(G, N, p)]
    return GroupVerification(G.name or "?", G.order, solvable, nilpotent, reports, checks, len(pairs))
