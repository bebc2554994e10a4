"""Acceptance criteria 1-8.  Each test records a PASS/FAIL line shown in the summary.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import contextlib
import subprocess
import sys
import time

import pytest

from grouplab.catalog import build, default_suite, preset
from grouplab.classify import (factorize, is_nilpotent_by_sylow, lower_central_series, p_part,
                               sylow_subgroup)
from grouplab.group import closure_of
from grouplab.lattice import enumerate_subgroups, frattini
from grouplab.perm import parse_cycles
from grouplab.theorems import (existence_check_th2, family_members, frattini_argument_check,
                               frattini_argument_pairs, group_is_nilpotent, group_is_solvable,
                               literature_property_checks, nilpotent_maximal_structure_check,
                               run_theorem)

from oracles import powerset_subgroups

RESULTS: dict[str, str] = {}

SUITE = default_suite()
NON_SOLVABLE = ["A5", "S5", "A6", "PSL(2,7)", "A5xC7"]


@contextlib.contextmanager
def criterion(key, title):
    try:
        yield
    except BaseException:
        RESULTS[key] = f"FAIL  {key}. {title}"
        raise
    RESULTS[key] = f"PASS  {key}. {title}"


def test_1_d12_regression():
    with criterion("1", "D12 regression: non-nilpotent maximals intersect in <a^2>, Phi = 1, < 1 s"):
        start = time.perf_counter()
        G = build(preset("D12"))
        L = enumerate_subgroups(G)
        r = run_theorem(G, L, "nonnilpotent_maximal")
        elapsed = time.perf_counter() - start
        a = G.index_of[parse_cycles("(1 2 3 4 5 6)", 6)]
        a_squared = closure_of(G, [G.table[a, a]])
        assert r.family_size == 2
        assert r.intersection_order == 3
        assert r.intersection.bits == a_squared.bits
        assert frattini(L).order == 1 and r.frattini_order == 1
        assert elapsed < 1.0, f"took {elapsed:.2f} s"


def test_2_a5xc7_regression():
    with criterion("2", "A5xC7 regression: Shlyk intersection = C7 factor, Phi = 1, < 60 s"):
        from grouplab.theorems import verify_group
        start = time.perf_counter()
        G = build(preset("A5xC7"))
        L = enumerate_subgroups(G)
        r = run_theorem(G, L, "shlyk")
        result = verify_group(G, L)
        elapsed = time.perf_counter() - start
        assert r.family_size == 21
        assert r.intersection_order == 7
        assert r.frattini_order == 1
        c7 = {p for p in G.elements if p.images[:5] == (0, 1, 2, 3, 4)}
        assert set(r.intersection.permutations()) == c7
        assert result.violations == []
        assert elapsed < 60.0, f"took {elapsed:.2f} s"


def test_3_sylow_normalizer_maximal_sweep(get_lattice):
    with criterion("3", "Sylow-normalizer maximals on every non-solvable suite group"):
        found = []
        for d in SUITE:
            G, L = get_lattice(d.name)
            if group_is_solvable(G, L):
                continue
            found.append(d.name)
            assert existence_check_th2(G, L), d.name
            r = run_theorem(G, L, "th2")
            assert not r.vacuous and r.intersection_is_nilpotent, d.name
            assert r.violations == [], r.violations
        assert sorted(found) == sorted(NON_SOLVABLE)


def test_4_sylow_normalizer_sweep(get_lattice):
    with criterion("4", "non-normal Sylow normalizers on every non-nilpotent suite group; D12 gives 2"):
        count = 0
        for d in SUITE:
            G, L = get_lattice(d.name)
            if group_is_nilpotent(G, L):
                continue
            count += 1
            assert family_members(G, L, "nonnormal_sylow_normalizers"), d.name
            r = run_theorem(G, L, "th3")
            assert r.intersection_is_nilpotent and r.violations == [], d.name
        assert count > 0
        G, L = get_lattice("D12")
        assert run_theorem(G, L, "th3").intersection_order == 2


def test_5_literature_sweep(get_lattice):
    with criterion("5", "Gaschutz, Shidov, Shidov-Frattini, Redei, Li-Shi, Shi-Zhang-Guo sweep"):
        for d in SUITE:
            G, L = get_lattice(d.name)
            assert literature_property_checks(G, L) == [], d.name
            for name in ("gaschutz", "shidov", "shlyk"):
                assert run_theorem(G, L, name).violations == [], (d.name, name)


def test_6_proof_trace_suite(get_lattice):
    with criterion("6", "nilpotent-maximal structure and Frattini argument on non-solvable groups"):
        for name in NON_SOLVABLE:
            G, L = get_lattice(name)
            assert nilpotent_maximal_structure_check(G, L) == [], name
            pairs = frattini_argument_pairs(G, L)
            assert pairs
            for N, p in pairs:
                assert frattini_argument_check(G, N, p), (name, N.order, p)


def test_7_oracle_equivalences(get_lattice):
    with criterion("7", "nilpotency criteria, Sylow orders and lattice vs exhaustive oracle"):
        for d in SUITE:
            G, L = get_lattice(d.name)
            if G.order <= 120:
                for H in L:
                    assert lower_central_series(H).terminated_trivially == is_nilpotent_by_sylow(H)
            for p, _ in factorize(G.order):
                biggest = max(H.order for H in L if p_part(H.order, p) == H.order)
                assert sylow_subgroup(G, p).order == biggest == p_part(G.order, p)
            if G.order <= 16:
                assert {frozenset(H.permutations()) for H in L} == powerset_subgroups(G.elements)


def test_8_sweep_determinism():
    with criterion("8", "two sweep --json --no-timing runs are byte-identical"):
        cmd = [sys.executable, "-m", "grouplab", "sweep", "--json", "--no-timing"]
        first = subprocess.run(cmd, capture_output=True, check=False)
        second = subprocess.run(cmd, capture_output=True, check=False)
        assert first.returncode == 0, first.stderr.decode()
        assert first.stdout and first.stdout == second.stdout


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
