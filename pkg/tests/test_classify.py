import pytest

from grouplab import classify
from grouplab.catalog import alternating, cyclic, default_suite, symmetric
from grouplab.classify import (derived_series, derived_subgroup, factorize, is_nilpotent,
                               is_nilpotent_by_sylow, is_solvable, lower_central_series,
                               p_part, sylow_subgroup, sylow_system)
from grouplab.group import closure_of
from grouplab.lattice import enumerate_subgroups, is_normal
from grouplab.perm import parse_cycles

from oracles import brute_commutator_subgroup, brute_nilpotent


def test_factorize():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(420) == [(2, 2), (3, 1), (5, 1), (7, 1)]
    assert factorize(97) == [(97, 1)]
    for n in range(1, 500):
        prod = 1
        for p, e in factorize(n):
            prod *= p ** e
        assert prod == n


def test_derived_subgroup_examples():
    assert derived_subgroup(cyclic(12).whole).order == 1
    S3 = symmetric(3)
    D = derived_subgroup(S3.whole)
    assert D.order == 3
    assert set(D.permutations()) == brute_commutator_subgroup(S3.elements, S3.elements, 3)
    A5 = alternating(5)
    assert derived_subgroup(A5.whole).order == 60


def test_solvability_examples(get_group):
    assert is_solvable(cyclic(1).whole)
    D12 = get_group("D12")
    series = derived_series(D12.whole)
    assert series.orders == [12, 3, 1]
    assert is_solvable(D12.whole)
    A5 = alternating(5)
    assert derived_series(A5.whole).orders == [60]
    assert not is_solvable(A5.whole)


def test_nilpotency_examples(get_group):
    for name in ("C8", "D8", "D16", "C2xC2", "C9"):
        assert is_nilpotent(get_group(name).whole)
    S3 = symmetric(3)
    lcs = lower_central_series(S3.whole)
    assert lcs.orders == [6, 3]
    assert not lcs.terminated_trivially
    assert not is_nilpotent(S3.whole)
    D12 = get_group("D12")
    a = D12.index_of[parse_cycles("(1 2 3 4 5 6)", 6)]
    assert is_nilpotent(closure_of(D12, [D12.table[a, a]]))


def test_cross_check_raises_on_disagreement(monkeypatch):
    monkeypatch.setattr(classify, "is_nilpotent_by_sylow", lambda H: True)
    with pytest.raises(classify.NilpotencyMismatch):
        is_nilpotent(symmetric(3).whole)


def test_sylow_subgroup_examples(get_lattice):
    P = sylow_subgroup(cyclic(6), 3)
    assert P.order == 3
    S4 = symmetric(4)
    P2 = sylow_subgroup(S4, 2)
    assert P2.order == 8
    L = enumerate_subgroups(S4)
    assert max(H.order for H in L if p_part(H.order, 2) == H.order) == 8
    V = sylow_subgroup(alternating(5), 2)
    assert V.order == 4
    assert all(p.cycle_type() in ([2, 2], []) for p in V.permutations())
    assert sylow_subgroup(cyclic(9), 2).order == 1


def test_sylow_subgroup_of_subgroup(get_lattice):
    G, L = get_lattice("S4")
    for H in L:
        for p, _ in factorize(H.order):
            P = sylow_subgroup(H, p)
            assert P <= H
            assert P.order == p_part(H.order, p)


def test_sylow_system_examples():
    Z12 = cyclic(12)
    sys12 = sylow_system(Z12, enumerate_subgroups(Z12))
    assert sorted(sys12.prime_map) == [2, 3]
    assert all(e.is_normal and e.count == 1 for e in sys12)

    S3 = symmetric(3)
    s = sylow_system(S3, enumerate_subgroups(S3))
    assert s[3].is_normal and s[3].count == 1
    assert not s[2].is_normal and s[2].count == 3

    S4 = symmetric(4)
    s = sylow_system(S4, enumerate_subgroups(S4))
    assert s[2].count == 3 and s[3].count == 4


SUITE_LE_120 = [d.name for d in default_suite() if d.expected_order <= 120]


@pytest.mark.parametrize("name", [d.name for d in default_suite()])
def test_sylow_invariants(get_lattice, name):
    G, L = get_lattice(name)
    for e in sylow_system(G, L):
        assert e.order == p_part(G.order, e.prime)
        assert e.count % e.prime == 1
        assert (G.order // e.order) % e.count == 0
        assert e.is_normal == (e.count == 1) == is_normal(e.representative)


@pytest.mark.parametrize("name", ["S3", "D12", "A4", "S4", "D8", "C2xC2", "S3xS3"])
def test_nilpotency_matches_element_oracle(get_lattice, name):
    G, L = get_lattice(name)
    for H in L:
        assert is_nilpotent(H) == brute_nilpotent(H.permutations(), G.degree)


@pytest.mark.parametrize("name", SUITE_LE_120)
def test_nilpotent_implies_solvable_and_criteria_agree(get_lattice, name):
    G, L = get_lattice(name)
    for H in L:
        lcs = lower_central_series(H).terminated_trivially
        assert lcs == is_nilpotent_by_sylow(H)
        if lcs:
            assert is_solvable(H)
        D = derived_subgroup(H)
        assert is_normal(D, within=H) if H.order > 1 else True
        if G.order < 60:
            assert is_solvable(H)
