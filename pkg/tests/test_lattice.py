import pytest

from grouplab.catalog import alternating, cyclic, default_suite, build
from grouplab.classify import sylow_system
from grouplab.group import closure_of, generate
from grouplab.lattice import (LatticeCapExceeded, conjugate_subgroup, enumerate_subgroups,
                              frattini, intersect, is_normal, maximal_subgroups, normalizer,
                              subgroup_conjugacy_classes)
from grouplab.classify import is_nilpotent
from grouplab.perm import parse_cycles

from oracles import brute_normalizer, powerset_subgroups, small_generated_subgroups

SMALL = [d.name for d in default_suite() if d.expected_order <= 16]
UP_TO_24 = [d.name for d in default_suite() if 16 < d.expected_order <= 24]
MEDIUM = ["D12", "S4", "A4", "S3xS3", "D24", "A5", "C12"]


def as_sets(L):
    return {frozenset(H.permutations()) for H in L}


def brute_maximal_count(subsets, order):
    proper = [s for s in subsets if len(s) < order]
    return sum(1 for s in proper if not any(s < t for t in proper))


def test_trivial_group():
    L = enumerate_subgroups(generate(3, []))
    assert len(L) == 1
    assert L.maximal == []
    assert frattini(L).order == 1


@pytest.mark.parametrize("name", SMALL)
def test_matches_powerset_oracle(get_lattice, name):
    G, L = get_lattice(name)
    oracle = powerset_subgroups(G.elements)
    assert as_sets(L) == oracle
    assert sum(L.maximal_flags) == brute_maximal_count(oracle, G.order)


@pytest.mark.parametrize("name", UP_TO_24)
def test_matches_three_generator_oracle(get_lattice, name):
    G, L = get_lattice(name)
    assert as_sets(L) == small_generated_subgroups(G.elements, 3)


@pytest.mark.parametrize("name, subgroups, maximal", [
    ("S3", 6, 4), ("D12", 16, 6), ("S4", 30, 8), ("A5", 59, 21),
    ("S5", 156, 22), ("PSL(2,7)", 179, 22), ("A6", 501, 52), ("A5xC7", 118, 22),
])
def test_known_counts(get_lattice, name, subgroups, maximal):
    G, L = get_lattice(name)
    assert len(L) == subgroups
    assert len(maximal_subgroups(L)) == maximal


def test_lattice_invariants(get_lattice):
    for name in MEDIUM:
        G, L = get_lattice(name)
        bits = [H.bits for H in L]
        assert len(set(bits)) == len(bits)
        assert L.subgroups[0].order == 1 and L.subgroups[-1].order == G.order
        assert all(G.order % H.order == 0 for H in L)
        keys = [(H.order, tuple(H.indices)) for H in L]
        assert keys == sorted(keys)


def test_maximal_subgroups_examples(get_lattice):
    L = enumerate_subgroups(cyclic(7))
    assert [M.order for M in L.maximal] == [1]

    G, L = get_lattice("D12")
    maxes = L.maximal
    orders = sorted(M.order for M in maxes)
    assert orders == [4, 4, 4, 6, 6, 6]
    six = [M for M in maxes if M.order == 6]
    cyclic_six = [M for M in six if (G.element_orders[M.indices] == 6).any()]
    assert len(cyclic_six) == 1

    G, L = get_lattice("A5xC7")
    a5 = [M for M in L.maximal if M.order == 60]
    assert len(a5) == 1
    z7 = closure_of(G, [G.index_of[parse_cycles("(6 7 8 9 10 11 12)", 12)]])
    others = [M for M in L.maximal if M.order != 60]
    assert len(others) == 21 and all(z7 <= M for M in others)


def test_is_normal_examples(get_lattice):
    G, L = get_lattice("S3")
    assert is_normal(G.trivial) and is_normal(G.whole)
    assert all(is_normal(H) == (H.order != 2) for H in L)
    G, L = get_lattice("A5xC7")
    a5 = next(M for M in L.maximal if M.order == 60)
    assert is_normal(a5)


def test_normalizer_examples(get_lattice):
    G, L = get_lattice("S3")
    assert normalizer(G.trivial).bits == G.whole.bits
    t = closure_of(G, [G.index_of[parse_cycles("(1 2)", 3)]])
    assert normalizer(t).bits == t.bits
    G, L = get_lattice("A5")
    v4 = [H for H in L if H.order == 4]
    assert len(v4) == 5
    for V in v4:
        N = normalizer(V)
        assert N.order == 12
        assert set(N.permutations()) == brute_normalizer(G.elements, V.permutations())


@pytest.mark.parametrize("name", MEDIUM)
def test_normalizer_properties(get_lattice, name):
    G, L = get_lattice(name)
    for H in L:
        N = normalizer(H)
        assert H <= N
        assert N.bits in L.position
        assert is_normal(H) == (N.bits == G.whole.bits)


def test_intersect_examples(get_lattice):
    G, L = get_lattice("D12")
    assert intersect([G.whole]).bits == G.whole.bits
    nonab6 = [M for M in L.maximal if M.order == 6 and not (G.element_orders[M.indices] == 6).any()]
    assert len(nonab6) == 2
    a = G.index_of[parse_cycles("(1 2 3 4 5 6)", 6)]
    a2 = closure_of(G, [G.table[a, a]])
    assert intersect(nonab6).bits == a2.bits
    fours = [M for M in L.maximal if M.order == 4]
    Z = intersect(fours)
    assert Z.order == 2
    assert set(Z.permutations()) == {parse_cycles("()", 6), parse_cycles("(1 4)(2 5)(3 6)", 6)}
    with pytest.raises(ValueError):
        intersect([])


def test_conjugate_subgroup_examples(get_lattice):
    G, L = get_lattice("S3")
    t = closure_of(G, [G.index_of[parse_cycles("(1 2)", 3)]])
    r = G.index_of[parse_cycles("(1 2 3)", 3)]
    assert conjugate_subgroup(t, 0).bits == t.bits
    C = conjugate_subgroup(t, r)
    assert set(C.permutations()) == {parse_cycles("()", 3), parse_cycles("(2 3)", 3)}
    A3 = next(H for H in L if H.order == 3)
    assert all(conjugate_subgroup(A3, g).bits == A3.bits for g in range(6))


def test_conjugacy_classes_examples(get_lattice):
    G, L = get_lattice("C12")
    assert all(len(c) == 1 for c in subgroup_conjugacy_classes(L))
    G, L = get_lattice("S3")
    order2 = [c for c in subgroup_conjugacy_classes(L) if c[0].order == 2]
    assert [len(c) for c in order2] == [3]
    G, L = get_lattice("A5")
    max_bits = {M.bits for M in L.maximal}
    sizes = sorted(len(c) for c in subgroup_conjugacy_classes(L) if c[0].bits in max_bits)
    assert sizes == [5, 6, 10]


@pytest.mark.parametrize("name", MEDIUM + ["S5"])
def test_orbit_stabilizer(get_lattice, name):
    G, L = get_lattice(name)
    classes = subgroup_conjugacy_classes(L)
    assert sum(len(c) for c in classes) == len(L)
    for c in classes:
        for H in c:
            assert len(c) == G.order // normalizer(H).order


def test_frattini_examples(get_lattice):
    assert frattini(get_lattice("D12")[1]).order == 1
    assert frattini(get_lattice("A5xC7")[1]).order == 1
    G, L = get_lattice("C8")
    F = frattini(L)
    assert F.order == 4


@pytest.mark.parametrize("name", MEDIUM + ["C16", "D16", "C9"])
def test_frattini_normal_nilpotent(get_lattice, name):
    G, L = get_lattice(name)
    F = frattini(L)
    assert is_normal(F)
    assert is_nilpotent(F)


@pytest.mark.parametrize("name", ["S4", "D24", "S3xS3", "A4"])
def test_sylow_normalizer_inside_intersection_normalizer(get_lattice, name):
    G, L = get_lattice(name)
    normals = [H for H in L if is_normal(H)]
    for entry in sylow_system(G, L):
        for P in entry.conjugates:
            for N in normals:
                assert normalizer(P) <= normalizer(intersect([P, N]))


def test_lattice_cap():
    with pytest.raises(LatticeCapExceeded, match="lattice cap exceeded"):
        enumerate_subgroups(alternating(5), subgroup_cap=20)
