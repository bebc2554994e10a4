"""
Maximal subgroups of the dihedral group of order 12
===================================================

Walk through the subgroup lattice of D12 and intersect the maximal
subgroups that are not nilpotent.
"""

from grouplab import catalog, lattice, theorems
from grouplab.perm import format_cycles

G = catalog.build(catalog.preset("D12"))
print(G.name, "has order", G.order)
print("generators:", [format_cycles(g) for g in G.generators])

# every subgroup, ordered by size
L = lattice.enumerate_subgroups(G)
print(len(L.subgroups), "subgroups,", len(L.maximal), "of them maximal")

for M in L.maximal:
    print("  maximal of order", M.order, "normal" if lattice.is_normal(M) else "")

# the Frattini subgroup is trivial here
print("Frattini order:", lattice.frattini(L).order)

# the non-nilpotent maximals meet in the rotations of order 3
r = theorems.run_theorem(G, L, "nonnilpotent_maximal")
print("family size", r.family_size, "intersection order", r.intersection_order)
print("intersection:", sorted(format_cycles(p) for p in r.intersection.permutations()))
