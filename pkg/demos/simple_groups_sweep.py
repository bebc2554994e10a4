"""
Intersection operators on non-solvable groups
=============================================

Compute Sylow systems and run every intersection operator on the
non-solvable groups of the built-in suite.
"""

import time

from grouplab import catalog, classify, lattice, theorems

for name in ["A5", "PSL(2,7)", "A5xC7"]:
    start = time.perf_counter()
    G = catalog.build(catalog.preset(name))
    L = lattice.enumerate_subgroups(G)
    print(f"{name}: order {G.order}, {len(L.subgroups)} subgroups")

    # Sylow counts satisfy n_p = 1 mod p
    for entry in classify.sylow_system(G, L):
        print(f"  p={entry.prime}: order {entry.order}, n_p={entry.count}")

    result = theorems.verify_group(G, L)
    for report in result.reports:
        print(f"  {report.theorem:9s} family {report.family_size:3d} "
              f"intersection {report.intersection_order}")
    print(f"  violations: {len(result.violations)}  ({time.perf_counter() - start:.2f} s)")
