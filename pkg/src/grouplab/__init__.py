"""Finite permutation groups, subgroup lattices, and maximal-subgroup intersection checks."""

__version__ = "0.1.0"

from .perm import (CycleParseError, Permutation, compose, element_order, format_cycles,
                   identity, inverse, parse_cycles)
from .group import (DEFAULT_ORDER_CAP, ElementSet, FiniteGroup, OrderCapExceeded, Subgroup,
                    closure_of, conjugate_element, direct_product, generate)
from .lattice import (Lattice, LatticeCapExceeded, conjugate_subgroup, enumerate_subgroups,
                      frattini, intersect, is_normal, maximal_subgroups, normalizer,
                      subgroup_conjugacy_classes)
from .classify import (SeriesReport, SylowSystem, derived_subgroup, derived_series, factorize,
                       is_nilpotent, is_solvable, lower_central_series, sylow_subgroup,
                       sylow_system)
from .theorems import (FamilySpec, THEOREMS, TheoremReport, existence_check_th2,
                       family_members, frattini_argument_check, literature_property_checks,
                       nilpotent_maximal_structure_check, run_theorem, verify_group)
from .catalog import (GroupDef, alternating, build, cyclic, default_suite, dihedral,
                      load_group_file, preset, symmetric)
