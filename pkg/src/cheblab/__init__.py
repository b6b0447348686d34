"""cheblab: computable ingredients of effective Chebotarev machinery.

Exact character tables, AHC subgroup certification and optimization,
Artin conductor and Euler-factor identities, Schur/sieve coefficient
combinatorics, the smoothing kernel, and prime-splitting censuses for
concrete Galois extensions.
"""

from .cyclotomic import Cyclo
from .groups import (Group, GroupSpec, build_group, parse_spec, subgroups,
                     sylow, structure_flags)
from .chartab import (Character, CharacterTable, character_table,
                      inner_product, tensor_decompose, induce, restrict,
                      sn_degree_stats)
from .ahc import AhcCertificate, best_subgroup, certify_ahc
from .coeffs import InertiaScenario, LocalRoots, RamificationFiltration
from .census import NumberFieldSpec, least_prime

__version__ = "0.1.0"
