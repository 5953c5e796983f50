"""Exact degree-distribution polynomials for Cayley graph equivalence classes.

Three independent routes to the same censuses: a Burnside/Möbius engine
over any finite group table, literal closed forms for the cyclic/dihedral
families that admit them, and a brute-force orbit oracle.
"""

from .burnside import (
    count_equiv,
    count_weak,
    fix_poly_direct,
    fix_poly_moebius,
    psi_equiv,
    psi_weak,
    sym_fixed_poly,
)
from .groups import (
    Automorphism,
    ConnectionSet,
    GroupTable,
    ResourceLimitError,
    Subgroup,
    automorphisms,
    cyclic,
    dihedral,
    direct_product,
    from_table,
    from_table_text,
    generates,
    inner_automorphisms,
    lattice_moebius,
    subgroup_lattice,
    subgroups,
    symmetric_blocks,
)
from .numtheory import divisors, euler_phi, factorize, gcd_lcm, moebius_int
from .oracle import Orbit, OrbitCensus, orbit_census, psi_from_census
from .poly import ExactDivisionError, IntPoly, parse_text

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "ConnectionSet",
    "ExactDivisionError",
    "GroupTable",
    "IntPoly",
    "Orbit",
    "OrbitCensus",
    "ResourceLimitError",
    "Subgroup",
    "automorphisms",
    "count_equiv",
    "count_weak",
    "cyclic",
    "dihedral",
    "direct_product",
    "divisors",
    "euler_phi",
    "factorize",
    "fix_poly_direct",
    "fix_poly_moebius",
    "from_table",
    "from_table_text",
    "gcd_lcm",
    "generates",
    "inner_automorphisms",
    "lattice_moebius",
    "moebius_int",
    "orbit_census",
    "parse_text",
    "psi_equiv",
    "psi_from_census",
    "psi_weak",
    "subgroup_lattice",
    "subgroups",
    "sym_fixed_poly",
    "symmetric_blocks",
    "__version__",
]
