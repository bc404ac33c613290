"""Exact toric verification of the sign-diagonal chart atlases.

Subpackages: exactlin (integer/rational linear algebra), cones (polyhedral
primitives), geom (lattices, decompositions, core triangulations), grobner
(weight orders and reduced bases), toricideal (binomial relation ideals),
ghilb (chart catalogs and certificates), cli (command-line front end).
"""

from .geom import (
    Cell,
    Decomposition,
    LatticeContext,
    apply_permutation,
    canonical_coefficients,
    dual_monoid_generators,
    enumerate_core_triangulations,
    euler_number,
    flop_graph,
    integral_points_in_delta,
    is_crepant,
    is_smooth,
    lattice_context,
    lattice_member,
    primitive_multiple,
    refines,
    standard_decomposition,
    validate_decomposition,
)
from .ghilb import Chart, chart_catalog, ideal_at, transition, verify_chart
from .grobner import GroebnerBasis, Poly, WeightOrder, buchberger, staircase
from .toricideal import check_relation, relation_lattice, toric_ideal

__version__ = "0.1.0"
