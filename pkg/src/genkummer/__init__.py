"""Hodge-theoretic shadows of the Chow motive of generalized Kummer varieties.

The motive of ``K^[n]`` splits along the strata of the Hilbert-Chow map into
Tate-twisted motives of quotients of abelian varieties.  This package builds
those decompositions symbolically and realizes them as Hodge diamonds.
"""

__version__ = "0.1.0"

from .graded import (
    HodgeDiamond,
    InexactDivisionError,
    diamond_of_abelian_surface,
    direct_sum,
    exact_divide,
    numerical_invariants,
    sym_power,
    symmetric_product_series,
    tate_twist,
    tensor,
)
from .kummer import (
    kummer_diamond,
    kummer_diamond_via_corollary,
    kummer_diamond_via_theorem,
    product_motive,
    strata_catalog,
    stratum_motive,
    verify_suite,
)
from .motive import MotiveExpr, MotiveTerm, motive_of_sym_quotient, realize
from .partitions import Partition, enumerate_partitions, gcd_of_parts, refines, torsion_component_count
