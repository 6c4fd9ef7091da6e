"""Exact twisted Hurwitz numbers by three independent models.

Enumeration of transposition sequences, iteration of the twisted
cut-and-join operator on power sums, and the zonal-polynomial closed form,
plus a combinatorial model of ribbon-glued surfaces.
"""

from .errors import DegeneracyError, DomainError, ResourceError
from .hurwitz import HurwitzCount, TranspositionSequence, enumerate_hurwitz, hurwitz_enumerated
from .jack import JackPolynomial, hurwitz_by_zonal, jack_polynomial, verify_cauchy, zonal
from .partitions import Partition, hook_products, lb_eigenvalue, parse_partition, partitions_of
from .permutations import Permutation, Transposition, classify_twisted, count_b_twisted, doubled_type
from .surgery import Gluing, RibbonDecomposition, SurfaceReport, analyze, count_decompositions, parse_word
from .symfunc import PSeries, apply_twisted_cutjoin, hurwitz_by_cutjoin

__all__ = [
    "DegeneracyError", "DomainError", "ResourceError",
    "HurwitzCount", "TranspositionSequence", "enumerate_hurwitz", "hurwitz_enumerated",
    "JackPolynomial", "hurwitz_by_zonal", "jack_polynomial", "verify_cauchy", "zonal",
    "Partition", "hook_products", "lb_eigenvalue", "parse_partition", "partitions_of",
    "Permutation", "Transposition", "classify_twisted", "count_b_twisted", "doubled_type",
    "Gluing", "RibbonDecomposition", "SurfaceReport", "analyze", "count_decompositions", "parse_word",
    "PSeries", "apply_twisted_cutjoin", "hurwitz_by_cutjoin",
]
