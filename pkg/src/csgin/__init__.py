"""Generic initial ideals and Cartwright-Sturmfels ideals in multigraded polynomial rings."""

from .field import GF, QQ, parse_field
from .ring import GREVLEX, LEX, BlockRing, MultiPoly, TermOrder, elimination_order, weight_order
from .kernel import BACKEND, available_backends
from .groebner import Ideal, colon, eliminate, intersect, is_groebner_basis, saturate
from .monomial import MonomialIdeal, borel_prime, intersect_all
from .gin import GenericityError, gin, is_CS, is_CS_star
from .hilbert import LaurentZPoly, g_multidegree, k_polynomial, multidegree
from .homology import SimplicialComplex, betti_squarefree, conjecture_check_monomial, local_cohomology_table
from .edge import Graph, binomial_edge_ideal, path_gin
from .closure import LinearSpaceInput, gin_from_DV, jhom_determinantal, jhom_saturation, jstar
from .multiview import CameraSystem, multiview_segre_route, multiview_star_route

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BlockRing", "CameraSystem", "GF", "GREVLEX", "GenericityError", "Graph", "Ideal",
    "LEX", "LaurentZPoly", "LinearSpaceInput", "MonomialIdeal", "MultiPoly", "QQ", "SimplicialComplex",
    "TermOrder", "available_backends", "betti_squarefree", "binomial_edge_ideal", "borel_prime", "colon",
    "conjecture_check_monomial", "eliminate", "elimination_order", "g_multidegree", "gin", "gin_from_DV",
    "intersect", "intersect_all", "is_CS", "is_CS_star", "is_groebner_basis", "jhom_determinantal",
    "jhom_saturation", "jstar", "k_polynomial", "local_cohomology_table", "multidegree",
    "multiview_segre_route", "multiview_star_route", "parse_field", "path_gin", "saturate", "weight_order",
]
