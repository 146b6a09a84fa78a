"""vvkit: exact commutative algebra for Jacobian ideals of plane points.

Core layers: polynomials over Q (`poly`), Buchberger kernel
(`groebner`), ideal algebra (`ideals`), Hilbert series (`hilbert`),
point configurations (`geometry`), torsion of the Valabrega-Valla
module and Rees relation type (`vava`), and a claim registry plus CLI
(`claims`, `cli`).
"""

from .poly import (DEGREVLEX, LEX, PLANE, MonomialOrder, ParseError,
                   Polynomial, PolyRing, RingMismatchError, compare_monomials,
                   elimination_order, parse_polynomial, ring)
from .groebner import (GroebnerBasis, MonomialIdeal, initial_ideal,
                       is_groebner_basis, normal_form, reduced_groebner_basis)
from .ideals import Ideal, minimal_generators_mod
from .hilbert import HilbertSeries, hilbert_function, hilbert_series
from .geometry import (ConfigClass, JacobianData, PointConfiguration,
                       ProjectivePoint, classify_config, conic_through,
                       glp_binomial_generators, ideal_of_points, jacobian,
                       jacobian_of_points, point_ideal, sample_config)
from .vava import (ReesPresentation, VVReport, mpower_in_ideal, relation_type,
                   vv_piece, vv_torsion_free, vv_witness)

__version__ = "0.1.0"

__all__ = [
    "DEGREVLEX", "LEX", "PLANE", "MonomialOrder", "ParseError", "Polynomial",
    "PolyRing", "RingMismatchError", "compare_monomials", "elimination_order",
    "parse_polynomial", "ring", "GroebnerBasis", "MonomialIdeal",
    "initial_ideal", "is_groebner_basis", "normal_form",
    "reduced_groebner_basis", "Ideal", "minimal_generators_mod",
    "HilbertSeries", "hilbert_function", "hilbert_series", "ConfigClass",
    "JacobianData", "PointConfiguration", "ProjectivePoint", "classify_config",
    "conic_through", "glp_binomial_generators", "ideal_of_points", "jacobian",
    "jacobian_of_points", "point_ideal", "sample_config", "ReesPresentation",
    "VVReport", "mpower_in_ideal", "relation_type", "vv_piece",
    "vv_torsion_free", "vv_witness",
]
