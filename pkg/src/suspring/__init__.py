"""Exact arithmetic and geometry of suspension rings R[u,v]/(uv - f).

The package decides, for suspensions over rational polynomial rings:
divisibility and primality of elements, unique factorization, divisor
class groups via Smith normal form, Jacobian smoothness via Groebner
bases, and cyclicity of finitely presented modules via Fitting ideals.
"""

from .classgroup import (
    AbelianGroupPresentation,
    ClassGroupResult,
    ExactSequenceReport,
    FormalDivisor,
    IntMatrix,
    class_group,
    cokernel,
    det,
    exact_sequence_report,
    smith_normal_form,
)
from .errors import (
    ConsistencyError,
    ExprSyntaxError,
    PreconditionError,
    ResourceLimit,
    RingMismatch,
    SuspError,
    UnitF,
    UnknownVariable,
    Unsupported,
    ZeroF,
)
from .factor import (
    Factorization,
    factor_multivariate,
    factor_univariate,
    is_irreducible,
    newton_indecomposable,
)
from .geometry import (
    GroebnerBasis,
    SmoothnessResult,
    SuspensionReport,
    certify_groebner,
    groebner,
    hypersurface_smooth,
    ideal_contains_one,
    suspension_report,
)
from .modulecheck import (
    PresentationMatrix,
    Section5Report,
    can_be_generated_by,
    fitting_ideal,
    section5_report,
)
from .polyring import (
    MultiPoly,
    RingSpec,
    normalized,
    poly_arith,
    poly_derivative,
    poly_eval,
    poly_exact_divide,
    poly_gcd,
    poly_str,
    unit_normal,
)
from .susp import (
    NotDivisible,
    NotUFD,
    PrimalityReport,
    SuspElem,
    SuspFactorization,
    SuspTower,
    certify_prime,
    divides_u,
    divides_v,
    factor_susp,
    is_irreducible_base_elem,
    is_prime_uvf,
    is_unit,
    reconstruct_from_fractions,
    susp_components,
    susp_exact_divide,
    susp_mul,
    susp_str,
    tower_new,
    validate_domain,
)

__all__ = [
    "AbelianGroupPresentation",
    "ClassGroupResult",
    "ConsistencyError",
    "ExactSequenceReport",
    "ExprSyntaxError",
    "Factorization",
    "FormalDivisor",
    "GroebnerBasis",
    "IntMatrix",
    "MultiPoly",
    "NotDivisible",
    "NotUFD",
    "PreconditionError",
    "PresentationMatrix",
    "PrimalityReport",
    "ResourceLimit",
    "RingMismatch",
    "RingSpec",
    "Section5Report",
    "SmoothnessResult",
    "SuspElem",
    "SuspError",
    "SuspFactorization",
    "SuspTower",
    "SuspensionReport",
    "UnitF",
    "UnknownVariable",
    "Unsupported",
    "ZeroF",
    "can_be_generated_by",
    "certify_groebner",
    "certify_prime",
    "class_group",
    "cokernel",
    "det",
    "divides_u",
    "divides_v",
    "exact_sequence_report",
    "factor_multivariate",
    "factor_susp",
    "factor_univariate",
    "fitting_ideal",
    "groebner",
    "hypersurface_smooth",
    "ideal_contains_one",
    "is_irreducible",
    "is_irreducible_base_elem",
    "is_prime_uvf",
    "is_unit",
    "newton_indecomposable",
    "normalized",
    "poly_arith",
    "poly_derivative",
    "poly_eval",
    "poly_exact_divide",
    "poly_gcd",
    "poly_str",
    "reconstruct_from_fractions",
    "section5_report",
    "smith_normal_form",
    "susp_components",
    "susp_exact_divide",
    "susp_mul",
    "susp_str",
    "suspension_report",
    "tower_new",
    "unit_normal",
    "validate_domain",
]
