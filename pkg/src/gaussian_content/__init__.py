"""Content ideals of polynomials over ``k[x1..xn]/J`` and the Gaussian property."""

from .coeff import GF, QQ, PrimeFieldElem, field_inverse, normalize_rational
from .content import (
    GaussianVerdict,
    Method,
    NuSequence,
    Status,
    Witness,
    content,
    content_product_defect,
    dedekind_mertens_check,
    find_witness,
    gaussian_generic,
    gaussian_status,
    gaussian_status_domain,
    nu_sequence,
    power_substitution_check,
    squaring_track,
)
from .errors import (
    GaussianContentError,
    InvalidArgument,
    ParseError,
    ResourceLimitError,
    TrivialRingError,
    UnsupportedInput,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    colength,
    colon,
    ideal_equal,
    intersect,
    is_member,
    normal_form,
    radical_member,
)
from .parsing import parse_poly, parse_poly_list, parse_ring
from .poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    even_odd_split,
    negate_main_var,
    permute_coefficients,
    poly_arith,
    substitute_power,
)
from .rings import (
    FractionalIdeal,
    LocalityWitness,
    RingSpec,
    fractional_inverse,
    ideal_power,
    ideal_product,
    is_invertible,
    make_quotient,
    min_generators_greedy,
    min_generators_local,
)

__version__ = "0.1.0"
