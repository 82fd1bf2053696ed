"""charcoords: exact character coordinates of cotangent powers and
cotangent numbers in cyclotomic fields, with machine verification of the
closed-form identities relating them to generalized Bernoulli numbers."""

__version__ = "0.1.0"

from .arith import euler_phi
from .bernoulli import (
    BernoulliPolynomial,
    bernoulli_number,
    bernoulli_polynomial,
    generalized_bernoulli,
)
from .characters import (
    CharacterGroup,
    DirichletCharacter,
    character_group,
    enumerate_characters,
    gauss_sum,
)
from .combinatorics import (
    CoeffTable,
    bernoulli_conv_coeff,
    bernoulli_conv_coeff_bruteforce,
    coeff_bridge,
    coeff_table,
    cot_power_coeff,
    stirling_first_unsigned,
)
from .coordinates import (
    CoordReport,
    coord_cotangent_closed,
    coord_definitional,
    coord_one,
    coord_power_closed,
    coord_power_primitive,
    direct_sum_float,
    reconstruct,
)
from .cotangent import (
    CotDerivPoly,
    cot_derivative_poly,
    cotangent_number,
    icot_power,
    icot_value,
)
from .cyclotomic import (
    CycElem,
    FieldMembershipError,
    Rat,
    cyclotomic_polynomial,
    project_to_subfield,
    to_common_order,
)
from .series import (
    LaurentSeries,
    TruncationError,
    bernoulli_conv_coeff_from_series,
    series_icot_half,
    series_one_minus_exp_inv,
    verify_power_decomposition,
    verify_stirling_identity,
)
from .verify import SUITE_NAMES, SuiteConfig, SuiteResult, run_suites

__all__ = [
    "__version__",
    "euler_phi",
    "BernoulliPolynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "generalized_bernoulli",
    "CharacterGroup",
    "DirichletCharacter",
    "character_group",
    "enumerate_characters",
    "gauss_sum",
    "CoeffTable",
    "bernoulli_conv_coeff",
    "bernoulli_conv_coeff_bruteforce",
    "coeff_bridge",
    "coeff_table",
    "cot_power_coeff",
    "stirling_first_unsigned",
    "CoordReport",
    "coord_cotangent_closed",
    "coord_definitional",
    "coord_one",
    "coord_power_closed",
    "coord_power_primitive",
    "direct_sum_float",
    "reconstruct",
    "CotDerivPoly",
    "cot_derivative_poly",
    "cotangent_number",
    "icot_power",
    "icot_value",
    "CycElem",
    "FieldMembershipError",
    "Rat",
    "cyclotomic_polynomial",
    "project_to_subfield",
    "to_common_order",
    "LaurentSeries",
    "TruncationError",
    "bernoulli_conv_coeff_from_series",
    "series_icot_half",
    "series_one_minus_exp_inv",
    "verify_power_decomposition",
    "verify_stirling_identity",
    "SUITE_NAMES",
    "SuiteConfig",
    "SuiteResult",
    "run_suites",
]
