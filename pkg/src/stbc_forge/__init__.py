"""Single-symbol decodable space-time block codes with unitary weights.

Construction of maximal-rate codes from anticommuting matrix families,
exact verification of the orthogonality conditions, coding-gain
evaluation, and Rayleigh-fading Monte Carlo simulation.
"""

from .clifford import (
    AnticommutingFamily,
    FamilyReport,
    generate_family,
    product_subset,
    products_commute,
    square_sign,
    verify_family,
)
from .codes import (
    LinearDispersionCode,
    build_ciod4,
    build_max_rate_ussd,
    build_square_cod,
    code_from_json_dict,
    code_to_json_dict,
)
from .codinggain import (
    MinDetResult,
    dispersion_gain,
    eigen_split,
    min_det_bruteforce,
    min_det_closed_form,
)
from .constellations import (
    Constellation,
    DiversityReport,
    ciod_optimal_angle,
    diversity_check,
    optimal_angle,
    rotated_qam,
    special_8qam,
)
from .gmatrix import EXACT, FLOAT, GaussianMatrix, real_rank
from .simulator import (
    CerPoint,
    CerReport,
    SimConfig,
    channel_sample,
    ml_decode_bruteforce,
    simulate_cer,
    ssd_decode,
    transmit_scale,
    wilson_halfwidth,
)
from .verifier import (
    CheckResult,
    ClassificationReport,
    check_cod,
    check_normalized_structure,
    check_ssd,
    check_unitary_weight,
    classify,
    normalize,
)

__version__ = "0.1.0"

__all__ = [
    "AnticommutingFamily",
    "CerPoint",
    "CerReport",
    "CheckResult",
    "ClassificationReport",
    "Constellation",
    "DiversityReport",
    "EXACT",
    "FLOAT",
    "FamilyReport",
    "GaussianMatrix",
    "LinearDispersionCode",
    "MinDetResult",
    "SimConfig",
    "build_ciod4",
    "build_max_rate_ussd",
    "build_square_cod",
    "channel_sample",
    "check_cod",
    "check_normalized_structure",
    "check_ssd",
    "check_unitary_weight",
    "ciod_optimal_angle",
    "classify",
    "code_from_json_dict",
    "code_to_json_dict",
    "dispersion_gain",
    "diversity_check",
    "eigen_split",
    "generate_family",
    "min_det_bruteforce",
    "min_det_closed_form",
    "ml_decode_bruteforce",
    "normalize",
    "optimal_angle",
    "product_subset",
    "products_commute",
    "real_rank",
    "rotated_qam",
    "simulate_cer",
    "special_8qam",
    "square_sign",
    "ssd_decode",
    "transmit_scale",
    "verify_family",
    "wilson_halfwidth",
]
