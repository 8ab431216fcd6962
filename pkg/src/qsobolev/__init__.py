"""q-Hermite I polynomials, their Sobolev-type mass-point perturbation,
and the degree-lowering operator, over exact rational arithmetic."""

from .algebra import (
    EXACT,
    FLOAT,
    DivisibilityError,
    ModeError,
    Poly,
    QContext,
    RationalFn,
    Scalar,
    ratfn_normalize,
)
from .kernels import KernelCoeffs, KernelStructureError, coeff_AB, coeff_CD, kernel_coeffs, kernel11_at
from .ladder import AnnihilationOperator, LadderError, residual_with
from .qcalc import (
    WeightEval,
    WeightTable,
    jackson_weighted_integral,
    q_binomial,
    q_derivative,
    q_derivative_inv,
    q_derivative_iter,
    q_factorial,
    q_falling,
    q_number,
    q_number_ext,
    q_pochhammer,
    q_pochhammer_inf,
    q_sub_power,
    q_taylor,
    q_taylor_reconstruct,
    ratfn_q_derivative,
    weight_at,
)
from .qhermite import HermiteFamily, NormConstant
from .sobolev import (
    EFFECTIVE,
    RAW,
    ConnectionCoeffs,
    SobolevFamily,
    SobolevParams,
    expand_in_H,
)

__version__ = "0.1.0"

__all__ = [
    "EXACT",
    "FLOAT",
    "EFFECTIVE",
    "RAW",
    "AnnihilationOperator",
    "ConnectionCoeffs",
    "DivisibilityError",
    "HermiteFamily",
    "KernelCoeffs",
    "KernelStructureError",
    "LadderError",
    "ModeError",
    "NormConstant",
    "Poly",
    "QContext",
    "RationalFn",
    "Scalar",
    "SobolevFamily",
    "SobolevParams",
    "WeightEval",
    "WeightTable",
    "coeff_AB",
    "coeff_CD",
    "expand_in_H",
    "jackson_weighted_integral",
    "kernel11_at",
    "kernel_coeffs",
    "q_binomial",
    "q_derivative",
    "q_derivative_inv",
    "q_derivative_iter",
    "q_factorial",
    "q_falling",
    "q_number",
    "q_number_ext",
    "q_pochhammer",
    "q_pochhammer_inf",
    "q_sub_power",
    "q_taylor",
    "q_taylor_reconstruct",
    "ratfn_normalize",
    "ratfn_q_derivative",
    "residual_with",
    "weight_at",
]
