"""Exact nonlocal discretization of ODEs on the integer lattice."""

from .errors import (
    ArityZero,
    ConstraintViolation,
    GammaPole,
    IndexOutOfRange,
    LengthMismatch,
    NotADeltaOperator,
    NotForwardSolvable,
    NotInvertible,
    OrderTooLarge,
    PochhammerPole,
    RationalParseError,
    SchemaError,
    SingularAtOrigin,
    SingularSystem,
    StarLatticeError,
)
from .rational import Rational, as_rational, format_rational, parse_rational
from .sequences import FourierSeq, LatticeSeq, TaylorCoeffs
from .transforms import (
    falling_factorial,
    forward_transform,
    inverse_transform,
    recip_factorial,
    taylor_to_lattice,
)
from .deltaops import (
    FORWARD_DIFFERENCE,
    SYMMETRIC_DIFFERENCE,
    BasicSequence,
    DeltaStencil,
    FormalSeries,
    apply_stencil,
    basic_sequence,
    series_inverse,
    validate_stencil,
)
from .star import (
    StarKernelArgs,
    monomial_star,
    star_kernel_bruteforce,
    star_kernel_closed,
    star_multiply,
    star_power,
    unit_sequence,
)
from .odes import (
    LinearOde,
    NonlinearOde,
    PolyCoeff,
    delta_power,
    lin_residual,
    lin_residuals,
    lin_step,
    local_stencil,
    nonlin_residual,
    nonlin_residuals,
    nonlin_step,
    taylor_solution_linear,
    taylor_solution_nonlinear,
)
from .fourier import ConstNonlinearOde, fourier_solution, fourier_step
from .galois import (
    ConstLinearEq,
    FundamentalSystem,
    QuadExt,
    RootDatum,
    build_fundamental_system,
    char_roots,
    map_solution,
    modified_wronskian,
    system_from_sequences,
    verify_fundamental,
)
from .corpus import (
    CorpusCase,
    damped_case,
    gauss_sum,
    gaussian_case,
    harmonic_case,
    hermite_case,
    hypergeometric_case,
    jacobi_case,
    riccati_case,
    run_corpus,
)

__all__ = [
    # errors
    "ArityZero",
    "ConstraintViolation",
    "GammaPole",
    "IndexOutOfRange",
    "LengthMismatch",
    "NotADeltaOperator",
    "NotForwardSolvable",
    "NotInvertible",
    "OrderTooLarge",
    "PochhammerPole",
    "RationalParseError",
    "SchemaError",
    "SingularAtOrigin",
    "SingularSystem",
    "StarLatticeError",
    # scalars and sequences
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "FourierSeq",
    "LatticeSeq",
    "TaylorCoeffs",
    # transforms
    "falling_factorial",
    "forward_transform",
    "inverse_transform",
    "recip_factorial",
    "taylor_to_lattice",
    # difference stencils
    "FORWARD_DIFFERENCE",
    "SYMMETRIC_DIFFERENCE",
    "BasicSequence",
    "DeltaStencil",
    "FormalSeries",
    "apply_stencil",
    "basic_sequence",
    "series_inverse",
    "validate_stencil",
    # star product
    "StarKernelArgs",
    "monomial_star",
    "star_kernel_bruteforce",
    "star_kernel_closed",
    "star_multiply",
    "star_power",
    "unit_sequence",
    # discrete equations
    "LinearOde",
    "NonlinearOde",
    "PolyCoeff",
    "delta_power",
    "lin_residual",
    "lin_residuals",
    "lin_step",
    "local_stencil",
    "nonlin_residual",
    "nonlin_residuals",
    "nonlin_step",
    "taylor_solution_linear",
    "taylor_solution_nonlinear",
    # transform-domain dynamics
    "ConstNonlinearOde",
    "fourier_solution",
    "fourier_step",
    # fundamental systems
    "ConstLinearEq",
    "FundamentalSystem",
    "QuadExt",
    "RootDatum",
    "build_fundamental_system",
    "char_roots",
    "map_solution",
    "modified_wronskian",
    "system_from_sequences",
    "verify_fundamental",
    # example corpus
    "CorpusCase",
    "damped_case",
    "gauss_sum",
    "gaussian_case",
    "harmonic_case",
    "hermite_case",
    "hypergeometric_case",
    "jacobi_case",
    "riccati_case",
    "run_corpus",
]
