"""Bivariate Chebyshev approximation via the two-dimensional FFT.

Build approximants of functions on a rectangle, evaluate, differentiate and
integrate them spectrally, interpolate on the Lobatto grid, and persist
trimmed coefficients as JSON documents.
"""

from .calculus import diff_x, diff_y, integrate
from .chebcore import (
    Cheb2,
    DecayBounds,
    Domain2,
    SampleGrid,
    SparseCoeffs,
    UNIT_SQUARE,
    build_adaptive,
    cheb_basis,
    cheb_t,
    cheb_vector,
    coeffs_by_quadrature,
    coeffs_from_samples,
    decay_bound_excess,
    document_text,
    evaluate_clenshaw,
    evaluate_grid,
    evaluate_matrix,
    load,
    parseval_indicator,
    sample_grid,
    save,
    to_cheb2,
    to_sparse,
    trim,
    truncate,
)
from .errors import (
    ChebError,
    ConvergenceError,
    DomainError,
    EvalError,
    InvalidInputError,
    LexError,
    ParseError,
    SamplingError,
    UnsupportedSizeError,
    ValidationError,
)
from .exprparse import (
    BinOp,
    Call,
    Neg,
    Num,
    Token,
    Var,
    eval_ast,
    parse,
    parse_expression,
    pretty_print,
    tokenize,
)
from .fft2d import dft2_naive, fft2
from .interp import (
    LobattoGrid,
    aliasing_coeffs,
    interp_error_bound_gap,
    lagrange_cheb_coeffs,
    lobatto_grid,
)

__version__ = "0.1.0"
