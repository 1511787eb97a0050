"""Exact arithmetic for order-2 recurrent sequences.

Ratio sequences of generalized Fibonacci numbers, closed-form convergence
accelerations along arbitrary order-2 index recurrences, the index maps
realized by the secant/Newton/Halley/Householder methods on quadratics, and
period-2 continued fractions with rational partial quotients.  Everything is
computed over Python ints and fractions.Fraction; nothing here is ever
approximate except the final decimal rendering, which is correctly rounded.
"""

from .accel import (
    AccelerationEntry,
    IndexSequenceParams,
    accelerate_general,
    arithmetic_index_accel,
    double_ratio,
    fibonacci_index_accel,
    general_ratio_y,
    ratio_x,
    shift_ratio,
    verify_cubic_fibonacci_identity,
    verify_fkn_identity,
    verify_nested_fibonacci_identity,
)
from .cf import (
    ConvergentRecord,
    PeriodicQuadCF,
    RationalCF,
    convergents_direct,
    convergents_integer,
    method_subsequence,
    quad_cf_convergent,
)
from .core import (
    DEFAULT_INDEX_CAP,
    LinRecSequence,
    Matrix2,
    RecurrenceParams,
    basis_ut,
    companion_power,
    decimated_params,
    fibonacci,
    lucas_v,
    term,
)
from .errors import (
    DegenerateConvergent,
    DegenerateRatio,
    DegenerateStep,
    IndexCapExceeded,
    InverseUnavailable,
    NonRealRoots,
    NoProgress,
    RecurseqError,
)
from .formatting import format_decimal, format_rational, parse_rational
from .roots import (
    QuadraticABC,
    QuadraticPQ,
    approximate_root,
    approximate_root_with_trace,
    halley_index,
    halley_step,
    householder_index,
    householder_step,
    newton_index,
    newton_step,
    secant_index_sequence,
    secant_step,
)

__version__ = "0.1.0"

__all__ = [
    "AccelerationEntry",
    "ConvergentRecord",
    "DEFAULT_INDEX_CAP",
    "DegenerateConvergent",
    "DegenerateRatio",
    "DegenerateStep",
    "IndexCapExceeded",
    "IndexSequenceParams",
    "InverseUnavailable",
    "LinRecSequence",
    "Matrix2",
    "NoProgress",
    "NonRealRoots",
    "PeriodicQuadCF",
    "QuadraticABC",
    "QuadraticPQ",
    "RationalCF",
    "RecurrenceParams",
    "RecurseqError",
    "accelerate_general",
    "approximate_root",
    "approximate_root_with_trace",
    "arithmetic_index_accel",
    "basis_ut",
    "companion_power",
    "convergents_direct",
    "convergents_integer",
    "decimated_params",
    "double_ratio",
    "fibonacci",
    "fibonacci_index_accel",
    "format_decimal",
    "format_rational",
    "general_ratio_y",
    "halley_index",
    "halley_step",
    "householder_index",
    "householder_step",
    "lucas_v",
    "method_subsequence",
    "newton_index",
    "newton_step",
    "parse_rational",
    "quad_cf_convergent",
    "ratio_x",
    "secant_index_sequence",
    "secant_step",
    "shift_ratio",
    "term",
    "verify_cubic_fibonacci_identity",
    "verify_fkn_identity",
    "verify_nested_fibonacci_identity",
]
