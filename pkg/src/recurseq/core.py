"""Exact order-2 linear recurrences, their U/T basis pair, and companion-matrix powers.

All arithmetic is over Python's arbitrary-precision integers and
``fractions.Fraction``, so every identity exposed here is an exact equality,
never an approximation.  The two basis sequences

    U = W(0, 1, p, q)   and   T = W(1, 0, p, q)

span every sequence with the same coefficients: a_n = a1*U_n + a0*T_n.
Their values are packed into powers of the companion matrix
M = [[0, 1], [-q, p]], which is what makes O(log n) evaluation possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import IndexCapExceeded, InverseUnavailable

Exact = Union[int, Fraction]

#: Default bound on |index| for any sequence evaluation; see IndexCapExceeded.
DEFAULT_INDEX_CAP = 10_000_000


def _check_index(n: int, max_index: int | None) -> None:
    cap = DEFAULT_INDEX_CAP if max_index is None else max_index
    if abs(n) > cap:
        raise IndexCapExceeded(f"index {n} exceeds the evaluation cap {cap}")


@dataclass(frozen=True)
class RecurrenceParams:
    """Coefficients (p, q) of the recurrence a_n = p*a_{n-1} - q*a_{n-2}.

    The associated characteristic polynomial is t^2 - p*t + q.  Note the
    sign convention: the Fibonacci numbers are (p, q) = (1, -1).
    """

    p: int
    q: int


@dataclass(frozen=True)
class LinRecSequence:
    """Initial conditions (a0, a1) together with recurrence coefficients."""

    a0: int
    a1: int
    params: RecurrenceParams

    def term(self, n: int, max_index: int | None = None) -> int:
        return term(self, n, max_index=max_index)


@dataclass(frozen=True)
class Matrix2:
    """A 2x2 matrix with exact entries (ints or Fractions)."""

    e11: Exact
    e12: Exact
    e21: Exact
    e22: Exact

    @staticmethod
    def identity() -> "Matrix2":
        return Matrix2(1, 0, 0, 1)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def det(self) -> Exact:
        return self.e11 * self.e22 - self.e12 * self.e21


def _mat_mul_raw(a, b):
    a11, a12, a21, a22 = a
    b11, b12, b21, b22 = b
    return (
        a11 * b11 + a12 * b21,
        a11 * b12 + a12 * b22,
        a21 * b11 + a22 * b21,
        a21 * b12 + a22 * b22,
    )


def _mat_pow_raw(m, n):
    """n-th power (n >= 0) of a 2x2 matrix given as a 4-tuple, by squaring."""
    result = (1, 0, 0, 1)
    base = m
    while n:
        if n & 1:
            result = _mat_mul_raw(result, base)
        n >>= 1
        if n:
            base = _mat_mul_raw(base, base)
    return result


def _basis_ut_raw(p: Exact, q: Exact, n: int) -> tuple[Exact, Exact]:
    """(U_n, T_n) for n >= 0, valid for integer or rational coefficients."""
    t11, t12, _, _ = _mat_pow_raw((0, 1, -q, p), n)
    return t12, t11


def companion_power(
    params: RecurrenceParams, n: int, max_index: int | None = None
) -> Matrix2:
    """M^n for the companion matrix M = [[0, 1], [-q, p]], any integer n.

    For n >= 0 the entries are the integers [[T_n, U_n], [T_{n+1}, U_{n+1}]].
    Negative powers require q != 0 (q is the determinant of M) and come out
    as Fractions with denominator q^|n|.
    """
    _check_index(n, max_index)
    p, q = params.p, params.q
    if n >= 0:
        t11, t12, t21, t22 = _mat_pow_raw((0, 1, -q, p), n)
        return Matrix2(t11, t12, t21, t22)
    if q == 0:
        raise InverseUnavailable(
            "negative companion powers need q != 0 (the matrix is singular)"
        )
    k = -n
    u_k, t_k = _basis_ut_raw(p, q, k)
    denom = q**k
    # M^{-k} = (1/q^k) [[T_k + p U_k, -U_k], [q U_k, T_k]]
    return Matrix2(
        Fraction(t_k + p * u_k, denom),
        Fraction(-u_k, denom),
        Fraction(q * u_k, denom),
        Fraction(t_k, denom),
    )


def basis_ut(
    params: RecurrenceParams, n: int, max_index: int | None = None
) -> tuple[Exact, Exact]:
    """The pair (U_n, T_n); integers for n >= 0, Fractions for n < 0.

    Negative indices extend the sequences through M^n = [[T_n, U_n], ...],
    which matches the closed form U_n = (alpha^n - beta^n)/(alpha - beta)
    whenever the characteristic roots are distinct.
    """
    m = companion_power(params, n, max_index)
    return m.e12, m.e11


def term(seq: LinRecSequence, n: int, max_index: int | None = None) -> int:
    """Exact n-th term of the sequence, in O(log n) big-integer products."""
    if n < 0:
        raise ValueError(f"term index must be nonnegative, got {n}")
    u_n, t_n = basis_ut(seq.params, n, max_index)
    return seq.a1 * u_n + seq.a0 * t_n


def lucas_v(params: RecurrenceParams, n: int, max_index: int | None = None) -> int:
    """V_n of the companion Lucas sequence V = W(2, p, p, q)."""
    if n < 0:
        raise ValueError(f"Lucas index must be nonnegative, got {n}")
    u_n, t_n = basis_ut(params, n, max_index)
    return params.p * u_n + 2 * t_n


def decimated_params(
    params: RecurrenceParams, m: int, max_index: int | None = None
) -> RecurrenceParams:
    """Coefficients (V_m, q^m) of the m-step decimated basis sequences.

    The sequences U' = W(0, 1, V_m, q^m) and T' = W(1, 0, V_m, q^m) satisfy
    U_{mn} = U_m * U'_n and T_{mn} = T'_n + T_m * U'_n for all n >= 0, which
    is what lets subsequences of U and T be generated recursively.
    """
    if m < 1:
        raise ValueError(f"decimation step must be >= 1, got {m}")
    return RecurrenceParams(lucas_v(params, m, max_index), params.q**m)


_FIB = RecurrenceParams(1, -1)


def fibonacci(n: int, max_index: int | None = None) -> int:
    """F_n, extended to negative n via F_{-k} = (-1)^{k+1} F_k."""
    value = basis_ut(_FIB, n, max_index)[0]
    return int(value) if isinstance(value, Fraction) else value
