"""Continued fractions with rational partial quotients and the period-2 quadratic form.

A finite or eventually periodic list of quotients a_i/b_i defines convergents

    C_n = p_n / q_n,    p_n = (a_n/b_n) p_{n-1} + p_{n-2},  q_n likewise,

which can equivalently be computed from three integer sequences (s, t, u)
so that C_n = s_n / (b_0 t_n).  The special period-2 fraction [b/a, b/c]
represents the larger-modulus real root of a*t^2 - b*t - c; its convergents
are ratios of the single recurrent sequence sigma = W(0, 1, b, -a*c):

    C_n = sigma_{n+2} / (a * sigma_{n+1}).

Striding through the convergents at indices F_{n+2}-1, 2^n - 1, or 3^n - 1
reproduces the secant, Newton, and Halley iterates for that root.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .core import RecurrenceParams, _check_index, basis_ut, fibonacci
from .errors import DegenerateConvergent, NonRealRoots

_QUOTIENT_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")
_PERIOD_RE = re.compile(r"^period\s*=\s*(\d+)$")

# Convergent chains revisit sigma prefixes (indices 3^n - 1 share all earlier
# ones), so small indices are memoized; past this bound each value is computed
# independently in O(log n) to keep memory bounded.
_SIGMA_MEMO_LIMIT = 4096


@dataclass(frozen=True)
class RationalCF:
    """Partial quotients (a_i, b_i), optionally cycling over the last `period` entries."""

    quotients: tuple[tuple[int, int], ...]
    period: int | None = None

    def __post_init__(self):
        if not self.quotients:
            raise ValueError("a continued fraction needs at least one partial quotient")
        for i, (a, b) in enumerate(self.quotients):
            if a == 0 or b == 0:
                raise ValueError(f"partial quotient {i} is {a}/{b}; zeros are not allowed")
        if self.period is not None and not 1 <= self.period <= len(self.quotients):
            raise ValueError(f"period {self.period} out of range for {len(self.quotients)} quotients")

    def quotient(self, i: int) -> tuple[int, int]:
        """The i-th partial quotient, unrolling the periodic tail if present."""
        if i < 0:
            raise ValueError(f"quotient index must be >= 0, got {i}")
        if i < len(self.quotients):
            return self.quotients[i]
        if self.period is None:
            raise ValueError(
                f"quotient {i} requested but only {len(self.quotients)} exist and no period is set"
            )
        start = len(self.quotients) - self.period
        return self.quotients[start + (i - start) % self.period]

    @classmethod
    def parse(cls, text: str) -> "RationalCF":
        """Parse the text form `a0/b0, a1/b1, ... | period=k` (bare integers allowed)."""
        head, _, tail = text.partition("|")
        period = None
        if tail.strip():
            m = _PERIOD_RE.match(tail.strip())
            if not m:
                raise ValueError(f"malformed period suffix {tail.strip()!r}")
            period = int(m.group(1))
        quotients = []
        for token in head.split(","):
            token = token.strip()
            m = _QUOTIENT_RE.match(token)
            if not m:
                raise ValueError(f"malformed partial quotient {token!r}")
            quotients.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(quotients), period)

    def __str__(self) -> str:
        body = ", ".join(f"{a}/{b}" for a, b in self.quotients)
        return body if self.period is None else f"{body} | period={self.period}"


@dataclass(frozen=True)
class ConvergentRecord:
    """One convergent; p/q fields come from the direct recursion, s/t/u from the integer one."""

    index: int
    value: Fraction
    p: Fraction | None = None
    q: Fraction | None = None
    s: int | None = None
    t: int | None = None
    u: int | None = None


def convergents_direct(cf: RationalCF, count: int) -> list[ConvergentRecord]:
    """First `count` convergents via the rational p/q recursion."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    records = []
    p_prev2 = p_prev = q_prev2 = q_prev = None
    for n in range(count):
        a, b = cf.quotient(n)
        quot = Fraction(a, b)
        if n == 0:
            p, q = quot, Fraction(1)
        elif n == 1:
            p, q = records[0].p * quot + 1, quot
        else:
            p, q = quot * p_prev + p_prev2, quot * q_prev + q_prev2
        if q == 0:
            raise DegenerateConvergent(f"convergent denominator q_{n} = 0")
        records.append(ConvergentRecord(n, p / q, p=p, q=q))
        p_prev2, p_prev, q_prev2, q_prev = p_prev, p, q_prev, q
    return records


def convergents_integer(cf: RationalCF, count: int) -> list[ConvergentRecord]:
    """First `count` convergents via the integer (s, t, u) normalization.

    s_n = a_n s_{n-1} + b_n b_{n-1} s_{n-2} (t likewise), u_n = b_n u_{n-1},
    and C_n = s_n / (b_0 t_n); agrees entrywise with convergents_direct.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    b0 = cf.quotient(0)[1]
    records = []
    s_prev2 = s_prev = t_prev2 = t_prev = None
    for n in range(count):
        a, b = cf.quotient(n)
        if n == 0:
            s, t, u = a, 1, 1
        elif n == 1:
            s = records[0].s * a + b0 * b
            t, u = a, b
        else:
            b_prev = cf.quotient(n - 1)[1]
            s = a * s_prev + b * b_prev * s_prev2
            t = a * t_prev + b * b_prev * t_prev2
            u = b * records[-1].u
        if t == 0:
            raise DegenerateConvergent(f"integer-form denominator t_{n} = 0")
        records.append(ConvergentRecord(n, Fraction(s, b0 * t), s=s, t=t, u=u))
        s_prev2, s_prev, t_prev2, t_prev = s_prev, s, t_prev, t
    return records


@dataclass(frozen=True)
class PeriodicQuadCF:
    """The period-2 continued fraction [b/a, b/c] for a*t^2 - b*t - c (a, b, c nonzero).

    When b^2 + 4ac > 0 its value is the larger-modulus root of that quadratic.
    """

    a: int
    b: int
    c: int
    _sigma: list = field(default_factory=lambda: [0, 1], init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ValueError("a, b, c must all be nonzero")

    def params(self) -> RecurrenceParams:
        return RecurrenceParams(self.b, -self.a * self.c)

    def to_rational_cf(self) -> RationalCF:
        return RationalCF(((self.b, self.a), (self.b, self.c)), period=2)

    def sigma(self, i: int, max_index: int | None = None) -> int:
        """sigma_i of sigma = W(0, 1, b, -a*c), memoized for small indices."""
        if i > _SIGMA_MEMO_LIMIT:
            return basis_ut(self.params(), i, max_index)[0]
        _check_index(i, max_index)
        with self._lock:
            while len(self._sigma) <= i:
                self._sigma.append(self.b * self._sigma[-1] + self.a * self.c * self._sigma[-2])
            return self._sigma[i]


def quad_cf_convergent(
    qcf: PeriodicQuadCF, n: int, max_index: int | None = None
) -> Fraction:
    """C_n = sigma_{n+2} / (a * sigma_{n+1})."""
    if n < 0:
        raise ValueError(f"convergent index must be >= 0, got {n}")
    denom = qcf.sigma(n + 1, max_index)
    if denom == 0:
        raise DegenerateConvergent(f"sigma_{n + 1} = 0, convergent C_{n} undefined")
    return Fraction(qcf.sigma(n + 2, max_index), qcf.a * denom)


_METHOD_INDEX = {
    "secant": lambda n: fibonacci(n + 2) - 1,
    "newton": lambda n: 2**n - 1,
    "halley": lambda n: 3**n - 1,
}


def method_subsequence(
    qcf: PeriodicQuadCF,
    method: str,
    count: int,
    max_index: int | None = None,
) -> list[tuple[int, Fraction]]:
    """Convergent indices and values realizing a root-finding method's iterates.

    The n-th secant/Newton/Halley iterate for the larger-modulus root of
    a*t^2 - b*t - c (seeded from C_0, plus C_1 for secant) equals the
    convergent at index F_{n+2}-1, 2^n - 1, or 3^n - 1 respectively.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    try:
        index_of = _METHOD_INDEX[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected secant, newton, or halley") from None
    disc = qcf.b * qcf.b + 4 * qcf.a * qcf.c
    if disc <= 0:
        raise NonRealRoots(f"b^2 + 4ac = {disc} <= 0: the continued fraction has no real target")
    return [
        (index_of(n), quad_cf_convergent(qcf, index_of(n), max_index))
        for n in range(count)
    ]
