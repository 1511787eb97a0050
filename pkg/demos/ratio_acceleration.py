"""Walk through the ratio sequence x_n = U_n / U_{n-1} and its accelerations.

The ratios of consecutive generalized Fibonacci numbers converge to the
larger root of t^2 - p*t + q.  Instead of stepping one index at a time, the
closed-form recurrences below jump along fast-growing index subsequences,
squaring (or better) the number of correct digits per step.
"""

from fractions import Fraction

from recurseq import (
    IndexSequenceParams,
    RecurrenceParams,
    accelerate_general,
    arithmetic_index_accel,
    double_ratio,
    format_decimal,
    ratio_x,
)

fib = RecurrenceParams(1, -1)  # Fibonacci: x_n -> golden ratio
mers = RecurrenceParams(3, 2)  # U_n = 2^n - 1: x_n -> 2

print("Plain ratios x_2..x_9 for the Fibonacci parameters (1, -1):")
for n in range(2, 10):
    x = ratio_x(fib, n)
    print(f"  x_{n} = {x} = {format_decimal(x, 8)}")

print("\nDoubling chain: each step maps x_n to x_2n in O(1) rational work.")
index, x = 2, ratio_x(fib, 2)
for _ in range(6):
    print(f"  x_{index} = {x} = {format_decimal(x, 12)}")
    index, x = 2 * index, double_ratio(fib, x)

print("\nFibonacci-index chain x_2, x_3, x_5, x_8, ... (indices follow F):")
for entry in accelerate_general(fib, IndexSequenceParams(2, 3, 1, -1), 9):
    print(f"  x_{entry.index} = {entry.x}")

print("\nArithmetic-index chain g_n = 3n + 2 for the Mersenne parameters (3, 2):")
for entry in arithmetic_index_accel(mers, h=2, k=3, count=5):
    approx = format_decimal(entry.x, 10)
    print(f"  x_{entry.index} = {entry.x} = {approx}")

print("\nEvery accelerated value equals the directly computed ratio:")
entry = accelerate_general(mers, IndexSequenceParams(2, 4, 2, -1), 5)[-1]
direct = ratio_x(mers, entry.index)
print(f"  chain x_{entry.index} = {entry.x}; direct = {direct}; equal: {entry.x == direct}")

assert entry.x == direct and isinstance(entry.x, Fraction)
