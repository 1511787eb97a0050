"""Show that classical root-finding methods walk the ratio sequence by index maps.

Applied to t^2 - p*t + q from the seed x_2 = p, each method's exact rational
iterates are themselves ratio terms:

    Newton: k -> 2k-1     Halley: k -> 3k-2     Householder(d): k -> (d+1)k-d

so the iterate after n steps sits at index 2^n + 1, 3^n + 1, or (d+1)^n + 1.
"""

from recurseq import (
    QuadraticABC,
    QuadraticPQ,
    RecurrenceParams,
    approximate_root,
    halley_index,
    halley_step,
    householder_index,
    householder_step,
    newton_index,
    newton_step,
    ratio_x,
    secant_index_sequence,
    secant_step,
)

params = RecurrenceParams(1, -1)
golden = QuadraticABC(1, 1, 1)      # t^2 - t - 1
golden_pq = QuadraticPQ(1, -1)

print("One step of each method from x_4 = 3/2, against the direct ratio:")
x4 = ratio_x(params, 4)
print(f"  newton(x_4)  = {newton_step(golden, x4)}  = x_{newton_index(4)} "
      f"= {ratio_x(params, newton_index(4))}")
print(f"  halley(x_4)  = {halley_step(golden_pq, x4)} = x_{halley_index(4)} "
      f"= {ratio_x(params, halley_index(4))}")
for d in range(1, 6):
    stepped = householder_step(golden_pq, x4, d)
    target = householder_index(4, d)
    print(f"  householder(x_4, d={d}) = {stepped} = x_{target} = {ratio_x(params, target)}")

print("\nThe secant chain visits indices F_{n+2} + 1:")
indices = secant_index_sequence(8)
xs = [ratio_x(params, i) for i in indices]
for n in range(2, len(indices)):
    stepped = secant_step(golden, xs[n - 1], xs[n - 2])
    print(f"  secant(x_{indices[n - 1]}, x_{indices[n - 2]}) = {stepped} = x_{indices[n]}")
    assert stepped == xs[n]

print("\nDecimal approximations of the golden ratio (exact iterates, rounded output):")
for method, order in (("secant", None), ("newton", None), ("halley", None), ("householder", 5)):
    label = method if order is None else f"{method}(d={order})"
    print(f"  {label:>16}: {approximate_root(golden, method, 30, order=order)}")
