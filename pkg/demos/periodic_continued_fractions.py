"""Period-2 continued fractions [b/a, b/c] for quadratic irrationalities.

The fraction with repeating rational quotients b/a, b/c converges to the
larger-modulus root of a*t^2 - b*t - c, and its convergents are plain ratios
of one recurrent sequence sigma = W(0, 1, b, -a*c).  Striding through them
at indices F_{n+2}-1 / 2^n-1 / 3^n-1 recovers the secant, Newton, and Halley
iterates for that root, so all three methods live inside one convergent list.
"""

from recurseq import (
    PeriodicQuadCF,
    RationalCF,
    convergents_direct,
    convergents_integer,
    format_decimal,
    method_subsequence,
    quad_cf_convergent,
)

# 2t^2 - 2t - 1 has larger root (1 + sqrt(3)) / 2 = 1.36602540378...
qcf = PeriodicQuadCF(2, 2, 1)
print(f"CF text form: {qcf.to_rational_cf()!s}")

print("\nFirst convergents, three equivalent computations:")
expanded = qcf.to_rational_cf()
direct = convergents_direct(expanded, 8)
integer = convergents_integer(expanded, 8)
for n in range(8):
    sigma_form = quad_cf_convergent(qcf, n)
    assert direct[n].value == integer[n].value == sigma_form
    print(f"  C_{n} = {sigma_form} = {format_decimal(sigma_form, 10)}"
          f"   (s_{n} = {integer[n].s}, t_{n} = {integer[n].t})")

print("\nMethod subsequences hidden inside the convergents:")
for method, count in (("secant", 7), ("newton", 5), ("halley", 4)):
    pairs = method_subsequence(qcf, method, count)
    rendered = ", ".join(f"C_{i}={v}" for i, v in pairs)
    print(f"  {method:>6}: {rendered}")

print("\nHow fast each subsequence closes in on (1 + sqrt(3))/2:")
for method in ("secant", "newton", "halley"):
    for i, value in method_subsequence(qcf, method, 5):
        print(f"  {method:>6} C_{i:<4} = {format_decimal(value, 25)}")
    print()

print("A general rational-quotient fraction works too:")
cf = RationalCF.parse("3/2, -5/4, 7/3, 2/9")
for record in convergents_direct(cf, 4):
    print(f"  C_{record.index} = {record.value}")
