"""Smallest nonzero |sum eps_i q^i| with eps_i in {-1, 0, 1} as the word length grows.

Pisot numbers level off (uniform discreteness), rationals like 3/2 decay
geometrically, and for Lehmer's Salem number the decay at these lengths is
much faster than the q^-2 per two steps one might naively expect.
"""
import time
from fractions import Fraction

from pisotlab import AlgebraicReal, min_nonzero_value

numbers = {
    "golden": AlgebraicReal("x^2-x-1", (1, 2)),
    "3/2": AlgebraicReal.from_rational(Fraction(3, 2)),
    "Lehmer": AlgebraicReal("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1", (Fraction(11, 10), Fraction(13, 10))),
}

for name, q in numbers.items():
    t0 = time.perf_counter()
    row = []
    for n in range(2, 17):
        r = min_nonzero_value(q, 1, n)
        row.append(f"{r.approx:.2e}")
    print(f"{name:7} ({time.perf_counter() - t0:.1f}s)")
    print("   n=2..16: " + " ".join(row))

r = min_nonzero_value(numbers["3/2"], 1, 12)
print("\n3/2, n=12 witness:", r.witness, "value", r.value)
