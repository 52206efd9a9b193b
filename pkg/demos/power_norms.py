"""Distances ||lambda q^n|| to the nearest integer."""
from fractions import Fraction

from pisotlab import AlgebraicReal, power_norms

cases = [
    ("golden", AlgebraicReal("x^2-x-1", (1, 2)), 1),
    ("x^3-x-1", AlgebraicReal("x^3-x-1", (1, 2)), 1),
    ("sqrt 2", AlgebraicReal("x^2-2", (1, 2)), 1),
    ("3/2", AlgebraicReal.from_rational(Fraction(3, 2)), 1),
    ("golden, lambda=1/2", AlgebraicReal("x^2-x-1", (1, 2)), Fraction(1, 2)),
]

for name, q, lam in cases:
    rows = power_norms(lam, q, 30)
    tail = " ".join(f"{r.approx:.1e}" for r in rows[-6:])
    print(f"{name:20} partial sum {rows[-1].partial_sum:8.4f}   n=25..30: {tail}")

for r in power_norms(1, cases[0][1], 20)[-3:]:
    print(f"||q^{r.n}|| = {r.norm} = {r.approx:.3e} (nearest {r.nearest}, error <= {float(r.error):.0e})")
