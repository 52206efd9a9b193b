"""Which numbers make Y_m(q) dense?

Classifies a handful of algebraic numbers by where their conjugates sit
relative to the unit circle, then reads off the density verdict.
"""
from fractions import Fraction

from pisotlab import AlgebraicReal, classify_number, density_verdict

LEHMER = "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"

numbers = [
    ("golden ratio", AlgebraicReal("x^2-x-1", (1, 2))),
    ("smallest Pisot", AlgebraicReal("x^3-x-1", (1, 2))),
    ("second Pisot", AlgebraicReal("x^4-x^3-1", (1, 2))),
    ("its square root", AlgebraicReal("x^8-x^6-1", (1, Fraction(13, 10)))),
    ("Lehmer's number", AlgebraicReal(LEHMER, (Fraction(11, 10), Fraction(13, 10)))),
    ("sqrt 2", AlgebraicReal("x^2-2", (1, 2))),
    ("3/2", AlgebraicReal.from_rational(Fraction(3, 2))),
    ("3", AlgebraicReal.from_rational(3)),
]

print(f"{'number':18} {'q':>10}  {'class':22} {'in/on/out':10} verdict (m=1)")
for name, q in numbers:
    c = classify_number(q)
    counts = f"{c.counts.inside}/{c.counts.on}/{c.counts.outside}"
    print(f"{name:18} {float(q):10.6f}  {c.tag.value:22} {counts:10} {density_verdict(q, 1)}")

# sqrt of the second Pisot number: its square satisfies x^4 - x^3 - 1 exactly
q = numbers[3][1]
s = q.gen * q.gen
print("\nq^2 is a root of x^4-x^3-1:", (s**4 - s**3 - 1).is_zero)
