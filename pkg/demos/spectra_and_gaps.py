"""Spectra X_m(q) and their gaps at a finite horizon."""
from pisotlab import AlgebraicReal, DigitSet, enumerate_spectrum, gap_stats

cases = [
    ("q = 2", AlgebraicReal.from_rational(2)),
    ("golden", AlgebraicReal("x^2-x-1", (1, 2))),
    ("x^3-x-1", AlgebraicReal("x^3-x-1", (1, 2))),
    ("sqrt 2", AlgebraicReal("x^2-2", (1, 2))),
]

for m in (1, 2):
    print(f"digits 0..{m}, bound 6")
    for name, q in cases:
        s = enumerate_spectrum(q, DigitSet.nonnegative(m), 6)
        g = gap_stats(s)
        print(f"  {name:8} {len(s):4d} points  min gap {g.min_gap_float:.6f} ({g.min_gap})"
              f"  max gap {g.max_gap_float:.6f}")

# the golden spectrum up to 4, exactly
q = cases[1][1]
s = enumerate_spectrum(q, DigitSet.nonnegative(1), 4)
print("\ngolden, digits {0,1}, up to 4:")
print("  " + ", ".join(p.to_string() for p in s.points))
