import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pisotlab import AlgebraicReal, DigitSet, enumerate_spectrum, evaluate_digits, gap_stats
from pisotlab import min_nonzero_exhaustive, min_nonzero_value, power_norms, spectrum_csv
from pisotlab.errors import BoundNonPositive, InvalidDigits, LambdaZero, TooFewPoints, TooLarge
from pisotlab.spectrum import degree_cap

from conftest import LEHMER

NUMBERS = {
    "2": AlgebraicReal.from_rational(2),
    "3/2": AlgebraicReal.from_rational(Fraction(3, 2)),
    "golden": AlgebraicReal("x^2-x-1", (1, 2)),
    "cubic": AlgebraicReal("x^3-x-1", (1, 2)),
    "sqrt2": AlgebraicReal("x^2-2", (1, 2)),
}


def naive_spectrum(q, digits, bound):
    positive = [d for d in digits if d > 0]
    cap = degree_cap(q, min(positive), Fraction(bound)) if positive else 0
    out = set()
    for word in itertools.product(digits.digits, repeat=cap + 1):
        v = sum((q.gen**i * d for i, d in enumerate(word)), q.zero)
        if v <= bound:
            out.add(v)
    return sorted(out)


def test_binary_spectrum():
    s = enumerate_spectrum(NUMBERS["2"], DigitSet.nonnegative(1), 7)
    assert [p.as_fraction() for p in s.points] == list(range(8))
    g = gap_stats(s)
    assert all(x == 1 for x in g.gaps) and g.min_gap == g.max_gap == 1


def test_golden_spectrum():
    q = NUMBERS["golden"]
    s = enumerate_spectrum(q, DigitSet.nonnegative(1), 2)
    assert s.points == [q.zero, q.one, q.gen]
    g = gap_stats(s)
    assert g.gaps == [q.one, q.gen - 1]
    assert g.min_gap == q.gen - 1 and abs(g.min_gap_float - 0.6180339887) < 1e-9


def test_trivial_digits_and_errors():
    q = NUMBERS["cubic"]
    s = enumerate_spectrum(q, DigitSet((Fraction(0),)), 1)
    assert s.points == [q.zero]
    with pytest.raises(TooFewPoints):
        gap_stats(s)
    with pytest.raises(InvalidDigits):
        enumerate_spectrum(q, DigitSet.signed(1), 3)
    with pytest.raises(BoundNonPositive):
        enumerate_spectrum(q, DigitSet.nonnegative(1), 0)


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from(sorted(NUMBERS)),
    st.lists(st.integers(1, 3), min_size=1, max_size=2, unique=True),
    st.integers(1, 5),
)
def test_completeness(name, digits, bound):
    q = NUMBERS[name]
    ds = DigitSet(tuple(Fraction(d) for d in [0] + digits))
    s = enumerate_spectrum(q, ds, bound)
    assert s.points == naive_spectrum(q, ds, bound)
    assert all(a < b for a, b in zip(s.points, s.points[1:]))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(NUMBERS)), st.fractions(Fraction(1, 5), 3), st.integers(2, 5))
def test_scale_covariance(name, t, bound):
    q = NUMBERS[name]
    ds = DigitSet.nonnegative(1)
    base = enumerate_spectrum(q, ds, bound)
    scaled = enumerate_spectrum(q, ds.scaled(t), bound * t)
    assert scaled.points == [p * t for p in base.points]
    if len(base) > 1:
        assert gap_stats(scaled).gaps == [g * t for g in gap_stats(base).gaps]


def test_csv_columns():
    s = enumerate_spectrum(NUMBERS["golden"], DigitSet.nonnegative(1), 3)
    lines = spectrum_csv(s).splitlines()
    assert lines[0] == "index,value_exact,value_float,gap_to_next"
    assert lines[2].startswith("1,1,1.0,")
    assert lines[-1].endswith(",")


def brute_float_min(q, m, n):
    """Independent float oracle over all (2m+1)^n vectors."""
    grid = np.array(list(itertools.product(range(-m, m + 1), repeat=n)), dtype=float)
    vals = np.abs(grid @ (float(q) ** np.arange(n)))
    return vals[vals > 1e-9].min()


def test_minval_examples():
    assert min_nonzero_value(NUMBERS["2"], 1, 5).value == 1
    r = min_nonzero_value(NUMBERS["3/2"], 1, 3)
    assert r.value.as_fraction() == Fraction(1, 4)
    assert r.witness == (1, 1, -1)
    g = NUMBERS["golden"]
    r = min_nonzero_value(g, 1, 3)
    assert evaluate_digits(g, (1, 1, -1)).is_zero  # 1 + q - q^2 = 0, excluded
    assert r.value == g.gen - 1
    assert abs(r.approx - brute_float_min(g, 1, 3)) < 1e-12


@pytest.mark.parametrize("name", ["golden", "3/2", "cubic", "sqrt2", "lehmer"])
def test_mitm_matches_exhaustive(name, lehmer):
    q = lehmer if name == "lehmer" else NUMBERS[name]
    for m in (1, 2):
        for n in range(1, 9 if m == 1 else 6):
            a = min_nonzero_value(q, m, n)
            b = min_nonzero_exhaustive(q, m, n)
            assert a.value == b.value
            assert abs(evaluate_digits(q, a.witness)) == a.value
            assert max(map(abs, a.witness)) <= m


@pytest.mark.parametrize("name", ["golden", "3/2", "cubic", "sqrt2"])
def test_minval_monotone_and_float_oracle(name):
    q = NUMBERS[name]
    prev = None
    for n in range(1, 12):
        v = min_nonzero_value(q, 1, n)
        if prev is not None:
            assert v.value <= prev
        if n <= 9:
            assert abs(v.approx - brute_float_min(q, 1, n)) <= 1e-9 * max(1.0, v.approx)
        prev = v.value


def test_exhaustive_guard():
    with pytest.raises(TooLarge):
        min_nonzero_exhaustive(NUMBERS["golden"], 1, 12)


def test_power_norms():
    assert all(r.norm.is_zero for r in power_norms(1, NUMBERS["2"], 10))
    rows = power_norms(1, NUMBERS["3/2"], 3)
    assert [r.norm.as_fraction() for r in rows] == [Fraction(1, 2), Fraction(1, 4), Fraction(3, 8)]
    assert rows[-1].partial_sum == pytest.approx(1.125)
    g = NUMBERS["golden"]
    for r in power_norms(1, g, 30):
        # q^n + (-1/q)^n is a Lucas number, so ||q^n|| = q^-n for n >= 2
        if r.n >= 2:
            assert r.norm * g.gen**r.n == 1
        assert r.error <= Fraction(1, 10**12)
    with pytest.raises(LambdaZero):
        power_norms(0, g, 3)
