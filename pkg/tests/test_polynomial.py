from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pisotlab import IntPolynomial, isolate_real_roots, parse_polynomial
from pisotlab.errors import EmptyInput, NonIntegerCoefficient, PolynomialSyntaxError
from pisotlab.polynomial import count_real_roots, format_polynomial, squarefree


@pytest.mark.parametrize("text, coeffs", [
    ("x^2 - x - 1", (-1, -1, 1)),
    ("x^4-x^3-1", (-1, 0, 0, -1, 1)),
    ("2x-3", (-3, 2)),
    ("3*x^2 + 0x - 6", (-2, 0, 1)),  # primitive form
    ("-x+2", (-2, 1)),  # positive leading coefficient
    ("7", (1,)),
])
def test_parse(text, coeffs):
    assert parse_polynomial(text).coeffs == coeffs


@pytest.mark.parametrize("text, err", [
    ("x^2 - 0.5", NonIntegerCoefficient),
    ("x/2", NonIntegerCoefficient),
    ("", EmptyInput),
    ("   ", EmptyInput),
    ("x^2 x", PolynomialSyntaxError),
    ("x^2 + y", PolynomialSyntaxError),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_polynomial(text)


def test_format_roundtrip():
    for text in ["x^2-x-1", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1", "2x-3", "x^8-x^6-1"]:
        p = parse_polynomial(text)
        assert parse_polynomial(p.to_string()) == p
    assert format_polynomial([-1, 1], "q") == "q-1"
    assert format_polynomial([2, -1], "q") == "2-q"


def test_isolation_examples():
    ivs = isolate_real_roots(parse_polynomial("x^2-x-1"))
    assert len(ivs) == 2
    assert -1 <= ivs[0].lo and ivs[0].hi <= 0
    assert 1 <= ivs[1].lo and ivs[1].hi <= 2
    assert isolate_real_roots(parse_polynomial("x^2+1")) == []
    (iv,) = isolate_real_roots(parse_polynomial("x^3-x-1"))
    assert 1 <= iv.lo and iv.hi <= 2


def test_isolation_of_rational_roots_and_multiplicity():
    p = IntPolynomial((0, -1, 0, 1))  # x^3 - x, roots -1, 0, 1
    ivs = isolate_real_roots(p)
    assert [(iv.lo <= r <= iv.hi) for iv, r in zip(ivs, (-1, 0, 1))] == [True] * 3
    sq = IntPolynomial((1, -2, 1))  # (x-1)^2
    assert len(isolate_real_roots(sq)) == 1


small_polys = st.lists(st.integers(-6, 6), min_size=2, max_size=8).filter(lambda c: c[-1] != 0)


@settings(max_examples=80, deadline=None)
@given(small_polys)
def test_isolation_matches_numpy(c):
    p = IntPolynomial(tuple(c))
    ivs = isolate_real_roots(p)
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi < b.lo
    sq = squarefree(p.coeffs)
    for iv in ivs:
        assert iv.width <= Fraction(1, 4)
        assert count_real_roots(sq, iv.lo, iv.hi) + (1 if iv.lo == iv.hi else 0) >= 1
    roots = np.roots(sq[::-1])
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-7)
    # tolerant comparison: numpy can split or merge near-real pairs
    if all(abs(r.imag) > 1e-3 or abs(r.imag) < 1e-9 for r in roots):
        assert len(real) == len(ivs)
        for r, iv in zip(real, ivs):
            assert float(iv.lo) - 1e-6 <= r <= float(iv.hi) + 1e-6
