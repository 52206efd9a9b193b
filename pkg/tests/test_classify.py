from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from pisotlab import AlgebraicReal, IntPolynomial, classify_number, density_verdict, parse_polynomial
from pisotlab import is_algebraic_integer, unit_circle_root_counts
from pisotlab.classify import Tag, scaled_counts
from pisotlab.errors import NotGreaterThanOne
from pisotlab.polynomial import squarefree

from conftest import LEHMER

SUITE = [
    "x^2-x-1", "x^2-2", "x^4-x^3-1", "x^8-x^6-1", LEHMER, "x^3-x-1", "x^3-x^2-1",
    "x^5-x^4-x^3+x^2-1", "x^6-x^5-x^4+x^2-1", "x^4+1", "x^6-1", "x^12-1", "x^4-2x^3+x-1",
    "2x-3", "x^2+x+1", "x^4+x^3+x^2+x+1", "x^3-2", "x^5-x-1", "3x^3-2x+5", "x^7-3x^2+1",
    "x^10-x^7+2x^3-1", "x^9+x^8-5x+2", "x^4-4x^2+2", "x^6+2x^5-x^3+3", "4x^4-x+1", "x^11-x^10-1",
    "x^12+x^11-x^9-x^8-x^7-x^6-x^5-x^4-x^3+x+1", "x^4-x^3-x^2-x-1", "x^2-3x+1", "x^8+x^5-x^3+x-7",
    "x^6-x^4-x^3-x^2+1", "5x^2-6x+5", "x^10+3x^4-1", "x^5+x^4+x^3+x^2+x+1",
]


def numpy_counts(c, tol=1e-9):
    r = np.abs(np.roots(np.array(c[::-1], dtype=float)))
    inside = int(np.sum(r < 1 - tol))
    on = int(np.sum(np.abs(r - 1) <= tol))
    return inside, on, len(r) - inside - on


@pytest.mark.parametrize("text", SUITE)
def test_counts_match_numpy(text):
    p = IntPolynomial(tuple(squarefree(parse_polynomial(text).coeffs)))
    c = unit_circle_root_counts(p)
    assert c.total == p.degree
    assert (c.inside, c.on, c.outside) == numpy_counts(list(p.coeffs))


def test_suite_size():
    assert len(SUITE) >= 30 and max(parse_polynomial(t).degree for t in SUITE) <= 12


@pytest.mark.parametrize("text, expected", [
    ("x^2-x-1", (1, 0, 1)),
    ("x^2-2", (0, 0, 2)),
    ("x^4-x^3-1", (3, 0, 1)),
    (LEHMER, (1, 8, 1)),
])
def test_count_examples(text, expected):
    c = unit_circle_root_counts(parse_polynomial(text))
    assert (c.inside, c.on, c.outside) == expected


@settings(max_examples=120, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=9))
def test_reversal_symmetry(c):
    assume(c[0] != 0 and c[-1] != 0)
    p = IntPolynomial(tuple(squarefree(c)))
    a = unit_circle_root_counts(p)
    b = unit_circle_root_counts(p.reversed())
    assert (a.inside, a.on, a.outside) == (b.outside, b.on, b.inside)
    assert a.total == p.degree


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=9))
def test_random_counts_match_numpy(c):
    assume(c[0] != 0 and c[-1] != 0)
    sq = squarefree(c)
    r = np.abs(np.roots(np.array(sq[::-1], dtype=float)))
    assume(np.all((np.abs(r - 1) < 1e-9) | (np.abs(r - 1) > 1e-6)))
    k = unit_circle_root_counts(IntPolynomial(tuple(sq)))
    assert (k.inside, k.on, k.outside) == numpy_counts(sq)


def test_scaled_counts():
    p = parse_polynomial("x^2-x-1")
    c = scaled_counts(p, Fraction(3, 2))
    assert (c.inside, c.outside) == (1, 1)
    c = scaled_counts(p, Fraction(1, 2))
    assert (c.inside, c.outside) == (0, 2)


def test_algebraic_integer():
    assert is_algebraic_integer(parse_polynomial("x^2-x-1"))
    assert not is_algebraic_integer(parse_polynomial("2x-3"))
    assert is_algebraic_integer(parse_polynomial("x^4-x^3-1"))


@pytest.mark.parametrize("poly, iso, tag", [
    ("x^2-x-1", (1, 2), Tag.PISOT),
    ("x^4-x^3-1", (1, 2), Tag.PISOT),
    ("x^8-x^6-1", (1, Fraction(13, 10)), Tag.NON_PERRON),
    ("x^2-2", (1, 2), Tag.NON_PERRON),
    (LEHMER, (Fraction(11, 10), Fraction(13, 10)), Tag.SALEM),
    ("2x-3", (1, 2), Tag.NOT_INTEGER),
    ("x^3-2", (1, 2), Tag.NON_PERRON),  # complex conjugates share its modulus
    ("x^3-x^2-x-2", (1, 3), Tag.PISOT),
    ("x^4-x^3-x^2-x-1", (Fraction(19, 10), 2), Tag.PISOT),
    ("x^3-3x-1", (1, 2), Tag.PERRON),
])
def test_classification(poly, iso, tag):
    assert classify_number(AlgebraicReal(poly, iso)).tag is tag


def test_perron_by_numpy():
    # conjugate moduli of the non-Pisot examples above
    for poly, iso in [("x^3-2", (1, 2)), ("x^3-3x-1", (1, 2)), ("x^5-x-1", (1, 2))]:
        a = AlgebraicReal(poly, iso)
        r = np.roots(np.array(a.poly.coeffs[::-1], dtype=float))
        others = sorted(np.abs(r))[:-1]
        assert (max(others) < float(a) - 1e-9) == (classify_number(a).tag in (Tag.PERRON, Tag.PISOT, Tag.SALEM))


def test_not_greater_than_one():
    with pytest.raises(NotGreaterThanOne):
        classify_number(AlgebraicReal("x^2-x-1", (-1, 0)))
    with pytest.raises(NotGreaterThanOne):
        density_verdict(AlgebraicReal.from_rational(1), 1)


@pytest.mark.parametrize("q, m, text", [
    (AlgebraicReal("x^2-x-1", (1, 2)), 1, "NotDense(Pisot)"),
    (AlgebraicReal.from_rational(3), 1, "NotDense(TooLarge)"),
    (AlgebraicReal.from_rational(2), 1, "NotDense(TooLarge)"),
    (AlgebraicReal.from_rational(Fraction(3, 2)), 1, "Dense"),
    (AlgebraicReal("x^2-2", (1, 2)), 1, "Dense"),
    (AlgebraicReal.from_rational(Fraction(5, 2)), 2, "Dense"),
    (AlgebraicReal("x^2-2x-1", (2, 3)), 2, "NotDense(Pisot)"),
])
def test_density(q, m, text):
    assert str(density_verdict(q, m)) == text


def test_pisot_implies_not_dense():
    for poly, iso in [("x^2-x-1", (1, 2)), ("x^3-x-1", (1, 2)), ("x^2-3x+1", (2, 3)), ("x^3-x^2-x-1", (1, 2))]:
        a = AlgebraicReal(poly, iso)
        assert classify_number(a).is_pisot
        for m in range(1, 5):
            if float(a) < m + 1:
                assert str(density_verdict(a, m)) == "NotDense(Pisot)"
