from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pisotlab import AlgebraicReal, FieldElement, compare, exact_sorted, parse_element, refine, sign_of
from pisotlab.errors import ContextMismatch, DivisionByZero, RootIsolationError

CUBIC = AlgebraicReal("x^3-x-1", (1, 2))
GOLDEN = AlgebraicReal("x^2-x-1", (1, 2))


def test_compare_examples(golden):
    q = golden.gen
    assert compare(q, golden.one) == 1
    assert compare(q, q) == 0
    assert compare(q * q, 2 * q) == -1
    assert (q * q - q - 1).is_zero


def test_minimal_polynomial_is_extracted():
    # (x^2-x-1)(x^2+1) has the golden ratio as its only root in [1, 2]
    a = AlgebraicReal("x^4-x^3-x-1", (1, 2))
    assert a.poly.coeffs == (-1, -1, 1)
    assert a.gen * a.gen == a.gen + 1


def test_root_in_must_isolate():
    with pytest.raises(RootIsolationError):
        AlgebraicReal("x^2-2", (-2, 2))
    with pytest.raises(RootIsolationError):
        AlgebraicReal("x^2+1", (0, 1))


def test_rational_context():
    a = AlgebraicReal.from_rational(Fraction(3, 2))
    assert a.degree == 1
    assert float(a.gen**3) == 3.375
    assert a.gen.is_rational and a.gen.as_fraction() == Fraction(3, 2)


def test_context_mismatch(golden):
    with pytest.raises(ContextMismatch):
        golden.gen + CUBIC.gen
    with pytest.raises(ContextMismatch):
        compare(golden.gen, CUBIC.gen)


def test_division(golden):
    q = golden.gen
    assert 1 / q == q - 1
    with pytest.raises(DivisionByZero):
        q / (q * q - q - 1)


def test_to_string_parse_roundtrip(golden):
    q = golden.gen
    for e in [q - 1, 2 - q, (q - 1) / 2, -q / 3, golden.zero, golden.one * 5, q**7 / 11]:
        s = e.to_string()
        assert parse_element(s, golden) == e
    assert (q - 1).to_string() == "q-1"
    assert (2 - q).to_string() == "2-q"


def test_refine_nested(golden):
    prev = golden.iso
    for k in range(1, 40, 3):
        iv = refine(golden, Fraction(1, 2**k))
        assert iv.width <= Fraction(1, 2**k)
        assert prev.lo <= iv.lo and iv.hi <= prev.hi
        prev = iv
    assert abs(float(golden) - (1 + 5**0.5) / 2) < 1e-15


def test_exact_sorted_resolves_near_ties():
    q = CUBIC.gen
    tiny = q / 10**40 - q / (10**40 + 1)
    xs = [q, q + tiny, q - tiny, q]
    out = exact_sorted(xs)
    assert out == [q - tiny, q, q, q + tiny]


ints = st.integers(-20, 20)
coeff = st.lists(ints, min_size=0, max_size=3)
dens = st.integers(1, 9)


@st.composite
def elements(draw, ctx=CUBIC):
    return FieldElement(ctx, draw(coeff), draw(dens))


@settings(max_examples=150, deadline=None)
@given(elements(), elements(), elements())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == CUBIC.zero


@settings(max_examples=150, deadline=None)
@given(elements(), elements())
def test_sign_multiplicative(a, b):
    assert sign_of(a * b) == sign_of(a) * sign_of(b)
    assert compare(a, b) == sign_of(a - b)
    assert compare(a, b) == -compare(b, a)


@settings(max_examples=100, deadline=None)
@given(ints, dens)
def test_rational_sign(n, d):
    e = FieldElement(CUBIC, (n,), d)
    r = Fraction(n, d)
    assert sign_of(e) == (r > 0) - (r < 0)


@settings(max_examples=100, deadline=None)
@given(elements())
def test_enclosure_contains_value(a):
    lo, hi = a.enclosure(64)
    lo2, hi2 = a.enclosure(1024)
    assert lo <= lo2 <= hi2 <= hi
    if not a.is_zero:
        assert a * a.inverse() == CUBIC.one
