"""Pisot / Salem / Perron classification and the density verdict for Y_m(q).

Root counts relative to the unit circle are exact:

* roots on the circle (and reciprocal pairs) live in ``gcd(p, reverse(p))``;
  after removing ``x -+ 1`` that factor is palindromic and its circle roots
  correspond to real roots in (-2, 2) of the trace polynomial ``T(x + 1/x)``;
* the remaining factor has no circle roots and no reciprocal pairs, so a
  Cayley transform followed by a Cauchy-index (Routh-Hurwitz) count of the
  left half-plane gives its roots inside the disk.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import polynomial as P
from .algebraic import AlgebraicReal
from .errors import NotGreaterThanOne
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class RootCircleCounts:
    inside: int
    on: int
    outside: int

    @property
    def total(self) -> int:
        return self.inside + self.on + self.outside


class Tag(str, enum.Enum):
    PISOT = "Pisot"
    SALEM = "Salem"
    PERRON = "PerronNotPisotSalem"
    NON_PERRON = "AlgebraicNonPerron"
    NOT_INTEGER = "NotAlgebraicInteger"


@dataclass(frozen=True)
class NumberClass:
    tag: Tag
    counts: RootCircleCounts

    @property
    def is_pisot(self) -> bool:
        return self.tag is Tag.PISOT


@dataclass(frozen=True)
class DensityVerdict:
    dense: bool
    reason: str | None = None  # "Pisot" or "TooLarge" when not dense

    def __str__(self):
        return "Dense" if self.dense else f"NotDense({self.reason})"


def is_algebraic_integer(p: IntPolynomial) -> bool:
    return p.is_monic()


# ---------------------------------------------------------------------------
# exact root counting
# ---------------------------------------------------------------------------


def _divide_linear(c: list[int], root: int) -> list[int]:
    return P.exact_quotient(c, [-root, 1])


def _trace_polynomial(h: list[int]) -> list[int]:
    """T with h(x) = x^k T(x + 1/x) for a palindromic h of degree 2k."""
    k = (len(h) - 1) // 2
    # Dickson polynomials D_j(y) = x^j + x^-j: D_0 = 2, D_1 = y
    dickson = [[2], [0, 1]]
    for _ in range(2, k + 1):
        dickson.append(P.psub(P.pmul([0, 1], dickson[-1]), dickson[-2]))
    t = [h[k]]
    for j in range(1, k + 1):
        t = P.padd(t, [h[k + j] * c for c in dickson[j]])
    return t


def _cayley(c: list[int]) -> list[int]:
    """Coefficients of (1 - w)^n c((1 + w)/(1 - w))."""
    n = len(c) - 1
    out = [0] * (n + 1)
    plus = [[1]]
    minus = [[1]]
    for _ in range(n):
        plus.append(P.pmul(plus[-1], [1, 1]))
        minus.append(P.pmul(minus[-1], [1, -1]))
    for k, a in enumerate(c):
        if a:
            term = P.pmul(plus[k], minus[n - k])
            for i, x in enumerate(term):
                out[i] += a * x
    return P.trim(out)


def _inside_circle_free(c: list[int]) -> int:
    """Roots strictly inside the unit disk, for ``c`` without roots on the circle."""
    n = len(c) - 1
    if n <= 0:
        return 0
    r = _cayley(c)
    assert len(r) - 1 == n, "circle-free polynomial must keep its degree under the Cayley map"
    # r(iy) = A(y) + i B(y)
    a = [0] * (n + 1)
    b = [0] * (n + 1)
    for j, x in enumerate(r):
        unit = (1, 1j, -1, -1j)[j % 4]
        if unit == 1:
            a[j] = x
        elif unit == -1:
            a[j] = -x
        elif unit == 1j:
            b[j] = x
        else:
            b[j] = -x
    a, b = P.trim(a), P.trim(b)
    # winding of r(iy) in units of pi equals (#left - #right)
    if len(a) > len(b):
        turns = -P.cauchy_index(b, a) if b else 0
    else:
        turns = P.cauchy_index(a, b) if a else 0
    return (n + turns) // 2


def unit_circle_root_counts(p: IntPolynomial) -> RootCircleCounts:
    """Exact counts of complex roots with modulus <1, =1, >1 (squarefree ``p``)."""
    c = list(p.coeffs)
    if len(c) <= 1:
        return RootCircleCounts(0, 0, 0)
    inside = on = outside = 0
    if c[0] == 0:
        c = c[1:]
        inside += 1
    g = P.pgcd(c, P.reverse(c))
    rest = P.exact_quotient(c, g) if len(g) > 1 else P.primitive(c)
    h = g
    for unit in (1, -1):
        if len(h) > 1 and P.sign_at(h, unit) == 0:
            h = _divide_linear(h, unit)
            on += 1
    if len(h) > 1:
        t = _trace_polynomial(h)
        on_pairs = P.count_real_roots(t, Fraction(-2), Fraction(2))
        half = (len(h) - 1) // 2
        on += 2 * on_pairs
        inside += half - on_pairs
        outside += half - on_pairs
    k = _inside_circle_free(rest)
    inside += k
    outside += len(rest) - 1 - k
    return RootCircleCounts(inside, on, outside)


def scaled_counts(p: IntPolynomial, radius) -> RootCircleCounts:
    """Counts of roots with modulus <, =, > a positive rational ``radius``."""
    radius = Fraction(radius)
    n = p.degree
    num, den = radius.numerator, radius.denominator
    # den^n p(radius z) has integer coefficients
    c = [a * num**i * den ** (n - i) for i, a in enumerate(p.coeffs)]
    return unit_circle_root_counts(IntPolynomial(tuple(c)))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def _check_gt_one(a: AlgebraicReal) -> None:
    if a.compare_rational(1) <= 0:
        raise NotGreaterThanOne(f"{float(a):.12g} is not greater than 1")


def _conjugate_equal_modulus(a: AlgebraicReal) -> bool:
    """Best-effort test for a conjugate other than q with modulus exactly q.

    Checks -q exactly, then whether q^2 is a root of multiplicity >= 3 of the
    polynomial whose roots are all pairwise products of conjugates.
    """
    c = a.poly.coeffs
    neg = [x if i % 2 == 0 else -x for i, x in enumerate(c)]
    if (a.gen * 0 + _eval_element(neg, a)).is_zero:
        return True
    import sympy

    x, y = sympy.symbols("x y")
    px = sum(int(v) * x**i for i, v in enumerate(c))
    n = len(c) - 1
    py = sympy.expand(sum(int(v) * y**i * x ** (n - i) for i, v in enumerate(c)))
    prod = sympy.Poly(sympy.resultant(px, py, x), y)
    coeffs = [int(v) for v in reversed(prod.all_coeffs())]
    q2 = a.gen * a.gen
    for _ in range(3):
        if not _eval_element(coeffs, a, q2).is_zero:
            return False
        coeffs = P.derivative(coeffs)
    return True


def _eval_element(coeffs, a: AlgebraicReal, at=None):
    at = a.gen if at is None else at
    acc = a.zero
    for c in reversed(coeffs):
        acc = acc * at + c
    return acc


def is_perron(a: AlgebraicReal, max_bits: int = 256) -> bool:
    """Every other conjugate strictly smaller than q in modulus (q > 1 assumed)."""
    n = a.degree
    if n == 1:
        return True
    bits = 8
    tie_checked = False
    while True:
        iso = a.refine(Fraction(1, 1 << bits))
        lo, hi = iso.lo, iso.hi
        if scaled_counts(a.poly, lo).inside == n - 1:
            return True
        if scaled_counts(a.poly, hi).outside > 0:
            return False
        if bits >= max_bits and not tie_checked:
            tie_checked = True
            if _conjugate_equal_modulus(a):
                return False
        bits *= 2


def classify_number(a: AlgebraicReal) -> NumberClass:
    _check_gt_one(a)
    counts = unit_circle_root_counts(a.poly)
    if not is_algebraic_integer(a.poly):
        return NumberClass(Tag.NOT_INTEGER, counts)
    if counts.outside == 1 and counts.on == 0:
        return NumberClass(Tag.PISOT, counts)
    if counts.outside == 1 and counts.on >= 1:
        return NumberClass(Tag.SALEM, counts)
    if is_perron(a):
        return NumberClass(Tag.PERRON, counts)
    return NumberClass(Tag.NON_PERRON, counts)


def density_verdict(a: AlgebraicReal, m: int) -> DensityVerdict:
    """Whether Y_m(q) is dense in the reals: iff q < m + 1 and q is not Pisot."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    _check_gt_one(a)
    if a.compare_rational(m + 1) >= 0:
        return DensityVerdict(False, "TooLarge")
    if classify_number(a).is_pisot:
        return DensityVerdict(False, "Pisot")
    return DensityVerdict(True)
