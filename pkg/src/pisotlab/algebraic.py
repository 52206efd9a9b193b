"""Exact real algebraic numbers and arithmetic in the number field they generate.

An :class:`AlgebraicReal` is a defining polynomial plus a rational isolating
interval. Elements of ``Q(q)`` are :class:`FieldElement` residues
``num(q) / den`` with ``num`` reduced modulo the minimal polynomial, so two
elements are equal exactly when their residues coincide. Signs are decided by
certified interval evaluation at the isolated root, escalating precision until
the enclosure excludes zero.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Sequence

from . import polynomial as P
from .errors import ContextMismatch, DivisionByZero, PolynomialSyntaxError, RootIsolationError
from .polynomial import IntPolynomial, RationalInterval, parse_polynomial

#: width (as a power of two) reached before ``sign_of`` tries the exact gcd zero test
DEFAULT_BITS = 64
_GUARD_BITS = 16
_MAX_BITS = 1 << 16


def _as_interval(iso) -> RationalInterval:
    if isinstance(iso, RationalInterval):
        return iso
    if isinstance(iso, str):
        lo, hi = (Fraction(s.strip()) for s in iso.split(","))
        return RationalInterval(lo, hi)
    lo, hi = iso
    return RationalInterval(Fraction(lo), Fraction(hi))


def _roots_in_closed(c: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    if lo == hi:
        return int(P.sign_at(c, lo) == 0)
    return P.count_real_roots(c, lo, hi) + int(P.sign_at(c, lo) == 0)


def _minimal_factor(c: list[int], lo: Fraction, hi: Fraction) -> list[int]:
    """The irreducible factor of ``c`` that owns the root in [lo, hi]."""
    if len(c) <= 2:
        return c
    import sympy

    x = sympy.Symbol("x")
    _, factors = sympy.factor_list(sympy.Poly(list(reversed(c)), x))
    for f, _mult in factors:
        fc = P.primitive([int(a) for a in reversed(f.all_coeffs())])
        if len(fc) > 1 and _roots_in_closed(fc, lo, hi) == 1:
            return fc
    raise RootIsolationError("no factor owns the isolated root")  # pragma: no cover


class AlgebraicReal:
    """A real algebraic number: minimal polynomial and a shrinking isolating interval.

    The given polynomial only needs to be nonzero with exactly one distinct
    real root in ``iso``; it is reduced to its squarefree part and then to the
    irreducible factor carrying that root, which makes field residues canonical.
    """

    def __init__(self, poly: IntPolynomial | str | Sequence[int], iso):
        if isinstance(poly, str):
            poly = parse_polynomial(poly)
        elif not isinstance(poly, IntPolynomial):
            poly = IntPolynomial(tuple(poly))
        if poly.is_zero:
            raise RootIsolationError("defining polynomial is zero")
        iso = _as_interval(iso)
        sq = P.squarefree(poly.coeffs)
        n = _roots_in_closed(sq, iso.lo, iso.hi)
        if n != 1:
            raise RootIsolationError(f"{poly} has {n} real roots in {iso}, expected exactly one")
        self.given = poly
        minimal = _minimal_factor(sq, iso.lo, iso.hi)
        self.poly = IntPolynomial(tuple(minimal))
        self._coeffs = self.poly.coeffs
        self.degree = self.poly.degree
        if self.degree == 1:
            r = Fraction(-self._coeffs[0], self._coeffs[1])
            self._iso = (r, r)
        else:
            self._iso = (iso.lo, iso.hi)
        self._sign_hi = P.sign_at(self._coeffs, self._iso[1])
        self._tables: dict[int, tuple[int, list[tuple[int, int]]]] = {}
        self.zero = FieldElement(self, ())
        self.one = FieldElement(self, (1,))
        self.gen = FieldElement(self, (0, 1))

    @classmethod
    def from_rational(cls, r) -> "AlgebraicReal":
        r = Fraction(r)
        return cls(IntPolynomial((-r.numerator, r.denominator)), (r, r))

    @classmethod
    def parse(cls, poly: str, root_in: str) -> "AlgebraicReal":
        return cls(parse_polynomial(poly), _as_interval(root_in))

    # -- interval refinement -------------------------------------------------

    @property
    def iso(self) -> RationalInterval:
        return RationalInterval(*self._iso)

    def _bisect(self) -> None:
        lo, hi = self._iso
        mid = (lo + hi) / 2
        s = P.sign_at(self._coeffs, mid)
        if s == 0:
            self._iso = (mid, mid)
        elif s == self._sign_hi:
            self._iso = (lo, mid)
        else:
            self._iso = (mid, hi)

    def refine(self, eps) -> RationalInterval:
        """Tighten the cached isolating interval to width at most ``eps``."""
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        while self._iso[1] - self._iso[0] > eps:
            self._bisect()
        return self.iso

    def _power_table(self, bits: int) -> tuple[int, list[tuple[int, int]]]:
        """Scaled integer enclosures of q**i, i < degree: q**i in [lo, hi] / 2**K."""
        table = self._tables.get(bits)
        if table is not None:
            return table
        K = bits + _GUARD_BITS + 2 * self.degree
        self.refine(Fraction(1, 1 << K))
        lo, hi = self._iso
        L = (lo.numerator << K) // lo.denominator
        U = -((-hi.numerator << K) // hi.denominator)
        one = 1 << K
        rows = [(one, one)]
        a, b = one, one
        for _ in range(1, max(self.degree, 1)):
            prods = (a * L, a * U, b * L, b * U)
            a = min(prods) >> K
            b = -((-max(prods)) >> K)
            rows.append((a, b))
        table = (K, rows)
        self._tables[bits] = table
        return table

    def _bounds(self, num: Sequence[int], bits: int) -> tuple[int, int, int]:
        """Integer bounds (K, lo, hi) with ``lo/2**K <= num(q) <= hi/2**K``."""
        K, rows = self._power_table(bits)
        lo = hi = 0
        for c, (a, b) in zip(num, rows):
            if c > 0:
                lo += c * a
                hi += c * b
            elif c < 0:
                lo += c * b
                hi += c * a
        return K, lo, hi

    # -- conveniences --------------------------------------------------------

    def element(self, num: Iterable = (), den: int = 1) -> "FieldElement":
        return FieldElement(self, num, den)

    def rational(self, r) -> "FieldElement":
        r = Fraction(r)
        return FieldElement(self, (r.numerator,), r.denominator)

    def __float__(self) -> float:
        return float(self.gen)

    def compare_rational(self, r) -> int:
        """Sign of ``q - r`` for a rational ``r``."""
        return sign_of(self.gen - self.rational(r))

    def __repr__(self):
        return f"AlgebraicReal({self.poly}, [{self._iso[0]}, {self._iso[1]}] ~ {float(self):.12g})"

    def describe(self) -> dict:
        return {
            "polynomial": str(self.poly),
            "isolating_interval": [str(self._iso[0]), str(self._iso[1])],
            "approx": float(self),
        }


def _reduce_residue(num: list[int], den: int, poly: Sequence[int]) -> tuple[list[int], int]:
    d = len(poly) - 1
    lc = poly[-1]
    if lc == 1:
        while len(num) - 1 >= d:
            top = num.pop()
            if top:
                shift = len(num) - d
                for i in range(d):
                    num[shift + i] -= top * poly[i]
            P.trim(num)
    else:
        while len(num) - 1 >= d:
            top = num[-1]
            shift = len(num) - 1 - d
            num = [lc * x for x in num]
            den *= lc
            for i in range(d + 1):
                num[shift + i] -= top * poly[i]
            P.trim(num)
    return num, den


class FieldElement:
    """``num(q) / den`` in the number field of ``ctx``, kept in canonical form."""

    __slots__ = ("num", "den", "ctx")

    def __init__(self, ctx: AlgebraicReal, num: Iterable = (), den: int = 1):
        num = P.trim([int(c) for c in num])
        den = int(den)
        if den == 0:
            raise DivisionByZero("zero denominator")
        if len(num) > ctx.degree:
            num, den = _reduce_residue(num, den, ctx._coeffs)
        self._set(ctx, num, den)

    def _set(self, ctx, num: list[int], den: int) -> None:
        if den < 0:
            num, den = [-c for c in num], -den
        if not num:
            den = 1
        else:
            g = gcd(P.content(num), den)
            if g > 1:
                num = [c // g for c in num]
                den //= g
        self.num = tuple(num)
        self.den = den
        self.ctx = ctx

    @classmethod
    def _raw(cls, ctx, num: list[int], den: int) -> "FieldElement":
        e = object.__new__(cls)
        if len(num) > ctx.degree:
            num, den = _reduce_residue(num, den, ctx._coeffs)
        e._set(ctx, num, den)
        return e

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ContextMismatch("elements belong to different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.rational(other)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return FieldElement._raw(self.ctx, P.padd(self.num, o.num), self.den)
        a = [c * o.den for c in self.num]
        b = [c * self.den for c in o.num]
        return FieldElement._raw(self.ctx, P.padd(a, b), self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.ctx, [-c for c in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement._raw(self.ctx, P.pmul(self.num, o.num), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.num:
            raise DivisionByZero("division by zero in number field")
        if len(self.num) == 1:
            return FieldElement._raw(self.ctx, [self.den], self.num[0])
        # extended Euclid over Q: s*num + t*poly = g
        r0 = [Fraction(c) for c in self.ctx._coeffs]
        r1 = [Fraction(c) for c in self.num]
        s0: list = []
        s1: list = [Fraction(1)]
        while r1:
            q, r = P.pdivmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, P.psub(s0, P.pmul(q, s1))
        if len(r0) > 1:
            raise DivisionByZero("element is a zero divisor")
        inv = [c / r0[0] * self.den for c in s0]
        den = 1
        for c in inv:
            den = den * c.denominator // gcd(den, c.denominator)
        return FieldElement._raw(self.ctx, [int(c * den) for c in inv], den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_gen(self) -> "FieldElement":
        """Multiply by the generator q (a shift plus one reduction step)."""
        return FieldElement._raw(self.ctx, [0, *self.num] if self.num else [], self.den)

    # -- order ---------------------------------------------------------------

    def sign(self) -> int:
        return sign_of(self)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare FieldElement with {type(other).__name__}")
        return sign_of(self - o)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ContextMismatch("elements belong to different number fields")
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            o = self.ctx.rational(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return bool(self.num)

    # -- inspection ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_rational(self) -> bool:
        return len(self.num) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is irrational")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def enclosure(self, bits: int = DEFAULT_BITS) -> tuple[Fraction, Fraction]:
        """Rational bounds on the value, of width roughly 2**-bits times the coefficient size."""
        if self.is_rational:
            v = self.as_fraction()
            return v, v
        K, lo, hi = self.ctx._bounds(self.num, bits)
        scale = self.den << K
        return Fraction(lo, scale), Fraction(hi, scale)

    def certified(self, abs_err=Fraction(1, 10**12)) -> tuple[float, Fraction, Fraction]:
        """Bounds of width at most ``abs_err`` plus a float inside them."""
        abs_err = Fraction(abs_err)
        bits = DEFAULT_BITS
        while True:
            lo, hi = self.enclosure(bits)
            if hi - lo <= abs_err or bits >= _MAX_BITS:
                return float((lo + hi) / 2), lo, hi
            bits *= 2

    def __float__(self) -> float:
        if self.is_rational:
            return float(self.as_fraction())
        bits = DEFAULT_BITS
        while True:
            lo, hi = self.enclosure(bits)
            mid = (lo + hi) / 2
            if (lo > 0 or hi < 0) and hi - lo <= abs(mid) / (1 << 60) or bits >= 4096:
                return float(mid)
            bits *= 2

    def to_string(self, var: str = "q") -> str:
        body = P.format_polynomial(self.num, var)
        if self.den == 1:
            return body
        if sum(1 for c in self.num if c) > 1:
            return f"({body})/{self.den}"
        return f"{body}/{self.den}"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"FieldElement({self.to_string()} ~ {float(self):.12g})"


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def sign_of(e: FieldElement) -> int:
    """Exact sign of ``e`` at the isolated root of its context.

    Certified interval evaluation at 2**-64, then the exact zero test via
    ``gcd(num, minpoly)``, then interval evaluation at doubling precision.
    Terminates because a nonzero residue modulo the minimal polynomial has a
    nonzero value.
    """
    num = e.num
    if not num:
        return 0
    if len(num) == 1:
        return 1 if num[0] > 0 else -1
    ctx = e.ctx
    bits = DEFAULT_BITS
    gcd_checked = False
    while True:
        _, lo, hi = ctx._bounds(num, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if not gcd_checked:
            gcd_checked = True
            g = P.pgcd(num, ctx._coeffs)
            if len(g) > 1:
                lo_, hi_ = ctx._iso
                if _roots_in_closed(g, lo_, hi_) == 1:
                    return 0
        bits *= 2


def compare(a: FieldElement, b: FieldElement) -> int:
    """-1, 0 or 1 according to the exact order of ``a`` and ``b``."""
    if a.ctx is not b.ctx:
        raise ContextMismatch("elements belong to different number fields")
    return sign_of(a - b)


def element_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.ctx is not b.ctx:
        raise ContextMismatch("elements belong to different number fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def refine(a: AlgebraicReal, eps) -> RationalInterval:
    return a.refine(eps)


def exact_sorted(elements: Iterable[FieldElement], reverse: bool = False) -> list[FieldElement]:
    """Sort by exact value, using 64-bit enclosures and comparing exactly only on overlaps."""
    items = list(elements)
    if len(items) < 2:
        return items
    boxed = sorted(((e.enclosure(), e) for e in items), key=lambda t: t[0][0])
    out: list[FieldElement] = []
    cluster: list[FieldElement] = []
    reach = None
    for (lo, hi), e in boxed:
        if cluster and lo > reach:
            out.extend(_exact_cluster(cluster))
            cluster = []
        if not cluster or hi > reach:
            reach = hi
        cluster.append(e)
    out.extend(_exact_cluster(cluster))
    if reverse:
        out.reverse()
    return out


def _exact_cluster(cluster: list[FieldElement]) -> list[FieldElement]:
    if len(cluster) == 1:
        return cluster
    return sorted(cluster, key=cmp_to_key(compare))


_ELEMENT_RE = re.compile(r"^\s*(?:\((?P<paren>.*)\)|(?P<bare>[^/]*))\s*(?:/\s*(?P<den>\d+))?\s*$")


def parse_element(text: str, ctx: AlgebraicReal, var: str = "q") -> FieldElement:
    """Inverse of :meth:`FieldElement.to_string`, e.g. ``"(q-1)/2"`` or ``"2-q"``."""
    m = _ELEMENT_RE.match(text)
    if not m:
        raise PolynomialSyntaxError(f"cannot parse field element {text!r}")
    body = m.group("paren") if m.group("paren") is not None else m.group("bare")
    den = int(m.group("den")) if m.group("den") else 1
    return FieldElement(ctx, P.parse_coefficients(body, var), den)
