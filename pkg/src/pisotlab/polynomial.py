"""Integer polynomials: exact parsing, gcds, Sturm sequences and real root isolation.

Coefficient lists are ascending in degree throughout (``c[i]`` multiplies ``x**i``).
The module-level helpers work on plain ``list[int]`` and are shared with the
algebraic and classification code; :class:`IntPolynomial` is the public,
normalized wrapper.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import EmptyInput, NonIntegerCoefficient, PolynomialSyntaxError

# ---------------------------------------------------------------------------
# raw coefficient-list helpers
# ---------------------------------------------------------------------------


def trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def content(c: Sequence[int]) -> int:
    return reduce(gcd, c, 0)


def primitive(c: Sequence[int]) -> list[int]:
    """Divide by the content and make the leading coefficient positive."""
    c = trim(list(c))
    if not c:
        return c
    g = content(c)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def reduce_content(c: Sequence[int]) -> list[int]:
    """Divide by the (positive) content without touching the sign."""
    c = trim(list(c))
    if not c:
        return c
    g = content(c)
    return [x // g for x in c]


def degree(c: Sequence) -> int:
    return len(c) - 1


def padd(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def psub(a: Sequence, b: Sequence) -> list:
    return padd(a, [-x for x in b])


def pmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def derivative(c: Sequence) -> list:
    return trim([i * c[i] for i in range(1, len(c))])


def reverse(c: Sequence[int]) -> list[int]:
    """Coefficients of ``x**deg * p(1/x)`` (leading zeros of the result dropped)."""
    return trim(list(reversed(trim(list(c)))))


def prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` scaled by a *positive* power of lc(b).

    Keeping the multiplier positive preserves the sign of the true remainder,
    which Sturm and Cauchy-index sequences depend on.
    """
    r = trim(list(a))
    db = degree(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lc = b[-1]
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        top = r[-1]
        # alc*r - sgn*top*x^shift*b  (sgn*alc == lc, so top cancels)
        r = [alc * x for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= sgn * top * y
        trim(r)
    return r


def pgcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    a, b = primitive(a), primitive(b)
    while b:
        r = prem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def pdivmod_q(a: Sequence, b: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Euclidean division over the rationals."""
    r = [Fraction(x) for x in trim(list(a))]
    b = [Fraction(x) for x in trim(list(b))]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    q = [Fraction(0)] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        f = r[-1] / b[-1]
        q[shift] = f
        for i, y in enumerate(b):
            r[i + shift] -= f * y
        r.pop()
        trim(r)
    return trim(q), r


def to_integer_primitive(c: Sequence[Fraction]) -> list[int]:
    """Clear denominators of a rational coefficient list and make it primitive."""
    c = trim(list(c))
    if not c:
        return []
    den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(x).denominator for x in c), 1)
    return primitive([int(Fraction(x) * den) for x in c])


def exact_quotient(a: Sequence[int], b: Sequence[int]) -> list[int]:
    q, r = pdivmod_q(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return to_integer_primitive(q)


def squarefree(c: Sequence[int]) -> list[int]:
    c = primitive(c)
    if len(c) <= 2:
        return c
    g = pgcd(c, derivative(c))
    if len(g) == 1:
        return c
    return exact_quotient(c, g)


def homogeneous_value(c: Sequence[int], num: int, den: int) -> int:
    """``den**deg * p(num/den)`` as an integer (sign equals sign of p(num/den) for den > 0)."""
    n = len(c) - 1
    if n < 0:
        return 0
    acc = c[n]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow *= den
        acc = acc * num + c[i] * dpow
    return acc


def sign_at(c: Sequence[int], x: Fraction | int) -> int:
    x = Fraction(x)
    v = homogeneous_value(c, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def evaluate(c: Sequence, x):
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def remainder_sequence(f0: Sequence[int], f1: Sequence[int]) -> list[list[int]]:
    """Signed remainder sequence f0, f1, -rem(f0, f1), ... with positive scalings."""
    seq = [reduce_content(f0), reduce_content(f1)]
    while seq[-1] and len(seq[-1]) > 1:
        r = prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(reduce_content([-x for x in r]))
    return [s for s in seq if s]


def sturm_sequence(c: Sequence[int]) -> list[list[int]]:
    return remainder_sequence(c, derivative(c))


def _variations(signs: Iterable[int]) -> int:
    last = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def variations_at(seq: Sequence[Sequence[int]], x: Fraction | int) -> int:
    return _variations(sign_at(s, x) for s in seq)


def variations_at_infinity(seq: Sequence[Sequence[int]], positive: bool) -> int:
    signs = []
    for s in seq:
        lead = 1 if s[-1] > 0 else -1
        if not positive and (len(s) - 1) % 2:
            lead = -lead
        signs.append(lead)
    return _variations(signs)


def cauchy_index(f1: Sequence[int], f0: Sequence[int]) -> int:
    """Cauchy index of f1/f0 over the whole real line."""
    seq = remainder_sequence(f0, f1)
    return variations_at_infinity(seq, False) - variations_at_infinity(seq, True)


def count_real_roots(c: Sequence[int], lo=None, hi=None) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi].

    ``None`` bounds mean minus/plus infinity.
    """
    c = squarefree(c)
    if len(c) <= 1:
        return 0
    seq = sturm_sequence(c)
    vlo = variations_at_infinity(seq, False) if lo is None else variations_at(seq, lo)
    vhi = variations_at_infinity(seq, True) if hi is None else variations_at(seq, hi)
    return vlo - vhi


def root_bound(c: Sequence[int]) -> int:
    """An integer strictly larger than the modulus of every complex root."""
    lc = abs(c[-1])
    return 2 + max((abs(x) for x in c[:-1]), default=0) // lc


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self):
        yield self.lo
        yield self.hi

    def within(self, other: "RationalInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in primitive form with positive leading coefficient.

    ``coeffs`` is ascending. The zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(primitive([int(x) for x in self.coeffs])))

    @classmethod
    def from_rationals(cls, coeffs: Iterable) -> "IntPolynomial":
        return cls(tuple(to_integer_primitive([Fraction(x) for x in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        return evaluate(self.coeffs, x)

    def sign_at(self, x) -> int:
        return sign_at(self.coeffs, x)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(derivative(self.coeffs)))

    def reversed(self) -> "IntPolynomial":
        return IntPolynomial(tuple(reverse(self.coeffs)))

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(pgcd(self.coeffs, other.coeffs)))

    def squarefree_part(self) -> "IntPolynomial":
        return IntPolynomial(tuple(squarefree(self.coeffs)))

    def is_squarefree(self) -> bool:
        return len(pgcd(self.coeffs, derivative(self.coeffs))) <= 1

    def count_real_roots(self, lo=None, hi=None) -> int:
        return count_real_roots(self.coeffs, lo, hi)

    def to_string(self, var: str = "x") -> str:
        return format_polynomial(self.coeffs, var)

    def __str__(self):
        return self.to_string()


def format_polynomial(coeffs: Sequence, var: str = "x", descending: bool | None = None) -> str:
    """Render ascending coefficients as e.g. ``x^2 - x - 1``.

    Terms are written from the highest degree down unless the leading
    coefficient is negative, in which case they run from the constant up
    (``2 - q`` rather than ``-q + 2``).
    """
    terms = [(i, c) for i, c in enumerate(coeffs) if c]
    if not terms:
        return "0"
    if descending is None:
        descending = terms[-1][1] > 0 or len(terms) == 1
    if descending:
        terms.reverse()
    out = []
    for k, (i, c) in enumerate(terms):
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


_NON_INTEGER = re.compile(r"\d*\.\d|\d\.|/|\d[eE][+-]?\d")


def parse_polynomial(text: str, var: str = "x") -> IntPolynomial:
    """Parse ``term (('+'|'-') term)*`` with ``term := int | int? x ('^' uint)?``.

    Whitespace is ignored and ``*`` between coefficient and variable is
    tolerated. No floating point is involved at any stage.
    """
    return IntPolynomial(tuple(parse_coefficients(text, var)))


def parse_coefficients(text: str, var: str = "x") -> list[int]:
    s = re.sub(r"\s+", "", text or "")
    if not s:
        raise EmptyInput("empty polynomial")
    if _NON_INTEGER.search(s):
        raise NonIntegerCoefficient(f"non-integer coefficient in {text!r}")
    term = re.compile(r"([+-]?)(\d+)?(\*?" + re.escape(var) + r"(?:\^(\d+))?)?")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = term.match(s, pos)
        sign, num, xpart, exp = m.groups()
        if m.end() == pos or (num is None and xpart is None):
            raise PolynomialSyntaxError(f"unexpected {s[pos:]!r} at offset {pos} in {text!r}")
        if not first and not sign:
            raise PolynomialSyntaxError(f"missing operator at offset {pos} in {text!r}")
        if xpart and xpart.startswith("*") and num is None:
            raise PolynomialSyntaxError(f"dangling '*' at offset {pos} in {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        d = int(exp) if exp is not None else (1 if xpart else 0)
        coeffs[d] = coeffs.get(d, 0) + c
        pos = m.end()
        first = False
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return trim(out)


# ---------------------------------------------------------------------------
# real root isolation
# ---------------------------------------------------------------------------


def _split_point(c: Sequence[int], a: Fraction, b: Fraction) -> Fraction:
    """A point strictly inside (a, b) that is not a root of ``c``."""
    for k in (2, 3, 5, 7, 11, 13):
        for j in range(1, k):
            x = a + (b - a) * j / k
            if sign_at(c, x) != 0:
                return x
    raise AssertionError("polynomial vanishes on too many points")  # pragma: no cover


def isolate_real_roots(p: IntPolynomial, max_width: Fraction = Fraction(1, 4)) -> list[RationalInterval]:
    """Disjoint closed isolating intervals for the distinct real roots of ``p``.

    Each interval has endpoints that are not roots, contains exactly one root
    and has width at most ``max_width``; the list is sorted ascending.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no isolated roots")
    c = squarefree(p.coeffs)
    if len(c) <= 1:
        return []
    seq = sturm_sequence(c)

    def count(a, b):
        return variations_at(seq, a) - variations_at(seq, b)

    def shrink(a, b):
        m = _split_point(c, a, b)
        return (a, m) if count(a, m) == 1 else (m, b)

    bound = Fraction(root_bound(c))
    stack = [(-bound, bound, count(-bound, bound))]
    found = []
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            found.append((a, b))
            continue
        m = _split_point(c, a, b)
        k1 = count(a, m)
        stack.append((a, m, k1))
        stack.append((m, b, k - k1))
    found.sort()
    found = [list(ab) for ab in found]
    for ab in found:
        while ab[1] - ab[0] > max_width:
            ab[0], ab[1] = shrink(*ab)
    changed = True
    while changed:
        changed = False
        for left, right in zip(found, found[1:]):
            if left[1] >= right[0]:
                left[0], left[1] = shrink(*left)
                right[0], right[1] = shrink(*right)
                changed = True
    return [RationalInterval(a, b) for a, b in found]
