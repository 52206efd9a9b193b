"""Spectra of q over finite digit sets, gap statistics, minimal values and power norms.

All ordering decisions are exact. Floats appear for display and as a filter in
the meet-in-the-middle search, where they are paired with rigorous error
radii so that no candidate is ever discarded on floating evidence alone.
"""
from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebraic import AlgebraicReal, FieldElement, exact_sorted, sign_of
from .errors import (
    AllZero,
    BoundNonPositive,
    InvalidDigits,
    LambdaZero,
    NotGreaterThanOne,
    TooFewPoints,
    TooLarge,
)

EXHAUSTIVE_LIMIT = 200_000


@dataclass(frozen=True)
class DigitSet:
    digits: tuple[Fraction, ...]

    def __post_init__(self):
        ds = tuple(sorted(Fraction(d) for d in self.digits))
        if not ds:
            raise InvalidDigits("digit set is empty")
        if len(set(ds)) != len(ds):
            raise InvalidDigits("digits must be distinct")
        object.__setattr__(self, "digits", ds)

    @classmethod
    def nonnegative(cls, m: int) -> "DigitSet":
        """{0, 1, ..., m}"""
        return cls(tuple(range(m + 1)))

    @classmethod
    def signed(cls, m: int) -> "DigitSet":
        """{0, +-1, ..., +-m}"""
        return cls(tuple(range(-m, m + 1)))

    @classmethod
    def parse(cls, text: str) -> "DigitSet":
        return cls(tuple(Fraction(s.strip()) for s in text.split(",") if s.strip()))

    def scaled(self, t) -> "DigitSet":
        return DigitSet(tuple(d * Fraction(t) for d in self.digits))

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)


@dataclass
class SpectrumSlice:
    q: AlgebraicReal
    digits: DigitSet
    bound: Fraction
    points: list[FieldElement]
    max_degree: int

    def floats(self) -> list[float]:
        return [float(p) for p in self.points]

    def __len__(self):
        return len(self.points)


@dataclass
class GapStats:
    gaps: list[FieldElement]
    min_gap: FieldElement
    max_gap: FieldElement
    horizon: Fraction

    @property
    def min_gap_float(self) -> float:
        return float(self.min_gap)

    @property
    def max_gap_float(self) -> float:
        return float(self.max_gap)


@dataclass
class MinValue:
    value: FieldElement
    approx: float
    witness: tuple[int, ...]


@dataclass
class PowerNorm:
    n: int
    norm: FieldElement  # exact distance to the nearest integer
    nearest: int
    approx: float
    error: Fraction  # certified bound on |approx - norm|
    partial_sum: float


def _require_gt_one(q: AlgebraicReal) -> None:
    if q.compare_rational(1) <= 0:
        raise NotGreaterThanOne(f"{float(q):.12g} is not greater than 1")


# ---------------------------------------------------------------------------
# X_m-style spectra
# ---------------------------------------------------------------------------


def degree_cap(q: AlgebraicReal, smallest_digit: Fraction, bound: Fraction) -> int:
    """Largest i with smallest_digit * q**i <= bound (-1 if even i = 0 fails)."""
    i = -1
    power = q.one
    while power * smallest_digit <= bound:
        i += 1
        power = power.mul_gen()
    return i


def enumerate_spectrum(q: AlgebraicReal, digits: DigitSet, bound) -> SpectrumSlice:
    """All values sum(eps_i q^i) <= bound with eps_i in a nonnegative digit set containing 0."""
    bound = Fraction(bound)
    if bound <= 0:
        raise BoundNonPositive("bound must be positive")
    if any(d < 0 for d in digits):
        raise InvalidDigits("enumerate_spectrum needs nonnegative digits")
    if 0 not in digits.digits:
        raise InvalidDigits("digit set must contain 0")
    _require_gt_one(q)
    positive = [d for d in digits if d > 0]
    if not positive:
        return SpectrumSlice(q, digits, bound, [q.zero], 0)
    cap = degree_cap(q, positive[0], bound)
    values = {q.zero}
    power = q.one
    for _ in range(cap + 1):
        new = set(values)
        for v in values:
            for d in positive:
                w = v + power * d
                if w <= bound:
                    new.add(w)
        values = new
        power = power.mul_gen()
    return SpectrumSlice(q, digits, bound, exact_sorted(values), max(cap, 0))


def gap_stats(s: SpectrumSlice) -> GapStats:
    if len(s.points) < 2:
        raise TooFewPoints("a gap needs at least two points")
    gaps = [b - a for a, b in zip(s.points, s.points[1:])]
    ordered = exact_sorted(gaps)
    return GapStats(gaps, ordered[0], ordered[-1], s.bound)


def spectrum_csv(s: SpectrumSlice, var: str = "q") -> str:
    """CSV with columns index, value_exact, value_float, gap_to_next."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "value_exact", "value_float", "gap_to_next"])
    for i, p in enumerate(s.points):
        gap = s.points[i + 1] - p if i + 1 < len(s.points) else None
        w.writerow([i, p.to_string(var), repr(float(p)), "" if gap is None else repr(float(gap))])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# minimal nonzero values of Y_m^n(q)
# ---------------------------------------------------------------------------


def _value_of(q: AlgebraicReal, coeffs: Sequence[int]) -> FieldElement:
    acc = q.zero
    for c in reversed(coeffs):
        acc = acc.mul_gen() + c
    return acc


def min_nonzero_exhaustive(q: AlgebraicReal, m: int, n: int) -> MinValue:
    """Oracle: walk every coefficient vector of length n and keep the smallest nonzero |value|."""
    _require_gt_one(q)
    if (2 * m + 1) ** n > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"(2m+1)^n = {(2 * m + 1) ** n} exceeds {EXHAUSTIVE_LIMIT}")
    powers = [q.one]
    for _ in range(n - 1):
        powers.append(powers[-1].mul_gen())
    best = None
    best_vec = None
    digits = range(-m, m + 1)

    def walk(i, acc, vec):
        nonlocal best, best_vec
        if i == n:
            if acc.is_zero:
                return
            a = abs(acc)
            if best is None or sign_of(a - best) < 0:
                best, best_vec = a, tuple(vec)
            return
        for d in digits:
            vec.append(d)
            walk(i + 1, acc + powers[i] * d if d else acc, vec)
            vec.pop()

    walk(0, q.zero, [])
    if best is None:
        raise AllZero("every coefficient vector evaluates to zero")
    return MinValue(best, float(best), best_vec)


class _Basis:
    """Integer images of q^i in the power basis, sharing one denominator."""

    def __init__(self, q: AlgebraicReal, n: int):
        self.q = q
        d = q.degree
        rows = []
        e = q.one
        for _ in range(n):
            rows.append(e)
            e = e.mul_gen()
        den = 1
        for r in rows:
            den = den * r.den // math.gcd(den, r.den)
        self.den = den
        self.rows = [[c * (den // r.den) for c in r.num] + [0] * (d - len(r.num)) for r in rows]
        self.dim = d
        # float images of the basis 1, q, ..., q^(d-1), each to within one ulp
        self.pw = np.array([float(q.gen ** j) if j else 1.0 for j in range(d)])

    def fits_int64(self, m: int) -> bool:
        total = m * sum(max(abs(c) for c in r) for r in self.rows)
        return total < 2**62 and self.den < 2**62


def _sumset(basis: _Basis, positions: Iterable[int], m: int, dtype):
    """Distinct vectors sum(eps_i * row_i), one witness digit vector each."""
    d = basis.dim
    vecs = np.zeros((1, d), dtype=dtype)
    wit = np.zeros((1, 0), dtype=np.int8)
    eps = np.arange(-m, m + 1)
    for i in positions:
        row = np.array(basis.rows[i], dtype=dtype)
        step = eps.astype(dtype)[:, None] * row[None, :]
        vecs = (vecs[:, None, :] + step[None, :, :]).reshape(-1, d)
        wit = np.concatenate(
            [np.repeat(wit, len(eps), axis=0), np.tile(eps, len(wit))[:, None].astype(np.int8)], axis=1
        )
        if dtype is object:
            keys = {}
            for k, v in enumerate(map(tuple, vecs)):
                keys.setdefault(v, k)
            idx = np.array(sorted(keys.values()), dtype=np.int64)
        else:
            _, idx = np.unique(vecs, axis=0, return_index=True)
        vecs, wit = vecs[idx], wit[idx]
    return vecs, wit


def _float_values(basis: _Basis, vecs):
    """Float values and a rigorous per-row error radius."""
    fv = vecs.astype(np.float64)
    vals = fv @ basis.pw / basis.den
    mag = np.abs(fv) @ np.abs(basis.pw) / basis.den
    err = mag * (basis.dim + 6) * 2.0**-52 + 1e-300
    return vals, err


def min_nonzero_value(q: AlgebraicReal, m: int, n: int, backend: str = "mitm") -> MinValue:
    """Smallest nonzero |sum_{i<n} eps_i q^i| over eps_i in {0, +-1, ..., +-m}, exactly.

    ``backend="mitm"`` splits the positions into a low and a high half,
    deduplicates each half's sums exactly, and matches them through a sorted
    float index whose search radius is widened by certified error bounds;
    candidates surviving the radius are compared exactly.
    ``backend="exhaustive"`` is the brute-force oracle.
    """
    if m < 1 or n < 1:
        raise AllZero("empty search space")
    if backend == "exhaustive":
        return min_nonzero_exhaustive(q, m, n)
    if backend != "mitm":
        raise ValueError(f"unknown backend {backend!r}")
    _require_gt_one(q)
    basis = _Basis(q, n)
    dtype = np.int64 if basis.fits_int64(m) else object
    k = n // 2
    low, low_w = _sumset(basis, range(k), m, dtype)
    high, high_w = _sumset(basis, range(k, n), m, dtype)
    fl, el = _float_values(basis, low)
    fh, eh = _float_values(basis, high)
    order = np.argsort(fl, kind="stable")
    low, low_w, fl, el = low[order], low_w[order], fl[order], el[order]
    err = float(el.max() + eh.max())

    def pairs_within(radius):
        """Index pairs (li, hi) whose float sum lies within +-radius."""
        start = np.searchsorted(fl, -fh - radius, side="left")
        stop = np.searchsorted(fl, -fh + radius, side="right")
        counts = stop - start
        hi_idx = np.repeat(np.arange(len(fh)), counts)
        offsets = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
        li_idx = np.repeat(start, counts) + offsets
        return li_idx, hi_idx

    # seed an upper bound from the nearest float neighbours of each high half
    pos = np.searchsorted(fl, -fh)
    li = np.clip(pos[:, None] + np.arange(-2, 2)[None, :], 0, len(fl) - 1)
    hi = np.broadcast_to(np.arange(len(fh))[:, None], li.shape)
    li, hi = li.ravel(), hi.ravel()
    nonzero = np.any(low[li] + high[hi] != 0, axis=1)
    if not nonzero.any():
        li, hi = np.meshgrid(np.arange(len(fl)), np.arange(len(fh)), indexing="ij")
        li, hi = li.ravel(), hi.ravel()
        nonzero = np.any(low[li] + high[hi] != 0, axis=1)
        if not nonzero.any():
            raise AllZero("every coefficient vector evaluates to zero")
    upper = float(np.abs(fl[li[nonzero]] + fh[hi[nonzero]]).min()) + err
    # every pair whose exact value is <= the true minimum is inside this radius
    li, hi = pairs_within(upper + err)
    sums = low[li] + high[hi]
    keep = np.any(sums != 0, axis=1)
    li, hi, sums = li[keep], hi[keep], sums[keep]
    fv = np.abs(fl[li] + fh[hi])
    cutoff = fv.min() + 2 * err
    best = None
    best_k = None
    for k_ in np.flatnonzero(fv <= cutoff):
        val = abs(FieldElement(q, [int(c) for c in sums[k_]], basis.den))
        if best is None or sign_of(val - best) < 0:
            best, best_k = val, k_
    witness = tuple(int(c) for c in low_w[li[best_k]]) + tuple(int(c) for c in high_w[hi[best_k]])
    return MinValue(best, float(best), witness)


def evaluate_digits(q: AlgebraicReal, coeffs: Sequence[int]) -> FieldElement:
    """sum_i coeffs[i] * q^i as an exact field element."""
    return _value_of(q, coeffs)


# ---------------------------------------------------------------------------
# distances of lambda q^n to the integers
# ---------------------------------------------------------------------------


def _nearest_integer(v: FieldElement) -> int:
    if v.is_rational:
        r = v.as_fraction()
        return math.floor(r + Fraction(1, 2))
    bits = 64
    while True:
        lo, hi = v.enclosure(bits)
        a, b = math.floor(lo + Fraction(1, 2)), math.floor(hi + Fraction(1, 2))
        if a == b:
            return a
        bits *= 2


def power_norms(lam, q: AlgebraicReal, N: int, abs_err=Fraction(1, 10**12)) -> list[PowerNorm]:
    """||lam q^n|| for n = 1..N with certified floats and running partial sums."""
    lam = Fraction(lam)
    if lam == 0:
        raise LambdaZero("lambda must be nonzero")
    out = []
    v = q.rational(lam)
    total = 0.0
    for n in range(1, N + 1):
        v = v.mul_gen()
        k = _nearest_integer(v)
        dist = abs(v - k)
        approx, lo, hi = dist.certified(abs_err)
        total += approx
        out.append(PowerNorm(n, dist, k, approx, hi - lo, total))
    return out
