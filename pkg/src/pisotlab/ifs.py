"""Separation analysis for homogeneous iterated function systems x -> rho*x + b_i.

The normalized difference of two depth-n words, rho^-n (phi_I(0) - phi_J(0)),
evolves one digit pair at a time as ``d -> (d + (b_i - b_j)) / rho``. The
neighbor graph collects every value this walk takes inside (-1, 1), stored by
absolute value. A finite closed graph is the finite set demanded by the finite
type condition; its smallest positive node is a weak separation constant.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .algebraic import AlgebraicReal, FieldElement, compare, exact_sorted, sign_of
from .errors import DeltaNotInB, IncompleteGraph, InvalidIFS, OutOfRange, TooLarge

DEFAULT_BUDGET = 100_000
BRUTE_FORCE_LIMIT = 10**8
ENUMERATION_LIMIT = 2 * 10**6


@dataclass
class HomogeneousIFS:
    rho: FieldElement
    translations: tuple[FieldElement, ...]

    def __post_init__(self):
        self.translations = tuple(self.translations)
        ctx = self.rho.ctx
        if any(b.ctx is not ctx for b in self.translations):
            raise InvalidIFS("translations must live in the field of rho")
        if not (0 < self.rho < 1):
            raise InvalidIFS("contraction ratio must lie in (0, 1)")
        b = self.translations
        if not b or not b[0].is_zero:
            raise InvalidIFS("b_0 must be 0")
        if any(x >= y for x, y in zip(b, b[1:])):
            raise InvalidIFS("translations must be strictly increasing")
        if len(b) > 1 and b[-1] != 1 - self.rho:
            raise InvalidIFS("b_m must equal 1 - rho")
        self.rho_inv = self.rho.inverse()
        self._inv_is_gen = self.rho_inv == ctx.gen
        diffs = {x - y for x in b for y in b}
        self.deltas: tuple[FieldElement, ...] = tuple(exact_sorted(diffs))
        self._delta_index = {d: i for i, d in enumerate(self.deltas)}

    @property
    def ctx(self) -> AlgebraicReal:
        return self.rho.ctx

    @property
    def m(self) -> int:
        return len(self.translations) - 1

    def expand(self, x: FieldElement) -> FieldElement:
        """x / rho"""
        return x.mul_gen() if self._inv_is_gen else x * self.rho_inv

    def point(self, word) -> FieldElement:
        """phi_I(0) = b_{i_1} + rho b_{i_2} + ... + rho^{n-1} b_{i_n}."""
        acc = self.ctx.zero
        for i in reversed(word):
            acc = self.translations[i] + self.rho * acc
        return acc


def ifs_from_q_m(q: AlgebraicReal, m: int) -> HomogeneousIFS:
    """The system {x/q + i(1 - 1/q)/m : 0 <= i <= m} attached to Y_m(q)."""
    if m < 1:
        raise OutOfRange("m must be a positive integer")
    if q.compare_rational(1) <= 0 or q.compare_rational(m + 1) > 0:
        raise OutOfRange(f"need 1 < q <= m+1, got q ~ {float(q):.12g}, m = {m}")
    rho = q.gen.inverse()
    step = (1 - rho) * q.rational(1) / m
    return HomogeneousIFS(rho, tuple(step * i for i in range(m + 1)))


def covering_check(f: HomogeneousIFS) -> bool:
    """b_{i+1} - b_i <= rho for every i, i.e. the first-level images cover [0, 1]."""
    b = f.translations
    return all(y - x <= f.rho for x, y in zip(b, b[1:]))


def _step(f: HomogeneousIFS, v: FieldElement, delta: FieldElement) -> Optional[FieldElement]:
    w = f.expand(v + delta)
    if w.is_zero:
        return w
    ctx = w.ctx
    if len(w.num) > 1:
        K, lo, hi = ctx._bounds(w.num, 64)
        one = w.den << K
        if lo > 0 and hi < one:
            return w
        if hi < 0 and lo > -one:
            return -w
        if lo >= one or hi <= -one:
            return None
    a = w if sign_of(w) > 0 else -w
    return a if sign_of(a - 1) < 0 else None


def transition(v: FieldElement, delta: FieldElement, f: HomogeneousIFS) -> Optional[FieldElement]:
    """|(v + delta) / rho| if it is below 1, otherwise ``None`` (the walk exits)."""
    if delta not in f._delta_index:
        raise DeltaNotInB("delta is not a difference of two translations")
    return _step(f, v, delta)


@dataclass
class NeighborGraph:
    ifs: HomogeneousIFS
    nodes: list[FieldElement]
    edges: dict[tuple[int, int], Optional[int]]
    complete: bool
    budget: int
    depth: int = 0
    index: dict[FieldElement, int] = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.nodes)

    def node_values(self) -> set[FieldElement]:
        return set(self.nodes)

    def to_dict(self, var: str = "q") -> dict:
        """Node list (exact strings and floats) and edges ``(node, delta_index) -> node|EXIT``."""
        return {
            "complete": self.complete,
            "budget": self.budget,
            "deltas": [{"exact": d.to_string(var), "float": float(d)} for d in self.ifs.deltas],
            "nodes": [{"exact": v.to_string(var), "float": float(v)} for v in self.nodes],
            "edges": [
                {"node": u, "delta_index": k, "target": "EXIT" if t is None else t}
                for (u, k), t in sorted(self.edges.items())
            ],
        }


def build_neighbor_graph(f: HomogeneousIFS, budget: int = DEFAULT_BUDGET) -> NeighborGraph:
    """Breadth-first closure of {0} under the transitions, with at most ``budget`` nodes.

    Frontiers are processed in exact ascending order and deltas in ascending
    order, so node numbering is reproducible. ``complete`` is False when the
    budget ran out; such a graph is inconclusive.
    """
    zero = f.ctx.zero
    nodes = [zero]
    index = {zero: 0}
    edges: dict[tuple[int, int], Optional[int]] = {}
    frontier = [zero]
    depth = 0
    while frontier:
        nxt = []
        for v in exact_sorted(frontier):
            u = index[v]
            for k, delta in enumerate(f.deltas):
                w = _step(f, v, delta)
                if w is None:
                    edges[(u, k)] = None
                    continue
                t = index.get(w)
                if t is None:
                    if len(nodes) >= budget:
                        return NeighborGraph(f, nodes, edges, False, budget, depth, index)
                    t = len(nodes)
                    index[w] = t
                    nodes.append(w)
                    nxt.append(w)
                edges[(u, k)] = t
        frontier = nxt
        depth += 1
    return NeighborGraph(f, nodes, edges, True, budget, depth, index)


def _require_complete(g: NeighborGraph) -> None:
    if not g.complete:
        raise IncompleteGraph("graph construction hit its budget")


def wsc_constant(g: NeighborGraph) -> FieldElement:
    """Smallest positive node; 1 when the only node is 0."""
    _require_complete(g)
    positive = [v for v in g.nodes if not v.is_zero]
    if not positive:
        return g.ifs.ctx.one
    return exact_sorted(positive)[0]


def completion_depth(g: NeighborGraph) -> Optional[int]:
    """Least k such that every node reaches 0 in at most k transitions, or None."""
    _require_complete(g)
    preds: dict[int, list[int]] = {i: [] for i in range(len(g.nodes))}
    for (u, _k), t in g.edges.items():
        if t is not None:
            preds[t].append(u)
    dist = {0: 0}
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for u in preds[t]:
            if u not in dist:
                dist[u] = dist[t] + 1
                queue.append(u)
    if len(dist) < len(g.nodes):
        return None
    return max(dist.values())


def brute_force_differences(f: HomogeneousIFS, n: int) -> set[FieldElement]:
    """{|rho^-k (phi_I(0) - phi_J(0))| < 1 : k <= n} by enumerating digit pairs.

    Works with raw differences phi_I(0) - phi_J(0) built from the definition of
    phi_I(0). A pair whose normalized difference reaches 1 in modulus is
    dropped: one more step maps |d| >= 1 to |d + delta| / rho >= 1 because
    |delta| <= 1 - rho. Pairs sharing a raw difference share every extension,
    so each depth keeps one representative per raw difference.
    """
    if (f.m + 1) ** (2 * n) > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"(m+1)^(2n) = {(f.m + 1) ** (2 * n)} exceeds {BRUTE_FORCE_LIMIT}")
    ctx = f.ctx
    b = f.translations
    raw = {ctx.zero}
    found: set[FieldElement] = set()
    rho_pow = ctx.one  # rho^(k-1) at depth k
    scale = ctx.one  # rho^-k at depth k
    for _ in range(n):
        scale = scale * f.rho_inv
        nxt = set()
        for d in raw:
            for bi in b:
                for bj in b:
                    e = d + rho_pow * (bi - bj)
                    if e in nxt:
                        continue
                    normalized = abs(e * scale)
                    if normalized < 1:
                        nxt.add(e)
                        found.add(normalized)
        raw = nxt
        rho_pow = rho_pow * f.rho
    return found


def level_points(f: HomogeneousIFS, n: int) -> list[FieldElement]:
    """Sorted distinct left endpoints phi_I(0), I in {0..m}^n."""
    if (f.m + 1) ** n > ENUMERATION_LIMIT:
        raise TooLarge(f"(m+1)^n = {(f.m + 1) ** n} exceeds {ENUMERATION_LIMIT}")
    pts = {f.ctx.zero}
    rho_pow = f.ctx.one
    for _ in range(n):
        pts = {p + rho_pow * bi for p in pts for bi in f.translations}
        rho_pow = rho_pow * f.rho
    return exact_sorted(pts)


def overlap_multiplicity(f: HomogeneousIFS, n: int) -> int:
    """Most distinct points phi_I(0), |I| = n, inside one closed window of length rho^n."""
    pts = level_points(f, n)
    width = f.rho**n
    best = 0
    j = 0
    for i, p in enumerate(pts):
        j = max(j, i)
        while j + 1 < len(pts) and compare(pts[j + 1] - p, width) <= 0:
            j += 1
        best = max(best, j - i + 1)
    return best
