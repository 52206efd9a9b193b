"""Neighbor graphs of x -> x/q + i(1-1/q)/m: finite exactly for Pisot q."""
import json
import time
from fractions import Fraction

from pisotlab import AlgebraicReal, build_neighbor_graph, classify_number, completion_depth, ifs_from_q_m
from pisotlab import overlap_multiplicity, wsc_constant

cases = [
    ("x^2-x-1", (1, 2), 1),
    ("x^3-x-1", (1, 2), 1),
    ("x^3-x^2-x-1", (1, 2), 1),
    ("x^2-2x-1", (2, 3), 2),
    ("x^2-2", (1, 2), 1),
    ("2x-3", (1, 2), 1),
]

for poly, iso, m in cases:
    q = AlgebraicReal(poly, iso)
    f = ifs_from_q_m(q, m)
    t0 = time.perf_counter()
    g = build_neighbor_graph(f, budget=20000)
    dt = time.perf_counter() - t0
    tag = classify_number(q).tag.value
    if g.complete:
        c = wsc_constant(g)
        print(f"{poly:14} m={m} {tag:20} {len(g):6d} nodes  c={float(c):.5f}  k={completion_depth(g)}"
              f"  overlap(6)={overlap_multiplicity(f, 6)}  {dt:.2f}s")
    else:
        print(f"{poly:14} m={m} {tag:20} budget exhausted after {len(g)} nodes  {dt:.2f}s")

golden = ifs_from_q_m(AlgebraicReal("x^2-x-1", (1, 2)), 1)
d = build_neighbor_graph(golden).to_dict()
print("\ngolden graph nodes:", [n["exact"] for n in d["nodes"]])
for e in d["edges"]:
    print("  ", json.dumps(e))
