"""Deterministic constructions and seeded random generators.

The two named constructions:

* ``projective_plane_incidence(q)``: point-line incidence graph of the
  projective plane over F_q (q prime).  N = q^2 + q + 1 points and N
  lines, (q+1)-regular, girth 6.  Points are homogeneous coordinate
  triples normalised so the first nonzero coordinate is 1 (equivalently,
  the lexicographically least nonzero scalar multiple), sorted; lines use
  the same triples via the standard duality, numbered N..2N-1.

* ``bollobas_gyori(q)``: the Bollobas-Gyori doubling of that incidence
  graph.  Each line vertex b gets a twin b' (numbered 2N..3N-1) joined to
  b and to all points of b, so every incidence pair becomes one triangle
  a-b-b'.  The result is C5-free and induced-C4-free with exactly
  (q+1)(q^2+q+1) triangles, all in crown blocks based at the bb' edges.

Seeded generators draw all randomness from ``random.Random(seed)`` and are
reproducible; their outputs are re-verified with the library detectors
rather than trusted.
"""

from __future__ import annotations

import random

from .errors import StructureError
from .graph import Graph, _bits
from .hypergraph import Hypergraph, require_girth_at_least


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def projective_plane_incidence(q: int) -> Graph:
    """Incidence graph of PG(2, q) for prime q.  Vertices: points then lines."""
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime")
    reps = []
    for x in range(q):
        for y in range(q):
            for z in range(q):
                if (x, y, z) == (0, 0, 0):
                    continue
                # first nonzero coordinate equal to 1 <=> lex-least scaling
                first = x if x else (y if y else z)
                if first == 1:
                    reps.append((x, y, z))
    reps.sort()
    n_side = q * q + q + 1
    assert len(reps) == n_side
    edges = []
    for i, p in enumerate(reps):
        for j, line in enumerate(reps):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                edges.append((i, n_side + j))
    return Graph.from_edges(2 * n_side, edges)


def bollobas_gyori(q: int) -> Graph:
    """Double the line class of the PG(2, q) incidence graph.

    Vertices 0..N-1 are points, N..2N-1 lines, 2N..3N-1 line twins,
    N = q^2 + q + 1.  Edges: both copies of every incidence pair plus the
    line-twin pairing edges.
    """
    g0 = projective_plane_incidence(q)
    n_side = q * q + q + 1
    edges = []
    for a, b in g0.edges():  # a point, b line by construction
        edges.append((a, b))
        edges.append((a, b + n_side))
    for b in range(n_side, 2 * n_side):
        edges.append((b, b + n_side))
    return Graph.from_edges(3 * n_side, edges)


# ---------------------------------------------------------------------------
# seeded generators


def greedy_girth6_hypergraph(
    n: int, r: int, seed: int, budget: int = 100_000
) -> Hypergraph:
    """Random maximal-ish r-uniform hypergraph with Berge girth >= 6.

    Repeatedly samples an r-set and accepts it iff all its vertex pairs are
    at distance >= 5 in the current 2-shadow; in a linear girth->=6 state
    that is exactly the condition under which the addition creates no Berge
    cycle of length 2..5.  Stops after ``budget`` rejected samples.  The
    result is re-verified with the full girth detector.
    """
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    if budget < 1:
        raise ValueError("budget must be positive")
    rng = random.Random(seed)
    rows = [0] * n
    edges: list[tuple[int, ...]] = []
    rejections = 0
    while rejections < budget:
        cand = sorted(rng.sample(range(n), r))
        balls = []
        for v in cand:
            ball = (1 << v) | rows[v]
            for u in _bits(rows[v]):
                ball |= rows[u]
            balls.append(ball)
        ok = True
        for i in range(r):
            for j in range(i + 1, r):
                if balls[i] & balls[j]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            rejections += 1
            continue
        edges.append(tuple(cand))
        for i in range(r):
            for j in range(i + 1, r):
                rows[cand[i]] |= 1 << cand[j]
                rows[cand[j]] |= 1 << cand[i]
    h = Hypergraph(n, r, edges)
    require_girth_at_least(h, 6)
    return h


def _completes_c5(rows: list[int], u: int, v: int) -> bool:
    """Whether adding edge uv closes a path of exactly four edges u..v."""
    bu, bv = 1 << u, 1 << v
    for a in _bits(rows[u] & ~bv):
        ba = 1 << a
        for b in _bits(rows[a] & ~bu & ~bv & ~ba):
            if rows[b] & rows[v] & ~bu & ~ba & ~(1 << b):
                return True
    return False


def random_c5_free(n: int, seed: int, budget: int = 10_000) -> Graph:
    """Incremental random edge insertion, rejecting C5-completing edges.

    Every sampled pair that is already present or would complete a 5-cycle
    counts one rejection; generation stops at ``budget`` rejections.  The
    output is re-verified C5-free.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if budget < 1:
        raise ValueError("budget must be positive")
    rng = random.Random(seed)
    rows = [0] * n
    edges = []
    rejections = 0
    while rejections < budget and n >= 2:
        u, v = rng.sample(range(n), 2)
        if u > v:
            u, v = v, u
        if (rows[u] >> v) & 1 or _completes_c5(rows, u, v):
            rejections += 1
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        edges.append((u, v))
    g = Graph.from_edges(n, edges)
    from .census import _has_c5, _c5_witness

    if _has_c5(g):
        raise StructureError("generator produced a 5-cycle", _c5_witness(g))
    return g


# ---------------------------------------------------------------------------
# gadgets


def gadget(kind: str, **params) -> Graph:
    """Small fixture graphs used to exercise the block machinery.

    kinds:
      crown(k):              base edge 0-1 plus tips 2..k+1 (2k+1 edges)
      k4_chain(m):           m K4s, consecutive ones sharing one vertex
      book_plus_pendants(k, pendants): crown(k) plus ``pendants`` pendant
                             2-paths hung on each base endpoint
    """
    if kind == "crown":
        k = params.pop("k", None)
        _no_extra(params)
        if k is None or k < 1:
            raise ValueError("crown needs k >= 1")
        edges = [(0, 1)]
        for c in range(2, k + 2):
            edges += [(0, c), (1, c)]
        return Graph.from_edges(k + 2, edges)
    if kind == "k4_chain":
        m = params.pop("m", None)
        _no_extra(params)
        if m is None or m < 1:
            raise ValueError("k4_chain needs m >= 1")
        edges = []
        for i in range(m):
            quad = [3 * i, 3 * i + 1, 3 * i + 2, 3 * i + 3]
            edges += [
                (quad[a], quad[b]) for a in range(4) for b in range(a + 1, 4)
            ]
        return Graph.from_edges(3 * m + 1, edges)
    if kind == "book_plus_pendants":
        k = params.pop("k", None)
        pendants = params.pop("pendants", None)
        _no_extra(params)
        if k is None or pendants is None or k < 1 or pendants < 0:
            raise ValueError("book_plus_pendants needs k >= 1, pendants >= 0")
        edges = [(0, 1)]
        for c in range(2, k + 2):
            edges += [(0, c), (1, c)]
        nxt = k + 2
        for anchor in (0, 1):
            for _ in range(pendants):
                x, y = nxt, nxt + 1
                edges += [(anchor, x), (x, y)]
                nxt += 2
        return Graph.from_edges(nxt, edges)
    raise ValueError(f"unknown gadget kind {kind!r}")


def _no_extra(params: dict) -> None:
    if params:
        raise ValueError(f"unexpected gadget parameters {sorted(params)}")
