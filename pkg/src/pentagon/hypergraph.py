"""r-uniform hypergraphs, Berge girth up to a cap, and shadow-path censuses.

A Berge cycle of length k is a sequence of k distinct vertices v_1..v_k
and k distinct hyperedges h_1..h_k with {v_i, v_{i+1}} inside h_i (indices
mod k).  Girth 2 means two hyperedges share two vertices, i.e. the
hypergraph is not linear.  "Girth at least 6" means no Berge cycle of
length 2, 3, 4 or 5 exists; no 6-cycle is required to exist.

The 2-shadow of H is the graph on the same vertex set whose edges are all
pairs covered by a hyperedge.  For linear H every vertex satisfies
deg_shadow(v) = (r-1) * deg_H(v).

Good/bad 3-paths in the shadow: an ordered 3-path (v0, v1, v2, v3) is bad
when {v0, v1, v2} or {v1, v2, v3} lies inside a single hyperedge, good
otherwise.  In a girth->=6 hypergraph, for every hyperedge h and vertex v
outside h there are at most r-1 good 3-paths v0-v1-v2-v with v0, v1 in h.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, StructureError
from .graph import Graph, _bits


class Hypergraph:
    """Immutable r-uniform hypergraph on vertices 0..n-1."""

    __slots__ = ("n", "r", "edges")

    def __init__(self, n: int, r: int, edges):
        if r < 2:
            raise ValueError("uniformity r must be at least 2")
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        seen = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"edge {t} is not a set of {r} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {t} out of range for n={n}")
            if t in seen:
                raise ValueError(f"duplicate edge {t}")
            seen.add(t)
            canon.append(t)
        self.n = n
        self.r = r
        self.edges = tuple(canon)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertex_degrees(self) -> list[int]:
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return degs

    def to_text(self) -> str:
        lines = [f"n={self.n} r={self.r}"]
        lines.extend(" ".join(map(str, e)) for e in sorted(self.edges))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, edges={len(self.edges)})"


def hypergraph_from_text(text: str) -> Hypergraph:
    """Parse the hypergraph format: header ``n=<k> r=<r>``, one edge per line."""
    n = r = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = dict(
                token.split("=", 1) for token in line.split() if "=" in token
            )
            if "n" not in parts or "r" not in parts or len(parts) != len(line.split()):
                raise ParseError("expected header 'n=<k> r=<r>'", lineno)
            try:
                n, r = int(parts["n"]), int(parts["r"])
            except ValueError:
                raise ParseError("non-integer header value", lineno) from None
            continue
        try:
            ids = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if len(ids) != r or len(set(ids)) != r:
            raise ParseError(
                f"expected {r} distinct vertex ids, got {line!r}", lineno
            )
        if min(ids) < 0 or max(ids) >= n:
            raise ParseError(f"vertex id out of range in {line!r}", lineno)
        edges.append(ids)
    if n is None:
        raise ParseError("missing 'n=<k> r=<r>' header", 1)
    try:
        return Hypergraph(n, r, edges)
    except ValueError as exc:  # duplicate edges surface with no line context
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# linearity and Berge girth


def is_linear(h: Hypergraph):
    """Whether all pairwise edge intersections have size <= 1.

    Returns (True, None) or (False, (e1, e2)) with the lexicographically
    least offending pair of edges.
    """
    es = sorted(h.edges)
    sets = [set(e) for e in es]
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if len(sets[i] & sets[j]) >= 2:
                return False, (es[i], es[j])
    return True, None


@dataclass(frozen=True)
class BergeCycleWitness:
    length: int
    vertices: tuple[int, ...]
    hyperedges: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BergeGirthResult:
    girth: int | None  # None means >= cap
    cap: int
    witness: BergeCycleWitness | None

    @property
    def verdict(self) -> str:
        return f">= {self.cap}" if self.girth is None else str(self.girth)


def _pair_map(edges):
    pairs: dict[tuple[int, int], list[int]] = {}
    for idx, e in enumerate(edges):
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                pairs.setdefault((e[i], e[j]), []).append(idx)
    return pairs


def berge_girth(h: Hypergraph, cap: int = 6) -> BergeGirthResult:
    """Smallest Berge cycle length below ``cap``, with a canonical witness.

    Searches lengths 2, 3, ..., cap-1 in order; within a length the witness
    is the lexicographically least canonical vertex sequence (smallest
    vertex first, smaller neighbour second), with covering hyperedges
    chosen smallest-first along it.
    """
    if cap < 3:
        raise ValueError("cap must be at least 3")
    es = sorted(h.edges)
    sets = [set(e) for e in es]
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            common = sorted(sets[i] & sets[j])
            if len(common) >= 2:
                return BergeGirthResult(
                    girth=2,
                    cap=cap,
                    witness=BergeCycleWitness(
                        length=2,
                        vertices=(common[0], common[1]),
                        hyperedges=(es[i], es[j]),
                    ),
                )
    pairs = _pair_map(es)
    adj: dict[int, set[int]] = {}
    for (u, v) in pairs:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)

    def closing(u, v, used):
        key = (u, v) if u < v else (v, u)
        for idx in pairs.get(key, ()):
            if idx not in used:
                return idx
        return None

    def dfs(k, seq, used):
        if len(seq) == k:
            idx = closing(seq[-1], seq[0], used)
            if idx is not None:
                return seq, used + [idx]
            return None
        last = seq[-1]
        for nxt in sorted(adj.get(last, ())):
            if nxt <= seq[0] or nxt in seq:
                continue
            if len(seq) == k - 1 and len(seq) >= 2 and nxt < seq[1]:
                continue  # reflection canon: second vertex < last vertex
            key = (last, nxt) if last < nxt else (nxt, last)
            for idx in pairs.get(key, ()):
                if idx in used:
                    continue
                found = dfs(k, seq + [nxt], used + [idx])
                if found:
                    return found
        return None

    for k in range(3, cap):
        for v0 in sorted(adj):
            found = dfs(k, [v0], [])
            if found:
                seq, used = found
                return BergeGirthResult(
                    girth=k,
                    cap=cap,
                    witness=BergeCycleWitness(
                        length=k,
                        vertices=tuple(seq),
                        hyperedges=tuple(es[i] for i in used),
                    ),
                )
    return BergeGirthResult(girth=None, cap=cap, witness=None)


def require_girth_at_least(h: Hypergraph, cap: int = 6) -> None:
    res = berge_girth(h, cap)
    if res.girth is not None:
        raise StructureError(
            f"hypergraph has Berge girth {res.girth} < {cap}", res.witness
        )


# ---------------------------------------------------------------------------
# shadow and 3-path census


def shadow(h: Hypergraph) -> Graph:
    """The 2-shadow: all vertex pairs covered by some hyperedge."""
    pairs = set()
    for e in h.edges:
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                pairs.add((e[i], e[j]))
    return Graph.from_edges(h.n, sorted(pairs))


@dataclass(frozen=True)
class ShadowCensus:
    shadow: Graph
    d_shadow: float
    d_shadow_max: int
    good3: int
    bad3: int
    total3: int


def three_path_census(h: Hypergraph) -> ShadowCensus:
    """Ordered good/bad 3-path counts in the 2-shadow.

    For each ordered middle edge (v1, v2), endpoints that would close a
    hyperedge-contained triple are exactly the vertices of hyperedges
    covering {v1, v2}; excluding them on both sides gives the good count.
    """
    g = shadow(h)
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    es = sorted(h.edges)
    pairs = _pair_map(es)
    emasks = []
    for e in es:
        m = 0
        for v in e:
            m |= 1 << v
        emasks.append(m)
    good = 0
    total = 0
    for u, v in g.edges():
        banned = 0
        for idx in pairs.get((u, v), ()):
            banned |= emasks[idx]
        for v1, v2 in ((u, v), (v, u)):
            t0 = rows[v1] & ~(1 << v2)
            t3 = rows[v2] & ~(1 << v1)
            total += t0.bit_count() * t3.bit_count() - (t0 & t3).bit_count()
            a0 = t0 & ~banned
            a3 = t3 & ~banned
            good += a0.bit_count() * a3.bit_count() - (a0 & a3).bit_count()
    degs = g.degrees()
    return ShadowCensus(
        shadow=g,
        d_shadow=2 * g.edge_count / g.n if g.n else 0.0,
        d_shadow_max=max(degs, default=0),
        good3=good,
        bad3=total - good,
        total3=total,
    )


# ---------------------------------------------------------------------------
# girth-6 structural checks


def cycle_containment_check(h: Hypergraph) -> list[tuple[int, ...]]:
    """Vertex sequences of shadow cycles (length 3..5) not inside one edge.

    Requires Berge girth >= 6; in that regime every short shadow cycle must
    have its vertex set inside a single hyperedge, so the returned list is
    expected to be empty.
    """
    require_girth_at_least(h, 6)
    g = shadow(h)
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    esets = [set(e) for e in h.edges]
    by_vertex: dict[int, list[int]] = {}
    for idx, e in enumerate(h.edges):
        for v in e:
            by_vertex.setdefault(v, []).append(idx)

    violations = []

    def check(cycle):
        cset = set(cycle)
        for idx in by_vertex.get(cycle[0], ()):
            if cset <= esets[idx]:
                return
        violations.append(tuple(cycle))

    def dfs(k, seq, used):
        if len(seq) == k:
            if rows[seq[-1]] >> seq[0] & 1:
                check(seq)
            return
        for nxt in _bits(rows[seq[-1]] & (-1 << (seq[0] + 1)) & ~used):
            if len(seq) == k - 1 and nxt < seq[1]:
                continue
            dfs(k, seq + [nxt], used | (1 << nxt))

    for k in (3, 4, 5):
        for v0 in range(g.n):
            dfs(k, [v0], 1 << v0)
    return violations


@dataclass(frozen=True)
class ThreePathBoundReport:
    max_count: int
    bound: int  # r - 1
    worst: tuple[tuple[int, ...], int] | None
    counts: dict


def hyperedge_3path_bound_report(h: Hypergraph) -> ThreePathBoundReport:
    """Count good 3-paths v0-v1-v2-v with v0, v1 in a fixed hyperedge.

    Requires girth >= 6.  Counts are grouped per (hyperedge, terminal
    vertex v outside the edge); each group is bounded by r-1.
    """
    require_girth_at_least(h, 6)
    g = shadow(h)
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    es = sorted(h.edges)
    pairs = _pair_map(es)
    emasks = []
    for e in es:
        m = 0
        for v in e:
            m |= 1 << v
        emasks.append(m)

    def banned(u, v):
        key = (u, v) if u < v else (v, u)
        m = 0
        for idx in pairs.get(key, ()):
            m |= emasks[idx]
        return m

    counts: dict[tuple[tuple[int, ...], int], int] = {}
    for ei, e in enumerate(es):
        emask = emasks[ei]
        for v0 in e:
            for v1 in e:
                if v0 == v1:
                    continue
                # good first triple: v2 outside every edge covering (v0, v1)
                for v2 in _bits(rows[v1] & ~banned(v0, v1) & ~(1 << v0)):
                    ymask = (
                        rows[v2]
                        & ~banned(v1, v2)
                        & ~(1 << v0)
                        & ~(1 << v1)
                        & ~emask
                    )
                    for v3 in _bits(ymask):
                        key = (e, v3)
                        counts[key] = counts.get(key, 0) + 1
    worst = None
    max_count = 0
    for key in sorted(counts):
        if counts[key] > max_count:
            max_count = counts[key]
            worst = key
    return ThreePathBoundReport(
        max_count=max_count,
        bound=h.r - 1,
        worst=worst,
        counts=counts,
    )


# ---------------------------------------------------------------------------
# K4 hypergraph of a pentagon-free graph


def k4_hypergraph(g: Graph) -> Hypergraph:
    """4-uniform hypergraph whose edges are the K4 blocks of G.

    Requires G to be C5-free; the result is re-verified to be linear with
    Berge girth >= 6 rather than trusted.
    """
    from .blocks import triangle_blocks
    from .census import require_c5_free

    require_c5_free(g, "k4 hypergraph")
    quads = [
        blk.vertices for blk in triangle_blocks(g) if blk.kind == "k4"
    ]
    h = Hypergraph(g.n, 4, quads)
    ok, pair = is_linear(h)
    if not ok:
        raise StructureError("k4 hypergraph is not linear", pair)
    require_girth_at_least(h, 6)
    return h
