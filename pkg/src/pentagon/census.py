"""Counting censuses on graphs: triangles, short cycles, walks and 5-paths.

Conventions
-----------
A k-walk is an ordered vertex sequence (v0, ..., vk) with consecutive
vertices adjacent; walks are counted ordered.  A k-path is a walk with all
vertices distinct; paths are counted unordered (a path and its reversal are
the same path) unless a function says otherwise.

A 2-path u-x-v is *good* when its endpoints u, v are non-adjacent.  A
5-path v0...v5 is *good* when no three consecutive vertices span a
triangle, i.e. none of the chords v0v2, v1v3, v2v4, v3v5 is present, and
*bad* otherwise.  The *middle edge* of a 5-path is v2v3.

Five-path counts are computed per middle edge by an exact
inclusion-exclusion over endpoint collisions between the two pendant
2-paths; a naive depth-5 DFS enumeration is kept alongside as an oracle.

Witnesses returned by the cycle detectors are canonical vertex sequences
(smallest vertex first, then the smaller of the two possible directions)
and are the lexicographically least such sequence in the graph, so results
are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructureError
from .graph import Graph, _bits


# ---------------------------------------------------------------------------
# triangles


@dataclass(frozen=True)
class TriangleCensus:
    triangles: tuple[tuple[int, int, int], ...]
    per_vertex: tuple[int, ...]
    total: int
    average: float


def triangle_census(g: Graph) -> TriangleCensus:
    """All triangles (as sorted triples), per-vertex counts and their mean."""
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    per_vertex = [0] * g.n
    triangles = []
    for u, v in g.edges():
        # w > v keeps each triangle counted once, at its sorted triple.
        above = -1 << (v + 1)
        for w in _bits(rows[u] & rows[v] & above):
            triangles.append((u, v, w))
            per_vertex[u] += 1
            per_vertex[v] += 1
            per_vertex[w] += 1
    average = sum(per_vertex) / g.n if g.n else 0.0
    return TriangleCensus(
        triangles=tuple(triangles),
        per_vertex=tuple(per_vertex),
        total=len(triangles),
        average=average,
    )


# ---------------------------------------------------------------------------
# forbidden subgraph detectors


@dataclass(frozen=True)
class ForbiddenSubgraphReport:
    contains_c4: bool
    c4_witness: tuple[int, ...] | None
    contains_c5: bool
    c5_witness: tuple[int, ...] | None
    contains_induced_c4: bool
    induced_c4_witness: tuple[int, ...] | None


def _has_c4(g: Graph) -> bool:
    # A 4-cycle exists iff some vertex pair has two common neighbours.
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (rows[u] & rows[v]).bit_count() >= 2:
                return True
    return False


def _c4_witness(g: Graph) -> tuple[int, ...] | None:
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    for v0 in range(g.n):
        above = -1 << (v0 + 1)
        for v1 in _bits(rows[v0] & above):
            for v2 in _bits(rows[v1] & above & ~(1 << v1)):
                # v3 adjacent to both v2 and v0, larger than v1 (direction canon)
                cands = rows[v2] & rows[v0] & (-1 << (v1 + 1)) & ~(1 << v2)
                if cands:
                    v3 = (cands & -cands).bit_length() - 1
                    return (v0, v1, v2, v3)
    return None


def _has_induced_c4(g: Graph) -> bool:
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (rows[u] >> v) & 1:
                continue
            common = rows[u] & rows[v]
            if common.bit_count() < 2:
                continue
            for x in _bits(common):
                if common & ~rows[x] & ~(1 << x):
                    return True
    return False


def _induced_c4_witness(g: Graph) -> tuple[int, ...] | None:
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    for v0 in range(g.n):
        above = -1 << (v0 + 1)
        for v1 in _bits(rows[v0] & above):
            for v2 in _bits(rows[v1] & above & ~rows[v0] & ~(1 << v1)):
                cands = (
                    rows[v2]
                    & rows[v0]
                    & ~rows[v1]
                    & (-1 << (v1 + 1))
                    & ~(1 << v2)
                )
                if cands:
                    v3 = (cands & -cands).bit_length() - 1
                    return (v0, v1, v2, v3)
    return None


def _has_c5(g: Graph) -> bool:
    # Pivot on the middle edge (v2, v3) of the would-be cycle; existence of
    # v1 ~ v2, v4 ~ v3 and a fifth vertex adjacent to both v1 and v4 is a C5.
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    for v2, v3 in g.edges():
        b23 = (1 << v2) | (1 << v3)
        for v1 in _bits(rows[v2] & ~b23):
            r1 = rows[v1]
            for v4 in _bits(rows[v3] & ~b23 & ~(1 << v1)):
                if r1 & rows[v4] & ~b23:
                    return True
    return False


def _c5_witness(g: Graph) -> tuple[int, ...] | None:
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    for v0 in range(g.n):
        above = -1 << (v0 + 1)
        b0 = 1 << v0
        for v1 in _bits(rows[v0] & above):
            for v2 in _bits(rows[v1] & above & ~(1 << v1)):
                used2 = (1 << v1) | (1 << v2)
                for v3 in _bits(rows[v2] & above & ~used2):
                    cands = (
                        rows[v3]
                        & rows[v0]
                        & (-1 << (v1 + 1))
                        & ~used2
                        & ~(1 << v3)
                        & ~b0
                    )
                    if cands:
                        v4 = (cands & -cands).bit_length() - 1
                        return (v0, v1, v2, v3, v4)
    return None


def forbidden_subgraphs(g: Graph) -> ForbiddenSubgraphReport:
    """Detect C4, C5 and induced C4 with canonical lexicographic witnesses."""
    has4 = _has_c4(g)
    has5 = _has_c5(g)
    hasi4 = _has_induced_c4(g)
    return ForbiddenSubgraphReport(
        contains_c4=has4,
        c4_witness=_c4_witness(g) if has4 else None,
        contains_c5=has5,
        c5_witness=_c5_witness(g) if has5 else None,
        contains_induced_c4=hasi4,
        induced_c4_witness=_induced_c4_witness(g) if hasi4 else None,
    )


def require_c5_free(g: Graph, context: str) -> None:
    """Raise StructureError with a cycle witness if G contains a C5."""
    if _has_c5(g):
        raise StructureError(f"{context}: graph contains a 5-cycle", _c5_witness(g))


# ---------------------------------------------------------------------------
# walks


def count_walks(g: Graph, k: int) -> int:
    """Number of ordered k-edge walks (v0, ..., vk).  Exact integer."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    nbrs = [g.neighbors(v) for v in range(g.n)]
    vec = [1] * g.n
    for _ in range(k):
        vec = [sum(vec[u] for u in nbrs[v]) for v in range(g.n)]
    return sum(vec)


# ---------------------------------------------------------------------------
# 5-paths by middle-edge pivot


def _good5_middle(rows: list[int], full: int, p: int, q: int) -> int:
    """Good 5-paths x-y-p-q-z-w with middle edge pq, counted unordered.

    Exact inclusion-exclusion over collisions between the two pendant
    2-paths.  Goodness forces y not~ q, x not~ p, z not~ p, w not~ q, which
    already rules out y=z; the remaining collision events are y=w, x=z, x=w
    and the compatible double (x=z and y=w).
    """
    rp, rq = rows[p], rows[q]
    bp, bq = 1 << p, 1 << q
    ly = rp & ~rq & ~bq
    rz = rq & ~rp & ~bp
    if not ly or not rz:
        return 0
    lx = {y: rows[y] & ~rp & ~bp for y in _bits(ly)}
    rw = {z: rows[z] & ~rq & ~bq for z in _bits(rz)}
    left = sum(m.bit_count() for m in lx.values())
    right = sum(m.bit_count() for m in rw.values())
    if not left or not right:
        return 0
    n_yw = sum(
        lx[s].bit_count() * (rows[s] & rz).bit_count() for s in lx
    )
    n_xz = sum(
        (rows[s] & ly).bit_count() * rw[s].bit_count() for s in rw
    )
    outside = full & ~rp & ~rq & ~bp & ~bq
    n_xw = sum(
        (rows[s] & ly).bit_count() * (rows[s] & rz).bit_count()
        for s in _bits(outside)
    )
    n_double = sum((rows[t] & rz).bit_count() for t in lx)
    return left * right - n_yw - n_xz - n_xw + n_double


def _all5_middle(rows: list[int], full: int, p: int, q: int) -> int:
    """All 5-paths with middle edge pq, counted unordered (same technique)."""
    rp, rq = rows[p], rows[q]
    bp, bq = 1 << p, 1 << q
    excl = bp | bq
    ly = rp & ~bq
    rz = rq & ~bp
    if not ly or not rz:
        return 0
    lx = {y: rows[y] & ~excl for y in _bits(ly)}
    rw = {z: rows[z] & ~excl for z in _bits(rz)}
    left = sum(m.bit_count() for m in lx.values())
    right = sum(m.bit_count() for m in rw.values())
    if not left or not right:
        return 0
    common = rp & rq
    n_yz = sum((rows[s] & ~excl).bit_count() ** 2 for s in _bits(common))
    n_yw = sum(lx[s].bit_count() * (rows[s] & rz).bit_count() for s in lx)
    n_xz = sum((rows[s] & ly).bit_count() * rw[s].bit_count() for s in rw)
    n_xw = sum(
        (rows[s] & ly).bit_count() * (rows[s] & rz).bit_count()
        for s in _bits(full & ~excl)
    )
    n_xz_yw = sum((rows[t] & rz).bit_count() for t in lx)
    n_xw_yz = sum((rows[t] & ~excl).bit_count() for t in _bits(common))
    return left * right - n_yz - n_yw - n_xz - n_xw + n_xz_yw + n_xw_yz


@dataclass(frozen=True)
class FivePathCensus:
    good: int
    bad: int
    total: int


def five_path_census(g: Graph) -> FivePathCensus:
    """Unordered good/bad 5-path counts via the middle-edge pivot."""
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    good = 0
    total = 0
    for p, q in g.edges():
        good += _good5_middle(rows, full, p, q)
        total += _all5_middle(rows, full, p, q)
    return FivePathCensus(good=good, bad=total - good, total=total)


def _five_paths_dfs(g: Graph):
    """Yield each unordered 5-path once, as (v0..v5) with v0 < v5."""
    rows = [g.neighbors_mask(v) for v in range(g.n)]

    def extend(path, used):
        if len(path) == 6:
            if path[0] < path[5]:
                yield tuple(path)
            return
        for w in _bits(rows[path[-1]] & ~used):
            path.append(w)
            yield from extend(path, used | (1 << w))
            path.pop()

    for v0 in range(g.n):
        yield from extend([v0], 1 << v0)


def _is_good_path(g: Graph, path: tuple[int, ...]) -> bool:
    return not any(
        g.has_edge(path[i], path[i + 2]) for i in range(len(path) - 2)
    )


def five_path_census_dfs(g: Graph) -> FivePathCensus:
    """Oracle twin of five_path_census by exhaustive depth-5 DFS."""
    good = 0
    total = 0
    for path in _five_paths_dfs(g):
        total += 1
        if _is_good_path(g, path):
            good += 1
    return FivePathCensus(good=good, bad=total - good, total=total)


def middle_edge_good5_dfs(g: Graph) -> dict[tuple[int, int], int]:
    """Good 5-path counts keyed by middle edge (u, v), u < v.  DFS oracle."""
    counts: dict[tuple[int, int], int] = {}
    for path in _five_paths_dfs(g):
        if _is_good_path(g, path):
            key = (min(path[2], path[3]), max(path[2], path[3]))
            counts[key] = counts.get(key, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# 2-path report


@dataclass(frozen=True)
class TwoPathReport:
    violations_count: tuple[tuple[int, int, tuple[int, ...]], ...]
    violations_adjacency: tuple[tuple[int, int, int, int], ...]


def two_path_report(g: Graph) -> TwoPathReport:
    """Common-neighbour audit of all non-adjacent vertex pairs.

    A pair (u, v) with three or more common neighbours is a count
    violation; a pair with exactly two common neighbours x, y where x, y
    are non-adjacent is an adjacency violation.  In a pentagon-free graph
    in which every edge lies in a triangle, both lists are empty.
    """
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    bad_count = []
    bad_adj = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (rows[u] >> v) & 1:
                continue
            common = rows[u] & rows[v]
            c = common.bit_count()
            if c >= 3:
                bad_count.append((u, v, tuple(_bits(common))))
            elif c == 2:
                x, y = _bits(common)
                if not (rows[x] >> y) & 1:
                    bad_adj.append((u, v, x, y))
    return TwoPathReport(
        violations_count=tuple(bad_count),
        violations_adjacency=tuple(bad_adj),
    )


# ---------------------------------------------------------------------------
# middle-edge census over a decomposition


@dataclass(frozen=True)
class ComponentCensus:
    kind: str  # "two_path" | "triangle" | "k4" | "gs_edge"
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    anchor_counts: tuple[tuple[int, int], ...]
    anchor_total: int
    max_per_target: int
    good5: int
    cap_num: int
    cap_den: int
    within_cap: bool

    @property
    def cap(self) -> float:
        return self.cap_num / self.cap_den


@dataclass(frozen=True)
class MiddleEdgeCensus:
    components: tuple[ComponentCensus, ...]
    all_within_caps: bool
    n: int


# cap on good 5-paths through a component, as a multiple of n^2
_CAPS = {"two_path": (1, 1), "triangle": (4, 3), "k4": (3, 2), "gs_edge": (1, 1)}


def _anchor_profile(rows, full, anchors, s_mask):
    """Good 2-paths p-x-y with p an anchor and x, y outside the component.

    Returns (per-anchor counts, total, max over outside targets y).
    """
    counts = []
    targets: dict[int, int] = {}
    for p in anchors:
        rp = rows[p]
        total_p = 0
        for x in _bits(rp & ~s_mask & full):
            ymask = rows[x] & ~rp & ~s_mask & ~(1 << p) & full
            total_p += ymask.bit_count()
            for y in _bits(ymask):
                targets[y] = targets.get(y, 0) + 1
        counts.append((p, total_p))
    total = sum(c for _, c in counts)
    return tuple(counts), total, max(targets.values(), default=0)


def middle_edge_census(
    g: Graph, decomposition, gs_edges=None
) -> MiddleEdgeCensus:
    """Exact good-5-path counts grouped by decomposition component.

    ``decomposition`` provides two_paths / triangles / k4s components whose
    edges, together with ``gs_edges``, must partition E(G).  For each
    component the census reports the number of good 5-paths of G whose
    middle edge lies in the component, the component's cap (n^2 per 2-path
    or single edge, 4n^2/3 per triangle, 3n^2/2 per K4), and the pendant
    good-2-path anchor profile used to certify the cap.
    """
    n = g.n
    rows = [g.neighbors_mask(v) for v in range(n)]
    full = (1 << n) - 1

    comps: list[tuple[str, tuple[int, ...], list[tuple[int, int]]]] = []
    for a, c, b in decomposition.two_paths:
        comps.append(("two_path", (a, c, b), [_e(a, c), _e(c, b)]))
    for tri in decomposition.triangles:
        a, b, c = tri
        comps.append(("triangle", tri, [_e(a, b), _e(a, c), _e(b, c)]))
    for quad in decomposition.k4s:
        pairs = [
            _e(quad[i], quad[j])
            for i in range(4)
            for j in range(i + 1, 4)
        ]
        comps.append(("k4", quad, pairs))
    for u, v in gs_edges or []:
        comps.append(("gs_edge", _e(u, v), [_e(u, v)]))

    seen: set[tuple[int, int]] = set()
    for _, _, pairs in comps:
        for e in pairs:
            if e in seen:
                raise StructureError(
                    f"decomposition covers edge {e} more than once"
                )
            seen.add(e)
    actual = set(g.edges())
    if seen != actual:
        missing = sorted(actual - seen)
        extra = sorted(seen - actual)
        raise StructureError(
            "decomposition does not partition the edge set "
            f"(missing {missing[:5]}, extraneous {extra[:5]})"
        )

    records = []
    all_ok = True
    for kind, verts, pairs in comps:
        good5 = sum(_good5_middle(rows, full, p, q) for p, q in pairs)
        num, den = _CAPS[kind]
        cap_num = num * n * n
        within = good5 * den <= cap_num
        all_ok = all_ok and within
        s_mask = 0
        for v in verts:
            s_mask |= 1 << v
        anchor_counts, anchor_total, max_per_target = _anchor_profile(
            rows, full, sorted(set(verts)), s_mask
        )
        records.append(
            ComponentCensus(
                kind=kind,
                vertices=tuple(verts),
                edges=tuple(pairs),
                anchor_counts=anchor_counts,
                anchor_total=anchor_total,
                max_per_target=max_per_target,
                good5=good5,
                cap_num=cap_num,
                cap_den=den,
                within_cap=within,
            )
        )
    return MiddleEdgeCensus(
        components=tuple(records), all_within_caps=all_ok, n=n
    )


def _e(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)
