"""Triangle blocks and the edge decomposition of pentagon-free graphs.

Two triangles are *adjacent* when they share an edge; a *block* is an
equivalence class of triangles under the transitive closure of adjacency.
In a C5-free graph every block is one of two shapes:

* a *crown*: triangles abc_1, ..., abc_k over a common base edge ab, with
  the tips c_i pairwise non-adjacent (k = 1 is a bare triangle);
* a *K4 block*: the four triangles of a complete graph on four vertices.

The edge decomposition D splits each crown into the triangle with the
smallest tip plus k-1 2-paths a-c_i-b, and keeps each K4 whole, so every
edge that lies in a triangle belongs to exactly one component.

Graphs that are not C5-free can have blocks of neither shape; those
classify as "other" and the decomposition refuses them with a cycle
witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import require_c5_free, triangle_census
from .errors import StructureError
from .graph import Graph


# ---------------------------------------------------------------------------
# union-find over triangle indices


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def unite(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


# ---------------------------------------------------------------------------
# triangle split


@dataclass(frozen=True)
class TriangleSplit:
    g_delta: Graph  # edges lying in at least one triangle
    g_s: Graph  # the remaining edges, on the same vertex set


def split_triangle_edges(g: Graph) -> TriangleSplit:
    """Split E(G) into triangle-covered edges and the rest."""
    covered: set[tuple[int, int]] = set()
    for a, b, c in triangle_census(g).triangles:
        covered.update([(a, b), (a, c), (b, c)])
    delta_edges = []
    s_edges = []
    for e in g.edges():
        (delta_edges if e in covered else s_edges).append(e)
    return TriangleSplit(
        g_delta=Graph.from_edges(g.n, delta_edges),
        g_s=Graph.from_edges(g.n, s_edges),
    )


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class Block:
    kind: str  # "crown" | "k4" | "other"
    triangles: tuple[tuple[int, int, int], ...]
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    base: tuple[int, int] | None  # crown base edge
    tips: tuple[int, ...] | None  # crown tips, ascending
    k: int  # number of triangles


def _tri_edges(t):
    a, b, c = t
    return ((a, b), (a, c), (b, c))


def triangle_blocks(g: Graph) -> tuple[Block, ...]:
    """Partition the triangles of G into blocks and classify each.

    Blocks are reported in a deterministic order (by smallest member
    triangle) with sorted vertex and edge tuples.
    """
    tris = triangle_census(g).triangles
    uf = _UnionFind(len(tris))
    by_edge: dict[tuple[int, int], int] = {}
    for i, t in enumerate(tris):
        for e in _tri_edges(t):
            if e in by_edge:
                uf.unite(by_edge[e], i)
            else:
                by_edge[e] = i
    groups: dict[int, list[int]] = {}
    for i in range(len(tris)):
        groups.setdefault(uf.find(i), []).append(i)

    blocks = []
    for root in sorted(groups):
        members = [tris[i] for i in groups[root]]
        members.sort()
        verts = sorted({v for t in members for v in t})
        edges = sorted({e for t in members for e in _tri_edges(t)})
        kind, base, tips = _classify(members, verts)
        blocks.append(
            Block(
                kind=kind,
                triangles=tuple(members),
                vertices=tuple(verts),
                edges=tuple(edges),
                base=base,
                tips=tips,
                k=len(members),
            )
        )
    return tuple(blocks)


def _classify(members, verts):
    if len(members) == 4 and len(verts) == 4:
        # four triangles on four vertices force a complete K4
        return "k4", None, None
    common = set(_tri_edges(members[0]))
    for t in members[1:]:
        common &= set(_tri_edges(t))
        if not common:
            return "other", None, None
    base = min(common)  # unique for k >= 2; pick smallest edge for k = 1
    tips = tuple(sorted({v for t in members for v in t} - set(base)))
    return "crown", base, tips


# ---------------------------------------------------------------------------
# edge decomposition


@dataclass(frozen=True)
class EdgeDecomposition:
    two_paths: tuple[tuple[int, int, int], ...]  # (a, mid, b) with a < b
    triangles: tuple[tuple[int, int, int], ...]
    k4s: tuple[tuple[int, int, int, int], ...]
    edge_count: int
    e_triangles: int
    e_two_paths: int
    e_k4s: int

    @property
    def alpha1(self) -> float:
        return self.e_triangles / self.edge_count if self.edge_count else 0.0

    @property
    def alpha2(self) -> float:
        return self.e_two_paths / self.edge_count if self.edge_count else 0.0

    @property
    def alpha3(self) -> float:
        return self.e_k4s / self.edge_count if self.edge_count else 0.0

    @property
    def alpha(self) -> float:
        return self.alpha1 + self.alpha2


def edge_decomposition(g: Graph) -> EdgeDecomposition:
    """Decompose E(G) into triangles, 2-paths and K4s, one per crown/K4 rule.

    Requires every edge of G to lie in a triangle and every block to be a
    crown or a K4; otherwise a StructureError identifies the obstruction.
    """
    split = split_triangle_edges(g)
    if split.g_s.edge_count:
        raise StructureError(
            f"edge {split.g_s.edges()[0]} lies in no triangle"
        )
    blocks = triangle_blocks(g)
    for blk in blocks:
        if blk.kind == "other":
            # possible only when a C5 is present; surface the cycle
            require_c5_free(g, "unclassifiable block")
            raise StructureError(
                "unclassifiable block without a C5 witness", blk.triangles
            )
    two_paths = []
    triangles = []
    k4s = []
    for blk in blocks:
        if blk.kind == "k4":
            k4s.append(blk.vertices)
            continue
        a, b = blk.base
        tips = blk.tips
        triangles.append(tuple(sorted((a, b, tips[0]))))
        for c in tips[1:]:
            two_paths.append((a, c, b))
    return EdgeDecomposition(
        two_paths=tuple(two_paths),
        triangles=tuple(triangles),
        k4s=tuple(k4s),
        edge_count=g.edge_count,
        e_triangles=3 * len(triangles),
        e_two_paths=2 * len(two_paths),
        e_k4s=6 * len(k4s),
    )


# ---------------------------------------------------------------------------
# core reduction


@dataclass(frozen=True)
class ReductionLog:
    core: Graph
    kept: tuple[int, ...]  # original ids of surviving vertices, ascending
    removed: tuple[int, ...]  # original ids in removal order
    t_before: float
    t_after: float


def triangle_core_reduction(g: Graph) -> ReductionLog:
    """Repeatedly delete a vertex with t(v) < t/3, recomputing t each round.

    t(v) is the number of triangles containing v and t the average of t(v)
    over the current graph.  Among eligible vertices the one with the
    smallest t(v) (ties: smallest original id) goes first.  The comparison
    t(v) < t/3 is exact integer arithmetic: 3*n*t(v) < sum_u t(u).
    """
    current = g
    ids = list(range(g.n))
    t_before = triangle_census(g).average if g.n else 0.0
    removed = []
    while current.n:
        per_vertex = triangle_census(current).per_vertex
        total = sum(per_vertex)
        worst = None
        for v in range(current.n):
            if 3 * current.n * per_vertex[v] < total:
                if worst is None or per_vertex[v] < per_vertex[worst]:
                    worst = v
        if worst is None:
            break
        removed.append(ids[worst])
        keep = [v for v in range(current.n) if v != worst]
        current, kept_local = current.induced_subgraph(keep)
        ids = [ids[v] for v in kept_local]
    t_after = triangle_census(current).average if current.n else 0.0
    return ReductionLog(
        core=current,
        kept=tuple(ids),
        removed=tuple(removed),
        t_before=t_before,
        t_after=t_after,
    )


# ---------------------------------------------------------------------------
# C4-free extraction


def extract_c4_free_subgraph(g: Graph) -> Graph:
    """Select a C4-free, C5-free subgraph keeping at least half of G_delta.

    Requires G to be C5-free and induced-C4-free.  Keeps every edge outside
    triangles, and per block: the star ab, ac_1, ..., ac_k from a crown
    with base ab (a the smaller endpoint), or a triangle plus pendant edge
    abc + ad from a K4 (d the largest id).
    """
    from .census import _has_induced_c4, _induced_c4_witness

    require_c5_free(g, "c4-free extraction")
    if _has_induced_c4(g):
        raise StructureError(
            "c4-free extraction: graph contains an induced 4-cycle",
            _induced_c4_witness(g),
        )
    split = split_triangle_edges(g)
    chosen = split.g_s.edges()
    for blk in triangle_blocks(g):
        if blk.kind == "k4":
            a, b, c, d = blk.vertices
            chosen.extend([(a, b), (a, c), (b, c), (a, d)])
        else:
            a, b = blk.base
            chosen.append((a, b))
            chosen.extend((a, c) for c in blk.tips)
    return Graph.from_edges(g.n, chosen)
