"""Simple undirected graphs on vertex set {0, ..., n-1}.

Adjacency is stored as one Python int bitmask per vertex, so neighbourhood
intersections, unions and complements are single big-int operations.  This
comfortably covers the intended working range (n up to a few thousand;
nothing here allocates an n x n byte matrix).

Graphs are immutable once constructed: every operation that "changes" a
graph builds a new one.  All counting is done in Python ints, which are
arbitrary precision, so large walk counts are exact and cannot wrap.

Edge-list text format
---------------------
One edge per line as two whitespace-separated decimal vertex ids.  ``#``
starts a comment that runs to end of line.  Blank lines are ignored.  An
optional header line ``n=<k>`` fixes the number of vertices (useful for
graphs with trailing isolated vertices); without it, n is one plus the
largest vertex id.  Duplicate edges collapse silently; self-loops are
rejected with the offending line number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


class Graph:
    """Immutable undirected graph with bitmask adjacency rows."""

    __slots__ = ("n", "_rows", "_edge_count")

    def __init__(self, n: int, rows: list[int], edge_count: int):
        # Internal constructor; use from_edges / from_edge_list_text.
        self.n = n
        self._rows = rows
        self._edge_count = edge_count

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Duplicate pairs (in either orientation) collapse.  Raises ValueError
        on self-loops or out-of-range vertex ids.
        """
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        count = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if not (rows[u] >> v) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                count += 1
        return cls(n, rows, count)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def has_edge(self, u: int, v: int) -> bool:
        return (self._rows[u] >> v) & 1 == 1

    def neighbors_mask(self, v: int) -> int:
        """Adjacency row of v as a bitmask."""
        return self._rows[v]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self._rows[u] >> (u + 1)
            base = u + 1
            while row:
                low = row & -row
                out.append((u, base + low.bit_length() - 1))
                row ^= low
        return out

    def induced_subgraph(self, vertices) -> tuple["Graph", list[int]]:
        """Subgraph induced on ``vertices``, relabelled to 0..k-1.

        Returns the new graph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges()
            if u in index and v in index
        ]
        return Graph.from_edges(len(keep), edges), keep

    def to_edge_list_text(self) -> str:
        """Serialize to the edge-list format, always with an n= header."""
        lines = [f"n={self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.n, tuple(self._rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self._edge_count})"


def _bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def graph_from_edge_list(text: str) -> Graph:
    """Parse the edge-list text format described in the module docstring."""
    declared_n = None
    pairs: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if pairs or declared_n is not None:
                raise ParseError("n= header must come first and only once", lineno)
            body = line[2:].strip()
            if not body.isdigit():
                raise ParseError(f"bad vertex count {body!r}", lineno)
            declared_n = int(body)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop {u} {v} rejected", lineno)
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise ParseError(
                f"vertex id exceeds declared n={declared_n} in {line!r}", lineno
            )
        pairs.append((u, v))
        max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    return Graph.from_edges(n, pairs)


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]
    average: float
    maximum: int
    minimum: int


def degree_stats(g: Graph) -> DegreeStats:
    """Degree sequence plus average/max/min; errors on the empty graph."""
    if g.n == 0:
        raise ValueError("average degree undefined for a graph with no vertices")
    degs = g.degrees()
    return DegreeStats(
        degrees=tuple(degs),
        average=2 * g.edge_count / g.n,
        maximum=max(degs),
        minimum=min(degs),
    )


@dataclass(frozen=True)
class Neighborhoods:
    vertex: int
    first: tuple[int, ...]
    second: tuple[int, ...]


def neighborhoods(g: Graph, v: int) -> Neighborhoods:
    """First and second neighbourhoods of v (disjoint, excluding v)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    first = g.neighbors_mask(v)
    reach = 0
    for u in _bits(first):
        reach |= g.neighbors_mask(u)
    second = reach & ~first & ~(1 << v)
    return Neighborhoods(vertex=v, first=tuple(_bits(first)), second=tuple(_bits(second)))
