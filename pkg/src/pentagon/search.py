"""Exact extremal search on small orders and seeded local search.

Exact graph searches enumerate one representative per isomorphism class by
vertex augmentation: every n-vertex graph arises from its (n-1)-vertex
induced prefix by attaching vertex n-1 with some neighbour mask, so level
n is built by extending each level-(n-1) representative with every mask,
keeping candidates that pass the (hereditary) feasibility test, and
deduplicating by an exact canonical form.

The canonical form is the lexicographically least sequence of
back-adjacency keys over all vertex orders that respect the colour classes
of 1-dimensional Weisfeiler-Leman refinement.  Key i is the bitmask of the
i-th placed vertex's adjacency to vertices placed before it, so the key
sequence determines the graph up to the order; minimising over a
colour-respecting, isomorphism-invariant family of orders makes equal
forms equivalent to isomorphism.  The minimisation prunes to
minimal-prefix branches and deduplicates twin candidates (equal open or
closed neighbourhoods), which keeps highly symmetric graphs cheap.

The r=3 hypergraph search runs straight on labelled triple systems with a
symmetry restriction to lexicographically least labellings: edges chosen
in increasing lex order, first edge (0,1,2), each accepted edge
introducing only the next unused vertex labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Union

from .census import _has_c5, _c5_witness, triangle_census
from .errors import BudgetError, StructureError
from .graph import Graph, _bits
from .hypergraph import Hypergraph

EXACT_GRAPH_LIMIT = 8
EXACT_HYPER_LIMIT = 9


@dataclass(frozen=True)
class ExactResult:
    n: int
    value: int
    witness: Union[Graph, Hypergraph, None]
    graphs_examined: int


# ---------------------------------------------------------------------------
# canonical form


def _wl_colors(n: int, rows: list[int]) -> list[int]:
    colors = [rows[v].bit_count() for v in range(n)]
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(rows[v]))))
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[sigs[v]] for v in range(n)]
        if new == colors:
            break
        colors = new
    return colors


def canonical_form(n: int, rows: list[int]) -> tuple:
    """Isomorphism-complete invariant: minimal colour-respecting key list."""
    if n == 0:
        return (0,)
    colors = _wl_colors(n, rows)
    order = sorted(range(n), key=lambda v: colors[v])
    target = [colors[v] for v in order]
    best_keys: Optional[list[int]] = None

    def extend(placed: list[int], keys: list[int]) -> None:
        nonlocal best_keys
        i = len(placed)
        if i == n:
            best_keys = list(keys)
            return
        used = set(placed)
        cands = [v for v in range(n) if colors[v] == target[i] and v not in used]
        best_key = None
        chosen = []
        seen_rows = set()
        for v in cands:
            key = 0
            rv = rows[v]
            for j, u in enumerate(placed):
                if (rv >> u) & 1:
                    key |= 1 << j
            if best_key is None or key < best_key:
                best_key = key
                chosen = [v]
                seen_rows = {rows[v], rows[v] | (1 << v)}
            elif key == best_key:
                # twins (equal open or closed neighbourhood) are
                # interchangeable by an automorphism: keep one
                if rows[v] in seen_rows or rows[v] | (1 << v) in seen_rows:
                    continue
                chosen.append(v)
                seen_rows.add(rows[v])
                seen_rows.add(rows[v] | (1 << v))
        if best_keys is not None and best_key > best_keys[i]:
            return
        keys.append(best_key)
        if best_keys is not None and best_key < best_keys[i]:
            best_keys = None
        for v in chosen:
            placed.append(v)
            extend(placed, keys)
            placed.pop()
        keys.pop()

    # greedy minimal prefix is built level by level; the first completed
    # branch already carries the minimal key at every level, so later
    # branches only ever tie
    extend([], [])
    assert best_keys is not None
    return (n, tuple(target), tuple(best_keys))


# ---------------------------------------------------------------------------
# feasibility tests (incremental: new vertex v was just attached)


def _c5_through(rows: list[int], v: int) -> bool:
    bv = 1 << v
    for a in _bits(rows[v]):
        ba = 1 << a
        for d in _bits(rows[v] & ~((1 << (a + 1)) - 1)):
            bd = 1 << d
            for b in _bits(rows[a] & ~bv & ~bd):
                if rows[b] & rows[d] & ~bv & ~ba & ~(1 << b):
                    return True
    return False


def _induced_c4_through(rows: list[int], v: int) -> bool:
    bv = 1 << v
    nbrs = list(_bits(rows[v]))
    for i, a in enumerate(nbrs):
        for c in nbrs[i + 1 :]:
            if (rows[a] >> c) & 1:
                continue
            if rows[a] & rows[c] & ~rows[v] & ~bv:
                return True
    return False


def _feasible_c5free(rows: list[int], v: int) -> bool:
    return not _c5_through(rows, v)


def _feasible_indc4c5(rows: list[int], v: int) -> bool:
    return not _c5_through(rows, v) and not _induced_c4_through(rows, v)


def _enumerate_classes(
    n: int, feasible: Callable[[list[int], int], bool]
) -> tuple[list[list[int]], int]:
    """All feasibility-closed isomorphism classes on exactly n vertices."""
    level: list[list[int]] = [[0]]
    examined = 1
    for k in range(2, n + 1):
        seen = set()
        nxt = []
        for parent in level:
            for mask in range(1 << (k - 1)):
                rows = [parent[u] | ((mask >> u & 1) << (k - 1)) for u in range(k - 1)]
                rows.append(mask)
                if not feasible(rows, k - 1):
                    continue
                form = canonical_form(k, rows)
                if form in seen:
                    continue
                seen.add(form)
                nxt.append(rows)
        level = nxt
        examined += len(level)
    return level, examined


def _rows_to_graph(n: int, rows: list[int]) -> Graph:
    edges = []
    for u in range(n):
        for v in _bits(rows[u] >> (u + 1) << (u + 1)):
            edges.append((u, v))
    return Graph.from_edges(n, edges)


def _triangles(rows: list[int], n: int) -> int:
    t = 0
    for u in range(n):
        for v in _bits(rows[u] >> (u + 1) << (u + 1)):
            t += (rows[u] & rows[v] & (~0 << (v + 1))).bit_count()
    return t


def exact_max_triangles_c5free(n: int) -> ExactResult:
    """Maximum triangle count over all C5-free graphs on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > EXACT_GRAPH_LIMIT:
        raise BudgetError(
            f"exact triangle search supports n <= {EXACT_GRAPH_LIMIT}, got {n}"
        )
    level, examined = _enumerate_classes(n, _feasible_c5free)
    best_val = -1
    best_rows = None
    for rows in level:
        t = _triangles(rows, n)
        if t > best_val:
            best_val = t
            best_rows = rows
    return ExactResult(n, best_val, _rows_to_graph(n, best_rows), examined)


def exact_max_edges_indc4c5(n: int) -> ExactResult:
    """Maximum edge count over {induced-C4, C5}-free graphs on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > EXACT_GRAPH_LIMIT:
        raise BudgetError(
            f"exact edge search supports n <= {EXACT_GRAPH_LIMIT}, got {n}"
        )
    level, examined = _enumerate_classes(n, _feasible_indc4c5)
    best_val = -1
    best_rows = None
    for rows in level:
        e = sum(r.bit_count() for r in rows) // 2
        if e > best_val:
            best_val = e
            best_rows = rows
    return ExactResult(n, best_val, _rows_to_graph(n, best_rows), examined)


def max_triangles_c5free_labelled(n: int) -> int:
    """Independent labelled brute force over all edge subsets (n <= 6)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 6:
        raise BudgetError(f"labelled brute force supports n <= 6, got {n}")
    pairs = list(combinations(range(n), 2))
    bit = {p: 1 << i for i, p in enumerate(pairs)}

    def pmask(vs):
        return sum(bit[tuple(sorted(p))] for p in combinations(vs, 2) if len(set(p)) == 2)

    tri_masks = [pmask(t) for t in combinations(range(n), 3)]
    c5_masks = []
    for vs in combinations(range(n), 5):
        seen = set()
        for perm in _cyclic_orders(vs):
            m = 0
            for i in range(5):
                a, b = perm[i], perm[(i + 1) % 5]
                m |= bit[(min(a, b), max(a, b))]
            seen.add(m)
        c5_masks.extend(seen)
    c5_masks = sorted(set(c5_masks))
    best = 0
    for mask in range(1 << len(pairs)):
        if any(mask & c == c for c in c5_masks):
            continue
        t = sum(1 for tm in tri_masks if mask & tm == tm)
        if t > best:
            best = t
    return best


def _cyclic_orders(vs):
    first = vs[0]
    rest = vs[1:]
    from itertools import permutations

    for perm in permutations(rest):
        if perm[0] < perm[-1]:  # fix reflection
            yield (first,) + perm


# ---------------------------------------------------------------------------
# exact hypergraph search (r = 3)


def exact_max_hyperedges_girth6(n: int, r: int = 3) -> ExactResult:
    """Maximum edge count of an r-uniform Berge-girth->=6 hypergraph.

    Only r=3 is implemented; the DFS enumerates lex-increasing edge lists
    in lex-least labelling (first edge (0,1,2), new labels contiguous).
    """
    if r != 3:
        raise BudgetError(f"exact hypergraph search supports r=3 only, got r={r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > EXACT_HYPER_LIMIT:
        raise BudgetError(
            f"exact hypergraph search supports n <= {EXACT_HYPER_LIMIT}, got {n}"
        )
    triples = list(combinations(range(n), 3))
    best_val = 0
    best_edges: list[tuple[int, ...]] = []
    rows = [0] * n
    chosen: list[tuple[int, ...]] = []
    examined = 0

    def dist_ok(cand: tuple[int, ...]) -> bool:
        balls = []
        for v in cand:
            ball = (1 << v) | rows[v]
            for u in _bits(rows[v]):
                ball |= rows[u]
            balls.append(ball)
        for i in range(3):
            for j in range(i + 1, 3):
                if balls[i] & balls[j]:
                    return False
        return True

    def dfs(start: int, used: int) -> None:
        nonlocal best_val, best_edges, examined
        examined += 1
        if len(chosen) > best_val:
            best_val = len(chosen)
            best_edges = list(chosen)
        for idx in range(start, len(triples)):
            if len(chosen) + (len(triples) - idx) <= best_val:
                break
            cand = triples[idx]
            new = [v for v in cand if v >= used]
            if new and new != list(range(used, used + len(new))):
                continue
            if not dist_ok(cand):
                continue
            for a, b in combinations(cand, 2):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
            chosen.append(cand)
            dfs(idx + 1, max(used, (new[-1] + 1) if new else used))
            chosen.pop()
            for a, b in combinations(cand, 2):
                rows[a] &= ~(1 << b)
                rows[b] &= ~(1 << a)
        return

    if n >= 3:
        # lex-least labelling forces the first edge to be (0, 1, 2)
        cand0 = (0, 1, 2)
        for a, b in combinations(cand0, 2):
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        chosen.append(cand0)
        dfs(triples.index(cand0) + 1, 3)
        chosen.pop()
        for a, b in combinations(cand0, 2):
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
    witness = Hypergraph(n, 3, best_edges) if best_edges else None
    return ExactResult(n, best_val, witness, examined)


def exact_max_hyperedges_girth6_unrestricted(n: int) -> int:
    """Slow cross-check without the labelling symmetry restriction."""
    if n > 7:
        raise BudgetError("unrestricted cross-check supports n <= 7")
    triples = list(combinations(range(n), 3))
    rows = [0] * n
    best = 0

    def dist_ok(cand):
        balls = []
        for v in cand:
            ball = (1 << v) | rows[v]
            for u in _bits(rows[v]):
                ball |= rows[u]
            balls.append(ball)
        return not (balls[0] & balls[1] or balls[0] & balls[2] or balls[1] & balls[2])

    def dfs(start, depth):
        nonlocal best
        if depth > best:
            best = depth
        for idx in range(start, len(triples)):
            if depth + (len(triples) - idx) <= best:
                break
            cand = triples[idx]
            if not dist_ok(cand):
                continue
            for a, b in combinations(cand, 2):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
            dfs(idx + 1, depth + 1)
            for a, b in combinations(cand, 2):
                rows[a] &= ~(1 << b)
                rows[b] &= ~(1 << a)

    dfs(0, 0)
    return best


# ---------------------------------------------------------------------------
# local search


@dataclass(frozen=True)
class LocalSearchResult:
    graph: Graph
    triangles: int
    iterations_run: int
    trace: tuple[tuple, ...]


def _common_count(rows: list[int], u: int, v: int) -> int:
    return (rows[u] & rows[v]).bit_count()


def local_search_triangles(
    n: int,
    seed: int,
    iterations: int,
    warm_start: Optional[Graph] = None,
    plateau_limit: int = 1000,
    swap_attempts: int = 2000,
) -> LocalSearchResult:
    """Hill-climb the triangle count inside the C5-free family.

    Moves, in preference order per iteration: single edge addition with
    positive triangle gain, then a remove+add swap with positive net gain,
    then a zero-gain addition (at most ``plateau_limit`` consecutive).
    The objective never decreases; every accepted move is re-checked to
    keep the graph C5-free and the final graph is verified once more.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if iterations < 0:
        raise ValueError("iterations must be nonnegative")
    rng = random.Random(seed)
    rows = [0] * n
    if warm_start is not None:
        m = min(n, warm_start.n)
        keep = list(range(m))
        sub, _ = warm_start.induced_subgraph(keep)
        if _has_c5(sub):
            raise StructureError("warm start contains a 5-cycle", _c5_witness(sub))
        for u in range(m):
            rows[u] = sub.neighbors_mask(u)
    t = _triangles(rows, n)
    trace: list[tuple] = []
    plateau_run = 0
    it = 0
    while it < iterations:
        it += 1
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not (rows[u] >> v) & 1
        ]
        rng.shuffle(non_edges)
        gain_add = None
        plateau_add = None
        for u, v in non_edges:
            if _completes_c5_local(rows, u, v):
                continue
            delta = _common_count(rows, u, v)
            if delta > 0:
                gain_add = (u, v, delta)
                break
            if plateau_add is None:
                plateau_add = (u, v)
        if gain_add is not None:
            u, v, delta = gain_add
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            t += delta
            plateau_run = 0
            trace.append(("add", u, v, t))
            continue
        swap = _find_swap(rows, n, rng, swap_attempts)
        if swap is not None:
            (a, b), (u, v), new_t = swap
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            t = new_t
            plateau_run = 0
            trace.append(("swap", a, b, u, v, t))
            continue
        if plateau_add is not None and plateau_run < plateau_limit:
            u, v = plateau_add
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            plateau_run += 1
            trace.append(("add", u, v, t))
            continue
        break
    g = _rows_to_graph(n, rows)
    if _has_c5(g):
        raise StructureError("local search left a 5-cycle", _c5_witness(g))
    return LocalSearchResult(g, t, it, tuple(trace))


def _completes_c5_local(rows: list[int], u: int, v: int) -> bool:
    bu, bv = 1 << u, 1 << v
    for a in _bits(rows[u] & ~bv):
        ba = 1 << a
        for b in _bits(rows[a] & ~bu & ~bv & ~ba):
            if rows[b] & rows[v] & ~bu & ~ba & ~(1 << b):
                return True
    return False


def _find_swap(rows, n, rng, attempts):
    edges = []
    for u in range(n):
        for v in _bits(rows[u] >> (u + 1) << (u + 1)):
            edges.append((u, v))
    rng.shuffle(edges)
    base_t = _triangles(rows, n)
    tried = 0
    for a, b in edges:
        loss = _common_count(rows, a, b)
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not (rows[u] >> v) & 1 and (u, v) != (a, b)
        ]
        rng.shuffle(non_edges)
        for u, v in non_edges:
            tried += 1
            if tried > attempts:
                break
            if _completes_c5_local(rows, u, v):
                continue
            gain = _common_count(rows, u, v)
            if gain > loss:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
                return (a, b), (u, v), base_t - loss + gain
        rows[a] |= 1 << b
        rows[b] |= 1 << a
        if tried > attempts:
            break
    return None
