"""Command line interface.

Subcommands: construct, census, decompose, hyper, bounds, search,
verify-claims.  Results are printed as canonical JSON (sorted keys,
two-space indent), so repeated runs on the same input are byte-identical
except for the wall_time_s field.  ``construct`` without --out prints the
raw edge-list/hypergraph text instead, for piping into the other
subcommands.

Exit codes: 0 on success (and all claims passing), 1 on structural or
claim failure or an exceeded search budget, 2 on usage or parse errors.

The PENTAGON_THREADS environment variable is validated (positive
integer) for forward compatibility; all computation currently runs
sequentially regardless of its value.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from .blocks import (
    edge_decomposition,
    split_triangle_edges,
    triangle_blocks,
    triangle_core_reduction,
)
from .bounds import (
    alpha_objective,
    coefficient_table,
    hypergraph_edge_bounds,
    indc4c5_edge_bound,
    optimize_alpha,
    triangle_bound,
)
from .census import (
    count_walks,
    five_path_census,
    forbidden_subgraphs,
    triangle_census,
    two_path_report,
)
from .claims import verify_claims
from .constructions import (
    bollobas_gyori,
    gadget,
    greedy_girth6_hypergraph,
    projective_plane_incidence,
    random_c5_free,
)
from .errors import BudgetError, ParseError, StructureError
from .graph import Graph, graph_from_edge_list
from .hypergraph import (
    Hypergraph,
    berge_girth,
    hypergraph_from_text,
    hyperedge_3path_bound_report,
    cycle_containment_check,
    shadow,
    three_path_census,
)
from .search import (
    exact_max_edges_indc4c5,
    exact_max_hyperedges_girth6,
    exact_max_triangles_c5free,
    local_search_triangles,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentagon",
        description="Triangle counts in C5-free graphs and girth-6 "
        "hypergraph tooling.",
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=5000,
        help="refuse graphs/hypergraphs with more vertices (default 5000)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named graph or hypergraph")
    what = c.add_mutually_exclusive_group(required=True)
    # selectors take their size inline (--bgy 3) or via --q / --n
    what.add_argument("--bgy", type=int, nargs="?", const=-1, metavar="Q")
    what.add_argument("--pg", type=int, nargs="?", const=-1, metavar="Q")
    what.add_argument("--random-c5", type=int, nargs="?", const=-1, metavar="N")
    what.add_argument("--girth6", type=int, nargs="?", const=-1, metavar="N")
    what.add_argument(
        "--gadget", choices=("crown", "k4_chain", "book_plus_pendants")
    )
    c.add_argument("--q", type=int, default=None, help="field order")
    c.add_argument("--n", type=int, default=None, help="vertex count")
    c.add_argument("--r", type=int, default=3, help="hypergraph uniformity")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--k", type=int, default=None, help="gadget size")
    c.add_argument("--m", type=int, default=None, help="k4_chain length")
    c.add_argument("--pendants", type=int, default=None)
    c.add_argument("--out", metavar="PATH")

    ce = sub.add_parser("census", help="count structures in a graph")
    ce.add_argument("file")
    ce.add_argument("--triangles", action="store_true")
    ce.add_argument("--forbidden", action="store_true")
    ce.add_argument("--five-paths", action="store_true")
    ce.add_argument("--two-paths", action="store_true")
    ce.add_argument("--walks", type=int, metavar="K", default=None)

    d = sub.add_parser("decompose", help="blocks, decomposition, core")
    d.add_argument("file")

    hy = sub.add_parser("hyper", help="hypergraph girth and shadow censuses")
    hy.add_argument("file")
    hy.add_argument("--girth", action="store_true")
    hy.add_argument("--three-paths", action="store_true")
    hy.add_argument("--claim7", action="store_true")
    hy.add_argument("--claim8", action="store_true")
    hy.add_argument("--shadow-out", metavar="PATH")

    b = sub.add_parser("bounds", help="coefficient table and bound formulas")
    bwhat = b.add_mutually_exclusive_group(required=True)
    bwhat.add_argument("--table", action="store_true")
    bwhat.add_argument("--alpha", type=float, metavar="A")
    bwhat.add_argument("--optimize-alpha", action="store_true")
    bwhat.add_argument("--triangle-bound", action="store_true")
    bwhat.add_argument("--hyper-bounds", action="store_true")
    bwhat.add_argument("--indc4c5", action="store_true")
    b.add_argument("--n", type=int, default=None)
    b.add_argument("--r", type=int, default=None)
    b.add_argument("--alpha-value", type=float, default=0.0)
    b.add_argument("--tolerance", type=float, default=1e-10)
    b.add_argument("--format", choices=("json", "tsv"), default="json")

    s = sub.add_parser("search", help="exact and local extremal search")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--local", action="store_true")
    s.add_argument(
        "--objective", choices=("triangles", "edges", "hyperedges")
    )
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--iters", type=int, default=100)
    s.add_argument("--warm-start", metavar="FILE")

    v = sub.add_parser("verify-claims", help="run a claim suite on a file")
    v.add_argument("file")
    v.add_argument(
        "--suite", choices=("graph", "hypergraph", "indc4c5"), required=True
    )
    return parser


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _emit(doc: dict, started: float) -> None:
    doc["wall_time_s"] = round(time.perf_counter() - started, 6)
    print(json.dumps(doc, sort_keys=True, indent=2))


def _load_graph(path: str, max_n: int) -> tuple[Graph, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    g = graph_from_edge_list(data.decode("utf-8"))
    if g.n > max_n:
        raise ParseError(f"graph has n={g.n} > --max-n={max_n}")
    return g, _sha256(data)


def _load_hypergraph(path: str, max_n: int) -> tuple[Hypergraph, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    h = hypergraph_from_text(data.decode("utf-8"))
    if h.n > max_n:
        raise ParseError(f"hypergraph has n={h.n} > --max-n={max_n}")
    return h, _sha256(data)


# ---------------------------------------------------------------------------
# subcommands


def _resolve_size(inline: int, fallback: int | None, flag: str, alias: str) -> int:
    # selector used bare (--bgy) pulls its size from --q / --n
    if inline != -1:
        return inline
    if fallback is None:
        raise ValueError(f"{flag} needs a size: '{flag} <k>' or '{flag} {alias} <k>'")
    return fallback


def _cmd_construct(args) -> int:
    started = time.perf_counter()
    params: dict = {"seed": args.seed}
    if args.bgy is not None:
        q = _resolve_size(args.bgy, args.q, "--bgy", "--q")
        obj = bollobas_gyori(q)
        kind, params = "bollobas_gyori", {"q": q}
    elif args.pg is not None:
        q = _resolve_size(args.pg, args.q, "--pg", "--q")
        obj = projective_plane_incidence(q)
        kind, params = "projective_plane_incidence", {"q": q}
    elif args.random_c5 is not None:
        n = _resolve_size(args.random_c5, args.n, "--random-c5", "--n")
        budget = args.budget if args.budget is not None else 10_000
        obj = random_c5_free(n, args.seed, budget)
        kind = "random_c5_free"
        params = {"n": n, "seed": args.seed, "budget": budget}
    elif args.girth6 is not None:
        n = _resolve_size(args.girth6, args.n, "--girth6", "--n")
        budget = args.budget if args.budget is not None else 100_000
        obj = greedy_girth6_hypergraph(n, args.r, args.seed, budget)
        kind = "greedy_girth6_hypergraph"
        params = {
            "n": n,
            "r": args.r,
            "seed": args.seed,
            "budget": budget,
        }
    else:
        kind = args.gadget
        params = {}
        if args.k is not None:
            params["k"] = args.k
        if args.m is not None:
            params["m"] = args.m
        if args.pendants is not None:
            params["pendants"] = args.pendants
        obj = gadget(kind, **params)
    if obj.n > args.max_n:
        raise ParseError(f"construction has n={obj.n} > --max-n={args.max_n}")
    text = obj.to_text() if isinstance(obj, Hypergraph) else obj.to_edge_list_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        doc = {
            "kind": kind,
            "params": params,
            "n": obj.n,
            "edge_count": obj.edge_count,
            "out": args.out,
            "sha256": _sha256(text.encode("utf-8")),
        }
        if isinstance(obj, Hypergraph):
            doc["r"] = obj.r
        _emit(doc, started)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_census(args) -> int:
    started = time.perf_counter()
    g, digest = _load_graph(args.file, args.max_n)
    sections = {
        "triangles": args.triangles,
        "forbidden": args.forbidden,
        "five_paths": args.five_paths,
        "two_paths": args.two_paths,
    }
    if not any(sections.values()) and args.walks is None:
        sections["triangles"] = sections["forbidden"] = True
    doc: dict = {
        "input": args.file,
        "input_sha256": digest,
        "n": g.n,
        "edge_count": g.edge_count,
    }
    if sections["triangles"]:
        tc = triangle_census(g)
        doc["triangles"] = {
            "total": tc.total,
            "average": tc.average,
            "max_per_vertex": max(tc.per_vertex, default=0),
        }
        if g.n <= 200:
            doc["triangles"]["per_vertex"] = list(tc.per_vertex)
    if sections["forbidden"]:
        rep = forbidden_subgraphs(g)
        doc["forbidden"] = {
            "contains_c4": rep.contains_c4,
            "c4_witness": rep.c4_witness,
            "contains_c5": rep.contains_c5,
            "c5_witness": rep.c5_witness,
            "contains_induced_c4": rep.contains_induced_c4,
            "induced_c4_witness": rep.induced_c4_witness,
        }
    if sections["five_paths"]:
        fp = five_path_census(g)
        doc["five_paths"] = {"good": fp.good, "bad": fp.bad, "total": fp.total}
    if sections["two_paths"]:
        rep2 = two_path_report(g)
        doc["two_paths"] = {
            "count_violations": [
                list(map(_list_or_int, v)) for v in rep2.violations_count[:20]
            ],
            "count_violations_total": len(rep2.violations_count),
            "adjacency_violations": [
                list(v) for v in rep2.violations_adjacency[:20]
            ],
            "adjacency_violations_total": len(rep2.violations_adjacency),
        }
    if args.walks is not None:
        doc["walks"] = {"k": args.walks, "count": count_walks(g, args.walks)}
    _emit(doc, started)
    return 0


def _list_or_int(x):
    return list(x) if isinstance(x, tuple) else x


def _cmd_decompose(args) -> int:
    started = time.perf_counter()
    g, digest = _load_graph(args.file, args.max_n)
    split = split_triangle_edges(g)
    blocks = triangle_blocks(g)
    kinds = {"crown": 0, "k4": 0, "other": 0}
    for blk in blocks:
        kinds[blk.kind] += 1
    doc: dict = {
        "input": args.file,
        "input_sha256": digest,
        "n": g.n,
        "edge_count": g.edge_count,
        "triangle_covered_edges": split.g_delta.edge_count,
        "non_triangle_edges": split.g_s.edge_count,
        "blocks": kinds,
        "block_list": [
            {
                "kind": blk.kind,
                "k": blk.k,
                "vertices": list(blk.vertices),
                "base": list(blk.base) if blk.base else None,
            }
            for blk in blocks[:50]
        ],
        "block_list_truncated": len(blocks) > 50,
    }
    status = 0
    try:
        dec = edge_decomposition(split.g_delta)
        doc["decomposition"] = {
            "triangles": len(dec.triangles),
            "two_paths": len(dec.two_paths),
            "k4s": len(dec.k4s),
            "e_triangles": dec.e_triangles,
            "e_two_paths": dec.e_two_paths,
            "e_k4s": dec.e_k4s,
            "alpha1": dec.alpha1,
            "alpha2": dec.alpha2,
            "alpha3": dec.alpha3,
        }
    except StructureError as exc:
        doc["decomposition"] = {"error": str(exc)}
        status = 1
    red = triangle_core_reduction(g)
    doc["core_reduction"] = {
        "removed": list(red.removed),
        "kept_n": red.core.n,
        "t_before": red.t_before,
        "t_after": red.t_after,
    }
    _emit(doc, started)
    return status


def _cmd_hyper(args) -> int:
    started = time.perf_counter()
    h, digest = _load_hypergraph(args.file, args.max_n)
    wanted = args.girth or args.three_paths or args.claim7 or args.claim8
    if not wanted and not args.shadow_out:
        args.girth = True
    doc: dict = {
        "input": args.file,
        "input_sha256": digest,
        "n": h.n,
        "r": h.r,
        "edge_count": h.edge_count,
    }
    status = 0
    if args.girth:
        res = berge_girth(h, 6)
        doc["girth"] = {
            "girth": res.girth,
            "verdict": res.verdict,
            "witness": None
            if res.witness is None
            else {
                "length": res.witness.length,
                "vertices": list(res.witness.vertices),
                "hyperedges": [list(e) for e in res.witness.hyperedges],
            },
        }
    if args.three_paths:
        cen = three_path_census(h)
        doc["three_paths"] = {
            "good3": cen.good3,
            "bad3": cen.bad3,
            "total3": cen.total3,
            "shadow_edges": cen.shadow.edge_count,
            "d_shadow": cen.d_shadow,
            "d_shadow_max": cen.d_shadow_max,
        }
    if args.claim7:
        try:
            violations = cycle_containment_check(h)
            doc["cycle_containment"] = {
                "violations": [list(v) for v in violations[:10]],
                "violations_total": len(violations),
                "ok": not violations,
            }
            if violations:
                status = 1
        except StructureError as exc:
            doc["cycle_containment"] = {"error": str(exc)}
            status = 1
    if args.claim8:
        try:
            rep = hyperedge_3path_bound_report(h)
            doc["three_path_bound"] = {
                "max_count": rep.max_count,
                "bound": rep.bound,
                "ok": rep.max_count <= rep.bound,
                "worst": None
                if rep.worst is None
                else [list(rep.worst[0]), rep.worst[1]],
            }
            if rep.max_count > rep.bound:
                status = 1
        except StructureError as exc:
            doc["three_path_bound"] = {"error": str(exc)}
            status = 1
    if args.shadow_out:
        text = shadow(h).to_edge_list_text()
        with open(args.shadow_out, "w", encoding="utf-8") as fh:
            fh.write(text)
        doc["shadow_out"] = {
            "path": args.shadow_out,
            "sha256": _sha256(text.encode("utf-8")),
        }
    _emit(doc, started)
    return status


def _cmd_bounds(args) -> int:
    started = time.perf_counter()
    if args.format == "tsv" and not args.table:
        raise ParseError("--format tsv is only valid with --table")
    if args.table:
        entries = coefficient_table()
        if args.format == "tsv":
            print("name\tvalue\texact_form\tdescription")
            for e in entries:
                print(f"{e.name}\t{e.value:.12g}\t{e.exact_form}\t{e.description}")
            return 0
        _emit(
            {
                "table": [
                    {
                        "name": e.name,
                        "value": e.value,
                        "exact_form": e.exact_form,
                        "description": e.description,
                    }
                    for e in entries
                ]
            },
            started,
        )
        return 0
    if args.alpha is not None:
        _emit(
            {"alpha": args.alpha, "objective": alpha_objective(args.alpha)},
            started,
        )
        return 0
    if args.optimize_alpha:
        opt = optimize_alpha(args.tolerance)
        _emit(
            {
                "alpha_star": opt.alpha_star,
                "coefficient": opt.coefficient,
                "branch_crossing": opt.branch_crossing,
                "tolerance": args.tolerance,
            },
            started,
        )
        return 0
    if args.triangle_bound:
        if args.n is None:
            raise ParseError("--triangle-bound needs --n")
        _emit(
            {
                "n": args.n,
                "alpha": args.alpha_value,
                "triangle_bound": triangle_bound(args.n, args.alpha_value),
            },
            started,
        )
        return 0
    if args.hyper_bounds:
        if args.n is None or args.r is None:
            raise ParseError("--hyper-bounds needs --n and --r")
        doc = {"n": args.n, "r": args.r}
        doc.update(hypergraph_edge_bounds(args.n, args.r))
        _emit(doc, started)
        return 0
    if args.n is None:
        raise ParseError("--indc4c5 needs --n")
    _emit({"n": args.n, "edge_bound": indc4c5_edge_bound(args.n)}, started)
    return 0


def _cmd_search(args) -> int:
    started = time.perf_counter()
    if args.exact:
        if args.objective is None:
            raise ParseError("--exact needs --objective")
        if args.objective == "triangles":
            res = exact_max_triangles_c5free(args.n)
        elif args.objective == "edges":
            res = exact_max_edges_indc4c5(args.n)
        else:
            res = exact_max_hyperedges_girth6(args.n, args.r)
        doc: dict = {
            "mode": "exact",
            "objective": args.objective,
            "n": res.n,
            "value": res.value,
            "graphs_examined": res.graphs_examined,
        }
        if isinstance(res.witness, Hypergraph):
            doc["witness"] = [list(e) for e in res.witness.edges]
        elif res.witness is not None:
            doc["witness"] = [list(e) for e in res.witness.edges()]
        else:
            doc["witness"] = None
        _emit(doc, started)
        return 0
    warm = None
    if args.warm_start:
        warm, _ = _load_graph(args.warm_start, args.max_n)
    res = local_search_triangles(args.n, args.seed, args.iters, warm)
    _emit(
        {
            "mode": "local",
            "n": args.n,
            "seed": args.seed,
            "iterations_run": res.iterations_run,
            "triangles": res.triangles,
            "edge_count": res.graph.edge_count,
            "moves": len(res.trace),
            "trace_head": [list(t) for t in res.trace[:50]],
            "graph": [list(e) for e in res.graph.edges()],
        },
        started,
    )
    return 0


def _cmd_verify_claims(args) -> int:
    started = time.perf_counter()
    if args.suite == "hypergraph":
        obj, digest = _load_hypergraph(args.file, args.max_n)
    else:
        obj, digest = _load_graph(args.file, args.max_n)
    report = verify_claims(obj, args.suite)
    _emit(
        {
            "suite": report.suite,
            "input": args.file,
            "input_sha256": digest,
            "ok": report.ok,
            "counts": report.counts,
            "results": [
                {"name": r.name, "status": r.status, "detail": r.detail}
                for r in report.results
            ],
        },
        started,
    )
    return 0 if report.ok else 1


def main(argv=None) -> int:
    threads = os.environ.get("PENTAGON_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(
                f"error: PENTAGON_THREADS={threads!r} is not a positive integer",
                file=sys.stderr,
            )
            return 2
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "census": _cmd_census,
        "decompose": _cmd_decompose,
        "hyper": _cmd_hyper,
        "bounds": _cmd_bounds,
        "search": _cmd_search,
        "verify-claims": _cmd_verify_claims,
    }
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StructureError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
