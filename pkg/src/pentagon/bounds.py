"""Closed-form coefficients and the one-parameter triangle bound.

Everything here is about coefficients c in bounds of the form
c * n^{3/2}: triangle counts in C5-free graphs, edge counts in girth-6
hypergraphs, edge counts in {induced-C4, C5}-free graphs.

The alpha machinery: write alpha for the fraction of triangle-covered
edges assigned to triangles by the block decomposition.  Two competing
estimates for the triangle count give

    f(alpha) = ((4 - alpha) / 12) * min(1 / (2 (1 - alpha)),
                                        ((1 + alpha) / 4)^{1/4})

per n^{3/2}.  The first branch increases and the second decreases the
min-relevant way, so the maximum of f sits where the branches cross;
``optimize_alpha`` locates that crossing by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: float
    exact_form: str
    description: str


@dataclass(frozen=True)
class AlphaOptimum:
    alpha_star: float
    coefficient: float
    branch_crossing: bool


def alpha_objective(alpha: float) -> float:
    """The two-branch triangle coefficient f(alpha) on [0, 1]."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha={alpha} outside [0, 1]")
    branch2 = ((1.0 + alpha) / 4.0) ** 0.25
    if alpha == 1.0:
        m = branch2
    else:
        m = min(1.0 / (2.0 * (1.0 - alpha)), branch2)
    return (4.0 - alpha) / 12.0 * m


def _branch_gap(alpha: float) -> float:
    return 1.0 / (2.0 * (1.0 - alpha)) - ((1.0 + alpha) / 4.0) ** 0.25


def optimize_alpha(tolerance: float = 1e-10) -> AlphaOptimum:
    """Maximise f(alpha) by bisecting the branch crossing on [0, 0.9].

    The sparse branch 1/(2(1-alpha)) is increasing, the dense branch
    ((1+alpha)/4)^{1/4} is increasing but enters the min from above, and
    (4-alpha)/12 decreases slowly; f is unimodal with its peak exactly at
    the alpha where the two branches meet.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    lo, hi = 0.0, 0.9
    if not (_branch_gap(lo) < 0 < _branch_gap(hi)):
        raise ArithmeticError("branch crossing not bracketed")
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if _branch_gap(mid) < 0:
            lo = mid
        else:
            hi = mid
    alpha_star = 0.5 * (lo + hi)
    crossing = abs(_branch_gap(alpha_star)) <= 100.0 * tolerance + 1e-14
    return AlphaOptimum(alpha_star, alpha_objective(alpha_star), crossing)


def triangle_bound(n: int, alpha: float) -> float:
    """Triangle-count bound ((4-alpha)/12) ((1+alpha)/4)^{1/4} n^{3/2}.

    At alpha=0 this is n^{3/2}/(3 sqrt(2)), the headline coefficient.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha={alpha} outside [0, 1]")
    return (4.0 - alpha) / 12.0 * ((1.0 + alpha) / 4.0) ** 0.25 * n**1.5


def hypergraph_edge_bounds(n: int, r: int) -> dict[str, float]:
    """Edge-count bounds for r-uniform hypergraphs of Berge girth >= 6 / >= 5.

    girth6: n^{3/2} / (r^{3/2} (r-1)); girth5: n^{3/2} / (r (r-1));
    ratio = girth5 / girth6 = sqrt(r).
    """
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    if n < 1:
        raise ValueError("n must be at least 1")
    girth6 = n**1.5 / (r**1.5 * (r - 1))
    girth5 = n**1.5 / (r * (r - 1))
    return {"girth6": girth6, "girth5": girth5, "ratio": math.sqrt(r)}


def indc4c5_edge_bound(n: int) -> float:
    """Edge bound n^{3/2} / (2 * 2^{1/10}) for {induced-C4, C5}-free graphs."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n**1.5 / (2.0 * 2.0**0.1)


def three_path_slack_constant(r: int) -> float:
    """The lower-order constant c_r = 3 r^3 + 2 r^5 / (r - 1)."""
    if r < 2:
        raise ValueError("uniformity r must be at least 2")
    return 3.0 * r**3 + 2.0 * r**5 / (r - 1)


def coefficient_table() -> tuple[BoundEntry, ...]:
    """All named n^{3/2} coefficients, best-known results first."""
    improved = optimize_alpha(1e-12)
    return (
        BoundEntry(
            "BGY_lower",
            1.0 / (3.0 * math.sqrt(3.0)),
            "1/(3*sqrt(3))",
            "triangles achievable in a C5-free graph "
            "(doubled projective incidence graph)",
        ),
        BoundEntry(
            "improved",
            improved.coefficient,
            "max_a ((4-a)/12)*min(1/(2(1-a)), ((1+a)/4)^(1/4))",
            "best upper bound on triangles in a C5-free graph "
            "(alpha-optimised)",
        ),
        BoundEntry(
            "main_theorem",
            1.0 / (3.0 * math.sqrt(2.0)),
            "1/(3*sqrt(2))",
            "headline upper bound on triangles in a C5-free graph",
        ),
        BoundEntry(
            "EGMS",
            1.0 / (2.0 * math.sqrt(2.0)),
            "1/(2*sqrt(2))",
            "previous best upper bound (five-cycle counting)",
        ),
        BoundEntry(
            "AS",
            math.sqrt(3.0) / 2.0,
            "sqrt(3)/2",
            "earlier upper bound via independent sets",
        ),
        BoundEntry(
            "BGY_upper",
            5.0 / 4.0,
            "5/4",
            "original upper bound accompanying the construction",
        ),
        BoundEntry(
            "girth6_r4",
            1.0 / 24.0,
            "1/24",
            "edge coefficient for 4-uniform Berge-girth-6 hypergraphs",
        ),
        BoundEntry(
            "indc4c5",
            1.0 / (2.0 * 2.0**0.1),
            "1/(2*2^(1/10))",
            "edge coefficient for {induced-C4, C5}-free graphs",
        ),
    )
