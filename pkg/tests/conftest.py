"""Shared fixtures: the frozen random corpus and the gadget family.

The corpus is 100 pentagon-free graphs from the incremental random
generator, seeds 0..99 with n = 10 + (seed mod 31), so orders sweep
10..40 and repeat every 31 seeds.  Everything downstream (structure
suite, cap checks, walk accounting) treats this list as immutable.
"""

from __future__ import annotations

import pytest

import pentagon as P

CORPUS_SEEDS = tuple(range(100))
CORPUS_BUDGET = 500


def corpus_graph(seed: int) -> P.Graph:
    n = 10 + (seed % 31)
    return P.random_c5_free(n, seed=seed, budget=CORPUS_BUDGET)


@pytest.fixture(scope="session")
def corpus() -> list[tuple[int, P.Graph]]:
    return [(seed, corpus_graph(seed)) for seed in CORPUS_SEEDS]


@pytest.fixture(scope="session")
def gadgets() -> list[tuple[str, P.Graph]]:
    return [
        ("crown_k1", P.gadget("crown", k=1)),
        ("crown_k2", P.gadget("crown", k=2)),
        ("crown_k5", P.gadget("crown", k=5)),
        ("k4_chain_1", P.gadget("k4_chain", m=1)),
        ("k4_chain_2", P.gadget("k4_chain", m=2)),
        ("k4_chain_3", P.gadget("k4_chain", m=3)),
        ("book_pendants_2_2", P.gadget("book_plus_pendants", k=2, pendants=2)),
        ("book_pendants_3_1", P.gadget("book_plus_pendants", k=3, pendants=1)),
    ]


@pytest.fixture(scope="session")
def bgy_graphs() -> dict[int, P.Graph]:
    return {q: P.bollobas_gyori(q) for q in (2, 3, 5)}
