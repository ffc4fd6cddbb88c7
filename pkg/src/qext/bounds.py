"""Closed-form bound formulas and graph-dependent upper bounds on the Q-index.

Integral bounds (kopylov_i/ii, egp, egc, ore_threshold) are evaluated with
exact integer arithmetic before conversion to float, so comparisons against
integer edge counts stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, neighbor_degree_sum


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: float
    relation: str  # "upper_bound_on_q" | "edge_count_bound" | "sandwich_pair"


def merris_bound(g: Graph) -> BoundValue:
    """max over u of d_u + (sum of neighbor degrees)/d_u, skipping d_u = 0.

    Upper bound on q; equality on connected graphs exactly for regular or
    semiregular bipartite graphs.
    """
    if g.m == 0:
        raise ValueError("merris bound undefined for edgeless graphs")
    best = max(
        g.degrees[u] + neighbor_degree_sum(g, u) / g.degrees[u]
        for u in range(g.n)
        if g.degrees[u] > 0
    )
    return BoundValue("merris", best, "upper_bound_on_q")


def das_bound(g: Graph) -> BoundValue:
    """2m/(n-1) + n - 2; equality exactly for complete graphs, stars, and a
    complete graph plus one isolated vertex."""
    if g.n < 2:
        raise ValueError(f"das bound needs n >= 2, got n={g.n}")
    value = 2 * g.m / (g.n - 1) + g.n - 2
    return BoundValue("das", value, "upper_bound_on_q")


def edge_degree_bound(g: Graph) -> BoundValue:
    """max of d_u + d_v over edges (u, v)."""
    if g.m == 0:
        raise ValueError("edge-degree bound undefined for edgeless graphs")
    best = max(g.degrees[u] + g.degrees[v] for u, v in g.edges())
    return BoundValue("edge_degree", float(best), "upper_bound_on_q")


def closed_form_snk(n: int, k: int) -> float:
    """Exact Q-index of the k-dominating split graph on n vertices."""
    if not 1 <= k < n:
        raise ValueError(f"closed_form_snk requires 1 <= k < n, got n={n}, k={k}")
    a = n + 2 * k - 2
    return 0.5 * (a + math.sqrt(a * a - 8 * (k * k - k)))


def prop1_sandwich(n: int, k: int) -> tuple[float, float]:
    """Lower/upper envelope around q of the split-graph family:
    n+2k-2 - 2(k^2-k)/(n+2k-3)  and  n+2k-2 - 2(k^2-k)/(n+2k+2)."""
    if k < 1 or n <= k:
        raise ValueError(f"sandwich requires 1 <= k < n, got n={n}, k={k}")
    a = n + 2 * k - 2
    spread = 2 * (k * k - k)
    return (a - spread / (n + 2 * k - 3), a - spread / (n + 2 * k + 2))


def kopylov_i_value(n: int, k: int) -> int:
    """Edge maximum for connected graphs of order n with no path on 2k+2
    vertices (n >= 2k+2)."""
    if k < 1:
        raise ValueError(f"kopylov_i requires k >= 1, got {k}")
    return max(k * n - k * (k + 1) // 2, math.comb(2 * k, 2) + (n - 2 * k))


def kopylov_ii_value(n: int, k: int) -> int:
    """Edge maximum for connected graphs of order n with no path on 2k+3
    vertices (n >= 2k+3)."""
    if k < 1:
        raise ValueError(f"kopylov_ii requires k >= 1, got {k}")
    return max(
        k * n - k * (k + 1) // 2 + 1,
        math.comb(2 * k + 1, 2) + (n - 2 * k - 1),
    )


def ore_edge_threshold(n: int) -> int:
    """Edge count that forces a Hamiltonian cycle when strictly exceeded."""
    if n < 1:
        raise ValueError(f"ore threshold requires n >= 1, got {n}")
    return math.comb(n - 1, 2) + 1


_REGISTRY = {
    "closed_form_snk": (closed_form_snk, ("n", "k")),
    "prop1_sandwich": (prop1_sandwich, ("n", "k")),
    "kopylov_i": (lambda n, k: float(kopylov_i_value(n, k)), ("n", "k")),
    "kopylov_ii": (lambda n, k: float(kopylov_ii_value(n, k)), ("n", "k")),
    "egp": (lambda n, k: k * n / 2, ("n", "k")),
    "egc": (lambda n, k: k * (n - 1) / 2, ("n", "k")),
    "ore_threshold": (lambda n: float(ore_edge_threshold(n)), ("n",)),
}

FORMULA_IDS = tuple(sorted(_REGISTRY))


def formula_value(formula_id: str, **params: int) -> float | tuple[float, float]:
    """Evaluate a registered closed-form bound by tag.

    Unknown tags and missing or extra parameters are rejected.
    """
    try:
        fn, names = _REGISTRY[formula_id]
    except KeyError:
        raise ValueError(
            f"unknown formula {formula_id!r}; known: {', '.join(FORMULA_IDS)}"
        ) from None
    missing = [p for p in names if p not in params]
    if missing:
        raise ValueError(f"formula {formula_id!r} missing parameters {missing}")
    extra = [p for p in params if p not in names]
    if extra:
        raise ValueError(f"formula {formula_id!r} got unexpected parameters {extra}")
    return fn(**params)
