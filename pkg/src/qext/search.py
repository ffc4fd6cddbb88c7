"""Stochastic maximization of the Q-index over graphs avoiding given cycle
lengths.

Hill climbing with random restarts: moves toggle one vertex pair, additions
are rejected when they close a forbidden cycle (only cycles through the new
edge need re-searching), and only strict improvements of the power-iteration
estimate are accepted.  Removals never increase the Q-index, so progress
comes from feasible additions; restarts escape plateaus from fresh random
maximal feasible graphs.  Identical arguments always produce identical
results: restart r uses the derived seed ``seed + r`` and the merge orders
candidates by value with a canonical tiebreak, independent of completion
order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable

from .enumeration import CANONICAL_MAX, canonical_code, write_graph6
from .families import edgeless
from .graph import Graph
from .spectral import ConvergenceError, q_index
from .subgraphs import (
    DEFAULT_NODE_BUDGET,
    find_cycle_of_length,
    find_cycle_through_edge,
)

NEAR_TIE_TOL = 1e-6


@dataclass
class SearchResult:
    best: Graph
    q_interval: tuple[float, float]
    feasible: bool
    seed: int
    restarts: int
    accepted_moves: int
    matched_family: str | None
    near_ties: tuple[str, ...] = ()

    def as_record(self) -> dict[str, Any]:
        return {
            "kind": "search",
            "graph6": write_graph6(self.best),
            "q_low": self.q_interval[0],
            "q_high": self.q_interval[1],
            "feasible": self.feasible,
            "seed": self.seed,
            "restarts": self.restarts,
            "accepted_moves": self.accepted_moves,
            "matched_family": self.matched_family,
            "near_ties": list(self.near_ties),
        }


def is_feasible(g: Graph, forbidden: Iterable[int], node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Full from-scratch check: no cycle of any forbidden length."""
    return all(
        length > g.n or find_cycle_of_length(g, length, node_budget=node_budget) is None
        for length in sorted(set(forbidden))
    )


def _addition_allowed(
    g: Graph, u: int, v: int, forbidden: frozenset[int], node_budget: int
) -> bool:
    # only cycles through the toggled edge can be new
    for length in forbidden:
        if length <= g.n and find_cycle_through_edge(g, length, u, v, node_budget=node_budget):
            return False
    return True


def _estimate(g: Graph, tol: float) -> float:
    if g.n == 0:
        return 0.0
    try:
        return q_index(g, tol=tol, method="power").q
    except ConvergenceError as exc:
        # acceptance decisions may use the best estimate; the final result
        # is re-certified with the dense engine
        return exc.best.q


def _random_feasible(
    n: int, forbidden: frozenset[int], rng: random.Random, node_budget: int
) -> Graph:
    g = edgeless(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        candidate = g.with_edge(u, v)
        if _addition_allowed(candidate, u, v, forbidden, node_budget):
            g = candidate
    return g


def _climb(
    start: Graph,
    forbidden: frozenset[int],
    budget: int,
    rng: random.Random,
    tol: float,
    node_budget: int,
) -> tuple[Graph, int]:
    n = start.n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    current = start
    current_q = _estimate(current, tol)
    accepted = 0
    for _ in range(budget):
        u, v = pairs[rng.randrange(len(pairs))]
        if current.has_edge(u, v):
            candidate = current.without_edge(u, v)
        else:
            candidate = current.with_edge(u, v)
            if not _addition_allowed(candidate, u, v, forbidden, node_budget):
                continue
        candidate_q = _estimate(candidate, tol)
        if candidate_q > current_q:
            current, current_q = candidate, candidate_q
            accepted += 1
    return current, accepted


def _restart_worker(payload: tuple) -> tuple[int, str, int]:
    index, n, forbidden, budget, seed, seed_graph6, tol, node_budget = payload
    from .enumeration import parse_graph6

    rng = random.Random(seed + index)
    forbidden = frozenset(forbidden)
    if index == 0 and seed_graph6 is not None:
        start = parse_graph6(seed_graph6)
    else:
        start = _random_feasible(n, forbidden, rng, node_budget)
    best, accepted = _climb(start, forbidden, budget, rng, tol, node_budget)
    return index, write_graph6(best), accepted


def _merge_key(g: Graph, value: float) -> tuple:
    if g.n <= CANONICAL_MAX:
        return (value, 0, canonical_code(g))
    return (value, 1, write_graph6(g))


def _match_family(g: Graph) -> str | None:
    """Exact structural match against the two split-graph families.

    A graph is s_nk iff its degree-(n-1) vertices leave an independent
    rest, and s_nk_plus iff the rest spans exactly one edge while still
    being dominated.
    """
    n = g.n
    dominators = [v for v in range(n) if g.degrees[v] == n - 1]
    k = len(dominators)
    if not 1 <= k < n:
        return None
    rest = [v for v in range(n) if g.degrees[v] < n - 1]
    inside = sum(1 for u in rest for v in rest if u < v and g.has_edge(u, v))
    if inside == 0:
        return "s_nk"
    if inside == 1 and all(g.degrees[v] in (k, k + 1) for v in rest):
        return "s_nk_plus"
    return None


def maximize_q_forbidden_cycles(
    n: int,
    forbidden: Iterable[int],
    budget: int = 400,
    restarts: int = 8,
    seed: int = 0,
    seed_graph: Graph | None = None,
    jobs: int = 1,
    tol: float = 1e-8,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SearchResult:
    """Best graph found on n vertices with no cycle of a forbidden length.

    ``budget`` counts attempted toggles per restart.  When ``seed_graph``
    is given it must be feasible; restart 0 climbs from it, so the result
    value never falls below the seed's.  The returned graph is re-verified
    feasible from scratch and its Q-index re-certified with the dense
    engine.
    """
    if n < 3:
        raise ValueError(f"search requires n >= 3, got {n}")
    forbidden_set = frozenset(int(l) for l in forbidden)
    if not forbidden_set or min(forbidden_set) < 3:
        raise ValueError("forbidden lengths must be a nonempty set of integers >= 3")
    if budget < 1 or restarts < 1:
        raise ValueError("budget and restarts must be >= 1")
    seed_graph6 = None
    if seed_graph is not None:
        if seed_graph.n != n:
            raise ValueError(f"seed graph has order {seed_graph.n}, expected {n}")
        if not is_feasible(seed_graph, forbidden_set, node_budget):
            raise ValueError("seed graph contains a forbidden cycle")
        seed_graph6 = write_graph6(seed_graph)

    payloads = [
        (r, n, tuple(sorted(forbidden_set)), budget, seed, seed_graph6, tol, node_budget)
        for r in range(restarts)
    ]
    if jobs > 1 and restarts > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = list(pool.map(_restart_worker, payloads))
    else:
        raw = [_restart_worker(p) for p in payloads]

    from .enumeration import parse_graph6

    accepted_total = 0
    certified: list[tuple[Graph, float, float]] = []
    for _, graph6, accepted in sorted(raw):
        accepted_total += accepted
        g = parse_graph6(graph6)
        result = q_index(g)
        certified.append((g, result.q, result.residual))

    best_q_value = max(value for _, value, _ in certified)
    tied = [item for item in certified if item[1] == best_q_value]
    if len({g.rows for g, _, _ in tied}) == 1:
        best_graph, best_q, best_residual = tied[0]
    else:
        best_graph, best_q, best_residual = max(
            tied, key=lambda item: _merge_key(item[0], item[1])
        )
    if not is_feasible(best_graph, forbidden_set, node_budget):
        raise RuntimeError("internal error: returned graph failed final feasibility check")
    near = sorted(
        {
            write_graph6(g)
            for g, value, _ in certified
            if abs(value - best_q) <= NEAR_TIE_TOL
        }
    )
    return SearchResult(
        best=best_graph,
        q_interval=(best_q - best_residual, best_q + best_residual),
        feasible=True,
        seed=seed,
        restarts=restarts,
        accepted_moves=accepted_total,
        matched_family=_match_family(best_graph),
        near_ties=tuple(near),
    )
