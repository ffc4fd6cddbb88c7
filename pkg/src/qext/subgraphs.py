"""Exact backtracking search for paths and cycles of prescribed order.

"Order" always counts vertices: a path of order k has k vertices and k-1
edges, a cycle of order k has k vertices and k edges.  Absence answers are
exact (full backtracking within the node budget); running out of budget
raises :class:`SearchBudgetExceeded`, which is distinct from absence.
Vertices are tried in ascending index, so witnesses are deterministic.
Every positive answer is re-checked by an independent validator before it
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, _bits, mask_of

DEFAULT_NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """Node expansion cap hit before the search space was exhausted."""


@dataclass(frozen=True)
class EndpointConstraint:
    """Endpoint restriction for path searches.

    mode "none": unconstrained; "ends_in": both endpoints inside a vertex
    set; "ends_avoid": neither endpoint equals a given vertex (it may still
    appear in the interior).
    """

    mode: str = "none"
    members: int = 0
    avoid: int = -1

    @classmethod
    def none(cls) -> "EndpointConstraint":
        return cls()

    @classmethod
    def ends_in(cls, vertices: Iterable[int]) -> "EndpointConstraint":
        mask = mask_of(vertices)
        if mask == 0:
            raise ValueError("ends_in constraint requires a nonempty vertex set")
        return cls("ends_in", mask, -1)

    @classmethod
    def ends_avoid(cls, vertex: int) -> "EndpointConstraint":
        return cls("ends_avoid", 0, vertex)

    def endpoint_ok(self, v: int) -> bool:
        if self.mode == "ends_in":
            return bool(self.members >> v & 1)
        if self.mode == "ends_avoid":
            return v != self.avoid
        return True


UNCONSTRAINED = EndpointConstraint.none()


def is_path_witness(g: Graph, vertices: tuple[int, ...]) -> bool:
    """Distinct vertices with consecutive adjacency."""
    if len(set(vertices)) != len(vertices):
        return False
    if any(not 0 <= v < g.n for v in vertices):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))


def is_cycle_witness(g: Graph, vertices: tuple[int, ...]) -> bool:
    """Valid path that also closes up, with at least 3 vertices."""
    if len(vertices) < 3:
        return False
    return is_path_witness(g, vertices) and g.has_edge(vertices[-1], vertices[0])


def _check_witness(ok: bool, kind: str, vertices: tuple[int, ...]) -> None:
    if not ok:
        raise RuntimeError(f"internal error: invalid {kind} witness {vertices}")


def find_constrained_path(
    g: Graph,
    order: int,
    constraint: EndpointConstraint = UNCONSTRAINED,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...] | None:
    """First simple path with ``order`` vertices satisfying the constraint.

    Returns the vertex sequence or None for exact absence.  A path of
    order 1 is a single vertex, which must satisfy the constraint as both
    endpoints.
    """
    if order < 1:
        raise ValueError(f"path order must be >= 1, got {order}")
    n = g.n
    if order > n:
        return None
    rows = g.rows
    budget = [node_budget]
    path: list[int] = []

    def dfs(v: int, visited: int, remaining: int) -> bool:
        if budget[0] <= 0:
            raise SearchBudgetExceeded(
                f"path search exceeded node budget {node_budget}"
            )
        budget[0] -= 1
        path.append(v)
        if remaining == 0:
            if constraint.endpoint_ok(v):
                return True
            path.pop()
            return False
        for w in _bits(rows[v] & ~visited):
            if dfs(w, visited | (1 << w), remaining - 1):
                return True
        path.pop()
        return False

    for start in range(n):
        if not constraint.endpoint_ok(start):
            continue
        if dfs(start, 1 << start, order - 1):
            witness = tuple(path)
            _check_witness(
                is_path_witness(g, witness)
                and len(witness) == order
                and constraint.endpoint_ok(witness[0])
                and constraint.endpoint_ok(witness[-1]),
                "path",
                witness,
            )
            return witness
    return None


def find_cycle_of_length(
    g: Graph,
    length: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...] | None:
    """First cycle with ``length`` vertices, anchored at its minimum vertex."""
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    n = g.n
    if length > n:
        return None
    rows = g.rows
    budget = [node_budget]
    path: list[int] = []

    def dfs(v: int, visited: int, remaining: int, anchor: int, above: int) -> bool:
        if budget[0] <= 0:
            raise SearchBudgetExceeded(
                f"cycle search exceeded node budget {node_budget}"
            )
        budget[0] -= 1
        path.append(v)
        if remaining == 0:
            if rows[v] >> anchor & 1:
                return True
            path.pop()
            return False
        for w in _bits(rows[v] & above & ~visited):
            if dfs(w, visited | (1 << w), remaining - 1, anchor, above):
                return True
        path.pop()
        return False

    for anchor in range(n):
        # every cycle is found from its smallest vertex; larger ones only
        above = ~((1 << (anchor + 1)) - 1)
        path.clear()
        if dfs(anchor, 1 << anchor, length - 1, anchor, above):
            witness = tuple(path)
            _check_witness(
                is_cycle_witness(g, witness) and len(witness) == length,
                "cycle",
                witness,
            )
            return witness
    return None


def find_cycle_through_edge(
    g: Graph,
    length: int,
    u: int,
    v: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...] | None:
    """First cycle of ``length`` vertices that uses the edge (u, v)."""
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    n = g.n
    if length > n:
        return None
    rows = g.rows
    budget = [node_budget]
    path: list[int] = []

    def dfs(w: int, visited: int, remaining: int) -> bool:
        if budget[0] <= 0:
            raise SearchBudgetExceeded(
                f"cycle search exceeded node budget {node_budget}"
            )
        budget[0] -= 1
        path.append(w)
        if remaining == 0:
            if w == v:
                return True
            path.pop()
            return False
        if w == v:
            path.pop()
            return False
        for x in _bits(rows[w] & ~visited):
            if dfs(x, visited | (1 << x), remaining - 1):
                return True
        path.pop()
        return False

    # a cycle through (u, v) is a u..v path on `length` vertices plus that edge
    if dfs(u, 1 << u, length - 1):
        witness = tuple(path)
        _check_witness(
            is_cycle_witness(g, witness)
            and len(witness) == length
            and witness[0] == u
            and witness[-1] == v,
            "cycle",
            witness,
        )
        return witness
    return None


def is_hamiltonian(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...] | None:
    """Spanning cycle witness or exact absence; requires n >= 3."""
    if g.n < 3:
        raise ValueError(f"Hamiltonian cycles need n >= 3, got n={g.n}")
    return find_cycle_of_length(g, g.n, node_budget=node_budget)


def has_cycle_longer_than(
    g: Graph,
    length: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...] | None:
    """Witness for any cycle with more than ``length`` vertices, or None."""
    for l in range(max(length + 1, 3), g.n + 1):
        witness = find_cycle_of_length(g, l, node_budget=node_budget)
        if witness is not None:
            return witness
    return None
