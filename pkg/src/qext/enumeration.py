"""Canonical forms, isomorph-free enumeration of small graphs, and graph6 I/O.

Canonical form is the exact lexicographic minimum over all n! vertex
permutations of the upper-triangle adjacency bit string (row-major pair
order), prefixed by the order byte.  Permutations are applied as vectorized
numpy gathers; the full permutation table is cached for n <= 8 and streamed
in chunks for n = 9, 10.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from .graph import Graph, build_graph

CANONICAL_MAX = 10
ENUMERATE_MAX = 8

_PERM_CHUNK = 40320


@lru_cache(maxsize=None)
def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Upper-triangle pair rows/cols and MSB-first bit weights for order n."""
    iu, ju = np.triu_indices(n, 1)
    count = len(iu)
    weights = 1 << np.arange(count - 1, -1, -1, dtype=np.int64)
    return iu.astype(np.int64), ju.astype(np.int64), weights


@lru_cache(maxsize=None)
def _perm_gather(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All permutations of 0..n-1 plus flattened adjacency gather indices."""
    iu, ju, weights = _pair_index(n)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    flat = perms[:, iu] * n + perms[:, ju]
    return perms, flat, weights


@lru_cache(maxsize=2)
def _perm_matrix_large(n: int) -> np.ndarray:
    """Permutation table for n in {9, 10}, kept compact for chunked scans."""
    return np.fromiter(
        (v for perm in itertools.permutations(range(n)) for v in perm),
        dtype=np.int8,
    ).reshape(-1, n)


@lru_cache(maxsize=None)
def _extension_deltas(n: int) -> np.ndarray:
    """Code increments for every (permutation, neighborhood-of-new-vertex) pair.

    Entry [p, mask] is the canonical-code contribution of joining vertex n-1
    to the vertices of ``mask`` and then relabeling by permutation p.  Values
    stay below 2**45 so float64 arithmetic is exact.
    """
    perms, _, weights = _perm_gather(n)
    iu, ju, _ = _pair_index(n)
    last = n - 1
    count = perms.shape[0]
    per_vertex = np.zeros((count, n - 1), dtype=np.float64)
    for t in range(len(iu)):
        pi = perms[:, iu[t]]
        pj = perms[:, ju[t]]
        hit = np.nonzero(pi == last)[0]
        np.add.at(per_vertex, (hit, pj[hit]), float(weights[t]))
        hit = np.nonzero(pj == last)[0]
        np.add.at(per_vertex, (hit, pi[hit]), float(weights[t]))
    masks = np.arange(1 << (n - 1), dtype=np.int64)
    members = (masks[:, None] >> np.arange(n - 1)) & 1
    return per_vertex @ members.T.astype(np.float64)


def _adjacency_flat(g: Graph) -> np.ndarray:
    n = g.n
    a = np.zeros(n * n, dtype=np.int64)
    for u in range(n):
        row = g.rows[u]
        while row:
            low = row & -row
            a[u * n + low.bit_length() - 1] = 1
            row ^= low
    return a


@lru_cache(maxsize=16384)
def canonical_code(g: Graph) -> int:
    """Minimum upper-triangle bit string over all relabelings, as an integer.

    MSB is the pair (0,1), then (0,2), ... in row-major pair order.
    """
    n = g.n
    if n > CANONICAL_MAX:
        raise ValueError(f"canonical form limited to n <= {CANONICAL_MAX}, got {n}")
    if n <= 1:
        return 0
    a = _adjacency_flat(g)
    if n <= 8:
        _, flat, weights = _perm_gather(n)
        return int((a[flat] * weights).sum(axis=1).min())
    iu, ju, weights = _pair_index(n)
    perms = _perm_matrix_large(n)
    best: int | None = None
    for start in range(0, perms.shape[0], _PERM_CHUNK):
        parr = perms[start : start + _PERM_CHUNK].astype(np.int64)
        flat = parr[:, iu] * n + parr[:, ju]
        low = int((a[flat] * weights).sum(axis=1).min())
        if best is None or low < best:
            best = low
    assert best is not None
    return best


def canonical_form(g: Graph) -> bytes:
    """Order byte followed by the canonical bit string packed MSB-first."""
    n = g.n
    code = canonical_code(g)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    packed = (code << (8 * nbytes - nbits)).to_bytes(nbytes, "big") if nbytes else b""
    return bytes([n]) + packed


def graph_from_code(n: int, code: int) -> Graph:
    """Rebuild the graph whose row-major upper-triangle bit string is ``code``."""
    nbits = n * (n - 1) // 2
    edges = []
    pos = nbits - 1
    for u in range(n):
        for v in range(u + 1, n):
            if code >> pos & 1:
                edges.append((u, v))
            pos -= 1
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def _nonisomorphic_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    parents = _nonisomorphic_codes(n - 1)
    seen: set[int] = set()
    _, flat, weights = _perm_gather(n)
    deltas = _extension_deltas(n)
    for pcode in parents:
        parent = graph_from_code(n - 1, pcode)
        base = np.zeros(n * n, dtype=np.int64)
        for u in range(n - 1):
            row = parent.rows[u]
            while row:
                low = row & -row
                base[u * n + low.bit_length() - 1] = 1
                row ^= low
        base_codes = (base[flat] * weights).sum(axis=1).astype(np.float64)
        mins = (base_codes[:, None] + deltas).min(axis=0)
        seen.update(int(c) for c in mins)
    return tuple(sorted(seen))


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices, canonical order.

    Each parent class on n-1 vertices is extended by a new vertex with every
    possible neighborhood; canonical codes deduplicate the candidates.
    """
    if not 1 <= n <= ENUMERATE_MAX:
        raise ValueError(f"native enumeration supports 1 <= n <= {ENUMERATE_MAX}, got {n}")
    for code in _nonisomorphic_codes(n):
        yield graph_from_code(n, code)


# --- graph6 ----------------------------------------------------------------

GRAPH6_MAX = 62


def write_graph6(g: Graph) -> str:
    """Encode as a graph6 line body: order byte, then 6-bit groups of the
    upper-triangle bits in column order a(0,1); a(0,2), a(1,2); a(0,3), ...
    """
    n = g.n
    if n > GRAPH6_MAX:
        raise ValueError(f"graph6 single-byte header supports n <= {GRAPH6_MAX}, got {n}")
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        group = 0
        for b in bits[pos : pos + 6]:
            group = group << 1 | b
        chars.append(chr(group + 63))
    return "".join(chars)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 token; strict about header, length and padding."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ValueError("graph6 data is not ASCII") from exc
    if not text:
        raise ValueError("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"graph6 character {ch!r} outside 63..126")
    header = ord(text[0]) - 63
    if header > GRAPH6_MAX:
        raise ValueError("multi-byte graph6 order headers are not supported")
    n = header
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    payload = text[1:]
    if len(payload) != want:
        raise ValueError(
            f"graph6 payload for n={n} must be {want} bytes, got {len(payload)}"
        )
    bits: list[int] = []
    for ch in payload:
        group = ord(ch) - 63
        bits.extend(group >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("graph6 padding bits must be zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse one graph per non-empty line."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        token = line.strip()
        if not token:
            continue
        try:
            out.append(parse_graph6(token))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return out
