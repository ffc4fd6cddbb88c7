import random

import pytest

from qext.enumeration import (
    canonical_code,
    canonical_form,
    enumerate_nonisomorphic,
    graph_from_code,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from qext.families import complete, path, star
from qext.graph import build_graph


def relabel(g, perm):
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def brute_codes_all_labeled(n):
    """Independent oracle: canonical-dedup every labeled graph on n vertices."""
    codes = set()
    nbits = n * (n - 1) // 2
    for mask in range(1 << nbits):
        codes.add(canonical_code(graph_from_code(n, mask)))
    return codes


def test_canonical_form_relabel_invariance_examples():
    p = build_graph(3, [(0, 1), (1, 2)])
    q = build_graph(3, [(1, 0), (0, 2)])
    assert canonical_form(p) == canonical_form(q)
    assert canonical_form(complete(3)) != canonical_form(p)


def test_canonical_form_distinct_count_n4():
    forms = {canonical_code(graph_from_code(4, mask)) for mask in range(64)}
    assert len(forms) == 11


def test_canonical_form_random_relabelings():
    rng = random.Random(2)
    for n in range(1, 7):
        for g in enumerate_nonisomorphic(n):
            base = canonical_form(g)
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(relabel(g, perm)) == base


def test_canonical_form_layout():
    form = canonical_form(complete(3))
    assert form[0] == 3
    assert len(form) == 2  # order byte + one packed byte for 3 bits
    with pytest.raises(ValueError, match="limited to"):
        canonical_form(complete(11))


def test_enumeration_counts():
    for n, want in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)]:
        assert sum(1 for _ in enumerate_nonisomorphic(n)) == want
    with pytest.raises(ValueError):
        list(enumerate_nonisomorphic(9))
    with pytest.raises(ValueError):
        list(enumerate_nonisomorphic(0))


def test_enumeration_matches_labeled_dedup_oracle():
    for n in range(1, 7):
        ours = {canonical_code(g) for g in enumerate_nonisomorphic(n)}
        assert ours == brute_codes_all_labeled(n)


def test_enumeration_is_canonical_and_sorted():
    for n in (4, 5, 6):
        codes = [canonical_code(g) for g in enumerate_nonisomorphic(n)]
        assert codes == sorted(codes)
        for g, code in zip(enumerate_nonisomorphic(n), codes):
            # emitted representative is its own canonical labeling
            rebuilt = graph_from_code(n, code)
            assert rebuilt == g


def test_graph6_anchors():
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6("C~") == complete(4)
    assert write_graph6(path(3)) == "Bg"
    assert write_graph6(complete(3)) == "Bw"
    assert write_graph6(complete(4)) == "C~"


def test_graph6_round_trip_enumerated():
    for n in range(1, 8):
        for g in enumerate_nonisomorphic(n):
            token = write_graph6(g)
            assert parse_graph6(token) == g
            assert write_graph6(parse_graph6(token)) == token


def test_graph6_round_trip_larger_random():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randrange(1, 63)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.3
        ]
        g = build_graph(n, edges)
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_rejects_malformed():
    with pytest.raises(ValueError, match="empty"):
        parse_graph6("")
    with pytest.raises(ValueError, match="outside 63..126"):
        parse_graph6("B\x1f")
    with pytest.raises(ValueError, match="payload"):
        parse_graph6("C~~")
    with pytest.raises(ValueError, match="payload"):
        parse_graph6("E")
    with pytest.raises(ValueError, match="multi-byte"):
        parse_graph6("~??")
    with pytest.raises(ValueError, match="padding"):
        parse_graph6("Bx")  # stray bit beyond the 3 pair positions
    with pytest.raises(ValueError, match="n <= 62"):
        write_graph6(build_graph(63))


def test_read_graph6_lines():
    graphs = read_graph6_lines("Bw\n\nC~\n")
    assert graphs == [complete(3), complete(4)]
    with pytest.raises(ValueError, match="line 2"):
        read_graph6_lines("Bw\nzz\n")


def test_star_and_complete_have_expected_codes():
    # stars minimize to the lexicographically-last hub labeling; cliques are
    # all-ones strings
    assert canonical_code(complete(4)) == (1 << 6) - 1
    assert canonical_code(star(3)) == canonical_code(path(3))
