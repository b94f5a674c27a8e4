"""Bitmask graph type and the graph6 / edge-list codecs."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turantrees.graphs import (
    SimpleGraph,
    from_edge_text,
    from_graph6,
    read_graph_file,
    to_edge_text,
    to_graph6,
    write_graph_file,
)

from reference import pair_slots


def graph_from_mask(p: int, mask: int) -> SimpleGraph:
    slots = pair_slots(p)
    return SimpleGraph.from_edges(
        p, [slots[i] for i in range(len(slots)) if (mask >> i) & 1]
    )


def random_graph(rng: random.Random, p: int) -> SimpleGraph:
    bits = p * (p - 1) // 2
    return graph_from_mask(p, rng.getrandbits(bits) if bits else 0)


# st.integers for the order plus a seed; the mask itself can run to
# thousands of bits for large orders, which a seeded PRNG handles cheaply.
orders_and_seeds = st.tuples(st.integers(0, 70), st.integers(0, 2**32 - 1))


# ----------------------------------------------------------------- basic type

def test_empty_and_complete():
    assert SimpleGraph.empty(5).edge_count() == 0
    assert SimpleGraph.complete(5).edge_count() == 10
    assert SimpleGraph.complete(0).order == 0
    assert SimpleGraph.complete(1).edge_count() == 0


def test_from_edges_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError, match="loop at vertex 2"):
        SimpleGraph.from_edges(4, [(2, 2)])
    with pytest.raises(ValueError, match="out of range"):
        SimpleGraph.from_edges(4, [(0, 4)])
    with pytest.raises(ValueError, match="non-negative"):
        SimpleGraph.empty(-1)


def test_degrees_and_edges_order():
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert g.degree(1) == 3
    assert g.degree_sequence() == (3, 1, 1, 1)
    assert g.max_degree() == 3
    assert list(g.edges()) == [(0, 1), (1, 2), (1, 3)]
    assert g.has_edge(1, 3) and g.has_edge(3, 1)
    assert not g.has_edge(0, 2)
    assert sorted(g.neighbors(1)) == [0, 2, 3]


def test_components_and_connectivity():
    g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (4, 5)])
    comps = g.components()
    assert sorted(len(c) for c in comps) == [1, 2, 3]
    assert not g.is_connected()
    assert SimpleGraph.complete(4).is_connected()
    assert SimpleGraph.empty(1).is_connected()
    assert SimpleGraph.empty(0).is_connected()


def test_relabeled_is_isomorphic_relabeling():
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = g.relabeled([3, 2, 1, 0])
    assert h.degree_sequence() == g.degree_sequence()
    assert h.has_edge(3, 2) and h.has_edge(1, 0)
    with pytest.raises(ValueError, match="permutation"):
        g.relabeled([0, 0, 1, 2])


def test_circulant_against_hand_expansion():
    c5 = SimpleGraph.circulant(5, [1])
    assert sorted(c5.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    with pytest.raises(ValueError, match="offsets"):
        SimpleGraph.circulant(5, [3])


@given(st.integers(1, 30), st.data())
def test_circulant_is_regular(m, data):
    offsets = data.draw(
        st.lists(st.integers(1, max(m // 2, 1)), unique=True, max_size=m // 2)
        if m >= 2
        else st.just([])
    )
    g = SimpleGraph.circulant(m, offsets)
    degs = set(g.degree_sequence() or (0,))
    assert len(degs) <= 1, "circulant graphs are vertex-transitive, hence regular"


@given(orders_and_seeds)
@settings(max_examples=60)
def test_handshake(params):
    p, seed = params
    g = random_graph(random.Random(seed), min(p, 25))
    assert 2 * g.edge_count() == sum(g.degree_sequence())


@given(orders_and_seeds)
@settings(max_examples=60)
def test_complement_involution(params):
    p, seed = params
    p = min(p, 25)
    g = random_graph(random.Random(seed), p)
    assert g.complement().complement() == g
    assert g.complement().edge_count() == p * (p - 1) // 2 - g.edge_count()


def test_complement_of_empty_is_complete():
    assert SimpleGraph.empty(7).complement() == SimpleGraph.complete(7)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_disjoint_union_degrees_and_associativity(seed):
    rng = random.Random(seed)
    a, b, c = (random_graph(rng, rng.randrange(0, 7)) for _ in range(3))
    left = a.disjoint_union(b).disjoint_union(c)
    right = a.disjoint_union(b.disjoint_union(c))
    assert left.order == right.order == a.order + b.order + c.order
    assert sorted(left.degree_sequence()) == sorted(right.degree_sequence())
    assert left == right  # identical shift layout, not just isomorphic
    merged = sorted(a.degree_sequence() + b.degree_sequence() + c.degree_sequence())
    assert sorted(left.degree_sequence()) == merged


# --------------------------------------------------------------- graph6 codec

# Hand-computed literals pin the bit convention (column-major upper
# triangle, most significant bit first, bytes offset by 63).
FROZEN_G6 = [
    (SimpleGraph.empty(0), "?"),
    (SimpleGraph.empty(1), "@"),
    (SimpleGraph.empty(2), "A?"),
    (SimpleGraph.complete(2), "A_"),
    (SimpleGraph.complete(3), "Bw"),
    (SimpleGraph.complete(4), "C~"),
]


@pytest.mark.parametrize("g,text", FROZEN_G6)
def test_graph6_frozen_literals(g, text):
    assert to_graph6(g) == text
    assert from_graph6(text) == g


def test_graph6_accepts_standard_header():
    assert from_graph6(">>graph6<<Bw") == SimpleGraph.complete(3)


def test_graph6_long_form_boundary():
    # 62 is the last short-form order, 63 the first long-form one.
    g62 = SimpleGraph.complete(62)
    g63 = SimpleGraph.complete(63)
    s62, s63 = to_graph6(g62), to_graph6(g63)
    assert s62[0] != "~" and s63[0] == "~"
    assert len(s63) == 4 + -(-(63 * 62 // 2) // 6)
    assert from_graph6(s62) == g62
    assert from_graph6(s63) == g63


def test_graph6_rejects_malformed_input():
    with pytest.raises(ValueError, match="empty"):
        from_graph6("")
    with pytest.raises(ValueError, match="byte out of range"):
        from_graph6("B!")
    with pytest.raises(ValueError, match="expected"):
        from_graph6("D")  # order 5 with no body
    with pytest.raises(ValueError, match="expected"):
        from_graph6("Bwz")  # trailing garbage after a complete K3
    # A long-form header wrapping an order that fits in short form must be
    # rejected: each graph has exactly one encoding.
    k3 = to_graph6(SimpleGraph.complete(3))
    fake = "~" + chr(63) + chr(63) + chr(63 + 3) + k3[1:]
    with pytest.raises(ValueError, match="non-canonical"):
        from_graph6(fake)
    with pytest.raises(ValueError, match="not supported"):
        from_graph6("~~" + chr(63) * 6)


@given(orders_and_seeds)
@settings(max_examples=80, deadline=None)
def test_graph6_round_trip_both_regimes(params):
    p, seed = params
    g = random_graph(random.Random(seed), p)
    assert from_graph6(to_graph6(g)) == g


# ------------------------------------------------------------ edge-list codec

def test_edge_text_round_trip_and_comments():
    g = SimpleGraph.from_edges(5, [(0, 3), (1, 2)])
    text = to_edge_text(g)
    assert from_edge_text(text) == SimpleGraph.from_edges(4, [(0, 3), (1, 2)])
    parsed = from_edge_text("# comment\n0 1\n\n2 3  # till end of line\n")
    assert sorted(parsed.edges()) == [(0, 1), (2, 3)]


def test_edge_text_rejects_bad_lines():
    with pytest.raises(ValueError, match="line 1"):
        from_edge_text("0 1 2")
    with pytest.raises(ValueError, match="non-integer"):
        from_edge_text("a b")
    with pytest.raises(ValueError, match="negative"):
        from_edge_text("-1 2")
    with pytest.raises(ValueError, match="loop"):
        from_edge_text("3 3")


def test_file_round_trip_and_sniffing(tmp_path):
    g = SimpleGraph.from_edges(6, [(0, 1), (2, 5), (3, 4)])
    g6_path = tmp_path / "g.g6"
    ed_path = tmp_path / "g.edges"
    write_graph_file(g, str(g6_path), "g6")
    write_graph_file(g, str(ed_path), "edges")
    assert read_graph_file(str(g6_path)) == g
    assert read_graph_file(str(ed_path)) == g
    with pytest.raises(ValueError, match="unknown graph format"):
        write_graph_file(g, str(tmp_path / "x"), "gml")
    missing = tmp_path / "missing.g6"
    with pytest.raises(OSError):
        read_graph_file(str(missing))
