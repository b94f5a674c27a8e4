"""Extremal host graphs matching the closed-form edge counts.

Four building blocks appear:

* ``clique_union(k, n, r)`` -- ``k`` blocks ``K_{n-1}`` followed by ``K_r``;
  the universal lower-bound witness at every residue.
* ``near_regular(m, d)`` -- a circulant-based graph on ``m`` vertices that is
  ``d``-regular when ``d m`` is even and has a single vertex of degree
  ``d - 1`` otherwise; ``floor(d m / 2)`` edges, the star-free maximizer and
  the "regular arm" of the two-arm maxima.
* ``lemma46_even`` / ``lemma46_odd`` -- a connected graph on ``2n - 9``
  vertices whose edge count exceeds the clique union at its residue once
  ``n >= 28``; three vertices reach the degree ceiling ``n - 4``.
* ``lemma47_construct`` -- a connected graph on ``2n - 8`` vertices (four
  congruence cases mod 4) that exceeds the clique union once ``n >= 41``;
  ``v_0`` plus a block of "high" vertices reach degree ``n - 4``.

``extremal_graph`` assembles the right base for a family and residue,
prepends ``k - 1`` complete blocks at the lowest vertex indices, and asserts
that the edge count equals the closed-form value.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import SimpleGraph
from .trees import TreeFamily
from .formulas import decompose, extremal_value

__all__ = [
    "ConstructionRecipe",
    "clique_union",
    "near_regular",
    "lemma46_even",
    "lemma46_odd",
    "lemma47_construct",
    "extremal_graph",
]


@dataclass(frozen=True, slots=True)
class ConstructionRecipe:
    """What ``extremal_graph`` built: base kind, block count, and sizes."""

    family: str
    n: int
    p: int
    base: str  # "clique-union" | "near-regular" | "L4.6-even" | "L4.6-odd" | "L4.7-case1".."L4.7-case4"
    prepended_blocks: int
    base_order: int
    edges: int


# ---------------------------------------------------------------- basic bases

def clique_union(k: int, n: int, r: int) -> SimpleGraph:
    """``k`` copies of K_{n-1} (lowest indices) followed by K_r."""
    if k < 1:
        raise ValueError(f"clique_union requires k >= 1 (got k={k})")
    if n < 3:
        raise ValueError(f"clique_union requires n >= 3 (got n={n})")
    if not 0 <= r <= n - 2:
        raise ValueError(f"clique_union requires 0 <= r <= n-2 (got r={r}, n={n})")
    g = SimpleGraph.empty(0)
    for _ in range(k):
        g = g.disjoint_union(SimpleGraph.complete(n - 1))
    g = g.disjoint_union(SimpleGraph.complete(r))
    assert g.edge_count() == k * comb(n - 1, 2) + comb(r, 2)
    return g


def near_regular(m: int, d: int) -> SimpleGraph:
    """A ``d``-regular graph on ``m`` vertices when ``d m`` is even; otherwise
    ``d m`` is odd and exactly one vertex (index ``(m-1)//2``) has degree
    ``d - 1``.  Always ``floor(d m / 2)`` edges.

    Built as the circulant with offsets ``1..d//2`` plus, for odd ``d``,
    either the ``m/2`` offset (even ``m``: a perfect matching) or a
    near-perfect matching ``{i, i + (m+1)/2 mod m}`` for
    ``i = 0..(m-3)/2`` (odd ``m``).
    """
    if m < 1:
        raise ValueError(f"near_regular requires m >= 1 (got m={m})")
    if not 0 <= d <= m - 1:
        raise ValueError(f"near_regular requires 0 <= d <= m-1 (got d={d}, m={m})")
    offsets = set(range(1, d // 2 + 1))
    if d % 2 and m % 2 == 0:
        offsets.add(m // 2)
    g = SimpleGraph.circulant(m, offsets)
    if d % 2 and m % 2:
        half = (m + 1) // 2
        extra = [(i, (i + half) % m) for i in range((m - 1) // 2)]
        adj = list(g.adj)
        for a, b in extra:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        g = SimpleGraph(m, adj)
    assert g.edge_count() == d * m // 2
    return g


# ---------------------------------------------------------------- ad-hoc bases

def _check_degrees(g: SimpleGraph, expected: list[int]) -> None:
    got = list(g.degree_sequence())
    want = sorted(expected, reverse=True)
    assert got == want, f"degree multiset mismatch: got {got}, want {want}"


def lemma46_even(n: int) -> SimpleGraph:
    """Connected base on ``2n - 9`` vertices for even ``n >= 26``.

    Layout (vertex indices): hub ``v_0 = 0``; spine ``v_1..v_{n-4}`` at
    ``1..n-4``; companions ``u_1..u_{n-6}`` at ``n-3..2n-10``.  Edges:
    ``v_0`` to every spine vertex; ``v_{n-5}`` and ``v_{n-4}`` to all of
    ``v_1..v_{n-6}`` and to each other; an ``(n-10)``-regular circulant core
    on ``v_1..v_{n-6}``; a complete graph on the companions; and a pairing
    joining spine pair ``(v_{2i-1}, v_{2i})`` completely to companion pair
    ``(u_{2i-1}, u_{2i})``.

    Exactly three vertices (``v_0``, ``v_{n-5}``, ``v_{n-4}``) have degree
    ``n - 4``; all others have degree ``n - 5``.  Edge count
    ``(2 n^2 - 19 n + 48) / 2``.
    """
    if n < 26 or n % 2:
        raise ValueError(f"lemma46_even requires even n >= 26 (got n={n})")
    p = 2 * n - 9
    u0 = n - 4  # u_j sits at index u0 + j

    edges: list[tuple[int, int]] = []
    edges += [(0, i) for i in range(1, n - 3)]  # v_0 to all spine
    edges += [(n - 5, i) for i in range(1, n - 5)]  # v_{n-5} to v_1..v_{n-6}
    edges += [(n - 5, n - 4)]
    edges += [(n - 4, i) for i in range(1, n - 5)]  # v_{n-4} to v_1..v_{n-6}
    core = near_regular(n - 6, n - 10)
    edges += [(1 + a, 1 + b) for a, b in core.edges()]
    edges += [
        (u0 + a, u0 + b)
        for a in range(1, n - 6)
        for b in range(a + 1, n - 5)
    ]
    for i in range(1, (n - 6) // 2 + 1):
        for vv in (2 * i - 1, 2 * i):
            for uu in (2 * i - 1, 2 * i):
                edges.append((vv, u0 + uu))

    g = SimpleGraph.from_edges(p, edges)
    assert g.edge_count() == (2 * n * n - 19 * n + 48) // 2
    _check_degrees(g, [n - 4] * 3 + [n - 5] * (2 * n - 12))
    return g


def lemma46_odd(n: int) -> SimpleGraph:
    """Connected base on ``2n - 9`` vertices for odd ``n >= 27``.

    Same layout as :func:`lemma46_even`, but the core on ``v_1..v_{n-6}`` is
    the *complement* of a sparse graph H (a cycle plus a chord matching
    ``v_i v_{i+(n-7)/2}`` for ``i = 1..(n-7)/2``), and the pairing covers
    ``v_1..v_{n-7}`` in pairs plus the single join ``v_{n-6} u_{n-6}``.

    Degrees: three vertices at ``n - 4``, one (``u_{n-6}``) at ``n - 6``,
    the remaining ``2n - 13`` at ``n - 5``.  Edge count
    ``(2 n^2 - 19 n + 47) / 2``.
    """
    if n < 27 or n % 2 == 0:
        raise ValueError(f"lemma46_odd requires odd n >= 27 (got n={n})")
    p = 2 * n - 9
    u0 = n - 4
    m = n - 6  # core size

    # Sparse graph H on v_1..v_m, in v-index space.
    h_edges = {(i, i + 1) for i in range(1, m)} | {(1, m)}
    h_edges |= {(i, i + (n - 7) // 2) for i in range(1, (n - 7) // 2 + 1)}
    h_norm = {(min(a, b), max(a, b)) for a, b in h_edges}

    edges: list[tuple[int, int]] = []
    edges += [(0, i) for i in range(1, n - 3)]
    edges += [(n - 5, i) for i in range(1, n - 5)]
    edges += [(n - 5, n - 4)]
    edges += [(n - 4, i) for i in range(1, n - 5)]
    edges += [
        (a, b)
        for a in range(1, m + 1)
        for b in range(a + 1, m + 1)
        if (a, b) not in h_norm
    ]
    edges += [
        (u0 + a, u0 + b)
        for a in range(1, n - 6)
        for b in range(a + 1, n - 5)
    ]
    for i in range(1, (n - 7) // 2 + 1):
        for vv in (2 * i - 1, 2 * i):
            for uu in (2 * i - 1, 2 * i):
                edges.append((vv, u0 + uu))
    edges.append((n - 6, u0 + n - 6))  # the leftover single pairing

    g = SimpleGraph.from_edges(p, edges)
    assert g.edge_count() == (2 * n * n - 19 * n + 47) // 2
    _check_degrees(g, [n - 4] * 3 + [n - 5] * (2 * n - 13) + [n - 6])
    return g


def lemma47_construct(n: int) -> SimpleGraph:
    """Connected base on ``2n - 8`` vertices for ``n >= 37``.

    Layout: hub ``v_0 = 0``; spine ``v_1..v_{n-4}`` at ``1..n-4`` split into
    a *low* range ``v_1..v_L`` and a *high* range ``v_{L+1}..v_{n-4}``;
    companions ``u_1..u_{n-5}`` at ``n-3..2n-9`` forming a complete graph.
    ``v_0`` joins every spine vertex; every high vertex joins every
    lower-indexed spine vertex (so the high range plus anything below it is
    complete).  The low range carries a sparse-complement (or directly
    near-regular) core, and each low vertex is paired with one or two
    companions so that every companion has exactly one spine neighbour.

    The four congruence cases mod 4 differ only in the low/high split, the
    core, and the tail of the pairing.  Degrees: ``v_0`` and every high
    vertex at ``n - 4``, everything else at ``n - 5``.  Edge count
    ``n^2 - 9 n + 29 + (n - 37) // 4``.
    """
    if n < 37:
        raise ValueError(f"lemma47_construct requires n >= 37 (got n={n})")
    p = 2 * n - 8
    u0 = n - 4  # u_j sits at index u0 + j, j = 1..n-5

    rem = n % 4
    if rem == 1:
        low_hi = (n - 5) // 2
        tail_singles = 0
        chord_start = None  # direct near-regular core, no complement
    elif rem == 2:
        low_hi = (n - 4) // 2
        tail_singles = 1
        chord_start = (n - 2) // 4
        n_chords = (n - 6) // 4
    elif rem == 3:
        low_hi = (n - 3) // 2
        tail_singles = 2
        chord_start = (n - 3) // 4
        n_chords = (n - 7) // 4
    else:  # rem == 0
        low_hi = (n - 2) // 2
        tail_singles = 3
        chord_start = (n - 4) // 4
        n_chords = (n - 8) // 4

    edges: list[tuple[int, int]] = []
    edges += [(0, i) for i in range(1, n - 3)]  # v_0 to all spine
    # High vertices join every lower-indexed spine vertex.
    edges += [
        (a, h) for h in range(low_hi + 1, n - 3) for a in range(1, h)
    ]
    # Companion clique.
    edges += [
        (u0 + a, u0 + b)
        for a in range(1, n - 5)
        for b in range(a + 1, n - 4)
    ]

    # Core on the low range.
    if chord_start is None:
        core = near_regular(low_hi, (n - 13) // 2)
        edges += [(1 + a, 1 + b) for a, b in core.edges()]
    else:
        h_edges = {(i, i + 1) for i in range(1, low_hi)} | {(1, low_hi)}
        h_edges |= {
            (i, chord_start + i - 1) for i in range(1, n_chords + 1)
        }
        h_norm = {(min(a, b), max(a, b)) for a, b in h_edges}
        edges += [
            (a, b)
            for a in range(1, low_hi + 1)
            for b in range(a + 1, low_hi + 1)
            if (a, b) not in h_norm
        ]

    # Pairing: doubled companions for the leading low vertices, then single
    # companions for the last ``tail_singles`` low vertices.
    doubled = low_hi - tail_singles
    for i in range(1, doubled + 1):
        edges.append((i, u0 + 2 * i - 1))
        edges.append((i, u0 + 2 * i))
    for t in range(tail_singles):
        edges.append((doubled + 1 + t, u0 + 2 * doubled + 1 + t))

    g = SimpleGraph.from_edges(p, edges)
    assert g.edge_count() == n * n - 9 * n + 29 + (n - 37) // 4
    n_high = (n - 4) - low_hi
    _check_degrees(g, [n - 4] * (1 + n_high) + [n - 5] * (2 * n - 9 - n_high))
    return g


# ---------------------------------------------------------------- assembly

def _prepend_blocks(base: SimpleGraph, blocks: int, n: int) -> SimpleGraph:
    g = SimpleGraph.empty(0)
    for _ in range(blocks):
        g = g.disjoint_union(SimpleGraph.complete(n - 1))
    return g.disjoint_union(base)


def _lemma46(n: int) -> tuple[SimpleGraph, str]:
    if n % 2 == 0:
        return lemma46_even(n), "L4.6-even"
    return lemma46_odd(n), "L4.6-odd"


def _two_arm_base(n: int, r: int) -> tuple[SimpleGraph, str]:
    """Clique remainder vs. near-regular remainder; ties go to the clique."""
    clique_val = comb(n - 1, 2) + comb(r, 2)
    regular_val = (n - 5) * (n - 1 + r) // 2
    if regular_val > clique_val:
        return near_regular(n - 1 + r, n - 5), "near-regular"
    return clique_union(1, n, r), "clique-union"


def extremal_graph(
    f: TreeFamily, p: int, connected: bool = False
) -> tuple[SimpleGraph, ConstructionRecipe]:
    """An extremal host of order ``p`` avoiding the family tree, plus the
    recipe used.  The edge count is asserted to equal the closed-form value.

    ``connected=True`` switches to a connected base whenever one attaining
    the value exists (the ``t3`` residues ``n-8`` with ``n >= 26`` and
    ``n-7`` with ``n >= 37``); otherwise it is a no-op.
    """
    kind = f.kind
    n = f.n

    if kind == "explicit":
        raise ValueError("no extremal construction known for explicit trees")
    if kind == "star":
        assert f.s is not None
        if p < f.s + 1:
            raise ValueError(f"construction requires p >= s+1 (got p={p}, s={f.s})")
        g = near_regular(p, f.s - 1)
        recipe = ConstructionRecipe(kind, n, p, "near-regular", 0, p, g.edge_count())
        assert recipe.edges == extremal_value(f, p).value
        return g, recipe
    if kind == "path":
        if n < 3 or p < n - 1:
            raise ValueError(f"construction requires n >= 3, p >= n-1 (got p={p}, n={n})")
        d = decompose(p, n)
        g = clique_union(d.k, n, d.r)
        recipe = ConstructionRecipe(
            kind, n, p, "clique-union", d.k - 1, n - 1 + d.r, g.edge_count()
        )
        assert recipe.edges == extremal_value(f, p).value
        return g, recipe

    # The three spider families.
    min_n = 15 if kind == "t3" else 10
    if n < min_n:
        raise ValueError(f"construction for {kind} requires n >= {min_n} (got n={n})")
    if p < n:
        raise ValueError(f"construction for {kind} requires p >= n (got p={p}, n={n})")
    d = decompose(p, n)
    r = d.r

    base: SimpleGraph
    label: str
    if kind in ("tpp", "tppp"):
        base, label = _two_arm_base(n, r)
    else:  # t3
        if r == n - 8 and ((n >= 28) or (connected and n >= 26)):
            base, label = _lemma46(n)
        elif r == n - 7 and ((n >= 41) or (connected and n >= 37)):
            base, label = lemma47_construct(n), f"L4.7-case{[4, 1, 2, 3][n % 4]}"
        elif 3 <= r <= n - 9:
            base, label = _two_arm_base(n, r)
        else:
            base, label = clique_union(1, n, r), "clique-union"

    if label == "clique-union":
        g = clique_union(d.k, n, r)
    else:
        g = _prepend_blocks(base, d.k - 1, n)
    recipe = ConstructionRecipe(kind, n, p, label, d.k - 1, base.order, g.edge_count())
    assert recipe.edges == extremal_value(f, p).value, (
        f"construction/formula mismatch for {kind}, n={n}, p={p}"
    )
    return g, recipe
