"""Exact tree-containment checking with explicit embedding witnesses.

Two engines, one answer:

* ``contains_tree`` dispatches the three spider families to a *skeleton*
  search: place the high-degree internal star (center plus branch vertices)
  by direct enumeration, then decide leaf placement exactly with a Hall
  condition over at most four interchangeable demand classes, extracting a
  concrete assignment with an augmenting-path matching.  Trees of other
  kinds (paths, stars, explicit) use the generic engine.

* ``generic_backtrack`` embeds an arbitrary tree by backtracking over a BFS
  order rooted at a maximum-degree vertex, with degree pruning and an
  ascending-host-index rule over blocks of same-parent leaves (leaf siblings
  are interchangeable, so only sorted images need be tried).

Both return a witness tuple ``w`` with ``w[i]`` = host vertex for tree vertex
``i``, or ``None`` when no embedding exists.  Because a tree is connected,
every embedding lives inside a single host component; root candidates are
filtered by component size accordingly.

The module also exposes the engine hook the brute-force oracle needs: an
anchored check for embeddings that use one prescribed host edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .graphs import SimpleGraph, iter_bits
from .trees import TreeFamily, realize

__all__ = [
    "StarSkeleton",
    "build_star_skeleton",
    "contains_tree",
    "generic_backtrack",
    "verify_witness",
    "TreeEmbedContext",
    "contains_through_edge",
]


# ---------------------------------------------------------------- skeleton

@dataclass(frozen=True, slots=True)
class StarSkeleton:
    """Internal structure of a tree whose internal vertices induce a star.

    ``center`` is the star's middle; ``branches`` are the other internal
    vertices (each adjacent to ``center`` only); every other tree vertex is a
    leaf hanging off ``center`` or one branch.
    """

    center: int
    branches: tuple[int, ...]
    center_leaves: tuple[int, ...]
    branch_leaves: tuple[tuple[int, ...], ...]


def build_star_skeleton(t: SimpleGraph) -> StarSkeleton | None:
    """Decompose ``t`` if its internal vertices induce a star, else None."""
    n = t.n
    if n < 3:
        return None
    deg = [t.degree(v) for v in range(n)]
    internal = [v for v in range(n) if deg[v] >= 2]
    if not internal:
        return None
    internal_set = set(internal)
    if len(internal) == 1:
        center = internal[0]
        branches: tuple[int, ...] = ()
    else:
        idegs = {
            v: sum(1 for w in t.neighbors(v) if w in internal_set) for v in internal
        }
        centers = [v for v in internal if idegs[v] == len(internal) - 1]
        if not centers or any(
            idegs[v] != 1 for v in internal if v not in centers
        ):
            return None
        if len(internal) == 2:
            # Both qualify; pick the heavier-demand side (more leaves).
            a, b = internal
            center = a if deg[a] >= deg[b] else b
        else:
            center = centers[0]
        branches = tuple(v for v in internal if v != center)

    leaves_of = lambda v: tuple(w for w in t.neighbors(v) if deg[w] == 1)
    sk = StarSkeleton(
        center=center,
        branches=branches,
        center_leaves=leaves_of(center),
        branch_leaves=tuple(leaves_of(b) for b in branches),
    )
    covered = 1 + len(sk.branches) + len(sk.center_leaves)
    covered += sum(len(ls) for ls in sk.branch_leaves)
    if covered != n:
        return None  # some leaf hangs off a leaf-of-internal chain; not a star
    return sk


def _hall_feasible(classes: list[tuple[int, int]]) -> bool:
    """Hall's condition for class-uniform leaf demands.

    ``classes`` holds ``(avail_mask, demand)`` pairs.  Slots inside a class
    share one neighbourhood, so checking every nonempty subset of classes is
    exactly Hall's condition for the full slot-vs-host bipartite graph.
    """
    k = len(classes)
    for sel in range(1, 1 << k):
        union = 0
        need = 0
        for i in range(k):
            if sel >> i & 1:
                union |= classes[i][0]
                need += classes[i][1]
        if union.bit_count() < need:
            return False
    return True


def _match_slots(slot_masks: list[int]) -> list[int] | None:
    """Assign a distinct host (bit index) to each slot mask, by augmenting
    paths.  Returns the host per slot, or None."""
    owner: dict[int, int] = {}  # host -> slot
    chosen: list[int] = [-1] * len(slot_masks)

    def augment(s: int, banned: int) -> int:
        """Try to give slot ``s`` a host, displacing owners recursively.
        Returns the claimed-host bit or 0."""
        avail = slot_masks[s] & ~banned
        for h in iter_bits(avail):
            if h not in owner:
                owner[h] = s
                chosen[s] = h
                return 1 << h
        for h in iter_bits(avail):
            moved = augment(owner[h], banned | (1 << h))
            if moved:
                owner[h] = s
                chosen[s] = h
                return 1 << h
        return 0

    for s in range(len(slot_masks)):
        if not augment(s, 0):
            return None
    return chosen


def _skeleton_search(
    g: SimpleGraph, t: SimpleGraph, sk: StarSkeleton
) -> tuple[int, ...] | None:
    n = t.n
    p = g.n
    hdeg = [g.degree(v) for v in range(p)]
    tdeg = [t.degree(v) for v in range(n)]

    # A connected tree embeds inside one component.
    comp_size = [0] * p
    for mask in g.component_masks():
        size = mask.bit_count()
        for v in iter_bits(mask):
            comp_size[v] = size

    center_need = tdeg[sk.center]
    w0_cands = sorted(
        (v for v in range(p) if hdeg[v] >= center_need and comp_size[v] >= n),
        key=lambda v: (-hdeg[v], v),
    )

    # Group branches by leaf demand: equal-demand branches are
    # interchangeable, so host images are tried in ascending order only.
    demands = sorted(
        {len(ls) for ls in sk.branch_leaves}, reverse=True
    )
    groups = [
        [b for b, ls in zip(sk.branches, sk.branch_leaves) if len(ls) == d]
        for d in demands
    ]

    for w0 in w0_cands:
        row0 = g.adj[w0]
        group_cands = [
            [w for w in iter_bits(row0) if hdeg[w] >= d + 1]
            for d in demands
        ]
        if any(len(c) < len(grp) for c, grp in zip(group_cands, groups)):
            continue
        for picks in product(
            *(combinations(c, len(grp)) for c, grp in zip(group_cands, groups))
        ):
            flat = [w for pick in picks for w in pick]
            used = 1 << w0
            ok = True
            for w in flat:
                if used >> w & 1:
                    ok = False
                    break
                used |= 1 << w
            if not ok:
                continue

            classes = [(row0 & ~used, len(sk.center_leaves))]
            branch_order: list[tuple[int, int, tuple[int, ...]]] = []
            for pick, grp in zip(picks, groups):
                for b, w in zip(grp, pick):
                    leaves = sk.branch_leaves[sk.branches.index(b)]
                    classes.append((g.adj[w] & ~used, len(leaves)))
                    branch_order.append((b, w, leaves))
            if not _hall_feasible(classes):
                continue

            slot_masks: list[int] = []
            slot_leaves: list[int] = []
            for leaf in sk.center_leaves:
                slot_masks.append(classes[0][0])
                slot_leaves.append(leaf)
            for ci, (_, w, leaves) in enumerate(branch_order, start=1):
                for leaf in leaves:
                    slot_masks.append(classes[ci][0])
                    slot_leaves.append(leaf)
            hosts = _match_slots(slot_masks)
            assert hosts is not None, "Hall feasibility must imply a matching"

            witness = [-1] * n
            witness[sk.center] = w0
            for b, w, _ in branch_order:
                witness[b] = w
            for leaf, h in zip(slot_leaves, hosts):
                witness[leaf] = h
            return tuple(witness)
    return None


# ---------------------------------------------------------------- generic engine

@dataclass(frozen=True, slots=True)
class TreeEmbedContext:
    """A tree prepared for backtracking from a fixed enumeration order.

    ``order[i]`` is the tree vertex placed at step ``i``; for ``i`` past the
    pinned prefix, ``parent_pos[i]`` points at the earlier step holding its
    unique already-placed neighbour.  ``monotone[i]`` marks steps whose tree
    vertex is a leaf sibling of the previous step's (images must ascend).
    """

    tdeg: tuple[int, ...]
    order: tuple[int, ...]
    parent_pos: tuple[int, ...]
    monotone: tuple[bool, ...]
    pinned: int


def _prepare_context(t: SimpleGraph, seeds: list[int]) -> TreeEmbedContext:
    n = t.n
    tdeg = tuple(t.degree(v) for v in range(n))
    order: list[int] = list(seeds)
    pos_of = {v: i for i, v in enumerate(order)}
    parent_pos = [-1] * n
    monotone = [False] * n

    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        kids = [w for w in t.neighbors(v) if w not in pos_of]
        kids.sort(key=lambda w: (tdeg[w] == 1, w))  # internal first, then leaves
        prev_leaf = -1
        for w in kids:
            pos_of[w] = len(order)
            parent_pos[pos_of[w]] = pos_of[v]
            if tdeg[w] == 1 and prev_leaf == len(order) - 1:
                monotone[len(order)] = True
            if tdeg[w] == 1:
                prev_leaf = len(order)
            order.append(w)
    assert len(order) == n, "tree must be connected"
    return TreeEmbedContext(
        tdeg=tdeg,
        order=tuple(order),
        parent_pos=tuple(parent_pos),
        monotone=tuple(monotone),
        pinned=len(seeds),
    )


def _engine(
    hadj: list[int],
    hdeg: list[int],
    ctx: TreeEmbedContext,
    assign: list[int],
    used: int,
    pos: int,
) -> bool:
    if pos == len(ctx.order):
        return True
    cands = hadj[assign[ctx.parent_pos[pos]]] & ~used
    if ctx.monotone[pos]:
        cands &= -2 << assign[pos - 1]  # strictly larger indices only
    need = ctx.tdeg[ctx.order[pos]]
    for w in iter_bits(cands):
        if hdeg[w] < need:
            continue
        assign[pos] = w
        if _engine(hadj, hdeg, ctx, assign, used | 1 << w, pos + 1):
            return True
    return False


def generic_backtrack(g: SimpleGraph, t: SimpleGraph) -> tuple[int, ...] | None:
    """Embed the tree ``t`` into ``g`` by pure backtracking; witness or None."""
    n = t.n
    p = g.n
    if n > p:
        return None
    if n == 1:
        return (0,) if p >= 1 else None

    hdeg = [g.degree(v) for v in range(p)]
    comp_size = [0] * p
    for mask in g.component_masks():
        size = mask.bit_count()
        for v in iter_bits(mask):
            comp_size[v] = size

    tdeg = [t.degree(v) for v in range(n)]
    root = max(range(n), key=lambda v: (tdeg[v], -v))
    ctx = _prepare_context(t, [root])

    assign = [-1] * n
    for w in sorted(range(p), key=lambda v: (-hdeg[v], v)):
        if hdeg[w] < tdeg[root] or comp_size[w] < n:
            continue
        assign[0] = w
        if _engine(g.adj, hdeg, ctx, assign, 1 << w, 1):
            witness = [-1] * n
            for i, v in enumerate(ctx.order):
                witness[v] = assign[i]
            return tuple(witness)
    return None


# ---------------------------------------------------------------- public API

def contains_tree(g: SimpleGraph, f: TreeFamily) -> tuple[int, ...] | None:
    """Does ``g`` contain the family tree?  Witness tuple (tree vertex ``i``
    maps to host ``w[i]``) or None.

    The three spider families take the skeleton fast path whenever their
    internal vertices induce a star (always true except ``tppp`` at
    ``n = 6``, which is a plain path); everything else backtracks.
    """
    t = realize(f)
    if t.n > g.n:
        return None
    if f.kind in ("t3", "tpp", "tppp"):
        sk = build_star_skeleton(t)
        if sk is not None:
            return _skeleton_search(g, t, sk)
    return generic_backtrack(g, t)


def verify_witness(g: SimpleGraph, t: SimpleGraph, witness: tuple[int, ...]) -> bool:
    """Check a claimed embedding: right length, injective, in range, and
    every tree edge lands on a host edge.  Linear in the tree size."""
    if len(witness) != t.n:
        return False
    if any(not 0 <= w < g.n for w in witness):
        return False
    if len(set(witness)) != t.n:
        return False
    return all(g.has_edge(witness[a], witness[b]) for a, b in t.edges())


# ---------------------------------------------------------------- oracle hook

def edge_anchored_contexts(t: SimpleGraph) -> list[TreeEmbedContext]:
    """One context per directed tree edge ``(a, b)``, with ``a, b`` pinned as
    the first two placements.  Used for incremental containment: a new
    embedding appearing after adding host edge ``{x, y}`` must map some tree
    edge onto it, in one of the two orientations."""
    out = []
    for a, b in t.edges():
        out.append(_prepare_context(t, [a, b]))
        out.append(_prepare_context(t, [b, a]))
    return out


def contains_through_edge(
    hadj: list[int],
    hdeg: list[int],
    contexts: list[TreeEmbedContext],
    x: int,
    y: int,
) -> bool:
    """Does the host (given as bitmask rows) contain the prepared tree via an
    embedding that maps some tree edge onto the host edge ``{x, y}``?"""
    for ctx in contexts:
        a, b = ctx.order[0], ctx.order[1]
        if hdeg[x] < ctx.tdeg[a] or hdeg[y] < ctx.tdeg[b]:
            continue
        assign = [-1] * len(ctx.order)
        assign[0] = x
        assign[1] = y
        if _engine(hadj, hdeg, ctx, assign, (1 << x) | (1 << y), 2):
            return True
    return False
