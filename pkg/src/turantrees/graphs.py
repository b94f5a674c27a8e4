"""Simple undirected graphs on vertex set {0, ..., n-1}, stored as bitmasks.

The adjacency structure is a list ``adj`` of ``n`` Python ints; bit ``u`` of
``adj[v]`` is set iff ``{u, v}`` is an edge.  All graphs are finite, simple
(no loops, no multi-edges) and undirected, so ``adj`` is symmetric and has a
zero diagonal.  Bitmask rows make the hot operations of this package --
neighbourhood intersection, degree counting, component sweeps -- single
machine-word-ish operations via ``int.bit_count``.

Serialization supports two formats:

* **graph6** -- the compact ASCII format for simple graphs (one line per
  graph).  Both header regimes are implemented: single-byte orders
  ``n <= 62`` and the three-byte long form for ``63 <= n <= 258047``.
* **edge text** -- one ``u v`` pair per line, zero-based, ``#`` comments and
  blank lines ignored; the vertex count of a parsed graph is ``max index + 1``
  (isolated trailing vertices are not representable in this format).
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "SimpleGraph",
    "from_graph6",
    "to_graph6",
    "from_edge_text",
    "to_edge_text",
    "read_graph_file",
    "write_graph_file",
    "iter_bits",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """An immutable-by-convention simple graph on ``{0, ..., n-1}``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[int] | None = None):
        if n < 0:
            raise ValueError("graph order must be non-negative")
        self.n = n
        self.adj = [0] * n if adj is None else adj

    # ------------------------------------------------------------ constructors

    @staticmethod
    def empty(n: int) -> "SimpleGraph":
        """The edgeless graph on ``n`` vertices."""
        return SimpleGraph(n)

    @staticmethod
    def complete(n: int) -> "SimpleGraph":
        """The complete graph K_n."""
        full = (1 << n) - 1
        return SimpleGraph(n, [full ^ (1 << v) for v in range(n)])

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        """Build a graph on ``n`` vertices from an iterable of edge pairs.

        Raises ``ValueError`` on loops or endpoints outside ``[0, n)``.
        Repeated edges are collapsed.
        """
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return SimpleGraph(n, adj)

    @staticmethod
    def circulant(n: int, offsets: Iterable[int]) -> "SimpleGraph":
        """Circulant graph: ``i ~ j`` iff ``(i - j) mod n`` is ±an offset.

        Offsets must lie in ``[1, n/2]``.  The resulting degree is
        ``2 * #offsets``, minus one if ``n`` is even and ``n/2`` is used
        (that offset contributes a perfect matching, one neighbour each).
        """
        offs = sorted(set(offsets))
        if offs and not (1 <= offs[0] and offs[-1] <= n // 2):
            raise ValueError(f"offsets must lie in [1, {n // 2}] for order {n}")
        adj = [0] * n
        for v in range(n):
            for o in offs:
                adj[v] |= 1 << ((v + o) % n)
                adj[v] |= 1 << ((v - o) % n)
        return SimpleGraph(n, adj)

    # ------------------------------------------------------------ basic queries

    @property
    def order(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        """All vertex degrees, sorted in non-increasing order."""
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            yield from ((u, w) for w in iter_bits(self.adj[u] >> (u + 1) << (u + 1)))

    # ------------------------------------------------------------ combinators

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(
            self.n, [(full ^ row ^ (1 << v)) for v, row in enumerate(self.adj)]
        )

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        """Disjoint union; ``other``'s vertices are shifted up by ``self.n``."""
        shift = self.n
        adj = list(self.adj) + [row << shift for row in other.adj]
        return SimpleGraph(self.n + other.n, adj)

    def relabeled(self, perm: list[int]) -> "SimpleGraph":
        """Image under the permutation ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertex set")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            target = 0
            for u in iter_bits(row):
                target |= 1 << perm[u]
            adj[perm[v]] = target
        return SimpleGraph(self.n, adj)

    # ------------------------------------------------------------ connectivity

    def component_masks(self) -> list[int]:
        """Vertex bitmasks of the connected components, by smallest member."""
        unseen = (1 << self.n) - 1
        out: list[int] = []
        while unseen:
            start = unseen & -unseen
            comp = start
            frontier = start
            unseen ^= start
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v] & unseen
                unseen &= ~nxt
                comp |= nxt
                frontier = nxt
            out.append(comp)
        return out

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples."""
        return [tuple(iter_bits(mask)) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    # ------------------------------------------------------------ dunder

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.adj)))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count()})"


# ---------------------------------------------------------------- graph6

_G6_LONG = 126  # '~'


def to_graph6(g: SimpleGraph) -> str:
    """Encode a graph as a graph6 string (without the optional ``>>graph6<<``
    prefix).  Orders up to 258047 are supported."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [_G6_LONG, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    else:
        raise ValueError("graph too large for this graph6 encoder (n > 258047)")

    # Upper-triangle bits in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    body: list[int] = []
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                body.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        body.append((acc << (6 - nbits)) + 63)
    return bytes(head + body).decode("ascii")


def from_graph6(text: str) -> SimpleGraph:
    """Decode a graph6 string.  Accepts an optional ``>>graph6<<`` prefix and
    ignores surrounding whitespace; raises ``ValueError`` on malformed input
    (bad header, bytes outside ``[63, 126]``, wrong body length)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii", errors="strict")
    if not data:
        raise ValueError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 byte out of range [63, 126]")

    if data[0] == _G6_LONG:
        if len(data) >= 2 and data[1] == _G6_LONG:
            raise ValueError("graph6 orders >= 258048 are not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 long-form header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        if n <= 62:
            raise ValueError("non-canonical long-form header for small order")
    else:
        n = data[0] - 63
        body = data[1:]

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        kind = "truncated" if len(body) < nbytes else "trailing garbage in"
        raise ValueError(f"{kind} graph6 body: expected {nbytes} bytes, got {len(body)}")

    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return SimpleGraph(n, adj)


# ---------------------------------------------------------------- edge text

def to_edge_text(g: SimpleGraph) -> str:
    """Render a graph as ``u v`` lines (zero-based, lexicographically sorted)."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def from_edge_text(text: str) -> SimpleGraph:
    """Parse ``u v`` lines into a graph on ``max index + 1`` vertices.

    Blank lines and ``#`` comments are ignored.  An empty edge list yields the
    empty graph on zero vertices.
    """
    edges: list[tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer endpoint in {raw!r}") from exc
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index")
        if u == v:
            raise ValueError(f"line {lineno}: loop at vertex {u}")
        top = max(top, u, v)
        edges.append((u, v))
    return SimpleGraph.from_edges(top + 1, edges)


def write_graph_file(g: SimpleGraph, path: str, fmt: str = "g6") -> None:
    """Write a graph to ``path`` in ``g6`` or ``edges`` format."""
    if fmt == "g6":
        payload = to_graph6(g) + "\n"
    elif fmt == "edges":
        payload = to_edge_text(g)
    else:
        raise ValueError(f"unknown graph format {fmt!r} (expected 'g6' or 'edges')")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(payload)


def read_graph_file(path: str) -> SimpleGraph:
    """Read a graph from ``path``, sniffing the format.

    A first non-comment line containing two whitespace-separated integers is
    treated as edge text; anything else is parsed as graph6.
    """
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
            return from_edge_text(text)
        return from_graph6(text)
    return from_edge_text(text)  # only blanks/comments: empty graph
