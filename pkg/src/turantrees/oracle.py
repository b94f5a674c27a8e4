"""Brute-force reference oracle: exact maximum edge counts at desk scale.

``ex_bruteforce`` maximizes edges over all graphs on ``p`` labeled vertices
that avoid a given tree, by depth-first search over the edge slots in
lexicographic order (all slots at vertex 0 first), include-branch first.
Three exact prunes keep it fast:

* **Incremental containment** -- the partial graph is kept avoider-safe at
  every step: an edge is included only if no embedding of the tree maps one
  of its edges onto the new host edge (earlier edges were already safe, so
  this preserves freeness exactly).
* **Degree symmetry** -- only hosts where vertex 0 attains the maximum
  degree are enumerated.  Vertex-0 slots are decided first, so its degree is
  final when the constraint is enforced; any avoider can be relabeled to put
  a maximum-degree vertex at 0, so the maximum value is unaffected.
* **Capacity bound** -- once vertex 0's degree ``c`` is final, no other
  vertex may exceed it, so at most ``sum(max(0, c - deg(v))) / 2`` more
  edges fit; branches that cannot beat the incumbent are cut.

Budgets (node count and wall-clock) abort the search by exception; the
result is then flagged ``exact=False`` and carries the incumbent as a lower
bound.  With ``threads > 1`` the slot tree is split at a fixed depth into a
deterministic frontier of subproblems spread over worker processes; values
combine by max, so the reported value is independent of scheduling and of
the thread count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .graphs import SimpleGraph
from .trees import TreeFamily, realize
from .containment import TreeEmbedContext, contains_through_edge, edge_anchored_contexts
from .formulas import extremal_value

__all__ = [
    "OracleResult",
    "BudgetExceeded",
    "DEFAULT_BUDGET_NODES",
    "DEFAULT_BUDGET_SECONDS",
    "ex_bruteforce",
    "verify_formula",
]

DEFAULT_BUDGET_NODES = 100_000_000
DEFAULT_BUDGET_SECONDS = 60.0


class BudgetExceeded(Exception):
    """Raised inside the search when a node or time budget runs out."""


@dataclass(frozen=True, slots=True)
class OracleResult:
    """Outcome of a brute-force run.  ``exact=False`` means a budget was hit
    and ``value`` is only a lower bound."""

    p: int
    value: int
    exact: bool
    witness: SimpleGraph
    nodes: int
    elapsed: float
    threads: int


def _resolve_budget_nodes(budget_nodes: int | None) -> int:
    if budget_nodes is not None:
        return budget_nodes
    env = os.environ.get("TURAN_BUDGET_NODES")
    return int(env) if env else DEFAULT_BUDGET_NODES


# ---------------------------------------------------------------- search core

class _BruteForce:
    """One depth-first search instance over the edge-slot tree."""

    __slots__ = (
        "p", "slots", "contexts", "tree_n", "rows", "deg", "m",
        "best", "best_rows", "best_tag", "tag", "nodes",
        "budget_nodes", "deadline", "stop", "collect",
    )

    def __init__(
        self,
        p: int,
        contexts: list[TreeEmbedContext],
        tree_n: int,
        budget_nodes: int,
        deadline: float,
    ):
        self.p = p
        self.slots = [(u, v) for u in range(p) for v in range(u + 1, p)]
        self.contexts = contexts
        self.tree_n = tree_n
        self.rows = [0] * p
        self.deg = [0] * p
        self.m = 0
        self.best = -1
        self.best_rows: list[int] | None = None
        self.best_tag = -1
        self.tag = 0
        self.nodes = 0
        self.budget_nodes = budget_nodes
        self.deadline = deadline
        self.stop = len(self.slots)
        self.collect: list[tuple[list[int], list[int], int]] | None = None

    def load(self, rows: list[int], deg: list[int], m: int) -> None:
        self.rows = list(rows)
        self.deg = list(deg)
        self.m = m

    def _component_size(self, start: int) -> int:
        """Vertices reachable from ``start`` in the current partial graph."""
        rows = self.rows
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen.bit_count()

    def dfs(self, i: int) -> None:
        self.nodes += 1
        if self.nodes >= self.budget_nodes:
            raise BudgetExceeded("node budget exhausted")
        if not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")

        if i == self.stop:
            if self.collect is not None and self.stop < len(self.slots):
                self.collect.append((list(self.rows), list(self.deg), self.m))
            elif self.m > self.best:
                self.best = self.m
                self.best_rows = list(self.rows)
                self.best_tag = self.tag
            return

        # Upper bound on what this subtree can still reach.  Once vertex 0's
        # degree is final it caps every degree, and each later edge consumes
        # two units of remaining degree capacity.
        remaining = self.stop - i
        if i >= self.p - 1:
            cap = self.deg[0]
            slack = sum(cap - d for d in self.deg)  # every term is >= 0
            remaining = min(remaining, slack // 2)
        if self.m + remaining <= self.best:
            return

        u, v = self.slots[i]
        allowed = u == 0 or (self.deg[u] < self.deg[0] and self.deg[v] < self.deg[0])
        if allowed:
            self.rows[u] |= 1 << v
            self.rows[v] |= 1 << u
            self.deg[u] += 1
            self.deg[v] += 1
            self.m += 1
            # Any new embedding sits inside u's component and must use the
            # new edge, so small components need no engine call at all.
            created = self._component_size(u) >= self.tree_n and contains_through_edge(
                self.rows, self.deg, self.contexts, u, v
            )
            if not created:
                self.dfs(i + 1)
            self.rows[u] ^= 1 << v
            self.rows[v] ^= 1 << u
            self.deg[u] -= 1
            self.deg[v] -= 1
            self.m -= 1
        self.dfs(i + 1)


def _worker_run(args: tuple) -> tuple[int, list[int] | None, int, int, bool]:
    """Run the search below a batch of frontier states (child process)."""
    p, tree_edges, states, start_slot, budget_nodes, deadline = args
    t = SimpleGraph.from_edges(max(max(e) for e in tree_edges) + 1, tree_edges)
    contexts = edge_anchored_contexts(t)
    bf = _BruteForce(p, contexts, t.n, budget_nodes, deadline)
    exact = True
    for tag, (rows, deg, m) in states:
        bf.tag = tag
        bf.load(rows, deg, m)
        try:
            bf.dfs(start_slot)
        except BudgetExceeded:
            exact = False
            break
    return bf.best, bf.best_rows, bf.nodes, bf.best_tag, exact


# ---------------------------------------------------------------- public API

def ex_bruteforce(
    p: int,
    f: TreeFamily,
    *,
    budget_nodes: int | None = None,
    budget_seconds: float | None = None,
    threads: int = 1,
) -> OracleResult:
    """Exact maximum edge count over tree-avoiding graphs on ``p`` vertices.

    Requires ``p >= 1``.  When the tree has more vertices than the host, the
    complete graph is the (trivial) maximizer.  Budgets: ``budget_nodes``
    (default from ``TURAN_BUDGET_NODES`` or 10**8 per search/worker) and
    ``budget_seconds`` (default 60).
    """
    if p < 1:
        raise ValueError(f"ex_bruteforce requires p >= 1 (got p={p})")
    if threads < 1:
        raise ValueError(f"threads must be >= 1 (got {threads})")
    t = realize(f)
    if t.n == 1:
        raise ValueError("the one-vertex tree is contained in every non-empty host")

    started = time.monotonic()
    if t.n > p:
        return OracleResult(
            p=p,
            value=comb(p, 2),
            exact=True,
            witness=SimpleGraph.complete(p),
            nodes=0,
            elapsed=time.monotonic() - started,
            threads=threads,
        )

    nodes_budget = _resolve_budget_nodes(budget_nodes)
    seconds = DEFAULT_BUDGET_SECONDS if budget_seconds is None else budget_seconds
    deadline = started + seconds
    contexts = edge_anchored_contexts(t)

    if threads == 1:
        bf = _BruteForce(p, contexts, t.n, nodes_budget, deadline)
        exact = True
        try:
            bf.dfs(0)
        except BudgetExceeded:
            exact = False
        value = max(bf.best, 0)
        rows = bf.best_rows if bf.best_rows is not None else [0] * p
        return OracleResult(
            p=p,
            value=value,
            exact=exact,
            witness=SimpleGraph(p, list(rows)),
            nodes=bf.nodes,
            elapsed=time.monotonic() - started,
            threads=1,
        )

    # Parallel: enumerate a deterministic frontier, then fan out.
    n_slots = p * (p - 1) // 2
    depth = min(n_slots, (threads - 1).bit_length() + 3)
    gen = _BruteForce(p, contexts, t.n, nodes_budget, deadline)
    gen.stop = depth
    gen.collect = []
    gen_exact = True
    try:
        gen.dfs(0)
    except BudgetExceeded:
        gen_exact = False
    if not gen_exact or depth == n_slots:
        # Tiny instance (the frontier depth covers every slot, so the
        # generator already exhausted the space) or the budget died during
        # frontier generation: the generator's incumbent is the result.
        value = max(gen.best, 0)
        rows = gen.best_rows if gen.best_rows is not None else [0] * p
        return OracleResult(
            p=p,
            value=value,
            exact=gen_exact,
            witness=SimpleGraph(p, list(rows)),
            nodes=gen.nodes,
            elapsed=time.monotonic() - started,
            threads=threads,
        )
    states = [(tag, st) for tag, st in enumerate(gen.collect)]

    batches: list[list] = [[] for _ in range(threads)]
    for tag, st in states:
        batches[tag % threads].append((tag, st))
    tree_edges = list(t.edges())
    jobs = [
        (p, tree_edges, batch, depth, nodes_budget, deadline)
        for batch in batches
        if batch
    ]

    results = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for res in pool.map(_worker_run, jobs):
            results.append(res)

    best, best_rows, best_tag = -1, None, -1
    total_nodes = gen.nodes
    exact = True
    for w_best, w_rows, w_nodes, w_tag, w_exact in results:
        total_nodes += w_nodes
        exact = exact and w_exact
        if w_best > best or (w_best == best and 0 <= w_tag < best_tag):
            best, best_rows, best_tag = w_best, w_rows, w_tag
    value = max(best, 0)
    rows = best_rows if best_rows is not None else [0] * p
    return OracleResult(
        p=p,
        value=value,
        exact=exact,
        witness=SimpleGraph(p, list(rows)),
        nodes=total_nodes,
        elapsed=time.monotonic() - started,
        threads=threads,
    )


def verify_formula(
    f: TreeFamily,
    p_values: list[int],
    *,
    budget_nodes: int | None = None,
    budget_seconds: float | None = None,
    threads: int = 1,
) -> dict:
    """Compare the closed form against the oracle on each ``p``; JSON-ready."""
    rows = []
    all_equal = True
    for p in p_values:
        res = ex_bruteforce(
            p,
            f,
            budget_nodes=budget_nodes,
            budget_seconds=budget_seconds,
            threads=threads,
        )
        formula = extremal_value(f, p).value
        equal = res.exact and res.value == formula
        all_equal = all_equal and equal
        rows.append(
            {
                "p": p,
                "oracle": res.value,
                "formula": formula,
                "equal": equal,
                "exact": res.exact,
                "nodes": res.nodes,
            }
        )
    return {"rows": rows, "all_equal": all_equal}
