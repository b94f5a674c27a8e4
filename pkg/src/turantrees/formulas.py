"""Closed-form extremal edge counts for the tree families.

Every function returns exact integers.  Values are keyed by the host order
``p`` and the tree order ``n`` through the unique decomposition
``p = k(n-1) + r`` with ``k >= 1`` and ``0 <= r <= n-2``: extremal hosts are
built from complete blocks ``K_{n-1}`` plus a remainder part on ``n-1+r``
vertices, and every formula below is ``k * C(n-1,2) + C(r,2)`` plus a
case-dependent bonus.

The dispatch arms carry short stable case labels ("Thm4.1" ... "Thm4.5",
"Thm3.1/...", "Thm5.1/...", "L2.10/...") that downstream tooling matches on;
see each docstring for what the case actually is.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .trees import TreeFamily

__all__ = [
    "ResidueDecomposition",
    "ExtremalValue",
    "decompose",
    "ex_path",
    "ex_star",
    "generic_max_form",
    "ex_tpp",
    "ex_tppp",
    "ex_t3",
    "ex_t3_partial",
    "lower_bound",
    "upper_bound",
    "extremal_value",
]


@dataclass(frozen=True, slots=True)
class ResidueDecomposition:
    """``p = k * (n - 1) + r`` with ``k >= 1`` and ``0 <= r <= n - 2``."""

    p: int
    n: int
    k: int
    r: int


@dataclass(frozen=True, slots=True)
class ExtremalValue:
    """An exact extremal edge count together with the dispatch arm that
    produced it."""

    value: int
    branch: str


def decompose(p: int, n: int) -> ResidueDecomposition:
    """Split ``p = k(n-1) + r``.  Requires ``p >= n - 1 >= 2``."""
    if n - 1 < 2:
        raise ValueError(f"decompose requires n >= 3 (got n={n})")
    if p < n - 1:
        raise ValueError(f"decompose requires p >= n-1 (got p={p}, n={n})")
    k, r = divmod(p, n - 1)
    return ResidueDecomposition(p=p, n=n, k=k, r=r)


# ---------------------------------------------------------------- paths, stars

def ex_path(p: int, n: int) -> ExtremalValue:
    """Extremal edge count for hosts with no path on ``n`` vertices:
    ``k * C(n-1,2) + C(r,2)``, attained by ``k`` copies of K_{n-1} plus K_r.

    Requires ``n >= 3`` and ``p >= n - 1``.
    """
    if n < 3:
        raise ValueError(f"ex_path requires n >= 3 (got n={n})")
    if p < n - 1:
        raise ValueError(f"ex_path requires p >= n-1 (got p={p}, n={n})")
    d = decompose(p, n)
    return ExtremalValue(d.k * comb(n - 1, 2) + comb(d.r, 2), "path")


def ex_star(p: int, s: int) -> ExtremalValue:
    """Extremal edge count for hosts with no ``s``-leaf star:
    ``floor((s-1) p / 2)``, attained by a near-(s-1)-regular graph.

    Requires ``s >= 1`` and ``p >= s + 1``.
    """
    if s < 1:
        raise ValueError(f"ex_star requires s >= 1 (got s={s})")
    if p < s + 1:
        raise ValueError(f"ex_star requires p >= s+1 (got p={p}, s={s})")
    return ExtremalValue((s - 1) * p // 2, "star")


# ---------------------------------------------------------------- generic form

def _base(k: int, n: int, r: int) -> int:
    return k * comb(n - 1, 2) + comb(r, 2)


def _regular_arm(n: int, r: int) -> int:
    """Edge surplus of the near-(n-5)-regular remainder over the clique
    remainder: ``max(0, floor((r(n-4-r) - 3(n-1)) / 2))``."""
    return max(0, (r * (n - 4 - r) - 3 * (n - 1)) // 2)


def generic_max_form(p: int, n: int) -> ExtremalValue:
    """The two-arm maximum shared by the wide-middle residues of every family:
    blocks-plus-clique versus blocks-plus-near-regular remainder.

    Requires ``n >= 10`` and ``p >= n - 1``.
    """
    if n < 10:
        raise ValueError(f"generic_max_form requires n >= 10 (got n={n})")
    if p < n - 1:
        raise ValueError(f"generic_max_form requires p >= n-1 (got p={p}, n={n})")
    d = decompose(p, n)
    bonus = _regular_arm(n, d.r)
    arm = "regular-arm" if bonus > 0 else "clique-arm"
    return ExtremalValue(_base(d.k, n, d.r) + bonus, f"L2.10/{arm}")


# ---------------------------------------------------------------- tpp, tppp

def ex_tpp(p: int, n: int) -> ExtremalValue:
    """Extremal edge count with the ``tpp`` tree forbidden: the generic
    two-arm maximum, at every residue.

    Requires ``n >= 10`` and ``p >= n``.
    """
    if n < 10:
        raise ValueError(f"ex_tpp requires n >= 10 (got n={n})")
    if p < n:
        raise ValueError(f"ex_tpp requires p >= n (got p={p}, n={n})")
    inner = generic_max_form(p, n)
    return ExtremalValue(inner.value, "Thm3.1/" + inner.branch.split("/")[1])


def ex_tppp(p: int, n: int) -> ExtremalValue:
    """Extremal edge count with the ``tppp`` tree forbidden: identical values
    to ``ex_tpp``, via the same two-arm maximum.

    Requires ``n >= 10`` and ``p >= n``.
    """
    if n < 10:
        raise ValueError(f"ex_tppp requires n >= 10 (got n={n})")
    if p < n:
        raise ValueError(f"ex_tppp requires p >= n (got p={p}, n={n})")
    inner = generic_max_form(p, n)
    return ExtremalValue(inner.value, "Thm5.1/" + inner.branch.split("/")[1])


# ---------------------------------------------------------------- t3 dispatch

def _t3_special_residues(n: int) -> set[int]:
    return {0, 1, 2, n - 5, n - 4, n - 3, n - 2}


def ex_t3(p: int, n: int) -> ExtremalValue:
    """Extremal edge count with the ``t3`` tree forbidden.

    Requires ``n >= 15`` and ``p >= n``.  Dispatch over ``r``:

    * "Thm4.1"  -- ``r in {0, 1, 2, n-5, n-4, n-3, n-2}``: pure block value
      ``k C(n-1,2) + C(r,2)``.
    * "Thm4.2"  -- ``3 <= r <= n-9``: the generic two-arm maximum.
    * "Thm4.3"  -- ``r = n-6``: ``((n-2) p - 5(n-6)) / 2`` (equals the block
      value at this residue).
    * "Thm4.4"  -- ``r = n-8``: ``((n-2) p - 7n + 30) / 2 + max(n // 2, 13)``.
    * "Thm4.5"  -- ``r = n-7``: ``((n-2) p - 6(n-7)) / 2 +
      max((n - 37) // 4, 0)``.

    The five arms partition ``[0, n-2]`` exactly for every ``n >= 15``.
    """
    if n < 15:
        raise ValueError(f"ex_t3 requires n >= 15 (got n={n})")
    if p < n:
        raise ValueError(f"ex_t3 requires p >= n (got p={p}, n={n})")
    d = decompose(p, n)
    r = d.r
    if r in _t3_special_residues(n):
        return ExtremalValue(_base(d.k, n, r), "Thm4.1")
    if 3 <= r <= n - 9:
        bonus = _regular_arm(n, r)
        arm = "regular-arm" if bonus > 0 else "clique-arm"
        return ExtremalValue(_base(d.k, n, r) + bonus, f"Thm4.2/{arm}")
    if r == n - 6:
        num = (n - 2) * p - 5 * (n - 6)
        assert num % 2 == 0
        return ExtremalValue(num // 2, "Thm4.3")
    if r == n - 8:
        num = (n - 2) * p - 7 * n + 30
        assert num % 2 == 0
        return ExtremalValue(num // 2 + max(n // 2, 13), "Thm4.4")
    if r == n - 7:
        num = (n - 2) * p - 6 * (n - 7)
        assert num % 2 == 0
        return ExtremalValue(num // 2 + max((n - 37) // 4, 0), "Thm4.5")
    raise AssertionError(f"residue dispatch must be total: r={r}, n={n}")


def ex_t3_partial(p: int, n: int) -> ExtremalValue:
    """The ``t3`` arms whose individual case proofs already hold for
    ``10 <= n <= 14``: the special residues ("Thm4.1") and ``r = n-6``
    ("Thm4.3").  Other residues at these orders are open and raise.

    Requires ``n >= 10`` and ``p >= n``; delegates to :func:`ex_t3` once
    ``n >= 15``.
    """
    if n < 10:
        raise ValueError(f"ex_t3_partial requires n >= 10 (got n={n})")
    if p < n:
        raise ValueError(f"ex_t3_partial requires p >= n (got p={p}, n={n})")
    if n >= 15:
        return ex_t3(p, n)
    d = decompose(p, n)
    r = d.r
    if r in _t3_special_residues(n):
        return ExtremalValue(_base(d.k, n, r), "Thm4.1")
    if r == n - 6:
        num = (n - 2) * p - 5 * (n - 6)
        assert num % 2 == 0
        return ExtremalValue(num // 2, "Thm4.3")
    raise ValueError(
        f"residue r={r} is not covered for n={n} (open case below n=15)"
    )


# ---------------------------------------------------------------- bounds

def lower_bound(p: int, n: int) -> int:
    """Universal lower bound ``((n-2) p - r(n-1-r)) / 2`` (the block value),
    valid for all three families.  Requires ``n >= 10``, ``p >= n - 1``."""
    if n < 10:
        raise ValueError(f"lower_bound requires n >= 10 (got n={n})")
    d = decompose(p, n)
    num = (n - 2) * p - d.r * (n - 1 - d.r)
    assert num % 2 == 0
    return num // 2


def upper_bound(p: int, n: int) -> int:
    """Universal upper bound
    ``floor(((n-2) p - min(2(n-1+r), r(n-1-r))) / 2)`` for all three
    families.  Requires ``n >= 10``, ``p >= n - 1``."""
    if n < 10:
        raise ValueError(f"upper_bound requires n >= 10 (got n={n})")
    d = decompose(p, n)
    cut = min(2 * (n - 1 + d.r), d.r * (n - 1 - d.r))
    return ((n - 2) * p - cut) // 2


# ---------------------------------------------------------------- evaluator

def extremal_value(f: TreeFamily, p: int, partial: bool = False) -> ExtremalValue:
    """Family-level evaluator, defined for every host order ``p >= 0``.

    For ``p < n`` no host can contain the ``n``-vertex tree, so the complete
    graph is extremal and the value is ``C(p, 2)`` (branch "small-host").
    From ``p >= n`` on, the family's closed form applies.  ``partial=True``
    uses :func:`ex_t3_partial` for the ``t3`` family.

    Explicit trees have no closed form and raise ``ValueError``.
    """
    if p < 0:
        raise ValueError(f"extremal_value requires p >= 0 (got p={p})")
    if f.kind == "explicit":
        raise ValueError("no closed form for explicit trees; use the oracle")
    if p < f.n:
        return ExtremalValue(comb(p, 2), "small-host")
    if f.kind == "t3":
        return ex_t3_partial(p, f.n) if partial else ex_t3(p, f.n)
    if f.kind == "tpp":
        return ex_tpp(p, f.n)
    if f.kind == "tppp":
        return ex_tppp(p, f.n)
    if f.kind == "path":
        return ex_path(p, f.n)
    if f.kind == "star":
        assert f.s is not None
        return ex_star(p, f.s)
    raise ValueError(f"unknown tree family kind {f.kind!r}")
