"""Exact dominator-chromatic-number solver plus an independent brute oracle.

``solve_exact`` ascends k from a cheap lower bound, running one complete
backtracking round per k (see the kernel modules for the search contract);
the first success is the exact optimum.  ``brute_force_chi`` shares nothing
with that search: it enumerates canonical colorings outright and filters them
through the public verifier, which makes it a true cross-validation oracle
for small instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ._backend import get_kernel
from .coloring import Coloring, DominatorCertificate, _check_colors, verify_dominator
from .errors import BudgetExhaustedError, TooLargeError
from .trees import OrientedTree

_BRUTE_CAP = 10


@dataclass(frozen=True)
class SolveOptions:
    """Solver knobs; the defaults give a complete, deterministic search."""

    node_budget: int | None = None
    vertex_order: str = "degree"  # "degree" (descending, ties by index) or "index"


@dataclass(frozen=True)
class PruneCounts:
    proper: int
    domination: int


@dataclass(frozen=True)
class SearchStats:
    """Deterministic search counters; wall time is informational only."""

    nodes: int
    max_depth: int
    prunes: PruneCounts
    elapsed: float = field(compare=False, default=0.0)


@dataclass(frozen=True)
class SolveResult:
    chi: int
    certificate: DominatorCertificate
    stats: SearchStats


def static_order(t: OrientedTree, policy: str) -> tuple[int, ...]:
    if policy == "degree":
        return tuple(sorted(range(t.n), key=lambda v: (-t.degree(v), v)))
    if policy == "index":
        return tuple(range(t.n))
    raise ValueError(f"unknown vertex order policy {policy!r}")


def trivial_lower_bound(t: OrientedTree) -> int:
    """Cheap lower bound on the dominator chromatic number.

    Any vertex that is the sole out-neighbor of some other vertex must form a
    singleton color class in every valid coloring (its in-neighbor has no
    other class to dominate), and no source can be such a vertex, so one
    extra color is always needed on top of the forced singletons.
    """
    if t.n == 1:
        return 1
    forced = {t.out_neighbors[u][0] for u in range(t.n) if t.out_degree(u) == 1}
    return max(2, 1 + len(forced))


def greedy_upper_bound(t: OrientedTree) -> Coloring:
    """A valid dominator coloring built greedily; never fails, rarely optimal.

    Every non-sink vertex is pointed at its smallest out-neighbor; those
    targets get unique colors (singleton classes that satisfy domination),
    and the remaining vertices are properly colored from a fresh palette.
    """
    n = t.n
    designated = sorted({t.out_neighbors[u][0] for u in range(n) if t.out_degree(u) >= 1})
    labels = [0] * n
    nxt = 1
    for v in designated:
        labels[v] = nxt
        nxt += 1
    base = nxt
    for v in range(n):
        if labels[v]:
            continue
        taken = {labels[w] for w in t.neighbors[v] if labels[w]}
        c = base
        while c in taken:
            c += 1
        labels[v] = c
    coloring = Coloring.from_labels(labels)
    check = verify_dominator(t, coloring)
    if not isinstance(check, DominatorCertificate):  # pragma: no cover
        raise RuntimeError("greedy construction produced an invalid coloring")
    return coloring


def solve_exact(
    t: OrientedTree,
    opts: SolveOptions | None = None,
    *,
    kernel=None,
) -> SolveResult:
    """Exact minimum dominator coloring with certificate and search stats.

    Tests k = lower bound, lower bound + 1, ... with one complete
    backtracking round each; the first round that finds a coloring proves
    optimality because every smaller k was exhausted.  Deterministic for
    fixed input and options.  Raises :class:`BudgetExhaustedError` when a
    node budget is set and hit.
    """
    opts = opts or SolveOptions()
    kern = kernel if kernel is not None else get_kernel()
    order = static_order(t, opts.vertex_order)
    adj = t.adj_masks
    out = t.out_masks
    nonsink = tuple(v for v in range(t.n) if out[v] != 0)
    budget = -1 if opts.node_budget is None else int(opts.node_budget)

    nodes = 0
    max_depth = 0
    pp = 0
    pd = 0
    start = time.perf_counter()
    for k in range(trivial_lower_bound(t), t.n + 1):
        remaining = -1 if budget < 0 else budget - nodes
        status, colors, r_nodes, r_depth, r_pp, r_pd = kern.search_round(
            t.n, k, order, adj, out, nonsink, remaining
        )
        nodes += r_nodes
        max_depth = max(max_depth, r_depth)
        pp += r_pp
        pd += r_pd
        if status == 2:
            raise BudgetExhaustedError(
                f"node budget {budget} exhausted while testing k={k}", nodes
            )
        if status == 0:
            coloring = Coloring.from_labels(colors)
            if coloring.k != k:  # pragma: no cover - internal consistency
                raise RuntimeError("search round returned a wrong color count")
            cert = verify_dominator(t, coloring)
            if not isinstance(cert, DominatorCertificate):  # pragma: no cover
                raise RuntimeError("solver result failed re-verification")
            stats = SearchStats(
                nodes=nodes,
                max_depth=max_depth,
                prunes=PruneCounts(proper=pp, domination=pd),
                elapsed=time.perf_counter() - start,
            )
            return SolveResult(chi=k, certificate=cert, stats=stats)
    raise RuntimeError("unreachable: k = n always admits the all-distinct coloring")


def _growth_sequences(n: int, k: int):
    """All restricted-growth sequences of length n using exactly k colors."""
    seq = [0] * n

    def rec(i: int, used: int):
        if i == n:
            if used == k:
                yield seq
            return
        if used + (n - i) < k:  # cannot reach k distinct colors anymore
            return
        top = used + 1 if used < k else k
        for c in range(1, top + 1):
            seq[i] = c
            yield from rec(i + 1, used if c <= used else c)

    yield from rec(0, 0)


def brute_force_chi(t: OrientedTree) -> int:
    """Exact value by exhaustive enumeration; independent of ``solve_exact``.

    Enumerates canonical colorings (restricted-growth sequences) for k = 1,
    2, ... and accepts the first k admitting a coloring that the public
    verifier passes.  Capped at n <= 10.
    """
    if t.n > _BRUTE_CAP:
        raise TooLargeError(f"brute force capped at n <= {_BRUTE_CAP}, got {t.n}")
    for k in range(1, t.n + 1):
        for seq in _growth_sequences(t.n, k):
            if _check_colors(t, seq):
                return k
    raise RuntimeError("unreachable: k = n always validates")
