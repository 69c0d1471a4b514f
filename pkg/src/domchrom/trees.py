"""Immutable tree values: undirected base trees and their orientations.

Vertices are dense integers ``0..n-1``.  An :class:`OrientedTree` stores its
arc set in canonical sorted order, so structurally equal inputs compare and
hash equal.  Adjacency structures and bitmasks are materialized lazily and
cached; they never take part in equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal

from .errors import (
    BadVertexIdError,
    DuplicateOrAntiparallelArcError,
    NotALeafError,
    NotATreeError,
    NotRootedError,
    SelfArcError,
)

RootMode = Literal["out-tree", "in-tree"]


def _check_tree_shape(n: int, pairs: tuple[tuple[int, int], ...]) -> None:
    """Validate that `pairs` (ignoring direction) forms a tree on 0..n-1."""
    if n < 1:
        raise NotATreeError(f"vertex count must be >= 1, got {n}")
    if len(pairs) != n - 1:
        raise NotATreeError(f"a tree on {n} vertices needs {n - 1} arcs, got {len(pairs)}")
    seen: set[frozenset[int]] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertexIdError(f"arc ({u},{v}) uses a vertex outside 0..{n - 1}")
        if u == v:
            raise SelfArcError(f"self-arc at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateOrAntiparallelArcError(f"vertex pair {{{u},{v}}} appears twice")
        seen.add(key)
    # n-1 simple edges: connectivity implies acyclicity.
    if n > 1:
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            adj[u].append(v)
            adj[v].append(u)
        stack = [0]
        visited = bytearray(n)
        visited[0] = 1
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not visited[y]:
                    visited[y] = 1
                    count += 1
                    stack.append(y)
        if count != n:
            raise NotATreeError("underlying graph is disconnected (hence has a cycle)")


@dataclass(frozen=True)
class BaseTree:
    """An undirected labeled tree, the carrier that orientations are built on.

    ``edges`` are stored sorted with each pair as (min, max), giving every
    base tree one canonical representation and a stable edge order for
    orientation masks.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        normalized = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", normalized)
        _check_tree_shape(self.n, normalized)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        if self.n == 1:
            return (0,)
        return tuple(v for v in range(self.n) if self.degree(v) == 1)


@dataclass(frozen=True)
class OrientedTree:
    """An orientation of a finite tree: every edge carries one direction."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        normalized = tuple(sorted((int(u), int(v)) for u, v in self.arcs))
        object.__setattr__(self, "arcs", normalized)
        _check_tree_shape(self.n, normalized)

    # -- adjacency ---------------------------------------------------------

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(a)) for a in out)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(a)) for a in inn)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @cached_property
    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.in_degree(v) == 0)

    @cached_property
    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.out_degree(v) == 0)

    @cached_property
    def underlying_leaves(self) -> tuple[int, ...]:
        if self.n == 1:
            return (0,)
        return tuple(v for v in range(self.n) if self.degree(v) == 1)

    # -- bitmask views used by the solver and the verifier ------------------

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def underlying(self) -> BaseTree:
        return BaseTree(self.n, self.arcs)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex in/out degrees plus the derived source/sink/leaf sets."""

    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    underlying_leaves: tuple[int, ...]


@dataclass(frozen=True)
class RootClassification:
    """Roots of the tree when it is an out-tree and/or an in-tree.

    A directed path has both roots; most orientations have neither.
    """

    out_root: int | None
    in_root: int | None


def build_tree(n: int, arcs: Iterable[tuple[int, int]]) -> OrientedTree:
    """Validate and build an oriented tree from an arc list."""
    return OrientedTree(n, tuple(arcs))


def degree_profile(t: OrientedTree) -> DegreeProfile:
    return DegreeProfile(
        out_degrees=tuple(t.out_degree(v) for v in range(t.n)),
        in_degrees=tuple(t.in_degree(v) for v in range(t.n)),
        sources=t.sources,
        sinks=t.sinks,
        underlying_leaves=t.underlying_leaves,
    )


def reverse(t: OrientedTree) -> OrientedTree:
    """Flip the direction of every arc."""
    return OrientedTree(t.n, tuple((v, u) for u, v in t.arcs))


def classify_rooted(t: OrientedTree) -> RootClassification:
    """Detect whether the orientation is an out-tree and/or an in-tree.

    An out-tree has exactly one source and every other vertex with in-degree
    one; the in-tree condition is symmetric.
    """
    out_root: int | None = None
    in_root: int | None = None
    if len(t.sources) == 1:
        root = t.sources[0]
        if all(t.in_degree(v) == 1 for v in range(t.n) if v != root):
            out_root = root
    if len(t.sinks) == 1:
        root = t.sinks[0]
        if all(t.out_degree(v) == 1 for v in range(t.n) if v != root):
            in_root = root
    return RootClassification(out_root=out_root, in_root=in_root)


def directed_leaf_count(t: OrientedTree, mode: RootMode) -> int:
    """Number of directed leaves: sinks of an out-tree or sources of an in-tree.

    This is the leaf count entering the rooted-tree color formula; for a
    directed path it is 1 in either mode, not the 2 underlying leaves.
    """
    rc = classify_rooted(t)
    if mode == "out-tree":
        if rc.out_root is None:
            raise NotRootedError("tree is not an out-tree")
        return len(t.sinks)
    if mode == "in-tree":
        if rc.in_root is None:
            raise NotRootedError("tree is not an in-tree")
        return len(t.sources)
    raise ValueError(f"unknown mode {mode!r}")


def delete_leaf(t: OrientedTree, v: int) -> tuple[OrientedTree, dict[int, int]]:
    """Remove underlying leaf ``v``; relabel the rest to 0..n-2 preserving order.

    Returns the smaller tree together with the old->new vertex map.
    """
    if not (0 <= v < t.n) or t.degree(v) != 1:
        raise NotALeafError(f"vertex {v} is not an underlying leaf")
    mapping = {}
    nxt = 0
    for x in range(t.n):
        if x != v:
            mapping[x] = nxt
            nxt += 1
    arcs = tuple(
        (mapping[a], mapping[b]) for a, b in t.arcs if a != v and b != v
    )
    return OrientedTree(t.n - 1, arcs), mapping
