"""Colorings, dominator-coloring verification, and checkable certificates.

A coloring is valid when it is proper on the underlying tree and every
vertex with at least one out-neighbor contains some entire color class
inside its out-neighborhood.  Vertices with no out-neighbors satisfy the
requirement vacuously; certificates record this explicitly as a sink
exemption so the convention is visible in output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import SizeMismatchError
from .trees import OrientedTree

#: Witness marker for vertices with empty out-neighborhood.
SINK_EXEMPT = "sink_exempt"


@dataclass(frozen=True)
class Coloring:
    """A total vertex -> color assignment in canonical (first-use) form.

    Color identifiers are 1..k, every identifier is used, and identifiers
    appear in first-use order when scanning vertices 0..n-1.  Use
    :meth:`from_labels` to canonicalize arbitrary positive labels.
    """

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if not self.colors:
            raise ValueError("coloring must cover at least one vertex")
        top = 0
        for i, c in enumerate(self.colors):
            if c < 1 or c > top + 1:
                raise ValueError(
                    f"colors must be canonical (first-use order); offending vertex {i}"
                )
            top = max(top, c)

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Coloring":
        """Relabel arbitrary positive labels into canonical first-use order."""
        seen: dict[int, int] = {}
        out = []
        for lab in labels:
            if lab not in seen:
                seen[lab] = len(seen) + 1
            out.append(seen[lab])
        return cls(tuple(out))

    @property
    def k(self) -> int:
        return max(self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def class_of(self, color: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == color)


ColoringLike = Union[Coloring, Sequence[int]]


def canonicalize(c: ColoringLike) -> Coloring:
    """Return the canonical relabeling of ``c``; idempotent on colorings."""
    if isinstance(c, Coloring):
        return Coloring.from_labels(c.colors)
    return Coloring.from_labels(c)


@dataclass(frozen=True)
class ImproperEdge:
    """Arc whose endpoints share a color (propriety ignores direction)."""

    arc: tuple[int, int]


@dataclass(frozen=True)
class NoDominatedClass:
    """Vertex with out-neighbors but no color class fully inside them."""

    vertex: int


Violation = Union[ImproperEdge, NoDominatedClass]


@dataclass(frozen=True)
class DominatorCertificate:
    """A coloring plus one domination witness per vertex.

    ``witnesses[v]`` is either the color id of a class entirely contained in
    v's out-neighborhood, or :data:`SINK_EXEMPT` when v has no out-neighbors.
    Certificates carry everything needed to re-validate without the solver.
    """

    coloring: Coloring
    witnesses: tuple[int | str, ...]

    @property
    def k(self) -> int:
        return self.coloring.k


def _coerce(t: OrientedTree, c: ColoringLike) -> Coloring:
    col = canonicalize(c)
    if len(col) != t.n:
        raise SizeMismatchError(f"coloring covers {len(col)} vertices, tree has {t.n}")
    return col


def _class_masks(colors: Sequence[int], k: int) -> list[int]:
    masks = [0] * (k + 1)
    for v, c in enumerate(colors):
        masks[c] |= 1 << v
    return masks


def _check_colors(t: OrientedTree, colors: Sequence[int]) -> bool:
    """Fast validity test on raw color lists; the single filter used by the
    brute-force oracle."""
    for u, v in t.arcs:
        if colors[u] == colors[v]:
            return False
    k = max(colors)
    masks = _class_masks(colors, k)
    full = (1 << t.n) - 1
    for v in range(t.n):
        out = t.out_masks[v]
        if out == 0:
            continue
        outside = full ^ out
        for c in range(1, k + 1):
            if masks[c] and masks[c] & outside == 0:
                break
        else:
            return False
    return True


def is_proper(t: OrientedTree, c: ColoringLike) -> list[ImproperEdge]:
    """All arcs whose endpoints share a color, sorted; empty means proper."""
    col = _coerce(t, c)
    return [ImproperEdge(arc) for arc in t.arcs if col.colors[arc[0]] == col.colors[arc[1]]]


def dominated_classes(t: OrientedTree, c: ColoringLike, v: int) -> frozenset[int]:
    """Color ids whose entire class lies inside N+(v); empty for sinks."""
    col = _coerce(t, c)
    out = t.out_masks[v]
    if out == 0:
        return frozenset()
    full = (1 << t.n) - 1
    outside = full ^ out
    masks = _class_masks(col.colors, col.k)
    return frozenset(c_ for c_ in range(1, col.k + 1) if masks[c_] & outside == 0)


def verify_dominator(
    t: OrientedTree, c: ColoringLike
) -> DominatorCertificate | list[Violation]:
    """Check the full dominator-coloring condition.

    Returns a certificate on success (the witness for each non-sink vertex is
    the smallest dominated color id), otherwise the exhaustive sorted list of
    violations.
    """
    col = _coerce(t, c)
    violations: list[Violation] = list(is_proper(t, col))
    masks = _class_masks(col.colors, col.k)
    full = (1 << t.n) - 1
    witnesses: list[int | str] = []
    for v in range(t.n):
        out = t.out_masks[v]
        if out == 0:
            witnesses.append(SINK_EXEMPT)
            continue
        outside = full ^ out
        for c_ in range(1, col.k + 1):
            if masks[c_] & outside == 0:
                witnesses.append(c_)
                break
        else:
            violations.append(NoDominatedClass(v))
    if violations:
        return violations
    return DominatorCertificate(coloring=col, witnesses=tuple(witnesses))


def recheck_certificate(t: OrientedTree, cert: DominatorCertificate) -> bool:
    """Re-validate a certificate from scratch, using only the tree and the
    coloring it carries."""
    if len(cert.coloring) != t.n or len(cert.witnesses) != t.n:
        return False
    if is_proper(t, cert.coloring):
        return False
    masks = _class_masks(cert.coloring.colors, cert.coloring.k)
    full = (1 << t.n) - 1
    for v, w in enumerate(cert.witnesses):
        out = t.out_masks[v]
        if w == SINK_EXEMPT:
            if out != 0:
                return False
            continue
        if not isinstance(w, int) or not (1 <= w <= cert.coloring.k):
            return False
        if out == 0 or masks[w] == 0 or masks[w] & (full ^ out) != 0:
            return False
    return True
