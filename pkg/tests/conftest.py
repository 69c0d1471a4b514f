from __future__ import annotations

import pytest
from hypothesis import strategies as st

from domchrom.generators import orient, sequence_to_edges
from domchrom.trees import BaseTree, OrientedTree


@st.composite
def base_trees(draw, min_n: int = 1, max_n: int = 9) -> BaseTree:
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return BaseTree(n, tuple((i, i + 1) for i in range(n - 1)))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return BaseTree(n, sequence_to_edges(seq, n))


@st.composite
def oriented_trees(draw, min_n: int = 1, max_n: int = 9) -> OrientedTree:
    base = draw(base_trees(min_n, max_n))
    mask = draw(st.integers(0, (1 << len(base.edges)) - 1)) if base.edges else 0
    return orient(base, mask)


@pytest.fixture(scope="session")
def small_corpus() -> list[OrientedTree]:
    """Every orientation of every free tree with up to 6 vertices."""
    from domchrom.generators import free_trees, orientations

    corpus = []
    for n in range(1, 7):
        for base in free_trees(n):
            corpus.extend(orientations(base))
    return corpus
