from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from domchrom.errors import SpecInvalidError, TooLargeError
from domchrom.generators import (
    CaterpillarSpec,
    GsSpec,
    canonical_code,
    canonical_form,
    caterpillar,
    free_trees,
    gs,
    gs_base,
    labeled_trees,
    orient,
    orientations,
    path,
    random_tree,
    sequence_to_edges,
    star,
)
from domchrom.trees import BaseTree, OrientedTree, reverse

# expected output of the exhaustive labeled-tree oracle (see test below,
# which recomputes the small entries from scratch)
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)


class TestFamilies:
    def test_path_shape(self):
        base = path(4)
        assert base.n == 4 and base.edges == ((0, 1), (1, 2), (2, 3))

    def test_gs_out_is_arborescence(self):
        t = gs(GsSpec(8, 2, "out"))
        assert t.n == 17 and len(t.arcs) == 16
        assert len(t.sinks) == 8 and t.sources == (0,)

    def test_gs_m3_k1_is_out_star(self):
        t = gs(GsSpec(3, 1, "out"))
        assert t.arcs == ((0, 1), (0, 2), (0, 3))

    def test_gs_layered_odd_layers_are_sources(self):
        spec = GsSpec(2, 4, "layered")
        t = gs(spec)
        odd = {spec.layer_vertex(j, layer) for j in range(2) for layer in (1, 3)}
        assert set(t.sources) == odd

    def test_gs_size_formula(self):
        for m in range(1, 5):
            for k in range(1, 4):
                assert gs(GsSpec(m, k)).n == m * k + 1

    def test_caterpillar_small(self):
        spec = CaterpillarSpec(3, ((1, 1),), spine_mask=0, legs_mask=0)
        t = caterpillar(spec)
        assert t.n == 4
        assert t.arcs == ((0, 1), (1, 2), (1, 3))

    def test_caterpillar_rejects_endpoint_legs(self):
        with pytest.raises(SpecInvalidError):
            CaterpillarSpec(3, ((0, 1),))

    def test_caterpillar_rejects_oversized_mask(self):
        with pytest.raises(SpecInvalidError):
            CaterpillarSpec(3, (), spine_mask=4)


class TestOrientations:
    def test_p4_has_eight(self):
        assert len(list(orientations(path(4)))) == 8

    def test_star3_uniform_count(self):
        seen = list(orientations(star(3)))
        assert len(seen) == 8
        # exactly 2 orientations have all arcs agreeing at the center
        agreeing = [t for t in seen if t.out_degree(0) in (0, 3)]
        assert len(agreeing) == 2

    def test_single_vertex_one_orientation(self):
        assert list(orientations(path(1))) == [OrientedTree(1, ())]

    def test_no_duplicates(self):
        seen = list(orientations(path(5)))
        assert len(set(seen)) == len(seen) == 16

    def test_mask_complement_is_reversal(self):
        base = random_tree(7, seed=5)
        full = (1 << len(base.edges)) - 1
        for mask in range(full + 1):
            assert reverse(orient(base, mask)) == orient(base, mask ^ full)

    def test_too_large_guard(self):
        with pytest.raises(TooLargeError):
            next(orientations(path(27)))


class TestFreeTrees:
    def test_counts_match_reference(self):
        for n, expected in enumerate(FREE_TREE_COUNTS, start=1):
            if n <= 10:
                assert len(free_trees(n)) == expected

    def test_counts_match_networkx(self):
        for n in range(2, 11):
            assert len(free_trees(n)) == nx.number_of_nonisomorphic_trees(n)

    def test_n4_path_and_star(self):
        codes = {canonical_code(b) for b in free_trees(4)}
        assert codes == {canonical_code(path(4)), canonical_code(star(3))}

    def test_against_exhaustive_labeled_oracle(self):
        # independent generation route: decode every labeled tree, dedupe by
        # canonical code, and compare code sets per size
        for n in range(1, 8):
            oracle = {canonical_code(b) for b in labeled_trees(n)}
            ours = {canonical_code(b) for b in free_trees(n)}
            assert ours == oracle

    def test_pairwise_nonisomorphic_by_networkx(self):
        trees = free_trees(7)
        graphs = [nx.Graph(list(b.edges)) for b in trees]
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                assert not nx.is_isomorphic(graphs[i], graphs[j])

    def test_deterministic_order(self):
        assert [b.edges for b in free_trees(8)] == [b.edges for b in free_trees(8)]

    def test_guards(self):
        with pytest.raises(TooLargeError):
            free_trees(13)
        with pytest.raises(ValueError):
            free_trees(0)


class TestCanonicalization:
    @given(st.integers(3, 9), st.data())
    @settings(max_examples=60, deadline=None)
    def test_relabeling_preserves_code(self, n, data):
        seq = data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
        base = BaseTree(n, sequence_to_edges(seq, n))
        perm = data.draw(st.permutations(list(range(n))))
        shuffled = BaseTree(n, tuple((perm[u], perm[v]) for u, v in base.edges))
        assert canonical_code(shuffled) == canonical_code(base)
        assert canonical_form(shuffled) == canonical_form(base)


class TestRandomAndSequences:
    def test_small_cases(self):
        assert random_tree(1, 0).n == 1
        assert random_tree(2, 0).edges == ((0, 1),)

    def test_seed_determinism(self):
        assert random_tree(8, 42) == random_tree(8, 42)
        assert random_tree(8, 42) != random_tree(8, 43)

    def test_sequence_decode_known(self):
        # sequence (3, 3) on 4 vertices joins leaves 0,1,2 around vertex 3
        assert sequence_to_edges((3, 3), 4) == ((0, 3), (1, 3), (2, 3))

    @given(st.integers(1, 9), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_random_trees_always_valid(self, n, seed):
        base = random_tree(n, seed)
        assert base.n == n and len(base.edges) == n - 1
