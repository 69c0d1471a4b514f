from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from domchrom.coloring import (
    Coloring,
    DominatorCertificate,
    ImproperEdge,
    NoDominatedClass,
    SINK_EXEMPT,
    canonicalize,
    dominated_classes,
    is_proper,
    recheck_certificate,
    verify_dominator,
)
from domchrom.errors import SizeMismatchError
from domchrom.trees import build_tree

from conftest import oriented_trees


def p2():
    return build_tree(2, [(0, 1)])


def p3_directed():
    return build_tree(3, [(0, 1), (1, 2)])


def in_star3():
    return build_tree(3, [(0, 1), (2, 1)])


class TestColoring:
    def test_canonical_accepted(self):
        c = Coloring((1, 2, 1))
        assert c.k == 2 and c.class_of(1) == (0, 2)

    def test_non_canonical_rejected(self):
        with pytest.raises(ValueError):
            Coloring((2, 1))

    def test_from_labels_canonicalizes(self):
        assert Coloring.from_labels((3, 1, 3)).colors == (1, 2, 1)

    def test_canonicalize_idempotent(self):
        c = canonicalize((1, 2, 1))
        assert canonicalize(c) == c

    def test_canonicalize_constant(self):
        assert canonicalize((2, 2, 2)).colors == (1, 1, 1)


class TestIsProper:
    def test_proper_p2(self):
        assert is_proper(p2(), (1, 2)) == []

    def test_improper_p2(self):
        assert is_proper(p2(), (1, 1)) == [ImproperEdge((0, 1))]

    def test_nonadjacent_share_ok(self):
        assert is_proper(in_star3(), (1, 2, 1)) == []

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            is_proper(p2(), (1,))


class TestDominatedClasses:
    def test_out_star_center(self):
        t = build_tree(4, [(0, 1), (0, 2), (0, 3)])
        assert dominated_classes(t, (1, 2, 2, 2), 0) == {2}

    def test_sink_dominates_nothing(self):
        assert dominated_classes(p3_directed(), (1, 2, 3), 2) == frozenset()

    def test_p3_middle(self):
        assert dominated_classes(p3_directed(), (1, 2, 3), 1) == {3}

    @given(oriented_trees(max_n=8), st.data())
    def test_subset_of_out_colors(self, t, data):
        labels = data.draw(
            st.lists(st.integers(1, t.n), min_size=t.n, max_size=t.n)
        )
        c = canonicalize(labels)
        for v in range(t.n):
            out_colors = {c.colors[w] for w in t.out_neighbors[v]}
            assert dominated_classes(t, c, v) <= out_colors


class TestVerifyDominator:
    def test_out_star_two_colors(self):
        t = build_tree(3, [(0, 1), (0, 2)])
        cert = verify_dominator(t, (1, 2, 2))
        assert isinstance(cert, DominatorCertificate)
        assert cert.k == 2
        assert cert.witnesses == (2, SINK_EXEMPT, SINK_EXEMPT)

    def test_p3_bad_coloring(self):
        out = verify_dominator(p3_directed(), (1, 2, 1))
        assert out == [NoDominatedClass(1)]

    def test_single_vertex_sink_exempt(self):
        t = build_tree(1, [])
        cert = verify_dominator(t, (1,))
        assert isinstance(cert, DominatorCertificate)
        assert cert.witnesses == (SINK_EXEMPT,)

    def test_reports_all_violations(self):
        t = p3_directed()
        out = verify_dominator(t, (1, 1, 1))
        assert out == [
            ImproperEdge((0, 1)),
            ImproperEdge((1, 2)),
            NoDominatedClass(0),
            NoDominatedClass(1),
        ]

    @given(oriented_trees(max_n=8), st.data())
    def test_color_permutation_invariance(self, t, data):
        labels = data.draw(
            st.lists(st.integers(1, t.n), min_size=t.n, max_size=t.n)
        )
        base = canonicalize(labels)
        perm = data.draw(st.permutations(list(range(1, base.k + 1))))
        permuted = [perm[c - 1] for c in base.colors]
        a = verify_dominator(t, base)
        b = verify_dominator(t, permuted)
        assert isinstance(a, DominatorCertificate) == isinstance(
            b, DominatorCertificate
        )

    @given(oriented_trees(max_n=8), st.data())
    def test_certificates_recheck_from_scratch(self, t, data):
        labels = data.draw(
            st.lists(st.integers(1, t.n), min_size=t.n, max_size=t.n)
        )
        out = verify_dominator(t, labels)
        if isinstance(out, DominatorCertificate):
            assert recheck_certificate(t, out)

    def test_recheck_rejects_tampered_witness(self):
        t = build_tree(3, [(0, 1), (0, 2)])
        cert = verify_dominator(t, (1, 2, 2))
        assert isinstance(cert, DominatorCertificate)
        bad = DominatorCertificate(cert.coloring, (1, SINK_EXEMPT, SINK_EXEMPT))
        assert not recheck_certificate(t, bad)

    def test_recheck_rejects_exemption_on_non_sink(self):
        t = p3_directed()
        cert = verify_dominator(t, (1, 2, 3))
        assert isinstance(cert, DominatorCertificate)
        bad = DominatorCertificate(
            cert.coloring, (SINK_EXEMPT, cert.witnesses[1], cert.witnesses[2])
        )
        assert not recheck_certificate(t, bad)
