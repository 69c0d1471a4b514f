from __future__ import annotations

import pytest
from hypothesis import given, settings

from domchrom.coloring import DominatorCertificate, verify_dominator
from domchrom.errors import BudgetExhaustedError, TooLargeError
from domchrom.generators import free_trees, orient, orientations, path
from domchrom.solver import (
    SolveOptions,
    brute_force_chi,
    greedy_upper_bound,
    solve_exact,
    trivial_lower_bound,
)
from domchrom.trees import build_tree, delete_leaf

from conftest import oriented_trees


def directed_path(n):
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


class TestSolveExact:
    def test_directed_p5_needs_five(self):
        assert solve_exact(directed_path(5)).chi == 5

    def test_single_vertex(self):
        assert solve_exact(build_tree(1, [])).chi == 1

    def test_out_star_four_leaves(self):
        t = build_tree(5, [(0, i) for i in range(1, 5)])
        assert solve_exact(t).chi == 2

    def test_p6_orientation_minimum_is_three(self):
        chis = [solve_exact(t).chi for t in orientations(path(6))]
        assert min(chis) == 3

    def test_certificate_always_verifies(self, small_corpus):
        for t in small_corpus:
            res = solve_exact(t)
            assert isinstance(res.certificate, DominatorCertificate)
            out = verify_dominator(t, res.certificate.coloring)
            assert isinstance(out, DominatorCertificate)
            assert res.certificate.coloring.k == res.chi

    def test_determinism(self):
        t = orient(path(8), 0b0110101)
        a = solve_exact(t)
        b = solve_exact(t)
        assert a == b
        assert a.stats == b.stats

    def test_budget_exhaustion_raises(self):
        with pytest.raises(BudgetExhaustedError):
            solve_exact(directed_path(8), SolveOptions(node_budget=3))

    def test_vertex_order_policies_agree_on_chi(self, small_corpus):
        for t in small_corpus[::7]:
            a = solve_exact(t, SolveOptions(vertex_order="degree")).chi
            b = solve_exact(t, SolveOptions(vertex_order="index")).chi
            assert a == b


class TestBruteForce:
    def test_directed_p4(self):
        assert brute_force_chi(directed_path(4)) == 4

    def test_min_over_p4_orientations(self):
        assert min(brute_force_chi(t) for t in orientations(path(4))) == 3

    def test_min_over_p3_orientations(self):
        assert min(brute_force_chi(t) for t in orientations(path(3))) == 2

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            brute_force_chi(directed_path(11))

    def test_oracle_equivalence_small(self, small_corpus):
        for t in small_corpus:
            assert solve_exact(t).chi == brute_force_chi(t)


class TestBounds:
    def test_lower_bound_single_vertex(self):
        assert trivial_lower_bound(build_tree(1, [])) == 1

    def test_lower_bound_directed_path(self):
        assert trivial_lower_bound(directed_path(7)) == 7

    def test_lower_bound_out_star(self):
        t = build_tree(4, [(0, 1), (0, 2), (0, 3)])
        assert trivial_lower_bound(t) == 2

    def test_greedy_out_star_at_most_three(self):
        t = build_tree(6, [(0, i) for i in range(1, 6)])
        assert greedy_upper_bound(t).k <= 3

    def test_greedy_directed_p3_exact(self):
        assert greedy_upper_bound(directed_path(3)).k == 3

    @given(oriented_trees(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_sandwich(self, t):
        res = solve_exact(t)
        assert (
            trivial_lower_bound(t)
            <= res.chi
            <= greedy_upper_bound(t).k
            <= t.n
        )

    @given(oriented_trees(min_n=2, max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_leaf_deletion_monotone(self, t):
        chi = solve_exact(t).chi
        for v in t.underlying_leaves:
            sub, _ = delete_leaf(t, v)
            assert chi - solve_exact(sub).chi in (0, 1)


def test_rooted_examples_match_formula():
    # out-trees and in-trees solve to n - directed leaves + 1
    for n in range(1, 8):
        for base in free_trees(n):
            for root in range(n):
                from domchrom.generators import rooted_orientation

                t = rooted_orientation(base, root, "out")
                assert solve_exact(t).chi == t.n - len(t.sinks) + 1
