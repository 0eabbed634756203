import itertools
import math

import numpy as np
import pytest

from tnspectrum import (
    build_graph,
    compare,
    edge_list,
    numeric_spectrum,
    permutation_parity,
    spectrum,
)


class TestBuildGraph:
    def test_k2(self):
        g = build_graph(2)
        assert g.order == 2
        assert int(g.adjacency.sum()) // 2 == 1

    def test_n3(self):
        g = build_graph(3)
        assert g.order == 6
        assert int(g.adjacency.sum()) // 2 == 9
        assert all(int(row.sum()) == 3 for row in g.adjacency)

    def test_n4(self):
        g = build_graph(4)
        assert g.order == 24
        assert int(g.adjacency.sum()) // 2 == 72
        assert all(int(row.sum()) == 6 for row in g.adjacency)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            build_graph(1)
        with pytest.raises(ValueError):
            build_graph(7)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_structural_invariants(self, n):
        g = build_graph(n)
        adj = g.adjacency
        assert g.order == math.factorial(n)
        assert np.array_equal(adj, adj.T)
        assert not adj.diagonal().any()
        degree = n * (n - 1) // 2
        assert (adj.sum(axis=1) == degree).all()
        assert int(adj.sum()) == math.factorial(n) * degree  # handshake

    @pytest.mark.parametrize("n", range(2, 6))
    def test_bipartite_by_parity(self, n):
        # every edge must join an even and an odd permutation, which rules out
        # odd cycles outright
        g = build_graph(n)
        perms = list(itertools.permutations(range(n)))
        colors = np.array([permutation_parity(p) for p in perms])
        rows, cols = np.nonzero(g.adjacency)
        assert (colors[rows] != colors[cols]).all()


class TestNumericSpectrum:
    def test_n2(self):
        values = numeric_spectrum(build_graph(2)).values
        assert values == pytest.approx((1.0, -1.0), abs=1e-9)

    def test_n3(self):
        values = numeric_spectrum(build_graph(3)).values
        assert [round(v) for v in values] == [3, 0, 0, 0, 0, -3]

    @pytest.mark.parametrize("n", range(2, 6))
    def test_descending_and_integral(self, n):
        ns = numeric_spectrum(build_graph(n))
        assert len(ns.values) == math.factorial(n)
        assert all(a >= b for a, b in zip(ns.values, ns.values[1:]))
        assert all(abs(v - round(v)) <= 1e-6 for v in ns.values)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_moment_sums(self, n):
        ns = numeric_spectrum(build_graph(n))
        fact = math.factorial(n)
        assert abs(sum(ns.values)) <= fact * 1e-6
        assert sum(v * v for v in ns.values) == pytest.approx(
            fact * n * (n - 1) // 2, abs=1e-4
        )


class TestCompare:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_agreement(self, n):
        report = compare(spectrum(n), numeric_spectrum(build_graph(n)), 1e-6)
        assert report.agreement
        assert report.max_deviation <= 1e-6
        assert report.discrepancies == ()

    def test_size_mismatch_raises(self):
        numeric = numeric_spectrum(build_graph(4))
        with pytest.raises(ValueError):
            compare(spectrum(3), numeric, 1e-6)

    def test_discrepancies_reported_not_thrown(self):
        from tnspectrum import NumericSpectrum

        # a hand-mangled multiset: one eigenvalue moved from bucket 0 to 3
        wrong = NumericSpectrum(values=(3.0, 3.0, 0.0, 0.0, 0.0, -3.0))
        report = compare(spectrum(3), wrong, 1e-6)
        assert not report.agreement
        assert (3, 1, 2) in report.discrepancies
        assert (0, 4, 3) in report.discrepancies

    def test_tolerance_violation_aborts(self):
        from tnspectrum import NumericSpectrum

        drifted = NumericSpectrum(values=(3.0, 0.4, 0.0, 0.0, 0.0, -3.4))
        with pytest.raises(ArithmeticError):
            compare(spectrum(3), drifted, 1e-6)


class TestEdgeList:
    @pytest.mark.parametrize("n", range(2, 5))
    def test_format_and_count(self, n):
        g = build_graph(n)
        edges = edge_list(g)
        assert len(edges) == math.factorial(n) * n * (n - 1) // 4
        assert all(0 <= u < v < g.order for u, v in edges)
        assert edges == sorted(edges)


class TestPermutationParity:
    def test_known_cases(self):
        assert permutation_parity((0, 1, 2)) == 1
        assert permutation_parity((1, 0, 2)) == -1
        assert permutation_parity((1, 2, 0)) == 1
        assert permutation_parity((3, 2, 0, 1)) == -1

    def test_transposition_flips_parity(self):
        for perm in itertools.permutations(range(4)):
            for i, j in itertools.combinations(range(4), 2):
                swapped = list(perm)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                assert permutation_parity(swapped) == -permutation_parity(perm)
