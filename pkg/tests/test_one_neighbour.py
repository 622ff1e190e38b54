"""Greedy, linear-exact, and PTAS solvers for the 1-neighbour constraint."""

import math
import random
from fractions import Fraction

import pytest

from graphsack import (Instance, UnsupportedVariantError, ValidationError,
                       gen_max_k_cover, greedy_1_neighbour, is_1_neighbour_set,
                       uniform_directed_1n_ptas, uniform_undirected_1n)
from helpers import (brute_force_profit, opt_at, profit_for_every_budget,
                     random_instance, random_uniform)


def undirected(n, edges, weights=None, profits=None, k=10):
    return Instance(False, n, edges, weights or [1] * n, profits or [1] * n, k)


class TestGreedy:
    def test_whole_path_is_taken(self):
        inst = undirected(3, [(0, 1), (1, 2)], profits=[1, 0, 1], k=3)
        sol = greedy_1_neighbour(inst, 3, 0.1)
        assert sol.chosen == (0, 1, 2)
        assert sol.total_profit == 2 == brute_force_profit(inst, 3, "one")

    def test_empty_graph(self):
        sol = greedy_1_neighbour(undirected(0, [], k=0), 0, 0.1)
        assert sol.chosen == () and sol.total_profit == 0

    def test_max_k_cover_instance(self):
        # two sets {0,1,2} and {2,3}; k=1 budget buys one set vertex, and the
        # greedy grabs the heavier cover's star: profit = max set size = 3.
        inst = gen_max_k_cover(4, [[0, 1, 2], [2, 3]], 1)
        sol = greedy_1_neighbour(inst, 1, 0.1)
        assert sol.total_profit == 3 == brute_force_profit(inst, 1, "one")

    def test_rejects_directed(self):
        with pytest.raises(UnsupportedVariantError):
            greedy_1_neighbour(Instance(True, 2, [(0, 1)], [1, 1], [1, 1], 1), 1, 0.1)

    def test_rejects_bad_epsilon(self):
        with pytest.raises(ValidationError):
            greedy_1_neighbour(undirected(1, []), 1, 0.0)

    def test_guarantee_and_feasibility_random(self):
        rng = random.Random(515)
        bound = Fraction(267, 1000)
        for _ in range(60):
            n = rng.randint(1, 10)
            inst = random_instance(rng, n, False, rng.random() * 0.5, 5, 5, 0)
            k = rng.randint(0, 20)
            sol = greedy_1_neighbour(inst, k, 0.1)
            assert is_1_neighbour_set(inst, sol.chosen)
            assert sol.total_weight <= k
            opt = brute_force_profit(inst, k, "one")
            assert Fraction(sol.total_profit) >= bound * opt

    def test_trace_structure(self):
        inst = undirected(4, [(0, 1), (2, 3)], profits=[3, 1, 2, 2], k=4)
        sol = greedy_1_neighbour(inst, 4, 0.1)
        seen = [v for it in sol.trace["iterations"] for v in it["vertices"]]
        assert len(seen) == len(set(seen))
        assert sol.trace["returned"] in ("greedy-set", "best-profit-star")


class TestUniformUndirected:
    def test_odd_budget_all_pairs(self):
        # components of sizes [2, 2] with k=3: optimum has size k-1 = 2
        inst = undirected(4, [(0, 1), (2, 3)], k=3)
        assert uniform_undirected_1n(inst, 3).size == 2

    def test_prefix_plus_bfs(self):
        inst = undirected(7, [(0, 1), (0, 2), (3, 4), (5, 6)], k=4)
        sol = uniform_undirected_1n(inst, 4)
        assert sol.size == 4 == brute_force_profit(inst, 4, "one")

    def test_budget_above_n_takes_all(self):
        inst = undirected(5, [(0, 1), (2, 3)], k=99)
        assert uniform_undirected_1n(inst, 99).size == 5

    def test_rejects_non_uniform(self):
        with pytest.raises(UnsupportedVariantError):
            uniform_undirected_1n(undirected(2, [(0, 1)], profits=[2, 1]), 1)

    def test_rejects_directed(self):
        with pytest.raises(UnsupportedVariantError):
            uniform_undirected_1n(Instance(True, 2, [(0, 1)], [1, 1], [1, 1], 1), 1)

    def test_exactness_random(self):
        rng = random.Random(8080)
        for _ in range(120):
            n = rng.randint(1, 11)
            inst = random_uniform(rng, n, False, rng.random() * 0.5, 0)
            frontier = profit_for_every_budget(inst, "one")
            for k in range(n + 2):
                sol = uniform_undirected_1n(inst, k)
                assert is_1_neighbour_set(inst, sol.chosen)
                assert sol.total_weight <= k
                assert sol.size == opt_at(frontier, k), (inst.edges, k)


class TestUniformDirectedPtas:
    def test_three_node_example(self):
        inst = Instance(True, 3, [(0, 1), (2, 1)], [1] * 3, [1] * 3, 2)
        sol = uniform_directed_1n_ptas(inst, 2, 0.5)
        assert sol.size == 2 == brute_force_profit(inst, 2, "one")

    def test_cycle_below_budget_is_skipped(self):
        cyc = Instance(True, 3, [(0, 1), (1, 2), (2, 0)], [1] * 3, [1] * 3, 2)
        assert uniform_directed_1n_ptas(cyc, 2, 0.9).size == 0

    def test_cycle_fits_exactly(self):
        cyc = Instance(True, 3, [(0, 1), (1, 2), (2, 0)], [1] * 3, [1] * 3, 3)
        assert uniform_directed_1n_ptas(cyc, 3, 0.9).chosen == (0, 1, 2)

    def test_fallback_regime_is_exact(self):
        inst = Instance(True, 4, [(0, 1), (1, 0), (2, 3), (3, 2)], [1] * 4,
                        [1] * 4, 3)
        sol = uniform_directed_1n_ptas(inst, 3, 0.25)  # eps <= 1/k
        assert sol.trace == {"fallback": "exhaustive"}
        assert sol.guarantee == "exact"
        assert sol.size == brute_force_profit(inst, 3, "one") == 2

    def test_rejects_undirected_and_non_uniform(self):
        with pytest.raises(UnsupportedVariantError):
            uniform_directed_1n_ptas(undirected(2, [(0, 1)]), 1, 0.5)
        bad = Instance(True, 2, [(0, 1)], [1, 2], [1, 1], 1)
        with pytest.raises(UnsupportedVariantError):
            uniform_directed_1n_ptas(bad, 1, 0.5)

    def test_guarantee_random(self):
        rng = random.Random(7117)
        for _ in range(80):
            n = rng.randint(1, 10)
            inst = random_uniform(rng, n, True, rng.random() * 0.5, 0)
            k = rng.randint(0, n + 2)
            frontier = profit_for_every_budget(inst, "one")
            opt = opt_at(frontier, k)
            for eps in (0.25, 0.5):
                sol = uniform_directed_1n_ptas(inst, k, eps)
                assert is_1_neighbour_set(inst, sol.chosen)
                assert sol.total_weight <= k
                need = math.ceil((1 - Fraction(str(eps))) * opt)
                assert sol.size >= need
                if sol.trace.get("complete"):
                    assert sol.size == opt, (inst.edges, k, eps)
