"""Star partition and the two viable-star oracles against exhaustive search."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from graphsack import (Instance, ValidationError, best_profit_viable_star,
                       best_ratio_viable_star, is_1_neighbour_set, ratio_key,
                       star_partition, validate_star)
from helpers import random_instance, ratio_meets


def undirected(n, edges, weights=None, profits=None, k=10):
    return Instance(False, n, edges, weights or [1] * n, profits or [1] * n, k)


def all_stars(inst, capacity):
    """Every feasible star as (profit, weight, center, leaves)."""
    out = []
    for v in range(inst.n):
        if inst.degree(v) == 0:
            if inst.weights[v] <= capacity:
                out.append((inst.profits[v], inst.weights[v], v, ()))
            continue
        nbrs = inst.adj[v]
        for r in range(1, len(nbrs) + 1):
            for leaves in combinations(nbrs, r):
                w = inst.weights[v] + sum(inst.weights[u] for u in leaves)
                p = inst.profits[v] + sum(inst.profits[u] for u in leaves)
                if w <= capacity:
                    out.append((p, w, v, leaves))
    return out


class TestStarPartition:
    def test_path_of_three_has_unique_partition(self):
        stars = star_partition(undirected(3, [(0, 1), (1, 2)]))
        assert len(stars) == 1
        assert stars[0].center == 1 and stars[0].leaves == (0, 2)

    def test_isolated_vertex_is_singleton_star(self):
        stars = star_partition(undirected(1, []))
        assert len(stars) == 1 and stars[0].leaves == ()

    def test_path_of_four_splits_into_edges(self):
        stars = star_partition(undirected(4, [(0, 1), (1, 2), (2, 3)]))
        parts = sorted(star.vertices for star in stars)
        assert parts == [(0, 1), (2, 3)]

    def test_rejects_directed(self):
        with pytest.raises(ValidationError):
            star_partition(Instance(True, 2, [(0, 1)], [1, 1], [1, 1], 1))

    def test_partition_properties_random(self):
        rng = random.Random(71)
        for _ in range(150):
            n = rng.randint(0, 30)
            inst = random_instance(rng, n, False, rng.random() * 0.3, 4, 4, 5)
            stars = star_partition(inst)
            flat = [v for star in stars for v in star.vertices]
            assert sorted(flat) == list(range(n))
            assert len(set(flat)) == len(flat)
            for star in stars:
                validate_star(inst, star)
                assert is_1_neighbour_set(inst, star.vertices)


class TestBestProfitViableStar:
    def test_single_edge(self):
        inst = undirected(2, [(0, 1)], weights=[1, 1], profits=[5, 3])
        star = best_profit_viable_star(inst, 2, 0.1)
        assert star.vertices == (0, 1)

    def test_none_when_capacity_too_small(self):
        inst = undirected(2, [(0, 1)], weights=[1, 1], profits=[5, 3])
        assert best_profit_viable_star(inst, 1, 0.1) is None

    def test_selects_best_leaf(self):
        # center 0 (w1,p0), leaves 1 (w1,p10) and 2 (w1,p1); capacity 2
        inst = undirected(3, [(0, 1), (0, 2)], weights=[1, 1, 1],
                          profits=[0, 10, 1])
        star = best_profit_viable_star(inst, 2, 0.1)
        assert star.center in (0, 1) and set(star.vertices) == {0, 1}

    def test_bound_random(self):
        rng = random.Random(88)
        for _ in range(120):
            inst = random_instance(rng, rng.randint(1, 10), False,
                                   rng.random() * 0.4, 4, 6, 0)
            cap = rng.randint(0, 12)
            for eps in (0.1, 0.3):
                star = best_profit_viable_star(inst, cap, eps)
                stars = all_stars(inst, cap)
                if not stars:
                    assert star is None
                    continue
                best = max(p for p, _, _, _ in stars)
                got = inst.total_profit(star.vertices)
                assert inst.total_weight(star.vertices) <= cap
                validate_star(inst, star)
                eps_f = Fraction(str(eps))
                assert Fraction(got) >= (1 - eps_f) * best


class TestBestRatioViableStar:
    def test_single_edge(self):
        inst = undirected(2, [(0, 1)], weights=[1, 1], profits=[5, 3])
        star = best_ratio_viable_star(inst, 2, 0.1)
        assert star.vertices == (0, 1)

    def test_light_leaf_beats_heavy(self):
        # center 0 (w1,p0); leaves 1 (w1,p10), 2 (w9,p11); capacity 10:
        # {0,1} at 10/2 beats {0,2} at 11/10 and {0,1,2} at 21/11.
        inst = undirected(3, [(0, 1), (0, 2)], weights=[1, 1, 9],
                          profits=[0, 10, 11])
        star = best_ratio_viable_star(inst, 10, 0.1)
        assert set(star.vertices) == {0, 1}

    def test_zero_weight_pendant_pair_tops(self):
        inst = undirected(4, [(0, 1), (2, 3)], weights=[0, 0, 1, 1],
                          profits=[2, 1, 9, 9])
        star = best_ratio_viable_star(inst, 2, 0.1)
        assert inst.total_weight(star.vertices) == 0
        assert inst.total_profit(star.vertices) > 0

    def test_survives_coarse_scaling(self):
        # A heavy-profit leaf makes the shared scaled table blind to the
        # many small leaves that carry the best star; the per-leaf rescaled
        # tables must recover them.
        n = 13
        edges = [(0, v) for v in range(1, n)]
        weights = [10] + [1] * 10 + [1000, 0]
        profits = [0] + [10] * 10 + [1000, 0]
        inst = undirected(n, edges, weights=weights, profits=profits)
        star = best_ratio_viable_star(inst, 1020, 0.5)
        p = inst.total_profit(star.vertices)
        w = inst.total_weight(star.vertices)
        # best star: center 0 with the ten small leaves, ratio 100/20
        assert ratio_key(p, w) >= ratio_key(100, 20)

    def test_bound_random(self):
        rng = random.Random(4141)
        for _ in range(120):
            inst = random_instance(rng, rng.randint(1, 10), False,
                                   rng.random() * 0.4, 4, 6, 0)
            cap = rng.randint(0, 12)
            for eps in (0.1, 0.3):
                star = best_ratio_viable_star(inst, cap, eps)
                stars = all_stars(inst, cap)
                if not stars:
                    assert star is None
                    continue
                best = max(((p, w) for p, w, _, _ in stars),
                           key=lambda t: ratio_key(*t))
                got_p = inst.total_profit(star.vertices)
                got_w = inst.total_weight(star.vertices)
                validate_star(inst, star)
                assert got_w <= cap
                assert ratio_meets(got_p, got_w, best[0], best[1], eps)
