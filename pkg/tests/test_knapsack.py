"""Knapsack primitives against enumeration, plus the exact ratio order."""

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsack import (Item, ProfitTable, ValidationError, knapsack_exact,
                       knapsack_fptas, ratio_fptas, ratio_key, subset_sum_max)
from helpers import best_ratio_subset, ratio_meets


def items_of(*pairs):
    return [Item(i, w, p) for i, (w, p) in enumerate(pairs)]


def enumerate_best(items, capacity):
    """(profit, weight) of the exact optimum by full enumeration."""
    best = (0, 0)
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            w = sum(it.weight for it in combo)
            p = sum(it.profit for it in combo)
            if w <= capacity and (p, -w) > (best[0], -best[1]):
                best = (p, w)
    return best


class TestRatioKey:
    def test_conventions(self):
        assert ratio_key(5, 0) > ratio_key(100, 1)      # zero weight on top
        assert ratio_key(5, 0) == ratio_key(3, 0)       # one infinite class
        assert ratio_key(0, 0) > ratio_key(0, 3)        # (0,0) above (0,w>0)
        assert ratio_key(1, 10) > ratio_key(0, 0)
        assert ratio_key(10, 1) > ratio_key(10, 2)

    def test_cross_multiplication(self):
        assert ratio_key(3, 7) < ratio_key(4, 9)        # 27 < 28
        assert ratio_key(2, 4) == ratio_key(3, 6)


class TestKnapsackExact:
    def test_simple_choice(self):
        subset, profit = knapsack_exact(items_of((1, 5), (1, 3)), 1)
        assert subset == (0,) and profit == 5

    def test_zero_capacity(self):
        subset, profit = knapsack_exact(items_of((1, 5), (2, 3)), 0)
        assert subset == () and profit == 0

    def test_two_small_beat_one_large(self):
        # all 8 subsets enumerated by hand: {(2,3),(2,3)} wins with 6
        subset, profit = knapsack_exact(items_of((3, 4), (2, 3), (2, 3)), 4)
        assert profit == 6 and subset == (1, 2)

    def test_rejects_profit_overflow(self):
        with pytest.raises(ValidationError, match="table bound"):
            knapsack_exact([Item(0, 1, 1 << 40)], 1)

    def test_matches_enumeration(self):
        rng = random.Random(2024)
        for seed in range(220):
            n = rng.randint(0, 12)
            items = items_of(*((rng.randint(0, 6), rng.randint(0, 6))
                               for _ in range(n)))
            cap = rng.randint(0, 12)
            subset, profit = knapsack_exact(items, cap)
            expect_p, expect_w = enumerate_best(items, cap)
            assert profit == expect_p
            got_w = sum(items[i].weight for i in subset)
            assert got_w == expect_w
            assert sum(items[i].profit for i in subset) == profit


class TestKnapsackFptas:
    def test_exact_when_scaling_is_injective(self):
        # (eps/n) * P <= 1 clamps the divisor, so the DP stays exact.
        items = items_of((2, 3), (3, 4), (4, 5))
        _, profit = knapsack_fptas(items, 6, 0.3)
        assert profit == knapsack_exact(items, 6)[1]

    def test_all_zero_profit(self):
        assert knapsack_fptas(items_of((1, 0), (2, 0)), 3, 0.5) == ((), 0)

    def test_bound_random(self):
        rng = random.Random(99)
        for _ in range(120):
            n = rng.randint(1, 10)
            items = items_of(*((rng.randint(0, 5), rng.randint(0, 8))
                               for _ in range(n)))
            cap = rng.randint(0, 10)
            _, opt = knapsack_exact(items, cap)
            subset, profit = knapsack_fptas(items, cap, 0.3)
            assert sum(items[i].weight for i in subset) <= cap
            assert Fraction(profit) >= Fraction(7, 10) * opt

    def test_bound_with_real_rounding(self):
        # Large profits force divisor > 1; the guarantee must still hold.
        # The reference optimum comes from enumeration (the DP table would
        # be pseudo-polynomial in these profits).
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(2, 8)
            items = items_of(*((rng.randint(0, 4), rng.randint(0, 10 ** 6))
                               for _ in range(n)))
            cap = rng.randint(0, 8)
            opt, _ = enumerate_best(items, cap)
            _, profit = knapsack_fptas(items, cap, 0.4)
            assert Fraction(profit) >= Fraction(6, 10) * opt

    def test_rejects_bad_epsilon(self):
        for eps in (0, 1, -0.5, 1.5):
            with pytest.raises(ValidationError):
                knapsack_fptas(items_of((1, 1)), 1, eps)


class TestRatioFptas:
    def test_single_item_beats_pairs(self):
        result = ratio_fptas(items_of((1, 10), (2, 10)), 3, 0.3)
        assert result == ((0,), 10, 1)

    def test_zero_weight_class_is_selected(self):
        result = ratio_fptas(items_of((5, 1), (0, 5)), 5, 0.3)
        ids, profit, weight = result
        assert weight == 0 and profit > 0

    def test_none_when_nothing_fits(self):
        assert ratio_fptas(items_of((5, 1)), 4, 0.3) is None
        assert ratio_fptas([], 4, 0.3) is None

    def test_zero_profit_falls_back_to_min_weight_item(self):
        ids, profit, weight = ratio_fptas(items_of((7, 0), (5, 0), (6, 0)), 10, 0.3)
        assert ids == (1,) and profit == 0 and weight == 5

    def test_bound_random(self):
        rng = random.Random(4242)
        for _ in range(150):
            n = rng.randint(1, 12)
            raw = [(i, rng.randint(0, 5), rng.randint(0, 8)) for i in range(n)]
            items = [Item(*t) for t in raw]
            cap = rng.randint(0, 10)
            for eps in (0.1, 0.5):
                result = ratio_fptas(items, cap, eps)
                best = best_ratio_subset(raw, cap)
                if best is None:
                    assert result is None
                    continue
                ids, profit, weight = result
                assert weight <= cap and ids
                assert profit == sum(items[i].profit for i in ids)
                assert weight == sum(items[i].weight for i in ids)
                assert ratio_meets(profit, weight, best[0], best[1], eps)


class TestSubsetSum:
    def test_examples(self):
        assert subset_sum_max([3, 2, 2], 4) == ((1, 2), 4)
        assert subset_sum_max([3, 2, 2], 6) == ((0, 1), 5)
        assert subset_sum_max([3, 2, 2], 0) == ((), 0)

    def test_rejects_nonpositive_sizes(self):
        with pytest.raises(ValidationError):
            subset_sum_max([3, 0], 4)

    def test_matches_enumeration(self):
        rng = random.Random(321)
        for _ in range(200):
            n = rng.randint(0, 15)
            sizes = [rng.randint(1, 9) for _ in range(n)]
            k = rng.randint(0, 30)
            ids, total = subset_sum_max(sizes, k)
            assert sum(sizes[i] for i in ids) == total <= k
            best = max((sum(c) for r in range(n + 1)
                        for c in combinations(sizes, r) if sum(c) <= k), default=0)
            assert total == best


class TestProfitTable:
    @given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)),
                    max_size=7))
    @settings(max_examples=80, deadline=None)
    def test_witnesses_match_entries(self, pairs):
        items = items_of(*pairs)
        table = ProfitTable(items)
        assert table.min_weight(0) == 0
        by_id = {it.id: it for it in items}
        for p in range(table.level_count):
            w, w1 = table.min_weight(p), table.nonempty_min_weight(p)
            if w1 is not None:
                assert w is not None and w1 >= w
            if w is not None:
                ids = table.witness(p)
                assert sum(by_id[i].profit for i in ids) == p
                assert sum(by_id[i].weight for i in ids) == w
            if w1 is not None:
                ids = table.nonempty_witness(p)
                assert ids
                assert sum(by_id[i].profit for i in ids) == p
                assert sum(by_id[i].weight for i in ids) == w1

    def test_rejects_duplicate_ids(self):
        with pytest.raises(ValidationError):
            ProfitTable([Item(1, 1, 1), Item(1, 2, 2)])
