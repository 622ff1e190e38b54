"""Brute-force reference computations and random instance builders.

Everything here is deliberately independent of the package's own search
code: feasibility is re-derived from first principles on bitmasks, so these
functions can serve as oracles for the solvers *and* for `graphsack.oracle`.
"""

from __future__ import annotations

import random
from fractions import Fraction

from graphsack import Instance, ratio_key


def adjacency_masks(inst: Instance) -> list[int]:
    return [sum(1 << u for u in inst.adj[v]) for v in range(inst.n)]


def feasible_one_mask(inst: Instance, mask: int, adj=None) -> bool:
    adj = adj or adjacency_masks(inst)
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        if adj[v] and not adj[v] & mask:
            return False
        m &= m - 1
    return True


def feasible_all_mask(inst: Instance, mask: int, adj=None) -> bool:
    adj = adj or adjacency_masks(inst)
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        if adj[v] & ~mask:
            return False
        m &= m - 1
    return True


def _mask_totals(inst: Instance) -> tuple[list[int], list[int]]:
    """weights[mask], profits[mask] for all masks, by lowest-bit recurrence."""
    size = 1 << inst.n
    weights = [0] * size
    profits = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        weights[mask] = weights[rest] + inst.weights[low]
        profits[mask] = profits[rest] + inst.profits[low]
    return weights, profits


def brute_force_profit(inst: Instance, k: int, constraint: str) -> int:
    """Maximum feasible profit by full enumeration (constraint: one|all)."""
    check = feasible_one_mask if constraint == "one" else feasible_all_mask
    adj = adjacency_masks(inst)
    weights, profits = _mask_totals(inst)
    best = 0
    for mask in range(1 << inst.n):
        if weights[mask] <= k and profits[mask] > best and check(inst, mask, adj):
            best = profits[mask]
    return best


def profit_for_every_budget(inst: Instance, constraint: str) -> list[tuple[int, int]]:
    """Sorted (weight, best-profit-at-or-below) pairs over feasible sets.

    ``opt(k)`` is then the profit of the last pair with weight <= k.
    """
    check = feasible_one_mask if constraint == "one" else feasible_all_mask
    adj = adjacency_masks(inst)
    weights, profits = _mask_totals(inst)
    pairs = sorted((weights[m], profits[m]) for m in range(1 << inst.n)
                   if check(inst, m, adj))
    frontier: list[tuple[int, int]] = []
    best = -1
    for w, p in pairs:
        best = max(best, p)
        if frontier and frontier[-1][0] == w:
            frontier[-1] = (w, best)
        else:
            frontier.append((w, best))
    return frontier


def opt_at(frontier: list[tuple[int, int]], k: int) -> int:
    best = 0
    for w, p in frontier:
        if w > k:
            break
        best = p
    return best


def best_ratio_subset(inst_items, capacity: int):
    """Best non-empty subset ratio over explicit (id, weight, profit) items."""
    n = len(inst_items)
    best = None
    for mask in range(1, 1 << n):
        w = sum(it[1] for i, it in enumerate(inst_items) if mask >> i & 1)
        p = sum(it[2] for i, it in enumerate(inst_items) if mask >> i & 1)
        if w > capacity:
            continue
        if best is None or ratio_key(p, w) > ratio_key(*best):
            best = (p, w)
    return best


def ratio_meets(profit: int, weight: int, best_p: int, best_w: int, eps) -> bool:
    """result ratio >= (1 - eps) * best ratio, exactly."""
    eps = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
    if best_w == 0 and best_p > 0:
        return weight == 0 and profit > 0
    if best_p == 0:
        return True
    return Fraction(profit, weight) >= (1 - eps) * Fraction(best_p, best_w) \
        if weight > 0 else profit > 0


def random_instance(rng: random.Random, n: int, directed: bool,
                    edge_prob: float, w_max: int, p_max: int, k: int) -> Instance:
    edges = []
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for u, v in pairs:
        if rng.random() < edge_prob:
            edges.append((u, v))
    weights = [rng.randint(0, w_max) for _ in range(n)]
    profits = [rng.randint(0, p_max) for _ in range(n)]
    return Instance(directed, n, edges, weights, profits, k)


def random_uniform(rng: random.Random, n: int, directed: bool,
                   edge_prob: float, k: int) -> Instance:
    inst = random_instance(rng, n, directed, edge_prob, 1, 1, k)
    return Instance(directed, n, inst.edges, [1] * n, [1] * n, k)
