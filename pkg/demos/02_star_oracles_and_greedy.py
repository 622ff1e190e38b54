#!/usr/bin/env python3
"""Stars, the two oracles, and the greedy 1-neighbour solver.

Run: python demos/02_star_oracles_and_greedy.py
"""

from graphsack import (Instance, best_profit_viable_star, best_ratio_viable_star,
                       exact_1n, greedy_1_neighbour, star_partition)

print("=" * 64)
print("1. Any undirected graph splits into feasible stars")
print("=" * 64)
print("A path of three vertices has exactly one feasible partition: the")
print("middle vertex as center, both endpoints as leaves.  Edges alone do")
print("not work - the leftover endpoint would be stranded.")
path3 = Instance(False, 3, [(0, 1), (1, 2)], [1] * 3, [1] * 3, 3)
for star in star_partition(path3):
    print(f"  center {star.center}, leaves {star.leaves}")

print()
print("=" * 64)
print("2. The oracles pick near-optimal feasible stars")
print("=" * 64)

# Center 0 is cheap glue; leaf 1 is efficient, leaf 2 is heavy.
fan = Instance(False, 3, [(0, 1), (0, 2)], weights=[1, 1, 9],
               profits=[0, 10, 11], budget=10)
print("fan: center 0 (w1,p0), leaves 1 (w1,p10) and 2 (w9,p11), budget 10")
best_p = best_profit_viable_star(fan, 10, eps=0.1)
best_r = best_ratio_viable_star(fan, 10, eps=0.1)
print("  best-profit star:", best_p.vertices,
      "profit", fan.total_profit(best_p.vertices))
print("  best-ratio star: ", best_r.vertices,
      "ratio", fan.total_profit(best_r.vertices), "/",
      fan.total_weight(best_r.vertices))

print()
print("=" * 64)
print("3. Greedy: stars vs boundary vertices, round by round")
print("=" * 64)
print("The solver alternates between the best-ratio star of what is left")
print("and the best single vertex that already touches the knapsack, then")
print("returns the better of the accumulated set and one best-profit star.")
print()

inst = Instance(False, 6, [(0, 1), (1, 2), (3, 4), (4, 5)],
                weights=[2, 1, 2, 1, 1, 1], profits=[4, 1, 3, 5, 0, 5],
                budget=6)
sol = greedy_1_neighbour(inst, k=6, eps=0.1)
for it in sol.trace["iterations"]:
    print(f"  round {it['index']}: took {it['kind']} {it['vertices']}")
print(f"  returned: {sol.trace['returned']}")
print(f"  chosen {sol.chosen}, profit {sol.total_profit}, "
      f"weight {sol.total_weight}")
print(f"  guarantee factor: {sol.guarantee}")
opt = exact_1n(inst, 6)
print(f"  exhaustive optimum for comparison: {opt.total_profit}")
