#!/usr/bin/env python3
"""The uniform-instance solvers: two exact algorithms and two PTASes.

Run: python demos/03_uniform_exact_and_ptas.py
"""

from graphsack import (Instance, exact_1n, exact_alln, uniform_directed_1n_ptas,
                       uniform_directed_alln_ptas, uniform_undirected_1n,
                       uniform_undirected_alln)

print("=" * 64)
print("1. Uniform undirected, one-neighbour: exact in linear time")
print("=" * 64)
print("Components are taken whole, largest first; the counting argument")
print("handles the leftover budget.  With components of size 2 and an odd")
print("budget, one unit of budget is provably wasted:")
pairs = Instance(False, 4, [(0, 1), (2, 3)], [1] * 4, [1] * 4, 3)
print("  two pairs, k=3 ->", uniform_undirected_1n(pairs, 3).chosen,
      "(size 2: no single vertex can stand alone)")

print()
print("=" * 64)
print("2. Uniform undirected, all-neighbour: subset sum over components")
print("=" * 64)
comps = Instance(False, 7, [(0, 1), (0, 2), (3, 4), (5, 6)], [1] * 7,
                 [1] * 7, 4)
print("  component sizes [3,2,2], k=4 ->",
      uniform_undirected_alln(comps, 4).chosen, "(2+2 fills the budget)")

print()
print("=" * 64)
print("3. Uniform directed, one-neighbour: a PTAS over smallest cycles")
print("=" * 64)
print("Every feasible set leans on cycles (or out-degree-0 vertices); per")
print("SCC only its smallest cycle matters.  The solver guesses the large")
print("SCCs, seeds budgets-worth of cheap sink cycles, then grows backwards.")
ring = Instance(True, 6, [(0, 1), (1, 2), (2, 0), (3, 0), (4, 3), (5, 4)],
                [1] * 6, [1] * 6, 5)
sol = uniform_directed_1n_ptas(ring, k=5, eps=0.5)
print(f"  3-cycle with a 3-chain hanging off it, k=5 -> {sol.chosen}")
print(f"  winning guess diagnostics: {sol.trace['winner']}")
print(f"  exhaustive optimum: {exact_1n(ring, 5).size}")

print()
print("=" * 64)
print("4. Uniform directed, all-neighbour: heavy closures plus light sinks")
print("=" * 64)
diamond = Instance(True, 4, [(0, 1), (0, 2), (1, 3), (2, 3)], [1] * 4,
                   [1] * 4, 3)
sol = uniform_directed_alln_ptas(diamond, k=3, eps=0.25)
print(f"  diamond DAG, k=3 -> {sol.chosen} "
      f"(vertex 0 would drag in all four)")
print(f"  exhaustive optimum: {exact_alln(diamond, 3).size}")
print()
print("This PTAS also accepts the weight==profit generalization:")
chain = Instance(True, 3, [(0, 1), (1, 2)], [5, 2, 1], [5, 2, 1], 3)
print("  chain with w=p=(5,2,1), k=3 ->",
      uniform_directed_alln_ptas(chain, 3, 0.5).chosen)
