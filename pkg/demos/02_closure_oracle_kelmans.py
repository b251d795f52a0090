#!/usr/bin/env python3
"""Closures, the exact Hamilton oracle, and the Kelmans operation.

Shows the Bondy-Chvatal closure growing C_4 into K_4, the bipartite closure
completing C_6 into K_{3,3}, oracle witnesses, and a Kelmans chain turning
L_11^3 into a proper spanning subgraph of N_11^3 without ever decreasing the
spectral radii.
"""

from spectralham import (
    FamilySpec,
    bc_closure,
    bipartite_closure,
    bipartite_from_graph,
    construct,
    cycle_graph,
    graph6_encode,
    is_hamiltonian,
    is_traceable,
    kelmans,
    q_radius,
    spanning_subgraph_of,
    spectral_radius,
)

print("=" * 72)
print("Closures")
print("=" * 72)
c4 = cycle_graph(4)
closed, joins = bc_closure(c4)
print(f"  cl(C_4) adds {joins} edges -> {graph6_encode(closed)} (K_4)")
c6 = bipartite_from_graph(cycle_graph(6))
bclosed, joins = bipartite_closure(c6)
print(f"  cl_B(C_6 as 3+3) adds {joins} cross edges -> K_3,3 "
      f"({bclosed.edge_count} edges)")

print("\n" + "=" * 72)
print("Exact oracle with witnesses")
print("=" * 72)
res = is_hamiltonian(cycle_graph(8))
print(f"  C_8: {res.status}, cycle witness {list(res.witness)}")
n72 = construct(FamilySpec("N", n=7, k=2))
print(f"  N_7^2: {is_hamiltonian(n72).status} (sharpness graph of the edge bound)")
n142 = construct(FamilySpec("N", n=14, k=2))
res = is_hamiltonian(n142)
print(f"  N_14^2: {res.status} via {res.method} (subset DP takes over at this size)")
barn = construct(FamilySpec("barN", n=10, k=1))
print(f"  barN_10^1 traceable? {is_traceable(barn).status}")

print("\n" + "=" * 72)
print("Kelmans chain L_11^3 -> proper spanning subgraph of N_11^3")
print("=" * 72)
g = construct(FamilySpec("L", n=11, k=3))
print(f"  start: e = {g.edge_count}, rho = {spectral_radius(g).value:.6f}, "
      f"q = {q_radius(g).value:.6f}")
for i in (1, 2):
    g = kelmans(g, i, 3 + i)
    print(f"  after op {i}: e = {g.edge_count}, rho = {spectral_radius(g).value:.6f}, "
          f"q = {q_radius(g).value:.6f}")
n113 = construct(FamilySpec("N", n=11, k=3))
print(f"  contained in N_11^3 as a spanning subgraph: "
      f"{spanning_subgraph_of(g, 'N', 11, 3)} "
      f"(proper: {g.edge_count} < {n113.edge_count} edges)")
print(f"  target: rho(N_11^3) = {spectral_radius(n113).value:.6f}, "
      f"q = {q_radius(n113).value:.6f}")
