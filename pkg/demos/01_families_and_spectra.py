#!/usr/bin/env python3
"""Tour of the extremal families and their spectral fingerprints.

Builds the L/N/barL/barN/B families and the two special 4+4 bipartite
graphs, then checks their closed-form spectral values against the numeric
eigensolver and walks through the comparison-lemma orderings.
"""

import math

from spectralham import (
    FamilySpec,
    bound_report,
    complement,
    construct,
    graph6_encode,
    q_radius,
    quasi_complement,
    spectral_radius,
)

print("=" * 72)
print("Extremal families at (n, k) = (10, 2)")
print("=" * 72)
for fam in ("L", "N", "barL", "barN"):
    g = construct(FamilySpec(fam, n=10, k=2))
    print(
        f"  {fam:>5}_10^2: e = {g.edge_count:>2}, "
        f"rho = {spectral_radius(g).value:.6f}, q = {q_radius(g).value:.6f}, "
        f"graph6 = {graph6_encode(g)}"
    )

b = construct(FamilySpec("B", n=6, k=2))
print(f"\n  B_6^2 (balanced bipartite, order 12): e = {b.edge_count} "
      f"= n(n-k)+k^2 = {6 * 4 + 4}")
qc = quasi_complement(b)
print(f"  its quasi-complement: rho = {spectral_radius(qc).value:.6f} "
      f"(= sqrt(k(n-k)) = {math.sqrt(8):.6f}), q = {q_radius(qc).value:.6f} (= n = 6)")

print("\n" + "=" * 72)
print("Closed forms vs the eigensolver")
print("=" * 72)
rows = [
    ("rho(K_9)", spectral_radius(construct(FamilySpec("complete", n=9))).value, 8),
    ("q(K_9)", q_radius(construct(FamilySpec("complete", n=9))).value, 16),
    ("rho(K_{1,9})", spectral_radius(construct(FamilySpec("complete_bipartite", n=1, k=9))).value, 3),
    ("q(K_{4,5})", q_radius(construct(FamilySpec("complete_bipartite", n=4, k=5))).value, 9),
    ("rho(K_2 v 3K_1)", spectral_radius(construct(FamilySpec("complete_split", n=7, k=2))).value, 3),
]
for label, got, want in rows:
    print(f"  {label:<18} numeric {got:.12f}   closed form {want}")

print("\n" + "=" * 72)
print("Comparison-lemma orderings at n = 12")
print("=" * 72)
n = 12
for k in (2, 3, 4, 5):
    ln = construct(FamilySpec("L", n=n, k=k))
    nn = construct(FamilySpec("N", n=n, k=k))
    print(
        f"  k={k}: rho(N) = {spectral_radius(nn).value:.6f} > "
        f"rho(L) = {spectral_radius(ln).value:.6f} > n-k-1 = {n - k - 1}"
    )
    cn = complement(nn)
    print(
        f"        rho(complement N) = {spectral_radius(cn).value:.6f} >= "
        f"sqrt(k(n-k-1)) = {math.sqrt(k * (n - k - 1)):.6f}"
    )

print("\n" + "=" * 72)
print("Bound report for N_12^3")
print("=" * 72)
g = construct(FamilySpec("N", n=12, k=3))
for rec in bound_report(g, k=3).records:
    if rec.applicable:
        print(f"  {rec.bound_id:<22} {rec.kind:<5} bound {rec.bound_value:10.6f} "
              f"slack {rec.slack:+.3e}")
    else:
        print(f"  {rec.bound_id:<22} inapplicable")
