import itertools

import numpy as np
import pytest

from spectralham.families import FamilySpec, construct
from spectralham.graphs import (
    BipartiteGraph,
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
)
from spectralham.harness import graph_from_index
from spectralham.oracle import (
    clique_number,
    contains_biclique,
    is_hamiltonian,
    is_traceable,
    is_valid_cycle,
    is_valid_path,
)

from conftest import brute_clique_number, brute_hamiltonian, brute_traceable, gnp

PETERSEN = build_graph(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)


def test_hamiltonian_knowns():
    res = is_hamiltonian(cycle_graph(6))
    assert res.status == "yes" and is_valid_cycle(cycle_graph(6), res.witness)
    assert is_hamiltonian(construct(FamilySpec("N", n=7, k=2))).status == "no"
    assert is_hamiltonian(PETERSEN).status == "no"
    assert is_hamiltonian(complete_graph(2)).status == "no"
    assert is_hamiltonian(empty_graph(1)).status == "no"


def test_traceable_knowns():
    res = is_traceable(path_graph(5))
    assert res.status == "yes" and is_valid_path(path_graph(5), res.witness)
    barl = construct(FamilySpec("barL", n=6, k=0))
    assert is_traceable(barl).status == "no"
    barn = construct(FamilySpec("barN", n=8, k=1))
    assert is_traceable(barn).status == "no"
    assert is_traceable(empty_graph(1)).status == "yes"
    assert is_traceable(complete_graph(2)).status == "yes"
    assert is_traceable(empty_graph(2)).status == "no"
    with pytest.raises(ValueError):
        is_traceable(empty_graph(0))


def test_oracle_agrees_with_brute_force_exhaustive_n6():
    for n in range(1, 7):
        for idx in range(1 << (n * (n - 1) // 2)):
            g = graph_from_index(n, idx)
            res = is_hamiltonian(g)
            assert res.decided
            assert (res.status == "yes") == brute_hamiltonian(g), g.edges()
            if res.witness:
                assert is_valid_cycle(g, res.witness)


def test_oracle_agrees_with_brute_force_random():
    rng = np.random.default_rng(61)
    for _ in range(150):
        n = int(rng.integers(3, 8))
        g = gnp(n, float(rng.uniform(0.2, 0.9)), rng)
        assert (is_hamiltonian(g).status == "yes") == brute_hamiltonian(g)
        assert (is_traceable(g).status == "yes") == brute_traceable(g)
    # heavier n = 7 sample against the permanent-style scan
    for _ in range(1500):
        g = gnp(7, float(rng.uniform(0.15, 0.95)), rng)
        assert (is_hamiltonian(g).status == "yes") == brute_hamiltonian(g)


def test_dp_and_backtracking_agree():
    rng = np.random.default_rng(67)
    for _ in range(40):
        n = int(rng.integers(8, 14))
        g = gnp(n, float(rng.uniform(0.15, 0.5)), rng)
        a = is_hamiltonian(g, method="backtracking")
        b = is_hamiltonian(g, method="dp")
        if a.decided:
            assert a.status == b.status
        if b.witness:
            assert is_valid_cycle(g, b.witness)


def test_dp_fallback_on_structured_instances():
    g = construct(FamilySpec("N", n=14, k=2))
    res = is_hamiltonian(g)
    assert res.status == "no" and res.method == "subset_dp"


def test_budget_abort_is_explicit():
    g = cycle_graph(10)
    res = is_hamiltonian(g, budget=0)
    assert res.status == "aborted" and res.witness is None


def test_edge_addition_monotonicity():
    rng = np.random.default_rng(71)
    for _ in range(30):
        n = int(rng.integers(4, 9))
        g = gnp(n, 0.3, rng)
        was = is_hamiltonian(g).status == "yes"
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not g.has_edge(u, v)
        ]
        for u, v in non_edges:
            g = g.with_edge(u, v)
            now = is_hamiltonian(g).status == "yes"
            assert now or not was
            was = now


def test_dirac_consistency():
    rng = np.random.default_rng(73)
    count = 0
    while count < 60:
        n = int(rng.integers(3, 11))
        g = gnp(n, 0.7, rng)
        if 2 * min(g.degrees()) >= n:
            count += 1
            assert is_hamiltonian(g).status == "yes"


def test_moon_moser_delta_consistency():
    rng = np.random.default_rng(79)
    count = 0
    while count < 60:
        side = int(rng.integers(2, 8))
        rows = tuple(int(rng.integers(0, 1 << side)) for _ in range(side))
        b = BipartiteGraph(side, side, rows)
        if 2 * b.min_degree() > side:
            count += 1
            assert is_hamiltonian(b.to_graph()).status == "yes"


def test_clique_number():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(construct(FamilySpec("N", n=7, k=2))) == 5
    rng = np.random.default_rng(83)
    for _ in range(80):
        n = int(rng.integers(1, 9))
        g = gnp(n, float(rng.uniform(0.2, 0.9)), rng)
        assert clique_number(g) == brute_clique_number(g)


def _brute_biclique(b: BipartiteGraph, s: int, t: int) -> bool:
    if s == 0 or t == 0:
        return True
    for xs in itertools.combinations(range(b.nx), s):
        for ys in itertools.combinations(range(b.ny), t):
            if all(b.has_edge(i, j) for i in xs for j in ys):
                return True
    return False


def test_contains_biclique():
    k33 = complete_bipartite_graph(3, 3)
    assert contains_biclique(k33, 3, 3)
    b42 = construct(FamilySpec("B", n=4, k=2))
    assert contains_biclique(b42, 4, 2)
    assert not contains_biclique(b42, 3, 3)
    with pytest.raises(ValueError):
        contains_biclique(k33, 4, 1)
    rng = np.random.default_rng(89)
    for _ in range(120):
        a, b = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        rows = tuple(int(rng.integers(0, 1 << b)) for _ in range(a))
        bg = BipartiteGraph(a, b, rows)
        s, t = int(rng.integers(0, a + 1)), int(rng.integers(0, b + 1))
        assert contains_biclique(bg, s, t) == _brute_biclique(bg, s, t)


def test_witness_validators_reject_bad_orders():
    c6 = cycle_graph(6)
    assert not is_valid_cycle(c6, [0, 1, 2, 3, 4])  # wrong length
    assert not is_valid_cycle(c6, [0, 2, 4, 1, 3, 5])  # non-adjacent steps
    assert is_valid_path(path_graph(4), [0, 1, 2, 3])
    assert not is_valid_path(path_graph(4), [0, 2, 1, 3])
