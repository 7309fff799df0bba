"""Property-style coverage of the structural laws the solvers must respect."""

import random

from hypothesis import given, settings, strategies as st

from robusta import (Graph, classical_parameter, complete, cycle,
                     disjoint_union, erdos_renyi, is_quasi_unicyclic,
                     is_removable, lex_product, line_graph, parse_graph,
                     robust_chromatic, robust_parameter, union_graphs,
                     walecki_cycles, write_dimacs)


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


@st.composite
def graph_with_edge_subset(draw, max_n):
    G = draw(small_graphs(max_n=max_n))
    edges = G.sorted_edges()
    mask = draw(st.integers(min_value=0, max_value=(1 << len(edges)) - 1))
    F = [edges[i] for i in range(len(edges)) if (mask >> i) & 1]
    return G, F


@given(small_graphs())
@settings(max_examples=80, deadline=None)
def test_roundtrip_dimacs(G):
    back, _ = parse_graph(write_dimacs(G), "dimacs")
    assert back == G


@given(graph_with_edge_subset(max_n=8))
@settings(max_examples=100, deadline=None)
def test_removable_iff_pseudoforest(case):
    G, F = case
    assert is_removable(F, G, 1)[0] == is_quasi_unicyclic(Graph(G.n, F))


@given(graph_with_edge_subset(max_n=8), st.integers(min_value=1, max_value=3))
@settings(max_examples=60, deadline=None)
def test_hakimi_density_equivalence(case, s):
    """Removable at budget s iff every vertex subset induces at most s|U|
    of the candidate edges (checked exhaustively)."""
    import itertools
    G, F = case
    H = Graph(G.n, F)
    dense_ok = all(H.induced_edge_count(U) <= s * k
                   for k in range(1, G.n + 1)
                   for U in itertools.combinations(range(G.n), k))
    assert is_removable(F, G, s)[0] == dense_ok


@given(small_graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_chi1_le_chi(G):
    assert robust_chromatic(G).value <= classical_parameter(G, "chi").value


def test_monotonicity_under_edge_deletion():
    rng = random.Random(5)
    for trial in range(200):
        G = erdos_renyi(4 + trial % 5, 0.55, trial)
        if G.m == 0:
            continue
        edges = G.sorted_edges()
        e = edges[rng.randrange(len(edges))]
        H = Graph(G.n, G.edges - {e})
        assert robust_parameter(H, "omega", 1).value <= robust_parameter(G, "omega", 1).value
        assert robust_chromatic(H).value <= robust_chromatic(G).value
        assert robust_parameter(G, "alpha", 1).value <= robust_parameter(H, "alpha", 1).value
        assert robust_parameter(G, "theta", 1).value <= robust_parameter(H, "theta", 1).value


def test_disjoint_union_laws():
    for seed in range(25):
        parts = [erdos_renyi(3 + (seed + i) % 3, 0.6, seed * 10 + i)
                 for i in range(2 + seed % 2)]
        G = disjoint_union(parts)
        if G.n > 12:
            continue
        assert robust_chromatic(G).value == max(
            robust_chromatic(p).value for p in parts)
        assert robust_parameter(G, "omega", 1).value == max(
            robust_parameter(p, "omega", 1).value for p in parts)
        assert robust_parameter(G, "alpha", 1).value == sum(
            robust_parameter(p, "alpha", 1).value for p in parts)
        assert robust_parameter(G, "theta", 1).value == sum(
            robust_parameter(p, "theta", 1).value for p in parts)


def test_union_bound_submultiplicative():
    for seed in range(20):
        n = 5 + seed % 4
        G1 = erdos_renyi(n, 0.4, seed * 2)
        G2 = erdos_renyi(n, 0.4, seed * 2 + 1)
        U = union_graphs([G1, G2])
        bound = min(
            classical_parameter(G1, "chi").value * robust_chromatic(G2).value,
            robust_chromatic(G1).value * classical_parameter(G2, "chi").value)
        assert robust_chromatic(U).value <= bound


def test_k_union_bound_and_walecki_witness():
    for k in (2, 3):
        for seed in range(6):
            n = 6
            parts = [erdos_renyi(n, 0.3, seed * 5 + i) for i in range(k)]
            U = union_graphs(parts)
            prod = 1
            for p in parts:
                prod *= max(robust_chromatic(p).value, 1)
            assert robust_chromatic(U).value <= (2 * k + 1) * prod
    for k in range(1, 5):
        cycles = walecki_cycles(k)
        assert all(robust_chromatic(c).value == 1 for c in cycles)
        assert robust_chromatic(union_graphs(cycles)).value == -(-(2 * k + 1) // 3)


def test_lexicographic_bound():
    cases = [(complete(2), cycle(4)), (cycle(4), complete(3)),
             (complete(3), complete(4)), (Graph(2, [(0, 1)]), Graph(5))]
    for G, H in cases:
        P = lex_product(G, H)
        if P.n > 14:
            continue
        bound = classical_parameter(G, "chi").value * robust_chromatic(H).value
        assert robust_chromatic(P).value <= bound


def test_line_graph_counterexample():
    lg, _ = line_graph(complete(4))
    assert robust_chromatic(lg).value == 2
    assert robust_parameter(complete(4), "chi_prime", 1).value == 1


def test_chromatic_index_bounds():
    for seed in range(40):
        G = erdos_renyi(4 + seed % 5, 0.5, seed)
        delta = G.max_degree()
        if delta <= 1:
            continue
        v1 = robust_parameter(G, "chi_prime", 1).value
        assert v1 <= classical_parameter(G, "chi_prime").value - 2
        assert G.min_degree() - 2 <= v1 <= delta - 1
    assert robust_parameter(complete(5), "chi_prime", 1).value == complete(5).max_degree() - 1


def test_trees_have_chi_prime1_zero():
    from robusta import path, star
    for tree in (path(5), star(7), Graph(5, [(0, 1), (0, 2), (2, 3), (2, 4)])):
        assert robust_parameter(tree, "chi_prime", 1).value == 0


def test_arboricity_sandwich():
    for seed in range(30):
        G = erdos_renyi(4 + seed % 5, 0.5, seed)
        a = classical_parameter(G, "arboricity").value
        chi1 = robust_chromatic(G).value
        assert -(-a // 2) <= chi1 <= a


def test_theta_sandwich_isolate_free():
    for seed in range(30):
        G = erdos_renyi(4 + seed % 5, 0.6, seed)
        if any(G.degree(v) == 0 for v in range(G.n)):
            support = [v for v in range(G.n) if G.degree(v) > 0]
            if not support:
                continue
            G, _ = G.induced_subgraph(support)
        theta = classical_parameter(G, "theta").value
        theta1 = robust_parameter(G, "theta", 1).value
        assert theta <= theta1 <= 3 * theta
