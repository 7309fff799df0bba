import time

import pytest

from robusta import (Graph, complete, cycle, dp_robust, erdos_renyi,
                     heuristic_decomposition, make_nice, path, read_td,
                     robust_chromatic, robust_parameter,
                     validate_decomposition, write_td)
from robusta.certify import validate_result
from robusta.exact import CapExceeded
from robusta.treewidth import TreeDecomposition, dp_all


def test_heuristic_widths():
    assert heuristic_decomposition(path(7)).width == 1
    assert heuristic_decomposition(cycle(4)).width == 2
    assert heuristic_decomposition(complete(5)).width == 4


def test_validate_decomposition_witnesses():
    G = cycle(4)
    T = heuristic_decomposition(G)
    ok, why = validate_decomposition(T, G)
    assert ok and why is None
    # coverage violation
    bad = TreeDecomposition([frozenset({0, 1})], [])
    ok, why = validate_decomposition(bad, G)
    assert not ok and "(i)" in why
    # edge containment violation
    bad2 = TreeDecomposition([frozenset({0, 1}), frozenset({2, 3})], [(0, 1)])
    ok, why = validate_decomposition(bad2, G)
    assert not ok and "(ii)" in why
    # connectivity violation
    bad3 = TreeDecomposition(
        [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3, 0})],
        [(0, 1), (1, 2)])
    bad3b = TreeDecomposition(
        [frozenset({0, 1}), frozenset({2, 3}), frozenset({0, 1, 2, 3})],
        [(0, 2), (1, 0)])
    ok, why = validate_decomposition(bad3b, G)
    assert not ok and "(iii)" in why


def test_make_nice_properties():
    for seed in range(100):
        n = 3 + seed % 8
        G = erdos_renyi(n, 2.5 / n, seed)
        T = heuristic_decomposition(G)
        nice = make_nice(T, G)
        ok, why = nice.validate(G)
        assert ok, why
        assert nice.width <= T.width
        assert len(nice.nodes) <= 4 * G.n
        kinds = {nd.kind for nd in nice.nodes}
        assert kinds <= {"leaf", "introduce", "forget", "join"}


def test_make_nice_single_bag():
    G = complete(3)
    nice = make_nice(TreeDecomposition([frozenset({0, 1, 2})], []), G)
    assert len(nice.nodes) <= 12
    ok, _ = nice.validate(G)
    assert ok


def test_make_nice_rejects_invalid():
    with pytest.raises(ValueError):
        make_nice(TreeDecomposition([frozenset({0})], []), complete(2))


def test_td_format_roundtrip():
    G = erdos_renyi(8, 0.4, 3)
    T = heuristic_decomposition(G)
    text = write_td(T, G.n)
    back = read_td(text)
    assert back.bags == T.bags
    assert sorted(back.tree_edges) == sorted(T.tree_edges)
    assert text.startswith("s td ")


def test_dp_examples():
    for tree in (path(5), path(9)):
        nice = make_nice(heuristic_decomposition(tree), tree)
        assert dp_robust(tree, nice, "chi1").value == 1
    K4 = complete(4)
    nice = make_nice(heuristic_decomposition(K4), K4)
    assert dp_robust(K4, nice, "chi1").value == 2
    assert dp_robust(K4, nice, "omega1").value == 2
    assert dp_robust(K4, nice, "alpha1").value == 3
    assert dp_robust(K4, nice, "theta1").value == 3


def test_dp_chi1_fixed_k_decision():
    K4 = complete(4)
    nice = make_nice(heuristic_decomposition(K4), K4)
    assert dp_robust(K4, nice, "chi1", k=2).value == 2
    with pytest.raises(ValueError):
        dp_robust(K4, nice, "chi1", k=1)


def test_dp_width_cap():
    K9 = complete(9)
    nice = make_nice(heuristic_decomposition(K9), K9)
    with pytest.raises(CapExceeded):
        dp_robust(K9, nice, "alpha1")


def test_dp_matches_exact_on_random_corpus():
    checked = 0
    seed = 0
    while checked < 30 and seed < 500:
        n = 4 + seed % 7
        G = erdos_renyi(n, 2.6 / n, seed)
        seed += 1
        T = heuristic_decomposition(G)
        if T.width > 3:
            continue
        nice = make_nice(T, G)
        expected = {
            "chi1": robust_chromatic(G).value,
            "omega1": robust_parameter(G, "omega", 1).value,
            "alpha1": robust_parameter(G, "alpha", 1).value,
            "theta1": robust_parameter(G, "theta", 1).value,
        }
        for which, want in expected.items():
            res = dp_robust(G, nice, which)
            assert res.value == want, (seed - 1, which)
            validate_result(G, {"parameter": res.parameter, "s": 1,
                                "value": res.value,
                                "certificate": res.certificate})
        checked += 1
    assert checked == 30


def test_dp_state_space_reported_and_bounded():
    G = erdos_renyi(9, 0.3, 5)
    nice = make_nice(heuristic_decomposition(G), G)
    res = dp_robust(G, nice, "alpha1")
    assert res.stats["max_rows"] >= 1
    w = nice.width + 1
    arcs_bound = (w + 1) ** w  # each bag vertex selects one of <= w partners
    assert res.stats["max_rows"] <= arcs_bound * 2 ** w * 2 ** w


def caterpillar(n):
    spine = list(range(0, n, 2))
    edges = list(zip(spine, spine[1:]))
    edges += [(leg - 1, leg) for leg in range(1, n, 2)]
    return Graph(n, edges)


def test_dp_runtime_roughly_linear():
    import statistics

    def runtime(n):
        G = caterpillar(n)
        nice = make_nice(heuristic_decomposition(G), G)
        samples = []
        for _ in range(3):
            t0 = time.perf_counter()
            dp_robust(G, nice, "alpha1")
            samples.append(time.perf_counter() - t0)
        return statistics.median(samples)

    t200, t400 = runtime(200), runtime(400)
    # coarse check, not a microbenchmark: doubling should stay near-linear
    assert t400 / t200 < 3.5, (t200, t400)


def test_dp_all_convenience():
    G = erdos_renyi(8, 0.3, 11)
    nice, results = dp_all(G)
    assert set(results) == {"alpha1", "omega1", "chi1", "theta1"}
