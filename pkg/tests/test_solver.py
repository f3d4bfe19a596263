import pytest

import oracles
from intervalcolor.coloring import is_interval, is_proper
from intervalcolor.errors import EmptyGraph, Inconclusive, NotRegular
from intervalcolor.multigraph import build, complete, cycle, line_graph, path
from intervalcolor.oracle import interval_colorings, oracle_colorable
from intervalcolor.solver import (
    Reason,
    chromatic_index,
    find_interval_coloring,
    is_interval_colorable,
    optimal_proper_coloring,
    parity_precheck,
    search_order,
    theorem1_necessary_check,
    theorem1_regular_iff_check,
)


def test_parity_precheck(named):
    verdict = parity_precheck(named["C3"])
    assert verdict is not None and verdict.reason is Reason.PARITY_THEOREM
    assert not verdict.colorable
    assert parity_precheck(named["K5"]) is None
    assert parity_precheck(named["C4"]) is None
    # odd edge count but not Eulerian
    assert parity_precheck(named["P4"]) is None


def test_find_interval_coloring_c4(named):
    w = find_interval_coloring(named["C4"], 2)
    assert w is not None and w.t == 2 and is_interval(named["C4"], w)
    assert w.colors in ((1, 2, 1, 2), (2, 1, 2, 1))


@pytest.mark.parametrize("t", [2, 3])
def test_triangle_has_no_interval_coloring(named, t):
    # frozen from oracles.interval_colorings(3, C3, t) == []
    assert find_interval_coloring(named["C3"], t) is None


@pytest.mark.parametrize("t", range(4, 11))
def test_k5_has_no_interval_coloring(named, t):
    assert find_interval_coloring(named["K5"], t) is None


def test_is_interval_colorable_examples(named):
    v = is_interval_colorable(named["C4"])
    assert v.colorable and v.witness.t == 2
    v = is_interval_colorable(named["C5"])
    assert v.reason is Reason.PARITY_THEOREM
    v = is_interval_colorable(named["K5"])
    assert not v.colorable and v.reason is Reason.EXHAUSTED_SEARCH and v.nodes_explored > 0


def test_precheck_bypass_agrees(named):
    for name in ("C3", "C5", "C7"):
        v = is_interval_colorable(named[name], use_precheck=False)
        assert v.reason is Reason.EXHAUSTED_SEARCH


def test_empty_graph_rejected():
    G = build(2, [])
    with pytest.raises(EmptyGraph):
        is_interval_colorable(G)
    with pytest.raises(EmptyGraph):
        find_interval_coloring(G, 1)
    with pytest.raises(EmptyGraph):
        chromatic_index(G)


def test_chromatic_index(named):
    assert chromatic_index(named["C4"]) == 2
    assert chromatic_index(named["K4"]) == 3  # oracles.chromatic_index -> 3
    assert chromatic_index(named["C5"]) == 3  # odd cycles are class 2
    assert chromatic_index(named["K5"]) == 5  # oracles.chromatic_index -> 5
    assert chromatic_index(line_graph(named["K4"])) == 4
    assert chromatic_index(named["digon"]) == 2
    # three parallel edges between two vertices plus a pendant
    assert chromatic_index(build(3, [(0, 1)] * 3 + [(1, 2)])) == 4


@pytest.mark.parametrize("name", ["C3", "C5", "K4", "P4", "K13", "digon"])
def test_chromatic_index_matches_brute_force(named, name):
    G = named[name]
    w = optimal_proper_coloring(G)
    assert is_proper(G, w)
    assert w.t == oracles.chromatic_index(G.vertex_count, list(G.edges))


def test_theorem1_checks(named):
    assert theorem1_necessary_check(named["C4"])
    assert theorem1_necessary_check(named["K5"])
    assert theorem1_regular_iff_check(named["K4"])
    assert theorem1_regular_iff_check(named["K5"])
    assert theorem1_regular_iff_check(named["C3"])
    with pytest.raises(NotRegular):
        theorem1_regular_iff_check(named["P3"])


def test_budget_yields_inconclusive_not_a_verdict(named):
    with pytest.raises(Inconclusive) as info:
        is_interval_colorable(named["K5"], budget=100)
    assert info.value.nodes > 100
    # a generous budget gives the real answer
    assert not is_interval_colorable(named["K5"], budget=10**6).colorable


def test_witnesses_are_deterministic(named):
    G = line_graph(named["K4"])
    first = is_interval_colorable(G).witness
    assert all(is_interval_colorable(G).witness == first for _ in range(3))


def test_search_order_keeps_explored_part_connected():
    G = build(6, [(4, 5), (0, 1), (2, 3), (1, 2), (3, 4), (0, 5)])
    order = search_order(G)
    assert sorted(order) == list(range(6))
    touched = set(G.edges[order[0]])
    for e in order[1:]:
        assert touched.intersection(G.edges[e])
        touched.update(G.edges[e])


@pytest.mark.parametrize(
    "G",
    [
        path(4),
        cycle(4),
        cycle(5),
        complete(4),
        build(3, [(0, 1), (0, 1), (1, 2)]),
        build(4, [(0, 1), (0, 2), (0, 3), (1, 2)]),
        build(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ],
    ids=["P4", "C4", "C5", "K4", "digon+pendant", "paw", "diamond"],
)
def test_solver_and_both_oracles_agree(G):
    expected = oracles.interval_colorable(G.vertex_count, list(G.edges))
    assert oracle_colorable(G) == expected
    assert is_interval_colorable(G, use_precheck=False).colorable == expected


def test_vectorized_oracle_lists_same_colorings_as_itertools(named):
    for name in ("C4", "K4", "P4", "digon"):
        G = named[name]
        for t in range(1, G.edge_count + 1):
            ours = {tuple(int(x) for x in row) for row in interval_colorings(G, t)}
            assert ours == set(oracles.interval_colorings(G.vertex_count, list(G.edges), t))
