import pytest
from hypothesis import given
from hypothesis import strategies as st

from spiderkeep.errors import EmptyGraph, IdOutOfRange, OddCycle, SelfLoop
from spiderkeep.graph import (
    LEFT,
    RIGHT,
    build_graph,
    complete_bipartite,
    components,
    cycle,
    delete_vertices,
    induced_subgraph,
    min_degree,
    path,
    two_color,
)

from oracles import brute_components
from strategies import graphs


def test_build_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.edge_count == 1
    assert g.adj == ((1,), (0,))


def test_build_collapses_duplicates():
    assert build_graph(4, [(0, 1), (1, 0)]).edge_count == 1


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoop):
        build_graph(3, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(IdOutOfRange):
        build_graph(2, [(0, 2)])


def test_cycle_minus_vertex_is_path():
    g = delete_vertices(cycle(6), [0])
    assert g.same_structure(path(5))
    assert g.labels == (1, 2, 3, 4, 5)


def test_complete_bipartite_minus_side():
    g = delete_vertices(complete_bipartite(3, 3), [0, 1, 2])
    assert g.n == 3 and g.edge_count == 0
    assert g.labels == (3, 4, 5)


def test_delete_nothing_is_identity():
    g = cycle(6)
    assert delete_vertices(g, []) == g


def test_delete_out_of_range():
    with pytest.raises(IdOutOfRange):
        delete_vertices(cycle(4), [7])


@pytest.mark.parametrize("g, expected", [(complete_bipartite(3, 3), 3), (cycle(6), 2), (complete_bipartite(1, 5), 1)])
def test_min_degree(g, expected):
    assert min_degree(g) == expected


def test_min_degree_empty():
    with pytest.raises(EmptyGraph):
        min_degree(build_graph(0, []))


def test_two_color_even_cycle():
    bp = two_color(cycle(6))
    assert bp.left == (0, 2, 4)
    assert bp.right == (1, 3, 5)


def test_two_color_odd_cycle_witness():
    with pytest.raises(OddCycle) as info:
        two_color(cycle(5))
    cyc = info.value.cycle
    assert len(cyc) % 2 == 1
    g = cycle(5)
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_two_color_edgeless_all_left():
    assert two_color(build_graph(3, [])).side == (LEFT, LEFT, LEFT)


def test_components_examples():
    assert components(complete_bipartite(3, 3)) == [(0, 1, 2, 3, 4, 5)]
    assert components(delete_vertices(complete_bipartite(3, 3), [0, 1, 2])) == [(0,), (1,), (2,)]
    p3 = delete_vertices(path(3), [1])
    assert [p3.original(c) for c in components(p3)] == [(0,), (2,)]


def test_induced_examples():
    assert induced_subgraph(cycle(6), [2, 3, 4]).same_structure(path(3))
    assert induced_subgraph(cycle(6), [4]).n == 1
    assert induced_subgraph(cycle(6), []).n == 0


@given(graphs(), st.data())
def test_delete_matches_induced_complement(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    a = delete_vertices(g, s)
    b = induced_subgraph(g, [v for v in range(g.n) if v not in s])
    assert a.same_structure(b) and a.labels == b.labels


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count
    for u, v in g.edges():
        assert g.has_edge(v, u)


@given(graphs())
def test_two_color_sound(g):
    try:
        bp = two_color(g)
    except OddCycle as exc:
        cyc = exc.cycle
        assert len(cyc) % 2 == 1
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        return
    assert all(bp.side[u] != bp.side[v] for u, v in g.edges())
    for comp in components(g):
        assert bp.side[comp[0]] == LEFT
    assert set(bp.side) <= {LEFT, RIGHT}


@given(graphs())
def test_components_partition(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    expected = {frozenset(c) for c in brute_components([set(nb) for nb in g.adj], range(g.n))}
    assert {frozenset(c) for c in comps} == expected
