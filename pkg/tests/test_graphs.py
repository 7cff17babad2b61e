import pytest

from antipodes import (Apex, Base, ContractError, Graph, Level, build_family,
                       complement, complete_graph, cycle_graph, double_cover,
                       is_bipartite, is_isomorphic, mycielski, parse_name)


def test_cycle_and_complete_counts():
    c5 = cycle_graph(5)
    assert (c5.order, c5.size) == (5, 5)
    k2 = complete_graph(2)
    assert (k2.order, k2.size) == (2, 1)
    with pytest.raises(ContractError):
        cycle_graph(2)
    with pytest.raises(ContractError):
        complete_graph(0)


def test_complement_of_c7():
    c7bar = complement(cycle_graph(7))
    assert (c7bar.order, c7bar.size) == (7, 14)
    # complementing twice is the identity
    assert complement(c7bar) == cycle_graph(7)


def test_canonical_edge_order():
    g = Graph.make(4, [(3, 1), (1, 3), (2, 0)])
    assert g.edges == ((0, 2), (1, 3))
    with pytest.raises(ContractError):
        Graph.make(3, [(0, 0)])
    with pytest.raises(ContractError):
        Graph.make(3, [(0, 5)])


def test_mycielski_k2_is_c5():
    g = mycielski(complete_graph(2), 2)
    assert is_isomorphic(g, cycle_graph(5))


def test_mycielski_counts():
    for base in (cycle_graph(5), complete_graph(3), complement(cycle_graph(7))):
        for r in (1, 2, 3, 4):
            m = mycielski(base, r)
            assert m.order == r * base.order + 1
            assert m.size == base.size + 2 * base.size * (r - 1) + base.order


def test_mycielski_rejects_bad_r():
    with pytest.raises(ContractError):
        mycielski(complete_graph(2), 0)


def test_mycielski_r1_is_cone():
    base = cycle_graph(5)
    cone = mycielski(base, 1)
    assert cone.order == base.order + 1
    apex = base.order
    assert all((min(u, apex), max(u, apex)) in set(cone.edges)
               for u in range(base.order))


def test_mycielski_matches_classical_two_level_definition():
    # vertex set V x {0,1} + z with the textbook edge list, exactly
    base = cycle_graph(5)
    n = base.order
    expected = set()
    for u, v in base.edges:
        expected.add(tuple(sorted((u, v))))
        expected.add(tuple(sorted((u, n + v))))
        expected.add(tuple(sorted((v, n + u))))
    for u in range(n):
        expected.add((n + u, 2 * n))
    assert set(mycielski(base, 2).edges) == expected


def test_build_family():
    assert build_family([]) == complete_graph(2)
    assert is_isomorphic(build_family([2]), cycle_graph(5))
    fig1 = build_family([2, 3])
    assert fig1.order == 16
    grotzsch = build_family([2, 2])
    assert (grotzsch.order, grotzsch.size) == (11, 20)


def test_vertex_names_trace_iterations():
    g = build_family([2, 3])
    rendered = {str(name) for name in g.names}
    assert "z" in rendered
    assert "(0.0).0" in rendered
    assert "z.2" in rendered  # previous apex carried into a level
    # round-trip through the rendered grammar
    for name in g.names:
        parsed = parse_name(str(name))
        assert str(parsed) == str(name)
    assert parse_name("(u.0).2") == Level(Level(Base("u"), 0), 2)
    assert parse_name("z") == Apex(0)


def test_double_cover_small_cases():
    # K2 doubles to a perfect matching on four vertices
    dk2 = double_cover(complete_graph(2))
    assert (dk2.order, dk2.size) == (4, 2)
    assert dk2.degrees() == [1, 1, 1, 1]
    # odd cycles double to the doubled cycle
    assert is_isomorphic(double_cover(cycle_graph(5)), cycle_graph(10))
    assert is_isomorphic(double_cover(complete_graph(3)), cycle_graph(6))


def test_double_cover_always_bipartite():
    for g in (complete_graph(5), cycle_graph(7), build_family([2, 2]),
              complement(cycle_graph(7))):
        assert is_bipartite(double_cover(g))
