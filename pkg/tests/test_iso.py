import random

import pytest

from antipodes import (Graph, SizeCapError, build_family, complete_graph,
                       cycle_graph, find_isomorphism, is_isomorphic,
                       mycielski, verify_isomorphism)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.make(10, outer + inner + spokes)


def permuted(g: Graph, seed: int) -> tuple[Graph, list[int]]:
    rng = random.Random(seed)
    perm = list(range(g.order))
    rng.shuffle(perm)
    edges = [(perm[a], perm[b]) for a, b in g.edges]
    return Graph.make(g.order, edges), perm


def test_cycle_vs_mycielski():
    assert is_isomorphic(cycle_graph(5), mycielski(complete_graph(2), 2))
    assert not is_isomorphic(cycle_graph(5), cycle_graph(6))


def test_same_counts_not_isomorphic():
    # C6 and two triangles: same order and size, different structure
    two_triangles = Graph.make(6, [(0, 1), (1, 2), (0, 2),
                                   (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle_graph(6), two_triangles)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_recovers_random_permutation(seed):
    g = petersen()
    h, _ = permuted(g, seed)
    witness = find_isomorphism(g, h)
    assert witness is not None
    assert verify_isomorphism(g, h, witness)


def test_witness_verifies_on_family_members():
    g = build_family([2, 3])
    h, _ = permuted(g, 99)
    witness = find_isomorphism(g, h)
    assert witness is not None and verify_isomorphism(g, h, witness)


def test_equivalence_relation_on_fixture_set():
    fixtures = [cycle_graph(5), cycle_graph(6), petersen(),
                build_family([2, 2]), complete_graph(4)]
    for g in fixtures:
        assert is_isomorphic(g, g)  # reflexive
    for g in fixtures:
        for h in fixtures:
            assert is_isomorphic(g, h) == is_isomorphic(h, g)  # symmetric


def test_order_cap():
    big = cycle_graph(250)
    with pytest.raises(SizeCapError):
        is_isomorphic(big, big)
    assert is_isomorphic(big, big, cap=300)
