import pytest

from antipodes import (ChromaticCertificate, Coloring, ContractError,
                       Inconclusive, SizeCapError, build_family, chi_exact,
                       complement, complete_graph, cycle_graph,
                       monochromatic_edges, mycielski)
from oracles import chi_by_backtracking, chi_by_product


def test_monochromatic_edges_on_c5():
    c5 = cycle_graph(5)
    assert monochromatic_edges(c5, Coloring((1, 2, 1, 2, 3), 3)) == []
    assert monochromatic_edges(c5, Coloring((1, 2, 1, 2, 1), 2)) == [(0, 4)]


def test_monochromatic_edges_all_equal():
    k3 = complete_graph(3)
    assert monochromatic_edges(k3, Coloring((1, 1, 1), 1)) == [(0, 1), (0, 2), (1, 2)]


def test_monochromatic_requires_total_coloring():
    with pytest.raises(ContractError):
        monochromatic_edges(cycle_graph(5), Coloring((1, 2, 1), 2))
    with pytest.raises(ContractError):
        Coloring((0, 1), 2)  # colours are 1-based


def check_certificate(g, cert):
    assert isinstance(cert, ChromaticCertificate)
    assert monochromatic_edges(g, cert.coloring) == []
    assert cert.coloring.palette == cert.chi
    assert len(set(cert.coloring.colors)) <= cert.chi


def test_chi_exact_known_values():
    cases = [
        (cycle_graph(6), 2),
        (cycle_graph(7), 3),
        (complete_graph(5), 5),
        (complement(cycle_graph(7)), 4),
        (build_family([2, 2]), 4),           # 11-vertex classic
        (build_family([2, 3]), 4),
    ]
    for g, expected in cases:
        cert = chi_exact(g)
        assert cert.chi == expected, f"chi mismatch on order {g.order}"
        check_certificate(g, cert)


def test_chi_exact_matches_product_oracle_small():
    fixtures = [cycle_graph(n) for n in range(3, 10)]
    fixtures += [complete_graph(n) for n in range(1, 6)]
    fixtures += [complement(cycle_graph(6)), complement(cycle_graph(7)),
                 build_family([1]), build_family([2]), build_family([1, 1]),
                 mycielski(cycle_graph(5), 1)]
    for g in fixtures:
        assert g.order <= 9
        assert chi_exact(g).chi == chi_by_product(g)


def test_chi_exact_matches_backtracking_oracle_medium():
    fixtures = [build_family([2, 2]), cycle_graph(11), cycle_graph(12),
                complement(cycle_graph(9))]
    for g in fixtures:
        assert g.order <= 12
        assert chi_exact(g).chi == chi_by_backtracking(g)


def test_cone_adds_exactly_one_colour():
    for g in (cycle_graph(5), cycle_graph(6), complete_graph(4),
              build_family([2, 2]), complement(cycle_graph(7))):
        assert chi_exact(mycielski(g, 1)).chi == chi_exact(g).chi + 1


def test_determinism():
    g = build_family([2, 2])
    first = chi_exact(g)
    second = chi_exact(g)
    assert first.chi == second.chi
    assert first.coloring == second.coloring


def test_budget_exhaustion_is_inconclusive():
    g = mycielski(complement(cycle_graph(7)), 3)
    res = chi_exact(g, budget_ms=0.0)
    assert isinstance(res, Inconclusive)
    assert res.lower <= 4 <= res.upper
    if res.best_coloring is not None:
        assert monochromatic_edges(g, res.best_coloring) == []


def test_order_cap():
    with pytest.raises(SizeCapError):
        chi_exact(cycle_graph(100))
    assert chi_exact(cycle_graph(100), cap=128).chi == 2
