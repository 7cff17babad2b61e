"""Independent oracles used by the test suite.

Deliberately naive: these re-derive expected values by enumeration with
none of the library's orderings, prunings, or shortcuts, so agreement
is meaningful.
"""

from __future__ import annotations

import itertools

from antipodes import Graph


def chi_by_product(g: Graph, max_colors: int = 6) -> int:
    """Smallest palette admitting a proper colouring, by literal
    enumeration of every assignment.  Only sane for order <= 9."""
    if g.order == 0:
        return 0
    for k in range(1, max_colors + 1):
        for assignment in itertools.product(range(k), repeat=g.order):
            if all(assignment[a] != assignment[b] for a, b in g.edges):
                return k
    raise AssertionError(f"no colouring with up to {max_colors} colours")


def chi_by_backtracking(g: Graph) -> int:
    """Exhaustive search in plain index order, no heuristics.  Usable to
    order ~12."""
    adj = g.adjacency()

    def colorable(k: int) -> bool:
        colors = [-1] * g.order

        def place(v: int) -> bool:
            if v == g.order:
                return True
            for c in range(k):
                if all(colors[w] != c for w in adj[v]):
                    colors[v] = c
                    if place(v + 1):
                        return True
                    colors[v] = -1
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def alternating_facets_by_scan(facets, labels) -> list[tuple[int, ...]]:
    """Re-derivation of the positive alternating condition: sort each
    facet's labels by magnitude and demand +,-,+,... with strictly
    increasing magnitudes."""
    hits = []
    for f in facets:
        vals = sorted((labels[v] for v in f), key=abs)
        ok = len({abs(x) for x in vals}) == len(vals)
        for i, x in enumerate(vals):
            if i % 2 == 0 and x < 0:
                ok = False
            if i % 2 == 1 and x > 0:
                ok = False
        if ok:
            hits.append(f)
    return hits


def balanced_edges_by_scan(edges, labels) -> list[tuple[int, int]]:
    return [(a, b) for a, b in edges if labels[a] + labels[b] == 0]
