"""Small-graph isomorphism by partition refinement plus backtracking.

Adequate for the order-200 cap used throughout the pipeline; the
returned witness is a vertex bijection that the caller can re-verify in
O(|E|).
"""

from __future__ import annotations

from .errors import SizeCapError
from .graphs import Graph

DEFAULT_CAP = 200


def _refine(g: Graph) -> list[int]:
    """Iterated neighbourhood refinement; returns a stable colouring."""
    adj = g.adjacency()
    colors = g.degrees()
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in range(g.order)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[sig] for sig in signatures]
        if new_colors == colors:
            return colors
        colors = new_colors


def find_isomorphism(g: Graph, h: Graph, cap: int = DEFAULT_CAP):
    """Return a mapping ``m`` with ``m[v_g] = v_h`` or None."""
    if g.order > cap or h.order > cap:
        raise SizeCapError(
            f"isomorphism search capped at order {cap}; "
            f"got {g.order} and {h.order}")
    if g.order != h.order or g.size != h.size:
        return None
    cg, ch = _refine(g), _refine(h)
    if sorted(cg) != sorted(ch):
        return None

    adj_g = g.adjacency()
    adj_h = h.adjacency()
    by_color_h: dict[int, list[int]] = {}
    for v, c in enumerate(ch):
        by_color_h.setdefault(c, []).append(v)

    # Map rarest colour classes first; ties by index for determinism.
    class_size = {c: len(vs) for c, vs in by_color_h.items()}
    order = sorted(range(g.order), key=lambda v: (class_size[cg[v]], cg[v], v))

    mapping = [-1] * g.order
    used = [False] * h.order

    def extend(pos: int) -> bool:
        if pos == g.order:
            return True
        v = order[pos]
        for w in by_color_h[cg[v]]:
            if used[w]:
                continue
            ok = True
            for u in adj_g[v]:
                mu = mapping[u]
                if mu != -1 and mu not in adj_h[w]:
                    ok = False
                    break
            if ok:
                # mapped non-neighbours must stay non-neighbours
                for x in adj_h[w]:
                    pre = inverse[x]
                    if pre != -1 and pre not in adj_g[v]:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                inverse[w] = v
                used[w] = True
                if extend(pos + 1):
                    return True
                mapping[v] = -1
                inverse[w] = -1
                used[w] = False
        return False

    inverse = [-1] * h.order
    if extend(0):
        return tuple(mapping)
    return None


def verify_isomorphism(g: Graph, h: Graph, mapping) -> bool:
    if sorted(mapping) != list(range(g.order)) or g.order != h.order:
        return False
    h_edges = set(h.edges)
    if g.size != h.size:
        return False
    for a, b in g.edges:
        x, y = mapping[a], mapping[b]
        if ((x, y) if x < y else (y, x)) not in h_edges:
            return False
    return True


def is_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> bool:
    return find_isomorphism(g, h, cap=cap) is not None
