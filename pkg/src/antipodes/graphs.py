"""Finite simple graphs and the generalised Mycielski construction.

A :class:`Graph` is immutable: ``order`` vertices indexed ``0..order-1``,
a canonically sorted edge tuple, and one structured name per vertex.
Vertex ``(u, i)`` of ``mycielski(g, r)`` gets index ``i * g.order + u``
and the apex ``z`` gets index ``r * g.order``, so the level-0 copy keeps
the base indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError
from .names import Apex, Base, Level, VertexName, max_apex_depth

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[Edge, ...]
    names: tuple[VertexName, ...]

    @staticmethod
    def make(order: int, edges: Iterable[Sequence[int]],
             names: Sequence[VertexName] | None = None) -> "Graph":
        """Build a graph in canonical form, validating simplicity."""
        if order < 0:
            raise ContractError(f"negative order {order}")
        canonical = set()
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise ContractError(f"self-loop at vertex {a}")
            if not (0 <= a < order and 0 <= b < order):
                raise ContractError(f"edge ({a},{b}) out of range for order {order}")
            canonical.add((a, b) if a < b else (b, a))
        if names is None:
            names = tuple(Base(str(v)) for v in range(order))
        else:
            names = tuple(names)
            if len(names) != order:
                raise ContractError("names length does not match order")
        return Graph(order, tuple(sorted(canonical)), names)

    @property
    def size(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def has_edge(self, a: int, b: int) -> bool:
        e = (a, b) if a < b else (b, a)
        return e in set(self.edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.make(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ContractError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph.make(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    edges = [(i, j) for i in range(g.order) for j in range(i + 1, g.order)
             if (i, j) not in present]
    return Graph.make(g.order, edges, g.names)


def mycielski(g: Graph, r: int) -> Graph:
    """Cone-layer construction: vertex set V x {0..r-1} plus an apex z.

    Level 0 carries a copy of E; each base edge {u,v} contributes the
    cross edges {(u,i),(v,i+1)} and {(v,i),(u,i+1)} for 0 <= i <= r-2;
    the apex is joined to every level r-1 vertex.
    """
    if r < 1:
        raise ContractError(f"mycielski needs r >= 1, got {r}")
    n = g.order
    z = r * n
    edges: list[Edge] = []
    edges.extend(g.edges)
    for u, v in g.edges:
        for i in range(r - 1):
            edges.append((i * n + u, (i + 1) * n + v))
            edges.append((i * n + v, (i + 1) * n + u))
    edges.extend(((r - 1) * n + u, z) for u in range(n))
    depth = 1 + max((max_apex_depth(name) for name in g.names), default=0)
    names = [Level(g.names[u], i) for i in range(r) for u in range(n)]
    names.append(Apex(depth))
    return Graph.make(r * n + 1, edges, names)


def build_family(rs: Sequence[int]) -> Graph:
    """Fold the Mycielski construction over ``rs`` starting from K2."""
    g = complete_graph(2)
    for r in rs:
        g = mycielski(g, r)
    return g


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover: vertices (v,+),(v,-), edges across signs."""
    n = g.order
    edges: list[Edge] = []
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((v, n + u))
    names = [Base(f"{name}+") for name in g.names]
    names += [Base(f"{name}-") for name in g.names]
    return Graph.make(2 * n, edges, names)


def is_bipartite(g: Graph) -> bool:
    """Two-colouring search over each component."""
    adj = g.adjacency()
    side = [-1] * g.order
    for start in range(g.order):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True
