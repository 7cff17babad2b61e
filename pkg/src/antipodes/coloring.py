"""Exact chromatic numbers with certificates.

``chi_exact`` runs iterative-deepening DSATUR branch-and-bound: a greedy
clique gives the lower bound, greedy DSATUR the upper bound, and the
decision search for each k in between uses canonical first-use colour
order so that the search is deterministic and symmetry-free.  A spent
budget yields an :class:`Inconclusive` result carrying the best bounds
found; it never yields a wrong number.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import ContractError, SizeCapError
from .graphs import Graph

DEFAULT_CAP = 64


@dataclass(frozen=True)
class Coloring:
    """Total colour assignment with colours in 1..palette."""
    colors: tuple[int, ...]
    palette: int

    def __post_init__(self):
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.palette:
                raise ContractError(
                    f"vertex {v} has colour {c} outside palette 1..{self.palette}")

    @property
    def used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class ChromaticCertificate:
    chi: int
    coloring: Coloring
    lower_bound_witness: str
    method: str
    elapsed_ms: float


@dataclass(frozen=True)
class Inconclusive:
    lower: int
    upper: int
    best_coloring: "Coloring | None"
    elapsed_ms: float
    note: str


def monochromatic_edges(g: Graph, coloring: Coloring) -> list[tuple[int, int]]:
    """Exactly the edges whose endpoints share a colour, canonical order."""
    if len(coloring.colors) != g.order:
        raise ContractError(
            f"colouring covers {len(coloring.colors)} vertices, graph has {g.order}")
    c = coloring.colors
    return [(a, b) for a, b in g.edges if c[a] == c[b]]


def greedy_clique(g: Graph) -> list[int]:
    """Deterministic greedy clique, used as a chromatic lower bound."""
    if g.order == 0:
        return []
    adj = g.adjacency()
    deg = g.degrees()
    best: list[int] = []
    seeds = sorted(range(g.order), key=lambda v: (-deg[v], v))[:8]
    for seed in seeds:
        clique = [seed]
        candidates = set(adj[seed])
        while candidates:
            v = min(candidates, key=lambda w: (-len(candidates & adj[w]), w))
            clique.append(v)
            candidates &= adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_greedy(g: Graph) -> Coloring:
    """Greedy DSATUR upper bound; ties by (saturation, degree, lowest index)."""
    n = g.order
    if n == 0:
        return Coloring((), 0)
    adj = g.adjacency()
    deg = g.degrees()
    colors = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] == 0),
                key=lambda u: (len(sat[u]), deg[u], -u))
        c = 1
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in adj[v]:
            sat[w].add(c)
    return Coloring(tuple(colors), max(colors))


class _Timeout(Exception):
    pass


def _exists_coloring(g: Graph, k: int, deadline: "float | None"):
    """Decision search: a proper k-colouring or None, DSATUR-ordered."""
    n = g.order
    if n == 0:
        return []
    if k <= 0:
        return None
    masks = [0] * n
    for a, b in g.edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    deg = g.degrees()
    colors = [-1] * n
    sat = [0] * n          # bitmask of colours seen in the neighbourhood
    full = (1 << k) - 1
    nodes = 0

    def place(colored: int, num_used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes % 4096 == 0:
            if time.monotonic() > deadline:
                raise _Timeout
        if colored == n:
            return True
        v = -1
        key = (-1, -1, 0)
        for u in range(n):
            if colors[u] == -1:
                cand = (sat[u].bit_count(), deg[u], -u)
                if cand > key:
                    key = cand
                    v = u
        # canonical colour order: previously used colours plus one fresh
        limit = min(num_used + 1, k)
        avail = ~sat[v] & ((1 << limit) - 1)
        while avail:
            bit = avail & -avail
            avail ^= bit
            c = bit.bit_length() - 1
            colors[v] = c
            touched = []
            mask = masks[v]
            while mask:
                wbit = mask & -mask
                mask ^= wbit
                w = wbit.bit_length() - 1
                if colors[w] == -1 and not sat[w] & bit:
                    sat[w] |= bit
                    touched.append(w)
            if place(colored + 1, max(num_used, c + 1)):
                return True
            colors[v] = -1
            for w in touched:
                sat[w] ^= bit
        return False

    if place(0, 0):
        return colors[:]
    return None


def chi_exact(g: Graph, budget_ms: "float | None" = None,
              cap: int = DEFAULT_CAP):
    """Exact chromatic number, or Inconclusive when the budget runs out."""
    if g.order > cap:
        raise SizeCapError(f"chi_exact capped at order {cap}; got {g.order}")
    start = time.monotonic()
    deadline = None if budget_ms is None else start + budget_ms / 1000.0
    if g.order == 0:
        return ChromaticCertificate(0, Coloring((), 0), "empty graph",
                                    "dsatur-bnb", 0.0)

    clique = greedy_clique(g)
    lower = max(1, len(clique))
    greedy = dsatur_greedy(g)
    upper = greedy.used
    best = greedy
    ruled_out = lower - 1

    def elapsed():
        return (time.monotonic() - start) * 1000.0

    for k in range(lower, upper):
        if deadline is not None and time.monotonic() > deadline:
            return Inconclusive(ruled_out + 1, upper, best, elapsed(),
                                f"budget spent before deciding k={k}")
        try:
            found = _exists_coloring(g, k, deadline)
        except _Timeout:
            return Inconclusive(ruled_out + 1, upper, best, elapsed(),
                                f"budget spent while deciding k={k}")
        if found is not None:
            upper = k
            best = Coloring(tuple(c + 1 for c in found), k)
            break
        ruled_out = k

    chi = ruled_out + 1
    # ruled_out == upper - 1 here, so the best colouring uses chi colours.
    witness = (f"greedy clique {clique} of size {len(clique)}; "
               f"exhaustive DSATUR search found no {chi - 1}-colouring"
               if chi > max(1, len(clique)) else
               f"greedy clique {clique} of size {len(clique)} meets the colouring")
    return ChromaticCertificate(chi, best, witness, "dsatur-bnb", elapsed())
