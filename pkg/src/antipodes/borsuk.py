"""Near-antipodal sphere embeddings and the antipodal-map probe.

``embed_family`` places the r-level cone-layer families on spheres with
explicitly small edge defect: the base odd cycle goes on the circle
with consecutive vertices almost antipodal, and each later level wraps
the previous embedding by

    (v, i) -> (f(v) cos(pi i / 2r), (-1)^i sin(pi i / 2r)),
    z      -> (0, ..., 0, (-1)^r).

``probe_map`` turns that into an executable refutation: given any
candidate antipodal map with a declared continuity modulus, it builds a
family too chromatic for the induced colouring and reports which
inequality the candidate actually violates on a concrete edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .coloring import Coloring, monochromatic_edges
from .errors import ContractError, TheoremViolationError
from .graphs import Graph, build_family, mycielski
from .complexes import Report, Violation

UNIT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    graph: Graph
    coords: np.ndarray          # (order, n+1) unit rows
    n: int                      # sphere dimension
    defect: float               # max over edges of ||f(u)+f(v)||

    def edge_defects(self) -> np.ndarray:
        e = np.array(self.graph.edges, dtype=np.int64).reshape(-1, 2)
        return np.linalg.norm(self.coords[e[:, 0]] + self.coords[e[:, 1]], axis=1)

    def edge_spreads(self) -> np.ndarray:
        e = np.array(self.graph.edges, dtype=np.int64).reshape(-1, 2)
        return np.linalg.norm(self.coords[e[:, 0]] - self.coords[e[:, 1]], axis=1)


def choose_rs(n: int, delta: float) -> list[int]:
    """Layer counts meeting the target defect via the Lipschitz bound.

    The induction halves delta per level, so the base circle handles
    delta / 2^(n-1) and the lift producing dimension d+1 handles
    delta / 2^(n-1-d) with r = max(2, ceil(2 pi / delta')).
    """
    if n < 1:
        raise ContractError(f"choose_rs needs n >= 1, got {n}")
    if not 0 < delta < 2:
        raise ContractError(f"delta must lie in (0, 2), got {delta}")
    base_target = delta / 2 ** (n - 1)
    r0 = 1
    while 2 * math.sin(math.pi / (4 * r0 + 2)) >= base_target:
        r0 += 1
    rs = [max(2, r0)]
    for level in range(1, n):
        level_delta = delta / 2 ** (n - 1 - level)
        rs.append(max(2, math.ceil(2 * math.pi / level_delta)))
    return rs


def _cycle_positions(g: Graph) -> list[int]:
    adj = g.adjacency()
    if any(len(a) != 2 for a in adj):
        raise ContractError("base family member is not a cycle")
    order = [0, min(adj[0])]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = min(adj[cur] - {prev}) if len(adj[cur] - {prev}) else prev
        if nxt == 0:
            break
        order.append(nxt)
    if len(order) != g.order:
        raise ContractError("base family member is not a single cycle")
    return order


def embed_family(rs: Sequence[int]) -> EmbeddedGraph:
    """Embed ``build_family(rs)`` near-antipodally into S^len(rs)."""
    rs = [int(r) for r in rs]
    if not rs:
        raise ContractError("embed_family needs at least one layer count")
    g = build_family([rs[0]])
    walk = _cycle_positions(g)
    step = math.pi - math.pi / (2 * rs[0] + 1)
    coords = np.zeros((g.order, 2))
    for position, v in enumerate(walk):
        coords[v] = (math.cos(position * step), math.sin(position * step))

    for r in rs[1:]:
        base_n = g.order
        lifted = mycielski(g, r)
        new = np.zeros((lifted.order, coords.shape[1] + 1))
        for i in range(r):
            angle = math.pi * i / (2 * r)
            rows = slice(i * base_n, (i + 1) * base_n)
            new[rows, :-1] = coords * math.cos(angle)
            new[rows, -1] = (-1) ** i * math.sin(angle)
        new[r * base_n, -1] = (-1) ** r
        g, coords = lifted, new

    edges = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    defect = float(np.linalg.norm(coords[edges[:, 0]] + coords[edges[:, 1]],
                                  axis=1).max())
    return EmbeddedGraph(g, coords, len(rs), defect)


def verify_embedding(emb: EmbeddedGraph, delta: float) -> Report:
    """Unit norms, per-edge defect below delta, and the equivalent
    Borsuk-graph distance bound ||f(u)-f(v)|| >= sqrt(4 - delta^2)."""
    bad: list[Violation] = []
    norms = np.linalg.norm(emb.coords, axis=1)
    off = np.flatnonzero(np.abs(norms - 1.0) > UNIT_TOL)
    for v in off[:5]:
        bad.append(Violation("unit-norm",
                             f"vertex {v} has norm {norms[v]:.12f}"))
    sums = emb.edge_defects()
    spreads = emb.edge_spreads()
    threshold = math.sqrt(max(0.0, 4.0 - delta * delta))
    for idx, (a, b) in enumerate(emb.graph.edges):
        if sums[idx] >= delta:
            bad.append(Violation("defect",
                                 f"edge ({a},{b}) has ||f(u)+f(v)|| = "
                                 f"{sums[idx]:.9f} >= {delta}"))
        if spreads[idx] < threshold - UNIT_TOL:
            bad.append(Violation("borsuk-distance",
                                 f"edge ({a},{b}) has ||f(u)-f(v)|| = "
                                 f"{spreads[idx]:.9f} < sqrt(4-delta^2)"))
    stored = abs(float(sums.max()) - emb.defect) if len(sums) else 0.0
    if stored > 1e-12:
        bad.append(Violation("stored-defect",
                             f"recorded defect differs by {stored:.3e}"))
    return Report("embedding", tuple(bad))


def simplex_vertices(dim: int) -> np.ndarray:
    """The dim+1 vertices of a regular simplex inscribed in the unit
    sphere of R^dim, generated deterministically (pairwise inner
    product -1/dim)."""
    if dim < 1:
        raise ContractError(f"simplex_vertices needs dim >= 1, got {dim}")
    if dim == 1:
        return np.array([[-1.0], [1.0]])
    lower = simplex_vertices(dim - 1)
    scale = math.sqrt(1.0 - 1.0 / dim ** 2)
    top = np.zeros(dim)
    top[-1] = 1.0
    rest = np.hstack([lower * scale, np.full((dim, 1), -1.0 / dim)])
    return np.vstack([top, rest])


def simplex_coloring(x: Sequence[float], palette: "int | None" = None) -> int:
    """Colour of a unit vector by the nearest regular-simplex vertex
    (argmax inner product, ties to the lowest index).  Colours are
    1-based; the palette defaults to ambient dimension + 1."""
    x = np.asarray(x, dtype=float)
    if abs(np.linalg.norm(x) - 1.0) > UNIT_TOL:
        raise ContractError(f"simplex_coloring needs a unit vector, "
                            f"norm was {np.linalg.norm(x):.9f}")
    dim = x.shape[0]
    if palette is None:
        palette = dim + 1
    if palette != dim + 1:
        raise ContractError(
            f"palette {palette} does not match ambient dimension {dim} + 1")
    scores = simplex_vertices(dim) @ x
    return int(np.argmax(scores)) + 1


@dataclass(frozen=True)
class CandidateMap:
    """A candidate antipodal map S^n -> S^(n-1) with a *declared*
    continuity modulus.

    ``modulus(d)`` returns the input distance delta the owner claims
    guarantees image distance below d.  Uniform continuity cannot be
    measured from a black box, so every probe verdict is conditional on
    this declaration.
    """
    name: str
    n: int
    fn: Callable[[np.ndarray], np.ndarray]
    modulus: Callable[[float], float]

    def __call__(self, x: np.ndarray) -> np.ndarray:
        y = np.asarray(self.fn(np.asarray(x, dtype=float)), dtype=float)
        if abs(np.linalg.norm(y) - 1.0) > UNIT_TOL:
            raise ContractError(
                f"candidate map {self.name} returned a non-unit vector")
        return y


def sign_map() -> CandidateMap:
    """S^1 -> S^0 by the sign of the first coordinate, +1 at ties."""
    def fn(x):
        return np.array([1.0 if x[0] >= 0 else -1.0])
    return CandidateMap("sign", 1, fn, lambda d: d / 2)


def drop_normalize_map(n: int) -> CandidateMap:
    """S^n -> S^(n-1) by dropping the last coordinate and normalising,
    patched to a fixed unit vector near the poles."""
    if n < 1:
        raise ContractError("drop_normalize_map needs n >= 1")
    def fn(x):
        head = x[:-1]
        rho = np.linalg.norm(head)
        if rho < 1e-12:
            out = np.zeros(n)
            out[0] = 1.0
            return out
        return head / rho
    return CandidateMap("drop-normalize", n, fn, lambda d: d / 2)


def tabulated_map(name: str, points: np.ndarray, images: np.ndarray,
                  epsilon: float, delta: float) -> CandidateMap:
    """Nearest-sample evaluator with a declared (epsilon, delta) modulus;
    the modulus scales linearly below the declared epsilon."""
    points = np.asarray(points, dtype=float)
    images = np.asarray(images, dtype=float)
    if len(points) != len(images) or len(points) == 0:
        raise ContractError("tabulated map needs matching nonempty tables")
    n = points.shape[1] - 1
    def fn(x):
        idx = int(np.argmin(np.linalg.norm(points - x, axis=1)))
        return images[idx]
    def modulus(d):
        return delta if d >= epsilon else delta * d / epsilon
    return CandidateMap(name, n, fn, modulus)


@dataclass(frozen=True)
class ProbeReport:
    """One concrete edge on which the candidate map fails an inequality
    it could not avoid if it were continuous and antipodal."""
    map_name: str
    n: int
    epsilon: float
    delta: float
    rs: tuple[int, ...]
    witness_edge: tuple[int, int]
    witness_names: tuple[str, str]
    image_u: tuple[float, ...]
    image_v: tuple[float, ...]
    norm_sum: float
    norm_diff: float
    tag: str                    # antipodality | continuity | cell-diameter
    margin: float
    detail: str = field(default="")


def probe_map(candidate: CandidateMap, n: int) -> ProbeReport:
    """Refute a candidate antipodal map S^n -> S^(n-1) under its
    declared modulus.

    Sets epsilon = 1/sqrt(n+2), builds a family of chromatic number at
    least n+2 embedded with defect below the declared delta, colours it
    through the candidate with the (n+1)-colour simplex colouring, and
    reports which inequality fails on the monochromatic edge that must
    exist.
    """
    if n < 1:
        raise ContractError(f"probe_map needs n >= 1, got {n}")
    if candidate.n != n:
        raise ContractError(
            f"candidate map is declared on S^{candidate.n}, probe asked S^{n}")
    eps = 1.0 / math.sqrt(n + 2)
    delta = float(candidate.modulus(2 * eps))
    if not 0 < delta < 2:
        delta = min(max(delta, 1e-6), 2 - 1e-9)
    rs = choose_rs(n, delta)
    emb = embed_family(rs)
    verify_embedding(emb, delta).require()

    colors = tuple(simplex_coloring(candidate(emb.coords[v]), n + 1)
                   for v in range(emb.graph.order))
    coloring = Coloring(colors, n + 1)
    mono = monochromatic_edges(emb.graph, coloring)
    if not mono:
        raise TheoremViolationError(
            "no monochromatic edge on a family of chromatic number > palette",
            context={"rs": rs, "map": candidate.name})
    u, v = mono[0]
    gu, gv = emb.coords[u], emb.coords[v]
    fu, fv = candidate(gu), candidate(gv)
    norm_sum = float(np.linalg.norm(fu + fv))
    norm_diff = float(np.linalg.norm(fu - fv))

    anti = max(float(np.linalg.norm(candidate(-gu) + fu)),
               float(np.linalg.norm(candidate(-gv) + fv)))
    stretch = float(np.linalg.norm(fu - candidate(-gv)))
    cell_bound = 2 * math.sqrt(1 - eps * eps)
    if anti > UNIT_TOL:
        tag, margin = "antipodality", anti
        detail = ("||f(-x) + f(x)|| should vanish for an antipodal map; "
                  f"measured {anti:.9f} at the witness edge")
    elif stretch >= 2 * eps:
        tag, margin = "continuity", stretch - 2 * eps
        detail = (f"||g(u) + g(v)|| = "
                  f"{float(np.linalg.norm(gu + gv)):.9f} < delta = {delta:.9f} "
                  f"but ||f(g(u)) - f(-g(v))|| = {stretch:.9f} >= 2 eps; the "
                  "declared modulus is violated")
    else:
        tag, margin = "cell-diameter", norm_diff - cell_bound
        detail = (f"images landed in one colour cell yet lie {norm_diff:.9f} "
                  f"apart, above the cell diameter bound {cell_bound:.9f}")
    return ProbeReport(
        map_name=candidate.name, n=n, epsilon=eps, delta=delta, rs=tuple(rs),
        witness_edge=(u, v),
        witness_names=(str(emb.graph.names[u]), str(emb.graph.names[v])),
        image_u=tuple(float(t) for t in fu),
        image_v=tuple(float(t) for t in fv),
        norm_sum=norm_sum, norm_diff=norm_diff, tag=tag, margin=margin,
        detail=detail)
