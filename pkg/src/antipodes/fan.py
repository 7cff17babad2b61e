"""Antisymmetric labellings and the colouring-refutation pipeline.

The parity statement (an odd number of positive alternating facets for
every balanced-edge-free antisymmetric labelling of an aligned sphere)
is consumed as a verified property: ``positive_alternating_count``
enumerates facets exactly, and the test harness samples labellings by
rejection.  ``refute_coloring`` runs the pipeline that turns any small
colouring of the quotient graph into a monochromatic-edge certificate;
if no balanced edge shows up the outcome is a TheoremViolationError,
because valid inputs cannot do that.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import Coloring, monochromatic_edges
from .complexes import (BLACK, Flag, Quotient, SymmetricComplex, TwoColoring,
                        quotient_graph, verify_flag, verify_symmetric,
                        verify_two_coloring)
from .errors import ContractError, SamplingExhaustedError, TheoremViolationError


@dataclass(frozen=True)
class Labeling:
    """Vertex labels in +-{1..bound}, antisymmetric under the involution."""
    values: tuple[int, ...]
    bound: int

    def __post_init__(self):
        for v, lab in enumerate(self.values):
            if lab == 0 or abs(lab) > self.bound:
                raise ContractError(
                    f"label {lab} at vertex {v} outside +-1..{self.bound}")


def validate_labeling(k: SymmetricComplex, lab: Labeling) -> None:
    if len(lab.values) != k.n_vertices:
        raise ContractError("labelling length does not match vertex count")
    for v in range(k.n_vertices):
        if lab.values[k.nu[v]] != -lab.values[v]:
            raise ContractError(
                f"labelling is not antisymmetric at vertex {v}")


def mu_transform(lab: Labeling) -> Labeling:
    """mu(v) = (-1)^{|lambda(v)|} * lambda(v); keeps antisymmetry."""
    values = tuple((-el if abs(el) % 2 else el) for el in lab.values)
    return Labeling(values, lab.bound)


def _is_positive_alternating(labels) -> bool:
    ordered = sorted(labels, key=abs)
    prev = 0
    for pos, lab in enumerate(ordered):
        if abs(lab) <= prev:
            return False
        if (lab > 0) != (pos % 2 == 0):
            return False
        prev = abs(lab)
    return True


def positive_alternating_count(k: SymmetricComplex, lab: Labeling):
    """Exact count (and list) of facets labelled +j0,-j1,+j2,... with
    strictly increasing magnitudes."""
    validate_labeling(k, lab)
    hits = [f for f in k.facets
            if _is_positive_alternating([lab.values[v] for v in f])]
    return len(hits), hits


def find_balanced_edge(k: SymmetricComplex, lab: Labeling):
    """First edge of the 1-skeleton (canonical order) with labels summing
    to zero, or None."""
    validate_labeling(k, lab)
    for a, b in k.edges():
        if lab.values[a] + lab.values[b] == 0:
            return (a, b)
    return None


def labeling_from_coloring(k: SymmetricComplex, kappa: TwoColoring,
                           coloring: Coloring, projection) -> Labeling:
    """lambda(v) = +c(p(v)) on black vertices, -c(p(v)) on white ones."""
    verify_two_coloring(k, kappa).require()
    if len(projection) != k.n_vertices:
        raise ContractError("projection length does not match vertex count")
    values = []
    for v in range(k.n_vertices):
        g_vertex = projection[v]
        if g_vertex >= len(coloring.colors):
            raise ContractError(f"colouring misses quotient vertex {g_vertex}")
        c = coloring.colors[g_vertex]
        values.append(c if kappa.colors[v] == BLACK else -c)
    return Labeling(tuple(values), coloring.palette)


@dataclass(frozen=True)
class MonochromeEdgeCert:
    """Witness that a colouring of the quotient graph is improper."""
    g_edge: tuple[int, int]
    color: int
    lifted_edge: tuple[int, int]
    labels: tuple[int, int]

    def verify(self, k: SymmetricComplex, kappa: TwoColoring,
               coloring: Coloring, quotient: Quotient) -> bool:
        u, v = self.lifted_edge
        if self.labels[0] + self.labels[1] != 0:
            return False
        pu, pv = quotient.projection[u], quotient.projection[v]
        if {pu, pv} != set(self.g_edge):
            return False
        ca = coloring.colors[self.g_edge[0]]
        cb = coloring.colors[self.g_edge[1]]
        if ca != self.color or cb != self.color:
            return False
        return tuple(sorted(self.g_edge)) in set(
            monochromatic_edges(quotient.graph, coloring))


def refute_coloring(k: SymmetricComplex, kappa: TwoColoring, flag: Flag,
                    coloring: Coloring) -> MonochromeEdgeCert:
    """Certify that a (dim+1)-colouring of the quotient is not proper."""
    verify_symmetric(k).require()
    verify_flag(k, flag).require()
    if coloring.palette > k.dim + 1:
        raise ContractError(
            f"palette {coloring.palette} exceeds dim+1 = {k.dim + 1}")
    quotient = quotient_graph(k, kappa)
    if len(coloring.colors) != quotient.graph.order:
        raise ContractError("colouring does not cover the quotient graph")
    lab = labeling_from_coloring(k, kappa, coloring, quotient.projection)
    edge = find_balanced_edge(k, lab)
    if edge is None:
        raise TheoremViolationError(
            "no balanced edge found on a verified aligned complex",
            context={"complex": k, "flag": flag, "labeling": lab})
    u, v = edge
    pu, pv = quotient.projection[u], quotient.projection[v]
    g_edge = (pu, pv) if pu < pv else (pv, pu)
    cert = MonochromeEdgeCert(
        g_edge=g_edge,
        color=coloring.colors[pu],
        lifted_edge=edge,
        labels=(lab.values[u], lab.values[v]),
    )
    if not cert.verify(k, kappa, coloring, quotient):
        raise TheoremViolationError(
            "refutation certificate failed its own verification",
            context={"certificate": cert})
    return cert


def random_balanced_free_labelings(k: SymmetricComplex, bound: int,
                                   count: int, seed: int,
                                   max_tries: int = 100_000) -> list[Labeling]:
    """Rejection-sample antisymmetric labellings with no balanced edge.

    Labels are drawn uniformly from +-{1..bound} per antipodal class and
    a draw is rejected if any edge balances.  ``max_tries`` caps the
    number of consecutive rejected draws before SamplingExhaustedError.
    """
    reps = [v for v in range(k.n_vertices) if v < k.nu[v]]
    rep_index = {rep: i for i, rep in enumerate(reps)}
    coeff = np.zeros(k.n_vertices, dtype=np.int64)
    klass = np.zeros(k.n_vertices, dtype=np.int64)
    for v in range(k.n_vertices):
        rep = min(v, k.nu[v])
        klass[v] = rep_index[rep]
        coeff[v] = 1 if v == rep else -1
    edges = np.array(k.edges(), dtype=np.int64).reshape(-1, 2)
    pool = np.array([s * m for m in range(1, bound + 1) for s in (1, -1)],
                    dtype=np.int64)
    rng = np.random.default_rng(seed)

    accepted: list[Labeling] = []
    since_last = 0
    batch = max(256, min(20_000, count * 4))
    while len(accepted) < count:
        draws = rng.choice(pool, size=(batch, len(reps)))
        vertex_labels = draws[:, klass] * coeff
        sums = vertex_labels[:, edges[:, 0]] + vertex_labels[:, edges[:, 1]]
        good = ~(sums == 0).any(axis=1)
        for row in np.flatnonzero(good):
            accepted.append(Labeling(tuple(int(x) for x in vertex_labels[row]),
                                     bound))
            if len(accepted) == count:
                break
        if not good.any():
            since_last += batch
            if since_last > max_tries:
                raise SamplingExhaustedError(
                    f"no balanced-edge-free labelling with bound {bound} "
                    f"found in {since_last} consecutive draws")
        else:
            since_last = 0
    return accepted
