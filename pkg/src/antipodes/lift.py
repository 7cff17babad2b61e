"""Dimension-raising lifts of coloured aligned sphere triangulations.

``suspension_lift`` is the exact r = 1 construction (join with two new
apexes) and works in every dimension.  ``general_lift`` realises the
full contract -- quotient isomorphic to the r-level cone-layer graph of
the base quotient -- via a layered construction over one-dimensional
bases; every call re-verifies all postconditions before returning, so
no unverified complex can escape.  Any symmetric triangulation of the
circle admitting a proper antisymmetric colouring is a relabelled
C_{4s+2}, which is why the layered construction starts by recovering
the cyclic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import (BLACK, WHITE, Flag, SymmetricComplex, TwoColoring,
                        circle_complex, quotient_graph, verify_flag,
                        verify_sphere_necessary, verify_symmetric,
                        verify_two_coloring)
from .errors import ContractError
from .graphs import Graph, build_family, mycielski
from .iso import find_isomorphism

Lifted = tuple[SymmetricComplex, TwoColoring, Flag]


class LiftUnsupportedError(ContractError):
    """The layered construction only covers one-dimensional bases for r >= 2."""


@dataclass(frozen=True)
class SphereModel:
    complex: SymmetricComplex
    kappa: TwoColoring
    flag: Flag
    graph: Graph
    projection: tuple[int, ...]
    spec: tuple[int, ...]


def _require_aligned(k: SymmetricComplex, kappa: TwoColoring, flag: Flag):
    verify_symmetric(k).require()
    verify_sphere_necessary(k).require()
    verify_flag(k, flag).require()
    verify_two_coloring(k, kappa).require()


def _check_contract(base: Lifted, lifted: Lifted, r: int) -> Lifted:
    k2, kappa2, flag2 = lifted
    reports = [verify_symmetric(k2), verify_sphere_necessary(k2),
               verify_flag(k2, flag2), verify_two_coloring(k2, kappa2)]
    failures = [rep.summary() for rep in reports if not rep.ok]
    if failures:
        raise ContractError("lift produced an invalid complex: "
                            + "; ".join(failures))
    k, kappa, _ = base
    expected = mycielski(quotient_graph(k, kappa).graph, r)
    produced = quotient_graph(k2, kappa2).graph
    if find_isomorphism(produced, expected) is None:
        raise ContractError(
            f"lift quotient is not isomorphic to the r={r} cone-layer graph "
            f"of the base quotient ({produced.order} vs {expected.order} vertices)")
    return lifted


def suspension_lift(k: SymmetricComplex, kappa: TwoColoring,
                    flag: Flag) -> Lifted:
    """Join with apexes z+/z-; the quotient gains one universal vertex."""
    _require_aligned(k, kappa, flag)
    n = k.n_vertices
    z_plus, z_minus = n, n + 1
    new_dim = k.dim + 1
    names = k.names + (f"z{new_dim}+", f"z{new_dim}-")
    nu = k.nu + (z_minus, z_plus)
    facets = [f + (z_plus,) for f in k.facets]
    facets += [f + (z_minus,) for f in k.facets]
    k2 = SymmetricComplex.make(names, nu, facets, dim=new_dim)
    kappa2 = TwoColoring(kappa.colors + (BLACK, WHITE))
    flag2 = Flag.make(list(flag.levels) + [[f + (z_plus,) for f in k.facets]])
    return _check_contract((k, kappa, flag), (k2, kappa2, flag2), 1)


def _cycle_order(k: SymmetricComplex) -> list[int]:
    """Walk the 1-dimensional complex as a single cycle, deterministically."""
    adj: dict[int, list[int]] = {v: [] for v in range(k.n_vertices)}
    for a, b in k.facets:
        adj[a].append(b)
        adj[b].append(a)
    for v, nbrs in adj.items():
        if len(nbrs) != 2:
            raise ContractError(f"vertex {v} has degree {len(nbrs)}, not a cycle")
    order = [0, min(adj[0])]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
        if nxt == 0:
            break
        order.append(nxt)
    if len(order) != k.n_vertices:
        raise ContractError("circle complex is not a single cycle")
    return order


def _layered_circle_lift(k: SymmetricComplex, kappa: TwoColoring,
                         flag: Flag, r: int) -> Lifted:
    """Stack r vertex layers between the equatorial copy of the base
    circle and two polar apexes.

    Layer 0 is the full base cycle on the equator.  For i >= 1 the
    northern ring carries one colour class (alternating with i) placed
    over its own cycle position, joined downward to the two neighbouring
    positions; the southern hemisphere is the antipodal image.  Every
    cross-ring edge then lies over a base edge, intra-ring edges are
    monochromatic, and the quotient is exactly the r-level cone-layer
    graph of the base quotient.
    """
    m = k.n_vertices
    cycle = _cycle_order(k)
    half = m // 2
    for j, v in enumerate(cycle):
        if k.nu[v] != cycle[(j + half) % m]:
            raise ContractError("involution is not the half turn of the cycle")

    def vid(v: int, level: int) -> int:
        return level * m + v

    z_plus, z_minus = r * m, r * m + 1
    names = [f"{k.names[v]}~{i}" if i else k.names[v]
             for i in range(r) for v in range(m)]
    names += ["z+", "z-"]
    nu = [vid(k.nu[v], i) for i in range(r) for v in range(m)]
    nu += [z_minus, z_plus]

    # Northern ring i >= 1 carries one colour class, alternating with i so
    # that cross-ring edges sit over base edges.  kappa is proper on edges,
    # hence alternates around the cycle and each class is a transversal of
    # the antipodal classes.
    base_color = kappa.colors[cycle[0]]
    ring_color = {i: base_color if i % 2 == 1 else 1 - base_color
                  for i in range(1, r)}
    ring_positions = {
        i: [j for j in range(m) if kappa.colors[cycle[j]] == ring_color[i]]
        for i in range(1, r)
    }

    north: list[tuple[int, ...]] = []
    for j in ring_positions[1]:
        below, here, above = cycle[(j - 1) % m], cycle[j], cycle[(j + 1) % m]
        nxt = cycle[(j + 2) % m]
        north.append(tuple(sorted((vid(below, 0), vid(here, 0), vid(here, 1)))))
        north.append(tuple(sorted((vid(here, 0), vid(above, 0), vid(here, 1)))))
        north.append(tuple(sorted((vid(above, 0), vid(here, 1), vid(nxt, 1)))))
    for i in range(1, r - 1):
        for j in ring_positions[i]:
            a, b, c, d = (cycle[j], cycle[(j + 1) % m],
                          cycle[(j + 2) % m], cycle[(j + 3) % m])
            north.append(tuple(sorted((vid(a, i), vid(c, i), vid(b, i + 1)))))
            north.append(tuple(sorted((vid(b, i + 1), vid(c, i), vid(d, i + 1)))))
    for j in ring_positions[r - 1]:
        here, nxt = cycle[j], cycle[(j + 2) % m]
        north.append(tuple(sorted((z_plus, vid(here, r - 1), vid(nxt, r - 1)))))

    south = [tuple(sorted(nu[v] for v in f)) for f in north]
    colors = [kappa.colors[v] for _ in range(r) for v in range(m)]
    z_plus_color = 1 - ring_color[r - 1]
    colors += [z_plus_color, 1 - z_plus_color]

    k2 = SymmetricComplex.make(names, nu, north + south, dim=2)
    kappa2 = TwoColoring(tuple(colors))
    flag2 = Flag.make(list(flag.levels) + [north])
    return k2, kappa2, flag2


def general_lift(k: SymmetricComplex, kappa: TwoColoring, flag: Flag,
                 r: int) -> Lifted:
    """Lift (K, kappa, flag) to the next dimension with quotient M_r."""
    if r < 1:
        raise ContractError(f"lift needs r >= 1, got {r}")
    if r == 1:
        return suspension_lift(k, kappa, flag)
    _require_aligned(k, kappa, flag)
    if k.dim != 1:
        raise LiftUnsupportedError(
            f"general lift with r = {r} is implemented for one-dimensional "
            f"bases only (got dimension {k.dim}); use r = 1 suspensions above")
    lifted = _layered_circle_lift(k, kappa, flag, r)
    return _check_contract((k, kappa, flag), lifted, r)


def sphere_model(rs: Sequence[int]) -> SphereModel:
    """Assemble the sphere model realising ``build_family(rs)``."""
    rs = tuple(int(r) for r in rs)
    if not rs:
        raise ContractError("sphere_model needs at least one layer count")
    k, kappa, flag = circle_complex(rs[0])
    for r in rs[1:]:
        k, kappa, flag = general_lift(k, kappa, flag, r)
    quotient = quotient_graph(k, kappa)
    expected = build_family(rs)
    if find_isomorphism(quotient.graph, expected) is None:
        raise ContractError(
            "sphere model quotient does not match the graph family member")
    return SphereModel(k, kappa, flag, quotient.graph, quotient.projection, rs)
