"""Symmetric sphere triangulations, hemisphere flags, and quotients.

A :class:`SymmetricComplex` stores facets only; faces are generated on
demand.  Verifiers never raise: they return a :class:`Report` listing
every violated check together with a witness, and pipeline operations
turn a failing report into a :class:`ContractError` at their own
boundary.  ``verify_sphere_necessary`` checks conditions that every
triangulated sphere satisfies (purity, ridge degree two, connected dual
graph, Euler characteristic); passing it means "consistent with S^n",
not a homeomorphism proof.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError
from .graphs import Graph
from .names import Base

BLACK = 0
WHITE = 1

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SymmetricComplex:
    dim: int
    names: tuple[str, ...]
    nu: tuple[int, ...]
    facets: tuple[Simplex, ...]

    @staticmethod
    def make(names: Sequence[str], nu: Sequence[int],
             facets: Iterable[Sequence[int]],
             dim: "int | None" = None) -> "SymmetricComplex":
        names = tuple(names)
        nu = tuple(int(v) for v in nu)
        if len(nu) != len(names):
            raise ContractError("nu length does not match vertex count")
        canon = sorted({tuple(sorted(int(v) for v in f)) for f in facets})
        for f in canon:
            if len(set(f)) != len(f):
                raise ContractError(f"facet {f} repeats a vertex")
            if f and not (0 <= f[0] and f[-1] < len(names)):
                raise ContractError(f"facet {f} has out-of-range vertices")
        if dim is None:
            dim = max((len(f) - 1 for f in canon), default=-1)
        return SymmetricComplex(dim, names, nu, tuple(canon))

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    def nu_simplex(self, simplex: Sequence[int]) -> Simplex:
        return tuple(sorted(self.nu[v] for v in simplex))

    def edges(self) -> list[tuple[int, int]]:
        """The 1-skeleton in canonical sorted order."""
        seen = set()
        for f in self.facets:
            seen.update(itertools.combinations(f, 2))
        return sorted(seen)

    def all_faces(self) -> set[Simplex]:
        faces: set[Simplex] = set()
        for f in self.facets:
            for d in range(1, len(f) + 1):
                faces.update(itertools.combinations(f, d))
        return faces

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for face in self.all_faces():
            counts[len(face) - 1] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * fd for d, fd in enumerate(self.f_vector()))


@dataclass(frozen=True)
class Flag:
    """Hemisphere chain H_0 .. H_n, each level given by its facet list."""
    levels: tuple[tuple[Simplex, ...], ...]

    @staticmethod
    def make(levels: Iterable[Iterable[Sequence[int]]]) -> "Flag":
        canon = tuple(
            tuple(sorted({tuple(sorted(int(v) for v in f)) for f in level}))
            for level in levels
        )
        return Flag(canon)

    @property
    def top_dim(self) -> int:
        return len(self.levels) - 1


@dataclass(frozen=True)
class TwoColoring:
    """Black/white vertex colouring; 0 is black, 1 is white."""
    colors: tuple[int, ...]

    def __post_init__(self):
        if any(c not in (BLACK, WHITE) for c in self.colors):
            raise ContractError("two-colouring values must be 0 (black) or 1 (white)")


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str


@dataclass(frozen=True)
class Report:
    subject: str
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def require(self) -> None:
        if not self.ok:
            lines = "; ".join(f"{v.check}: {v.detail}" for v in self.violations)
            raise ContractError(f"{self.subject} failed verification: {lines}")

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: pass"
        return f"{self.subject}: FAIL ({len(self.violations)} violations)"


def verify_symmetric(k: SymmetricComplex) -> Report:
    """Free involution, closure under it, and no antipodal pair in a simplex."""
    bad: list[Violation] = []
    n = k.n_vertices
    if len(k.nu) != n:
        bad.append(Violation("involution", "nu length mismatch"))
        return Report("symmetric-complex", tuple(bad))
    for v in range(n):
        img = k.nu[v]
        if not 0 <= img < n:
            bad.append(Violation("involution", f"nu({v}) = {img} out of range"))
            return Report("symmetric-complex", tuple(bad))
        if img == v:
            bad.append(Violation("involution", f"nu fixes vertex {v}"))
        elif k.nu[img] != v:
            bad.append(Violation("involution", f"nu is not an involution at {v}"))
    facet_set = set(k.facets)
    for f in k.facets:
        image = k.nu_simplex(f)
        if image not in facet_set:
            bad.append(Violation("nu-closure",
                                 f"facet {f} has no antipodal facet {image}"))
        if len({min(v, k.nu[v]) for v in f}) != len(f):
            bad.append(Violation("antipodal-pair",
                                 f"facet {f} contains an antipodal vertex pair"))
    return Report("symmetric-complex", tuple(bad))


def verify_sphere_necessary(k: SymmetricComplex) -> Report:
    """Purity, ridge degree 2, connected dual graph, Euler characteristic."""
    bad: list[Violation] = []
    if not k.facets:
        return Report("sphere-necessary", (Violation("purity", "no facets"),))
    for f in k.facets:
        if len(f) != k.dim + 1:
            bad.append(Violation("purity",
                                 f"facet {f} has dimension {len(f) - 1}, expected {k.dim}"))
    if bad:
        return Report("sphere-necessary", tuple(bad))

    ridge_facets: dict[Simplex, list[int]] = {}
    for idx, f in enumerate(k.facets):
        for ridge in itertools.combinations(f, k.dim):
            ridge_facets.setdefault(ridge, []).append(idx)
    for ridge, owners in sorted(ridge_facets.items()):
        if len(owners) != 2:
            bad.append(Violation("ridge-degree",
                                 f"ridge {ridge} lies in {len(owners)} facets"))

    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for ridge in itertools.combinations(k.facets[cur], k.dim):
            for other in ridge_facets[ridge]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
    if len(seen) != len(k.facets):
        bad.append(Violation("connectivity",
                             f"facet adjacency graph has {len(k.facets) - len(seen)} "
                             "unreachable facets"))

    expected = 1 + (-1) ** k.dim
    chi = k.euler_characteristic()
    if chi != expected:
        bad.append(Violation("euler",
                             f"Euler characteristic {chi}, expected {expected}"))
    return Report("sphere-necessary", tuple(bad))


def _faces_of(facets: Iterable[Simplex]) -> set[Simplex]:
    faces: set[Simplex] = set()
    for f in facets:
        for d in range(1, len(f) + 1):
            faces.update(itertools.combinations(f, d))
    return faces


def _boundary(facets: Sequence[Simplex], d: int) -> set[Simplex]:
    """Ridges of a pure d-complex lying in exactly one facet."""
    count: dict[Simplex, int] = {}
    for f in facets:
        for ridge in itertools.combinations(f, d):
            count[ridge] = count.get(ridge, 0) + 1
    return {ridge for ridge, c in count.items() if c == 1}


def verify_flag(k: SymmetricComplex, flag: Flag) -> Report:
    """Check every hemisphere-chain identity combinatorially."""
    sym = verify_symmetric(k)
    if not sym.ok:
        return Report("hemisphere-flag",
                      (Violation("symmetric-precondition",
                                 "underlying complex fails verify_symmetric"),)
                      + sym.violations)
    bad: list[Violation] = []
    if flag.top_dim != k.dim:
        bad.append(Violation("chain-length",
                             f"flag has top dimension {flag.top_dim}, complex {k.dim}"))
        return Report("hemisphere-flag", tuple(bad))

    h0 = flag.levels[0]
    if len(h0) != 1 or len(h0[0]) != 1:
        bad.append(Violation("h0", f"H_0 must be a single vertex, got {h0}"))

    skeleton = k.all_faces()
    for d, level in enumerate(flag.levels):
        for f in level:
            if len(f) != d + 1:
                bad.append(Violation("purity",
                                     f"H_{d} facet {f} is not {d}-dimensional"))
            elif f not in skeleton:
                bad.append(Violation("skeleton",
                                     f"H_{d} facet {f} is not a face of the complex"))

    for d in range(1, flag.top_dim + 1):
        lower = flag.levels[d - 1]
        upper = flag.levels[d]
        upper_faces = _faces_of(upper)
        for f in lower:
            if f not in upper_faces:
                bad.append(Violation("chain",
                                     f"H_{d - 1} facet {f} is not contained in H_{d}"))
        boundary = _boundary(upper, d)
        expected = set(lower) | {k.nu_simplex(f) for f in lower}
        if boundary != expected:
            missing = sorted(expected - boundary)[:3]
            extra = sorted(boundary - expected)[:3]
            bad.append(Violation("boundary",
                                 f"boundary(H_{d}) mismatch; missing {missing}, "
                                 f"extra {extra}"))
        mirrored = [k.nu_simplex(f) for f in upper]
        overlap = upper_faces & _faces_of(mirrored)
        boundary_faces = _faces_of(sorted(boundary))
        if overlap != boundary_faces:
            bad.append(Violation("hemisphere-overlap",
                                 f"H_{d} meets -H_{d} outside its boundary "
                                 f"(level {d})"))

    top = flag.levels[flag.top_dim]
    covered = set(top) | {k.nu_simplex(f) for f in top}
    if covered != set(k.facets):
        bad.append(Violation("cover",
                             "H_n together with -H_n does not equal the complex"))
    return Report("hemisphere-flag", tuple(bad))


def verify_two_coloring(k: SymmetricComplex, kappa: TwoColoring) -> Report:
    """Antisymmetric (antipodes differ) and proper (no facet monochromatic)."""
    bad: list[Violation] = []
    if len(kappa.colors) != k.n_vertices:
        bad.append(Violation("coverage", "colouring length mismatch"))
        return Report("two-colouring", tuple(bad))
    for v in range(k.n_vertices):
        if kappa.colors[v] == kappa.colors[k.nu[v]]:
            bad.append(Violation("antisymmetry",
                                 f"vertices {v} and {k.nu[v]} share a colour"))
    for f in k.facets:
        if len({kappa.colors[v] for v in f}) == 1:
            bad.append(Violation("properness", f"facet {f} is monochromatic"))
    return Report("two-colouring", tuple(bad))


def cross_polytope(n: int) -> tuple[SymmetricComplex, Flag]:
    """Boundary of the (n+1)-dimensional cross-polytope with its standard flag.

    Vertex 2j is +e_{j+1} and vertex 2j+1 is -e_{j+1}; facets are all
    sign choices, and H_d is the full subcomplex on
    {+-e_1, ..., +-e_d, +e_{d+1}}.
    """
    if n < 1:
        raise ContractError(f"cross_polytope needs n >= 1, got {n}")
    axes = n + 1
    names = []
    for j in range(axes):
        names.extend((f"+e{j + 1}", f"-e{j + 1}"))
    nu = []
    for j in range(axes):
        nu.extend((2 * j + 1, 2 * j))
    facets = []
    for signs in itertools.product((0, 1), repeat=axes):
        facets.append(tuple(2 * j + s for j, s in enumerate(signs)))
    complex_ = SymmetricComplex.make(names, nu, facets, dim=n)
    levels = []
    for d in range(n + 1):
        level = []
        for signs in itertools.product((0, 1), repeat=d):
            level.append(tuple(2 * j + s for j, s in enumerate(signs)) + (2 * d,))
        levels.append(level)
    return complex_, Flag.make(levels)


def circle_complex(r: int) -> tuple[SymmetricComplex, TwoColoring, Flag]:
    """The cycle C_{4r+2} as a symmetric triangulation of the circle.

    The involution is the half turn, kappa alternates around the cycle,
    and the flag takes H_0 = {v_0} with H_1 the path v_0 .. v_{2r+1}.
    The quotient graph is the odd cycle C_{2r+1}.
    """
    if r < 1:
        raise ContractError(f"circle_complex needs r >= 1, got {r}")
    m = 4 * r + 2
    names = tuple(f"v{i}" for i in range(m))
    nu = tuple((i + 2 * r + 1) % m for i in range(m))
    facets = [tuple(sorted((i, (i + 1) % m))) for i in range(m)]
    complex_ = SymmetricComplex.make(names, nu, facets, dim=1)
    kappa = TwoColoring(tuple(i % 2 for i in range(m)))
    flag = Flag.make([[(0,)], [(i, i + 1) for i in range(2 * r + 1)]])
    return complex_, kappa, flag


@dataclass(frozen=True)
class Quotient:
    graph: Graph
    projection: tuple[int, ...]


def bichromatic_skeleton(k: SymmetricComplex, kappa: TwoColoring) -> Graph:
    """The 1-skeleton with monochromatic edges deleted (the double cover)."""
    edges = [(a, b) for a, b in k.edges()
             if kappa.colors[a] != kappa.colors[b]]
    return Graph.make(k.n_vertices, edges,
                      tuple(Base(name) for name in k.names))


def quotient_graph(k: SymmetricComplex, kappa: TwoColoring) -> Quotient:
    """Identify antipodal vertices of the bichromatic 1-skeleton."""
    verify_symmetric(k).require()
    verify_two_coloring(k, kappa).require()
    reps = sorted(v for v in range(k.n_vertices) if v < k.nu[v])
    index = {rep: i for i, rep in enumerate(reps)}
    projection = tuple(index[min(v, k.nu[v])] for v in range(k.n_vertices))
    edges = set()
    for a, b in k.edges():
        if kappa.colors[a] == kappa.colors[b]:
            continue
        pa, pb = projection[a], projection[b]
        edges.add((pa, pb) if pa < pb else (pb, pa))
    names = tuple(Base(k.names[rep]) for rep in reps)
    return Quotient(Graph.make(len(reps), sorted(edges), names), projection)
