"""Generators for the standard complex families, with topology metadata.

Vertex labels are deterministic (row-major over grid coordinates, bit order
for cubes), so generated complexes serialize to byte-identical documents.
Every generator goes through the validating builder except boundary
subcomplexes, which inherit validity from their parent complex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .complexes import (
    Complex,
    CubicalCell,
    CubicalComplex,
    SimplicialComplex,
    ValidationFailed,
    boundary_complex,
    build_cubical,
    build_simplicial,
)
from .vectors import reduced_euler
from .verify import is_pseudomanifold, is_pure

__all__ = [
    "GeneratedComplex",
    "TOPOLOGY_TAGS",
    "check_topology_metadata",
    "cube_boundary",
    "solid_cube",
    "pile_of_cubes",
    "pile_boundary",
    "cubical_torus",
    "stacked_cubical",
    "simplex",
    "simplex_boundary",
    "cross_polytope_boundary",
    "stacked_simplicial_ball",
    "stacked_sphere",
    "prism",
]

TOPOLOGY_TAGS = (
    "sphere",
    "ball",
    "torus",
    "closed-manifold",
    "manifold-with-boundary",
    "none",
)


@dataclass(frozen=True)
class GeneratedComplex:
    """A complex plus the topology its construction guarantees."""

    complex: Complex
    topology: str
    provenance: str
    polytopal: bool = False


def check_topology_metadata(gc: GeneratedComplex) -> None:
    """Cheap consistency checks between a complex and its topology tag.

    Closed tags need a pseudomanifold without free ridges; balls need
    reduced Euler characteristic zero and, in positive dimension, a
    nonempty boundary; the manifold-with-boundary tag needs a pure complex
    whose ridges lie in at most two facets.
    """
    C = gc.complex
    tag = gc.topology
    if tag not in TOPOLOGY_TAGS:
        raise ValidationFailed(f"unknown topology tag {tag!r}")
    if tag in ("sphere", "torus", "closed-manifold"):
        if not (is_pure(C) and is_pseudomanifold(C)):
            raise ValidationFailed(
                f"topology {tag!r} needs a closed pseudomanifold, got {C!r}"
            )
    elif tag == "ball":
        if reduced_euler(C) != 0:
            raise ValidationFailed(
                f"topology 'ball' needs reduced Euler characteristic 0, got {reduced_euler(C)}"
            )
        if not is_pure(C):
            raise ValidationFailed("topology 'ball' needs a pure complex")
        if C.dim >= 1 and boundary_complex(C).dim < 0:
            raise ValidationFailed("topology 'ball' needs a nonempty boundary")
    elif tag == "manifold-with-boundary":
        if not is_pure(C):
            raise ValidationFailed("topology 'manifold-with-boundary' needs a pure complex")
        degrees = set(C.ridge_degrees().values())
        if not degrees <= {1, 2}:
            raise ValidationFailed(
                f"topology 'manifold-with-boundary' allows ridge degrees 1 and 2, got {sorted(degrees)}"
            )
        if boundary_complex(C).dim < 0:
            raise ValidationFailed("topology 'manifold-with-boundary' needs a nonempty boundary")


def _insert_bit(m: int, position: int, bit: int) -> int:
    low = m & ((1 << position) - 1)
    high = m >> position
    return low | (bit << position) | (high << (position + 1))


def cube_boundary(n: int) -> GeneratedComplex:
    """Boundary of the n-cube: the 2n facets obtained by fixing one coordinate."""
    if n < 1:
        raise ValueError("cube_boundary needs n >= 1")
    cells = []
    for axis in range(n):
        for side in (0, 1):
            corners = tuple(_insert_bit(m, axis, side) for m in range(1 << (n - 1)))
            cells.append(CubicalCell(n - 1, corners))
    K = build_cubical(cells)
    return GeneratedComplex(K, "sphere", f"cube_boundary({n})", polytopal=True)


def solid_cube(n: int) -> GeneratedComplex:
    """The full n-cube as a single cell."""
    if n < 0:
        raise ValueError("solid_cube needs n >= 0")
    K = build_cubical([CubicalCell(n, tuple(range(1 << n)))])
    return GeneratedComplex(K, "ball", f"solid_cube({n})", polytopal=True)


def _grid_vertex(coords: tuple[int, ...], shape: tuple[int, ...]) -> int:
    vid = 0
    for c, s in zip(coords, shape):
        vid = vid * s + c
    return vid


def pile_of_cubes(*sides: int) -> GeneratedComplex:
    """Box-shaped grid of unit cubes, sides[t] cubes along axis t."""
    if not sides or any(a < 1 for a in sides):
        raise ValueError("pile_of_cubes needs positive side lengths")
    n = len(sides)
    shape = tuple(a + 1 for a in sides)
    cells = []
    for base in product(*[range(a) for a in sides]):
        corners = []
        for m in range(1 << n):
            coords = tuple(base[q] + (m >> q & 1) for q in range(n))
            corners.append(_grid_vertex(coords, shape))
        cells.append(CubicalCell(n, tuple(corners)))
    K = build_cubical(cells)
    label = ", ".join(str(a) for a in sides)
    return GeneratedComplex(K, "ball", f"pile_of_cubes({label})", polytopal=True)


def pile_boundary(*sides: int) -> GeneratedComplex:
    """Boundary sphere of a pile of cubes."""
    base = pile_of_cubes(*sides)
    K = boundary_complex(base.complex)
    label = ", ".join(str(a) for a in sides)
    return GeneratedComplex(K, "sphere", f"pile_boundary({label})", polytopal=True)


def cubical_torus(*sides: int) -> GeneratedComplex:
    """Grid on the d-torus: coordinates wrap modulo sides[t] (each >= 3)."""
    if not sides or any(a < 3 for a in sides):
        raise ValueError("cubical_torus needs every side length >= 3")
    n = len(sides)
    cells = []
    for base in product(*[range(a) for a in sides]):
        corners = []
        for m in range(1 << n):
            coords = tuple((base[q] + (m >> q & 1)) % sides[q] for q in range(n))
            corners.append(_grid_vertex(coords, sides))
        cells.append(CubicalCell(n, tuple(corners)))
    K = build_cubical(cells)
    label = ", ".join(str(a) for a in sides)
    return GeneratedComplex(K, "torus", f"cubical_torus({label})")


def stacked_cubical(n_cells: int, rank: int) -> tuple[GeneratedComplex, GeneratedComplex]:
    """A row of n_cells rank-dimensional cubes and its boundary sphere."""
    if n_cells < 1 or rank < 1:
        raise ValueError("stacked_cubical needs n_cells >= 1 and rank >= 1")
    sides = (n_cells,) + (1,) * (rank - 1)
    ball = pile_of_cubes(*sides)
    sphere = pile_boundary(*sides)
    label = f"stacked_cubical({n_cells}, {rank})"
    return (
        GeneratedComplex(ball.complex, "ball", label + " ball", polytopal=True),
        GeneratedComplex(sphere.complex, "sphere", label + " boundary", polytopal=True),
    )


def simplex(d: int) -> GeneratedComplex:
    """The full d-simplex on vertices 0..d."""
    if d < 0:
        raise ValueError("simplex needs d >= 0")
    S = build_simplicial([range(d + 1)])
    return GeneratedComplex(S, "ball", f"simplex({d})", polytopal=True)


def simplex_boundary(d: int) -> GeneratedComplex:
    """Boundary of the d-simplex, a (d-1)-sphere."""
    if d < 1:
        raise ValueError("simplex_boundary needs d >= 1")
    verts = range(d + 1)
    S = build_simplicial([[v for v in verts if v != skip] for skip in verts])
    return GeneratedComplex(S, "sphere", f"simplex_boundary({d})", polytopal=True)


def cross_polytope_boundary(d: int) -> GeneratedComplex:
    """Boundary of the d-dimensional cross polytope; vertices 2t and 2t+1
    are the antipodal pair on axis t."""
    if d < 1:
        raise ValueError("cross_polytope_boundary needs d >= 1")
    facets = [
        [2 * t + s for t, s in enumerate(signs)] for signs in product((0, 1), repeat=d)
    ]
    S = build_simplicial(facets)
    return GeneratedComplex(S, "sphere", f"cross_polytope_boundary({d})", polytopal=True)


def stacked_simplicial_ball(
    d: int, n_facets: int, gluing: str = "linear", seed: int | None = None
) -> GeneratedComplex:
    """Stacked d-ball: n_facets d-simplices glued facet-to-facet, each new
    simplex attached over a free ridge and bringing one new vertex.

    Linear gluing attaches to the previously added simplex; tree gluing
    picks a random free ridge of a random simplex (seeded)."""
    if d < 1 or n_facets < 1:
        raise ValueError("stacked_simplicial_ball needs d >= 1 and n_facets >= 1")
    if gluing not in ("linear", "tree"):
        raise ValueError("gluing must be 'linear' or 'tree'")
    facets = [frozenset(range(d + 1))]
    ridge_use: dict[frozenset, int] = {}

    def count(facet: frozenset) -> None:
        for v in facet:
            r = facet - {v}
            ridge_use[r] = ridge_use.get(r, 0) + 1

    count(facets[0])
    rng = random.Random(seed)
    next_vertex = d + 1
    for _ in range(n_facets - 1):
        if gluing == "linear":
            parent = facets[-1]
            ridge = parent - {min(parent)}
        else:
            while True:
                parent = rng.choice(facets)
                drop = rng.choice(sorted(parent))
                ridge = parent - {drop}
                if ridge_use[ridge] == 1:
                    break
        new_facet = ridge | {next_vertex}
        next_vertex += 1
        facets.append(new_facet)
        count(new_facet)
    S = build_simplicial(facets)
    tail = f", gluing={gluing!r}" if gluing != "linear" else ""
    tail += f", seed={seed}" if seed is not None else ""
    return GeneratedComplex(S, "ball", f"stacked_simplicial_ball({d}, {n_facets}{tail})")


def stacked_sphere(d: int, n_vertices: int) -> GeneratedComplex:
    """Stacked d-sphere on n_vertices vertices: boundary of a linearly
    stacked (d+1)-ball with n_vertices - d - 1 facets."""
    if d < 1:
        raise ValueError("stacked_sphere needs d >= 1")
    if n_vertices < d + 2:
        raise ValueError("a stacked d-sphere needs at least d + 2 vertices")
    ball = stacked_simplicial_ball(d + 1, n_vertices - d - 1)
    S = boundary_complex(ball.complex)
    return GeneratedComplex(S, "sphere", f"stacked_sphere({d}, {n_vertices})")


_PRISM_TOPOLOGY = {
    "ball": "ball",
    "sphere": "manifold-with-boundary",
    "torus": "manifold-with-boundary",
    "closed-manifold": "manifold-with-boundary",
    "manifold-with-boundary": "none",
    "none": "none",
}


def prism(base: GeneratedComplex) -> GeneratedComplex:
    """Product with a segment: every cell gains one free coordinate.

    Layer 0 keeps the original vertex ids, layer 1 shifts them by one more
    than the largest used id."""
    K = base.complex
    if K.kind != "cubical":
        raise ValueError("prism is defined for cubical complexes")
    if K.dim < 0:
        raise ValueError("prism needs a nonempty complex")
    offset = max(K.vertices) + 1
    cells = []
    for cell in K.cells:
        k = cell.dim
        corners = []
        for m in range(1 << (k + 1)):
            layer = m >> k
            corners.append(cell.corners[m & ((1 << k) - 1)] + layer * offset)
        cells.append(CubicalCell(k + 1, tuple(corners)))
    P = build_cubical(cells)
    return GeneratedComplex(
        P,
        _PRISM_TOPOLOGY[base.topology],
        f"prism({base.provenance})",
        polytopal=base.polytopal and base.topology == "ball",
    )
