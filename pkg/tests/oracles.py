"""Independent reference computations used to pin expected test values.

Everything here deliberately takes a different route than the package:
h-vectors come from literal polynomial expansion, grid faces from direct
interval enumeration, and poset properties from brute-force scans.
"""

from itertools import combinations, product


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a, k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return out


def h_simplicial_poly(f_entries, rank):
    """Coefficients of sum_i f_{i-1} t^i (1-t)^(rank-i); f_entries[0] = f_{-1}."""
    total = [0]
    for i, fi in enumerate(f_entries):
        term = poly_mul([fi], poly_mul(poly_pow([0, 1], i), poly_pow([1, -1], rank - i)))
        total = poly_add(total, term)
    total += [0] * (rank + 1 - len(total))
    return tuple(total[: rank + 1])


def h_short_cubical_poly(f_entries, d):
    """Coefficients of sum_i f_i (2t)^i (1-t)^(d-i); f_entries[0] = f_0."""
    total = [0]
    for i, fi in enumerate(f_entries):
        term = poly_mul([fi], poly_mul(poly_pow([0, 2], i), poly_pow([1, -1], d - i)))
        total = poly_add(total, term)
    total += [0] * (d + 1 - len(total))
    return tuple(total[: d + 1])


def grid_vertex(coords, shape):
    vid = 0
    for c, s in zip(coords, shape):
        vid = vid * s + c
    return vid


def pile_face_sets(sides):
    """Every face of the grid of unit cubes, as a frozenset of vertex ids.

    A face picks, per axis, either a single coordinate or a unit interval.
    """
    shape = tuple(a + 1 for a in sides)
    choices = []
    for a in sides:
        per_axis = [(c,) for c in range(a + 1)] + [(c, c + 1) for c in range(a)]
        choices.append(per_axis)
    faces = set()
    for combo in product(*choices):
        verts = frozenset(
            grid_vertex(coords, shape) for coords in product(*combo)
        )
        faces.add(verts)
    return faces


def torus_face_sets(sides):
    """Every face of the wrap-around grid, as a frozenset of vertex ids."""
    choices = []
    for a in sides:
        per_axis = [(c,) for c in range(a)] + [(c, (c + 1) % a) for c in range(a)]
        choices.append(per_axis)
    faces = set()
    for combo in product(*choices):
        verts = frozenset(grid_vertex(coords, sides) for coords in product(*combo))
        faces.add(verts)
    return faces


def pile_f_counts(sides):
    """Closed product formula: choose which axes are intervals."""
    n = len(sides)
    counts = [0] * (n + 1)
    for k in range(n + 1):
        total = 0
        for interval_axes in combinations(range(n), k):
            prod = 1
            for t, a in enumerate(sides):
                prod *= a if t in interval_axes else a + 1
            total += prod
        counts[k] = total
    return tuple(counts)


def brute_pairwise_closed(faces):
    """Every pairwise intersection of faces is empty or again a face."""
    keys = list(faces)
    for i, a in enumerate(keys):
        for b in keys[i + 1 :]:
            inter = a & b
            if inter and inter not in faces:
                return False
    return True


def brute_least_upper_bounds(faces, u, v):
    """All inclusion-minimal faces containing both u and v."""
    containing = [k for k in faces if u in k and v in k]
    return [k for k in containing if not any(o < k for o in containing)]
