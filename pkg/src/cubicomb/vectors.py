"""Enumerative vectors of complexes: f, h, short and long cubical h, g.

All transforms are exact integer computations derived from the defining
polynomial identities; no floating point is involved.  Simplicial and
cubical conventions are kept apart by a ``kind`` tag and mixing them is an
error, not a silent reinterpretation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import Complex, CubicalComplex

__all__ = [
    "FVector",
    "HVector",
    "GVector",
    "f_vector",
    "reduced_euler",
    "h_simplicial",
    "f_from_h_simplicial",
    "h_short_cubical_from_f",
    "h_short_cubical_from_links",
    "h_long_cubical",
    "g_vector",
]


def _neg_pow(m: int) -> int:
    """(-1)**m for any integer m, the empty-face exponent -1 included."""
    return 1 if m % 2 == 0 else -1


@dataclass(frozen=True)
class FVector:
    """Face counts; simplicial entries start at f_{-1}, cubical at f_0."""

    kind: str  # "simplicial" | "cubical"
    dim: int
    entries: tuple[int, ...]

    def f(self, i: int) -> int:
        if self.kind == "cubical":
            if i == -1:
                return 1
            pos = i
        else:
            pos = i + 1
        return self.entries[pos] if 0 <= pos < len(self.entries) else 0


@dataclass(frozen=True)
class HVector:
    """h-vector with its convention tag and the dimension it refers to.

    simplicial: entries h_0 .. h_{dim+1} (dim may be an ambient dimension
    when a lower dimensional complex is padded into a larger rank).
    short_cubical: entries h_0 .. h_dim.  long_cubical: h_0 .. h_{dim+1}.
    """

    kind: str  # "simplicial" | "short_cubical" | "long_cubical"
    dim: int
    entries: tuple[int, ...]

    def h(self, i: int) -> int:
        return self.entries[i] if 0 <= i < len(self.entries) else 0


@dataclass(frozen=True)
class GVector:
    """Consecutive h-differences, g_0 = h_0."""

    kind: str  # "simplicial" | "cubical" | "short_cubical"
    dim: int
    entries: tuple[int, ...]

    def g(self, i: int) -> int:
        return self.entries[i] if 0 <= i < len(self.entries) else 0


def f_vector(C: Complex) -> FVector:
    counts = C.f_counts()
    if C.kind == "simplicial":
        return FVector("simplicial", C.dim, (1,) + counts)
    return FVector("cubical", C.dim, counts)


def reduced_euler(x) -> int:
    """Alternating face-count sum including the empty face."""
    f = x if isinstance(x, FVector) else f_vector(x)
    return sum(_neg_pow(i) * f.f(i) for i in range(-1, f.dim + 1))


def h_simplicial(f: FVector, rank: int | None = None) -> HVector:
    """Simplicial h-vector from sum_i f_{i-1} t^i (1-t)^{rank-i}.

    ``rank`` defaults to dim+1 and may exceed it to treat the complex as
    sitting inside a larger ambient dimension (used for vertex links of
    non-pure complexes, where all links share the ambient rank).
    """
    if f.kind != "simplicial":
        raise ValueError("h_simplicial needs a simplicial f-vector")
    if rank is None:
        rank = f.dim + 1
    if rank < f.dim + 1:
        raise ValueError(f"rank {rank} is below the complex dimension {f.dim}")
    entries = tuple(
        sum(_neg_pow(j - i) * comb(rank - i, j - i) * f.f(i - 1) for i in range(j + 1))
        for j in range(rank + 1)
    )
    return HVector("simplicial", rank - 1, entries)


def f_from_h_simplicial(h: HVector) -> FVector:
    """Inverse of :func:`h_simplicial` at the same rank."""
    if h.kind != "simplicial":
        raise ValueError("f_from_h_simplicial needs a simplicial h-vector")
    rank = h.dim + 1
    entries = tuple(
        sum(comb(rank - j, i - j) * h.h(j) for j in range(i + 1))
        for i in range(rank + 1)
    )
    return FVector("simplicial", h.dim, entries)


def h_short_cubical_from_f(f: FVector) -> HVector:
    """Short cubical h-vector from sum_i f_i (2t)^i (1-t)^{d-i}."""
    if f.kind != "cubical":
        raise ValueError("h_short_cubical_from_f needs a cubical f-vector")
    d = f.dim
    if d < 0:
        raise ValueError("short cubical h-vector needs dimension >= 0")
    entries = tuple(
        sum(_neg_pow(j - i) * comb(d - i, j - i) * (1 << i) * f.f(i) for i in range(j + 1))
        for j in range(d + 1)
    )
    return HVector("short_cubical", d, entries)


def h_short_cubical_from_links(K: CubicalComplex) -> HVector:
    """Short cubical h-vector as the sum of vertex-link simplicial h-vectors.

    Independent of :func:`h_short_cubical_from_f`: link face counts are read
    off the vertex coface counts, and every link is taken at ambient rank d,
    which keeps the identity valid on non-pure complexes.
    """
    d = K.dim
    if d < 0:
        raise ValueError("short cubical h-vector needs dimension >= 0")
    totals = [0] * (d + 1)
    for v in K.vertices:
        counts = K.vertex_coface_counts[v]
        link_f = FVector("simplicial", d - 1, (1,) + counts[1:])
        link_h = h_simplicial(link_f, rank=d)
        for j, value in enumerate(link_h.entries):
            totals[j] += value
    return HVector("short_cubical", d, tuple(totals))


def h_long_cubical(x) -> HVector:
    """Long cubical h-vector: h_0 = 2^d and h_{i+1} = h^{sc}_i - h_i."""
    if isinstance(x, HVector):
        if x.kind != "short_cubical":
            raise ValueError("h_long_cubical needs a short cubical h-vector")
        hsc = x
    else:
        hsc = h_short_cubical_from_f(f_vector(x))
    d = hsc.dim
    entries = [1 << d]
    for i in range(d + 1):
        entries.append(hsc.h(i) - entries[i])
    return HVector("long_cubical", d, tuple(entries))


_G_KIND = {"simplicial": "simplicial", "long_cubical": "cubical", "short_cubical": "short_cubical"}


def g_vector(h: HVector, upto: int | None = None) -> GVector:
    """g_i = h_i - h_{i-1} for i = 0..upto; entries beyond the h-vector are 0."""
    if upto is None:
        upto = len(h.entries) - 1
    entries = tuple(h.h(i) - h.h(i - 1) for i in range(upto + 1))
    return GVector(_G_KIND[h.kind], h.dim, entries)
