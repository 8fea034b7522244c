"""Classification predicates and exact verification of enumerative identities.

Verifiers accept either a bare complex or a generated complex carrying
topology metadata; stated hypotheses (sphere or ball flags, parity of the
dimension, Euler conditions, per-vertex premises) become preconditions of
the report.  Checks always store both compared sides exactly.
"""

from __future__ import annotations

from math import comb

from .complexes import NotPure
from .macaulay import pseudopower
from .report import Check, Precondition, make_report, VerificationReport
from .vectors import (
    FVector,
    HVector,
    f_vector,
    g_vector,
    h_long_cubical,
    h_short_cubical_from_f,
    h_short_cubical_from_links,
    h_simplicial,
    reduced_euler,
)
from .vectors import _neg_pow

__all__ = [
    "is_pure",
    "is_pseudomanifold",
    "is_semi_eulerian",
    "is_eulerian",
    "verify_adin_ds",
    "verify_vertex_pair_bound",
    "verify_vertex_lower_bound",
    "verify_face_lower_bounds",
    "verify_h_vector_identities",
    "verify_stacked_link_plateau",
    "verify_four_sphere_glbc",
    "verify_middle_glbc",
    "verify_alternating_g_sum",
    "verify_small_g2_glbc",
    "verify_small_link_glbc",
    "verify_simplicial_boundary_ds",
    "verify_cubical_boundary_ds",
    "verify_cubical_ball_ds",
    "CUBICAL_VERIFIERS",
    "SIMPLICIAL_VERIFIERS",
    "SUITES",
    "run_suite",
]


def _sphere_chi(m: int) -> int:
    """Reduced Euler characteristic of the m-sphere; -1 for m = -1."""
    return 1 if m % 2 == 0 else -1


def _parts(x):
    C = getattr(x, "complex", x)
    return C, getattr(x, "topology", "none"), bool(getattr(x, "polytopal", False))


def is_pure(C) -> bool:
    """All inclusion-maximal faces share the top dimension."""
    if C.kind == "cubical":
        return all(cell.dim == C.dim for cell in C.cells)
    return all(len(cell) - 1 == C.dim for cell in C.cells)


def is_pseudomanifold(C) -> bool:
    """Pure with every ridge in exactly two facets (two vertices when dim 0)."""
    if not is_pure(C):
        raise NotPure("pseudomanifold test needs a pure complex")
    if C.dim < 0:
        return False
    if C.dim == 0:
        return len(C.vertices) == 2
    return all(n == 2 for n in C.ridge_degrees().values())


def is_semi_eulerian(K) -> bool:
    """Every nonempty face link has the Euler characteristic of a sphere."""
    if not is_pure(K):
        raise NotPure("the Euler condition is checked on pure complexes")
    d = K.dim
    if K.kind == "cubical":
        dim_of = {key: K.faces[key].dim for key in K.link_euler}
    else:
        dim_of = {key: len(key) - 1 for key in K.link_euler}
    return all(
        value == _sphere_chi(d - dim_of[key] - 1) for key, value in K.link_euler.items()
    )


def is_eulerian(K) -> bool:
    """Semi-Eulerian with the global Euler characteristic of the d-sphere."""
    return is_semi_eulerian(K) and reduced_euler(K) == _sphere_chi(K.dim)


def _link_h_vectors(K) -> dict[int, HVector]:
    """Simplicial h-vector of every vertex link, taken at ambient rank d."""
    d = K.dim
    out = {}
    for v in K.vertices:
        counts = K.vertex_coface_counts[v]
        link_f = FVector("simplicial", d - 1, (1,) + counts[1:])
        out[v] = h_simplicial(link_f, rank=d)
    return out


def _cubical_gate(x, name: str):
    """Shared precondition prefix: cubical, nonempty, pure."""
    C, topo, poly = _parts(x)
    pre = [Precondition("cubical complex", C.kind == "cubical")]
    if C.kind != "cubical":
        return C, topo, poly, pre, make_report(name, pre)
    pre.append(Precondition("nonempty", C.dim >= 0, f"dim {C.dim}"))
    if C.dim < 0:
        return C, topo, poly, pre, make_report(name, pre)
    pure = is_pure(C)
    pre.append(Precondition("pure", pure))
    if not pure:
        return C, topo, poly, pre, make_report(name, pre)
    return C, topo, poly, pre, None


def verify_adin_ds(x) -> VerificationReport:
    """Dehn-Sommerville for closed complexes: paired long cubical h-entries
    differ by a multiple of the Euler characteristic defect, and the short
    cubical h-vector is symmetric."""
    name = "adin-dehn-sommerville"
    C, _, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    semi = is_semi_eulerian(C)
    chi = reduced_euler(C)
    pre.append(Precondition("semi-Eulerian", semi, f"reduced Euler {chi}"))
    if not semi:
        return make_report(name, pre)
    d = C.dim
    hsc = h_short_cubical_from_f(f_vector(C))
    hc = h_long_cubical(hsc)
    defect = chi - _sphere_chi(d)
    checks = [
        Check(f"long i={i}", hc.h(d + 1 - i) - hc.h(i), _neg_pow(i) * (-2) ** d * defect)
        for i in range(d + 2)
    ]
    checks += [
        Check(f"short-symmetry i={i}", hsc.h(i), hsc.h(d - i)) for i in range(d + 1)
    ]
    return make_report(name, pre, checks)


def verify_vertex_pair_bound(x) -> VerificationReport:
    """The weighted face count sum_i 2^i f_i is at most f_0^2, with the
    refined form sum_{i>=1} 2^{i-1} f_i <= C(f_0, 2)."""
    name = "vertex-pair-bound"
    C, _, _ = _parts(x)
    pre = [Precondition("cubical complex", C.kind == "cubical")]
    if C.kind != "cubical":
        return make_report(name, pre)
    pre.append(Precondition("dimension >= 1", C.dim >= 1, f"dim {C.dim}"))
    if C.dim < 1:
        return make_report(name, pre)
    f = f_vector(C)
    d = C.dim
    total = sum((1 << i) * f.f(i) for i in range(d + 1))
    positive = sum((1 << (i - 1)) * f.f(i) for i in range(1, d + 1))
    checks = [
        Check("sum 2^i f_i <= f_0^2", total, f.f(0) ** 2, "<="),
        Check("sum_{i>=1} 2^(i-1) f_i <= C(f_0, 2)", positive, comb(f.f(0), 2), "<="),
    ]
    return make_report(name, pre, checks)


def verify_vertex_lower_bound(x) -> VerificationReport:
    """Closed pseudomanifolds of dimension >= 2 need at least 2^(d+1)
    vertices; the proof chain and its equality case are checked too."""
    name = "vertex-count-lower-bound"
    C, _, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    pm = is_pseudomanifold(C)
    pre.append(Precondition("closed pseudomanifold", pm))
    pre.append(Precondition("dimension >= 2", C.dim >= 2, f"dim {C.dim}"))
    if not pm or C.dim < 2:
        return make_report(name, pre)
    d = C.dim
    f = f_vector(C)
    hc = h_long_cubical(C)
    f0 = f.f(0)
    total = sum((1 << i) * f.f(i) for i in range(d + 1))
    floor = f0 * ((1 << (d + 1)) - 1)
    checks = [
        Check("f_0 >= 2^(d+1)", f0, 1 << (d + 1), ">="),
        Check("h[c][1] >= h[c][0]", hc.h(1), hc.h(0), ">="),
        Check("sum 2^i f_i >= f_0 (2^(d+1) - 1)", total, floor, ">="),
    ]
    degrees = [C.vertex_coface_counts[v][d] for v in C.vertices]
    if total == floor:
        off = sum(1 for n in degrees if n != d + 1)
        checks.append(Check("equality forces facet degree d+1", off, 0, "=="))
    if all(n == d + 1 for n in degrees):
        checks.append(Check("facet degree d+1 forces equality", total, floor, "=="))
        checks.append(Check("2^d divides (d+1) f_0", ((d + 1) * f0) % (1 << d), 0, "=="))
    return make_report(name, pre, checks)


def verify_face_lower_bounds(x) -> VerificationReport:
    """Per-dimension face count bounds f_i >= C(d+1, i) 2^(d+1-i) on closed
    pseudomanifolds, through the per-vertex link bounds."""
    name = "face-count-lower-bounds"
    C, _, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    pm = is_pseudomanifold(C)
    pre.append(Precondition("closed pseudomanifold", pm))
    pre.append(Precondition("dimension >= 2", C.dim >= 2, f"dim {C.dim}"))
    if not pm or C.dim < 2:
        return make_report(name, pre)
    d = C.dim
    f = f_vector(C)
    checks = [
        Check(f"f[{i}]", f.f(i), comb(d + 1, i) * (1 << (d + 1 - i)), ">=")
        for i in range(d + 1)
    ]
    counts = C.vertex_coface_counts
    for i in range(1, d + 1):
        worst = min(C.vertices, key=lambda v: counts[v][i])
        checks.append(
            Check(
                f"min_v f[{i - 1}](lk v)",
                counts[worst][i],
                comb(d + 1, i),
                ">=",
                context=f"vertex {worst}",
            )
        )
    return make_report(name, pre, checks)


def verify_h_vector_identities(x) -> VerificationReport:
    """Unconditional identities tying f, the two short cubical h routes, the
    long cubical h-vector and the per-vertex double counting together."""
    name = "h-vector-identities"
    C, _, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    d = C.dim
    f = f_vector(C)
    hsc = h_short_cubical_from_f(f)
    hsc_links = h_short_cubical_from_links(C)
    hc = h_long_cubical(hsc)
    chi = reduced_euler(f)
    checks = [
        Check("h[sc][0] == f_0", hsc.h(0), f.f(0)),
        Check("sum h[sc] == 2^d f_d", sum(hsc.entries), (1 << d) * f.f(d)),
        Check("h[c][1] == f_0 - 2^d", hc.h(1), f.f(0) - (1 << d)),
        Check("h[c][d+1] == (-2)^d chi", hc.h(d + 1), (-2) ** d * chi),
    ]
    for j in range(d + 1):
        checks.append(Check(f"link-sum j={j}", hsc_links.h(j), hsc.h(j)))
    for i in range(1, d + 1):
        checks.append(
            Check(
                f"difference i={i}",
                hc.h(i + 1) - hc.h(i - 1),
                hsc.h(i) - hsc.h(i - 1),
            )
        )
    for i in range(d + 1):
        closed = _neg_pow(i + 1) * hc.h(0) + sum(
            _neg_pow(i - j) * hsc.h(j) for j in range(i + 1)
        )
        checks.append(Check(f"closed-form i={i}", hc.h(i + 1), closed))
    counts = C.vertex_coface_counts
    for i in range(1, d + 1):
        checks.append(
            Check(
                f"double-count i={i}",
                (1 << i) * f.f(i),
                sum(counts[v][i] for v in C.vertices),
            )
        )
    return make_report(name, pre, checks)


def verify_stacked_link_plateau(x) -> VerificationReport:
    """If every vertex link of an Eulerian complex of even dimension has a
    constant inner h-vector, the long cubical h-vector is constant on
    indices 1..d."""
    name = "stacked-link-plateau"
    C, _, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    d = C.dim
    pre.append(Precondition("even dimension >= 2", d >= 2 and d % 2 == 0, f"dim {d}"))
    if d < 2 or d % 2:
        return make_report(name, pre)
    eulerian = is_eulerian(C)
    pre.append(Precondition("Eulerian", eulerian, f"reduced Euler {reduced_euler(C)}"))
    if not eulerian:
        return make_report(name, pre)
    links = _link_h_vectors(C)
    offender = None
    for v in C.vertices:
        inner = links[v].entries[1:d]
        if any(value != inner[0] for value in inner):
            offender = (v, links[v].entries)
            break
    pre.append(
        Precondition(
            "every vertex link has h_1 = ... = h_{d-1}",
            offender is None,
            "" if offender is None else f"vertex {offender[0]} has link h {offender[1]}",
        )
    )
    if offender is not None:
        return make_report(name, pre)
    hc = h_long_cubical(C)
    checks = [
        Check(f"h[c][{i}] == h[c][{i + 1}]", hc.h(i), hc.h(i + 1)) for i in range(1, d)
    ]
    return make_report(name, pre, checks)


def _eulerian_sphere_gate(x, name: str, need_polytopal: bool):
    """Preconditions shared by the generalized lower bound checks on spheres."""
    C, topo, poly, pre, bail = _cubical_gate(x, name)
    if bail:
        return C, pre, bail
    pre.append(Precondition("flagged as a sphere", topo == "sphere", f"topology {topo}"))
    if need_polytopal:
        pre.append(Precondition("flagged polytopal", poly))
    d = C.dim
    pre.append(Precondition("even dimension >= 2", d >= 2 and d % 2 == 0, f"dim {d}"))
    ok_so_far = all(p.ok for p in pre)
    if not ok_so_far:
        return C, pre, make_report(name, pre)
    eulerian = is_eulerian(C)
    pre.append(Precondition("Eulerian", eulerian, f"reduced Euler {reduced_euler(C)}"))
    if not eulerian:
        return C, pre, make_report(name, pre)
    return C, pre, None


def verify_four_sphere_glbc(x) -> VerificationReport:
    """g_2 of the long cubical h-vector of a 4-dimensional sphere is
    nonnegative, witnessed by the vertex-link rigidity sum."""
    name = "four-sphere-glbc"
    C, topo, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    pre.append(Precondition("flagged as a sphere", topo == "sphere", f"topology {topo}"))
    pre.append(Precondition("dimension 4", C.dim == 4, f"dim {C.dim}"))
    if topo != "sphere" or C.dim != 4:
        return make_report(name, pre)
    eulerian = is_eulerian(C)
    pre.append(Precondition("Eulerian", eulerian, f"reduced Euler {reduced_euler(C)}"))
    if not eulerian:
        return make_report(name, pre)
    hsc = h_short_cubical_from_f(f_vector(C))
    hc = h_long_cubical(hsc)
    links = _link_h_vectors(C)
    link_sum = sum(h.h(2) - h.h(1) for h in links.values())
    g2c = hc.h(2) - hc.h(1)
    checks = [
        Check("g[c][2] >= 0", g2c, 0, ">="),
        Check("g[c][2] == g[sc][2]", g2c, hsc.h(2) - hsc.h(1)),
        Check("sum_v (h_2 - h_1)(lk v) >= 0", link_sum, 0, ">="),
        Check("g[c][2] == link sum", g2c, link_sum),
    ]
    return make_report(name, pre, checks)


def verify_middle_glbc(x) -> VerificationReport:
    """The middle short cubical g-entry of a polytopal sphere of even
    dimension 2k is nonnegative, hence so is g[c][k]."""
    name = "middle-g-nonnegative"
    C, pre, bail = _eulerian_sphere_gate(x, name, need_polytopal=True)
    if bail:
        return bail
    k = C.dim // 2
    hsc = h_short_cubical_from_f(f_vector(C))
    hc = h_long_cubical(hsc)
    checks = [
        Check("h[sc][k] >= h[sc][k-1]", hsc.h(k), hsc.h(k - 1), ">="),
        Check("g[c][k] >= 0", hc.h(k) - hc.h(k - 1), 0, ">="),
        Check("h[c][k+1] == h[c][k]", hc.h(k + 1), hc.h(k)),
    ]
    return make_report(name, pre, checks)


def verify_alternating_g_sum(x) -> VerificationReport:
    """On spheres of dimension 2k the long cubical g-entries telescope into
    alternating sums of short cubical g-entries."""
    name = "alternating-g-sum"
    C, pre, bail = _eulerian_sphere_gate(x, name, need_polytopal=False)
    if bail:
        return bail
    k = C.dim // 2
    hsc = h_short_cubical_from_f(f_vector(C))
    hc = h_long_cubical(hsc)
    gsc = g_vector(hsc)
    checks = []
    for i in range(1, k + 1):
        rhs = sum(_neg_pow(j - i) * gsc.g(j) for j in range(i, k + 1))
        checks.append(Check(f"i={i}", hc.h(i) - hc.h(i - 1), rhs))
    return make_report(name, pre, checks)


def verify_small_g2_glbc(x) -> VerificationReport:
    """Polytopal spheres of dimension 2k whose vertex links all satisfy
    g_2 <= 2 have a nondecreasing long cubical h-vector up to the middle;
    the pseudopower cascade that drives the proof is checked per vertex."""
    name = "small-g2-glbc"
    C, pre, bail = _eulerian_sphere_gate(x, name, need_polytopal=True)
    if bail:
        return bail
    d = C.dim
    k = d // 2
    links = _link_h_vectors(C)
    link_g = {
        v: [h.h(i) - h.h(i - 1) for i in range(d + 1)] for v, h in links.items()
    }
    worst = max(C.vertices, key=lambda v: link_g[v][2])
    premise = link_g[worst][2] <= 2
    pre.append(
        Precondition(
            "every vertex link has g_2 <= 2",
            premise,
            f"max g_2(lk v) = {link_g[worst][2]} at vertex {worst}",
        )
    )
    if not premise:
        return make_report(name, pre)
    hc = h_long_cubical(C)
    checks = [
        Check(f"h[c][{i}] >= h[c][{i - 1}]", hc.h(i), hc.h(i - 1), ">=")
        for i in range(1, k + 1)
    ]
    for i in range(2, k + 1):
        top = max(C.vertices, key=lambda v: link_g[v][i])
        checks.append(
            Check(f"max_v g[{i}](lk v) <= 2", link_g[top][i], 2, "<=", context=f"vertex {top}")
        )
    for i in range(2, k):
        drop = sum(1 for v in C.vertices if link_g[v][i + 1] > link_g[v][i])
        checks.append(Check(f"g[{i + 1}] <= g[{i}] at every vertex", drop, 0, "=="))
        cascade = sum(
            1 for v in C.vertices if link_g[v][i + 1] > pseudopower(max(link_g[v][i], 0), i)
        )
        checks.append(Check(f"g[{i + 1}] <= g[{i}]^<{i}> at every vertex", cascade, 0, "=="))
    if k >= 2:
        low = min(C.vertices, key=lambda v: link_g[v][k])
        checks.append(
            Check("min_v g[k](lk v) >= 0", link_g[low][k], 0, ">=", context=f"vertex {low}")
        )
    return make_report(name, pre, checks)


def verify_small_link_glbc(x) -> VerificationReport:
    """Spheres of dimension 2k whose vertex links have at most 2k+2 vertices
    satisfy the same monotonicity of the long cubical h-vector."""
    name = "small-link-glbc"
    C, pre, bail = _eulerian_sphere_gate(x, name, need_polytopal=False)
    if bail:
        return bail
    d = C.dim
    k = d // 2
    counts = C.vertex_coface_counts
    fat = [v for v in C.vertices if counts[v][1] not in (2 * k + 1, 2 * k + 2)]
    pre.append(
        Precondition(
            "every vertex link has 2k+1 or 2k+2 vertices",
            not fat,
            "" if not fat else f"vertex {fat[0]} has {counts[fat[0]][1]} link vertices",
        )
    )
    if fat:
        return make_report(name, pre)
    links = _link_h_vectors(C)
    link_g = {
        v: [h.h(i) - h.h(i - 1) for i in range(d + 1)] for v, h in links.items()
    }
    top = max(C.vertices, key=lambda v: link_g[v][1])
    hc = h_long_cubical(C)
    checks = [
        Check("max_v g[1](lk v) <= 1", link_g[top][1], 1, "<=", context=f"vertex {top}")
    ]
    checks += [
        Check(f"h[c][{i}] >= h[c][{i - 1}]", hc.h(i), hc.h(i - 1), ">=")
        for i in range(1, k + 1)
    ]
    for i in range(1, k):
        drop = sum(1 for v in C.vertices if link_g[v][i + 1] > link_g[v][i])
        checks.append(Check(f"g[{i + 1}] <= g[{i}] at every vertex", drop, 0, "=="))
        cascade = sum(
            1 for v in C.vertices if link_g[v][i + 1] > pseudopower(max(link_g[v][i], 0), i)
        )
        checks.append(Check(f"g[{i + 1}] <= g[{i}]^<{i}> at every vertex", cascade, 0, "=="))
    return make_report(name, pre, checks)


def verify_simplicial_boundary_ds(x) -> VerificationReport:
    """Dehn-Sommerville with a boundary correction for simplicial manifolds:
    h_{D-i} - h_i equals C(D, i) (-1)^(D-i-1) chi minus g_i of the boundary,
    the boundary h-vector taken at ambient rank D-1 (all-zero face counts
    when the boundary is empty)."""
    from .complexes import boundary_complex

    name = "simplicial-boundary-ds"
    C, topo, _ = _parts(x)
    pre = [Precondition("simplicial complex", C.kind == "simplicial")]
    if C.kind != "simplicial":
        return make_report(name, pre)
    pre.append(Precondition("nonempty", C.dim >= 0, f"dim {C.dim}"))
    if C.dim < 0:
        return make_report(name, pre)
    pure = is_pure(C)
    pre.append(Precondition("pure", pure))
    if not pure:
        return make_report(name, pre)
    degrees = set(C.ridge_degrees().values())
    pre.append(
        Precondition(
            "every ridge lies in one or two facets",
            degrees <= {1, 2},
            f"degrees {sorted(degrees)}",
        )
    )
    pre.append(
        Precondition(
            "flagged as a manifold with boundary",
            topo in ("ball", "manifold-with-boundary"),
            f"topology {topo}",
        )
    )
    boundary = boundary_complex(C)
    pre.append(
        Precondition(
            "nonempty boundary (a point may have none)",
            boundary.dim >= 0 or C.dim == 0,
            f"boundary dim {boundary.dim}",
        )
    )
    if not degrees <= {1, 2}:
        return make_report(name, pre)
    D = C.dim + 1
    h = h_simplicial(f_vector(C))
    hb = h_simplicial(f_vector(boundary), rank=D - 1)
    chi = reduced_euler(C)
    checks = []
    for i in range(D + 1):
        rhs = comb(D, i) * _neg_pow(D - i - 1) * chi - (hb.h(i) - hb.h(i - 1))
        checks.append(Check(f"i={i}", h.h(D - i) - h.h(i), rhs))
    return make_report(name, pre, checks)


def _short_from_counts(counts: dict[int, int], d: int) -> HVector:
    f = FVector("cubical", d, tuple(counts.get(i, 0) for i in range(d + 1)))
    return h_short_cubical_from_f(f)


def verify_cubical_boundary_ds(x) -> VerificationReport:
    """Dehn-Sommerville with a boundary correction for cubical manifolds,
    plus the interior-face reformulation: the interior short h-vector equals
    the reversed short h-vector and h^{sc} minus the boundary g^{sc}."""
    from .complexes import boundary_complex

    name = "cubical-boundary-ds"
    C, topo, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    pre.append(Precondition("dimension >= 1", C.dim >= 1, f"dim {C.dim}"))
    if C.dim < 1:
        return make_report(name, pre)
    degrees = set(C.ridge_degrees().values())
    pre.append(
        Precondition(
            "every ridge lies in one or two facets",
            degrees <= {1, 2},
            f"degrees {sorted(degrees)}",
        )
    )
    pre.append(
        Precondition(
            "flagged as a manifold with boundary",
            topo in ("ball", "manifold-with-boundary"),
            f"topology {topo}",
        )
    )
    boundary = boundary_complex(C)
    pre.append(
        Precondition("nonempty boundary", boundary.dim >= 0, f"boundary dim {boundary.dim}")
    )
    if not degrees <= {1, 2}:
        return make_report(name, pre)
    d = C.dim
    chi = reduced_euler(C)
    hsc = h_short_cubical_from_f(f_vector(C))
    hc = h_long_cubical(hsc)
    if boundary.dim >= 0:
        hsc_b = h_short_cubical_from_f(
            FVector("cubical", d - 1, boundary.f_counts() + (0,) * (d - boundary.dim - 1))
        )
    else:
        hsc_b = HVector("short_cubical", d - 1, (0,) * d)
    hc_b = h_long_cubical(hsc_b)
    checks = []
    for j in range(1, d + 1):
        rhs = _neg_pow(j) * (-2) ** d * chi - (hc_b.h(j) - hc_b.h(j - 1))
        checks.append(Check(f"j={j}", hc.h(d + 1 - j) - hc.h(j), rhs))
    boundary_keys = boundary.faces.keys() if boundary.dim >= 0 else set()
    interior: dict[int, int] = {}
    for key, face in C.faces.items():
        if key not in boundary_keys:
            interior[face.dim] = interior.get(face.dim, 0) + 1
    hsc_interior = _short_from_counts(interior, d)
    for j in range(d + 1):
        checks.append(Check(f"interior-reversal j={j}", hsc_interior.h(j), hsc.h(d - j)))
    for j in range(d + 1):
        rhs = hsc.h(j) - (hsc_b.h(j) - hsc_b.h(j - 1))
        checks.append(Check(f"interior-relation j={j}", hsc_interior.h(j), rhs))
    return make_report(name, pre, checks)


def verify_cubical_ball_ds(x) -> VerificationReport:
    """For cubical balls the Dehn-Sommerville defect of the long h-vector is
    exactly minus the boundary long g-vector."""
    from .complexes import boundary_complex

    name = "cubical-ball-ds"
    C, topo, _, pre, bail = _cubical_gate(x, name)
    if bail:
        return bail
    pre.append(Precondition("flagged as a ball", topo == "ball", f"topology {topo}"))
    pre.append(Precondition("dimension >= 1", C.dim >= 1, f"dim {C.dim}"))
    if topo != "ball" or C.dim < 1:
        return make_report(name, pre)
    chi = reduced_euler(C)
    pre.append(Precondition("reduced Euler 0", chi == 0, f"reduced Euler {chi}"))
    boundary = boundary_complex(C)
    pre.append(
        Precondition("nonempty boundary", boundary.dim >= 0, f"boundary dim {boundary.dim}")
    )
    if chi != 0 or boundary.dim < 0:
        return make_report(name, pre)
    d = C.dim
    hc = h_long_cubical(C)
    hc_b = h_long_cubical(boundary)
    checks = [
        Check(f"i={i}", hc.h(d + 1 - i) - hc.h(i), -(hc_b.h(i) - hc_b.h(i - 1)))
        for i in range(1, d + 1)
    ]
    return make_report(name, pre, checks)


CUBICAL_VERIFIERS = (
    verify_adin_ds,
    verify_vertex_pair_bound,
    verify_vertex_lower_bound,
    verify_face_lower_bounds,
    verify_h_vector_identities,
    verify_stacked_link_plateau,
    verify_four_sphere_glbc,
    verify_middle_glbc,
    verify_alternating_g_sum,
    verify_small_g2_glbc,
    verify_small_link_glbc,
    verify_cubical_boundary_ds,
    verify_cubical_ball_ds,
)

SIMPLICIAL_VERIFIERS = (verify_simplicial_boundary_ds,)

SUITES: dict[str, tuple[str, tuple]] = {
    "adin-ds": ("cubical", (verify_adin_ds,)),
    "lbt": ("cubical", (verify_vertex_pair_bound, verify_vertex_lower_bound)),
    "face-bounds": ("cubical", (verify_face_lower_bounds,)),
    "h-identities": ("cubical", (verify_h_vector_identities,)),
    "glbc": (
        "cubical",
        (
            verify_stacked_link_plateau,
            verify_four_sphere_glbc,
            verify_middle_glbc,
            verify_alternating_g_sum,
            verify_small_g2_glbc,
            verify_small_link_glbc,
        ),
    ),
    "boundary-ds": ("cubical", (verify_cubical_boundary_ds, verify_cubical_ball_ds)),
    "ns-ds": ("simplicial", (verify_simplicial_boundary_ds,)),
}


def run_suite(suite: str, x) -> list[VerificationReport]:
    """Run a named verifier suite; "all" runs everything matching the kind."""
    C, _, _ = _parts(x)
    if suite == "all":
        fns = CUBICAL_VERIFIERS if C.kind == "cubical" else SIMPLICIAL_VERIFIERS
        return [fn(x) for fn in fns]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    kind, fns = SUITES[suite]
    if kind != C.kind:
        raise ValueError(f"suite {suite!r} applies to {kind} complexes, got {C.kind}")
    return [fn(x) for fn in fns]
