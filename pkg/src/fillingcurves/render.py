"""SVG drawing of a dessin's fundamental domain in the Poincare disk.

The base tile has corners (face centre, black vertex, white vertex, black
vertex across the white one); tile i is its image under the matrix of the
spanning-tree word reaching label i.  Label i's dessin edge is the segment
from its white vertex to its first black vertex, so every edge appears once.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass, field
from xml.sax.saxutils import quoteattr

import numpy as np

from .curve import decompose
from .dessin import Dessin
from .errors import DessinError
from .fuchsian import _check_fuchsian_input, spanning_tree, word_matrix
from .hypgeom import classify_isometry, is_projective_identity, mobius, to_disk, triangle_group_matrices

GEOMETRY_TOL = 1e-6
DIAMETER_TOL = 1e-9

_BASE_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#e377c2", "#8c564b")


@dataclass(frozen=True)
class Arc:
    """Geodesic from ``start`` to ``end``; ``center`` is None for a diameter segment."""

    start: complex
    end: complex
    center: complex | None
    radius: float | None
    layer: str  # "spoke", "face", "dessin" or "curve"
    label: int
    component: int | None = None

    def orthogonality_defect(self) -> float:
        if self.center is None:
            return 0.0
        # cosine of the angle between this circle and the unit circle
        return abs(abs(self.center) ** 2 - 1 - self.radius**2) / (2 * self.radius)


def geodesic_arc(p: complex, q: complex, layer: str, label: int, component: int | None = None) -> Arc:
    chord = abs(q - p)
    if chord == 0 or abs((p.conjugate() * q).imag) / chord < DIAMETER_TOL:
        return Arc(p, q, None, None, layer, label, component)
    # the circle through p, q and the inversion of p in the unit circle
    r = p if abs(p) > 1e-12 else q
    inv = 1 / r.conjugate()
    c = _circumcenter(p, q, inv)
    return Arc(p, q, c, abs(p - c), layer, label, component)


def _circumcenter(a: complex, b: complex, c: complex) -> complex:
    ax, ay, bx, by, cx, cy = a.real, a.imag, b.real, b.imag, c.real, c.imag
    det = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / det
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / det
    return complex(ux, uy)


@dataclass
class RenderScene:
    type_triple: tuple
    placements: dict  # label -> Isometry of the base tile
    tiles: dict  # label -> (centre, black, white, far black) in the disk
    arcs: list
    palette: dict  # component index -> colour
    faces: list  # label tuples, one per face
    components: int
    checks: dict = field(default_factory=dict)

    def arcs_in(self, layer: str) -> list[Arc]:
        return [a for a in self.arcs if a.layer == layer]


def palette_for(n: int) -> dict[int, str]:
    out = {}
    for i in range(n):
        if i < len(_BASE_COLORS):
            out[i] = _BASE_COLORS[i]
        else:
            r, g, b = colorsys.hls_to_rgb((i * 0.618034) % 1, 0.45, 0.7)
            out[i] = f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"
    return out


def build_scene(d: Dessin) -> RenderScene:
    type_triple = _check_fuchsian_input(d)
    if type_triple[0] != 2 or type_triple[1] % 2:
        raise DessinError(f"rendering needs type (2, 2m, k), got {type_triple}", code="bad_input")
    T = triangle_group_matrices(*type_triple)
    tree = spanning_tree(d)
    far_black = mobius(to_disk(T.x.matrix), T.w_b)
    base = (T.w_c, T.w_b, T.w_a, far_black)

    placements, disk, tiles = {}, {}, {}
    for i, w in enumerate(tree.words, start=1):
        M = word_matrix(w, T)
        placements[i] = classify_isometry(M)
        disk[i] = to_disk(M)
        tiles[i] = tuple(complex(mobius(disk[i], v)) for v in base)

    curves = decompose(d)
    comp_of = curves.component_of()
    arcs = []
    for i in range(1, d.degree + 1):
        c, b, w, fb = tiles[i]
        arcs.append(geodesic_arc(c, b, "spoke", i))
        arcs.append(geodesic_arc(b, w, "face", i))
        arcs.append(geodesic_arc(w, fb, "face", i))
        arcs.append(geodesic_arc(w, b, "dessin", i))
        arcs.append(geodesic_arc(w, b, "curve", i, comp_of[i]))

    scene = RenderScene(
        type_triple=type_triple,
        placements=placements,
        tiles=tiles,
        arcs=arcs,
        palette=palette_for(curves.r),
        faces=[tuple(c) for c in d.sigma_inf.cycles()],
        components=curves.r,
    )
    scene.checks = _check_scene(d, scene, disk, T)
    return scene


def _check_scene(d: Dessin, scene: RenderScene, disk: dict, T) -> dict:
    worst_inside = max(max(abs(a.start), abs(a.end)) for a in scene.arcs)
    if worst_inside >= 1:
        raise DessinError(f"an arc leaves the unit disk (|z| = {worst_inside})", code="render_invariant")
    worst_orth = max(a.orthogonality_defect() for a in scene.arcs)
    if worst_orth > GEOMETRY_TOL:
        raise DessinError(f"arc not orthogonal to the boundary (defect {worst_orth:.3g})", code="render_invariant")

    # tiles related by an x- or z-step whose Schreier element is trivial share a side
    x = d.sigma0
    z = d.sigma_inf
    worst_side = 0.0
    shared = 0
    for i in range(1, d.degree + 1):
        for g, j in (("x", x(i)), ("z", z(i))):
            step = disk[i] @ to_disk(T.generator(g))
            if not is_projective_identity(np.linalg.inv(disk[j]) @ step, 1e-8):
                continue
            ci, bi, wi, fi = scene.tiles[i]
            cj, bj, wj, fj = scene.tiles[j]
            if g == "x":
                pairs = ((bi, fj), (fi, bj))
            else:
                pairs = ((ci, cj), (bi, fj))
            worst_side = max(worst_side, *(abs(p - q) for p, q in pairs))
            shared += 1
    if worst_side > GEOMETRY_TOL:
        raise DessinError(f"adjacent tiles disagree on a shared side by {worst_side:.3g}", code="render_invariant")
    return {
        "max_radius": worst_inside,
        "max_orthogonality_defect": worst_orth,
        "max_shared_side_gap": worst_side,
        "shared_sides": shared,
    }


# -- SVG -------------------------------------------------------------------------


def _xy(z: complex, size: float) -> tuple[float, float]:
    h = size / 2
    return h * (1 + z.real), h * (1 - z.imag)


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _arc_path(a: Arc, size: float, move: bool = True) -> str:
    x1, y1 = _xy(a.start, size)
    x2, y2 = _xy(a.end, size)
    head = f"M {_fmt(x1)} {_fmt(y1)} " if move else ""
    if a.center is None:
        return head + f"L {_fmt(x2)} {_fmt(y2)}"
    cx, cy = _xy(a.center, size)
    cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx)
    r = a.radius * size / 2
    return head + f"A {_fmt(r)} {_fmt(r)} 0 0 {1 if cross > 0 else 0} {_fmt(x2)} {_fmt(y2)}"


def scene_to_svg(scene: RenderScene, size: int = 800) -> str:
    h = size / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>{'fundamental domain, type ' + str(tuple(scene.type_triple))}</title>",
        f'<circle class="boundary" cx="{_fmt(h)}" cy="{_fmt(h)}" r="{_fmt(h)}" fill="#f7f7f7" stroke="#333" stroke-width="1"/>',
        '<g class="tiles">',
    ]
    for label in sorted(scene.tiles):
        c, b, w, fb = scene.tiles[label]
        path = " ".join(
            [
                _arc_path(geodesic_arc(c, b, "spoke", label), size),
                _arc_path(geodesic_arc(b, fb, "face", label), size, move=False),
                _arc_path(geodesic_arc(fb, c, "spoke", label), size, move=False),
                "Z",
            ]
        )
        out.append(
            f'<path class="quad" data-label="{label}" d="{path}" fill="#dde6f0" stroke="#bbb" stroke-width="0.5"/>'
        )
    out.append("</g>")

    for n, face in enumerate(scene.faces):
        segs = [a for a in scene.arcs_in("face") if a.label in face]
        d = " ".join(_arc_path(a, size) for a in segs)
        out.append(
            f'<path class="face" data-face="{n}" data-degree="{len(face)}" data-arcs="{len(segs)}" '
            f'd="{d}" fill="none" stroke="#555" stroke-width="1"/>'
        )

    out.append('<g class="curve">')
    for a in scene.arcs_in("curve"):
        colour = scene.palette[a.component]
        out.append(
            f'<path class="curve-edge" data-label="{a.label}" data-component="{a.component}" '
            f'd="{_arc_path(a, size)}" fill="none" stroke={quoteattr(colour)} stroke-width="3"/>'
        )
    out.append("</g>")

    out.append('<g class="vertices">')
    seen = set()
    for label in sorted(scene.tiles):
        _, b, w, _ = scene.tiles[label]
        for kind, z in (("black", b), ("white", w)):
            key = (kind, round(z.real, 6), round(z.imag, 6))
            if key in seen:
                continue
            seen.add(key)
            x, y = _xy(z, size)
            fill = "#000" if kind == "black" else "#fff"
            out.append(
                f'<circle class="vertex-{kind}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" fill="{fill}" stroke="#000" stroke-width="1"/>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(d: Dessin, size: int = 800) -> str:
    return scene_to_svg(build_scene(d), size)
