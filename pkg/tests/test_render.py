import math
import xml.etree.ElementTree as ET

import pytest

from fillingcurves.dessin import new_dessin
from fillingcurves.errors import DessinError
from fillingcurves.hypgeom import disk_distance
from fillingcurves.io import load_fixture
from fillingcurves.render import build_scene, geodesic_arc, render_svg, scene_to_svg

NS = "{http://www.w3.org/2000/svg}"


def test_scene_genus2_248(genus2_248):
    sc = build_scene(genus2_248)
    assert len(sc.tiles) == 16
    assert sc.components == 1
    assert len(sc.arcs_in("curve")) == 16
    assert sorted(a.label for a in sc.arcs_in("curve")) == list(range(1, 17))
    for face in sc.faces:
        assert len([a for a in sc.arcs_in("face") if a.label in face]) == 2 * 8
    assert sc.checks["max_orthogonality_defect"] < 1e-6
    assert sc.checks["max_shared_side_gap"] < 1e-6
    for a in sc.arcs:
        assert abs(a.start) < 1 and abs(a.end) < 1


def test_base_face_geometry(genus2_248):
    sc = build_scene(genus2_248)
    R = math.acosh(math.cos(math.pi / 4) / math.sin(math.pi / 8))
    black = math.acosh(1 / (math.tan(math.pi / 4) * math.tan(math.pi / 8)))
    centre_tiles = [t for t in sc.tiles.values() if abs(t[0]) < 1e-12]
    assert len(centre_tiles) == 8
    for c, b, w, fb in centre_tiles:
        assert disk_distance(c, w) == pytest.approx(R, abs=1e-9)
        assert disk_distance(c, b) == pytest.approx(black, abs=1e-9)
        assert disk_distance(c, fb) == pytest.approx(black, abs=1e-9)


def test_geodesic_arcs():
    a = geodesic_arc(0.3 + 0.1j, -0.2 + 0.5j, "face", 1)
    assert a.center is not None
    assert abs(abs(a.center) ** 2 - 1 - a.radius**2) < 1e-9
    assert abs(abs(a.start - a.center) - a.radius) < 1e-12
    assert abs(abs(a.end - a.center) - a.radius) < 1e-12
    line = geodesic_arc(0.2 + 0.2j, -0.4 - 0.4j, "face", 1)
    assert line.center is None


def test_svg_structure(genus2_248):
    svg = render_svg(genus2_248)
    root = ET.fromstring(svg.encode())
    assert root.tag == NS + "svg" and root.get("version") == "1.1"
    quads = root.findall(f".//{NS}path[@class='quad']")
    faces = root.findall(f".//{NS}path[@class='face']")
    curve = root.findall(f".//{NS}path[@class='curve-edge']")
    assert len(quads) == 16
    assert len(faces) == 2 and all(f.get("data-arcs") == "16" for f in faces)
    assert {c.get("data-component") for c in curve} == {"0"}
    assert len(curve) == 16
    assert svg == render_svg(genus2_248)


def test_svg_266_three_colours():
    d = load_fixture("genus2_type266")
    svg = render_svg(d)
    root = ET.fromstring(svg.encode())
    curve = root.findall(f".//{NS}path[@class='curve-edge']")
    assert {c.get("data-component") for c in curve} == {"0", "1", "2"}
    assert len({c.get("stroke") for c in curve}) == 3
    sc = build_scene(d)
    assert sc.checks["max_shared_side_gap"] < 1e-6


def test_render_other_fixtures(table_rows):
    for d in table_rows + [load_fixture("seed_g4_n3")]:
        sc = build_scene(d)
        assert len(sc.tiles) == d.degree
        k = d.sigma_inf.cycle_type()[0]
        for face in sc.faces:
            assert len([a for a in sc.arcs_in("face") if a.label in face]) == 2 * k
        assert len(ET.fromstring(scene_to_svg(sc).encode()).findall(f".//{NS}path[@class='quad']")) == d.degree


def test_render_rejects_non_clean():
    with pytest.raises(DessinError):
        render_svg(new_dessin(8, "(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"))
