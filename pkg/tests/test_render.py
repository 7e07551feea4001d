import math
import xml.etree.ElementTree as ET

import numpy as np

from torustutte import Placement, edge_vectors, face_signed_areas, render_svg

SVG = "{http://www.w3.org/2000/svg}"


def parse(svg_text):
    return ET.fromstring(svg_text)


def edge_groups(root):
    return [g for g in root.iter(f"{SVG}g") if g.get("class") == "edge"]


def test_svg_well_formed_and_complete(bumpy4):
    mesh, placement = bumpy4
    root = parse(render_svg(mesh, placement))
    assert root.tag == f"{SVG}svg"
    assert root.get("width") == "800"
    groups = edge_groups(root)
    assert len(groups) == mesh.edge_count
    seen = {g.get("data-edge") for g in groups}
    expected = {
        f"{i}-{j}" for i, j in (tuple(e) for e in mesh.directed_edges) if i < j
    }
    assert seen == expected
    # an embedded placement draws no flipped-face highlights
    assert not [p for p in root.iter(f"{SVG}polygon")]


def test_svg_size_and_labels(grid3):
    mesh, placement = grid3
    root = parse(render_svg(mesh, placement, size=400, labels=True))
    assert root.get("width") == "400" and root.get("height") == "400"
    texts = list(root.iter(f"{SVG}text"))
    assert len(texts) == 9
    assert {t.text for t in texts} == {str(v) for v in range(9)}


def test_svg_deterministic(bumpy3):
    mesh, placement = bumpy3
    assert render_svg(mesh, placement) == render_svg(mesh, placement)


def test_segment_counts_by_seam_class(grid3):
    """A wrap-free placement splits every edge by its seam crossings."""
    mesh, placement = grid3
    inside = Placement(placement.coords + [0.11, 0.17])
    root = parse(render_svg(mesh, inside))
    by_edge = {g.get("data-edge"): len(list(g)) for g in edge_groups(root)}
    histogram = {}
    for k, (i, j) in enumerate(mesh.directed_edges):
        if i >= j:
            continue
        crossings = int(np.abs(mesh.shifts[k]).sum())
        expected = 1 + crossings
        actual = by_edge[f"{i}-{j}"]
        assert actual == expected, (i, j, tuple(mesh.shifts[k]))
        histogram[expected] = histogram.get(expected, 0) + 1
    assert histogram == {1: 16, 2: 10, 3: 1}


def test_segments_cover_each_edge(bumpy4):
    """Per edge, the drawn pieces add up to the lifted edge length."""
    mesh, placement = bumpy4
    size = 800.0
    vecs = edge_vectors(mesh, placement)
    root = parse(render_svg(mesh, placement))
    for g in edge_groups(root):
        i, j = (int(s) for s in g.get("data-edge").split("-"))
        k = mesh.edge_index[(i, j)]
        length = math.hypot(vecs[k][0], vecs[k][1])
        drawn = 0.0
        for line in g:
            x1, y1 = float(line.get("x1")), float(line.get("y1"))
            x2, y2 = float(line.get("x2")), float(line.get("y2"))
            drawn += math.hypot(x2 - x1, y2 - y1) / size
        assert abs(drawn - length) <= 1e-4, (i, j)


def test_flipped_faces_highlighted(grid3):
    mesh, placement = grid3
    coords = placement.coords.copy()
    coords[4] = [-0.1, -0.1]
    folded = Placement(coords)
    areas = face_signed_areas(mesh, folded)
    flipped = {str(fi) for fi in np.nonzero(areas < 0)[0]}
    assert flipped
    root = parse(render_svg(mesh, folded))
    polys = [p for p in root.iter(f"{SVG}polygon") if p.get("class") == "flipped"]
    assert {p.get("data-face") for p in polys} == flipped
    quiet = parse(render_svg(mesh, folded, highlight_flipped=False))
    assert not list(quiet.iter(f"{SVG}polygon"))


def test_y_axis_points_up(grid3):
    """Vertex labels near the bottom edge get large pixel y values."""
    mesh, placement = grid3
    root = parse(render_svg(mesh, placement, labels=True))
    y_by_label = {
        t.text: float(t.get("y")) for t in root.iter(f"{SVG}text")
    }
    # vertex 0 sits at torus (0, 0): pixel y near the bottom (size)
    assert y_by_label["0"] > 700
    # vertex 6 sits at (0, 2/3): higher up the canvas
    assert y_by_label["6"] < y_by_label["0"]
