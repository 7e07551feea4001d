"""Discrete one-forms on torus triangulations and their index count.

A discrete one-form assigns a real value to every directed edge,
antisymmetrically. Around a vertex, read the values on outgoing edges
in rotation order and count cyclic sign changes sc among the nonzero
entries; the index of the vertex is (2 - sc) / 2, and likewise for a
face using its three boundary edges. For a form that vanishes nowhere
the indices over all vertices and faces sum to exactly zero. The count
uses integer arithmetic on doubled indices so the total is exact.

Forms obtained by projecting lifted edge vectors of a placement onto a
fixed direction are the ones used to certify balanced placements; for
generic directions they vanish nowhere.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFaceError, DegenerateVertexError
from .geometry import edge_vectors

ZERO_TOL = 1e-13


@dataclass(frozen=True)
class DiscreteOneForm:
    """Edge values aligned with mesh.directed_edges, antisymmetric."""

    values: np.ndarray


def one_form_from_values(mesh, values):
    values = np.asarray(values, dtype=float)
    if values.shape != (len(mesh.directed_edges),):
        raise ValueError("one value per directed edge required")
    if not np.array_equal(values, -values[mesh.reverse_index]):
        raise ValueError("one-form values must be exactly antisymmetric")
    return DiscreteOneForm(values)


def one_form_from_dict(mesh, mapping):
    values = np.array(
        [float(mapping[(int(i), int(j))]) for i, j in mesh.directed_edges]
    )
    return one_form_from_values(mesh, values)


def direction_form(mesh, placement, direction):
    """One-form from projecting lifted edge vectors onto a direction."""
    direction = np.asarray(direction, dtype=float)
    return DiscreteOneForm(edge_vectors(mesh, placement) @ direction)


def _cyclic_sign_changes(values, tol=ZERO_TOL):
    """Sign changes around a cyclic value sequence, zeros skipped.

    Returns None when every value is zero.
    """
    signs = [1 if v > 0 else -1 for v in values if abs(v) > tol]
    if not signs:
        return None
    return sum(1 for a, b in zip(signs, signs[1:] + signs[:1]) if a != b)


def sign_changes_vertex(mesh, form, v, tol=ZERO_TOL):
    """Cyclic sign changes of the form on outgoing edges at v."""
    vals = [form.values[mesh.edge_index[(v, u)]] for u in mesh.rotation[v]]
    sc = _cyclic_sign_changes(vals, tol)
    if sc is None:
        raise DegenerateVertexError(f"form vanishes on every edge at vertex {v}")
    return sc


def index_vertex(mesh, form, v, tol=ZERO_TOL):
    """(2 - sc) / 2 at a vertex; 0 for local injectivity, negative at folds."""
    return (2 - sign_changes_vertex(mesh, form, v, tol)) / 2


def sign_changes_face(mesh, form, face_index, tol=ZERO_TOL):
    vals = form.values[mesh.face_edges[face_index]]
    sc = _cyclic_sign_changes(vals, tol)
    if sc is None:
        raise DegenerateFaceError(
            f"form vanishes on every edge of face {face_index}"
        )
    return sc


def index_face(mesh, form, face_index, tol=ZERO_TOL):
    return (2 - sign_changes_face(mesh, form, face_index, tol)) / 2


@dataclass(frozen=True)
class IndexReport:
    """Index data of one form on one mesh.

    Indices are None for degenerate cells (all incident values zero).
    ``total`` sums the defined indices; when ``nonvanishing`` is true
    every cell is defined and the total is exactly zero for any
    antisymmetric form, which is the certificate the balanced-placement
    machinery relies on.
    """

    vertex_indices: list
    face_indices: list
    degenerate_vertices: list
    degenerate_edges: list
    degenerate_faces: list
    total: float
    nonvanishing: bool


def index_theorem_check(mesh, form, tol=ZERO_TOL):
    """Compute all vertex and face indices and their exact total."""
    values = form.values
    zero = np.abs(values) <= tol
    degenerate_edges = [
        (int(i), int(j))
        for (i, j), z in zip(mesh.directed_edges, zero)
        if z and int(i) < int(j)
    ]

    doubled_total = 0
    vertex_indices = []
    degenerate_vertices = []
    for v in range(mesh.vertex_count):
        vals = [values[mesh.edge_index[(v, u)]] for u in mesh.rotation[v]]
        sc = _cyclic_sign_changes(vals, tol)
        if sc is None:
            vertex_indices.append(None)
            degenerate_vertices.append(v)
        else:
            vertex_indices.append((2 - sc) / 2)
            doubled_total += 2 - sc

    face_indices = []
    degenerate_faces = []
    for fi in range(len(mesh.faces)):
        sc = _cyclic_sign_changes(values[mesh.face_edges[fi]], tol)
        if sc is None:
            face_indices.append(None)
            degenerate_faces.append(fi)
        else:
            face_indices.append((2 - sc) / 2)
            doubled_total += 2 - sc

    return IndexReport(
        vertex_indices=vertex_indices,
        face_indices=face_indices,
        degenerate_vertices=degenerate_vertices,
        degenerate_edges=degenerate_edges,
        degenerate_faces=degenerate_faces,
        total=doubled_total / 2,
        nonvanishing=not bool(zero.any()),
    )


def generic_direction_form(mesh, placement, start_angle=0.1, step=0.6, max_tries=64):
    """First direction form along the angle ladder that vanishes nowhere.

    Tries angles start_angle, start_angle + step, ... and returns
    (form, angle). Deterministic; raises if every try has a zero edge,
    which only happens for degenerate placements.
    """
    for k in range(max_tries):
        angle = start_angle + k * step
        form = direction_form(
            mesh, placement, np.array([np.cos(angle), np.sin(angle)])
        )
        if np.abs(form.values).min() > ZERO_TOL:
            return form, angle
    raise DegenerateVertexError(
        f"no nonvanishing direction found after {max_tries} tries"
    )
