"""Geodesic realizations of torus triangulations and their certificates.

A placement assigns each vertex a lifted position in the plane; the
torus position is the same point mod Z^2. Edges are straight segments
between lifts, so the lifted vector of directed edge (i, j) is
x_j + b_ij - x_i. A placement is an embedding when every face has
positive signed area and the signed areas sum to 1, the area of the
unit torus covered exactly once.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFaceError

AREA_TOL = 1e-12
TOTAL_AREA_TOL = 1e-9


class Placement:
    """Lifted vertex coordinates, one row per vertex.

    ``anchored`` is true when vertex 0 sits exactly at the origin,
    the normalization the balance solver produces.
    """

    def __init__(self, coords):
        coords = np.array(coords, dtype=float)
        if coords.ndim != 2 or coords.shape[1] != 2:
            raise ValueError("coords must be an (n, 2) array")
        if not np.isfinite(coords).all():
            raise ValueError("coords must be finite")
        self.coords = coords
        self.anchored = bool(coords[0, 0] == 0.0 and coords[0, 1] == 0.0)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class EmbeddingReport:
    """Certificate data from :func:`verify_embedding`.

    ``degree`` is the rounded total signed area, the degree of the
    placement as a map to the torus; an embedding has degree 1.
    Angle defects are 2*pi minus the unsigned angle sum at each vertex
    and vanish for embeddings, the flat torus has no curvature to absorb.
    """

    face_areas: np.ndarray
    total_area: float
    min_area: float
    vertex_angle_defects: np.ndarray
    is_embedding: bool
    degree: int


def _check_sizes(mesh, placement):
    if len(placement.coords) != mesh.vertex_count:
        raise ValueError(
            f"placement has {len(placement.coords)} rows, mesh has {mesh.vertex_count} vertices"
        )


def edge_vectors(mesh, placement):
    """Lifted vectors of every directed edge, aligned with mesh.directed_edges."""
    _check_sizes(mesh, placement)
    src = mesh.directed_edges[:, 0]
    dst = mesh.directed_edges[:, 1]
    return placement.coords[dst] - placement.coords[src] + mesh.shifts


def lifted_edge_vector(mesh, placement, edge):
    """Lifted vector of one directed edge (i, j)."""
    _check_sizes(mesh, placement)
    i, j = edge
    x = placement.coords
    return x[j] - x[i] + mesh.shifts[mesh.edge_index[(int(i), int(j))]]


def _cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def face_signed_areas(mesh, placement):
    """Signed area of every face; positive means counterclockwise."""
    vecs = edge_vectors(mesh, placement)
    ij = vecs[mesh.face_edges[:, 0]]
    ik = -vecs[mesh.face_edges[:, 2]]
    return 0.5 * _cross(ij, ik)


def face_signed_area(mesh, placement, face_index):
    return float(face_signed_areas(mesh, placement)[face_index])


def _corner_vectors(mesh, vecs, face_index):
    """Per-corner edge vector pairs for one face, ordered (i, j, k)."""
    e_ij, e_jk, e_ki = mesh.face_edges[face_index]
    return (
        (vecs[e_ij], -vecs[e_ki]),
        (vecs[e_jk], -vecs[e_ij]),
        (vecs[e_ki], -vecs[e_jk]),
    )


def corner_angle(mesh, placement, face_index, vertex):
    """Unsigned inner angle of a face at one of its vertices, in (0, pi)."""
    areas = face_signed_areas(mesh, placement)
    if abs(areas[face_index]) < AREA_TOL:
        raise DegenerateFaceError(f"face {face_index} is degenerate")
    face = mesh.faces[face_index]
    corners = _corner_vectors(mesh, edge_vectors(mesh, placement), face_index)
    for v, (u, w) in zip(face, corners):
        if int(v) == int(vertex):
            return float(np.arctan2(abs(_cross(u, w)), np.dot(u, w)))
    raise ValueError(f"vertex {vertex} is not a corner of face {face_index}")


def verify_embedding(mesh, placement, area_tol=AREA_TOL, total_tol=TOTAL_AREA_TOL):
    """Certify whether a placement embeds the mesh in the torus.

    The certificate is purely local: all face areas exceed ``area_tol``
    and the total equals 1 within ``total_tol``, which pins the degree
    to one. Angle sums per vertex are reported alongside; for an
    embedding each equals 2*pi.
    """
    areas = face_signed_areas(mesh, placement)
    total = float(areas.sum())
    vecs = edge_vectors(mesh, placement)

    angle_sums = np.zeros(mesh.vertex_count)
    for corner in range(3):
        u = vecs[mesh.face_edges[:, corner]]
        w = -vecs[mesh.face_edges[:, corner - 1]]
        angles = np.arctan2(np.abs(_cross(u, w)), np.einsum("ij,ij->i", u, w))
        np.add.at(angle_sums, mesh.faces[:, corner], angles)

    is_embedding = bool(areas.min() > area_tol and abs(total - 1.0) <= total_tol)
    return EmbeddingReport(
        face_areas=areas,
        total_area=total,
        min_area=float(areas.min()),
        vertex_angle_defects=2.0 * np.pi - angle_sums,
        is_embedding=is_embedding,
        degree=int(round(total)),
    )
