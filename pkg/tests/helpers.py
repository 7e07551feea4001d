"""Shared oracles for the test suite.

Everything in this module recomputes expected values through a second,
dissimilar route: loop-based assembly instead of vectorized scatter,
normal equations instead of least-squares, arccos instead of the
algebraic half-angle identity, exhaustive walk enumeration instead of
breadth-first search. Tests compare the production code against these.
"""

import math

import numpy as np


# ---------------------------------------------------------------------------
# Spheres and pinched spheres (invalid-input fixtures)

OCTAHEDRON = [
    (0, 1, 2),
    (0, 2, 3),
    (0, 3, 4),
    (0, 4, 1),
    (5, 2, 1),
    (5, 3, 2),
    (5, 4, 3),
    (5, 1, 4),
]


def subdivide(faces):
    """One round of 1-to-4 triangle subdivision, orientation preserved."""
    midpoints = {}
    next_id = 1 + max(max(f) for f in faces)

    def midpoint(a, b):
        nonlocal next_id
        key = (min(a, b), max(a, b))
        if key not in midpoints:
            midpoints[key] = next_id
            next_id += 1
        return midpoints[key]

    out = []
    for a, b, c in faces:
        ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
        out.extend([(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)])
    return out


def sphere_faces():
    """Twice-subdivided octahedron: V=66, E=192, F=128, Euler 2."""
    return subdivide(subdivide(OCTAHEDRON))


def pinched_sphere_faces():
    """Sphere with three far-apart vertices glued into one.

    The result has V=64, E=192, F=128, so the Euler characteristic is 0
    and every edge still bounds exactly two consistently oriented faces.
    Only the vertex-link check can tell it is not a torus: the glued
    vertex has three disjoint link cycles.
    """
    faces = sphere_faces()
    relabel = {}

    def lab(v):
        if v in (0, 1, 5):
            return 0
        if v not in relabel:
            relabel[v] = len(relabel) + 1
        return relabel[v]

    return [tuple(lab(v) for v in face) for face in faces]


# ---------------------------------------------------------------------------
# Exhaustive loop search

def brute_shortest_loop(mesh, target, limit):
    """Minimum length of a closed walk whose shifts sum to ``target``.

    Plain depth-first enumeration over all walks of length <= limit,
    nothing shared with the production search. Returns None when no
    such walk exists within the limit. Requires every shift entry in
    {-1, 0, 1}; the distance pruning below relies on that step bound.
    """
    shifts = mesh.shifts
    assert int(np.abs(shifts).max()) <= 1
    tx, ty = int(target[0]), int(target[1])
    steps = []
    for v in range(mesh.vertex_count):
        row = []
        for u in mesh.rotation[v]:
            b = mesh.shifts[mesh.edge_index[(v, u)]]
            row.append((u, int(b[0]), int(b[1])))
        steps.append(tuple(row))
    best = None

    def walk(start, v, sx, sy, depth):
        nonlocal best
        if depth > 0 and v == start and sx == tx and sy == ty:
            best = depth
            return
        cap = limit if best is None else best - 1
        if depth >= cap or max(abs(sx - tx), abs(sy - ty)) > cap - depth:
            return
        for u, bx, by in steps[v]:
            walk(start, u, sx + bx, sy + by, depth + 1)

    for start in range(mesh.vertex_count):
        walk(start, start, 0, 0, 0)
    return best


# ---------------------------------------------------------------------------
# Balance system oracles

def oracle_assemble(mesh, values):
    """Dense A, b built edge by edge from the definition."""
    n = mesh.vertex_count
    matrix = np.zeros((n, n))
    rhs = np.zeros((n, 2))
    for k, (i, j) in enumerate(mesh.directed_edges):
        w = float(values[k])
        matrix[i, j] += w
        matrix[i, i] -= w
        rhs[i] -= w * mesh.shifts[k]
    return matrix, rhs


def oracle_solve(mesh, values):
    """Pinned least squares through explicitly formed normal equations.

    Returns (coords, residual, energy). Uses an LU solve of A_r^T A_r,
    a completely different factorization path from the production code.
    """
    matrix, rhs = oracle_assemble(mesh, values)
    reduced = matrix[:, 1:]
    gram = reduced.T @ reduced
    free = np.linalg.solve(gram, reduced.T @ rhs)
    coords = np.vstack([np.zeros((1, 2)), free])
    residual = reduced @ free - rhs
    return coords, residual, float(np.sum(residual * residual))


def oracle_left_null(matrix):
    """Left null vector of A, sign-normalized, via full SVD."""
    u_mat, _, _ = np.linalg.svd(np.asarray(matrix))
    pi = u_mat[:, -1]
    if pi.sum() < 0:
        pi = -pi
    return pi


# ---------------------------------------------------------------------------
# Mean value weight oracle

def oracle_mean_value(mesh, placement):
    """Weights via explicit arccos corner angles and a face-list scan."""
    coords = placement.coords
    faces = [tuple(int(v) for v in f) for f in mesh.faces]
    out = np.empty(len(mesh.directed_edges))
    for k, (i, j) in enumerate(mesh.directed_edges):
        vec = coords[j] + mesh.shifts[k] - coords[i]
        length = math.hypot(vec[0], vec[1])
        tans = []
        for face in faces:
            if i in face and j in face:
                other = next(v for v in face if v != i and v != j)
                ovec = (
                    coords[other]
                    + mesh.shifts[mesh.edge_index[(i, other)]]
                    - coords[i]
                )
                olen = math.hypot(ovec[0], ovec[1])
                cosang = float(np.dot(vec, ovec)) / (length * olen)
                angle = math.acos(min(1.0, max(-1.0, cosang)))
                tans.append(math.tan(angle / 2.0))
        assert len(tans) == 2
        out[k] = (tans[0] + tans[1]) / length
    return out


# ---------------------------------------------------------------------------
# Area oracle

def oracle_face_areas(mesh, placement):
    """Signed areas by the shoelace formula on chained lifts."""
    coords = placement.coords
    out = np.empty(len(mesh.faces))
    for fi, (a, b, c) in enumerate(mesh.faces):
        pa = coords[a]
        pb = coords[b] + mesh.shifts[mesh.edge_index[(a, b)]]
        pc = pb + mesh.shifts[mesh.edge_index[(b, c)]] + coords[c] - coords[b]
        out[fi] = 0.5 * (
            pa[0] * (pb[1] - pc[1])
            + pb[0] * (pc[1] - pa[1])
            + pc[0] * (pa[1] - pb[1])
        )
    return out


# ---------------------------------------------------------------------------
# Random weight fields

def random_symmetric_weights(mesh, rng, lo, hi):
    values = np.zeros(len(mesh.directed_edges))
    for k, (i, j) in enumerate(mesh.directed_edges):
        if i < j:
            w = rng.uniform(lo, hi)
            values[k] = w
            values[mesh.reverse_index[k]] = w
    return values


def random_directed_weights(mesh, rng, lo, hi):
    return rng.uniform(lo, hi, len(mesh.directed_edges))
