"""Generators for standard test meshes and seeded perturbations."""

import numpy as np

from .errors import NotEmbeddedError, PerturbFailedError
from .geometry import Placement, verify_embedding
from .mesh import build_mesh


def gen_grid(m):
    """m x m grid triangulation of the unit torus, m >= 3.

    Vertices sit at (x/m, y/m) with id x + m*y; each lattice cell is
    split along its (+1, +1) diagonal. Edges that wrap carry the
    corresponding lattice shift. Returns (mesh, placement); vertex 0
    is at the origin.
    """
    if m < 3:
        raise ValueError("grid size must be at least 3")
    faces = []
    shifts = {}

    def vid(x, y):
        return (x % m) + m * (y % m)

    def offset(x, y):
        # Lattice translate taking the wrapped representative to (x, y).
        return np.array([x // m, y // m], dtype=np.int64)

    for y in range(m):
        for x in range(m):
            corners = ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))
            a, b, c, d = (vid(*p) for p in corners)
            off_a, off_b, off_c, off_d = (offset(*p) for p in corners)
            faces.append((a, b, c))
            faces.append((a, c, d))
            for (p, po), (q, qo) in (
                ((a, off_a), (b, off_b)),
                ((b, off_b), (c, off_c)),
                ((c, off_c), (a, off_a)),
                ((a, off_a), (c, off_c)),
                ((c, off_c), (d, off_d)),
                ((d, off_d), (a, off_a)),
            ):
                shifts.setdefault((p, q), tuple(qo - po))
    mesh = build_mesh(faces, shifts)
    coords = np.array([(x / m, y / m) for y in range(m) for x in range(m)])
    return mesh, Placement(coords)


def gen_k7():
    """The 7-vertex triangulation of the torus (complete graph K7).

    Built from the triangular lattice modulo the index-7 sublattice
    spanned by (7, 0) and (-2, 1), with vertex p + 2q mod 7 at lattice
    point (p, q). Faces are (i, i+1, i+3) and (i, i+3, i+2) mod 7.
    Returns (mesh, placement) with an embedded geodesic realization.
    """
    period = np.array([[7, -2], [0, 1]], dtype=float)  # columns span the sublattice
    to_torus = np.linalg.inv(period)
    reps = {i: np.array([i, 0], dtype=float) for i in range(7)}
    steps = {1: (1, 0), 2: (0, 1), 3: (1, 1), 6: (-1, 0), 5: (0, -1), 4: (-1, -1)}

    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 3) % 7, (i + 2) % 7))
    shifts = {}
    for i in range(7):
        for d, step in steps.items():
            j = (i + d) % 7
            lam = reps[i] + np.array(step, dtype=float) - reps[j]
            b = to_torus @ lam
            shifts[(i, j)] = (int(round(b[0])), int(round(b[1])))
    mesh = build_mesh(faces, shifts)
    coords = np.array([to_torus @ reps[i] for i in range(7)])
    return mesh, Placement(coords)


def perturb(mesh, placement, magnitude, seed):
    """Displace all vertices but vertex 0 by a seeded random field.

    Displacements are uniform in [-magnitude, magnitude]^2. If the
    result is not an embedding the magnitude halves, reusing the same
    field; after 20 halvings PerturbFailedError is raised. Requires an
    embedded input, which guarantees termination for small enough
    magnitudes.
    """
    if not verify_embedding(mesh, placement).is_embedding:
        raise NotEmbeddedError("perturb requires an embedded placement")
    rng = np.random.default_rng(seed)
    field = rng.uniform(-1.0, 1.0, (mesh.vertex_count, 2))
    field[0] = 0.0
    scale = float(magnitude)
    for _ in range(21):
        candidate = Placement(placement.coords + scale * field)
        if verify_embedding(mesh, candidate).is_embedding:
            return candidate
        scale *= 0.5
    raise PerturbFailedError("no embedded placement after 20 halvings")
