"""Mean value weights, a section of the balanced-placement map.

For an embedded placement, each directed edge (i, j) gets the weight

    w_ij = (tan(a/2) + tan(b/2)) / l_ij

where a and b are the inner angles at vertex i in the two faces next
to the edge, and l_ij is the lifted edge length. These weights balance
the placement exactly, so solving the balance system for them
reproduces the placement: the construction inverts the solver on
embeddings.
"""

import numpy as np

from .errors import NotEmbeddedError
from .geometry import AREA_TOL, edge_vectors, verify_embedding
from .tutte import WeightAssignment


def _tan_half_angle(u, v):
    """tan of half the unsigned angle between u and v via cross and dot."""
    cross = abs(u[0] * v[1] - u[1] * v[0])
    dot = u[0] * v[0] + u[1] * v[1]
    norms = np.hypot(*u) * np.hypot(*v)
    return (norms - dot) / cross


def mean_value_weights(mesh, placement):
    """Mean value weights of an embedded placement.

    Raises NotEmbeddedError unless the placement passes
    :func:`verify_embedding`; the angle formulas need every face
    positively oriented and non-degenerate.
    """
    report = verify_embedding(mesh, placement)
    if not report.is_embedding:
        raise NotEmbeddedError(
            f"placement is not an embedding (min area {report.min_area:.3e}, "
            f"total {report.total_area:.6f})"
        )
    if report.min_area < AREA_TOL:
        raise NotEmbeddedError("degenerate face")

    vecs = edge_vectors(mesh, placement)
    rev = mesh.reverse_index
    opposite = mesh.opposite_vertex
    values = np.empty(len(vecs))
    for k, (i, j) in enumerate(mesh.directed_edges):
        i = int(i)
        u = vecs[k]
        # Third vertices of the faces on either side of {i, j}.
        k1 = int(opposite[k])
        k2 = int(opposite[rev[k]])
        t1 = _tan_half_angle(u, vecs[mesh.edge_index[(i, k1)]])
        t2 = _tan_half_angle(u, vecs[mesh.edge_index[(i, k2)]])
        values[k] = (t1 + t2) / np.hypot(u[0], u[1])
    return WeightAssignment(values)


def check_balanced(mesh, placement, weights):
    """Largest vertex imbalance norm of weighted lifted edge sums."""
    vecs = edge_vectors(mesh, placement)
    acc = np.zeros((mesh.vertex_count, 2))
    np.add.at(acc, mesh.directed_edges[:, 0], weights.values[:, None] * vecs)
    return float(np.linalg.norm(acc, axis=1).max())
