"""Balance systems for weighted torus triangulations and their solver.

Given positive weights w_ij on directed edges, a placement is balanced
when every vertex is the w-weighted average of the lifted positions of
its neighbors. In matrix form A(w) x = b(w), with A carrying weights
off the diagonal and negative weight sums on it, and b collecting the
shift contributions. Because translating x does not change A x, vertex
0 is pinned at the origin and the reduced rectangular system is solved
in the least-squares sense. The minimum of ||A x - b||_F^2 is the
balance energy; weights are admissible when it vanishes, and for
admissible weights the balanced placement is always an embedding.

For non-admissible weights the residual at the minimizer is forced
into a rigid shape: its two columns span one line, all rows point the
same way, and row norms are reproduced by weighted sums of the edge
projections u_ij onto the common direction. The retraction flow is
built entirely from that structure.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

from .errors import (
    EmbeddingCheckFailedError,
    NonPositiveWeightError,
    NotAdmissibleError,
    SingularSystemError,
)
from .geometry import Placement, edge_vectors, verify_embedding

ADMISSIBLE_TOL = 1e-10
DENSE_LIMIT = 256


@dataclass(frozen=True)
class WeightAssignment:
    """Positive weights on directed edges, aligned with mesh.directed_edges."""

    values: np.ndarray

    def to_dict(self, mesh):
        return {
            (int(i), int(j)): float(w)
            for (i, j), w in zip(mesh.directed_edges, self.values)
        }


def _validated_values(mesh, weights):
    values = np.asarray(weights.values, dtype=float)
    if values.shape != (len(mesh.directed_edges),):
        raise ValueError(
            f"expected {len(mesh.directed_edges)} weights, got shape {values.shape}"
        )
    if not np.isfinite(values).all() or (values <= 0).any():
        raise NonPositiveWeightError("weights must be finite and positive")
    return values


def uniform_weights(mesh, value=1.0):
    if value <= 0:
        raise NonPositiveWeightError("weights must be positive")
    return WeightAssignment(np.full(len(mesh.directed_edges), float(value)))


def weights_from_dict(mesh, mapping):
    """Build a WeightAssignment from a directed-edge keyed mapping."""
    mapping = {(int(i), int(j)): float(w) for (i, j), w in mapping.items()}
    missing = [e for e in mesh.edge_index if e not in mapping]
    if missing:
        raise ValueError(f"missing weight for directed edge {missing[0]}")
    extra = [e for e in mapping if e not in mesh.edge_index]
    if extra:
        raise ValueError(f"weight given for non-edge {extra[0]}")
    values = np.array([mapping[(int(i), int(j))] for i, j in mesh.directed_edges])
    wa = WeightAssignment(values)
    _validated_values(mesh, wa)
    return wa


@dataclass(frozen=True)
class BalanceSystem:
    """Matrix A and right-hand side b of the balance equations."""

    matrix: object
    rhs: np.ndarray


@dataclass(frozen=True)
class ResidualReport:
    """Residual structure at the least-squares balance solution.

    ``direction`` and ``projections`` are present only when the energy
    exceeds tolerance; for admissible weights ``zero_residual`` is set
    instead. ``projections`` holds u_ij, the component of each lifted
    edge vector along the shared residual direction, and
    ``max_weight_ratio`` is the largest w_ij / w_ji, which bounds how
    unevenly the residual mass can spread over vertices.
    """

    residuals: np.ndarray
    energy: float
    direction: np.ndarray | None
    projections: np.ndarray | None
    max_weight_ratio: float
    singular_ratio: float
    zero_residual: bool

    def row_inner_products(self):
        return self.residuals @ self.residuals.T


def assemble_system(mesh, weights):
    """Assemble A(w) and b(w); dense below the size cutoff, sparse above."""
    values = _validated_values(mesh, weights)
    n = mesh.vertex_count
    src = mesh.directed_edges[:, 0]
    dst = mesh.directed_edges[:, 1]
    diag = np.zeros(n)
    np.add.at(diag, src, -values)
    rhs = np.zeros((n, 2))
    np.subtract.at(rhs, src, values[:, None] * mesh.shifts)
    if n <= DENSE_LIMIT:
        matrix = np.zeros((n, n))
        matrix[src, dst] = values
        matrix[np.arange(n), np.arange(n)] = diag
    else:
        rows = np.concatenate([src, np.arange(n)])
        cols = np.concatenate([dst, np.arange(n)])
        data = np.concatenate([values, diag])
        matrix = scipy.sparse.csr_matrix((data, (rows, cols)), shape=(n, n))
    return BalanceSystem(matrix=matrix, rhs=rhs)


def _solve_raw(mesh, system):
    """Least-squares solve with vertex 0 pinned at the origin.

    Returns (coords, residual, energy). Dense systems go through the
    rank-revealing LAPACK driver; sparse ones through LSQR per column.
    """
    n = mesh.vertex_count
    rhs = system.rhs
    if scipy.sparse.issparse(system.matrix):
        reduced = system.matrix[:, 1:]
        cols = []
        for c in range(2):
            sol = scipy.sparse.linalg.lsqr(
                reduced, rhs[:, c], atol=1e-14, btol=1e-14, iter_lim=20 * n
            )[0]
            cols.append(sol)
        free = np.stack(cols, axis=1)
    else:
        reduced = system.matrix[:, 1:]
        free, _, rank, _ = np.linalg.lstsq(reduced, rhs, rcond=None)
        if rank < n - 1:
            raise SingularSystemError(
                f"reduced balance system has rank {rank}, expected {n - 1}"
            )
    coords = np.vstack([np.zeros((1, 2)), free])
    residual = reduced @ free - rhs
    energy = float((residual * residual).sum())
    return coords, residual, energy


def _report_from_residual(mesh, values, coords, residual, energy, tol):
    ratio = float((values / values[mesh.reverse_index]).max())
    sv = np.linalg.svd(residual, compute_uv=False)
    singular_ratio = float(sv[1] / sv[0]) if sv[0] > 0 else 0.0
    if energy > tol:
        norms = np.linalg.norm(residual, axis=1)
        top = residual[int(np.argmax(norms))]
        direction = top / np.linalg.norm(top)
        projections = edge_vectors(mesh, Placement(coords)) @ direction
        zero_residual = False
    else:
        direction = None
        projections = None
        zero_residual = True
    return ResidualReport(
        residuals=residual,
        energy=energy,
        direction=direction,
        projections=projections,
        max_weight_ratio=ratio,
        singular_ratio=singular_ratio,
        zero_residual=zero_residual,
    )


def solve_balance(mesh, weights, tol=ADMISSIBLE_TOL):
    """Solve the balance system; returns (placement, residual report)."""
    values = _validated_values(mesh, weights)
    system = assemble_system(mesh, weights)
    coords, residual, energy = _solve_raw(mesh, system)
    report = _report_from_residual(mesh, values, coords, residual, energy, tol)
    return Placement(coords), report


def balance_energy(mesh, weights):
    """Minimum of ||A x - b||_F^2 over placements with vertex 0 pinned."""
    system = assemble_system(mesh, weights)
    return _solve_raw(mesh, system)[2]


def is_admissible(mesh, weights, tol=ADMISSIBLE_TOL):
    if tol <= 0:
        raise ValueError("tol must be positive")
    return balance_energy(mesh, weights) <= tol


def residual_structure(mesh, weights, tol=ADMISSIBLE_TOL):
    """Residual report at the least-squares solution for these weights."""
    return solve_balance(mesh, weights, tol)[1]


def tutte_map(mesh, weights, tol=ADMISSIBLE_TOL):
    """Balanced placement of admissible weights, certified as an embedding.

    Raises NotAdmissibleError when the balance energy exceeds ``tol``
    and EmbeddingCheckFailedError when the certificate is violated,
    which no admissible input should trigger.
    """
    placement, report = solve_balance(mesh, weights, tol)
    if report.energy > tol:
        raise NotAdmissibleError(
            f"balance energy {report.energy:.3e} exceeds tolerance {tol:.3e}"
        )
    certificate = verify_embedding(mesh, placement)
    if not certificate.is_embedding:
        raise EmbeddingCheckFailedError(
            f"balanced placement failed the embedding certificate "
            f"(min area {certificate.min_area:.3e}, total {certificate.total_area:.12f})"
        )
    return placement
