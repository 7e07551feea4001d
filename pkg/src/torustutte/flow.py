"""Retraction flow from arbitrary positive weights to admissible ones.

The flow multiplies each weight by two smooth gates,

    dw_ij/dt = w_ij * G((w_ij + w_ji) u_ij / alpha) * H(w_ij - w_ji),

where u_ij projects the lifted edge vector onto the shared residual
direction. G switches on only for edges whose projection is negative
enough, H switches off once w_ij outruns its reverse by 2. Both are
plateaued mollifier ramps, so the field is smooth, keeps weights
growing at most exponentially, never decreases them, and strictly
dissipates the balance energy at a rate bounded through a handful of
derived constants:

    loop_gap    guaranteed depth of the most negative projection,
                1 / (sqrt(2) * max generator loop length)
    min_weight  smallest weight, never decreases along the flow
    asym_bound  max(2, largest |w_ij - w_ji|), never increases
    gate_scale  loop_gap / (2 E + sum of 1/w_ij), the G argument scale
    decay_rate  lower bound on -d sqrt(energy)/dt
    time_bound  2 sqrt(energy) / decay_rate, time to reach energy zero

Integration is explicit Euler with step acceptance: a step counts only
if the energy strictly drops and the asymmetry bound does not grow;
otherwise the step halves. Every accepted step re-solves the balance
system from scratch.
"""

from dataclasses import dataclass

import numpy as np

from .errors import AdmissibleInputError, NonFiniteStateError
from .geometry import Placement, edge_vectors
from .mesh import generator_loops
from .tutte import (
    ADMISSIBLE_TOL,
    WeightAssignment,
    _solve_raw,
    _validated_values,
    assemble_system,
)

CONVERGED = "converged"
BUDGET_EXCEEDED = "budget_exceeded"
ALREADY_ADMISSIBLE = "already_admissible"

DT_INIT = 0.01
DT_MIN = 1e-8
DT_MAX = 0.25


@dataclass(frozen=True)
class FlowConstants:
    loop_gap: float
    min_weight: float
    asym_bound: float
    gate_scale: float
    decay_rate: float
    time_bound: float


@dataclass(frozen=True)
class FlowSample:
    """State recorded after one accepted step (or the initial state)."""

    t: float
    weights: np.ndarray
    energy: float
    min_weight: float
    asym_bound: float


@dataclass(frozen=True)
class FlowTrace:
    samples: list
    status: str
    final_weights: WeightAssignment
    steps: int


def _ramp(t):
    """Smooth ramp: 0 for t <= 0, 1 for t >= 1, strictly increasing between."""
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore", over="ignore"):
        lo = np.where(t > 0, np.exp(-1.0 / np.where(t > 0, t, 1.0)), 0.0)
        hi = np.where(t < 1, np.exp(-1.0 / np.where(t < 1, 1.0 - t, 1.0)), 0.0)
    return lo / (lo + hi)


def projection_gate(s):
    """Gate on scaled projections: 1 at or below -1, 0 at or above 0."""
    out = 1.0 - _ramp(np.asarray(s, dtype=float) + 1.0)
    return float(out) if np.ndim(s) == 0 else out


def asymmetry_gate(s):
    """Gate on w_ij - w_ji: 1 at or below 1, 0 at or above 2."""
    out = 1.0 - _ramp(np.asarray(s, dtype=float) - 1.0)
    return float(out) if np.ndim(s) == 0 else out


def loop_gap(mesh):
    """1 / (sqrt(2) * length of the longer generator loop)."""
    loops = generator_loops(mesh)
    k = max(len(loops.horizontal), len(loops.vertical))
    return 1.0 / (np.sqrt(2.0) * k)


def _asym_bound(values, rev):
    return max(2.0, float(np.abs(values - values[rev]).max()))


def flow_constants(mesh, weights, energy=None):
    """Derived constants of the flow at the given weights.

    ``energy`` defaults to the balance energy of the weights; pass it
    when already computed to avoid one solve.
    """
    values = _validated_values(mesh, weights)
    if energy is None:
        _, _, energy = _solve_raw(mesh, assemble_system(mesh, weights))
    gap = loop_gap(mesh)
    n = mesh.vertex_count
    lo = float(values.min())
    asym = _asym_bound(values, mesh.reverse_index)
    gate_scale = gap / (2.0 * mesh.edge_count + float((1.0 / values).sum()))
    decay_rate = (gap * lo / asym) / (2.0 * np.sqrt(n) * (1.0 + asym / lo) ** (n - 1))
    return FlowConstants(
        loop_gap=gap,
        min_weight=lo,
        asym_bound=asym,
        gate_scale=gate_scale,
        decay_rate=float(decay_rate),
        time_bound=float(2.0 * np.sqrt(energy) / decay_rate),
    )


def _velocity(mesh, values, coords, residual):
    """Euler field at the current state; assumes a nonzero residual."""
    norms = np.linalg.norm(residual, axis=1)
    top = residual[int(np.argmax(norms))]
    direction = top / np.linalg.norm(top)
    u = edge_vectors(mesh, Placement(coords)) @ direction
    rev = mesh.reverse_index
    gap = loop_gap(mesh)
    gate_scale = gap / (2.0 * mesh.edge_count + float((1.0 / values).sum()))
    return values * projection_gate(
        (values + values[rev]) * u / gate_scale
    ) * asymmetry_gate(values - values[rev])


def flow_velocity(mesh, weights, tol=ADMISSIBLE_TOL):
    """dw/dt at the given weights; raises AdmissibleInputError at energy <= tol."""
    values = _validated_values(mesh, weights)
    coords, residual, energy = _solve_raw(mesh, assemble_system(mesh, weights))
    if energy <= tol:
        raise AdmissibleInputError(
            f"flow velocity undefined: energy {energy:.3e} is within tolerance"
        )
    return _velocity(mesh, values, coords, residual)


def retract(
    mesh,
    weights,
    tol=ADMISSIBLE_TOL,
    max_steps=200_000,
    dt_init=DT_INIT,
    dt_min=DT_MIN,
    dt_max=DT_MAX,
):
    """Integrate the flow until the weights become admissible.

    Explicit Euler with acceptance control: a trial step is accepted
    only if all weights stay finite and positive, the balance energy
    strictly decreases, and the asymmetry bound does not grow; on
    rejection the step halves down to ``dt_min``. Each accepted step
    re-solves the balance system. Returns a FlowTrace whose samples
    record every accepted state; status is ``converged``,
    ``already_admissible``, or ``budget_exceeded`` (best weights found
    are still returned).
    """
    values = _validated_values(mesh, weights).copy()
    rev = mesh.reverse_index
    coords, residual, energy = _solve_raw(mesh, assemble_system(mesh, WeightAssignment(values)))
    samples = [
        FlowSample(0.0, values.copy(), energy, float(values.min()), _asym_bound(values, rev))
    ]
    if energy <= tol:
        return FlowTrace(samples, ALREADY_ADMISSIBLE, WeightAssignment(values), 0)

    t = 0.0
    dt = float(dt_init)
    steps = 0
    status = BUDGET_EXCEEDED
    while steps < max_steps:
        velocity = _velocity(mesh, values, coords, residual)
        asym = _asym_bound(values, rev)
        accepted = False
        while dt >= dt_min:
            trial = values + dt * velocity
            if not np.isfinite(trial).all() or (trial <= 0).any():
                if dt * 0.5 < dt_min:
                    raise NonFiniteStateError("flow state left the positive cone")
                dt *= 0.5
                continue
            coords_t, residual_t, energy_t = _solve_raw(
                mesh, assemble_system(mesh, WeightAssignment(trial))
            )
            if (
                np.isfinite(energy_t)
                and energy_t < energy
                and _asym_bound(trial, rev) <= asym + 1e-12
            ):
                accepted = True
                break
            dt *= 0.5
        if not accepted:
            break
        steps += 1
        t += dt
        values = trial
        coords, residual, energy = coords_t, residual_t, energy_t
        samples.append(
            FlowSample(t, values.copy(), energy, float(values.min()), _asym_bound(values, rev))
        )
        if energy <= tol:
            status = CONVERGED
            break
        dt = min(dt * 2.0, dt_max)
    return FlowTrace(samples, status, WeightAssignment(values), steps)
