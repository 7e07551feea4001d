"""Morphs between embedded placements through weight space.

Both endpoints are converted to mean value weights, interpolated
linearly, and each interpolant is retracted to an admissible
assignment whose balanced placement is the frame. Every frame is then
an embedding by construction, and the endpoint frames reproduce the
inputs because mean value weights are already admissible.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotEmbeddedError, RetractFailedError
from .flow import BUDGET_EXCEEDED, retract
from .geometry import verify_embedding
from .mvc import mean_value_weights
from .tutte import ADMISSIBLE_TOL, WeightAssignment, tutte_map


@dataclass(frozen=True)
class MorphReport:
    frame_reports: list
    max_displacement: float
    passed: bool


def morph(mesh, start, end, steps, tol=ADMISSIBLE_TOL, max_steps=200_000):
    """Embedded frames from ``start`` to ``end``, inclusive.

    Both placements must be anchored embeddings of the same mesh;
    ``steps`` counts the frames returned, at least 2. No state carries
    over between frames, each retraction starts fresh from its
    interpolated weights.
    """
    if steps < 2:
        raise ValueError("a morph needs at least 2 frames")
    for name, p in (("start", start), ("end", end)):
        if not p.anchored:
            raise ValueError(f"{name} placement must have vertex 0 at the origin")
        if not verify_embedding(mesh, p).is_embedding:
            raise NotEmbeddedError(f"{name} placement is not an embedding")
    w0 = mean_value_weights(mesh, start).values
    w1 = mean_value_weights(mesh, end).values
    frames = []
    for s in range(steps):
        t = s / (steps - 1)
        trace = retract(
            mesh, WeightAssignment((1.0 - t) * w0 + t * w1), tol=tol, max_steps=max_steps
        )
        if trace.status == BUDGET_EXCEEDED:
            raise RetractFailedError(f"retraction at t={t:.4f} did not converge")
        frames.append(tutte_map(mesh, trace.final_weights, tol))
    return frames


def verify_morph(mesh, frames):
    """Certify every frame and measure the largest inter-frame jump."""
    reports = [verify_embedding(mesh, f) for f in frames]
    max_disp = 0.0
    for a, b in zip(frames, frames[1:]):
        max_disp = max(max_disp, float(np.abs(a.coords - b.coords).max()))
    return MorphReport(
        frame_reports=reports,
        max_displacement=max_disp,
        passed=all(r.is_embedding for r in reports),
    )
