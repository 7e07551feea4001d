"""Morph between two embeddings without ever folding a face.

Straight-line interpolation of vertex coordinates can fold triangles.
Interpolating the mean value weights instead, repairing each blend
with the retraction flow, and re-embedding keeps every intermediate
frame a certified embedding. Frames land in demos/out/ as JSON and SVG.
"""

from pathlib import Path

import numpy as np

from torustutte import gen_grid, morph, perturb, render_svg, verify_morph
from torustutte.serialize import dump_json, placement_to_json

OUT = Path(__file__).resolve().parent / "out" / "morph"
OUT.mkdir(parents=True, exist_ok=True)

mesh, regular = gen_grid(4)
start = perturb(mesh, regular, 0.3 / 4, seed=11)
end = perturb(mesh, regular, 0.3 / 4, seed=22)

frames = morph(mesh, start, end, steps=9)
report = verify_morph(mesh, frames)

print(f"9 frames, all embeddings: {report.passed}")
print(f"max vertex displacement between frames: "
      f"{report.max_displacement:.4f}")

worst = max(
    np.abs(frames[0].coords - start.coords).max(),
    np.abs(frames[-1].coords - end.coords).max(),
)
print(f"endpoint reproduction error: {worst:.3e}")

for k, frame in enumerate(frames):
    (OUT / f"frame_{k:03d}.json").write_text(
        dump_json(placement_to_json(frame))
    )
    (OUT / f"frame_{k:03d}.svg").write_text(render_svg(mesh, frame))

print(f"wrote {len(frames)} JSON + SVG frame pairs to {OUT}")
