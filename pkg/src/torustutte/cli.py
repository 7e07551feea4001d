"""Command line interface.

Exit codes: 0 success, 2 validation failure (bad mesh, non-embedded
placement, non-admissible weights, malformed input), 3 numerical
failure (budget exhausted, certificate violation).
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import serialize
from .errors import (
    AdmissibleInputError,
    DegenerateFaceError,
    DegenerateVertexError,
    EmbeddingCheckFailedError,
    MeshError,
    NonFiniteStateError,
    NonPositiveWeightError,
    NotAdmissibleError,
    NotEmbeddedError,
    PerturbFailedError,
    RetractFailedError,
    SingularSystemError,
    TorusTutteError,
)
from .fixtures import gen_grid, perturb
from .flow import CONVERGED, ALREADY_ADMISSIBLE, retract
from .geometry import verify_embedding
from .mesh import generator_loops
from .morph import morph, verify_morph
from .mvc import check_balanced, mean_value_weights
from .oneform import direction_form, generic_direction_form, index_theorem_check
from .render import render_svg
from .tutte import balance_energy, tutte_map

VALIDATION_ERRORS = (
    MeshError,
    NotEmbeddedError,
    NotAdmissibleError,
    NonPositiveWeightError,
    AdmissibleInputError,
    DegenerateFaceError,
    DegenerateVertexError,
    ValueError,
    KeyError,
    OSError,
    json.JSONDecodeError,
)
NUMERICAL_ERRORS = (
    EmbeddingCheckFailedError,
    SingularSystemError,
    NonFiniteStateError,
    RetractFailedError,
    PerturbFailedError,
)


def _emit(args, obj):
    if not args.quiet:
        sys.stdout.write(serialize.dump_json(obj))


def _load_mesh(path):
    return serialize.mesh_from_json(serialize.load_json(path))


def _load_weights(mesh, path):
    return serialize.weights_from_json(mesh, serialize.load_json(path))


def _load_placement(path):
    return serialize.placement_from_json(serialize.load_json(path))


def cmd_validate(args):
    mesh = _load_mesh(args.mesh)
    loops = generator_loops(mesh)
    out = {
        "valid": True,
        "vertex_count": mesh.vertex_count,
        "edge_count": mesh.edge_count,
        "face_count": len(mesh.faces),
        "generator_lengths": [len(loops.horizontal), len(loops.vertical)],
    }
    if args.placement:
        report = verify_embedding(mesh, _load_placement(args.placement))
        out["embedding"] = {
            "is_embedding": report.is_embedding,
            "degree": report.degree,
            "min_area": report.min_area,
            "total_area": report.total_area,
        }
    _emit(args, out)
    return 0


def cmd_gen(args):
    mesh, placement = gen_grid(args.size)
    if args.perturb > 0:
        placement = perturb(mesh, placement, args.perturb, args.seed)
    serialize.dump_json(serialize.mesh_to_json(mesh), args.out_mesh)
    out = {"vertex_count": mesh.vertex_count, "mesh": args.out_mesh}
    if args.out_placement:
        serialize.dump_json(serialize.placement_to_json(placement), args.out_placement)
        out["placement"] = args.out_placement
    _emit(args, out)
    return 0


def cmd_embed(args):
    mesh = _load_mesh(args.mesh)
    weights = _load_weights(mesh, args.weights)
    placement = tutte_map(mesh, weights, args.tol)
    serialize.dump_json(serialize.placement_to_json(placement), args.out_placement)
    report = verify_embedding(mesh, placement)
    out = {
        "placement": args.out_placement,
        "is_embedding": report.is_embedding,
        "min_area": report.min_area,
        "total_area": report.total_area,
    }
    if args.report:
        serialize.dump_json(out, args.report)
    _emit(args, out)
    return 0


def cmd_mvc(args):
    mesh = _load_mesh(args.mesh)
    placement = _load_placement(args.placement)
    weights = mean_value_weights(mesh, placement)
    serialize.dump_json(serialize.weights_to_json(mesh, weights), args.out_weights)
    _emit(
        args,
        {
            "weights": args.out_weights,
            "imbalance": check_balanced(mesh, placement, weights),
        },
    )
    return 0


def cmd_energy(args):
    mesh = _load_mesh(args.mesh)
    weights = _load_weights(mesh, args.weights)
    energy = balance_energy(mesh, weights)
    sys.stdout.write(
        serialize.dump_json(
            {"energy": energy, "admissible": energy <= args.tol, "tol": args.tol}
        )
    )
    return 0


def cmd_retract(args):
    mesh = _load_mesh(args.mesh)
    weights = _load_weights(mesh, args.weights)
    trace = retract(mesh, weights, tol=args.tol, max_steps=args.max_steps)
    if args.trace:
        serialize.trace_to_jsonl(trace, args.trace)
    if args.out_weights:
        serialize.dump_json(
            serialize.weights_to_json(mesh, trace.final_weights), args.out_weights
        )
    _emit(
        args,
        {
            "status": trace.status,
            "steps": trace.steps,
            "energy": trace.samples[-1].energy,
            "t": trace.samples[-1].t,
        },
    )
    return 0 if trace.status in (CONVERGED, ALREADY_ADMISSIBLE) else 3


def cmd_morph(args):
    mesh = _load_mesh(args.mesh)
    start = _load_placement(args.from_path)
    end = _load_placement(args.to_path)
    frames = morph(mesh, start, end, args.steps, tol=args.tol, max_steps=args.max_steps)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for k, frame in enumerate(frames):
        serialize.dump_json(
            serialize.placement_to_json(frame), out_dir / f"frame_{k:03d}.json"
        )
        if args.svg:
            (out_dir / f"frame_{k:03d}.svg").write_text(render_svg(mesh, frame))
    report = verify_morph(mesh, frames)
    _emit(
        args,
        {
            "frames": len(frames),
            "out_dir": str(out_dir),
            "passed": report.passed,
            "max_displacement": report.max_displacement,
        },
    )
    return 0 if report.passed else 3


def cmd_index(args):
    mesh = _load_mesh(args.mesh)
    placement = _load_placement(args.placement)
    if args.direction is not None:
        angle = args.direction
        form = direction_form(mesh, placement, np.array([np.cos(angle), np.sin(angle)]))
    else:
        form, angle = generic_direction_form(mesh, placement)
    report = index_theorem_check(mesh, form)
    sys.stdout.write(
        serialize.dump_json(
            {
                "angle": angle,
                "nonvanishing": report.nonvanishing,
                "total": report.total,
                "vertex_indices": report.vertex_indices,
                "face_indices": report.face_indices,
                "degenerate_edges": [list(e) for e in report.degenerate_edges],
                "degenerate_vertices": report.degenerate_vertices,
                "degenerate_faces": report.degenerate_faces,
            }
        )
    )
    return 0


def cmd_render(args):
    mesh = _load_mesh(args.mesh)
    placement = _load_placement(args.placement)
    svg = render_svg(
        mesh,
        placement,
        size=args.size,
        labels=args.labels,
        highlight_flipped=not args.no_highlight,
    )
    Path(args.out).write_text(svg)
    _emit(args, {"out": args.out, "size": args.size})
    return 0


def main(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="admissibility tolerance")
    common.add_argument("--seed", type=int, default=0, help="seed for random generation")
    common.add_argument("--quiet", action="store_true", help="suppress summary output")

    parser = argparse.ArgumentParser(
        prog="torustutte",
        description="Tutte embeddings, retraction flow, and morphs on the flat torus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a mesh file")
    p.add_argument("--mesh", required=True)
    p.add_argument("--placement")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", parents=[common], help="generate a grid fixture")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out-mesh", required=True)
    p.add_argument("--out-placement")
    p.add_argument("--perturb", type=float, default=0.0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("embed", parents=[common], help="balanced placement of admissible weights")
    p.add_argument("--mesh", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--out-placement", required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("mvc", parents=[common], help="mean value weights of an embedding")
    p.add_argument("--mesh", required=True)
    p.add_argument("--placement", required=True)
    p.add_argument("--out-weights", required=True)
    p.set_defaults(func=cmd_mvc)

    p = sub.add_parser("energy", parents=[common], help="balance energy of weights")
    p.add_argument("--mesh", required=True)
    p.add_argument("--weights", required=True)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("retract", parents=[common], help="flow weights to admissibility")
    p.add_argument("--mesh", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--max-steps", type=int, default=200_000)
    p.add_argument("--trace", help="JSONL trace output path")
    p.add_argument("--out-weights")
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("morph", parents=[common], help="morph between two embeddings")
    p.add_argument("--mesh", required=True)
    p.add_argument("--from", dest="from_path", required=True)
    p.add_argument("--to", dest="to_path", required=True)
    p.add_argument("--steps", type=int, default=9)
    p.add_argument("--max-steps", type=int, default=200_000)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--svg", action="store_true")
    p.set_defaults(func=cmd_morph)

    p = sub.add_parser("index", parents=[common], help="one-form index report")
    p.add_argument("--mesh", required=True)
    p.add_argument("--placement", required=True)
    p.add_argument("--direction", type=float, help="direction angle in radians")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("render", parents=[common], help="render a placement to SVG")
    p.add_argument("--mesh", required=True)
    p.add_argument("--placement", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--no-highlight", action="store_true")
    p.set_defaults(func=cmd_render)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NUMERICAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TorusTutteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
