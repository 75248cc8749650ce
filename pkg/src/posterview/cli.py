"""Command-line front end.

Subcommands: enhance, grid, glare, evaluate, bench, serve.  Machine-readable
output is always valid P6 (to files) or JSON (to stdout).  Exit codes: 0 ok,
1 benchmark budget failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bench import run_bench
from .core import Roi
from .glare import GlareSpec, apply_glare, evaluate_methods
from .methods import METHOD_NAMES, EnhanceParams, comparison_grid, enhance, method_from_name
from .ppm import PpmError, read_ppm, write_ppm
from .service import serve


def _read_frame(path: str) -> np.ndarray:
    with open(path, "rb") as f:
        return read_ppm(f.read())


def _write_frame(path: str, frame: np.ndarray) -> None:
    with open(path, "wb") as f:
        f.write(write_ppm(frame))


def _parse_roi(text: str) -> Roi:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"roi must be x,y,w,h, got {text!r}")
    x, y, w, h = (int(p) for p in parts)
    return Roi(x, y, w, h)


def _glare_spec(args: argparse.Namespace, frame: np.ndarray) -> GlareSpec:
    if args.mask == "uniform":
        return GlareSpec(strength=args.strength)
    h, w = frame.shape[:2]
    return GlareSpec(
        strength=args.strength,
        mask="radial",
        cx=args.cx if args.cx is not None else w / 2.0,
        cy=args.cy if args.cy is not None else h / 2.0,
        sigma=args.sigma if args.sigma is not None else min(w, h) / 4.0,
    )


def _add_params_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--midpoint", type=int, default=128, help="threshold level (default 128)")
    p.add_argument(
        "--subsample", type=int, default=1, help="statistics sampling stride (default 1, exact)"
    )


def _params(args: argparse.Namespace) -> EnhanceParams:
    return EnhanceParams(
        midpoint=getattr(args, "midpoint", 128),
        stats_subsample=getattr(args, "subsample", 1),
    )


def _add_glare_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strength", type=float, required=True, help="glare strength in [0, 1]")
    p.add_argument("--mask", choices=["uniform", "radial"], default="uniform")
    p.add_argument("--cx", type=float, help="radial center x (default: frame center)")
    p.add_argument("--cy", type=float, help="radial center y (default: frame center)")
    p.add_argument("--sigma", type=float, help="radial falloff in pixels (default: min(w,h)/4)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posterview", description="high-contrast viewfinder enhancement toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enhance", help="apply one method to a P6 image")
    p.add_argument("--method", choices=METHOD_NAMES, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    _add_params_flags(p)

    p = sub.add_parser("grid", help="2x3 montage of all six methods")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    _add_params_flags(p)

    p = sub.add_parser("glare", help="overlay simulated glare on a P6 image")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    _add_glare_flags(p)

    p = sub.add_parser("evaluate", help="score all methods under glare (JSON to stdout)")
    p.add_argument("--input", required=True)
    p.add_argument("--roi", required=True, help="landmark region as x,y,w,h")
    _add_glare_flags(p)
    _add_params_flags(p)

    p = sub.add_parser("bench", help="latency benchmark (JSON to stdout)")
    p.add_argument("--width", type=int, default=480)
    p.add_argument("--height", type=int, default=800)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--warmup", type=int, default=10)
    p.add_argument(
        "--budget-ms",
        type=float,
        nargs="?",
        const=33.0,
        default=None,
        help="per-frame p95 budget; bare flag means 33 ms, omitted means measure only",
    )
    p.add_argument("--subsample", type=int, default=1)

    p = sub.add_parser("serve", help="run the websocket frame service")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--subsample", type=int, default=1)

    return parser


def _cmd_enhance(args: argparse.Namespace) -> int:
    frame = _read_frame(args.input)
    _write_frame(args.output, enhance(frame, method_from_name(args.method), _params(args)))
    return 0


def _cmd_grid(args: argparse.Namespace) -> int:
    frame = _read_frame(args.input)
    _write_frame(args.output, comparison_grid(frame, _params(args)))
    return 0


def _cmd_glare(args: argparse.Namespace) -> int:
    frame = _read_frame(args.input)
    _write_frame(args.output, apply_glare(frame, _glare_spec(args, frame)))
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    frame = _read_frame(args.input)
    report = evaluate_methods(frame, _parse_roi(args.roi), _glare_spec(args, frame), _params(args))
    print(json.dumps(report.to_json_dict()))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    report = run_bench(
        width=args.width,
        height=args.height,
        iterations=args.iters,
        warmup=args.warmup,
        params=EnhanceParams(stats_subsample=args.subsample),
        budget_ms=args.budget_ms,
    )
    print(json.dumps(report.to_json_dict()))
    return 1 if report.any_failed() else 0


def _cmd_serve(args: argparse.Namespace) -> int:
    serve(port=args.port, params=EnhanceParams(stats_subsample=args.subsample), host=args.host)
    return 0


_COMMANDS = {
    "enhance": _cmd_enhance,
    "grid": _cmd_grid,
    "glare": _cmd_glare,
    "evaluate": _cmd_evaluate,
    "bench": _cmd_bench,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (PpmError, OSError, ValueError) as err:
        print(f"posterview {args.command}: {err}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
