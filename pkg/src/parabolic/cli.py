"""``parabolic`` command-line interface."""
from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .criteria import RegionR, RegionS, lemma1_condition
from .directions import characteristic_directions
from .dynamics.fatou import fatou_coordinate, model_step
from .dynamics.normal_form import SectorRegion
from .dynamics.orbit import OrbitConfig, iterate_orbit, nearest_direction
from .dynamics.raster import SliceSpec, raster_slice, write_grid
from .errors import FatouConvergenceError, GermError, ParabolicError
from .io import GermFileError, analysis_report, default_seed, dumps, load_germ

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3


class InputError(Exception):
    pass


def _complex_list(text: str, count: int, what: str) -> list[complex]:
    """Parse ``re,im,re,im,...`` into ``count`` complex numbers."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 * count:
        raise InputError(f"{what}: expected {2 * count} comma-separated reals, got {len(parts)}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise InputError(f"{what}: not a list of reals: {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise InputError(f"{what}: values must be finite")
    return [complex(vals[2 * i], vals[2 * i + 1]) for i in range(count)]


def _add_orbit_flags(p: argparse.ArgumentParser) -> None:
    d = OrbitConfig()
    p.add_argument("--max-iter", type=int, default=d.max_iter)
    p.add_argument("--attract-radius", type=float, default=d.attract_radius)
    p.add_argument("--escape-radius", type=float, default=d.escape_radius)
    p.add_argument("--tangency-tol", type=float, default=d.tangency_tol)
    p.add_argument("--window", type=int, default=d.direction_window,
                   help="iterates over which the direction must stabilise")


def _config(args) -> OrbitConfig:
    try:
        return OrbitConfig(args.max_iter, args.attract_radius, args.escape_radius,
                           args.tangency_tol, args.window)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load(path: str):
    try:
        return load_germ(path)
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from None


def _fmt_c(c) -> str:
    if c is None:
        return "-"
    if isinstance(c, dict):
        c = complex(c["re"], c["im"])
    if c.imag == 0:
        return f"{c.real:.6g}"
    return f"{c.real:.6g}{c.imag:+.6g}i"


def cmd_analyze(args) -> int:
    F = _load(args.germ)
    report = analysis_report(F)
    if args.table:
        print(f"order k = {report['order']}, dicritical = {str(report['dicritical']).lower()}")
        head = ("direction", "mult", "m", "n", "class", "lambda", "hakim", "abate",
                "conclusion", "justification")
        rows = [head]
        for d in report["directions"]:
            v = d["verdict"]
            rows.append((d["label"], str(d["multiplicity"]), str(d["m"]), str(d["n"]),
                         d["class"], _fmt_c(d["lambda"]), _fmt_c(d["hakim"]),
                         _fmt_c(d["abate"]), v["conclusion"], v["justification"]))
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        for r in rows:
            print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    else:
        print(dumps(report))
    return EXIT_OK


def cmd_orbit(args) -> int:
    F = _load(args.germ)
    start = _complex_list(args.start, 2, "--start")
    if start[0] == 0 and start[1] == 0:
        raise InputError("--start must differ from the origin")
    res = iterate_orbit(F, start, _config(args))
    nearest = None
    if res.direction is not None:
        dirs = characteristic_directions(F).directions
        if dirs:
            nearest = dirs[nearest_direction(res.direction, dirs)[0]].label
    print(dumps({
        "fate": res.fate,
        "iterations": res.iterations,
        "final_point": list(res.final_point),
        "direction": None if res.direction is None else list(res.direction),
        "nearest_direction": nearest,
    }))
    return EXIT_OK


def cmd_raster(args) -> int:
    F = _load(args.germ)
    if not args.out.lower().endswith((".ppm", ".csv")):
        raise InputError("--out must end in .ppm or .csv")
    try:
        spec = SliceSpec(
            tuple(_complex_list(args.origin, 2, "--origin")),
            tuple(_complex_list(args.e1, 2, "--e1")),
            tuple(_complex_list(args.e2, 2, "--e2")),
            args.width, args.height, args.extent)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    grid = raster_slice(F, spec, _config(args), workers=max(1, args.threads))
    write_grid(grid, args.out)
    for name, count in grid.counts().items():
        print(f"{name}: {count}")
    return EXIT_OK


def cmd_check(args) -> int:
    if args.lemma1 is not None:
        parts = [p.strip() for p in args.lemma1.split(",")]
        if len(parts) != 4:
            raise InputError("--lemma1 expects c,d,a,b")
        try:
            c, d = complex(parts[0]), complex(parts[1])
            a, b = int(parts[2]), int(parts[3])
        except ValueError:
            raise InputError("--lemma1: c,d complex (e.g. 1+2j) and a,b integers") from None
        try:
            ok = lemma1_condition(c, d, a, b)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        t = c / d
        print(f"{str(ok).lower()} c/d={_fmt_c(t)} bound={-b / a:.17g} "
              f"center={-b / (2 * a):.17g} radius={b / (2 * a):.17g}")
        return EXIT_OK
    if args.region is None or args.zeta is None or args.m is None:
        raise InputError("check needs --region with --m and --zeta, or --lemma1")
    zeta = _complex_list(args.zeta, 1, "--zeta")[0]
    if args.m < 0:
        raise InputError("--m must be nonnegative")
    if args.region == "R":
        if args.k is None:
            raise InputError("--region R needs --k")
        try:
            reg = RegionR(args.m, args.k)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        status = reg.status(zeta)
        extra = (f"bound={reg.half_plane_bound:.17g} center={reg.circle_center:.17g} "
                 f"radius={reg.circle_radius:.17g}")
    else:
        reg = RegionS(args.m)
        status = reg.status(zeta)
        extra = f"center={reg.center:.17g} radius={reg.radius:.17g}"
    word = {"inside": "true", "outside": "false", "boundary": "boundary"}[status]
    print(f"{word} {extra}")
    return EXIT_OK


def cmd_fatou(args) -> int:
    p0 = _complex_list(args.point, 2, "--point")
    try:
        v = fatou_coordinate(model_step, p0, tol=args.tol, max_iter=args.max_iter)
        v1 = fatou_coordinate(model_step, model_step(*p0), tol=args.tol, max_iter=args.max_iter)
    except FatouConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = {
        "phi1": v.phi1,
        "phi2": v.phi2,
        "converged": v.converged,
        "iterations": v.iterations,
        "translation_residual": max(abs(v1.phi1 - v.phi1 - 1), abs(v1.phi2 - v.phi2)),
    }
    if args.samples:
        rng = np.random.default_rng(default_seed() if args.seed is None else args.seed)
        xs, ys = SectorRegion(5.0, 2.0, math.pi / 8).sample(args.samples, rng)
        worst = 0.0
        for x, y in zip(xs, ys):
            a = fatou_coordinate(model_step, (x, y), tol=args.tol, max_iter=args.max_iter)
            b = fatou_coordinate(model_step, model_step(x, y), tol=args.tol,
                                 max_iter=args.max_iter)
            worst = max(worst, abs(b.phi1 - a.phi1 - 1), abs(b.phi2 - a.phi2))
        out["samples"] = int(xs.size)
        out["max_translation_residual"] = worst
    print(dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="parabolic",
        description="Analyse and simulate germs of C^2 tangent to the identity.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="characteristic directions, indices and verdicts")
    p.add_argument("germ")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON report (default)")
    g.add_argument("--table", action="store_true", help="human-readable table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("orbit", help="iterate one point and report its fate")
    p.add_argument("germ")
    p.add_argument("--start", required=True, help="re,im,re,im")
    _add_orbit_flags(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("raster", help="fate grid on a real 2-plane, as PPM or CSV")
    p.add_argument("germ")
    p.add_argument("--origin", default="0,0,0,0", help="re,im,re,im")
    p.add_argument("--e1", default="1,0,1,0", help="first basis vector re,im,re,im")
    p.add_argument("--e2", default="0,1,0,1", help="second basis vector re,im,re,im")
    p.add_argument("--width", type=int, default=64)
    p.add_argument("--height", type=int, default=64)
    p.add_argument("--extent", type=float, default=0.5)
    p.add_argument("--out", required=True, help="output path ending in .ppm or .csv")
    p.add_argument("--threads", type=int, default=1)
    _add_orbit_flags(p)
    p.set_defaults(func=cmd_raster)

    p = sub.add_parser("check", help="region membership or the cone condition of the lift")
    p.add_argument("--region", choices=("R", "S"))
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--zeta", help="re,im")
    p.add_argument("--lemma1", help="c,d,a,b with c and d complex (Python syntax, e.g. 1+2j)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fatou", help="Fatou coordinate of the model map (x+1, y+1/x)")
    p.add_argument("--point", default="10,0,5,0", help="x and y as re,im,re,im")
    p.add_argument("--tol", type=float, default=1e-13)
    p.add_argument("--max-iter", type=int, default=10_000)
    p.add_argument("--samples", type=int, default=0,
                   help="also check the translation property on this many random points")
    p.add_argument("--seed", type=int, default=None,
                   help="sampling seed (default: PARABOLIC_SEED or 42)")
    p.set_defaults(func=cmd_fatou)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GermError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, GermFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ParabolicError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
