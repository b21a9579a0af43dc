"""Command-line interface.

Exit codes: 0 success or entanglement detected, 1 not detected or no
threshold, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import GMEError
from .io import load_state, save_state
from .measure import gme_concurrence_pure
from .ppt import ppt_classify
from .scan import ScanSpec, format_csv, scan_rows
from .states import FamilySpec, as_complex, build_family, white_noise
from .tensor import StateVector, as_density
from .witness import OptimizerConfig, maximize_bound, noise_threshold

EXIT_OK, EXIT_NOT_DETECTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load_config(path):
    if path is None:
        return {}
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    unknown = set(doc) - {"state", "optimizer", "scan"}
    if unknown:
        raise UsageError(f"unknown config sections: {sorted(unknown)}")
    return doc


def _optimizer(args, conf) -> OptimizerConfig:
    opts = dict(conf.get("optimizer", {}))
    for key in ("restarts", "max_iters", "seed", "tol"):
        val = getattr(args, key, None)
        if val is not None:
            opts[key] = val
    try:
        return OptimizerConfig(**opts)
    except TypeError as exc:
        raise UsageError(f"bad optimizer section: {exc}") from exc


def _family_spec(args, conf) -> FamilySpec:
    sect = dict(conf.get("state", {}))
    kind = args.family or sect.get("kind")
    params = dict(sect.get("params", {}))
    for key in ("alpha", "beta", "c1", "c2", "p"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if kind == "gghz":
        params.setdefault("alpha", 1 / np.sqrt(2))
        if "beta" not in params:
            params["beta"] = float(np.sqrt(max(0.0, 1.0 - abs(as_complex(params["alpha"])) ** 2)))
    dims = sect.get("dims")
    if args.n is not None or dims is None:
        n = args.n if args.n is not None else 3
        d = args.d if args.d is not None else 2
        dims = [d] * n
    seed = args.frame_seed if args.frame_seed is not None else sect.get("seed")
    frames = sect.get("frames")
    return FamilySpec(kind, tuple(dims), params, tuple(frames) if frames else None, seed)


def _state(args, conf):
    sect = conf.get("state", {})
    path = args.file or sect.get("file")
    if path and not args.family:
        return load_state(path)
    if not (args.family or sect.get("kind")):
        raise UsageError("give a state with --file or --family")
    return build_family(_family_spec(args, conf))


def _fmt_witness(w) -> str:
    frame = "; ".join("[" + ", ".join(f"{a:.6f}" for a in angles) + "]" for angles in w.frame)
    x = "".join(map(str, w.x))
    y = "".join(map(str, w.y))
    return f"x={x} y={y} frame={frame}"


def cmd_pure(args, conf, out) -> int:
    state = _state(args, conf)
    if not isinstance(state, StateVector):
        print("error: input is a mixed state; use the 'bound' command for mixed states", file=sys.stderr)
        return EXIT_USAGE
    rep = gme_concurrence_pure(state)
    for g, v in rep.per_bipartition.items():
        print(f"C{g} {v:.6f}", file=out)
    print(f"gme {rep.gme_value:.6f}", file=out)
    print(f"minimizing {rep.minimizing_bipartition}", file=out)
    return EXIT_OK


def cmd_bound(args, conf, out) -> int:
    state = _state(args, conf)
    res = maximize_bound(state, _optimizer(args, conf))
    print(f"raw_2I {res.raw_2I:.6f}", file=out)
    print(f"lower_bound {res.lower_bound:.6f}", file=out)
    print(f"witness {_fmt_witness(res.witness)}", file=out)
    print(f"evaluations {res.evaluations} converged {int(res.converged)}", file=out)
    return EXIT_OK if res.detected else EXIT_NOT_DETECTED


def cmd_scan(args, conf, out) -> int:
    sect = dict(conf.get("scan", {}))
    h = args.h if args.h is not None else sect.get("h", 0.02)
    output = args.output or sect.get("output")
    workers = args.workers if args.workers is not None else sect.get("workers", 1)
    warm = sect.get("warm_start", True) and not args.no_warm_start
    spec = ScanSpec(h, _optimizer(args, conf), output, workers, warm)
    if output:
        try:
            Path(output).open("w").close()
        except OSError as exc:
            raise UsageError(f"cannot write {output}: {exc}") from exc
    text = format_csv(scan_rows(spec), spec.decimals)
    if output:
        Path(output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_noise(args, conf, out) -> int:
    pure = build_family(_family_spec(args, conf))
    if not isinstance(pure, StateVector):
        raise UsageError("noise needs a pure family (ghz, w, gghz, product)")
    res = noise_threshold(lambda p: white_noise(pure, p), _optimizer(args, conf), tol=args.p_tol)
    if res.outcome != "threshold":
        print(f"outcome {res.outcome}", file=out)
        return EXIT_NOT_DETECTED
    print(f"p_star {res.p_star:.3f}", file=out)
    print(f"resistance {res.resistance:.3f}", file=out)
    return EXIT_OK


def cmd_ppt(args, conf, out) -> int:
    rep = ppt_classify(as_density(_state(args, conf)))
    for g, v in rep.per_bipartition.items():
        print(f"min_eig{g} {v:.6f}", file=out)
    print(f"ppt_all {int(rep.ppt_all)}", file=out)
    return EXIT_OK


def cmd_state_gen(args, conf, out) -> int:
    state = build_family(_family_spec(args, conf))
    save_state(state, args.output)
    print(f"wrote {args.output}", file=out)
    return EXIT_OK


def _add_state_args(p, file_arg=True):
    if file_arg:
        p.add_argument("--file", help="state file (JSON, see README)")
    p.add_argument("--family", choices=["ghz", "w", "gghz", "ghz_w_noise", "ghz_noise", "product"])
    p.add_argument("-n", type=int, help="number of parties (default 3)")
    p.add_argument("-d", type=int, help="local dimension (default 2)")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--c1", type=float)
    p.add_argument("--c2", type=float)
    p.add_argument("-p", type=float, help="visibility for ghz_noise")
    p.add_argument("--frame-seed", type=int, help="random local frames for gghz")


def _add_opt_args(p):
    p.add_argument("--restarts", type=int)
    p.add_argument("--max-iters", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gmeconc", description="Genuine multipartite entanglement bounds.")
    parser.add_argument("--config", help="JSON config with sections state, optimizer, scan")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pure", help="gme-concurrence of a pure state")
    _add_state_args(p)
    p.set_defaults(func=cmd_pure)

    p = sub.add_parser("bound", help="optimized lower bound on the gme-concurrence")
    _add_state_args(p)
    _add_opt_args(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("scan", help="bound and PPT flag over the GHZ/W/noise simplex (CSV)")
    p.add_argument("--h", type=float, help="grid step (default 0.02)")
    p.add_argument("-o", "--output")
    p.add_argument("--workers", type=int)
    p.add_argument("--no-warm-start", action="store_true")
    _add_opt_args(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("noise", help="white-noise threshold of a pure family")
    _add_state_args(p, file_arg=False)
    _add_opt_args(p)
    p.add_argument("--p-tol", type=float, default=1e-4, help="bisection tolerance in p (default 1e-4)")
    p.set_defaults(func=cmd_noise)

    p = sub.add_parser("ppt", help="partial-transpose test on every bipartition")
    _add_state_args(p)
    p.set_defaults(func=cmd_ppt)

    p = sub.add_parser("state", help="state file utilities")
    ssub = p.add_subparsers(dest="state_command", required=True)
    g = ssub.add_parser("gen", help="write a named state to a file")
    _add_state_args(g, file_arg=False)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_state_gen)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        conf = _load_config(args.config)
        return args.func(args, conf, out)
    except (UsageError, GMEError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
