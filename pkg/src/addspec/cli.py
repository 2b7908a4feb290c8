"""Command-line front end.

Subcommands: analyze, gram, construct, solve-oe, demo-collinear.  Reports
separate a deterministic ``body`` (identical config -> identical bytes) from
a ``meta`` block carrying version and timing; ``construct`` emits the plain
point-set JSON list so its output feeds straight back into ``--points``.
Errors surface as a JSON object with a machine-readable code and a distinct
exit code per class.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .additive_space import space_from_name
from .constructions import (
    integer_base,
    l_space_onb,
    lev_style_set,
    mirror_spectrum,
    nonoverlap_riesz_spectrum,
)
from .errors import MalformedInputError, ToolkitError
from .exponents import (
    ExponentSet,
    find_zigzag_loop,
    lower_beurling_density,
    max_zigzag_length,
    multiplicity,
    project,
)
from .gram import (
    assemble,
    collinear_failure_demo,
    constant_pair,
    identity_deviation,
    monomial_pair,
    parseval_residual,
    riesz_section_certificate,
)
from .measures import IntervalUnionMeasure, as_fraction
from .ortho_solver import (
    classify_case,
    classify_spectrum_candidates,
    residual,
    scan_residual,
    solve_families,
)

IDENTITY_TOL = 1e-12


@dataclass
class RunConfig:
    """Everything a run needs; identical configs give identical report bodies."""

    command: str
    kind: Optional[str] = None
    space: Optional[str] = None
    points: Optional[str] = None
    measure: Optional[str] = None
    N: int = 16
    k: int = 1
    q: int = 2
    depth: int = 7
    grid: int = 400
    window: float = 20.0
    anchors: int = 64
    seed: int = 0
    sizes: Optional[str] = None
    check: Optional[str] = None
    parseval: bool = False
    scan: bool = False
    classify: bool = False
    box: str = "-4,4,-4,4"
    t: Optional[str] = None
    t_prime: Optional[str] = None
    a: str = "1"
    out: Optional[str] = None
    fmt: str = "json"


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path} is not valid JSON: {exc}") from exc


def load_points(path: str) -> ExponentSet:
    return ExponentSet.from_json(_load_json(path))


def load_measure(path: str) -> IntervalUnionMeasure:
    return IntervalUnionMeasure.from_json(_load_json(path))


def _space_params(name: str) -> Tuple[Fraction, Fraction]:
    """Interval positions (t, t') for a named unit-interval space."""
    table = {
        "L": (Fraction(0), Fraction(0)),
        "Plus": (Fraction(-1, 2), Fraction(-1, 2)),
        "T": (Fraction(-1, 2), Fraction(-1)),
    }
    if name in table:
        return table[name]
    if name.startswith("Symmetric:t="):
        t = as_fraction(name[len("Symmetric:t="):])
        return (t, t)
    raise MalformedInputError(f"unknown space preset {name!r}")


def _parse_box(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise MalformedInputError("box must be 'x0,x1,y0,y1'")
    try:
        x0, x1, y0, y1 = (float(p) for p in parts)
    except ValueError as exc:
        raise MalformedInputError(f"bad box {text!r}") from exc
    return ((x0, x1), (y0, y1))


def _parse_sizes(text: Optional[str], n: int) -> List[int]:
    if text is None:
        # nested ladder by default: a single section cannot show stabilization
        return sorted({max(1, n // 8), max(1, n // 4), max(1, n // 2), n})
    try:
        sizes = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise MalformedInputError(f"bad sizes {text!r}") from exc
    return sizes


# ---------------------------------------------------------------------------
# Command bodies.
# ---------------------------------------------------------------------------


def _cmd_analyze(cfg: RunConfig):
    es = load_points(cfg.points)
    mult, per_line = multiplicity(es)
    loop = find_zigzag_loop(es)
    body = {
        "n_points": len(es),
        "multiplicity": mult,
        "loop": None
        if loop is None
        else {
            "length": loop.length,
            "vertices": [[str(p.a), str(p.b)] for p in loop.vertices],
        },
        "max_zigzag_length": max_zigzag_length(es),
        "density": {},
    }
    windows = [cfg.window / 2, cfg.window, 2 * cfg.window]
    rows = []
    for axis in ("x", "y"):
        proj = project(es, axis)
        sweep = []
        for w in windows:
            est = lower_beurling_density(proj, w, cfg.anchors)
            sweep.append({"window": w, "estimate": est})
            rows.append((axis, w, est))
        body["density"][axis] = sweep
    return body, ("axis", "window", "estimate"), rows


def _cmd_gram(cfg: RunConfig):
    space = space_from_name(cfg.space)
    es = load_points(cfg.points)
    pairs = es.points
    sizes = _parse_sizes(cfg.sizes, len(pairs))
    cert = riesz_section_certificate(space, pairs, sizes)
    body = {
        "space": cfg.space,
        "n_points": len(pairs),
        "certificate": cert.to_body(),
    }
    if cfg.check == "identity":
        dev = identity_deviation(assemble(space, pairs))
        body["identity_check"] = {
            "max_abs_deviation": dev,
            "tolerance": IDENTITY_TOL,
            "passed": bool(dev < IDENTITY_TOL),
        }
    if cfg.parseval:
        fams = [
            ("constant", constant_pair(space)),
            ("linear", monomial_pair(space, 1, 1)),
            ("cubic", monomial_pair(space, 3, 3)),
        ]
        body["parseval"] = [
            {"test_fn": name, "residual": parseval_residual(space, pairs, fn)}
            for name, fn in fams
        ]
    rows = list(zip(cert.sizes, cert.lambda_min, cert.lambda_max))
    return body, ("size", "lambda_min", "lambda_max"), rows


def _cmd_construct(cfg: RunConfig):
    if cfg.kind == "l-onb":
        es = l_space_onb(cfg.N)
    elif cfg.kind == "mirror":
        es = mirror_spectrum(cfg.k, cfg.N)
    elif cfg.kind == "lev":
        es = lev_style_set(cfg.q, cfg.depth)
    elif cfg.kind == "nonoverlap":
        if cfg.measure is None:
            raise MalformedInputError("construct nonoverlap needs --measure")
        m = load_measure(cfg.measure)
        spec = nonoverlap_riesz_spectrum(m, integer_base(cfg.N))
        print(
            f"tau={spec.tau} epsilon={spec.epsilon} base={len(spec.base)} points",
            file=sys.stderr,
        )
        es = spec.pairs
    else:
        raise MalformedInputError(f"unknown construct kind {cfg.kind!r}")
    rows = [(str(p.a), str(p.b)) for p in es.points]
    return es.to_json(), ("a", "b"), rows


def _cmd_solve_oe(cfg: RunConfig):
    if cfg.t is not None or cfg.t_prime is not None:
        if cfg.t is None or cfg.t_prime is None:
            raise MalformedInputError("give both --t and --t-prime")
        t, tp = as_fraction(cfg.t), as_fraction(cfg.t_prime)
    elif cfg.space is not None:
        t, tp = _space_params(cfg.space)
    else:
        raise MalformedInputError("give --space or --t/--t-prime")
    fams = solve_families(t, tp)
    case = classify_case(t, tp)
    body = {
        "t": str(t),
        "t_prime": str(tp),
        "case": case[0] if case[0] != "symmetric" else f"symmetric:a={case[1]}",
        "families": [
            {
                "kind": f.kind,
                "offset": str(f.offset),
                "step": str(f.step),
                "sign_coupled": f.sign_coupled,
            }
            for f in fams
        ],
    }
    if not fams:
        body["note"] = "outside the solved case table; scan data only"
    rows = []
    header = ("lambda1", "lambda2", "residual")
    for fam in fams:
        for l1, l2 in fam.members(100):
            rows.append((float(l1), float(l2), residual(t, tp, float(l1), float(l2))))
    if cfg.scan:
        result = scan_residual(t, tp, _parse_box(cfg.box), cfg.grid, families=fams)
        body["scan"] = result.to_body()
        rows.append((result.argmin[0], result.argmin[1], result.min_residual))
    if cfg.classify:
        body["classification"] = classify_spectrum_candidates(t, cfg.window, cfg.anchors).to_body()
    return body, header, rows


def _cmd_demo_collinear(cfg: RunConfig):
    a = as_fraction(cfg.a)
    const = collinear_failure_demo(a, cfg.N)
    rand = collinear_failure_demo(a, cfg.N, g="random", seed=cfg.seed)
    body = {
        "slope": str(a),
        "N": cfg.N,
        "seed": cfg.seed,
        "constant_g": const.to_body(),
        "random_g": rand.to_body(),
    }
    rows = [
        ("constant", const.ratio),
        ("random", rand.ratio),
    ]
    return body, ("test_fn", "ratio"), rows


def _emit(cfg: RunConfig, payload: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def run(cfg: RunConfig) -> int:
    started = time.perf_counter()
    try:
        if cfg.command == "analyze":
            body, header, rows = _cmd_analyze(cfg)
        elif cfg.command == "gram":
            body, header, rows = _cmd_gram(cfg)
        elif cfg.command == "construct":
            body, header, rows = _cmd_construct(cfg)
        elif cfg.command == "solve-oe":
            body, header, rows = _cmd_solve_oe(cfg)
        elif cfg.command == "demo-collinear":
            body, header, rows = _cmd_demo_collinear(cfg)
        else:
            raise MalformedInputError(f"unknown command {cfg.command!r}")
    except ToolkitError as exc:
        error = {"error": {"code": exc.code, "message": str(exc)}}
        _emit(cfg, json.dumps(error, sort_keys=True, indent=2))
        return exc.exit_code

    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        _emit(cfg, buf.getvalue())
        return 0
    if cfg.command == "construct":
        # plain point-set JSON so the output is directly ingestible
        _emit(cfg, json.dumps(body, indent=2))
        return 0
    report = {
        "body": body,
        "meta": {
            "tool": "addspec",
            "version": __version__,
            "elapsed_ms": round(1000 * (time.perf_counter() - started), 3),
        },
    }
    _emit(cfg, json.dumps(report, sort_keys=True, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="addspec",
        description="Certificates for exponential bases of two-axis additive measures.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def io_flags(sp):
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
        sp.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
        sp.add_argument("--seed", type=int, default=0)

    pa = sub.add_parser("analyze", help="multiplicity, loops, zigzag length, densities")
    pa.add_argument("--points", required=True)
    pa.add_argument("--window", type=float, default=20.0)
    pa.add_argument("--anchors", type=int, default=64)
    io_flags(pa)

    pg = sub.add_parser("gram", help="section certificates and identity checks")
    pg.add_argument("--space", required=True)
    pg.add_argument("--points", required=True)
    pg.add_argument("--sizes", default=None, help="comma-separated section sizes")
    pg.add_argument("--check", choices=["identity"], default=None)
    pg.add_argument("--parseval", action="store_true")
    io_flags(pg)

    pc = sub.add_parser("construct", help="emit a constructed point set as JSON")
    pc.add_argument("kind", choices=["l-onb", "mirror", "lev", "nonoverlap"])
    pc.add_argument("--N", type=int, default=16)
    pc.add_argument("--k", type=int, default=1)
    pc.add_argument("--q", type=int, default=2)
    pc.add_argument("--depth", type=int, default=7)
    pc.add_argument("--measure", default=None, help="measure literal JSON path")
    io_flags(pc)

    ps = sub.add_parser("solve-oe", help="orthogonality families, scans, classification")
    ps.add_argument("--space", default=None)
    ps.add_argument("--t", default=None)
    ps.add_argument("--t-prime", dest="t_prime", default=None)
    ps.add_argument("--scan", action="store_true")
    ps.add_argument("--classify", action="store_true")
    ps.add_argument("--grid", type=int, default=400)
    ps.add_argument("--box", default="-4,4,-4,4")
    ps.add_argument("--window", type=float, default=100.0)
    ps.add_argument("--anchors", type=int, default=64)
    io_flags(ps)

    pd = sub.add_parser("demo-collinear", help="line spectra fail the lower frame bound")
    pd.add_argument("--a", default="1", help="slope in (0, 1], as p/q")
    pd.add_argument("--N", type=int, default=32)
    io_flags(pd)

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(ns))
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
