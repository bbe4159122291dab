"""Command line front end.

Six commands: classify, construct, verify, analyze, trace, perturb.
Complex numbers travel as [re, im] pairs.  Exit codes: 0 success, 2 parse
or IO error, 3 precondition violation, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import boundary, extremal, tetrafun
from .construct import ConstructionSpec, construct as run_construct
from .errors import DenominatorVanishes, SamplingTooCoarse, TetraError
from .polycx import Polynomial, coeff_distance, unit_circle

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NUMERICAL = 4


@dataclass(frozen=True)
class RunConfig:
    membership_tol: float = 1e-9
    circle_tol: float = 1e-6
    cluster_tol: float = 1e-7
    samples: int = 256
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        if min(self.membership_tol, self.circle_tol, self.cluster_tol) <= 0:
            raise ValueError("tolerances must be positive")
        if self.samples < 16:
            raise ValueError("samples must be at least 16")


class _InputError(Exception):
    pass


def _complex_in(obj, field: str) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if (isinstance(obj, (list, tuple)) and len(obj) == 2
            and all(isinstance(v, (int, float)) for v in obj)):
        return complex(obj[0], obj[1])
    raise _InputError(f"field {field!r} must be a number or an [re, im] pair")


def _complex_out(z: complex):
    return [float(np.real(z)), float(np.imag(z))]


def _poly_in(obj, field: str) -> Polynomial:
    if not isinstance(obj, list):
        raise _InputError(f"field {field!r} must be a list of [re, im] pairs")
    return Polynomial(tuple(_complex_in(c, field) for c in obj))


def _load_payload(args) -> dict:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    data = json.loads(text)
    if not isinstance(data, dict):
        raise _InputError("top level JSON value must be an object")
    return data


def _function_in(data: dict, strict: bool) -> tetrafun.TetraRational:
    for key in ("n", "E1", "E2", "D"):
        if key not in data:
            raise _InputError(f"missing field {key!r}")
    return tetrafun.validate(
        _poly_in(data["E1"], "E1"), _poly_in(data["E2"], "E2"),
        _poly_in(data["D"], "D"), int(data["n"]), strict=strict)


def _function_out(x: tetrafun.TetraRational) -> dict:
    return tetrafun.to_json_dict(x)


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _analysis_block(x: tetrafun.TetraRational, cfg: RunConfig) -> dict:
    deg = tetrafun.degree(x, cfg.circle_tol)
    if tetrafun.is_royal_variety(x):
        return {"degree": deg, "type": "royal-variety", "royal_nodes": []}
    tk = tetrafun.type_nk(x, cfg.cluster_tol, cfg.circle_tol)
    nodes = tetrafun.royal_nodes(x, cfg.cluster_tol, cfg.circle_tol)
    return {
        "degree": deg,
        "type": [tk.n, tk.k],
        "royal_nodes": [
            {"location": _complex_out(nd.location), "multiplicity": nd.multiplicity,
             "on_circle": nd.on_circle}
            for nd in nodes
        ],
    }


def cmd_classify(args, cfg: RunConfig) -> int:
    data = _load_payload(args)
    if {"x1", "x2", "x3"} <= set(data):
        pt = boundary.TetraPoint(_complex_in(data["x1"], "x1"),
                                 _complex_in(data["x2"], "x2"),
                                 _complex_in(data["x3"], "x3"))
        region = boundary.classify_tetra(pt, cfg.membership_tol)
        defect = boundary.tetra_defect(pt)
    elif {"s", "p"} <= set(data):
        gp = boundary.GammaPoint(_complex_in(data["s"], "s"), _complex_in(data["p"], "p"))
        region = boundary.classify_gamma(gp, cfg.membership_tol)
        defect = boundary.gamma_defect(gp)
    else:
        raise _InputError("expected fields x1/x2/x3 or s/p")
    if cfg.output_format == "csv":
        _emit(args, f"region,defect\n{region.value},{float(defect):.12g}")
    else:
        _emit(args, _dump({"region": region.value, "defect": float(defect)}))
    return EXIT_OK


def cmd_construct(args, cfg: RunConfig) -> int:
    data = _load_payload(args)
    for key in ("alpha1", "alpha2", "sigma", "t_plus", "t"):
        if key not in data:
            raise _InputError(f"missing field {key!r}")
    spec = ConstructionSpec(
        alpha1=tuple(_complex_in(a, "alpha1") for a in data["alpha1"]),
        alpha2=tuple(_complex_in(a, "alpha2") for a in data["alpha2"]),
        sigma=tuple(_complex_in(s, "sigma") for s in data["sigma"]),
        t_plus=float(data["t_plus"]),
        t=_complex_in(data["t"], "t"),
        omega=_complex_in(data.get("omega", 1.0), "omega"),
    )
    x = run_construct(spec, cfg.circle_tol)
    payload = {"function": _function_out(x), "analysis": _analysis_block(x, cfg)}
    _emit(args, _dump(payload))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    data = _load_payload(args)
    for key in ("n", "E1", "E2", "D"):
        if key not in data:
            raise _InputError(f"missing field {key!r}")
    e1 = _poly_in(data["E1"], "E1")
    e2 = _poly_in(data["E2"], "E2")
    d = _poly_in(data["D"], "D")
    n = int(data["n"])
    checks = tetrafun.validation_report(e1, e2, d, n, strict=args.strict,
                                        circle_tol=cfg.circle_tol)
    by_code = {c.code: c for c in checks}
    conditions = [
        {"condition": "degree bounds", "passed": by_code["DegreeBound"].passed,
         "detail": by_code["DegreeBound"].detail},
        {"condition": "denominator nonvanishing", "passed": by_code["DVanishesInDisc"].passed,
         "detail": by_code["DVanishesInDisc"].detail},
        {"condition": "x3 = reflect(D)/D", "passed": True, "detail": "by representation"},
        {"condition": "x1 = E1/D", "passed": True, "detail": "by representation"},
        {"condition": "x2 = E2/D", "passed": True, "detail": "by representation"},
        {"condition": "modulus domination", "passed": by_code["ModulusDomination"].passed,
         "detail": by_code["ModulusDomination"].detail},
        {"condition": "reflection identity", "passed": by_code["ReflectionMismatch"].passed,
         "detail": by_code["ReflectionMismatch"].detail},
    ]
    valid = all(c.passed for c in checks)
    report = {"valid": valid, "conditions": conditions}
    if valid:
        x = tetrafun.TetraRational(e1, e2, d, n, strict=args.strict)
        grid = unit_circle(max(cfg.samples, 512))
        dv = d.eval(grid)
        e1v, e2v = e1.eval(grid), e2.eval(grid)
        royal = tetrafun.royal_polynomial(x)
        shifted = grid ** (-n) * royal.eval(grid)
        sym_dev = coeff_distance(royal, royal.reflect(2 * n)) if not royal.is_zero else 0.0
        rng = np.random.default_rng(cfg.seed)
        inner_pts = [0.97 * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
                     for _ in range(32)]
        inside_ok = all(
            boundary.classify_tetra(tetrafun.eval_function(x, lam), 1e-7)
            is not boundary.TetraRegion.OUTSIDE
            for lam in inner_pts)
        invariants = {
            "modulus_equality_max_dev": float(np.max(np.abs(np.abs(e1v) - np.abs(e2v)))),
            "royal_balance_max_dev": float(np.max(np.abs(
                shifted - (np.abs(dv) ** 2 - np.abs(e1v) ** 2)))),
            "royal_symmetry_dev": float(sym_dev),
            "royal_min_on_circle": float(np.min(np.real(shifted))),
            "disc_image_in_closure": bool(inside_ok),
            "degree": tetrafun.degree(x, cfg.circle_tol),
        }
        # circle zeros of d (lenient mode) leave the boundary trace undefined
        # at finitely many samples; report None instead of failing
        try:
            invariants["circle_defect_max"] = float(max(
                rec[2] for rec in tetrafun.circle_trace(x, max(cfg.samples, 64))))
        except DenominatorVanishes:
            invariants["circle_defect_max"] = None
        try:
            invariants["winding_number"] = tetrafun.winding_number(x, 4096)
        except (SamplingTooCoarse, DenominatorVanishes):
            invariants["winding_number"] = None
        report["invariants"] = invariants
    _emit(args, _dump(report))
    return EXIT_OK


def cmd_analyze(args, cfg: RunConfig) -> int:
    data = _load_payload(args)
    x = _function_in(data, args.strict)
    _emit(args, _dump(_analysis_block(x, cfg)))
    return EXIT_OK


def cmd_trace(args, cfg: RunConfig) -> int:
    data = _load_payload(args)
    x = _function_in(data, args.strict)
    trace = tetrafun.circle_trace(x, cfg.samples)
    if cfg.output_format == "json":
        payload = [
            {"theta": 2.0 * np.pi * idx / cfg.samples,
             "x1": _complex_out(pt.x1), "x2": _complex_out(pt.x2),
             "x3": _complex_out(pt.x3), "defect": defect}
            for idx, (_, pt, defect) in enumerate(trace)
        ]
        _emit(args, _dump(payload))
        return EXIT_OK
    rows = ["theta,x1_re,x1_im,x2_re,x2_im,x3_re,x3_im,defect"]
    for idx, (lam, pt, defect) in enumerate(trace):
        theta = 2.0 * np.pi * idx / cfg.samples
        rows.append(",".join([
            f"{theta:.12g}",
            f"{pt.x1.real:.12g}", f"{pt.x1.imag:.12g}",
            f"{pt.x2.real:.12g}", f"{pt.x2.imag:.12g}",
            f"{pt.x3.real:.12g}", f"{pt.x3.imag:.12g}",
            f"{defect:.6g}",
        ]))
    _emit(args, "\n".join(rows))
    return EXIT_OK


def cmd_perturb(args, cfg: RunConfig) -> int:
    data = _load_payload(args)
    x = _function_in(data, True)
    result = extremal.perturb_nonextreme(x)
    err = max(
        coeff_distance((result.x_plus.e1 + result.x_minus.e1).scale(0.5), x.e1),
        coeff_distance((result.x_plus.e2 + result.x_minus.e2).scale(0.5), x.e2),
    )
    payload = {
        "method": result.method.value,
        "t": float(result.t_used),
        "x_plus": _function_out(result.x_plus),
        "x_minus": _function_out(result.x_minus),
        "midpoint_max_coeff_error": float(err),
    }
    if result.note:
        payload["note"] = result.note
    _emit(args, _dump(payload))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetrainner",
        description="Construct, validate and analyze rational tetra-inner functions.")
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "classify": cmd_classify,
        "construct": cmd_construct,
        "verify": cmd_verify,
        "analyze": cmd_analyze,
        "trace": cmd_trace,
        "perturb": cmd_perturb,
    }
    for name, handler in handlers.items():
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help="input JSON file; stdin when omitted")
        p.add_argument("--tol", type=float, default=1e-9, help="membership tolerance")
        p.add_argument("--circle-tol", type=float, default=1e-6)
        p.add_argument("--cluster-tol", type=float, default=1e-7)
        p.add_argument("--samples", type=int, default=256)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--strict", dest="strict", action="store_true", default=True)
        p.add_argument("--lenient", dest="strict", action="store_false")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--out", default=None)
        p.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    fmt = args.format or ("csv" if args.command == "trace" else "json")
    if fmt == "csv" and args.command not in ("classify", "trace"):
        sys.stderr.write(f"error: csv output is not defined for {args.command}\n")
        return EXIT_PARSE
    try:
        cfg = RunConfig(membership_tol=args.tol, circle_tol=args.circle_tol,
                        cluster_tol=args.cluster_tol, samples=args.samples,
                        seed=args.seed, output_format=fmt)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    try:
        return args.handler(args, cfg)
    except (_InputError, json.JSONDecodeError, OSError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except TetraError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return exc.cli_exit_code
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
