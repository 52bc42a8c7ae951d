"""``hg`` command-line front end.

Exit codes: 0 ok, 1 parse error, 2 precondition failure, 3 IO error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from flint import arb

from . import __version__
from .arith import format_rational, parse_rational
from .ball import Ball
from .contiguity import OpKind, verify_contiguity
from .criteria import HGParams, classify
from .errors import HyperlogError, ParseError, TieObserved
from .explicit_log import explicit_residual
from .hodge import (
    HodgeInput,
    canonical_frame,
    connection_matrix,
    d_chi,
    d_chi_profile,
    delta_decomposition,
    gauss_type_data,
    gauge_transform,
    hodge_triple,
    residue_eigenvalues_in_frame,
    residue_in_frame,
    tate_check,
)
from .hypergeom import euler_integral_check, gauss_derivative_check, pfq
from .regulator import RecurrenceParams, closed_form_det0, det_scan, e_det

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3, 4

CONTIGUITY_DEFAULT = "1,1,1/2,7/6,11/6"
CONTIGUITY_POINTS = ("1/4", "1/3", "1/2")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for precondition failures
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    return parse_rational(text)


def _rational_list(text: str) -> list[Fraction]:
    return [parse_rational(t) for t in text.split(",")] if text else []


def _emit(args, payload: dict, human: Callable[[dict], str] | None = None) -> None:
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(human(payload) if human else "\n".join(f"{k}: {v}" for k, v in payload.items()))


def _tol(args, default: str) -> arb:
    return arb(args.tol if args.tol is not None else default)


def _ball_check(ball: Ball, tol: arb) -> bool:
    """Residual ball contains 0 and is tight enough to mean something."""
    return ball.contains_zero() and bool(ball.radius() < tol)


# classify / scan --------------------------------------------------------------

def cmd_classify(args) -> int:
    p = HGParams(args.q, args.a, args.b)
    rec = classify(p)

    def table(d):
        lines = [f"q={d['q']} a={d['a']} b={d['b']} N={d['N']}", f"label: {d['label']}"]
        if d["violations"]:
            lines.append("integral: " + ", ".join(d["violations"]))
        for s in d["eq1"]:
            lines.append(f"  s={s:>4}  eq1={str(d['eq1'][s]):5}  eq2={d['eq2'][s]}")
        lines.append(f"bh: {d['bh']}  converges_at_1: {d['converges_at_1']}")
        return "\n".join(lines)

    _emit(args, rec.to_json(), table)
    return EXIT_PRECONDITION if rec.label == "FailsPreconditions" else EXIT_OK


@dataclass(frozen=True)
class ScanConfig:
    max_denominator: int
    output: str
    dedup: bool = True
    parallelism: int = 1

    def __post_init__(self):
        if self.max_denominator < 2:
            raise ValueError("max_denominator must be >= 2")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


def fractions_in_unit_interval(max_den: int) -> list[Fraction]:
    return sorted({Fraction(n, d) for d in range(2, max_den + 1) for n in range(1, d)})


def scan_triples(cfg: ScanConfig) -> Iterator[tuple[Fraction, Fraction, Fraction]]:
    reps = fractions_in_unit_interval(cfg.max_denominator)
    for q, a, b in product(reps, repeat=3):
        if cfg.dedup and a > b:
            continue
        yield q, a, b


def scan_record(triple) -> str:
    start = time.perf_counter_ns()
    rec = classify(HGParams(*triple)).to_json()
    rec["micros"] = (time.perf_counter_ns() - start) // 1000
    rec["version"] = __version__
    return json.dumps(rec, separators=(",", ":"))


def run_scan(cfg: ScanConfig) -> int:
    triples = list(scan_triples(cfg))
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(cfg.parallelism) as pool:
            # map preserves input order whatever the completion order
            lines = list(pool.map(scan_record, triples, chunksize=256))
    else:
        lines = [scan_record(t) for t in triples]
    with open(cfg.output, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")
    return len(lines)


def cmd_scan(args) -> int:
    try:
        cfg = ScanConfig(args.max_denominator, args.output, not args.no_dedup, args.jobs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    n = run_scan(cfg)
    _emit(args, {"output": cfg.output, "records": n, "dedup": cfg.dedup})
    return EXIT_OK


# evaluation -------------------------------------------------------------------

def cmd_eval(args) -> int:
    ball = pfq(args.top, args.bottom, args.x, args.prec)

    def human(d):
        return f"mid: {d['mid']}\nrad: {d['rad']}\nbits: {d['bits']}"

    _emit(args, ball.to_json(), human)
    return EXIT_OK


def cmd_hodge(args) -> int:
    h = HodgeInput(args.mu, args.beta1, args.beta2)
    d = d_chi(h)
    payload = {
        "mu": format_rational(h.mu),
        "beta1": format_rational(h.beta1),
        "beta2": format_rational(h.beta2),
        "d_chi": d,
        "delta": [format_rational(x) for x in delta_decomposition(h)],
        "hodge": list(hodge_triple(d).as_tuple()),
        "tate": tate_check(h),
    }
    if args.all_s:
        payload["profile"] = {str(s): v for s, v in d_chi_profile(h).items()}
    _emit(args, payload)
    return EXIT_OK


def cmd_gm(args) -> int:
    b1, b2, point = args.beta1, args.beta2, args.point
    m = connection_matrix(b1, b2)
    g = canonical_frame(b1, b2, point)
    eig = residue_eigenvalues_in_frame(b1, b2, point)
    fmt = format_rational
    payload = {
        "connection": m.to_json(),
        "frame": g.to_json(),
        "transformed": gauge_transform(m, g).to_json(),
        "residue": [[fmt(x) for x in row] for row in residue_in_frame(b1, b2, point)],
        "trace": fmt(eig.trace),
        "det": fmt(eig.det),
        "eigenvalues": [fmt(e) for e in eig.eigenvalues] if eig.eigenvalues else None,
        "in_unit_interval": eig.in_half_open_unit(),
    }
    _emit(args, payload)
    return EXIT_OK if payload["in_unit_interval"] else EXIT_VERIFY


def cmd_detscan(args) -> int:
    p = RecurrenceParams(args.mu, args.beta1, args.beta2)
    zeros = det_scan(p, args.rmax)
    closed = e_det(p, 0) == closed_form_det0(p, p.mu)
    _emit(args, {"vanishing_r": zeros, "rmax": args.rmax, "closed_form_r0": closed})
    return EXIT_OK if closed and not zeros else EXIT_VERIFY


# verification suites ------------------------------------------------------------

def _residual_row(label: str, ball: Ball, ok: bool) -> dict:
    return {"check": label, **ball.to_json(), "pass": ok}


def _report(args, rows: list[dict]) -> int:
    ok = all(r["pass"] for r in rows)
    if args.json:
        print(json.dumps({"checks": rows, "pass": ok}, separators=(",", ":")))
    else:
        for r in rows:
            detail = f"  mid={r['mid']}  rad={r['rad']}" if "mid" in r else ""
            print(f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']}{detail}")
    return EXIT_OK if ok else EXIT_VERIFY


def verify_euler(args) -> list[dict]:
    g = gauss_type_data(args.N, args.a, args.b, args.n, args.d)
    tol = _tol(args, "1e-15")
    res = euler_integral_check(g, args.t, args.prec)
    ok = bool(res.magnitude() < tol)
    return [_residual_row(f"euler N={args.N} a={args.a} b={args.b} n={args.n} t={args.t}", res, ok)]


def verify_gauss(args) -> list[dict]:
    tol = _tol(args, "1e-30")
    r1, r2 = gauss_derivative_check(args.beta1, args.beta2, args.t, args.prec)
    return [_residual_row(f"derivative-{i} t={args.t}", r, _ball_check(r, tol))
            for i, r in ((1, r1), (2, r2))]


def verify_contiguity_suite(args) -> list[dict]:
    tol = _tol(args, "1e-30")
    kinds = list(OpKind) if args.all or args.kind is None else [OpKind.parse(args.kind)]
    params = _rational_list(args.params)
    points = [args.x] if args.x is not None and not args.all else [_rational(x) for x in CONTIGUITY_POINTS]
    rows = []
    for kind in kinds:
        for x in points:
            r = verify_contiguity(kind, params, x, args.prec)
            rows.append(_residual_row(f"{kind.value} x={x}", r, _ball_check(r, tol)))
    return rows


def verify_explicit(args) -> list[dict]:
    tol = _tol(args, "8.271806125530277e-25")  # 2^-80
    r = explicit_residual(args.x, args.prec)
    return [_residual_row(f"explicit-log x={args.x}", r, _ball_check(r, tol))]


def verify_detscan(args) -> list[dict]:
    p = RecurrenceParams(args.mu, args.beta1, args.beta2)
    closed = e_det(p, 0) == closed_form_det0(p, p.mu)
    zeros = det_scan(p, args.rmax)
    return [{"check": "closed-form r=0", "pass": closed},
            {"check": f"nonvanishing r<={args.rmax}", "vanishing_r": zeros, "pass": not zeros}]


SUITES = {
    "detscan": verify_detscan,
    "euler-integral": verify_euler,
    "gauss-derivative": verify_gauss,
    "contiguity": verify_contiguity_suite,
    "explicit-log": verify_explicit,
}


def cmd_verify(args) -> int:
    return _report(args, SUITES[args.suite](args))


# parser -------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--prec", type=int, default=argparse.SUPPRESS, help="working precision in bits")
    common.add_argument("--tol", default=argparse.SUPPRESS, help="decimal pass threshold")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="hg", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="criteria verdict for (q, a, b)")
    for name in ("q", "a", "b"):
        p.add_argument(f"--{name}", type=_rational, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", parents=[common], help="classify every triple up to a denominator bound")
    p.add_argument("--max-denominator", type=int, required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("eval", parents=[common], help="ball enclosure of pFq")
    p.add_argument("--top", type=_rational_list, required=True)
    p.add_argument("--bottom", type=_rational_list, default=[])
    p.add_argument("--x", type=_rational, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("hodge", parents=[common], help="d_chi, Hodge triple and Tate check")
    p.add_argument("--mu", type=_rational, required=True)
    p.add_argument("--beta1", type=_rational, required=True)
    p.add_argument("--beta2", type=_rational, required=True)
    p.add_argument("--all-s", action="store_true")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("gm", parents=[common], help="connection, frame and residue at t = 0 or 1")
    p.add_argument("--beta1", type=_rational, required=True)
    p.add_argument("--beta2", type=_rational, required=True)
    p.add_argument("--point", type=int, choices=(0, 1), required=True)
    p.set_defaults(func=cmd_gm)

    p = sub.add_parser("detscan", parents=[common], help="exact determinant non-vanishing scan")
    p.add_argument("--mu", type=_rational, required=True)
    p.add_argument("--beta1", type=_rational, required=True)
    p.add_argument("--beta2", type=_rational, required=True)
    p.add_argument("--rmax", type=int, default=50)
    p.set_defaults(func=cmd_detscan)

    p = sub.add_parser("verify", parents=[common], help="numeric identity checks")
    vs = p.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    v = vs.add_parser("euler-integral", parents=[common])
    v.add_argument("--N", type=int, required=True)
    v.add_argument("--a", type=int, required=True)
    v.add_argument("--b", type=int, required=True)
    v.add_argument("--n", type=int, default=1)
    v.add_argument("--d", type=int, default=1)
    v.add_argument("--t", type=_rational, required=True)
    v = vs.add_parser("gauss-derivative", parents=[common])
    v.add_argument("--beta1", type=_rational, required=True)
    v.add_argument("--beta2", type=_rational, required=True)
    v.add_argument("--t", type=_rational, required=True)
    v = vs.add_parser("contiguity", parents=[common])
    v.add_argument("--kind")
    v.add_argument("--params", default=CONTIGUITY_DEFAULT)
    v.add_argument("--x", type=_rational)
    v.add_argument("--all", action="store_true")
    v = vs.add_parser("detscan", parents=[common])
    v.add_argument("--mu", type=_rational, required=True)
    v.add_argument("--beta1", type=_rational, required=True)
    v.add_argument("--beta2", type=_rational, required=True)
    v.add_argument("--rmax", type=int, default=50)
    v = vs.add_parser("explicit-log", parents=[common])
    v.add_argument("--x", type=_rational, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


DEFAULT_PREC = {"explicit-log": 192, "euler-integral": 64}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"hg: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"hg: {exc}", file=sys.stderr)
        return EXIT_PARSE
    for name, default in (("json", False), ("tol", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if not hasattr(args, "prec"):
        args.prec = DEFAULT_PREC.get(getattr(args, "suite", None), 128)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"hg: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TieObserved:
        raise
    except HyperlogError as exc:
        print(f"hg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"hg: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
