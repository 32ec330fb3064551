"""Command-line interface.

Subcommands construct objects (dmatrix, cgc, fmatrix, rmatrix, normalform)
or run verification suites (verify).  All output goes to stdout unless
--out is given; reports are machine-readable JSON by default.  Exit status
is 0 on success or all-pass, 1 on verification failure, 2 on usage errors.
"""

import argparse
import json
import sys

from . import dfun, exprio, fock, hopfcheck, ncalg, pbwcheck, rep
from .report import Report


def _spin_pairs(max_twoj):
    return [
        (a, b) for a in range(1, max_twoj + 1) for b in range(a, max_twoj + 1)
    ]


def _run_suite(args) -> Report:
    suite = args.suite
    k = args.max_twoj
    if suite == "corep":
        out = Report("corep")
        for twoj in range(k + 1):
            out.extend(hopfcheck.check_corep(twoj, args.scheme, args.ring))
        return out
    if suite == "wigner":
        out = Report("wigner")
        for a, b in _spin_pairs(k):
            for twoj in range(abs(a - b), a + b + 2, 2):
                out.extend(hopfcheck.wigner_check(a, b, twoj, args.ring))
        return out
    if suite == "recurrence":
        out = Report("recurrence")
        for twoj in range(1, k + 1):
            for which in hopfcheck.RECURRENCES:
                out.extend(hopfcheck.recurrence_check(which, twoj, args.ring))
        return out
    if suite == "ortho":
        out = Report("ortho")
        for twoj in range(k + 1):
            out.extend(hopfcheck.ortho_like_check(twoj, args.ring))
        return out
    if suite == "rtt":
        out = Report("rtt")
        for a, b in _spin_pairs(k):
            out.extend(hopfcheck.rtt_check(a, b, args.ring))
        out.extend(hopfcheck.rtt_frt_check())
        return out
    if suite == "pbw":
        return pbwcheck.pbw_suite()
    if suite == "fock":
        return fock.fock_suite(args.nmax, args.with_g)
    raise ValueError(f"unknown suite {suite!r}")


def _report_text(report: Report) -> str:
    lines = []
    for case in report.cases:
        status = "pass" if case["pass"] else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in case["params"].items())
        lines.append(f"[{status}] {params}")
        if not case["pass"]:
            if "lhs" in case:
                lines.append(f"    lhs: {case['lhs']}")
            if "rhs" in case:
                lines.append(f"    rhs: {case['rhs']}")
    lines.append(
        f"suite={report.suite} passed={report.passed} failed={report.failed}"
    )
    return "\n".join(lines)


def _emit(text, args):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _basis_pairs(twoj1, twoj2):
    return [
        [m1, m2] for m1 in rep.magnetics(twoj1) for m2 in rep.magnetics(twoj2)
    ]


def _cmd_dmatrix(args):
    d = dfun.dmatrix(args.twoj, args.scheme, args.ring)
    if args.format == "json":
        _emit(json.dumps(d.to_json()), args)
    elif args.format == "latex":
        _emit(d.to_latex(), args)
    else:
        _emit(d.to_text(), args)
    return 0


def _cmd_cgc(args):
    om = rep.omega(args.twoj1, args.twoj2, args.twoj3)
    mh = rep.mho(args.twoj1, args.twoj2, args.twoj3)
    obj = {
        "twoj1": args.twoj1,
        "twoj2": args.twoj2,
        "twoj": args.twoj3,
        "omega": om.to_json(),
        "mho": mh.to_json(),
    }
    _emit(json.dumps(obj), args)
    return 0


def _matrix_json(name, mat, twoj1, twoj2):
    return {
        "matrix": name,
        "twoj1": twoj1,
        "twoj2": twoj2,
        "basis": _basis_pairs(twoj1, twoj2),
        "entries": mat.to_json(),
    }


def _cmd_fmatrix(args):
    obj = [
        _matrix_json("F", rep.f_matrix(args.twoj1, args.twoj2), args.twoj1, args.twoj2),
        _matrix_json(
            "Finv", rep.f_inv_matrix(args.twoj1, args.twoj2), args.twoj1, args.twoj2
        ),
    ]
    _emit(json.dumps(obj), args)
    return 0


def _cmd_rmatrix(args):
    obj = _matrix_json(
        "R", rep.r_matrix(args.twoj1, args.twoj2), args.twoj1, args.twoj2
    )
    _emit(json.dumps(obj), args)
    return 0


def _cmd_normalform(args):
    try:
        p = exprio.parse(args.expr, args.ring)
    except exprio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(exprio.render(p, args.format), args)
    return 0


def _cmd_verify(args):
    report = _run_suite(args)
    if args.format == "text":
        _emit(_report_text(report), args)
    else:
        _emit(json.dumps(report.to_json()), args)
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slh2",
        description="Exact representation functions of the Jordanian "
        "quantum group SL_h(2)/GL_h(2) and their verified identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--ring", choices=ncalg.RINGS, default=ncalg.SL)
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("dmatrix", help="emit the D-function matrix of one spin")
    p.add_argument("--twoj", type=int, required=True)
    p.add_argument("--scheme", choices=dfun.SCHEMES, default=dfun.ORDERED1)
    p.add_argument("--format", choices=("json", "latex", "text"), default="json")
    add_common(p)
    p.set_defaults(func=_cmd_dmatrix)

    p = sub.add_parser("cgc", help="emit coupling and decoupling coefficients")
    p.add_argument("--twoj1", type=int, required=True)
    p.add_argument("--twoj2", type=int, required=True)
    p.add_argument("--twoj3", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_cgc)

    p = sub.add_parser("fmatrix", help="emit the twist matrix F and its inverse")
    p.add_argument("--twoj1", type=int, required=True)
    p.add_argument("--twoj2", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_fmatrix)

    p = sub.add_parser("rmatrix", help="emit the R-matrix of a spin pair")
    p.add_argument("--twoj1", type=int, required=True)
    p.add_argument("--twoj2", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_rmatrix)

    p = sub.add_parser("normalform", help="normal-order an expression")
    p.add_argument("expr")
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    add_common(p)
    p.set_defaults(func=_cmd_normalform)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=("corep", "wigner", "recurrence", "ortho", "rtt", "pbw", "fock"),
    )
    p.add_argument("--max-twoj", type=int, default=2)
    p.add_argument("--nmax", type=int, default=4, help="fock grade cutoff")
    p.add_argument("--with-g", action="store_true", help="include the two-parameter fock checks")
    p.add_argument("--scheme", choices=dfun.SCHEMES, default=dfun.ORDERED1)
    p.add_argument("--format", choices=("json", "text"), default="json")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main():  # console entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()
