"""Command-line interface.

Exit codes: 0 success, 1 validation or usage error, 2 a verification check
failed. Errors are written to stderr as ``{"error": {"kind", "detail"}}``.
"""
import argparse
import csv
import io
import json
import sys

import numpy as np

from . import _jsonio
from .bloch import bloch_series, eigenvalue, series_to_json
from .exceptions import HillSpecError, ValidationError
from .floquet import hill_discriminant
from .inverse import recover_potential, result_to_json
from .limits import (
    DEFAULT_T_SEQUENCE,
    DEFAULT_X_SAMPLES,
    LimitProbe,
    boundedness_probe,
    coefficient_limit,
    function_limit,
)
from .norming import forward_map, sequence_from_json, sequence_to_json
from .potential import PotentialSpec, parse_spec
from .suite import SUITES, run as run_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2
# options whose values may legitimately start with "-" (e.g. "-2..2")
_SIGNED_VALUE_OPTIONS = ("--n-range", "--t", "--t-seq", "--x-samples", "--n")


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _complex_arg(text):
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _complex_list(text):
    return [_complex_arg(part) for part in text.split(",") if part]


def _float_list(text):
    try:
        return [float(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text!r}") from None


def _int_range(text):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return [int(text)]
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B integer range: {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _join_signed_values(argv):
    out, it = [], iter(argv)
    for arg in it:
        if arg in _SIGNED_VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(arg if nxt is None else f"{arg}={nxt}")
        else:
            out.append(arg)
    return out


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--potential", metavar="PATH", help="potential JSON file")
    common.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    common.add_argument(
        "--steps", type=int, default=None,
        help="integrator steps (default 1024; 2048 for discriminant and eigenfunction checks)",
    )
    common.add_argument("--terms", type=int, default=50, help="series truncation P (default 50)")
    common.add_argument("--tolerance", type=float, default=None, help="override check tolerances")

    parser = _Parser(prog="hillspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="Bloch eigenvalue grid as CSV")
    p.add_argument("--n-range", type=_int_range, default=_int_range("-2..2"))
    p.add_argument("--t", type=_complex_list, default=[0.0], help="comma-separated quasimomenta")
    p.add_argument("--verify", action="store_true", help="append integrated discriminant residuals")

    p = sub.add_parser("bloch", parents=[common], help="Bloch series coefficients as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=_complex_arg, required=True)
    p.add_argument("--method", choices=("recurrence", "explicit", "bruteforce"), default="recurrence")

    p = sub.add_parser("forward", parents=[common], help="norming numbers of a potential")
    p.add_argument("--count", type=int, default=None, help="number of norming numbers (default: degree)")

    p = sub.add_parser("inverse", parents=[common], help="potential from norming numbers")
    p.add_argument("--norming", metavar="PATH", required=True, help="norming-number JSON file")
    p.add_argument("--threshold", type=float, default=2 * np.pi)

    p = sub.add_parser("verify", parents=[common], help="run cross-check suites")
    p.add_argument("--suite", default="all", help="'all' or comma-separated: " + ",".join(SUITES))

    p = sub.add_parser("limit", parents=[common], help="degenerate-limit probes")
    p.add_argument("--mode", choices=("periodic", "antiperiodic"), default="periodic")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--t-seq", type=_float_list, default=list(DEFAULT_T_SEQUENCE))
    p.add_argument("--x-samples", type=_float_list, default=list(DEFAULT_X_SAMPLES))
    p.add_argument("--kind", choices=("coefficient", "function", "boundedness", "all"), default="all")
    return parser


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _potential(args, required=True):
    if args.potential is None:
        if required:
            raise ValidationError("--potential is required")
        return PotentialSpec([])
    return parse_spec(_read(args.potential))


def _emit(args, text):
    if args.out:
        _jsonio.atomic_write(args.out, text)
    else:
        sys.stdout.write(text)


def _reports_out(args, reports):
    _emit(args, _jsonio.dumps([r.to_dict() for r in reports]))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_spectrum(args):
    spec = _potential(args, required=args.verify)
    rows = [(n, complex(t)) for n in args.n_range for t in args.t]
    header = ["n", "t_re", "t_im", "lambda_re", "lambda_im"]
    residuals = None
    if args.verify:
        lams = np.array([eigenvalue(n, t) for n, t in rows])
        disc = np.atleast_1d(hill_discriminant(spec, lams, args.steps or 2048))
        residuals = np.abs(disc - 2.0 * np.cos([t for _, t in rows]))
        header += ["discriminant_re", "discriminant_im", "residual"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for i, (n, t) in enumerate(rows):
        lam = eigenvalue(n, t)
        row = [n, repr(float(t.real)), repr(float(t.imag)), repr(float(lam.real)), repr(float(lam.imag))]
        if residuals is not None:
            row += [repr(float(disc[i].real)), repr(float(disc[i].imag)), repr(float(residuals[i]))]
        writer.writerow(row)
    _emit(args, buf.getvalue())
    if residuals is not None:
        tol = 1e-5 if args.tolerance is None else args.tolerance
        return EXIT_OK if np.all(residuals <= tol) else EXIT_FAILED
    return EXIT_OK


def cmd_bloch(args):
    spec = _potential(args)
    series = bloch_series(spec, args.n, args.t, args.terms, args.method)
    _emit(args, series_to_json(series))
    return EXIT_OK


def cmd_forward(args):
    spec = _potential(args)
    count = spec.degree if args.count is None else args.count
    _emit(args, sequence_to_json(forward_map(spec, count)))
    return EXIT_OK


def cmd_inverse(args):
    seq = sequence_from_json(_read(args.norming))
    _emit(args, result_to_json(recover_potential(seq, args.threshold)))
    return EXIT_OK


def cmd_verify(args):
    spec = _potential(args)
    suites = SUITES if args.suite == "all" else tuple(s.strip() for s in args.suite.split(","))
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValidationError(f"unknown suite(s): {', '.join(unknown)}")
    return _reports_out(args, run_suite(spec, suites, args.steps, args.terms, args.tolerance))


def cmd_limit(args):
    spec = _potential(args)
    probe = LimitProbe(args.mode, args.n, tuple(args.t_seq), tuple(args.x_samples), args.terms)
    reports = []
    if args.kind in ("coefficient", "all"):
        reports.append(coefficient_limit(spec, probe, args.p))
    if args.kind in ("function", "all"):
        reports.append(function_limit(spec, probe))
    if args.kind in ("boundedness", "all"):
        reports.append(boundedness_probe(spec, probe))
    return _reports_out(args, reports)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "bloch": cmd_bloch,
    "forward": cmd_forward,
    "inverse": cmd_inverse,
    "verify": cmd_verify,
    "limit": cmd_limit,
}


def _fail(kind, detail):
    sys.stderr.write(json.dumps({"error": {"kind": kind, "detail": detail}}) + "\n")
    return EXIT_USAGE


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_signed_values(argv))
        if args.terms < 0:
            raise ValidationError("--terms must be >= 0")
        if args.steps is not None and args.steps < 64:
            raise ValidationError("--steps must be >= 64")
        return COMMANDS[args.command](args)
    except _Usage as exc:
        return _fail("usage", str(exc))
    except HillSpecError as exc:
        return _fail(exc.kind, str(exc))
    except OSError as exc:
        return _fail("io", str(exc))


if __name__ == "__main__":
    sys.exit(main())
