"""Command-line front end.

Exit codes: 0 success, 1 identity or check failure, 2 parse or flag error,
3 numeric precondition violation.
"""

from __future__ import annotations

import argparse
import math
import sys

from .algebras import ALGEBRAS, get_algebra
from .errors import (
    AlgebraMismatchError,
    ExprSyntaxError,
    NonInvertibleScalarError,
    NumericPreconditionError,
    ReductionBudgetError,
    UnknownIdentityError,
)
from .exprlang import parse, render
from .identities import registry, verify_all, verify_identity
from .kinematics import NATURAL, SI, Event, compton_wavelength, spacelike_window, tunnel_probability
from .opalg import normalize, reduce
from . import packet as pkt
from . import waveguide as wg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

EQ9_TOL = {"spectral": 1e-6, "fd4": 1e-4}
EHRENFEST_TOL = 1e-8


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, complex):
        return f"{value.real!r}{value.imag:+}j"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(out, **pairs):
    for key, value in pairs.items():
        print(f"{key}={_fmt(value)}", file=out)


def _cmd_normalize(args, out):
    spec = get_algebra(args.algebra)
    print(render(normalize(parse(args.expr, spec), spec)), file=out)
    return EXIT_OK


def _cmd_verify(args, out):
    if args.all or args.name is None:
        reports = verify_all(args.algebra)
    else:
        report = verify_identity(args.name)
        if args.algebra and registry()[args.name].algebra != args.algebra:
            reports = []
        else:
            reports = [report]
    for r in reports:
        print(r.line(), file=out)
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed} passed, {failed} failed", file=out)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def _cmd_verify_expr(args, out):
    spec = get_algebra(args.algebra)
    residual, steps = reduce(parse(args.lhs, spec) - parse(args.rhs, spec), spec)
    status = "PASS" if residual.is_zero() else "FAIL"
    print(f"{status} residual={render(residual)} steps={steps}", file=out)
    return EXIT_OK if residual.is_zero() else EXIT_FAIL


def _cmd_particle(args, out):
    k = NATURAL if args.units == "natural" else SI
    if args.action == "window":
        _emit(
            out,
            compton_wavelength=compton_wavelength(args.mass, k),
            window=spacelike_window(args.mass, k),
        )
        return EXIT_OK
    if args.t is None or args.x is None:
        raise NumericPreconditionError("prob needs both --t and --x")
    r = tunnel_probability(Event(args.t, args.x), args.mass, k)
    _emit(
        out,
        classification=r.classification,
        interval=r.interval,
        s=r.s,
        amplitude=r.amplitude,
        probability=r.probability,
    )
    return EXIT_OK


def _parse_scan(text: str):
    try:
        x0, x1, step = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x0:x1:step, got {text!r}") from None
    return x0, x1, step


def _cmd_waveguide(args, out):
    k = SI
    if args.width_mm is not None:
        w = wg.WaveguideParams.from_width(args.width_mm * 1e-3, k)
    else:
        w = wg.WaveguideParams.from_cutoff_frequency(args.cutoff_ghz * 1e9)
    rows = None
    if args.scan is not None:
        rows = wg.scan(w, k, args.t, *args.scan)
    if rows is not None and args.csv in (None, "-"):
        wg.write_csv(rows, out)
        return EXIT_OK

    q = wg.effective_quantities(w, k)
    _emit(out, omega_c=w.omega_c, m_eff=q.m_eff, lambda_c=q.lambda_c, window=q.lambda_c / 2)
    if args.freq_ghz is not None:
        state = wg.dispersion(w, k, omega=2 * math.pi * args.freq_ghz * 1e9)
        _emit(out, omega=state.omega, k_x=state.k_x, kappa=state.kappa, v_g=state.v_g)
    if rows is not None:
        with open(args.csv, "w", newline="") as fh:
            wg.write_csv(rows, fh)
        _emit(out, rows=len(rows), csv=args.csv)
    return EXIT_OK


def _cmd_packet(args, out):
    method = "fd4" if args.fd else "spectral"
    grid = pkt.MomentumGrid(args.pmax, args.n)
    packet = pkt.gaussian_packet(args.p0, args.sigma, args.mass, grid)
    if args.check == "check-eq9":
        res = pkt.check_interval_identity(packet, args.t, method)
        tol = EQ9_TOL[method]
        ok = res.residual < tol
        _emit(
            out,
            check="eq9",
            method=method,
            residual=res.residual,
            tolerance=tol,
            lhs=res.lhs,
            rhs=res.rhs,
            contained=res.contained,
            status="PASS" if ok else "FAIL",
        )
        if args.sweep_csv:
            sweep = pkt.convergence_sweep(args.p0, args.sigma, args.mass, args.t, args.pmax, method=method)
            with open(args.sweep_csv, "w", newline="") as fh:
                fh.write("n,residual\n")
                for n, r in sweep:
                    fh.write(f"{n},{r!r}\n")
        return EXIT_OK if ok else EXIT_FAIL
    rep = pkt.ehrenfest_check(packet, method=method)
    slope_err = abs(rep.slope_measured - rep.slope_predicted)
    vel_err = abs(rep.velocity_commutator - rep.velocity_predicted)
    ok = slope_err < EHRENFEST_TOL and vel_err < EHRENFEST_TOL
    _emit(
        out,
        check="ehrenfest",
        method=method,
        slope_measured=rep.slope_measured,
        slope_predicted=rep.slope_predicted,
        velocity_commutator=rep.velocity_commutator,
        velocity_predicted=rep.velocity_predicted,
        status="PASS" if ok else "FAIL",
    )
    return EXIT_OK if ok else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qlorentz", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    algebras = sorted(ALGEBRAS)

    p = sub.add_parser("normalize", help="print the canonical form of an expression", allow_abbrev=False)
    p.add_argument("--algebra", choices=algebras, default="rel")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("verify", help="verify registered identities", allow_abbrev=False)
    p.add_argument("name", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--algebra", choices=algebras)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("verify-expr", help="check lhs == rhs in an algebra", allow_abbrev=False)
    p.add_argument("--algebra", choices=algebras, required=True)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=_cmd_verify_expr)

    p = sub.add_parser("particle", help="spacelike window and tunneling probability", allow_abbrev=False)
    p.add_argument("--mass", type=float, required=True, help="rest mass (kg, or natural units)")
    p.add_argument("--units", choices=("si", "natural"), default="si")
    p.add_argument("--t", type=float)
    p.add_argument("--x", type=float)
    p.add_argument("action", nargs="?", choices=("window", "prob"), default="window")
    p.set_defaults(func=_cmd_particle)

    p = sub.add_parser("waveguide", help="guided-photon effective quantities and scans", allow_abbrev=False)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cutoff-ghz", type=float, help="cutoff frequency f_c in GHz")
    src.add_argument("--width-mm", type=float, help="rectangular guide width in mm (TE10)")
    p.add_argument("--freq-ghz", type=float)
    p.add_argument("--t", type=float, default=0.0, help="time in s")
    p.add_argument("--scan", type=_parse_scan, help="x0:x1:step in m")
    p.add_argument("--csv", help="write the scan to this path ('-' for stdout)")
    p.set_defaults(func=_cmd_waveguide)

    p = sub.add_parser("packet", help="numerical wave-packet oracle (hbar = c = 1)", allow_abbrev=False)
    p.add_argument("--n", type=int, default=4096)
    p.add_argument("--pmax", type=float, default=20.0)
    p.add_argument("--p0", type=float, default=1.0)
    p.add_argument("--sigma", type=float, default=0.5)
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--fd", action="store_true", help="4th-order finite differences instead of FFT")
    p.add_argument("--sweep-csv", help="also write an n = 512..4096 convergence sweep")
    p.add_argument("check", choices=("check-eq9", "ehrenfest"))
    p.set_defaults(func=_cmd_packet)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ExprSyntaxError, AlgebraMismatchError, UnknownIdentityError, NonInvertibleScalarError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericPreconditionError, ReductionBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
