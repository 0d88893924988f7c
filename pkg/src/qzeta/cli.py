"""``qzeta`` command-line front end.

Every run is determined by argv, the optional ``--config`` file and the
``QZETA_PREC`` environment variable.  Exit status: 0 success, 1 identity
suite failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from math import lcm

from .errors import ConfigInvalid, QZetaError
from .genocchi import classical_genocchi_poly, genocchi_poly, s_classical, s_tilde
from .padic import IntegrandSpec, convergence_report
from .qcore import DEFAULT_ORDER, DEFAULT_PREC, DEFAULT_TOL, QContext, numeric_context
from .serialize import FORMATS, emit
from .verify import SUITES, IdentityId, run_suite, suite_by_name
from .zeta import hurwitz_euler, neg_int_order, zeta_eval, zeta_neg_int

COMMANDS = ("genocchi", "zeta", "stilde", "padic", "verify", "table")
BOOL_FLAGS = {"thm25-literal"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _q_value(text: str):
    """Exact fraction or decimal; complex ``a+bi`` is kept as text for the numeric backend."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        if text.strip().endswith(("i", "j")):
            return text.strip()
        raise argparse.ArgumentTypeError(f"not a rational or complex value: {text!r}") from None


def _env_prec() -> int:
    raw = os.environ.get("QZETA_PREC")
    if raw is None:
        return DEFAULT_PREC
    try:
        prec = int(raw)
    except ValueError:
        raise ConfigInvalid(f"QZETA_PREC must be an integer, got {raw!r}") from None
    if prec < 53:
        raise ConfigInvalid("QZETA_PREC must be at least 53")
    return prec


def _common(prec_default: int) -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    g = p.add_argument_group("parameters")
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--s", type=str, help="complex as a+bi")
    g.add_argument("--x", type=_fraction, default=Fraction(0))
    g.add_argument("--y", type=_fraction)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--alpha", type=_fraction, default=Fraction(1))
    g.add_argument("--h", type=int, default=1)
    g.add_argument("--q", type=_q_value)
    g.add_argument("--p", type=int)
    g.add_argument("--levels", type=int, default=5)
    g.add_argument("--order", type=int, default=DEFAULT_ORDER)
    g.add_argument("--prec", type=int, default=prec_default)
    g.add_argument("--tol", type=_fraction, default=DEFAULT_TOL)
    g.add_argument("--backend", choices=("exact", "numeric"))
    g.add_argument("--suite", default="default", choices=sorted(SUITES))
    g.add_argument("--identity", action="append",
                   help="restrict verify to these identities (repeatable or comma separated)")
    g.add_argument("--thm25-literal", action="store_true",
                   help="verify the printed twist index instead of the derived one")
    g.add_argument("--format", default="text", choices=FORMATS)
    g.add_argument("--jobs", type=int, default=1)
    return p


def build_parser(prec_default: int = DEFAULT_PREC) -> argparse.ArgumentParser:
    parser = _Parser(prog="qzeta", description="Weighted (h,q)-Genocchi numbers and zeta functions.")
    parser.add_argument("--config", help="flat key=value file; command-line flags override it")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common(prec_default)
    helps = {
        "genocchi": "weighted Genocchi polynomial G_n(x)",
        "zeta": "weighted zeta function at s",
        "stilde": "twisted alternating power sum (twist given by --h)",
        "padic": "p-adic convergence report for the fermionic level sums",
        "verify": "run an identity suite",
        "table": "Genocchi and zeta values for n = 0..N",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def read_config(path: str) -> list[str]:
    """Translate ``key=value`` lines into flags (``#`` starts a comment)."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigInvalid(f"cannot read config {path!r}: {exc.strerror}") from None
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigInvalid(f"{path}:{lineno}: expected key=value")
        key, value = (t.strip() for t in line.split("=", 1))
        key = key.lstrip("-").replace("_", "-")
        if key in BOOL_FLAGS:
            if value.lower() in ("1", "true", "yes", "on"):
                out.append(f"--{key}")
            elif value.lower() not in ("0", "false", "no", "off"):
                raise ConfigInvalid(f"{path}:{lineno}: {key} expects a boolean")
        else:
            out.append(f"--{key}={value}")
    return out


def _inject_config(argv: list[str]) -> list[str]:
    pre = _Parser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if known.config is None:
        return argv
    extra = read_config(known.config)
    cmd = next((i for i, a in enumerate(rest) if a in COMMANDS), None)
    if cmd is None:
        return rest
    return rest[:cmd + 1] + extra + rest[cmd + 1:]


# ---------------------------------------------------------------------------
# contexts


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _exact_scale(alpha: Fraction, *points) -> int:
    dens = [alpha.denominator] + [(alpha * Fraction(v)).denominator for v in points if v is not None]
    return lcm(*dens)


def _context(args, *points) -> QContext:
    """exact series without ``--q``; exact rational evaluation with a rational ``--q``;
    mpmath with ``--backend numeric`` or a complex ``--q``."""
    common = dict(alpha=args.alpha, h=args.h)
    q = args.q
    if args.backend == "numeric" or isinstance(q, str):
        if args.backend == "exact":
            raise UsageError("a complex --q needs --backend numeric")
        _need(args, "q")
        if isinstance(q, str):
            q = numeric_context(args.prec).mpmathify(q.replace("i", "j"))
        return QContext(backend="numeric", q=q, prec=args.prec, tol=args.tol, **common)
    if q is None:
        return QContext(backend="exact", order=args.order,
                        scale=_exact_scale(args.alpha, *points), **common)
    return QContext(backend="rational", q=q, **common)


def _classical_limit(args) -> bool:
    return args.q is not None and not isinstance(args.q, str) and args.q == 1


# ---------------------------------------------------------------------------
# subcommands


def cmd_genocchi(args):
    _need(args, "n")
    if _classical_limit(args):
        return classical_genocchi_poly(args.n, args.x)
    return genocchi_poly(args.n, args.x, _context(args, args.x))


def cmd_zeta(args):
    _need(args, "s")
    n = neg_int_order(args.s)
    if _classical_limit(args):
        if n is not None:
            return classical_genocchi_poly(n + 1, args.x) / (n + 1)
        return hurwitz_euler(args.s, args.x, tol=args.tol, prec=args.prec)
    ctx = _context(args, args.x)
    if n is not None and ctx.backend != "numeric":
        return zeta_neg_int(n, args.x, ctx)
    if ctx.backend != "numeric":
        if args.backend == "exact" or args.q is None:
            raise UsageError("s off the non-positive integers needs --q and the numeric backend")
        ctx = ctx.replace(backend="numeric", prec=args.prec, tol=args.tol)
    return zeta_eval(args.s, args.x, ctx)


def cmd_stilde(args):
    _need(args, "m", "a")
    if _classical_limit(args):
        return s_classical(args.m, args.a)
    return s_tilde(args.m, args.a, args.h, _context(args))


def cmd_padic(args):
    _need(args, "p")
    if args.x.denominator != 1 or args.alpha.denominator != 1:
        raise UsageError("padic needs integer --x and --alpha")
    q = args.q if args.q is not None else Fraction(1 + args.p)
    if isinstance(q, str):
        raise UsageError("padic needs a rational --q")
    spec = IntegrandSpec(degree=args.n if args.n is not None else 0, x=int(args.x),
                         alpha=int(args.alpha), h=args.h)
    return convergence_report(spec, args.p, q, args.levels)


def _identities(args):
    if not args.identity:
        return None
    names = [t.strip().upper() for item in args.identity for t in item.split(",") if t.strip()]
    try:
        return [IdentityId(n) for n in names]
    except ValueError:
        raise UsageError(f"unknown identity in {names}; choose from "
                         f"{', '.join(i.value for i in IdentityId)}") from None


def cmd_verify(args):
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    q = args.q if args.q is not None else Fraction(1, 2)
    if isinstance(q, str):
        raise UsageError("verify needs a rational --q")
    config = suite_by_name(args.suite, thm25_literal=args.thm25_literal, order=args.order,
                           prec=args.prec, tol=args.tol, q=q)
    return run_suite(config, _identities(args), jobs=args.jobs)


def cmd_table(args):
    _need(args, "n")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    ctx = None if _classical_limit(args) else _context(args, args.x)
    rows = []
    for k in range(args.n + 1):
        row = {"n": k}
        if ctx is None:
            row["genocchi"] = classical_genocchi_poly(k, args.x)
            row["zeta_neg"] = classical_genocchi_poly(k + 1, args.x) / (k + 1)
        else:
            g = genocchi_poly(k, args.x, ctx)
            row["genocchi"] = g if ctx.backend != "exact" else str(g)
            z = zeta_neg_int(k, args.x, ctx)
            row["zeta_neg"] = z if ctx.backend != "exact" else str(z)
        row["classical"] = classical_genocchi_poly(k, args.x)
        rows.append(row)
    return rows


HANDLERS = {
    "genocchi": cmd_genocchi,
    "zeta": cmd_zeta,
    "stilde": cmd_stilde,
    "padic": cmd_padic,
    "verify": cmd_verify,
    "table": cmd_table,
}


def dispatch(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        argv = _inject_config(list(argv))
        args = build_parser(_env_prec()).parse_args(argv)
        if args.prec < 53:
            raise UsageError("--prec must be at least 53")
        result = HANDLERS[args.command](args)
        out.write(emit(result, args.format))
    except (UsageError, QZetaError) as exc:
        err.write(f"qzeta: error: {exc}\n")
        return 2
    except (ValueError, TypeError, ArithmeticError) as exc:
        # domain errors raised by constructors (IntegrandSpec, QContext, ...)
        err.write(f"qzeta: error: {exc}\n")
        return 2
    if args.command == "verify" and not result.passed:
        return 1
    return 0


def main(argv=None) -> int:
    try:
        return dispatch(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0


if __name__ == "__main__":
    sys.exit(main())
