"""Command line front end; every check, deterministic output, scriptable exits.

Exit codes: 0 maximal/true, 1 not-maximal/false, 2 unknown, 64 usage error,
65 malformed input or violated precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .criterion import (
    VERDICT_MAXIMAL,
    VERDICT_NOT_MAXIMAL,
    VERDICT_UNKNOWN,
    certificate_to_dict,
    classical_dedekind_oracle,
    is_maximal_global,
    local_maximality,
    local_report_to_dict,
)
from .eisenstein import is_eisenstein_at, power_basis_generator
from .intpoly import IntPoly, PolyParseError, cyclotomic_prime_power, parse_poly
from .fppoly import factor_mod_p, reduce_mod_p
from .purepower import pure_power_exact, pure_power_sufficient
from .quadratic import QuadField, pure_power_check

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_INPUT = 65

_VERDICT_EXITS = {
    VERDICT_MAXIMAL: EXIT_TRUE,
    VERDICT_NOT_MAXIMAL: EXIT_FALSE,
    VERDICT_UNKNOWN: EXIT_UNKNOWN,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_common(parser: _Parser, *, suppress: bool) -> None:
    # Subcommand copies of the flags must not clobber values the root parser
    # already put in the namespace, hence SUPPRESS defaults there.
    seed_default = argparse.SUPPRESS if suppress else None
    flag_kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument(
        "--seed", type=int, default=seed_default, help="64-bit seed (default: DEDCRIT_SEED or 0)"
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output", **flag_kw)
    parser.add_argument("--verbose", action="store_true", help="extra diagnostics on stderr", **flag_kw)


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    _add_common(common, suppress=True)

    parser = _Parser(prog="dedcrit")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("check", parents=[common], help="global maximality certificate for Z[alpha]")
    p.add_argument("poly")

    p = sub.add_parser("local", parents=[common], help="maximality at a single prime")
    p.add_argument("poly")
    p.add_argument("p", type=int)

    p = sub.add_parser("oracle", parents=[common], help="classical Dedekind criterion at a prime")
    p.add_argument("poly")
    p.add_argument("p", type=int)

    p = sub.add_parser("purepower", parents=[common], help="exact test for x^n - u over Z")
    p.add_argument("n", type=int)
    p.add_argument("u", type=int)

    p = sub.add_parser("thm3", parents=[common], help="sufficient test: a squarefree, rad(n) | a")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)

    p = sub.add_parser("quadratic", parents=[common], help="x^n - (a + b*w) over Q(sqrt(d))")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = sub.add_parser("cyclotomic", parents=[common], help="check the cyclotomic polynomial of index p^r")
    p.add_argument("p", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("factor-mod-p", parents=[common], help="monic irreducible factorization mod p")
    p.add_argument("poly")
    p.add_argument("p", type=int)

    p = sub.add_parser("eisenstein", parents=[common], help="Eisenstein test at p")
    p.add_argument("poly")
    p.add_argument("p", type=int)

    p = sub.add_parser("theta", parents=[common], help="power basis generator exponents (m*s - n*t = 1)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("p", type=int)

    return parser


def _resolve_seed(ns) -> int:
    if ns.seed is not None:
        return ns.seed
    env = os.environ.get("DEDCRIT_SEED", "")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"DEDCRIT_SEED is not an integer: {env!r}")
    return 0


def _emit(out, ns, obj: dict, text: str) -> None:
    if ns.json:
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _certificate_summary(cert) -> str:
    checked = ", ".join(str(r.p) for r in cert.checked_primes) or "none"
    lines = [
        f"f = {cert.f}",
        f"disc = {cert.disc}",
        f"checked primes (square divides disc): {checked}",
    ]
    for rep in cert.checked_primes:
        for ev in rep.factors:
            val = "-" if ev.remainder_valuation is None else str(ev.remainder_valuation)
            lines.append(
                f"  p={rep.p}: factor {ev.fbar} ^{ev.multiplicity}, lift {ev.lift},"
                f" remainder {ev.remainder}, valuation {val}, ok={ev.satisfied}"
            )
    lines.append(f"irreducibility: {cert.irreducibility_status}")
    lines.append(f"verdict: {cert.verdict}")
    return "\n".join(lines)


def _cmd_check(ns, out, err, f: IntPoly | None = None) -> int:
    seed = _resolve_seed(ns)
    poly = f if f is not None else parse_poly(ns.poly)
    cert = is_maximal_global(poly, seed)
    _emit(out, ns, certificate_to_dict(cert), _certificate_summary(cert))
    return _VERDICT_EXITS[cert.verdict]


def _cmd_local(ns, out, err) -> int:
    report = local_maximality(parse_poly(ns.poly), ns.p, _resolve_seed(ns))
    text = f"locally maximal at {ns.p}: {str(report.locally_maximal).lower()}"
    _emit(out, ns, local_report_to_dict(report), text)
    return EXIT_TRUE if report.locally_maximal else EXIT_FALSE


def _cmd_oracle(ns, out, err) -> int:
    ok = classical_dedekind_oracle(parse_poly(ns.poly), ns.p, _resolve_seed(ns))
    _emit(out, ns, {"p": str(ns.p), "ok": ok}, f"classical criterion at {ns.p}: {str(ok).lower()}")
    return EXIT_TRUE if ok else EXIT_FALSE


def _cmd_purepower(ns, out, err) -> int:
    v = pure_power_exact(ns.n, ns.u)
    obj = {
        "n": str(v.n),
        "u": str(v.u),
        "verdict": v.verdict,
        "failing_prime": None if v.failing_prime is None else str(v.failing_prime),
        "reason": v.reason,
    }
    text = f"x^{v.n} - ({v.u}): {v.verdict}"
    if v.failing_prime is not None:
        text += f" (fails at {v.failing_prime}: {v.reason})"
    _emit(out, ns, obj, text)
    return _VERDICT_EXITS[v.verdict]


def _cmd_thm3(ns, out, err) -> int:
    ok = pure_power_sufficient(ns.n, ns.a)
    text = (
        f"sufficient condition for x^{ns.n} - ({ns.a}): "
        + ("holds (maximal)" if ok else "does not hold (inconclusive)")
    )
    _emit(out, ns, {"n": str(ns.n), "a": str(ns.a), "sufficient": ok}, text)
    return EXIT_TRUE if ok else EXIT_FALSE


def _cmd_quadratic(ns, out, err) -> int:
    field = QuadField(ns.d)
    u = field.element(ns.a, ns.b)
    v = pure_power_check(field, ns.n, u)
    obj = {
        "d": str(v.d),
        "n": str(v.n),
        "u": [str(v.u[0]), str(v.u[1])],
        "omega": field.omega_text,
        "verdict": v.verdict,
        "irreducibility_status": v.irreducibility_status,
        "failing_prime": None if v.failing_prime is None else v.failing_prime.label(),
        "reason": v.reason,
        "checks": [
            {
                "prime": c.prime.label(),
                "kind": c.prime.kind,
                "v_u": str(c.v_u),
                "v_frobenius": None if c.v_frobenius is None else str(c.v_frobenius),
                "ok": c.ok,
            }
            for c in v.checks
        ],
    }
    text = f"x^{ns.n} - ({u}) over Q(sqrt({ns.d})), w = {field.omega_text}: {v.verdict}"
    if v.failing_prime is not None:
        text += f" (fails at {v.failing_prime.label()}: {v.reason})"
    _emit(out, ns, obj, text)
    return _VERDICT_EXITS[v.verdict]


def _cmd_cyclotomic(ns, out, err) -> int:
    f = cyclotomic_prime_power(ns.p, ns.r)
    if ns.verbose:
        err.write(f"cyclotomic polynomial of index {ns.p}^{ns.r}: {f}\n")
    return _cmd_check(ns, out, err, f=f)


def _cmd_factor_mod_p(ns, out, err) -> int:
    fac = factor_mod_p(reduce_mod_p(parse_poly(ns.poly), ns.p), _resolve_seed(ns))
    obj = {
        "p": str(fac.p),
        "unit": str(fac.unit),
        "factors": [
            {"coeffs": [str(c) for c in g.coeffs], "multiplicity": str(m)}
            for g, m in fac.factors
        ],
    }
    parts = " * ".join(
        f"({IntPoly(g.coeffs)})^{m}" if m > 1 else f"({IntPoly(g.coeffs)})"
        for g, m in fac.factors
    )
    unit = f"{fac.unit} * " if fac.unit != 1 else ""
    _emit(out, ns, obj, f"mod {fac.p}: {unit}{parts}")
    return EXIT_TRUE


def _cmd_eisenstein(ns, out, err) -> int:
    ok = is_eisenstein_at(parse_poly(ns.poly), ns.p)
    _emit(out, ns, {"p": str(ns.p), "eisenstein": ok}, f"Eisenstein at {ns.p}: {str(ok).lower()}")
    return EXIT_TRUE if ok else EXIT_FALSE


def _cmd_theta(ns, out, err) -> int:
    theta = power_basis_generator(ns.n, ns.m, ns.p)
    obj = {
        "n": str(theta.n),
        "m": str(theta.m),
        "s": str(theta.s),
        "t": str(theta.t),
        "p": str(theta.p),
        "description": theta.description,
    }
    text = f"{theta.description}  (m*s - n*t = {theta.m}*{theta.s} - {theta.n}*{theta.t} = 1)"
    _emit(out, ns, obj, text)
    return EXIT_TRUE


_COMMANDS = {
    "check": _cmd_check,
    "local": _cmd_local,
    "oracle": _cmd_oracle,
    "purepower": _cmd_purepower,
    "thm3": _cmd_thm3,
    "quadratic": _cmd_quadratic,
    "cyclotomic": _cmd_cyclotomic,
    "factor-mod-p": _cmd_factor_mod_p,
    "eisenstein": _cmd_eisenstein,
    "theta": _cmd_theta,
}


def _annotate_parse_error(err, exc: PolyParseError, source: str) -> None:
    err.write(f"error: {exc.message} (at position {exc.position})\n")
    err.write(f"  {source}\n")
    err.write("  " + " " * exc.position + "^\n")


def run(argv, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    if ns.command is None:
        err.write(parser.format_usage())
        return EXIT_USAGE
    try:
        return _COMMANDS[ns.command](ns, out, err)
    except PolyParseError as exc:
        _annotate_parse_error(err, exc, getattr(ns, "poly", ""))
        return EXIT_INPUT
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))
