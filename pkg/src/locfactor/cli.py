"""Command-line interface.

    locfactor factor <expr> [--route direct|laurent|fracfield|auto] [--json] [--verbose]
    locfactor compare <expr> [--verbose]
    locfactor selftest [--seed N] [--trials N]

Expressions use the variables X, Y, T (integers for Z, X for Z[X], T for the
Laurent ring, Y or X+Y for Z[X][Y]).  With no expression argument, lines are
read from stdin (batch mode; JSON output is newline-delimited).

Exit codes: 0 ok, 1 usage or parse error, 2 math-domain error, 3 internal
invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import expr
from .basefactor import PrimeFactorization, factor_bivariate, factor_integer, factor_poly_zx
from .errors import LocFactorError, OracleViolationError, ParseError
from .rings import LT, ZX, ZXY, ZZ, Ring
from .routes import (
    compare_routes,
    factor_iterated,
    factor_laurent,
    factor_zx_via_fraction_field,
    factor_zx_via_laurent,
    laurent_certificates,
)
from .selftest import run_selftest

JSON_SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


@dataclass(frozen=True)
class FactorOutcome:
    ring: Ring
    route: str
    factorization: PrimeFactorization
    certificates: Optional[tuple]
    elapsed: float


def run_factor(ring: Ring, element, route: str) -> FactorOutcome:
    """Dispatch to the engine matching the ring and requested route."""
    t0 = time.perf_counter()
    if ring == ZZ:
        if route not in ("auto", "direct"):
            raise UsageError(f"route {route!r} is not available for integers")
        out = FactorOutcome(ring, "direct", factor_integer(element), None, 0.0)
    elif ring == ZX:
        if route in ("auto", "fracfield"):
            res = factor_zx_via_fraction_field(element)
            out = FactorOutcome(ring, "fracfield", res.factorization, res.certificates, 0.0)
        elif route == "laurent":
            res = factor_zx_via_laurent(element)
            out = FactorOutcome(ring, "laurent", res.factorization, res.certificates, 0.0)
        else:
            out = FactorOutcome(ring, "direct", factor_poly_zx(element), None, 0.0)
    elif ring == LT:
        if route == "fracfield":
            raise UsageError("route 'fracfield' is not available for Laurent input")
        pf = factor_laurent(element)
        out = FactorOutcome(ring, "laurent", pf, laurent_certificates(pf), 0.0)
    elif ring == ZXY:
        if route in ("auto", "fracfield"):
            res = factor_iterated(element)
            out = FactorOutcome(ring, "iterated", res.factorization, res.certificates, 0.0)
        elif route == "direct":
            out = FactorOutcome(ring, "direct", factor_bivariate(element), None, 0.0)
        else:
            raise UsageError(f"route {route!r} is not available for bivariate input")
    else:
        raise UsageError(f"cannot factor over {ring.name}")
    elapsed = time.perf_counter() - t0
    pf = out.factorization
    # the rendered report must re-parse to the factored element
    check = expr.parse_in_ring(expr.render(ring, pf.unit), ring)
    for q in pf.factors:
        check = ring.mul(check, expr.parse_in_ring(expr.render(ring, q), ring))
    if not ring.eq(check, ring.mul(pf.unit, ring.prod(pf.factors))):
        raise OracleViolationError("rendered factorization does not re-parse to the input")
    return FactorOutcome(out.ring, out.route, out.factorization, out.certificates, elapsed)


def _grouped_factors(ring: Ring, outcome: FactorOutcome):
    """Aggregate equal factors into (expr, multiplicity, certificate) rows."""
    rows = []
    for i, q in enumerate(outcome.factorization.factors):
        cert = outcome.certificates[i] if outcome.certificates else None
        for row in rows:
            if ring.eq(row[0], q):
                row[1] += 1
                break
        else:
            rows.append([q, 1, cert])
    return rows


def _factor_json(outcome: FactorOutcome, text: str) -> str:
    ring = outcome.ring
    factors = []
    for q, mult, cert in _grouped_factors(ring, outcome):
        factors.append(
            {
                "expr": expr.render(ring, q),
                "multiplicity": mult,
                "certificate": None
                if cert is None
                else {"case": cert.case, "detail": cert.detail()},
            }
        )
    doc = {
        "version": JSON_SCHEMA_VERSION,
        "input": text,
        "ring": ring.name,
        "route": outcome.route,
        "unit": expr.render(ring, outcome.factorization.unit),
        "factors": factors,
    }
    return json.dumps(doc, separators=(",", ":"))


def _factor_text(outcome: FactorOutcome, text: str, verbose: bool) -> str:
    ring = outcome.ring
    lines = [
        f"input: {text}",
        f"ring: {ring.name}",
        f"route: {outcome.route}",
        f"unit: {expr.render(ring, outcome.factorization.unit)}",
        "factors:",
    ]
    rows = _grouped_factors(ring, outcome)
    if not rows:
        lines.append("  (none; the input is a unit)")
    for q, mult, cert in rows:
        tail = "" if cert is None else f"  [{cert.case}: {cert.detail()}]"
        lines.append(f"  {expr.render(ring, q)}  (multiplicity {mult}){tail}")
    if verbose:
        lines.append(f"elapsed: {outcome.elapsed:.6f}s")
        if outcome.certificates:
            replays = all(c.replay() for c in outcome.certificates)
            lines.append(f"certificate replay: {'ok' if replays else 'FAILED'}")
    return "\n".join(lines)


def _cert_summary(certificates) -> str:
    if not certificates:
        return ""
    counts: dict = {}
    for c in certificates:
        counts[c.case] = counts.get(c.case, 0) + 1
    inner = ", ".join(f"{counts[k]} {k}" for k in sorted(counts))
    return f"  (certificates: {inner})"


def _compare_text(report, text: str, verbose: bool) -> str:
    lines = [f"input: {text}", "ring: Z[X]"]
    for run in report.runs:
        pf = run.factorization
        rendered = ", ".join(expr.render(ZX, q) for q in pf.factors)
        lines.append(
            f"{run.route}: unit {expr.render(ZX, pf.unit)}; "
            f"factors [{rendered}]{_cert_summary(run.certificates)}"
        )
    lines.append("agreement: " + ", ".join(f"{a} ~ {b}" for a, b in report.agreements))
    if verbose:
        for run in report.runs:
            lines.append(f"elapsed {run.route}: {run.elapsed:.6f}s")
    return "\n".join(lines)


def _iter_inputs(args) -> list[str]:
    if args.expr is not None:
        return [args.expr]
    return [line.strip() for line in sys.stdin if line.strip()]


def _do_factor(args) -> int:
    worst = 0
    batch = args.expr is None
    for text in _iter_inputs(args):
        try:
            ring, element = expr.parse_expr(text)
            outcome = run_factor(ring, element, args.route)
            if args.json:
                print(_factor_json(outcome, text))
            else:
                print(_factor_text(outcome, text, args.verbose))
                if batch:
                    print()
        except (ParseError, UsageError, LocFactorError) as e:
            code = _exit_code_for(e)
            print(f"error: {e}", file=sys.stderr)
            if not batch:
                return code
            worst = max(worst, code)
    return worst


def _do_compare(args) -> int:
    worst = 0
    batch = args.expr is None
    for text in _iter_inputs(args):
        try:
            ring, element = expr.parse_expr(text)
            if ring != ZX:
                raise UsageError("compare requires a Z[X] expression")
            report = compare_routes(element)
            print(_compare_text(report, text, args.verbose))
            if batch:
                print()
        except (ParseError, UsageError, LocFactorError) as e:
            code = _exit_code_for(e)
            print(f"error: {e}", file=sys.stderr)
            if not batch:
                return code
            worst = max(worst, code)
    return worst


def _do_selftest(args) -> int:
    report = run_selftest(args.seed, args.trials)
    for line in report.lines:
        print(line)
    print("all suites pass" if report.ok else "SELFTEST FAILED")
    return 0 if report.ok else 3


def _exit_code_for(e: Exception) -> int:
    if isinstance(e, (ParseError, UsageError)):
        return 1
    if isinstance(e, OracleViolationError):
        return 3
    return 2


def main(argv=None) -> int:
    parser = _Parser(prog="locfactor", description="exact factorization, cross-checked through localization descent")
    sub = parser.add_subparsers(dest="command", required=True)

    p_factor = sub.add_parser("factor", help="factor one expression (or stdin lines)")
    p_factor.add_argument("expr", nargs="?", help="expression; omit to read stdin")
    p_factor.add_argument("--route", choices=("direct", "laurent", "fracfield", "auto"), default="auto")
    p_factor.add_argument("--json", action="store_true", help="machine output (schema version 1)")
    p_factor.add_argument("--verbose", action="store_true", help="print certificate replays and timing")

    p_compare = sub.add_parser("compare", help="run all Z[X] routes and check agreement")
    p_compare.add_argument("expr", nargs="?")
    p_compare.add_argument("--verbose", action="store_true")

    p_self = sub.add_parser("selftest", help="run the randomized property suites")
    p_self.add_argument("--seed", type=int, default=42)
    p_self.add_argument("--trials", type=int, default=100)

    try:
        args = parser.parse_args(argv)
        if args.command == "factor":
            return _do_factor(args)
        if args.command == "compare":
            return _do_compare(args)
        return _do_selftest(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OracleViolationError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3
    except LocFactorError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
