"""Command-line front end.

Every invocation writes one JSON record to stdout and a short human summary
to stderr.  Exit codes: 0 ok, 2 usage, 3 domain error, 4 comparison failed,
5 unreadable coefficient file.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Any

import numpy as np

from . import bounds, constants, oracle, series
from .arith import MAX_SIEVE_LIMIT, build_sieve
from .funcs import BoundaryConvergenceError, CoefficientFileError, resolve
from .oracle import OracleDomainError
from .series import SeriesDomainError
from .zeta import ZetaDomainError

SCHEMA = "primesums.output/1"
SIEVE_ENV = "PRIMESUMS_SIEVE_LIMIT"
DEFAULT_SIEVE_LIMIT = 10**6

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_COMPARE_FAIL = 4
EXIT_INPUT_FILE = 5

_DOMAIN_ERRORS = (SeriesDomainError, ZetaDomainError, OracleDomainError)


class UsageError(Exception):
    pass


def render(obj: Any) -> str:
    """JSON with every float written to 17 significant digits (non-finite -> null)."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return format(x, ".17g") if math.isfinite(x) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {render(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def record(command: str, inputs: dict, value: float | None, error_bound: float | None = None,
           M: int | None = None, method: str = "", **extra) -> dict:
    rec = {
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "value": value,
        "error_bound": error_bound,
        "M": M,
        "method": method,
    }
    rec.update(extra)
    return rec


def _sieve_limit(args) -> int:
    if args.sieve_limit is not None:
        limit = args.sieve_limit
    else:
        env = os.environ.get(SIEVE_ENV)
        try:
            limit = int(float(env)) if env else DEFAULT_SIEVE_LIMIT
        except ValueError:
            raise UsageError(f"{SIEVE_ENV}={env!r} is not an integer") from None
    if not 2 <= limit <= MAX_SIEVE_LIMIT:
        raise UsageError(f"sieve limit must lie in [2, {MAX_SIEVE_LIMIT}]")
    return limit


def _terms(result) -> list[dict]:
    return [{"n": n, "term": t} for n, t in result.terms]


def cmd_constant(args) -> tuple[dict, int]:
    c = constants.by_name(args.name)
    rec = record("constant", {"name": args.name}, c.value, c.error_bound, None, c.method)
    return rec, EXIT_OK


def _evaluate(args, f):
    if args.scheme == "finite":
        if args.logweight:
            raise UsageError("--logweight is only available with --scheme zeta")
        if args.tol is not None:
            M = next((m for m in range(1, bounds.M_CAP + 1)
                      if bounds.scheme_bound(f, m, args.s).bound <= args.tol), bounds.M_CAP)
        else:
            M = args.M if args.M is not None else 12
        if args.s <= 1:
            raise SeriesDomainError(f"finite scheme needs s > 1, got {args.s}")
        return series.finite_scheme(f, args.s, M, build_sieve(_sieve_limit(args)), args.l_max)
    if args.logweight:
        return series.prime_sum_logweight(f, args.s, args.M, args.tol)
    return series.prime_sum(f, args.s, args.M, args.tol)


def cmd_eval(args) -> tuple[dict, int]:
    f = resolve(args.function)
    res = _evaluate(args, f)
    inputs = {"function": f.id, "s": args.s, "M": args.M, "tol": args.tol,
              "logweight": args.logweight, "scheme": args.scheme}
    extra = {"bound_kind": res.budget.kind if res.budget else None,
             "heuristic_bound": bool(res.budget and res.budget.heuristic)}
    if res.meta:
        extra["meta"] = res.meta
    if args.terms:
        extra["terms"] = _terms(res)
    rec = record("eval", inputs, res.value, res.error_bound, res.M, res.method, **extra)
    return rec, EXIT_OK


def cmd_compare(args) -> tuple[dict, int]:
    f = resolve(args.function)
    limit = _sieve_limit(args)
    if args.logweight:
        res = series.prime_sum_logweight(f, args.s, args.M)
        orc = oracle.direct_logweight_sum(f, args.s, limit)
    else:
        res = series.prime_sum(f, args.s, args.M)
        orc = oracle.direct_prime_sum(f, args.s, limit)
    eb = res.error_bound or 0.0
    slack = 1e-12 * max(1.0, abs(res.value))
    diff_partial = res.value - orc.partial
    passed = abs(diff_partial) <= orc.tail_bound + eb + slack
    inputs = {"function": f.id, "s": args.s, "M": res.M, "prime_limit": limit,
              "logweight": args.logweight}
    rec = record("compare", inputs, res.value, res.error_bound, res.M, res.method,
                 oracle={"partial": orc.partial, "tail_bound": orc.tail_bound,
                         "tail_estimate": orc.tail_estimate, "limit": orc.limit,
                         "n_primes": orc.n_primes},
                 difference=res.value - orc.estimate,
                 difference_to_partial=diff_partial,
                 allowed=orc.tail_bound + eb + slack,
                 passed=passed)
    return rec, EXIT_OK if passed else EXIT_COMPARE_FAIL


def cmd_bound(args) -> tuple[dict, int]:
    if args.prop == 2:
        budget = bounds.prop2_bound(args.M)
        fid = "f1"
    else:
        if args.s is None:
            raise UsageError("--prop 1 needs --s")
        f = resolve(args.function)
        fid = f.id
        budget = bounds.prop1_bound(f, args.M, args.s, args.radius)
    inputs = {"prop": args.prop, "M": args.M, "s": budget.s, "function": fid}
    rec = record("bound", inputs, budget.bound, None, budget.M, budget.kind,
                 bound_inputs=budget.inputs, heuristic_bound=budget.heuristic)
    return rec, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primesums",
                                description="Prime sums through series of zeta values.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("constant", help="named constants")
    c.add_argument("name", choices=constants.NAMES)
    c.set_defaults(handler=cmd_constant)

    def common(sp):
        sp.add_argument("--function", default="identity",
                        help="identity, f1, neg_log1m, square, zero, polynomial:c1,c2,... "
                             "or a coefficient file")
        sp.add_argument("--s", type=float, required=True)
        sp.add_argument("--logweight", action="store_true",
                        help="sum f'(p^-s) p^-s log p instead of f(p^-s)")
        sp.add_argument("--sieve-limit", "--prime-limit", dest="sieve_limit", type=int,
                        default=None, help=f"prime range (default {DEFAULT_SIEVE_LIMIT}, "
                                           f"or ${SIEVE_ENV})")

    e = sub.add_parser("eval", help="accelerated prime sum")
    common(e)
    trunc = e.add_mutually_exclusive_group()
    trunc.add_argument("--M", type=int)
    trunc.add_argument("--tol", type=float)
    e.add_argument("--scheme", choices=("zeta", "finite"), default="zeta")
    e.add_argument("--l-max", type=int, default=64)
    e.add_argument("--terms", action="store_true", help="include the per-term ledger")
    e.set_defaults(handler=cmd_eval)

    k = sub.add_parser("compare", help="accelerated value against the sieve oracle")
    common(k)
    k.add_argument("--M", type=int, default=None)
    k.set_defaults(handler=cmd_compare)

    b = sub.add_parser("bound", help="a-priori truncation bound")
    b.add_argument("--prop", type=int, choices=(1, 2), required=True)
    b.add_argument("--M", type=int, required=True)
    b.add_argument("--s", type=float, default=None)
    b.add_argument("--function", default="identity")
    b.add_argument("--radius", type=float, default=None)
    b.set_defaults(handler=cmd_bound)
    return p


def _summary(rec: dict) -> str:
    parts = [f"{rec['command']}: value = {rec['value']!r}"]
    if rec.get("error_bound") is not None:
        parts.append(f"bound = {rec['error_bound']:.3g}")
    if rec.get("M") is not None:
        parts.append(f"M = {rec['M']}")
    if "passed" in rec:
        parts.append("PASS" if rec["passed"] else "FAIL")
    return ", ".join(parts)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rec, code = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CoefficientFileError as exc:
        print(f"coefficient file error: {exc}", file=sys.stderr)
        return EXIT_INPUT_FILE
    except _DOMAIN_ERRORS as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, BoundaryConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(rec) + "\n")
    print(_summary(rec), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
