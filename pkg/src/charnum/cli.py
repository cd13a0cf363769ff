"""Command-line front end.

Every subcommand builds a schema-versioned report and renders it as an aligned
text table (default), JSON or CSV. Exit codes: 0 success, 1 usage or input
error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .conics import CONIC_CHAR, FLAG_CONIC_CHAR, oracle_table
from .cubics import CONDITIONS as CUBIC_CONDITIONS
from .cubics import cubic_char_numbers, cubic_I_configs, cubic_recursion, cubic_T_configs
from .exact import LinearSystemError, LinForm
from .hurwitz import METHODS, cover_count
from .quartic_divisors import (CONDITIONS, DIVISORS, T_MODES, Genus2DataError, all_columns,
                               configurations, delta0_from_genus2, load_genus2)
from .quartic_solver import AUTOMORPHISM_ORDER, discriminant_multiplicity, solve
from .verify import run_checks

SCHEMA_VERSION = "1"
FORMATS = ("text", "json", "csv")

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    def __init__(self, message: str, result: "Result"):
        super().__init__(message)
        self.result = result


@dataclass
class Result:
    command: str
    inputs: dict
    outputs: dict
    rows: list[dict] = field(default_factory=list)  # the flat table for text and csv
    checks: list[dict] = field(default_factory=list)

    def report(self, seconds: float) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": self.checks,
            "timing": {"seconds": round(seconds, 6)},
        }


def _s(x) -> str:
    return str(x)


def _form(x: LinForm) -> str:
    return str(x)


# --- commands ------------------------------------------------------------------

def cmd_conics(args) -> Result:
    oracle = oracle_table(args.seed)
    rows = []
    for name, table in (("conic", CONIC_CHAR), ("flag", FLAG_CONIC_CHAR)):
        for (p, l), v in sorted(table.items(), reverse=True):
            computed = oracle.get((name, p, l), (None, None))[1]
            rows.append({"table": name, "points": p, "lines": l, "value": v,
                         "oracle": "" if computed is None else computed})
    checks = [{"name": f"{t} ({p},{l})", "passed": tab == comp}
              for (t, p, l), (tab, comp) in sorted(oracle.items())]
    outputs = {"conic": {f"{p},{l}": v for (p, l), v in CONIC_CHAR.items()},
               "flag": {f"{p},{l}": v for (p, l), v in FLAG_CONIC_CHAR.items()}}
    return Result("conics", {"seed": args.seed}, outputs, rows, checks)


def cmd_cubics(args) -> Result:
    steps = cubic_recursion()
    chars = cubic_char_numbers()
    rows = [{"a": s.a, "b": CUBIC_CONDITIONS - s.a, "I": s.I, "T": s.T,
             "C_a+1": s.previous, "C_a": s.value} for s in steps]
    outputs = {
        "I": {str(s.a): _s(s.I) for s in steps},
        "T": {str(s.a): _s(s.T) for s in steps},
        "recursion": [s.to_json() for s in steps],
        "char_numbers": {str(a): _s(v) for a, v in sorted(chars.items(), reverse=True)},
    }
    if args.breakdown:
        cases = []
        for a in range(CUBIC_CONDITIONS + 1):
            for gen in (cubic_I_configs, cubic_T_configs):
                cases += [c.to_json() for c in gen(a, CUBIC_CONDITIONS - a)]
        outputs["breakdown"] = cases
        rows = [{"divisor": c["divisor"], "a": c["a"], "family": c["family"],
                 "descriptor": json.dumps(c["descriptor"], sort_keys=True),
                 "value": c["value"]["constant"], "provenance": c["provenance"]} for c in cases]
    return Result("cubics", {"breakdown": args.breakdown}, outputs, rows)


def cmd_divisors(args) -> Result:
    delta0 = None
    if args.genus2_data:
        try:
            delta0 = delta0_from_genus2(load_genus2(args.genus2_data))
        except OSError as exc:
            raise UsageError(f"cannot read {args.genus2_data}: {exc.strerror}") from None
        except Genus2DataError as exc:
            raise UsageError(str(exc)) from None
    wanted = [args.divisor] if args.divisor else list(DIVISORS)
    cols = all_columns(t_mode=args.t_mode, delta0=delta0)
    outputs = {"columns": {d: {str(a): cols[d].entries[a].to_json() for a in range(CONDITIONS + 1)}
                           for d in wanted}}
    if args.breakdown:
        cases = [c.to_json() for d in wanted if d != "DELTA0"
                 for a in range(CONDITIONS + 1) for c in configurations(d, a, t_mode=args.t_mode)]
        outputs["breakdown"] = cases
        rows = [{"divisor": c["divisor"], "a": c["a"], "family": c["family"],
                 "descriptor": json.dumps(c["descriptor"], sort_keys=True),
                 "partitions": c["line_partitions"], "solutions": _form(LinForm.from_json(c["solutions"])),
                 "value": _form(LinForm.from_json(c["value"])), "provenance": c["provenance"]}
                for c in cases]
    else:
        rows = [{"a": a, **{d: _form(cols[d].entries[a]) for d in wanted}}
                for a in range(CONDITIONS, -1, -1)]
    inputs = {"divisor": args.divisor, "breakdown": args.breakdown,
              "genus2_data": args.genus2_data, "t_mode": args.t_mode}
    return Result("quartics divisors", inputs, outputs, rows)


def cmd_solve(args) -> Result:
    inputs = {"t_mode": args.t_mode, "report": args.report}
    try:
        sol = solve(all_columns(t_mode=args.t_mode))
    except LinearSystemError as exc:
        res = Result("quartics solve", inputs, {"diagnostics": exc.diagnostics.to_json()},
                     checks=[{"name": "system solvable", "passed": False, "mismatches": [str(exc)]}])
        raise VerificationFailure(str(exc), res) from None
    system = sol.system
    outputs = {
        "rows": [{"label": l, "form": r.to_json()} for l, r in zip(system.labels, system.rows)],
        **sol.to_json(),
        "iota_points": _s(sol.iota_points),
        "discriminant_multiplicity": {d: discriminant_multiplicity(d) for d in AUTOMORPHISM_ORDER},
    }
    rows = [{"quantity": f"C{a}", "value": sol.char_numbers[a]} for a in range(CONDITIONS + 1, -1, -1)]
    rows += [{"quantity": s, "value": _s(v)} for s, v in sol.unknowns.items()]
    rows.append({"quantity": "iota/120", "value": _s(sol.iota_points)})
    violations = sol.invariant_violations()
    checks = [{"name": "solution invariants", "passed": not violations, "mismatches": violations}]
    res = Result("quartics solve", inputs, outputs, rows, checks)
    if violations:
        raise VerificationFailure("; ".join(violations), res)
    return res


def cmd_hurwitz(args) -> Result:
    try:
        cc = cover_count(args.degree, args.branch_points, args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except ArithmeticError as exc:
        res = Result("hurwitz", vars_of(args, "degree", "branch_points", "method"), {},
                     checks=[{"name": "backends agree", "passed": False, "mismatches": [str(exc)]}])
        raise VerificationFailure(str(exc), res) from None
    out = cc.to_json()
    return Result("hurwitz", vars_of(args, "degree", "branch_points", "method"), out, [out])


def cmd_verify(args) -> Result:
    checks = run_checks()
    res = Result("verify", {}, {"passed": sum(c.passed for c in checks), "total": len(checks)},
                 [{"check": c.name, "result": "pass" if c.passed else "FAIL",
                   "detail": "; ".join(c.mismatches)} for c in checks],
                 [c.to_json() for c in checks])
    if not all(c.passed for c in checks):
        raise VerificationFailure("verification failed", res)
    return res


def vars_of(args, *names) -> dict:
    return {n: getattr(args, n) for n in names}


# --- rendering -----------------------------------------------------------------

def render_text(res: Result) -> str:
    if not res.rows:
        return json.dumps(res.outputs, indent=2)
    cols = list(dict.fromkeys(k for r in res.rows for k in r))
    cells = [[str(r.get(c, "")) for c in cols] for r in res.rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(v.rjust(w) if v.lstrip("-").isdigit() else v.ljust(w)
                        for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def render_csv(res: Result) -> str:
    cols = list(dict.fromkeys(k for r in res.rows for k in r))
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in res.rows:
        w.writerow({c: r.get(c, "") for c in cols})
    return buf.getvalue().rstrip("\n")


def render(res: Result, fmt: str, seconds: float) -> str:
    if fmt == "json":
        return json.dumps(res.report(seconds), indent=2)
    if fmt == "csv":
        return render_csv(res)
    return render_text(res)


# --- parser ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=FORMATS, default="text", help="output encoding")
    # accepted after the subcommand too, without clobbering a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output encoding")

    parser = _Parser(prog="charnum", description="Characteristic numbers of plane conics, "
                     "cubics and quartics in exact arithmetic.", parents=[top])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("conics", parents=[common], help="conic tables with their oracle values")
    p.add_argument("--seed", type=int, default=0, help="seed for the random verification configurations")
    p.set_defaults(func=cmd_conics)

    p = sub.add_parser("cubics", parents=[common], help="cubic divisor tables and the recursion")
    p.add_argument("--breakdown", action="store_true", help="list every configuration")
    p.set_defaults(func=cmd_cubics)

    q = sub.add_parser("quartics", help="quartic divisor columns and the linear system")
    qsub = q.add_subparsers(dest="quartics_command", required=True, parser_class=_Parser)
    p = qsub.add_parser("divisors", parents=[common], help="boundary divisor columns")
    p.add_argument("--divisor", choices=DIVISORS, help="only this divisor")
    p.add_argument("--breakdown", action="store_true", help="list every configuration")
    p.add_argument("--genus2-data", metavar="FILE", help="JSON genus-2 counts to recompute DELTA0")
    p.add_argument("--t-mode", choices=T_MODES, default="table",
                   help="valuation of the T family rotating about the node image")
    p.set_defaults(func=cmd_divisors)
    p = qsub.add_parser("solve", parents=[common], help="assemble and solve the linear system")
    p.add_argument("--report", metavar="FILE.json", help="also write the JSON report here")
    p.add_argument("--t-mode", choices=T_MODES, default="table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("hurwitz", parents=[common], help="connected simply branched covers of P^1")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--branch-points", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="classalg")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("verify", parents=[common], help="check every reproduced published value")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func: Callable[..., Result] = args.func
    start = time.perf_counter()
    code = EXIT_OK
    try:
        res = func(args)
    except UsageError as exc:
        print(f"charnum: error: {exc}", file=stderr)
        return EXIT_USAGE
    except VerificationFailure as exc:
        print(f"charnum: verification failed: {exc}", file=stderr)
        res, code = exc.result, EXIT_VERIFY
    seconds = time.perf_counter() - start
    print(render(res, args.format, seconds), file=stdout)
    report_path = getattr(args, "report", None)
    if report_path:
        try:
            Path(report_path).write_text(json.dumps(res.report(seconds), indent=2) + "\n")
        except OSError as exc:
            print(f"charnum: error: cannot write {report_path}: {exc.strerror}", file=stderr)
            return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
