"""Command-line front end.

::

    hopf-forge eval  --instance shuffle 'w"a" * w"b"'
    hopf-forge check --instance forest --bound 4 --conditions all
    hopf-forge basis --instance graph --bound 2

Exit status: 0 on success, 1 when a verification disagrees with the rule's
declaration (or runs out of budget), 2 on usage, parse and evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import hopfcore
from .axiomlab import BUDGET, Domain, Report, check_condition, check_hopf, matches_declaration
from .errors import BudgetExceeded, HopfForgeError, ParseError
from .expr import evaluate, format_value, parse_expression, value_to_json
from .instances import INSTANCES, enumerate_basis, make_rule
from .ruledef import CONDITIONS

CONFIG_ENV = "HOPF_FORGE_CONFIG"
CONFIG_KEYS = {"instance": str, "alphabet": str, "bound": int, "budget": int,
               "format": str, "conditions": str}
DEFAULTS = {"instance": "free", "alphabet": None, "bound": None,
            "budget": hopfcore.DEFAULT_BUDGET, "format": "text", "conditions": "all"}

# per-instance sweep sizes that keep ``check --conditions all,hopf`` to seconds
DEFAULT_BOUNDS = {"free": 4, "symmetric": 4, "shuffle": 4, "polynomial": 6, "graph": 3, "forest": 5}

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_config(path: str) -> dict:
    """Read ``key = value`` lines; ``#`` starts a comment, values may be quoted."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    out: dict = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line or (line.startswith("[") and line.endswith("]")):
            continue
        key, eq, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not eq or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: expected one of "
                             f"{', '.join(CONFIG_KEYS)} as 'key = value'")
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "'\"":
            value = value[1:-1]
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # defaults stay None so config values can fill the gaps
    common.add_argument("--instance", choices=INSTANCES)
    common.add_argument("--alphabet", help="letters of the word instances")
    common.add_argument("--bound", type=int, help="size bound of the test domain")
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--budget", type=int, help="work budget for antipode computations")

    parser = argparse.ArgumentParser(prog="hopf-forge",
                                     description="Hopf algebras from composition/decomposition rules")
    sub = parser.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    ev.add_argument("expression")
    ck = sub.add_parser("check", parents=[common], help="verify conditions on a bounded domain")
    ck.add_argument("--conditions",
                    help="comma list of condition ids, 'all', or 'hopf' (default: all)")
    sub.add_parser("basis", parents=[common], help="list basis objects up to --bound")
    return parser


def resolve(args: argparse.Namespace) -> dict:
    settings = dict(DEFAULTS)
    path = os.environ.get(CONFIG_ENV)
    if path:
        settings.update(load_config(path))
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if settings["instance"] not in INSTANCES:
        raise UsageError(f"unknown instance {settings['instance']!r}")
    if settings["format"] not in ("text", "json"):
        raise UsageError(f"unknown format {settings['format']!r}")
    if settings["bound"] is None:
        settings["bound"] = DEFAULT_BOUNDS[settings["instance"]]
    if settings["bound"] < 0 or settings["budget"] <= 0:
        raise UsageError("bound must be >= 0 and budget > 0")
    return settings


def _conditions(text: str) -> list[str]:
    names: list[str] = []
    for item in (c.strip() for c in text.split(",")):
        if item == "all":
            names.extend(CONDITIONS)
        elif item:
            names.append(item)
    unknown = [c for c in names if c != "hopf" and c not in CONDITIONS]
    if unknown or not names:
        raise UsageError(f"unknown condition(s) {', '.join(unknown) or '(none)'}; "
                         f"use 'all', 'hopf' or any of {', '.join(CONDITIONS)}")
    return names


def cmd_eval(rule, settings, expression: str, out) -> int:
    value = evaluate(parse_expression(expression, rule), rule, settings["budget"])
    if settings["format"] == "json":
        out.write(json.dumps(value_to_json(value, rule)) + "\n")
    else:
        out.write(format_value(value, rule) + "\n")
    return EXIT_OK


def _report_lines(rule, report: Report, indent: str = "") -> list[str]:
    expected = "declared" if report.condition in rule.declared else "undeclared"
    if report.condition == "hopf" or indent:
        expected = "-"
    fields = [rule.name, report.condition, report.verdict, expected,
              str(report.cases), f"{report.seconds:.3f}s"]
    if report.counterexample is not None:
        fields.append(json.dumps(report.counterexample, ensure_ascii=False))
    lines = [indent + "\t".join(fields)]
    for sub in report.subreports:
        lines.extend(_report_lines(rule, sub, indent + "  "))
    return lines


def cmd_check(rule, settings, out) -> int:
    dom = Domain.build(rule, settings["bound"])
    reports: list[Report] = []
    ok = True
    for cond in _conditions(settings["conditions"]):
        if cond == "hopf":
            report = check_hopf(rule, dom, settings["budget"])
            ok &= report.holds
        else:
            report = check_condition(rule, cond, dom, settings["budget"])
            ok &= matches_declaration(rule, report) and report.verdict != BUDGET
        reports.append(report)
    if settings["format"] == "json":
        payload = {"instance": rule.name, "bound": settings["bound"], "objects": len(dom.objects),
                   "consistent": ok, "reports": [r.to_json() for r in reports]}
        out.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    else:
        out.write("\t".join(("rule", "condition", "verdict", "expected", "cases", "time",
                             "counterexample")) + "\n")
        for report in reports:
            out.write("\n".join(_report_lines(rule, report)) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_basis(rule, settings, out) -> int:
    objs = enumerate_basis(rule, settings["bound"])
    if settings["format"] == "json":
        out.write(json.dumps([{"size": rule.size_fn(g), "key": rule.format(g)} for g in objs],
                             ensure_ascii=False) + "\n")
    else:
        for g in objs:
            out.write(f"{rule.size_fn(g)}\t{rule.format(g)}\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        settings = resolve(args)
        rule = make_rule(settings["instance"], settings["alphabet"])
        if args.command == "eval":
            return cmd_eval(rule, settings, args.expression, out)
        if args.command == "check":
            return cmd_check(rule, settings, out)
        return cmd_basis(rule, settings, out)
    except ParseError as exc:
        err.write(f"hopf-forge: parse error at {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        err.write(f"hopf-forge: {exc}\n")
        return EXIT_FAIL
    except (UsageError, HopfForgeError, ValueError) as exc:
        err.write(f"hopf-forge: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
