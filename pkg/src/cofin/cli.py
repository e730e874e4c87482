"""Command line front end: ``cofin repl | run FILE | eval EXPR | check SUITE [ARG]``.

Exit codes: 0 when every assertion and check passed, 1 when one failed,
2 on a parse, usage, evaluation or I/O error.  With ``--json`` each
statement prints one JSON object per line (see ``OUTPUT_SCHEMA``); timings
are left out of JSON so the same input and seed give byte-identical output.
"""

from __future__ import annotations

import argparse
import importlib
import json
import sys
from typing import TextIO

from cofin import suites
from cofin.interp import EvalError, EvalResult, Session, literal
from cofin.syntax import Node, ParseError, parse, parse_program, show

OK, FAILED, ERROR = 0, 1, 2

_CHECK = {
    "type": "object",
    "required": ["name", "status"],
    "properties": {
        "name": {"type": "string"},
        "status": {"enum": ["pass", "fail"]},
        "count": {"type": "integer"},
        "detail": {"type": "string"},
    },
    "additionalProperties": False,
}

OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["query"],
    "properties": {
        "query": {"type": "string"},
        "answer": {"type": ["boolean", "string", "integer"]},
        "witness": {"type": "string"},
        "evidence": {"type": "string"},
        "report": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "status", "checks"],
                "properties": {
                    "suite": {"type": "string"},
                    "status": {"enum": ["pass", "fail"]},
                    "checks": {"type": "array", "items": _CHECK},
                },
                "additionalProperties": False,
            },
        },
        "error": {"type": "string"},
    },
    "oneOf": [{"required": ["answer"]}, {"required": ["error"]}],
    "additionalProperties": False,
}


def to_record(query: str, r: EvalResult) -> dict:
    """The JSON object printed for one statement."""
    rec = {"query": query, "answer": literal(r.value)}
    if r.witness is not None:
        rec["witness"] = literal(r.witness)
    if r.evidence is not None:
        rec["evidence"] = r.evidence
    if r.report is not None:
        rec["report"] = [{k: v for k, v in rep.items() if k != "seconds"} for rep in r.report]
    return rec


def format_human(query: str, r: EvalResult) -> str:
    if r.report is not None:
        lines = []
        for rep in r.report:
            lines.append(f"{rep['status']}  {rep['suite']}  ({rep['seconds']:.2f} s)")
            for c in rep["checks"]:
                n = f" [{c['count']}]" if "count" in c else ""
                detail = f": {c['detail']}" if c["status"] == "fail" and "detail" in c else ""
                lines.append(f"  {c['status']}  {c['name']}{n}{detail}")
        return "\n".join(lines)
    answer = literal(r.value)
    if isinstance(answer, bool):
        answer = "true" if answer else "false"
    lines = [f"assertion failed: {query}" if r.failed else str(answer)]
    if r.witness is not None:
        lines.append(f"  witness: {literal(r.witness)}")
    if r.evidence is not None:
        lines.append(f"  evidence: {r.evidence}")
    return "\n".join(lines)


class Runner:
    """Executes statements against one session and tracks the exit status."""

    def __init__(self, seed: int, as_json: bool, out: TextIO, echo: bool = False):
        self.session = Session(seed)
        self.as_json = as_json
        self.out = out
        self.echo = echo
        self.status = OK

    def emit_error(self, query: str, msg: str) -> None:
        if self.as_json:
            print(json.dumps({"query": query, "error": msg}, ensure_ascii=False), file=self.out)
        else:
            print(f"error: {msg}", file=sys.stderr)

    def run(self, stmt: Node) -> bool:
        """Run one statement; return False on an evaluation error."""
        query = show(stmt)
        try:
            r = self.session.execute(stmt)
        except EvalError as exc:
            self.emit_error(query, str(exc))
            return False
        if r.failed:
            self.status = max(self.status, FAILED)
        if self.as_json:
            print(json.dumps(to_record(query, r), ensure_ascii=False), file=self.out)
        else:
            if self.echo:
                print(f"> {query}", file=self.out)
            print(format_human(query, r), file=self.out)
        return True


def run_source(text: str, seed: int = suites.DEFAULT_SEED, as_json: bool = False,
               out: TextIO | None = None, echo: bool = False) -> int:
    """Parse a whole program first, then run it; stop at the first error."""
    out = out or sys.stdout
    runner = Runner(seed, as_json, out, echo)
    try:
        program = parse_program(text)
    except ParseError as exc:
        runner.emit_error("", str(exc))
        return ERROR
    for stmt in program:
        if not runner.run(stmt):
            return ERROR
    return runner.status


def run_file(path: str, seed: int = suites.DEFAULT_SEED, as_json: bool = False,
             out: TextIO | None = None) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    return run_source(text, seed, as_json, out, echo=True)


def repl(seed: int = suites.DEFAULT_SEED, as_json: bool = False,
         stdin: TextIO | None = None, out: TextIO | None = None) -> int:
    """Read statements line by line; errors are reported and the session goes on."""
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    interactive = stdin.isatty()
    if interactive:
        try:
            importlib.import_module("readline")  # line editing for input()
        except ImportError:
            pass
    runner = Runner(seed, as_json, out)
    while True:
        if interactive:
            try:
                line = input("cofin> ")
            except EOFError:
                print(file=out)
                break
        else:
            line = stdin.readline()
            if not line:
                break
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            stmt = parse(line)
        except ParseError as exc:
            runner.emit_error(line.strip(), str(exc))
            continue
        runner.run(stmt)
    return runner.status


def check(suite: str, arg: int | None = None, seed: int = suites.DEFAULT_SEED,
          as_json: bool = False, out: TextIO | None = None) -> int:
    text = f"check {suite}" + ("" if arg is None else f" {arg}")
    return run_source(text, seed, as_json, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per statement")
    common.add_argument("--seed", type=int, default=suites.DEFAULT_SEED,
                        help="seed for sampled checks")
    ap = argparse.ArgumentParser(prog="cofin",
                                 description="Decide questions about cofinite subsets, "
                                             "filters on N and ideals of enumerating maps.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("repl", parents=[common], help="interactive session")
    p = sub.add_parser("run", parents=[common], help="run a file of statements")
    p.add_argument("file")
    p = sub.add_parser("eval", parents=[common], help="evaluate one statement")
    p.add_argument("expr")
    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument("suite", help="all, clu1, " + ", ".join(suites.SUITES))
    p.add_argument("arg", nargs="?", type=int)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else ERROR
    if args.command == "repl":
        return repl(args.seed, args.json)
    if args.command == "run":
        return run_file(args.file, args.seed, args.json)
    if args.command == "eval":
        return run_source(args.expr, args.seed, args.json)
    return check(args.suite, args.arg, args.seed, args.json)


if __name__ == "__main__":
    sys.exit(main())
