"""Evaluator for parsed statements.

Values are UpSets, enumerating maps, ideals, filters, bornologies, booleans,
class names and suite reports.  Every result records which operation
produced it and, for yes/no questions, the witness that backs the answer.
Evaluation is a pure function of the statement, the ``let`` bindings and
the session seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from cofin import filt, omega, suites
from cofin.emonoid import EMap, IDENTITY, compose, leq, sigma
from cofin.filt import BornRep, FilterRep
from cofin.omega import Ideal
from cofin.syntax import (
    Apply, Assert, Binary, Call, Check, Const, Let, Node, Query, Seed, SetLit,
    Var, parse, show,
)
from cofin.upset import NATURALS, UpSet, classify, complement, select


class EvalError(Exception):
    """A well-formed statement that cannot be evaluated (type or domain error)."""


@dataclass
class EvalResult:
    value: Any
    provenance: str
    witness: Any = None
    evidence: str | None = None
    report: list | None = None
    failed: bool = False


CONSTANTS = {
    "L": omega.L_IDEAL,
    "E": omega.WHOLE,
    "0": omega.EMPTY_IDEAL,
    "N": NATURALS,
    "frechet": filt.FRECHET,
    "discrete": filt.DISCRETE,
    "indiscrete": filt.INDISCRETE,
    "sigma": sigma(),
}

TYPE_NAMES = {UpSet: "set", EMap: "map", Ideal: "ideal", FilterRep: "filter",
              BornRep: "bornology", bool: "boolean", str: "class name"}


def type_name(x: Any) -> str:
    return TYPE_NAMES.get(type(x), type(x).__name__)


def _a(noun: str) -> str:
    return ("an " if noun[0] in "aeiou" else "a ") + noun


def literal(x: Any) -> Any:
    """JSON-ready rendering of a value."""
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if hasattr(x, "to_literal"):
        return x.to_literal()
    return str(x)


def _point(x: int) -> UpSet:
    return UpSet.finite([x])


@dataclass
class Session:
    seed: int = suites.DEFAULT_SEED
    env: dict = field(default_factory=dict)

    # statements

    def execute(self, stmt: Node) -> EvalResult:
        if isinstance(stmt, Let):
            r = self.eval(stmt.expr)
            self.env[stmt.name] = r.value
            return r
        if isinstance(stmt, Seed):
            self.seed = stmt.value
            return EvalResult(stmt.value, "session.seed")
        if isinstance(stmt, Check):
            try:
                reports = suites.run(stmt.suite, stmt.arg, seed=self.seed)
            except (KeyError, ValueError) as exc:
                raise EvalError(str(exc).strip("'\"")) from None
            ok = all(r["status"] == "pass" for r in reports)
            return EvalResult("pass" if ok else "fail", f"suites.{stmt.suite}",
                              report=reports, failed=not ok)
        if isinstance(stmt, Assert):
            r = self.eval(stmt.expr)
            if not isinstance(r.value, bool):
                raise EvalError(f"assert needs a yes/no query, got {_a(type_name(r.value))}")
            r.failed = not r.value
            return r
        return self.eval(stmt)

    # expressions

    def value(self, node: Node, *types: type) -> Any:
        v = self.eval(node).value
        if types and not isinstance(v, types):
            want = " or ".join(TYPE_NAMES[t] for t in types)
            raise EvalError(f"{show(node)} is {_a(type_name(v))}; expected {_a(want)}")
        return v

    def eval(self, node: Node) -> EvalResult:
        try:
            return self._eval(node)
        except (ValueError, ArithmeticError) as exc:
            raise EvalError(f"{show(node)}: {exc}") from None

    def _eval(self, node: Node) -> EvalResult:
        if isinstance(node, SetLit):
            return EvalResult(node.value, "upset.literal")
        if isinstance(node, Var):
            if node.name not in self.env:
                raise EvalError(f"unbound name {node.name!r}")
            return EvalResult(self.env[node.name], "let")
        if isinstance(node, Const):
            return EvalResult(CONSTANTS[node.name], "constant")
        if isinstance(node, Call):
            return self._call(node)
        if isinstance(node, Apply):
            return self._apply(node)
        if isinstance(node, Binary):
            return self._binary(node)
        if isinstance(node, Query):
            return self._query(node)
        raise EvalError(f"{show(node)} is a statement, not an expression")

    def _call(self, node: Call) -> EvalResult:
        fn, args = node.fn, node.args
        if fn == "u":
            return EvalResult(EMap(self.value(args[0], UpSet)), "emonoid.EMap")
        if fn == "sigma":
            return EvalResult(sigma(self.value(args[0], UpSet)), "emonoid.sigma")
        if fn == "P":
            x = self.value(args[0], UpSet, EMap)
            ideal = omega.principal_of(x) if isinstance(x, EMap) else omega.principal(x)
            return EvalResult(ideal, "omega.principal")
        if fn == "Alm":
            return EvalResult(omega.almost(self.value(args[0], UpSet)), "omega.almost")
        if fn == "Cont":
            return EvalResult(omega.content(self.value(args[0], UpSet)), "omega.content")
        if fn == "U":
            return EvalResult(filt.u_filter(self.value(args[0], UpSet)), "filt.u_filter")
        if fn == "C":
            return EvalResult(filt.c_filter(self.value(args[0], UpSet)), "filt.c_filter")
        if fn == "phi":
            p, q = (self.value(a, UpSet) for a in args)
            return EvalResult(FilterRep.phi(p, q), "filt.phi")
        if fn == "act":
            u, ideal = self.value(args[0], EMap), self.value(args[1], Ideal)
            return EvalResult(omega.action(u, ideal), "omega.action")
        if fn == "compose":
            u, v = (self.value(a, EMap) for a in args)
            return EvalResult(compose(u, v), "emonoid.compose")
        raise EvalError(f"unknown constructor {fn}")

    def _apply(self, node: Apply) -> EvalResult:
        op = node.op
        if op == "!":
            return EvalResult(complement(self.value(node.arg, UpSet)), "upset.complement")
        if op == "class":
            return EvalResult(classify(self.value(node.arg, UpSet)).kind, "upset.classify")
        if op == "not":
            inner = self.eval(node.arg)
            if isinstance(inner.value, bool):
                return EvalResult(not inner.value, inner.provenance, inner.witness, inner.evidence)
        if op in ("not", "neg"):
            x = self.value(node.arg, Ideal, FilterRep)
            if isinstance(x, Ideal):
                return EvalResult(omega.negate(x), "omega.negate")
            return EvalResult(filt.neg(x), "filt.neg")
        if op == "notnot":
            x = self.value(node.arg, Ideal, FilterRep)
            if isinstance(x, Ideal):
                return EvalResult(omega.double_negate(x), "omega.double_negate")
            return EvalResult(filt.double_neg(x), "filt.double_neg")
        if op == "lim":
            return EvalResult(filt.limit(self.value(node.arg, FilterRep)), "filt.limit")
        if op == "born":
            return EvalResult(filt.dualize(self.value(node.arg, FilterRep)), "filt.dualize")
        if op == "extent":
            x = self.value(node.arg, Ideal, BornRep)
            if isinstance(x, BornRep):
                return EvalResult(filt.extent_born(x), "filt.extent_born")
            return EvalResult(omega.extent(x), "omega.extent")
        raise EvalError(f"unknown operator {op}")

    def _binary(self, node: Binary) -> EvalResult:
        if node.op == "->?":
            raise EvalError("an implication can only be queried for membership: X in? F ->? G")
        left = self.value(node.left, UpSet, Ideal, FilterRep)
        right = self.value(node.right, type(left))
        if node.op == "-":
            if not isinstance(left, UpSet):
                raise EvalError(f"difference needs sets, got {_a(type_name(left))}")
            return EvalResult(left - right, "upset.difference")
        if isinstance(left, UpSet):
            return EvalResult(left | right if node.op == "|" else left & right,
                              f"upset.{'union' if node.op == '|' else 'intersect'}")
        if isinstance(left, FilterRep):
            if node.op == "|":
                return EvalResult(filt.join(left, right), "filt.join")
            return EvalResult(filt.meet(left, right), "filt.meet")
        if node.op == "|":
            return EvalResult(omega.union(left, right), "omega.union")
        raise EvalError("ideal intersection leaves the decidable class; ask meets? instead")

    def _query(self, node: Query) -> EvalResult:
        op = node.op
        if op == "dense?":
            x = self.value(node.args[0], Ideal, FilterRep)
            if isinstance(x, FilterRep):
                if filt.is_dense(x):
                    return EvalResult(True, "filt.is_dense", evidence="limit is empty")
                return EvalResult(False, "filt.is_dense", witness=_point(select(x.P, 0)),
                                  evidence=f"limit {x.P.to_literal()} is nonempty")
            d = omega.is_dense(x)
            if d.dense:
                return EvalResult(True, "omega.is_dense",
                                  evidence=f"response to u(k..) is {d.response(IDENTITY)}")
            return EvalResult(False, "omega.is_dense", witness=d.witness,
                              evidence="the witness acts on the ideal as 0")
        if op == "ext?":
            x = self.value(node.args[0], Ideal)
            if x.is_empty:
                return EvalResult(False, "omega.is_extended", evidence="the ideal is 0")
            return EvalResult(omega.is_extended(x), "omega.is_extended",
                              evidence=f"extent {omega.extent(x).to_literal()}")
        if op == "cofinite?":
            a = self.value(node.args[0], UpSet)
            d = omega.is_dense(omega.content(a))
            return EvalResult(d.dense, "omega.cofinite_via_density", witness=d.witness,
                              evidence=f"Cont({a.to_literal()}) is {d.tag}")
        if op in ("finite?", "infinite?"):
            a = self.value(node.args[0], UpSet)
            return EvalResult(a.is_finite == (op == "finite?"), "upset.classify",
                              evidence=classify(a).kind)
        left, right = node.args
        if op == "in?":
            return self._member(left, right)
        if op == "<=?":
            return self._subset(left, right)
        if op == "meets?":
            i, j = self.value(left, Ideal), self.value(right, Ideal)
            w = omega.meet_witness(i, j)
            return EvalResult(w is not None, "omega.int_meets", witness=w)
        raise EvalError(f"unknown query {op}")

    def _member(self, left: Node, right: Node) -> EvalResult:
        if isinstance(right, Binary) and right.op == "->?":
            f = self.value(right.left, Ideal, FilterRep)
            g = self.value(right.right, type(f))
            if isinstance(f, FilterRep):
                b = self.value(left, UpSet)
                w = filt.implication_counterexample(b, f, g)
                return EvalResult(w is None, "filt.implication_member", witness=w)
            u = self.value(left, EMap)
            w = omega.separating_witness(omega.action(u, f), omega.action(u, g))
            return EvalResult(w is None, "omega.implication_member", witness=w)
        x = self.value(left, UpSet, EMap)
        if isinstance(x, EMap):
            return EvalResult(omega.member(x, self.value(right, Ideal)), "omega.member")
        c = self.value(right, FilterRep, BornRep)
        if isinstance(c, BornRep):
            return EvalResult(x in c, "filt.born_member")
        return EvalResult(filt.member(x, c), "filt.member")

    def _subset(self, left: Node, right: Node) -> EvalResult:
        x = self.value(left, UpSet, EMap, Ideal, FilterRep)
        y = self.value(right, type(x))
        if isinstance(x, UpSet):
            extra = x - y
            w = None if extra.is_empty else _point(select(extra, 0))
            return EvalResult(w is None, "upset.subset", witness=w)
        if isinstance(x, EMap):
            return EvalResult(leq(x, y), "emonoid.leq")
        if isinstance(x, Ideal):
            w = omega.separating_witness(x, y)
            return EvalResult(w is None, "omega.subideal", witness=w)
        w = filt.subfilter_witness(x, y)
        return EvalResult(w is None, "filt.subfilter", witness=w)


def evaluate(text: str, seed: int = suites.DEFAULT_SEED) -> EvalResult:
    """Parse and run one statement in a fresh session."""
    return Session(seed).execute(parse(text))

