"""Bounded exhaustive checks of the composition/decomposition conditions
and of the Hopf-algebra laws built from them.

Objects are visited in increasing size (pairs and triples by total size),
and each check stops at its first failure, so a reported counterexample is
a smallest one in that order.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import product
from typing import Any

from . import hopfcore, ruledef
from .errors import BudgetExceeded, ConditionNotDeclared
from .freevec import Element, format_element, format_rational
from .instances import enumerate_basis
from .multiset import Multiset, union_all
from .ruledef import CONDITIONS, Rule

HOLDS = "holds"
FAILS = "fails"
BUDGET = "budget-exceeded"


@dataclass(frozen=True)
class Domain:
    rule: Rule
    bound: int
    objects: tuple

    @classmethod
    def build(cls, rule: Rule, bound: int) -> Domain:
        return cls(rule, bound, tuple(enumerate_basis(rule, bound)))

    @classmethod
    def of(cls, rule: Rule, objects: Iterable) -> Domain:
        objs = tuple(objects)
        bound = max((rule.size_fn(g) for g in objs), default=0)
        return cls(rule, bound, objs)

    def tuples(self, k: int) -> list[tuple]:
        """All ``k``-tuples of domain objects, by total size (stable)."""
        size = self.rule.size_fn
        sized = [(size(g), g) for g in self.objects]
        combos = product(sized, repeat=k)
        ordered = sorted(combos, key=lambda c: sum(s for s, _ in c))
        return [tuple(g for _, g in c) for c in ordered]


@dataclass
class Report:
    rule: str
    condition: str
    verdict: str
    cases: int
    counterexample: dict | None = None
    seconds: float = 0.0
    subreports: list[Report] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "rule": self.rule,
            "condition": self.condition,
            "verdict": self.verdict,
            "cases": self.cases,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["seconds"] = round(self.seconds, 6)
        if self.subreports:
            out["subreports"] = [r.to_json() for r in self.subreports]
        return out


class _Failure(Exception):
    """``arity`` tells how to print multiset elements: 0 for objects,
    otherwise tuples of objects."""

    def __init__(self, objects, lhs, rhs, note="", arity=0):
        self.objects, self.lhs, self.rhs = objects, lhs, rhs
        self.note, self.arity = note, arity


# -- rendering of values inside counterexamples -----------------------------

def _render(rule: Rule, value, arity: int) -> Any:
    if isinstance(value, Multiset):
        if arity:
            return [[[rule.format(g) for g in e], m] for e, m in value]
        return [[rule.format(e), m] for e, m in value]
    if isinstance(value, Element):
        return format_element(value, rule.format)
    if isinstance(value, list):
        return [rule.format(g) for g in value]
    return format_rational(value)


def _run(rule: Rule, name: str, cases: Iterable, check: Callable[[Any], None],
         tupled: bool = False) -> Report:
    """Run ``check`` on every case.  With ``tupled`` each case is a tuple of
    objects, otherwise a single object."""
    start = time.perf_counter()
    count = 0
    for case in cases:
        count += 1
        objs = case if tupled else (case,)
        try:
            check(case)
        except _Failure as f:
            cx = {
                "objects": [rule.format(g) for g in objs],
                "lhs": _render(rule, f.lhs, f.arity),
                "rhs": _render(rule, f.rhs, f.arity),
            }
            if f.note:
                cx["note"] = f.note
            return Report(rule.name, name, FAILS, count, cx, time.perf_counter() - start)
        except BudgetExceeded as exc:
            cx = {"objects": [rule.format(g) for g in objs], "note": str(exc)}
            return Report(rule.name, name, BUDGET, count, cx, time.perf_counter() - start)
    return Report(rule.name, name, HOLDS, count, None, time.perf_counter() - start)


def _same(lhs, rhs, note="", arity=0):
    if lhs != rhs:
        raise _Failure(None, lhs, rhs, note, arity)


# -- the individual conditions ------------------------------------------------
# each builder returns (cases, check, tupled)

def _compose(rule, a, b):
    return ruledef.compose(rule, a, b)


def _decompose(rule, g):
    return ruledef.decompose(rule, g)


def _check_c1(rule, dom, budget):
    def check(pair):
        n = len(_compose(rule, *pair))
        if n > budget:
            raise BudgetExceeded(f"{n} compositions exceed budget {budget}")
    return dom.tuples(2), check, True


def _check_c2(rule, dom, budget):
    def check(triple):
        g3, g2, g1 = triple
        lhs = ruledef.compose_msets(rule, Multiset.singleton(g3), _compose(rule, g2, g1))
        rhs = ruledef.compose_msets(rule, _compose(rule, g3, g2), Multiset.singleton(g1))
        _same(lhs, rhs, "g3 ◁ (g2 ◁ g1) vs (g3 ◁ g2) ◁ g1")
    return dom.tuples(3), check, True


def _check_c3(rule, dom, budget):
    e = rule.neutral

    def check(g):
        want = Multiset.singleton(g)
        _same(_compose(rule, e, g), want, "void on the left")
        _same(_compose(rule, g, e), want, "void on the right")
    return dom.objects, check, False


def _check_c4(rule, dom, budget):
    def check(pair):
        g2, g1 = pair
        _same(_compose(rule, g2, g1), _compose(rule, g1, g2), "g2 ◁ g1 vs g1 ◁ g2")
    return dom.tuples(2), check, True


def _check_d1(rule, dom, budget):
    def check(g):
        n = len(_decompose(rule, g))
        if n > budget:
            raise BudgetExceeded(f"{n} decompositions exceed budget {budget}")
    return dom.objects, check, False


def _triples(rule, g, strategy):
    counts: dict = {}
    for (left, right), m in _decompose(rule, g):
        inner = _decompose(rule, right if strategy == "right" else left)
        for (a, b), mi in inner:
            key = (left, a, b) if strategy == "right" else (a, b, right)
            counts[key] = counts.get(key, 0) + m * mi
    return Multiset(counts)


def _check_d2(rule, dom, budget):
    def check(g):
        _same(_triples(rule, g, "left"), _triples(rule, g, "right"),
              "split left component vs split right component", arity=3)
    return dom.objects, check, False


def _check_d3(rule, dom, budget):
    e = rule.neutral

    def check(g):
        dec = _decompose(rule, g)
        if rule.is_neutral(g):
            _same(dec, Multiset.singleton((e, e)), "splittings of the void", arity=2)
            return
        trivial = dec.filter(lambda p: e in p or g in p)
        _same(trivial, Multiset({(e, g): 1, (g, e): 1}),
              "splittings involving the void or the object itself", arity=2)
    return dom.objects, check, False


def _check_d4(rule, dom, budget):
    def check(g):
        dec = _decompose(rule, g)
        _same(dec, dec.map(lambda p: (p[1], p[0])), "splittings vs swapped splittings", arity=2)
    return dom.objects, check, False


def _check_d5(rule, dom, budget):
    cd2 = rule.declares("CD2")
    size = rule.size_fn

    def check(g):
        n, level = 0, Multiset()
        for n, level in ruledef.nontrivial_levels(rule, g, budget):
            if cd2 and n == size(g) + 1:
                break
        if level:
            _same(level, Multiset(), f"void-free decompositions with {n} components", arity=n)
    return dom.objects, check, False


def _check_cd1(rule, dom, budget):
    def check(pair):
        g2, g1 = pair
        lhs = ruledef.decompose_mset(rule, _compose(rule, g2, g1))
        parts = []
        for ((l2, r2), m2), ((l1, r1), m1) in product(_decompose(rule, g2), _decompose(rule, g1)):
            parts.append((_compose(rule, l2, l1) * _compose(rule, r2, r1)).scaled(m2 * m1))
        _same(lhs, union_all(parts), "<g2 ◁ g1> vs componentwise composition of splittings",
              arity=2)
    return dom.tuples(2), check, True


def _check_cd2(rule, dom, budget):
    size = rule.size_fn

    def check(objs):
        if not objs:
            zero = [g for g in dom.objects if size(g) == 0]
            _same(zero, [rule.neutral], "objects of size zero")
        elif len(objs) == 2:
            g2, g1 = objs
            want = size(g2) + size(g1)
            bad = _compose(rule, g2, g1).filter(lambda g: size(g) != want)
            _same(bad, Multiset(), f"outcomes whose size is not {want}")
        else:
            (g,) = objs
            bad = _decompose(rule, g).filter(lambda p: size(p[0]) + size(p[1]) != size(g))
            _same(bad, Multiset(), f"splittings whose sizes do not add to {size(g)}", arity=2)

    cases = [()] + [(g,) for g in dom.objects] + dom.tuples(2)
    return cases, check, True


_CHECKS = {
    "C1": _check_c1, "C2": _check_c2, "C3": _check_c3, "C4": _check_c4,
    "D1": _check_d1, "D2": _check_d2, "D3": _check_d3, "D4": _check_d4,
    "D5": _check_d5, "CD1": _check_cd1, "CD2": _check_cd2,
}


def check_condition(rule: Rule, cond: str, dom: Domain, budget: int = 10**6) -> Report:
    """Verify one condition on every object, pair or triple of the domain."""
    if cond not in _CHECKS:
        raise ValueError(f"unknown condition {cond!r}; expected one of {', '.join(CONDITIONS)}")
    cases, check, tupled = _CHECKS[cond](rule, dom, budget)
    return _run(rule, cond, cases, check, tupled)


def check_all(rule: Rule, dom: Domain, conditions: Iterable[str] = CONDITIONS,
              budget: int = 10**6) -> list[Report]:
    return [check_condition(rule, c, dom, budget) for c in conditions]


def matches_declaration(rule: Rule, report: Report) -> bool:
    """A declared condition must hold; an undeclared one must not."""
    return report.holds == (report.condition in rule.declared)


# -- Hopf laws ------------------------------------------------------------------

HOPF_PREREQUISITES = ("C1", "C2", "C3", "D1", "D2", "D3", "CD1", "D5")


def check_hopf(rule: Rule, dom: Domain, budget: int = 10**6, strategy: str = "left") -> Report:
    """Bialgebra morphism laws, both antipode identities, agreement of the
    two antipode algorithms, and the involution law for commutative or
    cocommutative rules.

    ``strategy`` selects which component the alternating-sum antipode
    splits first; verdicts must not depend on it.
    """
    missing = [c for c in HOPF_PREREQUISITES if c not in rule.declared]
    if missing:
        raise ConditionNotDeclared(rule.name, *missing)
    start = time.perf_counter()
    basis = Element.basis

    def S(x):
        return hopfcore.antipode(rule, x, "rec", budget)

    def delta_morph(pair):
        g2, g1 = pair
        lhs = hopfcore.coproduct(rule, hopfcore.mul(rule, basis(g2), basis(g1)))
        rhs = hopfcore.mul(rule, hopfcore.coproduct(rule, basis(g2)),
                           hopfcore.coproduct(rule, basis(g1)))
        _same(lhs, rhs, "Δ(g2*g1) vs Δ(g2)*Δ(g1)")

    def eps_morph(pair):
        g2, g1 = pair
        lhs = hopfcore.counit(rule, hopfcore.mul(rule, basis(g2), basis(g1)))
        rhs = hopfcore.counit(rule, basis(g2)) * hopfcore.counit(rule, basis(g1))
        _same(lhs, rhs, "ε(g2*g1) vs ε(g2)ε(g1)")

    def antipode_side(position):
        def check(g):
            delta = hopfcore.coproduct(rule, basis(g))
            lhs = hopfcore.multiply_factors(rule, hopfcore.apply_at(delta, position, S))
            _same(lhs, hopfcore.void_projection(rule, basis(g)), "μ∘(S applied)∘Δ vs ε·Ø")
        return check

    def agree(g):
        _same(hopfcore.antipode_sum(rule, g, budget, strategy),
              hopfcore.antipode_rec(rule, g, budget), "alternating sum vs recursion")

    def involution(g):
        _same(S(S(basis(g))), basis(g), "S(S(g)) vs g")

    subs = [
        _run(rule, "delta-morphism", dom.tuples(2), delta_morph, True),
        _run(rule, "epsilon-morphism", dom.tuples(2), eps_morph, True),
        _run(rule, "antipode-left", dom.objects, antipode_side(1)),
        _run(rule, "antipode-right", dom.objects, antipode_side(0)),
        _run(rule, "antipode-agreement", dom.objects, agree),
    ]
    if rule.declares("C4") or rule.declares("D4"):
        subs.append(_run(rule, "involution", dom.objects, involution))
    verdicts = {r.verdict for r in subs}
    verdict = FAILS if FAILS in verdicts else BUDGET if BUDGET in verdicts else HOLDS
    return Report(rule.name, "hopf", verdict, sum(r.cases for r in subs), None,
                  time.perf_counter() - start, subs)
