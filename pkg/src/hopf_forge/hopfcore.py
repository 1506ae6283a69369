"""Product, coproduct, counit, antipode and grading built from a rule.

Every map here is the bilinear/linear extension of the rule's composition
and decomposition on basis objects.  Preconditions are the conditions the
rule declares; they are not re-verified here.
"""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction
from itertools import product as _cartesian

from . import ruledef
from .errors import BudgetExceeded, NonTermination, RecursionBudgetExceeded
from .freevec import Accumulator, Element, TensorElement
from .multiset import Multiset
from .ruledef import Rule

DEFAULT_BUDGET = 10**6


def unit(rule: Rule) -> Element:
    return Element.basis(rule.neutral)


def basis(rule: Rule, g) -> Element:
    rule.validate(g)
    return Element.basis(g)


def mul(rule: Rule, x: Element, y: Element) -> Element:
    """Bilinear product.  On tensors the product acts factor by factor."""
    rule.require("C1")
    if isinstance(x, TensorElement) or isinstance(y, TensorElement):
        return _mul_tensor(rule, x, y)
    acc = Accumulator()
    right = y.items()
    for g2, c2 in x.items():
        for g1, c1 in right:
            acc.add_multiset(ruledef.compose(rule, g2, g1), c2 * c1)
    return acc.result()


def _mul_tensor(rule: Rule, x: TensorElement, y: TensorElement) -> TensorElement:
    if not (isinstance(x, TensorElement) and isinstance(y, TensorElement)):
        raise TypeError("cannot multiply a tensor with a non-tensor")
    if x and y and x.arity != y.arity:
        raise TypeError(f"arity mismatch: {x.arity} vs {y.arity}")
    acc = Accumulator(TensorElement)
    right = y.items()
    for kx, cx in x.items():
        for ky, cy in right:
            factors = [ruledef.compose(rule, a, b).items() for a, b in zip(kx, ky)]
            coeff = cx * cy
            for combo in _cartesian(*factors):
                mult = 1
                for _, m in combo:
                    mult *= m
                acc.add(tuple(g for g, _ in combo), coeff * mult)
    return acc.result()


def mul_many(rule: Rule, objs) -> Element:
    """``objs[0] * objs[1] * ...`` on basis objects; empty gives the unit."""
    return Element({g: m for g, m in ruledef.compose_sequence(rule, list(objs))})


def coproduct(rule: Rule, x: Element) -> TensorElement:
    """Sum of all splittings ``left ⊗ right`` with section coefficients."""
    rule.require("D1")
    acc = Accumulator(TensorElement)
    for g, c in x.items():
        acc.add_multiset(ruledef.decompose(rule, g), c)
    return acc.result()


def counit(rule: Rule, x: Element) -> Fraction:
    """Coefficient of the void object."""
    if "C3" not in rule.declared and "D3" not in rule.declared:
        rule.require("D3")
    return x.coefficient(rule.neutral)


def void_projection(rule: Rule, x: Element) -> Element:
    """``ε(x)·Ø``."""
    return Element({rule.neutral: counit(rule, x)})


def apply_at(t: TensorElement, i: int, fn: Callable[[Element], Element]) -> TensorElement:
    """Apply a linear map to tensor factor ``i``; ``fn`` may return a tensor,
    whose factors are spliced in place."""
    acc = Accumulator(TensorElement)
    for key, c in t.items():
        image = fn(Element.basis(key[i]))
        pieces = image.items()
        for k, ci in pieces:
            k = k if isinstance(image, TensorElement) else (k,)
            acc.add(key[:i] + k + key[i + 1:], c * ci)
    return acc.result()


def counit_at(rule: Rule, t: TensorElement, i: int):
    """Contract factor ``i`` with the counit.  Arity 2 gives an Element."""
    acc = Accumulator(TensorElement)
    for key, c in t.items():
        e = counit(rule, Element.basis(key[i]))
        if e:
            acc.add(key[:i] + key[i + 1:], c * e)
    out = acc.result()
    if t.arity in (2, None):
        return Element({k[0]: c for k, c in out.items()})
    return out


def multiply_factors(rule: Rule, t: TensorElement) -> Element:
    """``μ``: multiply the factors of each tensor term left to right."""
    acc = Accumulator()
    for key, c in t.items():
        acc.add_multiset(ruledef.compose_sequence(rule, list(key)), c)
    return acc.result()


def _check_antipode_conditions(rule: Rule) -> None:
    rule.require("C1", "D2", "D5", "CD1")


def antipode_sum(
    rule: Rule, g, budget: int = DEFAULT_BUDGET, strategy: str = "left"
) -> Element:
    """Alternating sum over void-free multiple decompositions:
    ``S(g) = Σ_n (-1)^n Σ g_n * ... * g_1``.

    Raises :class:`~hopf_forge.errors.NonTermination` when more than
    ``budget`` distinct decomposition tuples appear, which means the rule's
    D5 claim is doubtful for ``g``.
    """
    _check_antipode_conditions(rule)
    rule.validate(g)
    if rule.is_neutral(g):
        return unit(rule)
    acc = Accumulator()
    try:
        for n, level in ruledef.nontrivial_levels(rule, g, budget, strategy):
            sign = -1 if n % 2 else 1
            for tup, mult in level:
                acc.add_multiset(ruledef.compose_sequence(rule, list(tup)), sign * mult)
    except NonTermination:
        raise
    except BudgetExceeded as exc:
        raise NonTermination(str(exc), exc.obj) from None
    return acc.result()


def antipode_rec(
    rule: Rule, g, budget: int = DEFAULT_BUDGET, memo: bool = True
) -> Element:
    """``S(g) = -Σ_{(l, r) in <g>, r != Ø} S(l) * r`` with ``S(Ø) = Ø``.

    Results are memoized per rule.  A splitting whose left part leads back
    to an object still being expanded, or more than ``budget`` expansions,
    raises :class:`~hopf_forge.errors.RecursionBudgetExceeded`.
    """
    _check_antipode_conditions(rule)
    rule.validate(g)
    cache = rule.cache.setdefault("antipode_rec", {}) if memo else {}
    state = {"calls": 0}
    active: set = set()

    def rec(obj) -> Element:
        hit = cache.get(obj)
        if hit is not None:
            return hit
        if rule.is_neutral(obj):
            return unit(rule)
        if obj in active:
            raise RecursionBudgetExceeded(
                f"antipode recursion of {rule.format(obj)} loops back on itself", obj
            )
        state["calls"] += 1
        if state["calls"] > budget:
            raise RecursionBudgetExceeded(f"antipode recursion exceeded {budget} steps", obj)
        active.add(obj)
        acc = Accumulator()
        for (left, right), mult in ruledef.decompose(rule, obj):
            if rule.is_neutral(right):
                continue
            s_left = rec(left)
            for h, c in s_left.items():
                acc.add_multiset(ruledef.compose(rule, h, right), -c * mult)
        active.discard(obj)
        out = acc.result()
        cache[obj] = out
        return out

    try:
        return rec(g)
    except RecursionError:
        raise RecursionBudgetExceeded("antipode recursion too deep", g) from None


def antipode(rule: Rule, x: Element, method: str = "rec", budget: int = DEFAULT_BUDGET) -> Element:
    """Linear extension of either antipode algorithm."""
    one = {"rec": antipode_rec, "sum": antipode_sum}[method]
    acc = Accumulator()
    for g, c in x.items():
        for h, ch in one(rule, g, budget).items():
            acc.add(h, c * ch)
    return acc.result()


def project_grade(rule: Rule, x: Element, n: int) -> Element:
    """Terms of ``x`` whose object has size exactly ``n``."""
    rule.require("CD2")
    return x.restrict(lambda g: ruledef.size(rule, g) == n)


def grades(rule: Rule, x: Element) -> dict[int, Element]:
    rule.require("CD2")
    out: dict[int, dict] = {}
    for g, c in x.items():
        out.setdefault(ruledef.size(rule, g), {})[g] = c
    return {n: Element(t) for n, t in sorted(out.items())}


def as_multiset(x: Element) -> Multiset:
    """Inverse of ``from_multiset`` for vectors with natural coefficients."""
    counts = {}
    for k, c in x.items():
        if c.denominator != 1 or c < 0:
            raise ValueError("coefficients are not natural numbers")
        counts[k] = int(c)
    return Multiset(counts)
