from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from hopf_forge import (
    ConditionNotDeclared,
    Element,
    Multiset,
    NonTermination,
    RecursionBudgetExceeded,
    Rule,
    antipode,
    antipode_rec,
    antipode_sum,
    coproduct,
    counit,
    enumerate_basis,
    make_rule,
    mul,
    parse_object,
    project_grade,
    tensor,
)
from hopf_forge.hopfcore import apply_at, counit_at, grades, multiply_factors, unit
from hopf_forge.ruledef import size

from .conftest import SMALL_BOUNDS

B = Element.basis


def basis_of(rule):
    return enumerate_basis(rule, SMALL_BOUNDS[rule.name])


def test_mul_examples():
    sh = make_rule("shuffle")
    assert mul(sh, B("a"), B("b")) == B("ab") + B("ba")
    poly = make_rule("polynomial")
    for i in range(4):
        for j in range(4):
            assert mul(poly, B("x" * i), B("x" * j)) == B("x" * (i + j))


def test_coproduct_examples():
    poly = make_rule("polynomial")
    assert coproduct(poly, B("xx")) == tensor(B(""), B("xx")) + 2 * tensor(B("x"), B("x")) + tensor(B("xx"), B(""))
    sh = make_rule("shuffle")
    assert coproduct(sh, B("ab")) == tensor(B("ab"), B("")) + tensor(B("b"), B("a")) + tensor(B(""), B("ab"))
    graph = make_rule("graph")
    p3, k2 = (parse_object(graph, s) for s in ("g{1-2,2-3}", "g{1-2}"))
    assert coproduct(graph, B(p3)) == tensor(B(()), B(p3)) + tensor(B(p3), B(())) + 2 * tensor(B(k2), B(k2))


def test_counit():
    free = make_rule("free")
    assert counit(free, B("")) == 1
    assert counit(free, B("ab")) == 0
    assert counit(free, 3 * B("") + 2 * B("a")) == 3


def test_antipode_examples():
    free = make_rule("free", "abc")
    assert antipode_sum(free, "abc") == -B("cba")
    poly = make_rule("polynomial")
    assert antipode_sum(poly, "xx") == B("xx")
    forest = make_rule("forest")
    t2, dot = parse_object(forest, "t(t())"), parse_object(forest, "t()")
    expected = -B(t2) + B(parse_object(forest, "f[t(),t()]"))
    assert antipode_sum(forest, t2) == expected == antipode_rec(forest, t2)
    assert mul(forest, B(dot), B(dot)) == B(parse_object(forest, "f[t(),t()]"))
    graph = make_rule("graph")
    ee = parse_object(graph, "g{1-2,3-4}")
    assert antipode_rec(graph, ee) == B(ee) == antipode_sum(graph, ee)


def test_antipode_of_void_and_primitives(any_rule):
    n = any_rule.neutral
    assert antipode_rec(any_rule, n) == B(n) == antipode_sum(any_rule, n)
    for g in basis_of(any_rule):
        if g != n and len(any_rule.decompose_fn(g)) == 2:
            assert antipode_rec(any_rule, g) == -B(g)


def test_associativity_and_unit(any_rule):
    objs = basis_of(any_rule)[:8]
    one = unit(any_rule)
    for a in objs:
        assert mul(any_rule, one, B(a)) == B(a) == mul(any_rule, B(a), one)
        for b in objs:
            for c in objs[:4]:
                left = mul(any_rule, mul(any_rule, B(a), B(b)), B(c))
                right = mul(any_rule, B(a), mul(any_rule, B(b), B(c)))
                assert left == right


def test_commutativity_matches_declaration(any_rule):
    objs = basis_of(any_rule)
    commutes = all(mul(any_rule, B(a), B(b)) == mul(any_rule, B(b), B(a)) for a in objs for b in objs)
    assert commutes == ("C4" in any_rule.declared)


def test_coassociativity_and_counit(any_rule):
    def delta(x):
        return coproduct(any_rule, x)

    for g in basis_of(any_rule):
        d = delta(B(g))
        assert apply_at(d, 0, delta) == apply_at(d, 1, delta)
        assert counit_at(any_rule, d, 0) == B(g) == counit_at(any_rule, d, 1)


def test_cocommutativity_matches_declaration(any_rule):
    symmetric = all(coproduct(any_rule, B(g)).swap() == coproduct(any_rule, B(g))
                    for g in basis_of(any_rule))
    assert symmetric == ("D4" in any_rule.declared)


def test_grading(any_rule):
    objs = basis_of(any_rule)
    for a in objs:
        for b in objs:
            for h in mul(any_rule, B(a), B(b)).keys():
                assert size(any_rule, h) == size(any_rule, a) + size(any_rule, b)
        for (l, r) in coproduct(any_rule, B(a)).keys():
            assert size(any_rule, l) + size(any_rule, r) == size(any_rule, a)


def test_project_grade():
    free = make_rule("free")
    x = B("a") + B("ab")
    assert project_grade(free, x, 2) == B("ab")
    assert project_grade(free, x, 5) == 0
    assert sum(grades(free, x).values(), Element()) == x


def test_antipode_law_and_involution(any_rule):
    for g in basis_of(any_rule):
        d = coproduct(any_rule, B(g))
        eps = counit(any_rule, B(g)) * unit(any_rule)
        for pos in (0, 1):
            s = apply_at(d, pos, lambda x: antipode(any_rule, x))
            assert multiply_factors(any_rule, s) == eps
        if any_rule.declared & {"C4", "D4"}:
            assert antipode(any_rule, antipode(any_rule, B(g))) == B(g)


def test_polynomial_closed_forms():
    poly = make_rule("polynomial")
    for n in range(11):
        d = coproduct(poly, B("x" * n))
        assert all(d[("x" * i, "x" * (n - i))] == comb(n, i) for i in range(n + 1))
        assert antipode(poly, B("x" * n), "sum") == (-1) ** n * B("x" * n)


def test_linearity():
    free = make_rule("free")
    x = Fraction(1, 2) * B("ab") - 3 * B("b")
    assert antipode(free, x) == Fraction(1, 2) * B("ba") + 3 * B("b")
    assert coproduct(free, x) == Fraction(1, 2) * coproduct(free, B("ab")) - 3 * coproduct(free, B("b"))


def looping_rule():
    """Each nonempty word also splits as (w, w): D5 is claimed but false."""
    def decompose(w):
        if not w:
            return Multiset([("", "")])
        return Multiset([("", w), (w, ""), (w, w)])

    return Rule("loop", lambda a, b: Multiset([a + b]), decompose, "", len,
                frozenset({"C1", "C2", "C3", "D1", "D2", "D3", "D5", "CD1"}),
                validate_fn=lambda w: isinstance(w, str))


def test_false_d5_claim_runs_out_of_budget():
    rule = looping_rule()
    with pytest.raises(NonTermination):
        antipode_sum(rule, "a", budget=50)
    with pytest.raises(RecursionBudgetExceeded):
        antipode_rec(rule, "a", budget=50)


def test_missing_conditions():
    base = make_rule("free")
    rule = Rule("bare", base.compose_fn, base.decompose_fn, "", len, frozenset({"C1"}),
                validate_fn=base.validate_fn)
    with pytest.raises(ConditionNotDeclared):
        coproduct(rule, B("a"))
    with pytest.raises(ConditionNotDeclared):
        antipode_sum(rule, "a")
    with pytest.raises(ConditionNotDeclared):
        project_grade(rule, B("a"), 1)


def test_memo_is_invisible():
    forest = make_rule("forest")
    fresh = make_rule("forest")
    for f in enumerate_basis(forest, 4):
        assert antipode_rec(forest, f) == antipode_rec(fresh, f, memo=False)
