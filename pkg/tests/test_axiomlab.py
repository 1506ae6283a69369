from __future__ import annotations

import json

import pytest

from hopf_forge import ConditionNotDeclared, Rule, make_rule
from hopf_forge.axiomlab import (
    BUDGET,
    FAILS,
    HOLDS,
    Domain,
    check_all,
    check_condition,
    check_hopf,
    matches_declaration,
)

from .test_hopfcore import looping_rule


def test_free_c2_holds():
    rule = make_rule("free")
    rep = check_condition(rule, "C2", Domain.build(rule, 3))
    assert rep.verdict == HOLDS and rep.cases == 15 ** 3


def test_shuffle_d4_counterexample():
    rule = make_rule("shuffle")
    rep = check_condition(rule, "D4", Domain.build(rule, 3))
    assert rep.verdict == FAILS
    assert rep.counterexample["objects"] == ['w"ab"']
    assert [["w\"b\"", "w\"a\""], 1] in rep.counterexample["lhs"]
    assert not any(k == ["w\"a\"", "w\"b\""] for k, _ in rep.counterexample["lhs"])


def test_forest_cd2_holds():
    rule = make_rule("forest")
    assert check_condition(rule, "CD2", Domain.build(rule, 4)).holds


def test_free_c4_fails_on_smallest_pair():
    rule = make_rule("free")
    rep = check_condition(rule, "C4", Domain.build(rule, 2))
    assert rep.verdict == FAILS and rep.counterexample["objects"] == ['w"a"', 'w"b"']
    assert matches_declaration(rule, rep)
    assert check_condition(make_rule("free", "a"), "C4", Domain.build(make_rule("free", "a"), 4)).holds


@pytest.mark.parametrize("name,bound", [("polynomial", 6), ("graph", 3), ("forest", 3)])
def test_hopf_holds(name, bound):
    rule = make_rule(name)
    rep = check_hopf(rule, Domain.build(rule, bound))
    assert rep.holds, rep.to_json()
    names = [s.condition for s in rep.subreports]
    assert "antipode-left" in names and "antipode-agreement" in names
    assert ("involution" in names) == bool(rule.declared & {"C4", "D4"})


def test_hopf_on_void_domain(any_rule):
    rep = check_hopf(any_rule, Domain.of(any_rule, [any_rule.neutral]))
    assert rep.holds


def test_hopf_strategies_agree():
    rule = make_rule("free")
    dom = Domain.build(rule, 3)
    a = check_hopf(rule, dom, strategy="left")
    b = check_hopf(rule, dom, strategy="right")
    assert [(s.condition, s.verdict) for s in a.subreports] == [(s.condition, s.verdict) for s in b.subreports]


def test_hopf_requires_prerequisites():
    base = make_rule("free")
    rule = Rule("bare", base.compose_fn, base.decompose_fn, "", len, frozenset({"C1"}),
                validate_fn=base.validate_fn)
    with pytest.raises(ConditionNotDeclared):
        check_hopf(rule, Domain.of(rule, [""]))


def test_budget_verdict():
    rule = looping_rule()
    rep = check_condition(rule, "D5", Domain.of(rule, ["", "a"]), budget=20)
    assert rep.verdict == BUDGET
    assert rep.counterexample["objects"] == ["'a'"]
    assert not matches_declaration(rule, rep)


def test_report_json_schema():
    rule = make_rule("shuffle")
    reports = check_all(rule, Domain.build(rule, 2))
    assert [r.condition for r in reports][:3] == ["C1", "C2", "C3"]
    for rep in reports:
        data = json.loads(json.dumps(rep.to_json()))
        assert {"rule", "condition", "verdict", "cases", "seconds"} <= data.keys()
        assert data["verdict"] in (HOLDS, FAILS, BUDGET)
        assert ("counterexample" in data) == (data["verdict"] != HOLDS)
        assert matches_declaration(rule, rep)


def test_unknown_condition():
    rule = make_rule("free")
    with pytest.raises(ValueError):
        check_condition(rule, "D9", Domain.build(rule, 1))
