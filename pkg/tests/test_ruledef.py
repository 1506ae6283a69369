from __future__ import annotations

from itertools import product

import pytest

from hopf_forge import CONDITIONS, ConditionNotDeclared, MalformedObject, Multiset, Rule, make_rule
from hopf_forge.ruledef import (
    compose,
    compose_msets,
    compose_sequence,
    decompose,
    iterated_decompose,
    nontrivial_decompositions,
    nontrivial_levels,
    size,
)


def split_oracle(word: str, k: int) -> Multiset:
    """Every way of handing each letter of ``word`` to one of ``k`` slots."""
    out = []
    for slots in product(range(k), repeat=len(word)):
        out.append(tuple("".join(ch for ch, s in zip(word, slots) if s == i) for i in range(k)))
    return Multiset(out)


@pytest.fixture
def free():
    return make_rule("free")


def test_compose_examples(free):
    assert compose(free, "ab", "a") == Multiset(["aba"])
    assert compose(make_rule("free", "abc"), "ab", "c") == Multiset(["abc"])
    assert compose(free, "", "ba") == Multiset(["ba"])
    assert compose(make_rule("shuffle"), "a", "b") == Multiset(["ab", "ba"])


def test_decompose_examples(free):
    assert decompose(free, "ab") == Multiset([("", "ab"), ("a", "b"), ("b", "a"), ("ab", "")])
    assert decompose(make_rule("shuffle"), "ab") == Multiset([("ab", ""), ("b", "a"), ("", "ab")])
    for name in ("free", "graph", "forest"):
        rule = make_rule(name)
        assert decompose(rule, rule.neutral) == Multiset([(rule.neutral, rule.neutral)])


def test_malformed_rejected(free):
    with pytest.raises(MalformedObject):
        compose(free, "ac", "a")
    with pytest.raises(MalformedObject):
        decompose(free, 3)


def test_compose_msets(free):
    assert compose_msets(free, Multiset("a"), Multiset("b")) == Multiset(["ab"])
    assert compose_msets(free, Multiset("aa"), Multiset("b")) == Multiset(["ab", "ab"])
    assert compose_msets(free, Multiset(), Multiset("ab")) == Multiset()
    assert compose_sequence(free, []) == Multiset([""])
    assert compose_sequence(free, ["a", "b", "a"]) == Multiset(["aba"])


def test_size(free):
    assert size(make_rule("free", "abc"), "abc") == 3
    forest = make_rule("forest")
    assert size(forest, forest.parse("f[t(),t()]")) == 2
    for name in ("free", "graph", "forest"):
        rule = make_rule(name)
        assert size(rule, rule.neutral) == 0


def test_iterated_decompose(free):
    assert iterated_decompose(free, "ab", 1) == decompose(free, "ab").map(tuple)
    assert iterated_decompose(free, "", 2) == Multiset([("", "", "")])
    triples = iterated_decompose(free, "ab", 2)
    assert len(triples) == 9
    assert triples[("a", "b", "")] == 1
    assert triples == iterated_decompose(free, "ab", 2, "right")


@pytest.mark.parametrize("word", ["", "a", "ab", "aab", "abba"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_iterated_decompose_matches_oracle(free, word, k):
    for strategy in ("left", "right"):
        assert iterated_decompose(free, word, k - 1, strategy) == split_oracle(word, k)


def test_nontrivial(free):
    assert nontrivial_decompositions(free, "ab", 2) == Multiset([("a", "b"), ("b", "a")])
    assert nontrivial_decompositions(free, "a", 2) == Multiset()
    for n in (1, 2, 3):
        assert nontrivial_decompositions(free, "", n) == Multiset()
    levels = dict(nontrivial_levels(free, "abb"))
    assert max(levels) == 4 and not levels[4]
    for n in (1, 2, 3):
        assert levels[n] == nontrivial_decompositions(free, "abb", n)


def test_undeclared_condition_refused():
    base = make_rule("free")
    rule = Rule("nod2", base.compose_fn, base.decompose_fn, "", len, frozenset({"C1", "D1"}),
                validate_fn=base.validate_fn)
    with pytest.raises(ConditionNotDeclared) as err:
        iterated_decompose(rule, "ab", 2)
    assert "D2" in str(err.value)


def test_unknown_condition_id():
    with pytest.raises(ValueError):
        Rule("bad", lambda a, b: Multiset(), lambda g: Multiset(), None, len, frozenset({"C9"}))
    assert len(CONDITIONS) == 11
