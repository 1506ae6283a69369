from __future__ import annotations

from collections import Counter

from hypothesis import given
from hypothesis import strategies as st

from hopf_forge import Multiset, mprod, msubset, msum, multiplicity

msets = st.lists(st.sampled_from("abcd"), max_size=8).map(Multiset)


def ms(s):
    return Multiset(s)


def test_sum_examples():
    assert msum(ms("aab"), ms("bc")) == ms("aabbc")
    assert msum(ms("aab"), Multiset()) == ms("aab")
    doubled = msum(ms("aabccc"), ms("aabccc"))
    assert (doubled["a"], doubled["b"], doubled["c"]) == (4, 2, 6)


def test_product_examples():
    assert mprod(ms("aa"), ms("b")) == Multiset([("a", "b")] * 2)
    assert mprod(ms("ab"), Multiset()) == Multiset()
    p = mprod(ms("aab"), ms("cc"))
    assert p[("a", "c")] == 4 and p[("b", "c")] == 2
    assert len(p) == 6


def test_multiplicity_and_subset():
    m = ms("aabccc")
    assert multiplicity(m, "c") == 3
    assert multiplicity(m, "b") == 1
    assert multiplicity(Multiset(), "x") == 0
    assert msubset(ms("aa"), ms("aab"))
    assert not msubset(ms("aaa"), ms("aab"))
    assert msubset(Multiset(), ms("xyz"))


def test_no_zero_entries_and_order():
    m = Multiset({"b": 2, "a": 1, "z": 0})
    assert "z" not in m
    assert list(m) == [("a", 1), ("b", 2)]
    assert m.support == frozenset("ab")
    assert repr(Multiset()) == "Multiset({})"


def test_mixed_types_still_iterate():
    m = Multiset([1, "a", (2,)])
    assert len(list(m)) == 3


@given(msets, msets, msets)
def test_sum_laws(a, b, c):
    assert msum(a, b) == msum(b, a)
    assert msum(msum(a, b), c) == msum(a, msum(b, c))
    assert len(msum(a, b)) == len(a) + len(b)
    assert msubset(a, msum(a, b))


@given(msets, msets)
def test_product_cardinality(a, b):
    assert len(mprod(a, b)) == len(a) * len(b)


@given(st.lists(st.sampled_from("abc"), max_size=10))
def test_matches_counter(xs):
    m = Multiset(xs)
    assert m.as_dict() == dict(Counter(xs))
    assert hash(m) == hash(Multiset(reversed(xs)))
