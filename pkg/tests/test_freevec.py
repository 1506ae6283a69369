from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopf_forge import Element, Multiset, from_multiset, msum, tensor
from hopf_forge.freevec import add, format_element, parse_rational, scale, zero

a, b, c = (Element.basis(k) for k in "abc")

coeffs = st.fractions(max_denominator=6).filter(lambda q: abs(q) < 10)
elements = st.dictionaries(st.sampled_from("abcd"), coeffs, max_size=4).map(
    lambda d: sum((scale(v, Element.basis(k)) for k, v in d.items()), zero()))


def test_add():
    assert add(2 * a + b, -2 * a) == b
    assert add(a, zero()) == a
    assert Fraction(1, 2) * a + Fraction(1, 3) * a == Fraction(5, 6) * a


def test_scale():
    assert scale(0, a + b) == zero()
    assert scale(-1, a - b) == b - a
    assert scale(Fraction(2, 3), 3 * a) == 2 * a


def test_from_multiset():
    assert from_multiset(Multiset(["ab", "ab"])) == 2 * Element.basis("ab")
    assert from_multiset(Multiset()) == zero()
    t = from_multiset(Multiset([("b", "a")]), tensor=True)
    assert t == tensor(b, a)


def test_tensor():
    assert tensor(a, b).as_dict() == {("a", "b"): 1}
    assert tensor(a + b, c) == tensor(a, c) + tensor(b, c)
    assert tensor(zero(), b) == 0


def test_no_zero_terms_stored():
    x = a - a
    assert len(x) == 0 and x == 0


def test_type_mixing_rejected():
    with pytest.raises(TypeError):
        a + tensor(a, b)


def test_formatting():
    assert format_element(a - 2 * b + Fraction(1, 2) * c, str) == "a - 2 b + 1/2 c"
    assert format_element(-a, str) == "-a"
    assert format_element(zero(), str) == "0 void"


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        parse_rational("1/0")


@given(elements, elements, elements, coeffs)
def test_vector_space_axioms(x, y, z, q):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert scale(q, x + y) == scale(q, x) + scale(q, y)
    assert x - x == zero()


@given(st.lists(st.sampled_from("ab")), st.lists(st.sampled_from("ab")))
def test_from_multiset_additive(xs, ys):
    A, B = Multiset(xs), Multiset(ys)
    assert from_multiset(msum(A, B)) == from_multiset(A) + from_multiset(B)
