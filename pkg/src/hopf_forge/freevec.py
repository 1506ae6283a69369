"""Finite rational linear combinations over a combinatorial basis.

:class:`Element` maps object keys to nonzero :class:`~fractions.Fraction`
coefficients.  :class:`TensorElement` does the same for tuples of keys (the
tensor powers; a coproduct lands in arity 2).  Both are immutable.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational

from .multiset import Multiset


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """``p/q`` with the denominator omitted when it is 1."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            if not den.strip().isdigit():
                raise ValueError
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None


def _sorted_items(terms: dict) -> list:
    try:
        return sorted(terms.items(), key=lambda kv: kv[0])
    except TypeError:
        return sorted(terms.items(), key=lambda kv: repr(kv[0]))


class Element:
    """Vector in the free space spanned by object keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = as_rational(coeff)
                if coeff:
                    clean[key] = coeff
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, key, coeff=1):
        return cls({key: coeff})

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    __getitem__ = coefficient

    def items(self) -> list:
        """Terms as ``(key, coefficient)`` in ascending key order."""
        return _sorted_items(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def keys(self) -> list:
        return [k for k, _ in self.items()]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def _check(self, other) -> bool:
        return type(other) is type(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return type(other) is type(self) and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if not self._check(other):
            raise TypeError(f"cannot add {type(self).__name__} and {type(other).__name__}")
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            total = terms.get(key, 0) + coeff
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return self._wrap(terms)

    def __neg__(self):
        return self._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        return scale(scalar, self)

    def restrict(self, pred: Callable) -> Element:
        """Keep only the terms whose key satisfies ``pred``."""
        return self._wrap({k: c for k, c in self._terms.items() if pred(k)})

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {format_rational(c)}" for k, c in self.items())
        return f"{type(self).__name__}({{{body}}})"


class TensorElement(Element):
    """Linear combination of key tuples; all tuples share one arity."""

    __slots__ = ()

    @property
    def arity(self) -> int | None:
        for key in self._terms:
            return len(key)
        return None

    def swap(self) -> TensorElement:
        return TensorElement._wrap({k[::-1]: c for k, c in self._terms.items()})


class Accumulator:
    """Mutable coefficient sink used in hot loops; ``result()`` freezes it."""

    __slots__ = ("_terms", "_cls")

    def __init__(self, cls=Element):
        self._terms: dict = {}
        self._cls = cls

    def add(self, key, coeff) -> None:
        self._terms[key] = self._terms.get(key, 0) + coeff

    def add_multiset(self, ms: Multiset, coeff) -> None:
        terms = self._terms
        for key, mult in ms.as_dict().items():
            terms[key] = terms.get(key, 0) + coeff * mult

    def result(self):
        return self._cls._wrap({k: Fraction(c) for k, c in self._terms.items() if c})


def zero() -> Element:
    return Element()


def add(x: Element, y: Element) -> Element:
    return x + y


def scale(c, x: Element) -> Element:
    c = as_rational(c)
    if not c:
        return type(x)._wrap({})
    return type(x)._wrap({k: c * v for k, v in x._terms.items()})


def from_multiset(ms: Multiset, tensor: bool = False) -> Element:
    """Multiplicities become coefficients.  With ``tensor=True`` the elements
    must be key tuples and a :class:`TensorElement` is returned."""
    cls = TensorElement if tensor else Element
    if tensor and any(not isinstance(k, tuple) for k in ms.support):
        raise TypeError("tensor=True needs tuple elements")
    return cls._wrap({k: Fraction(m) for k, m in ms.as_dict().items()})


def tensor(x: Element, y: Element) -> TensorElement:
    """``x ⊗ y``; tensor operands contribute all of their factors."""
    def parts(v):
        if isinstance(v, TensorElement):
            return v._terms.items()
        return (((k,), c) for k, c in v._terms.items())

    right = list(parts(y))
    terms = {}
    for kx, cx in parts(x):
        for ky, cy in right:
            terms[kx + ky] = terms.get(kx + ky, 0) + cx * cy
    return TensorElement._wrap({k: c for k, c in terms.items() if c})


def format_element(x: Element, fmt: Callable[[object], str], sep: str = " (x) ") -> str:
    """Render as ``c key + c key - ...``; a zero vector renders as ``0 void``."""
    is_tensor = isinstance(x, TensorElement)

    def key_text(key):
        return sep.join(fmt(k) for k in key) if is_tensor else fmt(key)

    if not x:
        return "0 void (x) void" if is_tensor else "0 void"
    out = []
    for i, (key, coeff) in enumerate(x.items()):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = key_text(key) if mag == 1 else f"{format_rational(mag)} {key_text(key)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
