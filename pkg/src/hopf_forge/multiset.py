"""Finite multisets with sum, product, multiplicity and inclusion.

A :class:`Multiset` is an immutable map ``element -> positive int``.  ``len``
returns the cardinality counted with multiplicity; ``support`` gives the
underlying set.  Iteration yields ``(element, multiplicity)`` pairs in
ascending element order so printed output is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from itertools import product as _cartesian
from typing import Any


class Multiset:
    __slots__ = ("_counts", "_hash")

    def __init__(self, items: Iterable[Any] | Mapping[Any, int] = ()):
        counts: dict[Any, int] = {}
        if isinstance(items, Multiset):
            counts = dict(items._counts)
        elif isinstance(items, Mapping):
            for elem, mult in items.items():
                if not isinstance(mult, int) or mult < 0:
                    raise ValueError(f"multiplicity must be a natural number, got {mult!r}")
                if mult:
                    counts[elem] = counts.get(elem, 0) + mult
        else:
            for elem in items:
                counts[elem] = counts.get(elem, 0) + 1
        self._counts = counts
        self._hash = None

    @classmethod
    def _wrap(cls, counts: dict) -> Multiset:
        # trusted constructor: counts already positive
        ms = cls.__new__(cls)
        ms._counts = counts
        ms._hash = None
        return ms

    @classmethod
    def singleton(cls, elem, mult: int = 1) -> Multiset:
        return cls._wrap({elem: mult} if mult else {})

    def multiplicity(self, elem) -> int:
        return self._counts.get(elem, 0)

    __getitem__ = multiplicity

    def __contains__(self, elem) -> bool:
        return elem in self._counts

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __bool__(self) -> bool:
        return bool(self._counts)

    @property
    def support(self) -> frozenset:
        return frozenset(self._counts)

    def distinct(self) -> int:
        return len(self._counts)

    def items(self) -> list[tuple[Any, int]]:
        try:
            return sorted(self._counts.items(), key=lambda kv: kv[0])
        except TypeError:
            # mixed element types: still deterministic
            return sorted(self._counts.items(), key=lambda kv: repr(kv[0]))

    def __iter__(self) -> Iterator[tuple[Any, int]]:
        return iter(self.items())

    def elements(self) -> Iterator[Any]:
        """Every element repeated according to its multiplicity."""
        for elem, mult in self.items():
            for _ in range(mult):
                yield elem

    def as_dict(self) -> dict[Any, int]:
        return dict(self._counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __add__(self, other: Multiset) -> Multiset:
        if not isinstance(other, Multiset):
            return NotImplemented
        if len(other._counts) > len(self._counts):
            self, other = other, self
        counts = dict(self._counts)
        for elem, mult in other._counts.items():
            counts[elem] = counts.get(elem, 0) + mult
        return Multiset._wrap(counts)

    def __mul__(self, other: Multiset) -> Multiset:
        if not isinstance(other, Multiset):
            return NotImplemented
        return Multiset._wrap(
            {
                (a, b): ma * mb
                for (a, ma), (b, mb) in _cartesian(self._counts.items(), other._counts.items())
            }
        )

    def scaled(self, k: int) -> Multiset:
        """Every multiplicity multiplied by the natural number ``k``."""
        if k == 0:
            return Multiset()
        return Multiset._wrap({e: m * k for e, m in self._counts.items()})

    def __le__(self, other: Multiset) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        get = other._counts.get
        return all(m <= get(e, 0) for e, m in self._counts.items())

    def __ge__(self, other: Multiset) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return other <= self

    def map(self, fn) -> Multiset:
        """Image multiset: multiplicities of colliding images add up."""
        counts: dict[Any, int] = {}
        for elem, mult in self._counts.items():
            img = fn(elem)
            counts[img] = counts.get(img, 0) + mult
        return Multiset._wrap(counts)

    def filter(self, pred) -> Multiset:
        return Multiset._wrap({e: m for e, m in self._counts.items() if pred(e)})

    def __repr__(self) -> str:
        inner = ", ".join(f"{e!r}: {m}" for e, m in self.items())
        return f"Multiset({{{inner}}})"


def union_all(parts: Iterable[Multiset]) -> Multiset:
    """Sum of many multisets without building intermediates."""
    counts: dict[Any, int] = {}
    for part in parts:
        for elem, mult in part._counts.items():
            counts[elem] = counts.get(elem, 0) + mult
    return Multiset._wrap(counts)


def msum(a: Multiset, b: Multiset) -> Multiset:
    return a + b


def mprod(a: Multiset, b: Multiset) -> Multiset:
    return a * b


def multiplicity(a: Multiset, x) -> int:
    return a.multiplicity(x)


def msubset(a: Multiset, b: Multiset) -> bool:
    return a <= b
