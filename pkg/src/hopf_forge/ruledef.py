"""Composition/decomposition rules and the operations lifted from them.

A :class:`Rule` bundles one combinatorial class: how two objects compose
(a multiset of outcomes), how one object splits into ordered pairs, the
neutral object, the size function, and the conditions the rule *claims*.
Claims are checked on bounded domains by :mod:`hopf_forge.axiomlab`.

Objects are canonical, hashable, totally ordered Python values; the value
itself is the object key.  ``rule.format`` renders the literal text form.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .errors import BudgetExceeded, ConditionNotDeclared, MalformedObject
from .multiset import Multiset, union_all

CONDITIONS = ("C1", "C2", "C3", "C4", "D1", "D2", "D3", "D4", "D5", "CD1", "CD2")


@dataclass(frozen=True, eq=False)
class Rule:
    name: str
    compose_fn: Callable[[Any, Any], Multiset]
    decompose_fn: Callable[[Any], Multiset]
    neutral: Any
    size_fn: Callable[[Any], int]
    declared: frozenset[str]
    validate_fn: Callable[[Any], bool] | None = None
    parse_fn: Callable[[str], Any] | None = None
    format_fn: Callable[[Any], str] = repr
    enumerate_fn: Callable[[int], list] | None = None
    params: dict = field(default_factory=dict)
    cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        unknown = set(self.declared) - set(CONDITIONS)
        if unknown:
            raise ValueError(f"unknown condition ids: {sorted(unknown)}")
        object.__setattr__(self, "declared", frozenset(self.declared))
        # outcomes depend only on canonical keys, so memoizing is invisible
        object.__setattr__(self, "_compose", lru_cache(maxsize=1 << 16)(self.compose_fn))
        object.__setattr__(self, "_decompose", lru_cache(maxsize=1 << 16)(self.decompose_fn))
        object.__setattr__(self, "_valid", lru_cache(maxsize=1 << 16)(self._check_valid))

    def _check_valid(self, obj) -> bool:
        if self.validate_fn is None:
            return True
        try:
            return bool(self.validate_fn(obj))
        except TypeError:
            return False

    def validate(self, obj) -> None:
        try:
            ok = self._valid(obj)
        except TypeError:  # unhashable
            ok = False
        if not ok:
            raise MalformedObject(f"{obj!r} is not a canonical {self.name} object")

    def require(self, *conditions: str) -> None:
        missing = [c for c in conditions if c not in self.declared]
        if missing:
            raise ConditionNotDeclared(self.name, *missing)

    def declares(self, cond: str) -> bool:
        return cond in self.declared

    def is_neutral(self, obj) -> bool:
        return obj == self.neutral

    def format(self, obj) -> str:
        return self.format_fn(obj)

    def parse(self, text: str):
        if self.parse_fn is None:
            raise NotImplementedError(f"rule {self.name!r} has no object parser")
        return self.parse_fn(text)

    def __repr__(self) -> str:
        return f"Rule({self.name!r}, declared={sorted(self.declared, key=CONDITIONS.index)})"


def compose(rule: Rule, g2, g1) -> Multiset:
    """All ways ``g2`` composes with ``g1`` (``g2`` on the left)."""
    rule.validate(g2)
    rule.validate(g1)
    return rule._compose(g2, g1)


def decompose(rule: Rule, g) -> Multiset:
    """All ordered splittings ``(left, right)`` of ``g``."""
    rule.validate(g)
    return rule._decompose(g)


def size(rule: Rule, g) -> int:
    rule.validate(g)
    return rule.size_fn(g)


def compose_msets(rule: Rule, left: Multiset, right: Multiset) -> Multiset:
    """Compose every element of ``left`` with every element of ``right``
    and collect all outcomes."""
    counts: dict = {}
    get = counts.get
    pairs = right.as_dict().items()
    for g2, m2 in left.as_dict().items():
        for g1, m1 in pairs:
            k = m2 * m1
            for g, m in compose(rule, g2, g1)._counts.items():
                counts[g] = get(g, 0) + k * m
    return Multiset._wrap(counts)


def decompose_mset(rule: Rule, objs: Multiset) -> Multiset:
    return union_all(decompose(rule, g).scaled(m) for g, m in objs)


def compose_sequence(rule: Rule, objs) -> Multiset:
    """Left fold ``objs[0] ◁ objs[1] ◁ ...``; the empty sequence gives ``{Ø}``."""
    if not objs:
        return Multiset.singleton(rule.neutral)
    acc = Multiset.singleton(objs[0])
    for g in objs[1:]:
        acc = compose_msets(rule, acc, Multiset.singleton(g))
    return acc


def _split_step(rule: Rule, tuples: Multiset, strategy: str) -> Multiset:
    counts: dict = {}
    for tup, mult in tuples:
        if strategy == "left":
            target, head, tail = tup[0], (), tup[1:]
        else:
            target, head, tail = tup[-1], tup[:-1], ()
        for (a, b), m in decompose(rule, target):
            key = head + (a, b) + tail
            counts[key] = counts.get(key, 0) + mult * m
    return Multiset(counts)


def iterated_decompose(rule: Rule, g, n: int, strategy: str = "left") -> Multiset:
    """Multiset of ``(n+1)``-tuples reached by ``n`` successive splittings.

    ``n = 1`` is the plain decomposition.  ``strategy`` picks which component
    is split next (``"left"`` or ``"right"``); the two agree exactly when D2
    holds, which is why D2 must be declared.
    """
    rule.require("D2")
    if n < 0:
        raise ValueError("n must be non-negative")
    if strategy not in ("left", "right"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rule.validate(g)
    tuples = Multiset.singleton((g,))
    for _ in range(n):
        tuples = _split_step(rule, tuples, strategy)
    return tuples


def nontrivial_levels(
    rule: Rule, g, budget: int | None = None, strategy: str = "left"
) -> Iterator[tuple[int, Multiset]]:
    """Yield ``(n, tuples)`` for n = 1, 2, ... where ``tuples`` holds the
    Ø-free n-component multiple decompositions of ``g``; stops after the
    first empty level.

    Under D3 the void only splits as ``(Ø, Ø)``, so a tuple with a void
    component never yields a void-free refinement and can be dropped early.
    Without D3 every level is recomputed from the full iterated splitting.
    """
    rule.require("D2")
    rule.validate(g)
    neutral = rule.neutral
    seen = 0
    n = 1
    level = Multiset.singleton((g,))
    full = level
    while True:
        current = level.filter(lambda t: neutral not in t)
        seen += current.distinct()
        if budget is not None and seen > budget:
            raise BudgetExceeded(
                f"more than {budget} nontrivial decompositions of {rule.format(g)}", g
            )
        yield n, current
        if not current:
            return
        n += 1
        if "D3" in rule.declared:
            level = _split_step(rule, current, strategy)
        else:
            full = _split_step(rule, full, strategy)
            level = full


def nontrivial_decompositions(rule: Rule, g, n: int, strategy: str = "left") -> Multiset:
    """Ø-free multiple decompositions of ``g`` with exactly ``n`` components."""
    rule.require("D2")
    if n < 1:
        raise ValueError("n must be at least 1")
    neutral = rule.neutral
    return iterated_decompose(rule, g, n - 1, strategy).filter(lambda t: neutral not in t)
