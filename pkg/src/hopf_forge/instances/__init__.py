"""Built-in combinatorial classes and the registry that builds them."""

from __future__ import annotations

from ..errors import UnknownInstance
from ..ruledef import Rule
from .forests import forest_rule
from .graphs import graph_rule
from .monoid import monoid_rule_from_generators
from .words import free_rule, polynomial_rule, shuffle_rule, symmetric_rule

INSTANCES = ("free", "symmetric", "shuffle", "polynomial", "graph", "forest")

DEFAULT_ALPHABETS = {"free": "ab", "shuffle": "ab", "symmetric": "xy", "polynomial": "x"}


def make_rule(name: str, alphabet: str | None = None) -> Rule:
    """Build a built-in rule.  ``alphabet`` only applies to word instances."""
    if name not in INSTANCES:
        raise UnknownInstance(f"unknown instance {name!r}; choose from {', '.join(INSTANCES)}")
    if name == "graph":
        return graph_rule()
    if name == "forest":
        return forest_rule()
    if alphabet is None:
        alphabet = DEFAULT_ALPHABETS[name]
    return {
        "free": free_rule,
        "symmetric": symmetric_rule,
        "shuffle": shuffle_rule,
        "polynomial": polynomial_rule,
    }[name](alphabet)


def enumerate_basis(rule: Rule, bound: int) -> list:
    """All canonical objects of size at most ``bound``, by size then key."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if rule.enumerate_fn is None:
        raise NotImplementedError(f"rule {rule.name!r} cannot enumerate its class")
    return list(rule.enumerate_fn(bound))


def parse_object(rule: Rule, text: str):
    return rule.parse(text)


__all__ = [
    "INSTANCES",
    "enumerate_basis",
    "make_rule",
    "monoid_rule_from_generators",
    "parse_object",
]
