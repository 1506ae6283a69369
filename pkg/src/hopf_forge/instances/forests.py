"""Unordered rooted trees and forests (Connes–Kreimer / Butcher).

A tree is the sorted tuple of its child subtrees, so a single vertex is
``()``.  A forest is a sorted tuple of trees and the empty forest ``()`` is
the void object.  Sorting uses ordinary tuple comparison, which makes both
encodings canonical.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..errors import MalformedObject, ParseError
from ..multiset import Multiset
from ..ruledef import CONDITIONS, Rule

Tree = tuple
Forest = tuple

LEAF: Tree = ()


def make_tree(children=()) -> Tree:
    return tuple(sorted(children))


def make_forest(trees=()) -> Forest:
    return tuple(sorted(trees))


@lru_cache(maxsize=None)
def tree_size(t: Tree) -> int:
    return 1 + sum(tree_size(c) for c in t)


def forest_size(f: Forest) -> int:
    return sum(tree_size(t) for t in f)


def tree_key(t: Tree) -> str:
    """Nested-bracket encoding, e.g. ``[[],[]]`` for a root with two leaves."""
    return "[" + ",".join(tree_key(c) for c in t) + "]"


def is_tree(t) -> bool:
    return isinstance(t, tuple) and all(is_tree(c) for c in t) and list(t) == sorted(t)


def is_forest(f) -> bool:
    return isinstance(f, tuple) and all(is_tree(t) for t in f) and list(f) == sorted(f)


@lru_cache(maxsize=None)
def tree_cuts(t: Tree) -> Multiset:
    """Pairs ``(cut branches, rooted part)`` over all proper subtrees.

    The rooted part is a forest holding zero trees (the empty proper
    subtree) or one tree sharing the original root.
    """
    counts: dict = {((t,), ()): 1}
    child_options = [tree_cuts(c).items() for c in t]
    for combo in product(*child_options):
        cut: list = []
        kept: list = []
        mult = 1
        for (c_cut, c_kept), m in combo:
            cut.extend(c_cut)
            kept.extend(c_kept)
            mult *= m
        key = (make_forest(cut), (make_tree(kept),))
        counts[key] = counts.get(key, 0) + mult
    return Multiset(counts)


def forest_cuts(f: Forest) -> Multiset:
    """Trim every tree independently; cut branches go left, rooted parts right."""
    acc: dict = {((), ()): 1}
    for t in f:
        nxt: dict = {}
        for (cut, kept), m in acc.items():
            for (c_cut, c_kept), mt in tree_cuts(t).items():
                key = (make_forest(cut + c_cut), make_forest(kept + c_kept))
                nxt[key] = nxt.get(key, 0) + m * mt
        acc = nxt
    return Multiset(acc)


def format_tree(t: Tree) -> str:
    return "t(" + ",".join(format_tree(c) for c in t) + ")"


def format_forest(f: Forest) -> str:
    if not f:
        return "void"
    if len(f) == 1:
        return format_tree(f[0])
    return "f[" + ",".join(format_tree(t) for t in f) + "]"


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, tok: str):
        self.skip()
        if not self.text.startswith(tok, self.pos):
            raise ParseError(f"expected {tok!r}", self.text, self.pos)
        self.pos += len(tok)

    def peek(self, tok: str) -> bool:
        self.skip()
        return self.text.startswith(tok, self.pos)

    def tree(self) -> Tree:
        self.expect("t(")
        children = []
        if not self.peek(")"):
            children.append(self.tree())
            while self.peek(","):
                self.expect(",")
                children.append(self.tree())
        self.expect(")")
        return make_tree(children)

    def forest(self) -> Forest:
        if self.peek("void"):
            self.expect("void")
            return ()
        if self.peek("t("):
            return (self.tree(),)
        self.expect("f[")
        trees = []
        if not self.peek("]"):
            trees.append(self.tree())
            while self.peek(","):
                self.expect(",")
                trees.append(self.tree())
        self.expect("]")
        return make_forest(trees)


def parse_forest(text: str) -> Forest:
    r = _Reader(text)
    f = r.forest()
    r.skip()
    if r.pos != len(text):
        raise ParseError("trailing characters after forest", text, r.pos)
    return f


@lru_cache(maxsize=None)
def trees_of_size(n: int) -> tuple[Tree, ...]:
    if n < 1:
        return ()
    return tuple(sorted(make_tree(f) for f in forests_of_size(n - 1)))


@lru_cache(maxsize=None)
def forests_of_size(n: int) -> tuple[Forest, ...]:
    if n == 0:
        return ((),)
    out = set()
    for k in range(1, n + 1):
        for t in trees_of_size(k):
            for rest in forests_of_size(n - k):
                out.add(make_forest(rest + (t,)))
    return tuple(sorted(out))


def enumerate_forests(bound: int) -> list[Forest]:
    return [f for n in range(bound + 1) for f in forests_of_size(n)]


def forest_rule() -> Rule:
    return Rule(
        name="forest",
        compose_fn=lambda f2, f1: Multiset.singleton(make_forest(f2 + f1)),
        decompose_fn=forest_cuts,
        neutral=(),
        size_fn=forest_size,
        declared=frozenset(CONDITIONS) - {"D4"},
        validate_fn=is_forest,
        parse_fn=parse_forest,
        format_fn=format_forest,
        enumerate_fn=enumerate_forests,
    )


def forest_from_tree(t: Tree) -> Forest:
    if not is_tree(t):
        raise MalformedObject(f"{t!r} is not a canonical tree")
    return (t,)
