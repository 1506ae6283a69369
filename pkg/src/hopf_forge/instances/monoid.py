"""Rules for determinate (monoid) compositions given by generators.

The decomposition is specified on generators only (primitive by default)
and extended to products of generators by decomposing every factor and
composing the left parts together and the right parts together.  The
resulting rule satisfies CD1 by construction.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from itertools import product

from ..errors import MalformedObject, NotAMonoid
from ..multiset import Multiset
from ..ruledef import Rule


def _determinate(compose_fn, a, b):
    out = compose_fn(a, b)
    if isinstance(out, Multiset):
        if len(out) != 1:
            raise NotAMonoid(f"composition of {a!r} and {b!r} gave {len(out)} outcomes")
        (out,) = out.support
    return out


def primitive(neutral, g) -> Multiset:
    return Multiset({(neutral, g): 1, (g, neutral): 1})


class _Factorizer:
    """Finds some product of generators equal to a target object by
    building every product up to the target's size."""

    def __init__(self, gens, mult, neutral, size_fn):
        self.gens = [g for g in gens if size_fn(g) > 0]
        self.mult = mult
        self.size_fn = size_fn
        self.table = {neutral: ()}
        self.frontier = {neutral: ()}
        self.reached = 0

    def __call__(self, obj) -> tuple:
        target = self.size_fn(obj)
        while obj not in self.table and self.frontier and self.reached < target:
            nxt = {}
            for prod, word in self.frontier.items():
                for g in self.gens:
                    p = self.mult(prod, g)
                    if self.size_fn(p) <= target and p not in self.table and p not in nxt:
                        nxt[p] = word + (g,)
            self.table.update(nxt)
            self.frontier = nxt
            self.reached += 1
        if obj not in self.table:
            raise MalformedObject(f"{obj!r} is not a product of the generators")
        return self.table[obj]


def monoid_rule_from_generators(
    gens: Sequence,
    compose_fn: Callable,
    gen_decompose: Callable[[object], Multiset] | None = None,
    *,
    neutral,
    size_fn: Callable[[object], int],
    factorize: Callable[[object], Sequence] | None = None,
    name: str = "monoid",
    commutative: bool = False,
    declared: set[str] | None = None,
    **rule_kwargs,
) -> Rule:
    """Build a rule from a determinate composition and generator splittings.

    ``compose_fn(a, b)`` returns the unique composite (or a one-element
    multiset).  ``factorize(obj)`` writes ``obj`` as a sequence of
    generators; when omitted, products of ``gens`` are searched by size.
    Without ``gen_decompose`` every generator is primitive, and the
    declared set then includes D1-D5.  With a custom generator splitting
    only the composition conditions and CD1 are declared unless
    ``declared`` says otherwise.
    """
    gens = list(gens)
    for a in gens:
        for b in gens:
            _determinate(compose_fn, a, b)

    def mult(a, b):
        return _determinate(compose_fn, a, b)

    factor = factorize or _Factorizer(gens, mult, neutral, size_fn)

    def split_generator(g):
        if gen_decompose is None:
            return primitive(neutral, g)
        return gen_decompose(g)

    def decompose(obj) -> Multiset:
        acc = {(neutral, neutral): 1}
        for g in factor(obj):
            nxt: dict = {}
            parts = split_generator(g).items()
            for ((l, r), m), ((a, b), mg) in product(acc.items(), parts):
                key = (mult(l, a), mult(r, b))
                nxt[key] = nxt.get(key, 0) + m * mg
            acc = nxt
        return Multiset(acc)

    if declared is None:
        declared = {"C1", "C2", "C3", "CD1"}
        if gen_decompose is None:
            declared |= {"D1", "D2", "D3", "D4", "D5"}
        if commutative:
            declared.add("C4")

    return Rule(
        name=name,
        compose_fn=lambda a, b: Multiset.singleton(mult(a, b)),
        decompose_fn=decompose,
        neutral=neutral,
        size_fn=size_fn,
        declared=frozenset(declared),
        **rule_kwargs,
    )
