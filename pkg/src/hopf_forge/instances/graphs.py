"""Undirected multigraphs with loops and no isolated vertices.

A graph is a sorted tuple of edges ``(u, v)`` with ``1 <= u <= v``.  The
canonical representative of an isomorphism class is built component by
component: each connected component takes its lexicographically smallest
edge list among the labelings compatible with a vertex invariant; the
components are then sorted and laid out on consecutive vertex blocks.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations, product

from ..errors import MalformedObject, ParseError
from ..multiset import Multiset
from ..ruledef import CONDITIONS, Rule

Edge = tuple[int, int]
Graph = tuple[Edge, ...]


def _components(edges: Graph) -> list[list[Edge]]:
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return list(groups.values())


def _canonical_component(edges: list[Edge]) -> Graph:
    verts = sorted({x for e in edges for x in e})
    deg = dict.fromkeys(verts, 0)
    loops = dict.fromkeys(verts, 0)
    nbrs: dict[int, list[int]] = {x: [] for x in verts}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if u == v:
            loops[u] += 1
        else:
            nbrs[u].append(v)
            nbrs[v].append(u)
    inv = {x: (-deg[x], -loops[x], tuple(sorted(-deg[y] for y in nbrs[x]))) for x in verts}
    classes: dict = {}
    for x in verts:
        classes.setdefault(inv[x], []).append(x)
    ordered = [classes[k] for k in sorted(classes)]
    best = None
    # new labels are handed out class by class; only within-class order varies
    for choice in product(*(permutations(c) for c in ordered)):
        label = {}
        nxt = 1
        for block in choice:
            for x in block:
                label[x] = nxt
                nxt += 1
        cand = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges))
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=1 << 17)
def canonical_form(edges: Graph) -> Graph:
    comps = sorted(_canonical_component(c) for c in _components(edges))
    out: list[Edge] = []
    offset = 0
    for comp in comps:
        for u, v in comp:
            out.append((u + offset, v + offset))
        offset += max(v for _, v in comp)
    return tuple(out)


def normalize_edges(edges) -> Graph:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def is_canonical(g) -> bool:
    if not isinstance(g, tuple):
        return False
    for e in g:
        if not (isinstance(e, tuple) and len(e) == 2):
            return False
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int) and 1 <= u <= v):
            return False
    return tuple(sorted(g)) == g and canonical_form(g) == g


def disjoint_union(g2: Graph, g1: Graph) -> Graph:
    shift = max((v for _, v in g2), default=0)
    return canonical_form(normalize_edges(list(g2) + [(u + shift, v + shift) for u, v in g1]))


def edge_splittings(g: Graph) -> Multiset:
    """Ordered partitions ``L + R`` of the edge list, restricted and
    canonicalized; isolated vertices disappear with the edges."""
    counts: dict = {}
    for mask in product((True, False), repeat=len(g)):
        left = canonical_form(tuple(e for e, b in zip(g, mask) if b))
        right = canonical_form(tuple(e for e, b in zip(g, mask) if not b))
        counts[(left, right)] = counts.get((left, right), 0) + 1
    return Multiset(counts)


def format_graph(g: Graph) -> str:
    if not g:
        return "void"
    return "g{" + ",".join(f"{u}-{v}" for u, v in g) + "}"


_ITEM = re.compile(r"\s*(\d+)\s*(?:-\s*(\d+)\s*)?")


def parse_graph(text: str) -> Graph:
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s == "void":
        return ()
    if not s.startswith("g{"):
        raise ParseError("expected g{u-v,...} or void", text, offset)
    close = s.find("}")
    if close < 0:
        raise ParseError("unterminated graph literal", text, offset + len(s))
    if s[close + 1:].strip():
        raise ParseError("trailing characters after graph", text, offset + close + 1)
    body = s[2:close]
    edges: list[Edge] = []
    used: set[int] = set()
    isolated: list[int] = []
    if body.strip():
        pos = 0
        for piece in body.split(","):
            m = _ITEM.fullmatch(piece)
            if not m:
                raise ParseError("expected u-v", text, offset + 2 + pos)
            u = int(m.group(1))
            if m.group(2) is None:
                isolated.append(u)
            else:
                v = int(m.group(2))
                if u < 1 or v < 1:
                    raise MalformedObject("vertex labels must be positive integers")
                edges.append((u, v))
                used.update((u, v))
            pos += len(piece) + 1
    for u in isolated:
        if u not in used:
            raise MalformedObject(f"isolated vertex {u} in graph literal")
    return canonical_form(normalize_edges(edges))


def enumerate_graphs(bound: int) -> list[Graph]:
    """Every isomorphism class with at most ``bound`` edges."""
    layers = [{()}]
    for _ in range(bound):
        nxt: set[Graph] = set()
        for g in layers[-1]:
            n = max((v for _, v in g), default=0)
            cands = [(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]
            cands += [(u, n + 1) for u in range(1, n + 2)]
            cands.append((n + 1, n + 2))
            for e in cands:
                nxt.add(canonical_form(normalize_edges(g + (e,))))
        layers.append(nxt)
    return [g for layer in layers for g in sorted(layer)]


def graph_rule() -> Rule:
    return Rule(
        name="graph",
        compose_fn=lambda g2, g1: Multiset.singleton(disjoint_union(g2, g1)),
        decompose_fn=edge_splittings,
        neutral=(),
        size_fn=len,
        declared=frozenset(CONDITIONS),
        validate_fn=is_canonical,
        parse_fn=parse_graph,
        format_fn=format_graph,
        enumerate_fn=enumerate_graphs,
    )
