"""Word classes over a finite ordered alphabet.

Words are plain ``str`` values, the empty string being the void word.
Letters are single characters; their order is the order in the alphabet.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, product

from ..errors import EmptyAlphabet, MalformedObject, ParseError
from ..multiset import Multiset
from ..ruledef import CONDITIONS, Rule

ALL = frozenset(CONDITIONS)


def check_alphabet(alphabet: str) -> str:
    if not alphabet:
        raise EmptyAlphabet("alphabet must contain at least one letter")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"alphabet {alphabet!r} repeats a letter")
    bad = [ch for ch in alphabet if ch.isspace() or ch == '"']
    if bad:
        raise ValueError(f"alphabet {alphabet!r} contains unusable characters")
    return alphabet


def format_word(w: str) -> str:
    return f'w"{w}"' if w else "void"


def parse_word(text: str, alphabet: str) -> str:
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s == "void":
        return ""
    if not s.startswith('w"'):
        raise ParseError('expected w"<letters>" or void', text, offset)
    end = s.find('"', 2)
    if end < 0:
        raise ParseError("unterminated word literal", text, offset + len(s))
    if s[end + 1:].strip():
        raise ParseError("trailing characters after word", text, offset + end + 1)
    word = s[2:end]
    for i, ch in enumerate(word):
        if ch not in alphabet:
            raise MalformedObject(f"letter {ch!r} at offset {offset + 2 + i} not in alphabet {alphabet!r}")
    return word


def subword_splittings(w: str) -> Multiset:
    """Every choice of a subword (left) with its complement (right)."""
    counts: dict = {}
    k = len(w)
    for mask in product((0, 1), repeat=k):
        left = "".join(ch for ch, bit in zip(w, mask) if bit)
        right = "".join(ch for ch, bit in zip(w, mask) if not bit)
        counts[(left, right)] = counts.get((left, right), 0) + 1
    return Multiset(counts)


@lru_cache(maxsize=1 << 16)
def _shuffle_counts(u: str, v: str) -> dict:
    # first letter comes from u or from v; suffix results are shared
    if not u or not v:
        return {u + v: 1}
    out: dict = {}
    head = u[0]
    for w, m in _shuffle_counts(u[1:], v).items():
        out[head + w] = m
    head = v[0]
    for w, m in _shuffle_counts(u, v[1:]).items():
        w = head + w
        out[w] = out.get(w, 0) + m
    return out


def shuffles(u: str, v: str) -> Multiset:
    """All order-preserving interleavings of ``u`` and ``v``."""
    return Multiset(_shuffle_counts(u, v))


def deconcatenations(w: str) -> Multiset:
    """Cuts ``w = prefix suffix`` recorded as ``(suffix, prefix)``."""
    counts: dict = {}
    for j in range(len(w) + 1):
        pair = (w[j:], w[:j])
        counts[pair] = counts.get(pair, 0) + 1
    return Multiset(counts)


def _word_rule(name, alphabet, compose_fn, decompose_fn, declared, sort_letters=False):
    order = {ch: i for i, ch in enumerate(alphabet)}

    def validate(w):
        if not isinstance(w, str) or any(ch not in order for ch in w):
            return False
        if sort_letters:
            return list(w) == sorted(w, key=order.__getitem__)
        return True

    def parse(text):
        w = parse_word(text, alphabet)
        if sort_letters:
            w = "".join(sorted(w, key=order.__getitem__))
        return w

    def enumerate_words(bound):
        out = []
        for k in range(bound + 1):
            if sort_letters:
                layer = ["".join(c) for c in combinations_with_replacement(alphabet, k)]
            else:
                layer = ["".join(p) for p in product(alphabet, repeat=k)]
            out.extend(sorted(layer))
        return out

    return Rule(
        name=name,
        compose_fn=compose_fn,
        decompose_fn=decompose_fn,
        neutral="",
        size_fn=len,
        declared=declared,
        validate_fn=validate,
        parse_fn=parse,
        format_fn=format_word,
        enumerate_fn=enumerate_words,
        params={"alphabet": alphabet},
    )


def free_rule(alphabet: str = "ab", name: str = "free") -> Rule:
    """Concatenation with subword-choice decomposition.  Commutative only
    over a one-letter alphabet."""
    alphabet = check_alphabet(alphabet)
    declared = ALL if len(alphabet) == 1 else ALL - {"C4"}
    return _word_rule(
        name,
        alphabet,
        lambda u, v: Multiset.singleton(u + v),
        subword_splittings,
        declared,
    )


def polynomial_rule(letter: str = "x") -> Rule:
    """Free words over a single letter: ``x^i`` is the word of length i."""
    if len(letter) != 1:
        raise ValueError("the polynomial instance takes exactly one letter")
    return free_rule(letter, name="polynomial")


def symmetric_rule(alphabet: str = "xy") -> Rule:
    alphabet = check_alphabet(alphabet)
    order = {ch: i for i, ch in enumerate(alphabet)}

    def compose(u, v):
        return Multiset.singleton("".join(sorted(u + v, key=order.__getitem__)))

    return _word_rule("symmetric", alphabet, compose, subword_splittings, ALL, sort_letters=True)


def shuffle_rule(alphabet: str = "ab") -> Rule:
    """Shuffle product with deconcatenation; cocommutative only over one letter."""
    alphabet = check_alphabet(alphabet)
    declared = ALL if len(alphabet) == 1 else ALL - {"D4"}
    return _word_rule("shuffle", alphabet, shuffles, deconcatenations, declared)
