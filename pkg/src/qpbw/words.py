"""Words over x_1 > x_2 > ... > x_n and Shirshov standard words.

A word is a tuple of 0-based letter indices, so ``(0, 1)`` is x1.x2.

The order used throughout is lexicographic with x_1 the greatest letter
and with a proper prefix counted as *greater* than its extensions:

    x1 > x1.x1 > x1.x2 > x2 > x2.x1 > x2.x2

With 0-based indices this is exactly the reverse of Python's tuple order,
so ``u > v`` iff ``u < v`` as tuples.  Helpers below hide that flip; sorting
words ascending as tuples lists them from greatest to least.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

Word = tuple

LESS, EQUAL, GREATER = -1, 0, 1


class WordError(ValueError):
    pass


def lex_compare(u: Word, v: Word) -> int:
    """GREATER if u > v in the word order, LESS if u < v, EQUAL otherwise."""
    if u == v:
        return EQUAL
    return GREATER if u < v else LESS


def word_gt(u: Word, v: Word) -> bool:
    return u < v


def word_ge(u: Word, v: Word) -> bool:
    return u <= v


def greatest(words):
    return min(words)


def is_prefix(u: Word, v: Word) -> bool:
    return len(u) <= len(v) and v[: len(u)] == u


def is_standard(u: Word) -> bool:
    """u is standard iff u > u2.u1 for every split u = u1.u2 into nonempty parts."""
    if not u:
        raise WordError("the empty word is not standard")
    return all(u < u[k:] + u[:k] for k in range(1, len(u)))


def is_standard_by_endings(u: Word) -> bool:
    """Equivalent test: u is greater than each of its proper endings."""
    if not u:
        raise WordError("the empty word is not standard")
    return all(u < u[k:] for k in range(1, len(u)))


def words_of_degree(n: int, degree: int, weights: Sequence[int] = None) -> Iterator[Word]:
    """All words of the given weighted degree, in decreasing word order."""
    weights = weights or (1,) * n

    def rec(prefix, remaining):
        if remaining == 0:
            yield prefix
            return
        for i in range(n):
            w = weights[i]
            if w <= remaining:
                yield from rec(prefix + (i,), remaining - w)

    out = list(rec((), degree))
    out.sort()
    return iter(out)


def enumerate_standard(n: int, max_degree: int, weights: Sequence[int] = None) -> list:
    """All standard words of weighted degree <= max_degree, greatest first."""
    weights = weights or (1,) * n
    out = []
    for d in range(1, max_degree + 1):
        out.extend(w for w in words_of_degree(n, d, weights) if is_standard(w))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# nonassociative words


@dataclass(frozen=True)
class Bracket:
    """A binary bracketing [left right]; leaves are letter indices."""
    left: Union["Bracket", int]
    right: Union["Bracket", int]

    @property
    def word(self) -> Word:
        return leaves(self)


NonassocWord = Union[Bracket, int]


def leaves(t: NonassocWord) -> Word:
    if isinstance(t, int):
        return (t,)
    return leaves(t.left) + leaves(t.right)


def all_bracketings(u: Word) -> Iterator[NonassocWord]:
    if len(u) == 1:
        yield u[0]
        return
    for k in range(1, len(u)):
        for a in all_bracketings(u[:k]):
            for b in all_bracketings(u[k:]):
                yield Bracket(a, b)


def is_standard_bracketing(t: NonassocWord) -> bool:
    """Check the three defining conditions of a standard nonassociative word."""
    if isinstance(t, int):
        return True
    if not is_standard(leaves(t)):
        return False
    if not (is_standard_bracketing(t.left) and is_standard_bracketing(t.right)):
        return False
    if isinstance(t.left, Bracket):
        # [[[v1][v2]][w]] requires v2 <= w
        return word_ge(leaves(t.right), leaves(t.left.right))
    return True


_BRACKET_CACHE: dict = {}


def standard_factorization(u: Word) -> tuple:
    """The split u = v.w of the standard bracketing: v, w standard, |v| minimal."""
    if len(u) < 2:
        raise WordError("single letters have no factorization")
    if not is_standard(u):
        raise WordError(f"{u} is not standard")
    for k in range(1, len(u)):
        v, w = u[:k], u[k:]
        if is_standard(v) and is_standard(w):
            return v, w
    raise AssertionError("standard word without a standard split")


def shirshov_bracket(u: Word) -> NonassocWord:
    """The unique standard bracketing of a standard word."""
    t = _BRACKET_CACHE.get(u)
    if t is not None:
        return t
    if not u:
        raise WordError("empty word")
    if len(u) == 1:
        t = u[0]
    else:
        v, w = standard_factorization(u)
        t = Bracket(shirshov_bracket(v), shirshov_bracket(w))
    _BRACKET_CACHE[u] = t
    return t


def format_bracketing(t: NonassocWord, names) -> str:
    if isinstance(t, int):
        return f"[{names[t]}]"
    return f"[{format_bracketing(t.left, names)}{format_bracketing(t.right, names)}]"


def lyndon_factorization(w: Word) -> list:
    """Split w into standard words u_1 <= u_2 <= ... <= u_k (Duval's algorithm).

    In Python's tuple order the factors are non-increasing, which in the word
    order above means non-decreasing: this is the unique monotonic super-word
    whose brackets drop to ``w``.
    """
    out = []
    n = len(w)
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i: i + j - k])
            i += j - k
    return out


def necklace_count(n_letters: int, length: int) -> int:
    """Number of aperiodic necklaces (Lyndon words) of a given length."""
    total = 0
    for e in range(1, length + 1):
        if length % e == 0:
            total += _mobius(length // e) * n_letters ** e
    return total // length


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def all_words(n: int, max_len: int) -> Iterator[Word]:
    for length in range(1, max_len + 1):
        yield from itertools.product(range(n), repeat=length)
