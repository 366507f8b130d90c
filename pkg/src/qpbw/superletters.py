"""Super-letters, super-words and the straightening of super-words.

A super-letter [u] is the polynomial obtained from the standard bracketing
of a standard word u by reading every bracket as the skew commutator

    [f, g] = f g - p(f, g) g f.

Super-letters are identified with their standard words and ordered like
them.  A super-word is stored flat, as a tuple of standard words, e.g.
``((1,), (0,))`` is [x2][x1].  It is *monotonic* when its letters are
non-decreasing left to right (repeats are exponents).

Linear combinations of super-words are plain dicts ``superword -> coeff``.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import groupby
from typing import Sequence

from .algebra import AlgebraError, Poly, _acc
from .context import QuantumContext
from .words import (
    NonassocWord, Word, is_standard, lex_compare, lyndon_factorization,
    shirshov_bracket, standard_factorization, word_ge, word_gt,
)


class InvariantViolation(AssertionError):
    """A structural property that must always hold was observed to fail."""


class SuperLetterError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SuperLetter:
    word: Word
    bracketing: NonassocWord
    expansion: Poly


SuperWord = tuple


def is_monotonic(sw: SuperWord) -> bool:
    return all(word_ge(sw[i + 1], sw[i]) for i in range(len(sw) - 1))


def is_restricted(sw: SuperWord, heights: dict) -> bool:
    return all(len(list(g)) < heights[w] for w, g in groupby(sw))


def drop_brackets(sw: SuperWord) -> Word:
    return tuple(x for w in sw for x in w)


def compare_superletters(a: SuperLetter, b: SuperLetter) -> int:
    return lex_compare(a.word, b.word)


def superword_gt(a: SuperWord, b: SuperWord) -> bool:
    """Lexicographic order on super-words induced by the order on super-letters."""
    return a < b


def format_superword(ctx: QuantumContext, sw: SuperWord) -> str:
    if not sw:
        return "1"
    out = []
    for w, grp in groupby(sw):
        k = len(list(grp))
        s = f"[{ctx.format_word(w)}]"
        out.append(s if k == 1 else f"{s}^{k}")
    return "".join(out)


def exponent_form(sw: SuperWord) -> list:
    return [(w, len(list(g))) for w, g in groupby(sw)]


def monotonic_superwords(ctx: QuantumContext, letters: Sequence[Word], degree: int,
                         heights: dict = None) -> list:
    """Monotonic super-words of exact weighted degree in the given letters.

    With ``heights`` the exponents are restricted (exponent < height).
    Result is sorted greatest first.
    """
    ls = sorted(set(letters), reverse=True)  # least letter first
    degs = [ctx.degree(w) for w in ls]
    out = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if i == len(ls):
            return
        rec(i + 1, remaining, acc)
        d = degs[i]
        cap = heights.get(ls[i]) if heights else None
        k = 1
        while k * d <= remaining and (cap is None or k < cap):
            rec(i + 1, remaining - k * d, acc + [ls[i]] * k)
            k += 1

    rec(0, degree, [])
    out.sort()
    return out


class SuperCalculus:
    """Per-context caches for super-letter computations."""

    def __init__(self, ctx: QuantumContext, fuel: int = 10_000_000):
        self.ctx = ctx
        self.fuel = fuel
        self._letters: dict = {}
        self._sw_exp: dict = {}
        self._decomp: dict = {}
        self._straight: dict = {}
        self.rewrites = 0

    # -- brackets and expansions -------------------------------------------

    def p(self, u: Word, v: Word):
        return self.ctx.p_words(u, v)

    def skew_bracket(self, f: Poly, g: Poly) -> Poly:
        """f g - p(f, g) g f for constitution-homogeneous f, g."""
        ctx = self.ctx
        if not f or not g:
            return Poly._raw({})
        try:
            cf, cg = f.constitution(ctx), g.constitution(ctx)
        except AlgebraError as e:
            raise SuperLetterError("skew bracket needs homogeneous arguments") from e
        return f * g - (g * f).scale(ctx.bicharacter(cf, cg))

    def superletter(self, u: Word) -> SuperLetter:
        u = tuple(u)
        s = self._letters.get(u)
        if s is not None:
            return s
        if not u or not is_standard(u):
            raise SuperLetterError(f"{self.ctx.format_word(u)} is not a standard word")
        t = shirshov_bracket(u)
        if len(u) == 1:
            exp = Poly.monomial(u, self.ctx.field.one())
        else:
            v, w = standard_factorization(u)
            exp = self.skew_bracket(self.expansion(v), self.expansion(w))
        lw, lc = exp.leading()
        if lw != u or lc != 1:
            raise InvariantViolation(f"leading word of [{u}] is {lw} with coefficient {lc}")
        s = SuperLetter(u, t, exp)
        self._letters[u] = s
        return s

    def expansion(self, u: Word) -> Poly:
        return self.superletter(u).expansion

    def superword_expansion(self, sw: SuperWord) -> Poly:
        r = self._sw_exp.get(sw)
        if r is None:
            if not sw:
                r = Poly.one(self.ctx)
            elif len(sw) == 1:
                r = self.expansion(sw[0])
            else:
                r = self.superword_expansion(sw[:-1]) * self.expansion(sw[-1])
            self._sw_exp[sw] = r
        return r

    def combo_expansion(self, combo: dict) -> Poly:
        out: dict = {}
        for sw, c in combo.items():
            for w, a in self.superword_expansion(sw).terms.items():
                _acc(out, w, a * c)
        return Poly._raw(out)

    # -- decomposition of [[u][u1]] ------------------------------------------

    def _letter_bracket(self, u: Word, v: Word) -> dict:
        """[U, V] for two super-letters as a combination of super-words."""
        if word_gt(u, v):
            return self.decompose_bracket(u, v)
        one = self.ctx.field.one()
        if u == v:
            c = one - self.p(u, u)
            return {(u, u): c} if c else {}
        return {(u, v): one, (v, u): -self.p(u, v)}

    def _bracket_left(self, u: Word, combo: dict) -> dict:
        """[U, X] via [u, v w] = [u, v] w + p(u, v) v [u, w]."""
        out: dict = {}
        ctx = self.ctx
        cu = ctx.constitution(u)
        for sw, c in combo.items():
            for k, v in enumerate(sw):
                pre = sw[:k]
                coef = c * ctx.bicharacter(cu, ctx.constitution(drop_brackets(pre))) if pre else c
                for s, a in self._letter_bracket(u, v).items():
                    _acc(out, pre + s + sw[k + 1:], coef * a)
        return out

    def decompose_bracket(self, u: Word, u1: Word) -> dict:
        """[[u][u1]] for u > u1 as a combination of super-words in letters w
        with u > w > u1 and w <= u u1."""
        u, u1 = tuple(u), tuple(u1)
        key = (u, u1)
        r = self._decomp.get(key)
        if r is not None:
            return r
        if not word_gt(u, u1):
            raise SuperLetterError("decompose_bracket needs u > u1")
        ctx = self.ctx
        one = ctx.field.one()
        if len(u) == 1 or word_ge(u1, standard_factorization(u)[1]):
            if not is_standard(u + u1):
                raise InvariantViolation("product of standard words u > u1 is not standard")
            r = {(u + u1,): one}
        else:
            u3, u2 = standard_factorization(u)
            # Jacobi:  [[U3 U2] U1] = [U3 [U2 U1]] + p(u1,u2)^-1 [[U3 U1] U2]
            #                         + (p(u2,u1) - p(u1,u2)^-1) [U3 U1] U2
            r = dict(self._bracket_left(u3, self.decompose_bracket(u2, u1)))
            y = self.decompose_bracket(u3, u1)
            inv = self.p(u1, u2).inverse()
            p_yu2 = self.p(u3 + u1, u2)
            third = self.p(u2, u1) - inv
            for sw, c in y.items():
                _acc(r, sw + (u2,), c * (inv + third))
                _acc(r, (u2,) + sw, -c * inv * p_yu2)
        uu1 = u + u1
        for sw in r:
            for w in sw:
                if not (word_gt(u, w) and word_gt(w, u1) and word_ge(uu1, w)):
                    raise InvariantViolation(
                        f"letter {w} of [[{u}][{u1}]] violates u > w > u1, w <= u u1")
        self._decomp[key] = r
        return r

    # -- straightening --------------------------------------------------------

    def straighten(self, sw: SuperWord) -> dict:
        """Rewrite a super-word as a combination of monotonic super-words."""
        sw = tuple(tuple(w) for w in sw)
        r = self._straight.get(sw)
        if r is not None:
            return r
        ctx = self.ctx
        const = ctx.constitution(drop_brackets(sw))
        pending = {sw: ctx.field.one()}
        heap = [sw]
        out: dict = {}
        while heap:
            cur = heapq.heappop(heap)
            c = pending.pop(cur, None)
            if c is None or not c:
                continue
            done = self._straight.get(cur)
            if done is not None:
                for s, a in done.items():
                    _acc(out, s, a * c)
                continue
            i = next((k for k in range(len(cur) - 1) if word_gt(cur[k], cur[k + 1])), None)
            if i is None:
                _acc(out, cur, c)
                continue
            self.rewrites += 1
            if self.rewrites > self.fuel:
                raise InvariantViolation("straightening did not terminate within its fuel")
            a, uu, u1, b = cur[:i], cur[i], cur[i + 1], cur[i + 2:]
            new = {a + (u1, uu) + b: c * self.p(uu, u1)}
            for s, x in self.decompose_bracket(uu, u1).items():
                _acc(new, a + s + b, c * x)
            for s, x in new.items():
                if not superword_gt(cur, s):
                    raise InvariantViolation("straightening step did not decrease the super-word")
                if s not in pending:
                    heapq.heappush(heap, s)
                    pending[s] = x
                else:
                    _acc(pending, s, x)
                    if s not in pending:
                        pending[s] = ctx.field.zero()
        for s in out:
            if ctx.constitution(drop_brackets(s)) != const:
                raise InvariantViolation("straightening changed the constitution")
        self._straight[sw] = out
        return out

    def straighten_combo(self, combo: dict) -> dict:
        out: dict = {}
        for sw, c in combo.items():
            for s, a in self.straighten(sw).items():
                _acc(out, s, a * c)
        return out

    def poly_to_monotonic(self, f: Poly) -> dict:
        """Coordinates of f in the basis of monotonic super-words."""
        rest = dict(f.terms)
        out: dict = {}
        while rest:
            w = min(rest)
            c = rest[w]
            sw = tuple(lyndon_factorization(w))
            out[sw] = c
            for v, a in self.superword_expansion(sw).terms.items():
                _acc(rest, v, -a * c)
            if w in rest:
                raise InvariantViolation(f"leading word {w} survived its own elimination")
        return out


def calculus(ctx: QuantumContext) -> SuperCalculus:
    calc = ctx._cache.get("calculus")
    if calc is None:
        calc = ctx._cache["calculus"] = SuperCalculus(ctx)
    return calc


def skew_bracket(ctx, f: Poly, g: Poly) -> Poly:
    return calculus(ctx).skew_bracket(f, g)


def superletter_of(ctx, u: Word) -> SuperLetter:
    return calculus(ctx).superletter(u)


def decompose_bracket(ctx, u: Word, u1: Word) -> dict:
    return calculus(ctx).decompose_bracket(u, u1)


def straighten(ctx, sw: SuperWord) -> dict:
    return calculus(ctx).straighten(sw)


def poly_to_monotonic(ctx, f: Poly) -> dict:
    return calculus(ctx).poly_to_monotonic(f)


def combo_expansion(ctx, combo: dict) -> Poly:
    return calculus(ctx).combo_expansion(combo)


def format_combo(ctx: QuantumContext, combo: dict) -> str:
    from .expr import format_terms
    return format_terms([(c, format_superword(ctx, sw)) for sw, c in sorted(combo.items())])
