"""The coproduct of the free character Hopf algebra G * k<x>.

Letters are skew-primitive and group elements are group-like:

    delta(x_i) = x_i (x) 1 + g_i (x) x_i,      delta(g) = g (x) g,

and delta is extended as an algebra morphism into the tensor square, where
each side multiplies with the commutation rule of G * k<x>.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .algebra import GPoly, Poly, Tensor, _acc
from .context import QuantumContext
from .fields import FieldElement, multiplicative_order
from .superletters import InvariantViolation, calculus, drop_brackets
from .words import Word, word_gt


class BinomialError(ValueError):
    """The exponent is not an admissible height candidate."""


def _as_gpoly(ctx: QuantumContext, f) -> GPoly:
    return f.to_gpoly(ctx) if isinstance(f, Poly) else f


def delta_word(ctx: QuantumContext, w: Word) -> Tensor:
    """delta of a plain word, memoized by prefix."""
    memo = ctx._cache.setdefault("delta", {})
    w = tuple(w)
    r = memo.get(w)
    if r is not None:
        return r
    e, one = ctx.identity, ctx.field.one()
    if not w:
        r = Tensor._raw(ctx, 2, {((e, ()), (e, ())): one})
    elif len(w) == 1:
        i = w[0]
        r = Tensor._raw(ctx, 2, {((e, w), (e, ())): one,
                                 ((ctx.variables[i].g, ()), (e, w)): one})
    else:
        r = delta_word(ctx, w[:-1]) * delta_word(ctx, w[-1:])
    memo[w] = r
    return r


def delta(ctx: QuantumContext, f) -> Tensor:
    """The coproduct of an element of G * k<x>."""
    f = _as_gpoly(ctx, f)
    out: dict = {}
    grp = ctx.group
    e = ctx.identity
    for (g, w), c in f.terms.items():
        for ((a, u), (b, v)), x in delta_word(ctx, w).terms.items():
            # (g (x) g)(a u (x) b v) = ga u (x) gb v, no scalars since g is on the left
            key = ((grp.multiply(g, a), u), (grp.multiply(g, b), v)) if g != e else ((a, u), (b, v))
            _acc(out, key, c * x)
    return Tensor._raw(ctx, 2, out)


def _delta_on_factor(t: Tensor, k: int) -> Tensor:
    """Apply delta to the k-th tensor factor, raising the arity by one."""
    ctx = t.ctx
    out: dict = {}
    for key, c in t.terms.items():
        g, w = key[k]
        d = delta(ctx, GPoly._raw(ctx, {(g, w): ctx.field.one()}))
        for pair, x in d.terms.items():
            _acc(out, key[:k] + pair + key[k + 1:], c * x)
    return Tensor._raw(ctx, t.arity + 1, out)


def delta_left(ctx: QuantumContext, f) -> Tensor:
    """(delta (x) id) delta f."""
    return _delta_on_factor(delta(ctx, f), 0)


def delta_right(ctx: QuantumContext, f) -> Tensor:
    """(id (x) delta) delta f."""
    return _delta_on_factor(delta(ctx, f), 1)


# ---------------------------------------------------------------------------
# super-letters


@dataclass
class MiddleTerm:
    right: Word
    left: dict  # monotonic super-word -> coefficient
    group: tuple


@dataclass
class CoproductCertificate:
    """Decomposition of delta([u]) into extreme and middle terms."""
    word: Word
    middle: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def coproduct_certificate(ctx: QuantumContext, u: Word, strict: bool = False) -> CoproductCertificate:
    """Check that delta([u]) = [u] (x) 1 + g_u (x) [u] + sum G(W'') W' (x) W''
    with every W' a nonempty super-word in letters smaller than [u].

    With ``strict`` the first violation raises :class:`InvariantViolation`.
    """
    u = tuple(u)
    calc = calculus(ctx)
    U = calc.expansion(u)
    e = ctx.identity
    gu = ctx.group_of_word(u)
    rest = dict(delta(ctx, U).terms)
    for w, c in U.terms.items():
        _acc(rest, ((e, w), (e, ())), -c)
        _acc(rest, ((gu, ()), (e, w)), -c)
    cert = CoproductCertificate(u)
    cu = ctx.constitution(u)
    by_right: dict = {}
    for ((g, w1), (h, w2)), c in rest.items():
        if h != e:
            cert.violations.append(f"right factor carries a group part: {h}")
            continue
        if not w1 or not w2:
            cert.violations.append("extreme term left over after subtracting [u] (x) 1 and g_u (x) [u]")
            continue
        if tuple(a + b for a, b in zip(ctx.constitution(w1), ctx.constitution(w2))) != cu:
            cert.violations.append("constitutions of the two sides do not add up")
            continue
        if g != ctx.group_of_word(w2):
            cert.violations.append(f"left group part {g} is not G(W'') for W'' = {w2}")
            continue
        _acc(by_right.setdefault(w2, {}), w1, c)
    for w2 in sorted(by_right):
        left = Poly._raw(by_right[w2])
        if not left:
            continue
        coords = calc.poly_to_monotonic(left)
        for sw in coords:
            if not sw:
                cert.violations.append("empty left super-word")
            for letter in sw:
                if not word_gt(u, letter):
                    cert.violations.append(
                        f"left letter [{ctx.format_word(letter)}] is not smaller than [{ctx.format_word(u)}]")
        cert.middle.append(MiddleTerm(w2, coords, ctx.group_of_word(w2)))
    if strict and cert.violations:
        raise InvariantViolation(cert.violations[0])
    return cert


def superword_delta_shape(ctx: QuantumContext, sw) -> bool:
    """delta(W) = W (x) 1 + G(W) (x) W + terms whose two sides share W's constitution."""
    calc = calculus(ctx)
    W = calc.superword_expansion(tuple(sw))
    e = ctx.identity
    cw = ctx.constitution(drop_brackets(sw))
    gw = ctx.group_of_word(drop_brackets(sw))
    rest = dict(delta(ctx, W).terms)
    for w, c in W.terms.items():
        _acc(rest, ((e, w), (e, ())), -c)
        _acc(rest, ((gw, ()), (e, w)), -c)
    for ((g, w1), (h, w2)), _ in rest.items():
        if not w1 or not w2 or h != e or g != ctx.group_of_word(w2):
            return False
        if tuple(a + b for a, b in zip(ctx.constitution(w1), ctx.constitution(w2))) != cw:
            return False
    return True


def is_skew_primitive(ctx: QuantumContext, f):
    """The group element g with delta(f) = f (x) 1 + g (x) f, or None."""
    f = _as_gpoly(ctx, f)
    if not f:
        raise ValueError("the zero element is not tested for skew-primitivity")
    d = delta(ctx, f)
    grp = ctx.group
    candidates = set()
    for g, w in f.terms:
        base = ctx.group_of_word(w)
        candidates.add(base)
        for h, _ in f.terms:
            candidates.add(grp.multiply(h, base))
    left = Tensor.pure(f, GPoly.one(ctx))
    for g in sorted(candidates):
        if d == left + Tensor.pure(GPoly.group_element(ctx, g), f):
            return g
    return None


# ---------------------------------------------------------------------------
# quantum binomial


def admissible_exponents(p: FieldElement, bound: int) -> list:
    """The exponents t, t*l, t*l^2, ... up to ``bound`` for a scalar of order t."""
    t = multiplicative_order(p)
    if t == math.inf or t > bound:
        return []
    out = [t]
    l = p.field.characteristic()
    if l:
        h = t * l
        while h <= bound:
            out.append(h)
            h *= l
    return out


def binomial_identity_holds(p: FieldElement, h: int) -> bool:
    """(a + b)^h == a^h + b^h in the algebra k<a, b>/(a b - p b a).

    Elements are dicts (i, j) -> coeff for the normal words b^i a^j, with
    (b^i a^j)(b^k a^l) = p^(j k) b^(i+k) a^(j+l).
    """
    one = p.field.one()
    x = {(0, 1): one, (1, 0): one}
    acc = {(0, 0): one}
    for _ in range(h):
        nxt: dict = {}
        for (i, j), c in acc.items():
            for (k, l), d in x.items():
                _acc(nxt, (i + k, j + l), c * d * p ** (j * k))
        acc = nxt
    return acc == {(0, h): one, (h, 0): one}


def quantum_binomial_check(ctx: QuantumContext, u: Word, h: int) -> bool:
    """(U (x) 1 + g_u (x) U)^h = U^h (x) 1 + g_u^h (x) U^h, with U the super-letter of u."""
    p = ctx.p_words(u, u)
    if h not in admissible_exponents(p, h):
        raise BinomialError(f"{h} is not of the form t or t*l^k for the order of p(u, u) = {p}")
    return binomial_identity_holds(p, h)
