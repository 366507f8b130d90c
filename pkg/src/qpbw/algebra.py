"""Noncommutative polynomials, their G-extended version and tensor powers.

``Poly`` is an element of k<x_1, ..., x_n>: a dict word -> nonzero coefficient.
Its product is concatenation and needs no context.

``GPoly`` is an element of G * k<x_1, ..., x_n>.  Terms are keyed by
``(g, word)`` and always written with the group element on the left; moving
a group element h leftwards past a word w produces the scalar chi^w(h).

``Tensor`` is an element of the k-fold tensor power of G * k<x>, with the
componentwise product.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .context import QuantumContext
from .fields import FieldElement
from .words import Word


class AlgebraError(ValueError):
    pass


def _acc(d: dict, key, c):
    v = d.get(key)
    if v is None:
        if c:
            d[key] = c
    else:
        v = v + c
        if v:
            d[key] = v
        else:
            del d[key]


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, word: Word, coeff) -> "Poly":
        return cls._raw({tuple(word): coeff} if coeff else {})

    @classmethod
    def letter(cls, ctx: QuantumContext, i: int) -> "Poly":
        return cls._raw({(i,): ctx.field.one()})

    @classmethod
    def one(cls, ctx: QuantumContext) -> "Poly":
        return cls._raw({(): ctx.field.one()})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return Poly._raw(out)

    def __neg__(self):
        return Poly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, -c)
        return Poly._raw(out)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly._raw({})
        return Poly._raw({w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    _acc(out, u + v, a * b)
            return Poly._raw(out)
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if not self.terms:
            raise AlgebraError("power of the zero polynomial")
        field = next(iter(self.terms.values())).field
        out = Poly._raw({(): field.one()})
        for _ in range(k):
            out = out * self
        return out

    def items(self):
        """Terms from the greatest word down."""
        return sorted(self.terms.items())

    def leading(self) -> tuple:
        """(leading word, its coefficient) -- the greatest word present."""
        if not self.terms:
            raise AlgebraError("the zero polynomial has no leading word")
        w = min(self.terms)
        return w, self.terms[w]

    def constitutions(self, ctx: QuantumContext) -> set:
        return {ctx.constitution(w) for w in self.terms}

    def constitution(self, ctx: QuantumContext):
        """The common constitution of a homogeneous polynomial."""
        cs = self.constitutions(ctx)
        if len(cs) != 1:
            raise AlgebraError("polynomial is not homogeneous in constitution")
        return cs.pop()

    def degree(self, ctx: QuantumContext) -> int:
        return max((ctx.degree(w) for w in self.terms), default=0)

    def to_gpoly(self, ctx: QuantumContext, g=None) -> "GPoly":
        g = ctx.identity if g is None else g
        return GPoly._raw(ctx, {(g, w): c for w, c in self.terms.items()})


def weighted_degree(ctx: QuantumContext, f) -> int:
    """Largest weighted degree of a word in f; group-only terms count 0, zero gives 0."""
    if isinstance(f, GPoly):
        return max((ctx.degree(w) for _, w in f.terms), default=0)
    return f.degree(ctx)


def leading_word(f: Poly) -> tuple:
    return f.leading()


class GPoly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: QuantumContext, terms: Optional[dict] = None):
        self.ctx = ctx
        self.terms = {}
        for (g, w), c in (terms or {}).items():
            _acc(self.terms, (ctx.group.element(g), tuple(w)), ctx.field(c))

    @classmethod
    def _raw(cls, ctx, terms) -> "GPoly":
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        return p

    @classmethod
    def group_element(cls, ctx, g) -> "GPoly":
        return cls._raw(ctx, {(ctx.group.element(g), ()): ctx.field.one()})

    @classmethod
    def letter(cls, ctx, i: int) -> "GPoly":
        return cls._raw(ctx, {(ctx.identity, (i,)): ctx.field.one()})

    @classmethod
    def one(cls, ctx) -> "GPoly":
        return cls._raw(ctx, {(ctx.identity, ()): ctx.field.one()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, GPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "GPoly") -> "GPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return GPoly._raw(self.ctx, out)

    def __neg__(self):
        return GPoly._raw(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "GPoly") -> "GPoly":
        return self + (-other)

    def scale(self, c) -> "GPoly":
        if not c:
            return GPoly._raw(self.ctx, {})
        return GPoly._raw(self.ctx, {k: a * c for k, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GPoly):
            return multiply(self, other)
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "GPoly":
        out = GPoly.one(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def items(self):
        """Terms in word order (greatest word first), ties broken by group element."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def is_plain(self) -> bool:
        e = self.ctx.identity
        return all(g == e for g, _ in self.terms)

    def to_poly(self) -> Poly:
        if not self.is_plain():
            raise AlgebraError("polynomial has group parts")
        return Poly._raw({w: c for (_, w), c in self.terms.items()})

    def degree(self) -> int:
        return weighted_degree(self.ctx, self)


def multiply(f: GPoly, g: GPoly) -> GPoly:
    """Product in G * k<x>: (a u)(b v) = chi^u(b) (ab)(uv)."""
    ctx = f.ctx
    grp = ctx.group
    out: dict = {}
    for (a, u), x in f.terms.items():
        cu = ctx.constitution(u) if u else None
        for (b, v), y in g.terms.items():
            c = x * y
            if cu is not None and b != ctx.identity:
                c = c * ctx.chi_of(cu, b)
            _acc(out, (grp.multiply(a, b), u + v), c)
    return GPoly._raw(ctx, out)


class Tensor:
    """Element of (G * k<x>)^{(tensor) arity}; keys are tuples of (g, word)."""
    __slots__ = ("ctx", "arity", "terms")

    def __init__(self, ctx: QuantumContext, arity: int, terms: Optional[dict] = None):
        self.ctx = ctx
        self.arity = arity
        self.terms = {}
        for k, c in (terms or {}).items():
            _acc(self.terms, k, c)

    @classmethod
    def _raw(cls, ctx, arity, terms):
        t = cls.__new__(cls)
        t.ctx, t.arity, t.terms = ctx, arity, terms
        return t

    @classmethod
    def pure(cls, *factors: GPoly) -> "Tensor":
        """f_1 (x) f_2 (x) ... (x) f_k."""
        ctx = factors[0].ctx
        out: dict = {(): ctx.field.one()}
        for f in factors:
            nxt: dict = {}
            for k, c in out.items():
                for gw, a in f.terms.items():
                    _acc(nxt, k + (gw,), c * a)
            out = nxt
        return cls._raw(ctx, len(factors), out)

    @classmethod
    def one(cls, ctx, arity=2):
        return cls._raw(ctx, arity, {((ctx.identity, ()),) * arity: ctx.field.one()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Tensor):
            return self.arity == other.arity and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "Tensor") -> "Tensor":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Tensor._raw(self.ctx, self.arity, out)

    def __neg__(self):
        return Tensor._raw(self.ctx, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Tensor._raw(self.ctx, self.arity, {})
        return Tensor._raw(self.ctx, self.arity, {k: a * c for k, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return tensor_multiply(self, other)
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: tuple((w, g) for g, w in kv[0]))


def tensor_multiply(s: Tensor, t: Tensor) -> Tensor:
    ctx = s.ctx
    grp = ctx.group
    e = ctx.identity
    out: dict = {}
    for k1, x in s.terms.items():
        for k2, y in t.terms.items():
            c = x * y
            key = []
            for (a, u), (b, v) in zip(k1, k2):
                if u and b != e:
                    c = c * ctx.chi_of(ctx.constitution(u), b)
                key.append((grp.multiply(a, b), u + v))
            _acc(out, tuple(key), c)
    return Tensor._raw(ctx, s.arity, out)


def sum_polys(polys: Iterable[Poly]) -> Poly:
    out: dict = {}
    for p in polys:
        for w, c in p.terms.items():
            _acc(out, w, c)
    return Poly._raw(out)
