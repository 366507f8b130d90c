"""PBW bases of finitely presented character Hopf algebras.

A :class:`Presentation` is a quantum context plus relations.  Two modes:

* ``graded``: every relation is a constitution-homogeneous polynomial
  without group parts.  The relation ideal splits by degree and each slice
  is an echelon basis over the words of that degree.
* ``character``: each relation is a homogeneous polynomial top plus a tail
  of strictly lower degree that may carry group elements.  Everything is
  computed inside K * k<x> for the finite subgroup K generated by the group
  parts of the relations, with the ideal truncated by degree and filtered
  (cumulative) rather than graded.

In both modes a standard word u is *hard* when it is not the leading term
of an ideal element whose remaining terms are smaller words of the same
degree or G-words of lower degree; with the column order used here this is
exactly "u is not a pivot".
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .algebra import GPoly, Poly
from .context import ContextError, QuantumContext
from .coproduct import admissible_exponents
from .fields import multiplicative_order
from .linalg import Echelon
from .superletters import (
    InvariantViolation, calculus, drop_brackets, monotonic_superwords,
)
from .words import enumerate_standard, is_standard, word_gt, words_of_degree


class PresentationError(ValueError):
    """A presentation or construction the engine refuses to handle."""


GRADED, CHARACTER = "graded", "character"


def _group_key(ctx: QuantumContext):
    e = ctx.identity
    deg = ctx.degree

    def key(col):
        g, w = col
        return (-deg(w), 0 if g != e else 1, w, g)
    return key


class Presentation:
    """Relations over a quantum context, with a lazily built ideal."""

    def __init__(self, ctx: QuantumContext, relations, mode: str = GRADED):
        if mode not in (GRADED, CHARACTER):
            raise PresentationError(f"unknown mode {mode!r}")
        self.ctx = ctx
        self.mode = mode
        self.relations = [r.to_gpoly(ctx) if isinstance(r, Poly) else r for r in relations]
        for r in self.relations:
            if not r:
                raise PresentationError("zero relation")
        if mode == GRADED:
            self._check_graded()
            self.subgroup = [ctx.identity]
            self.generators = [r.to_poly() for r in self.relations]
        else:
            self._check_character()
            gens = sorted({g for r in self.relations for g, _ in r.terms} - {ctx.identity})
            try:
                self.subgroup = ctx.group.generated_subgroup(gens)
            except ContextError as e:
                raise PresentationError(
                    "the group parts of the relations generate an infinite or too large subgroup") from e
            self.generators = [c for r in self.relations for c in self._isotypic(r)]
        self._slices: dict = {}
        self._new: dict = {}
        self._built = 0 if mode == CHARACTER else None

    # -- validation ------------------------------------------------------

    def _check_graded(self):
        for r in self.relations:
            if not r.is_plain():
                raise PresentationError("graded mode relations may not contain group elements")
            consts = {self.ctx.constitution(w) for _, w in r.terms}
            if len(consts) != 1:
                raise PresentationError("graded mode relations must be homogeneous in constitution")

    def _check_character(self):
        ctx = self.ctx
        for r in self.relations:
            d = r.degree()
            if d == 0:
                raise PresentationError("a relation must involve the variables")
            top = [(g, w) for g, w in r.terms if ctx.degree(w) == d]
            if any(g != ctx.identity for g, _ in top):
                raise PresentationError("the top-degree part of a relation may not carry group elements")
            if len({ctx.constitution(w) for _, w in top}) != 1:
                raise PresentationError("the top-degree part of a relation must be homogeneous in constitution")

    def _isotypic(self, r: GPoly) -> list:
        """Split r into parts on which conjugation by G acts by one character."""
        ctx = self.ctx
        gens = [tuple(1 if j == i else 0 for j in range(ctx.group.rank)) for i in range(ctx.group.rank)]
        parts: dict = {}
        for (g, w), c in r.terms.items():
            cw = ctx.constitution(w)
            sig = tuple(ctx.chi_of(cw, h) for h in gens)
            parts.setdefault(sig, {})[(g, w)] = c
        return [GPoly._raw(ctx, parts[s]) for s in sorted(parts, key=str)]

    # -- ideal ------------------------------------------------------------

    @property
    def graded(self) -> bool:
        return self.mode == GRADED

    def column_key(self):
        return None if self.graded else _group_key(self.ctx)

    def slice(self, d: int) -> Echelon:
        """Graded: the degree-d part of the ideal.  Character: the ideal
        truncated to G-words of degree <= d."""
        if d < 0:
            raise PresentationError("negative degree")
        if self.graded:
            s = self._slices.get(d)
            if s is None:
                s = self._build_graded(d)
            return s
        while self._built < d:
            self._build_filtered(self._built + 1)
        if d == 0:
            return self._slices.setdefault(0, Echelon(self.column_key()))
        return self._slices[d]

    def _build_graded(self, d: int) -> Echelon:
        ctx = self.ctx
        E = Echelon()
        for r in self.generators:
            if r.degree(ctx) == d:
                E.insert(r.terms)
        for i, wt in enumerate(ctx.weights):
            if d - wt >= 1:
                prev = self.slice(d - wt)
                for row in list(prev.rows.values()):
                    E.insert({(i,) + w: c for w, c in row.items()})
                    E.insert({w + (i,): c for w, c in row.items()})
        self._slices[d] = E
        return E

    def _build_filtered(self, d: int):
        ctx = self.ctx
        prev = self._slices.get(d - 1)
        if prev is None:
            prev = Echelon(self.column_key())
        E = prev.copy()
        new = []

        def add(vec):
            p = E.insert(vec)
            if p is not None:
                new.append(p)

        for r in self.generators:
            if r.degree() == d:
                for h in self.subgroup:
                    add((GPoly.group_element(ctx, h) * r).terms)
        for i, wt in enumerate(ctx.weights):
            if d - wt >= 1:
                src = self._slices[d - wt]
                chi = ctx.variables[i].chi
                for p in self._new.get(d - wt, []):
                    row = src.rows[p]
                    add({(g, (i,) + w): c * ctx.character_eval(chi, g) for (g, w), c in row.items()})
                    add({(g, w + (i,)): c for (g, w), c in row.items()})
        self._slices[d] = E
        self._new[d] = new
        self._built = d

    def top_projection(self, d: int) -> Echelon:
        """Echelon of the degree-d parts of ideal elements of degree <= d."""
        E = self.slice(d)
        if self.graded:
            return E
        key = ("top", d)
        cached = self._slices.get(key)
        if cached is not None:
            return cached
        T = Echelon(self.column_key())
        deg = self.ctx.degree
        for row in E.rows.values():
            top = {col: c for col, c in row.items() if deg(col[1]) == d}
            if top:
                T.insert(top)
        self._slices[key] = T
        return T

    # -- vectors ----------------------------------------------------------

    def vector(self, f) -> dict:
        """Column representation of a polynomial or G-polynomial."""
        if self.graded:
            if isinstance(f, GPoly):
                f = f.to_poly()
            return dict(f.terms)
        if isinstance(f, Poly):
            f = f.to_gpoly(self.ctx)
        return dict(f.terms)

    def letter_column(self, w):
        return w if self.graded else (self.ctx.identity, w)


def ideal_component(P: Presentation, d: int) -> Echelon:
    return P.slice(d)


def oracle_dimension(P: Presentation, d: int) -> int:
    """Dimension of the degree-d component of the quotient, by plain linear algebra.

    In character mode this is the dimension of F_d / F_{d-1} divided by |K|,
    the number of G-super-words per group element.
    """
    ctx = P.ctx
    nwords = sum(1 for _ in words_of_degree(ctx.n, d, ctx.weights))
    if P.graded:
        return nwords - (P.slice(d).rank if d >= 1 else 0)
    k = len(P.subgroup)
    lower = P.slice(d - 1).rank if d >= 1 else 0
    diff = k * nwords - (P.slice(d).rank - lower)
    if diff % k:
        raise InvariantViolation(f"filtered dimension jump {diff} at degree {d} is not a multiple of |K| = {k}")
    return diff // k


def is_hard(P: Presentation, u) -> bool:
    u = tuple(u)
    if not is_standard(u):
        raise PresentationError(f"{P.ctx.format_word(u)} is not a standard word")
    d = P.ctx.degree(u)
    return P.letter_column(u) not in P.slice(d).pivots()


def compute_hard_letters(P: Presentation, max_degree: int) -> list:
    """Hard super-letters of degree <= max_degree, greatest first."""
    calc = calculus(P.ctx)
    return [calc.superletter(u) for u in enumerate_standard(P.ctx.n, max_degree, P.ctx.weights)
            if is_hard(P, u)]


def height_candidates(P: Presentation, u, max_degree: int) -> list:
    d = P.ctx.degree(u)
    return admissible_exponents(P.ctx.p_words(u, u), max_degree // d)


def _collapses(P: Presentation, u, h: int) -> bool:
    """Whether [u]^h lies in span(super-words in letters < [u]) + lower G-words + ideal."""
    ctx = P.ctx
    calc = calculus(ctx)
    n = h * ctx.degree(u)
    E = P.top_projection(n).copy()
    letters = [w for w in enumerate_standard(ctx.n, n, ctx.weights) if word_gt(u, w)]
    for sw in monotonic_superwords(ctx, letters, n):
        E.insert(P.vector(calc.superword_expansion(sw)))
    return E.contains(P.vector(calc.superword_expansion((u,) * h)))


def compute_height(P: Presentation, u, max_degree: int):
    """Smallest admissible h with [u]^h collapsing, or math.inf up to the bound."""
    u = tuple(u)
    if not is_hard(P, u):
        raise PresentationError(f"[{P.ctx.format_word(u)}] is not hard")
    for h in height_candidates(P, u, max_degree):
        if _collapses(P, u, h):
            return h
    return math.inf


# ---------------------------------------------------------------------------
# PBW report


@dataclass
class PBWReport:
    mode: str
    max_degree: int
    hard_letters: list
    heights: dict
    basis: dict
    dropped: dict
    hilbert: dict
    oracle: dict
    subgroup_order: int = 1
    notes: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.hilbert == self.oracle

    @property
    def total(self) -> int:
        return sum(self.hilbert.values())


def enumerate_pbw(P: Presentation, max_degree: int) -> PBWReport:
    ctx = P.ctx
    hard = [s.word for s in compute_hard_letters(P, max_degree)]
    heights = {u: compute_height(P, u, max_degree) for u in hard}
    basis, dropped, hilbert, oracle = {}, {}, {}, {}
    for d in range(max_degree + 1):
        ws = monotonic_superwords(ctx, hard, d, heights) if d else [()]
        basis[d] = ws
        dropped[d] = [drop_brackets(sw) for sw in ws]
        hilbert[d] = len(ws)
        oracle[d] = oracle_dimension(P, d) if d else 1
    notes = []
    if not P.graded:
        notes.append(f"G-words restricted to the subgroup of order {len(P.subgroup)} "
                     "generated by the group parts of the relations")
    for u, h in heights.items():
        if h == math.inf and multiplicative_order(ctx.p_words(u, u)) != math.inf:
            notes.append(f"height of [{ctx.format_word(u)}] is infinite up to degree {max_degree}")
    return PBWReport(P.mode, max_degree, hard, heights, basis, dropped, hilbert, oracle,
                     len(P.subgroup), notes)


def dropped_words_independent(P: Presentation, report: PBWReport) -> dict:
    """Per degree, whether the bracket-dropped basis words are independent modulo the ideal."""
    out = {}
    for d in range(1, report.max_degree + 1):
        if P.graded:
            E = P.slice(d).copy()
            cols = [w for w in report.dropped[d]]
        else:
            E = P.top_projection(d).copy()
            cols = [(P.ctx.identity, w) for w in report.dropped[d]]
        one = P.ctx.field.one()
        out[d] = all(E.insert({c: one}) is not None for c in cols)
    return out


def finiteness_verdict(P: Presentation, report: PBWReport) -> str:
    """Finite dimensionality of the algebra generated by the variables.

    "finite-dimensional" needs every hard letter to have finite height and
    the quotient to vanish on a full window of degrees above the top degree
    of the restricted PBW words; "infinite-dimensional" is reported when a
    hard letter has p(u, u) of infinite order.
    """
    ctx = P.ctx
    if any(multiplicative_order(ctx.p_words(u, u)) == math.inf for u in report.hard_letters):
        return "infinite-dimensional"
    if any(h == math.inf for h in report.heights.values()):
        return "undetermined up to degree bound"
    top = sum((h - 1) * ctx.degree(u) for u, h in report.heights.items())
    window = range(top + 1, top + max(ctx.weights) + 1)
    if window.stop - 1 > report.max_degree:
        return "undetermined up to degree bound"
    if all(report.oracle[d] == 0 for d in window):
        return "finite-dimensional"
    return "undetermined up to degree bound"


# ---------------------------------------------------------------------------
# filtration


@dataclass
class Vocabulary:
    words: list          # greatest first
    M: int
    L: int
    index: dict          # word -> n(word)
    hard: list
    bound: int

    def n(self, w) -> int:
        return self.index[tuple(w)]

    def letter_degree(self, ctx: QuantumContext, u) -> int:
        return self.M ** (self.L + 1) * ctx.degree(u) + self.M ** self.n(u)


def build_vocabulary_R(P: Presentation, report: PBWReport) -> Vocabulary:
    ctx = P.ctx
    if not report.hard_letters:
        raise PresentationError("no hard letters")
    top = max(ctx.degree(u) for u in report.hard_letters)
    if 2 * top > report.max_degree:
        raise PresentationError(
            f"hard letters reach degree {top}, more than half the bound {report.max_degree}; "
            "the hard set cannot be certified finite")
    finite = [h for h in report.heights.values() if h != math.inf]
    bound = top * (max(finite) if finite else 2)
    words = []
    for d in range(1, bound + 1):
        words.extend(words_of_degree(ctx.n, d, ctx.weights))
    words.sort()
    N = len(words)
    index = {w: N - i for i, w in enumerate(words)}
    M = max(len(w) for w in words) + 1
    L = index[(0,)]
    return Vocabulary(words, M, L, index, list(report.hard_letters), bound)


def filtration_degree(ctx: QuantumContext, voc: Vocabulary, sw) -> int:
    total = 0
    hard = set(voc.hard)
    for w in sw:
        if tuple(w) not in hard:
            raise PresentationError(f"[{ctx.format_word(w)}] is not a hard letter")
        total += voc.letter_degree(ctx, w)
    return total


class BasisDecomposer:
    """Coordinates of elements in the PBW basis of the quotient."""

    def __init__(self, P: Presentation, report: PBWReport):
        self.P = P
        self.report = report
        self._cache: dict = {}

    def _space(self, d: int):
        s = self._cache.get(d)
        if s is not None:
            return s
        P, ctx = self.P, self.P.ctx
        calc = calculus(ctx)
        ideal = P.slice(d)
        B = Echelon(P.column_key(), track=True)
        if P.graded:
            labels = [(ctx.identity, sw) for sw in self.report.basis[d]]
        else:
            labels = [(g, sw) for e in range(d + 1) for sw in self.report.basis[e] for g in P.subgroup]
        for g, sw in labels:
            f = GPoly.group_element(ctx, g) * calc.superword_expansion(sw).to_gpoly(ctx)
            r = ideal.remainder(P.vector(f))
            if B.insert(r, (g, sw)) is None:
                raise InvariantViolation("PBW basis elements are dependent modulo the ideal")
        self._cache[d] = (ideal, B)
        return ideal, B

    def decompose(self, f, d: int) -> dict:
        ideal, B = self._space(d)
        r = ideal.remainder(self.P.vector(f))
        rest, coords = B.coordinates(r)
        if rest:
            raise InvariantViolation("element is not spanned by the PBW basis modulo the ideal")
        return coords


@dataclass
class GradedCheck:
    kind: str            # "pair" or "power"
    letters: tuple
    exponent: int
    degree: Optional[int]
    bound: int

    @property
    def ok(self) -> bool:
        return self.degree is None or self.degree < self.bound


def associated_graded_check(P: Presentation, report: PBWReport, voc: Vocabulary = None) -> list:
    """Degree drops of commutators of hard pairs and of h-th powers of finite-height letters."""
    ctx = P.ctx
    calc = calculus(ctx)
    voc = voc or build_vocabulary_R(P, report)
    dec = BasisDecomposer(P, report)
    D = report.max_degree

    def deg_of(coords):
        return max((filtration_degree(ctx, voc, sw) for (_, sw) in coords), default=None)

    out = []
    hard = report.hard_letters
    for a, u in enumerate(hard):
        for v in hard[a + 1:]:
            d = ctx.degree(u) + ctx.degree(v)
            if d > D:
                continue
            f = calc.superword_expansion((u, v)) - calc.superword_expansion((v, u)).scale(ctx.p_words(u, v))
            coords = dec.decompose(f, d)
            bound = voc.letter_degree(ctx, u) + voc.letter_degree(ctx, v)
            out.append(GradedCheck("pair", (u, v), 1, deg_of(coords), bound))
    for u in hard:
        h = report.heights[u]
        if h == math.inf:
            continue
        d = h * ctx.degree(u)
        coords = dec.decompose(calc.superword_expansion((u,) * h), d)
        out.append(GradedCheck("power", (u,), h, deg_of(coords), h * voc.letter_degree(ctx, u)))
    return out

