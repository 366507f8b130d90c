"""Abelian group data attached to quantum variables.

Group elements are plain integer tuples (exponent vectors); the
:class:`AbelianGroup` knows how to reduce and multiply them.  A
:class:`QuantumContext` bundles the ground field, the group and the
variables, and caches the bicharacter matrix ``p[i][j] = chi_i(g_j)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .fields import Field, FieldElement, FieldError, Rationals, multiplicative_order

GroupElement = tuple
Constitution = tuple


class ContextError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/m_1 + ... + Z/m_k with named generators."""
    free_rank: int = 0
    torsion: tuple = ()
    names: Optional[tuple] = None

    def __post_init__(self):
        if self.free_rank < 0:
            raise ContextError("free rank must be nonnegative")
        if any(m < 2 for m in self.torsion):
            raise ContextError("torsion orders must be >= 2")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"g{i + 1}" for i in range(self.rank)))
        elif len(self.names) != self.rank:
            raise ContextError("one name per group generator expected")
        else:
            object.__setattr__(self, "names", tuple(self.names))

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self):
        return math.prod(self.torsion) if self.is_finite else math.inf

    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def element(self, exps: Sequence[int]) -> GroupElement:
        if len(exps) != self.rank:
            raise ContextError(f"group element needs {self.rank} exponents, got {len(exps)}")
        f = self.free_rank
        return tuple(int(e) for e in exps[:f]) + tuple(
            int(e) % m for e, m in zip(exps[f:], self.torsion))

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        f = self.free_rank
        if not self.torsion:
            return tuple(x + y for x, y in zip(a, b))
        return tuple(x + y for x, y in zip(a[:f], b[:f])) + tuple(
            (x + y) % m for x, y, m in zip(a[f:], b[f:], self.torsion))

    def power(self, a: GroupElement, k: int) -> GroupElement:
        return self.element([x * k for x in a])

    def inverse(self, a: GroupElement) -> GroupElement:
        return self.power(a, -1)

    def generated_subgroup(self, gens: Sequence[GroupElement], limit: int = 10_000) -> list:
        """Elements of the subgroup generated by ``gens``; refuses infinite subgroups."""
        e = self.identity()
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.multiply(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
                        if len(seen) > limit:
                            raise ContextError("generated subgroup is infinite or too large")
            frontier = nxt
        return sorted(seen)

    def format(self, a: GroupElement) -> str:
        parts = []
        for name, e in zip(self.names, a):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class Character:
    """A character G -> k*, given by its values on the group generators."""
    values: tuple

    def __call__(self, g: GroupElement) -> FieldElement:
        out = None
        for v, e in zip(self.values, g):
            if e:
                t = v ** e
                out = t if out is None else out * t
        return out if out is not None else self.values[0].field.one() if self.values else None


@dataclass(frozen=True)
class QuantumVariable:
    name: str
    g: GroupElement
    chi: Character
    weight: int = 1


@dataclass(eq=False)
class QuantumContext:
    """Field, group and quantum variables x_1 > x_2 > ... > x_n."""
    field: Field
    group: AbelianGroup
    variables: tuple
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ContextError("variable names must be distinct")
        clash = set(names) & set(self.group.names)
        if clash:
            raise ContextError(f"names used for both variables and group generators: {sorted(clash)}")
        for v in self.variables:
            if v.weight < 1:
                raise ContextError(f"weight of {v.name} must be a positive integer")
            if len(v.g) != self.group.rank or len(v.chi.values) != self.group.rank:
                raise ContextError(f"variable {v.name} does not match the group rank")
            self._check_character(v)
        self.n = len(self.variables)
        self.names = tuple(names)
        self.weights = tuple(v.weight for v in self.variables)
        self.identity = self.group.identity()
        self.pmatrix = tuple(
            tuple(self.character_eval(vi.chi, vj.g) for vj in self.variables)
            for vi in self.variables)

    def _check_character(self, v: QuantumVariable):
        f = self.group.free_rank
        for j, val in enumerate(v.chi.values):
            if not isinstance(val, FieldElement) or val.field != self.field:
                raise ContextError(f"character value of {v.name} is not in {self.field}")
            if val.is_zero():
                raise ContextError(f"character value of {v.name} must be nonzero")
            if j >= f:
                m = self.group.torsion[j - f]
                if val ** m != 1:
                    raise ContextError(
                        f"character of {v.name} at torsion generator {self.group.names[j]} "
                        f"must have order dividing {m}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def diagonal(cls, pmatrix, field: Optional[Field] = None, names=None, weights=None):
        """Context with G = Z^n, g_i = e_i and chi_i(e_j) = pmatrix[i][j]."""
        field = field or Rationals()
        n = len(pmatrix)
        names = names or [f"x{i + 1}" for i in range(n)]
        weights = weights or [1] * n
        group = AbelianGroup(free_rank=n, names=tuple(f"g{i + 1}" for i in range(n)))
        variables = []
        for i in range(n):
            g = tuple(1 if j == i else 0 for j in range(n))
            chi = Character(tuple(field(pmatrix[i][j]) for j in range(n)))
            variables.append(QuantumVariable(names[i], g, chi, weights[i]))
        return cls(field, group, tuple(variables))

    # -- group data of words ------------------------------------------------

    def character_eval(self, chi: Character, g: GroupElement) -> FieldElement:
        val = chi(g)
        return self.field.one() if val is None else val

    def constitution(self, word) -> Constitution:
        c = [0] * self.n
        for i in word:
            c[i] += 1
        return tuple(c)

    def degree(self, word) -> int:
        w = self.weights
        return sum(w[i] for i in word)

    def constitution_degree(self, c: Constitution) -> int:
        return sum(m * d for m, d in zip(c, self.weights))

    def group_of_constitution(self, c: Constitution) -> GroupElement:
        key = ("G", c)
        r = self._cache.get(key)
        if r is None:
            r = self.identity
            for m, v in zip(c, self.variables):
                if m:
                    r = self.group.multiply(r, self.group.power(v.g, m))
            self._cache[key] = r
        return r

    def group_of_word(self, word) -> GroupElement:
        return self.group_of_constitution(self.constitution(word))

    def chi_of(self, c: Constitution, g: GroupElement) -> FieldElement:
        """chi^c(g): the character of a constitution evaluated at g."""
        key = ("chi", c, g)
        r = self._cache.get(key)
        if r is None:
            r = self.field.one()
            for m, v in zip(c, self.variables):
                if m:
                    r = r * self.character_eval(v.chi, g) ** m
            self._cache[key] = r
        return r

    def bicharacter(self, u: Constitution, v: Constitution) -> FieldElement:
        """p(u, v) = prod_ij p_ij^(u_i v_j)."""
        key = ("p", u, v)
        r = self._cache.get(key)
        if r is None:
            r = self.field.one()
            P = self.pmatrix
            for i, a in enumerate(u):
                if a:
                    for j, b in enumerate(v):
                        if b:
                            r = r * P[i][j] ** (a * b)
            self._cache[key] = r
        return r

    def p_words(self, u, v) -> FieldElement:
        return self.bicharacter(self.constitution(u), self.constitution(v))

    # -- formatting ----------------------------------------------------------

    def format_word(self, word) -> str:
        return ".".join(self.names[i] for i in word) if word else "1"

    def parse_word(self, text: str):
        text = text.strip()
        if text in ("", "1"):
            return ()
        out = []
        for part in text.split("."):
            part = part.strip()
            if part not in self.names:
                raise ContextError(f"unknown variable {part!r}")
            out.append(self.names.index(part))
        return tuple(out)

    def order_of(self, x: FieldElement):
        try:
            return multiplicative_order(x)
        except FieldError:
            return math.inf
