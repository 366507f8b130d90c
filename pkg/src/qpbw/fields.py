"""Exact coefficient fields.

Four kinds of ground field are supported: the rationals, rational functions
in one parameter ``q`` over the rationals, cyclotomic fields ``Q(z)`` with
``z`` a primitive n-th root of unity, and prime fields ``F_l``.

A field is described by a small frozen dataclass (the *descriptor*); calling
the descriptor coerces ints, Fractions and strings into elements::

    >>> F = Cyclotomic(4)
    >>> z = F.gen()
    >>> z * z == -1
    True

Elements are immutable and only combine with elements of the same field.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "FieldError", "FieldDivisionByZero", "MixedFieldError", "FieldParseError",
    "Field", "Rationals", "RationalFunctions", "Cyclotomic", "PrimeField",
    "FieldElement", "field_from_string", "multiplicative_order",
]


class FieldError(Exception):
    pass


class FieldDivisionByZero(FieldError, ZeroDivisionError):
    pass


class MixedFieldError(FieldError, TypeError):
    pass


class FieldParseError(FieldError, ValueError):
    pass


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q: tuples of Fractions, lowest degree first,
# no trailing zeros; the zero polynomial is ()

_ONE = Fraction(1)
_ZERO = Fraction(0)
Poly1 = tuple


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pscale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    if not b:
        raise FieldDivisionByZero("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(r) - 1 < db:
        return (), tuple(a)
    q = [_ZERO] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lead
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return _trim(q), _trim(r[:db])


def _pmonic(a):
    if not a or a[-1] == 1:
        return a
    return _pscale(a, 1 / a[-1])


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _valuation(a):
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _fmt_poly(coeffs, var):
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            t = str(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                t = mono
            elif c == -1:
                t = "-" + mono
            else:
                t = f"{c}*{mono}"
        if parts:
            parts.append(" - " + t[1:] if t.startswith("-") else " + " + t)
        else:
            parts.append(t)
    return "".join(parts)


def _n_terms(coeffs):
    return sum(1 for c in coeffs if c)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = tuple([Fraction(-1)] + [_ZERO] * (n - 1) + [_ONE])
    for d in range(1, n):
        if n % d == 0:
            num, r = _pdivmod(num, cyclotomic_polynomial(d))
            assert not r
    return num


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, int(math.isqrt(n)) + 1))


# ---------------------------------------------------------------------------
# descriptors


class Field:
    """Base class of field descriptors."""

    def __call__(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != self:
                raise MixedFieldError(f"element of {x.field} is not in {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (int, Fraction)):
            return self._from_rational(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def characteristic(self) -> int:
        return 0

    def parse(self, text: str) -> "FieldElement":
        return _Parser(self, text).parse()

    def _from_rational(self, x: Fraction):
        raise NotImplementedError

    def _symbol(self):
        return None


@dataclass(frozen=True)
class Rationals(Field):
    def __str__(self):
        return "rationals"

    def _from_rational(self, x):
        return QElement(self, x)


@dataclass(frozen=True)
class RationalFunctions(Field):
    """The field Q(q) of rational functions in one indeterminate."""
    var: str = "q"

    def __str__(self):
        return "rational-functions"

    def _from_rational(self, x):
        return RFElement._make(self, (x,) if x else (), (_ONE,))

    def gen(self):
        return RFElement._make(self, (_ZERO, _ONE), (_ONE,))

    def _symbol(self):
        return self.var


@dataclass(frozen=True)
class Cyclotomic(Field):
    """Q(z) with z a primitive n-th root of unity, stored modulo Phi_n."""
    n: int
    var: str = "z"

    def __post_init__(self):
        if self.n < 1:
            raise FieldError("cyclotomic order must be >= 1")

    def __str__(self):
        return f"cyclotomic({self.n})"

    @property
    def modulus(self):
        return cyclotomic_polynomial(self.n)

    @property
    def degree(self):
        return len(self.modulus) - 1

    def _from_rational(self, x):
        return CycElement(self, (x,) if x else ())

    def gen(self):
        return CycElement(self, _reduce_cyc((_ZERO, _ONE), self.n))

    def _symbol(self):
        return self.var


@dataclass(frozen=True)
class PrimeField(Field):
    l: int

    def __post_init__(self):
        if not _is_prime(self.l):
            raise FieldError(f"{self.l} is not prime")

    def __str__(self):
        return f"prime-field({self.l})"

    def characteristic(self):
        return self.l

    def _from_rational(self, x):
        if x.denominator % self.l == 0:
            raise FieldDivisionByZero(f"{x} has no image in F_{self.l}")
        return FpElement(self, x.numerator * pow(x.denominator, -1, self.l) % self.l)


_FIELD_RE = re.compile(r"^\s*(rationals|rational-functions|cyclotomic\((\d+)\)|prime-field\((\d+)\))\s*$")


def field_from_string(text: str) -> Field:
    """Parse ``rationals``, ``rational-functions``, ``cyclotomic(n)``, ``prime-field(l)``."""
    m = _FIELD_RE.match(text)
    if not m:
        raise FieldParseError(f"unknown field descriptor {text!r}")
    kind = m.group(1)
    if kind == "rationals":
        return Rationals()
    if kind == "rational-functions":
        return RationalFunctions()
    if m.group(2):
        return Cyclotomic(int(m.group(2)))
    return PrimeField(int(m.group(3)))


# ---------------------------------------------------------------------------
# elements


class FieldElement:
    __slots__ = ("field",)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise MixedFieldError(f"cannot combine {self.field} with {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field._from_rational(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._add(o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._add(o._neg())

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o._add(self._neg())

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._mul(o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._mul(o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o._mul(self.inverse())

    def __neg__(self):
        return self._neg()

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = self.field.one()
        while k:
            if k & 1:
                result = result._mul(base)
            k >>= 1
            if k:
                base = base._mul(base)
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field._from_rational(Fraction(other))
        elif not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self._key() == other._key()

    def __hash__(self):
        return hash((type(self), self._key()))

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def inverse(self):
        if self.is_zero():
            raise FieldDivisionByZero("division by zero")
        return self._inv()

    def is_zero(self) -> bool:
        return not self

    def is_one(self) -> bool:
        return self == 1


class QElement(FieldElement):
    __slots__ = ("v",)

    def __init__(self, field, v: Fraction):
        self.field = field
        self.v = v

    def _key(self):
        return self.v

    def __bool__(self):
        return self.v != 0

    def _add(self, o):
        return QElement(self.field, self.v + o.v)

    def _neg(self):
        return QElement(self.field, -self.v)

    def _mul(self, o):
        return QElement(self.field, self.v * o.v)

    def _inv(self):
        return QElement(self.field, 1 / self.v)

    def __str__(self):
        return str(self.v)

    def constant(self):
        return self.v


class FpElement(FieldElement):
    __slots__ = ("v",)

    def __init__(self, field, v: int):
        self.field = field
        self.v = v

    def _key(self):
        return self.v

    def __bool__(self):
        return self.v != 0

    def _add(self, o):
        return FpElement(self.field, (self.v + o.v) % self.field.l)

    def _neg(self):
        return FpElement(self.field, -self.v % self.field.l)

    def _mul(self, o):
        return FpElement(self.field, self.v * o.v % self.field.l)

    def _inv(self):
        return FpElement(self.field, pow(self.v, -1, self.field.l))

    def __str__(self):
        return f"{self.v} mod {self.field.l}"


class RFElement(FieldElement):
    """num/den with gcd(num, den) = 1 and den monic."""
    __slots__ = ("num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, field, num, den):
        if not den:
            raise FieldDivisionByZero("zero denominator")
        if not num:
            return cls(field, (), (_ONE,))
        if den[-1] != 1:
            lead = den[-1]
            num, den = _pscale(num, 1 / lead), _pscale(den, 1 / lead)
        if len(den) > 1:
            if _n_terms(den) == 1:
                # den = q^k: the gcd is a power of q
                s = min(len(den) - 1, _valuation(num))
                if s:
                    num, den = num[s:], den[s:]
            else:
                g = _pgcd(num, den)
                if len(g) > 1:
                    num = _pdivmod(num, g)[0]
                    den = _pdivmod(den, g)[0]
        return cls(field, num, den)

    def _key(self):
        return (self.num, self.den)

    def __bool__(self):
        return bool(self.num)

    def _add(self, o):
        if len(self.den) == 1 and len(o.den) == 1:
            return RFElement(self.field, _padd(self.num, o.num), self.den)
        if self.den == o.den:
            return RFElement._make(self.field, _padd(self.num, o.num), self.den)
        return RFElement._make(
            self.field,
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    def _neg(self):
        return RFElement(self.field, _pneg(self.num), self.den)

    def _mul(self, o):
        if not self.num or not o.num:
            return RFElement(self.field, (), (_ONE,))
        if len(self.den) == 1 and len(o.den) == 1:
            return RFElement(self.field, _pmul(self.num, o.num), self.den)
        return RFElement._make(self.field, _pmul(self.num, o.num), _pmul(self.den, o.den))

    def _inv(self):
        return RFElement._make(self.field, self.den, self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self):
        return self.num[0] if self.num else _ZERO

    def __str__(self):
        var = self.field.var
        if len(self.den) == 1:
            return _fmt_poly(self.num, var)
        n = _fmt_poly(self.num, var)
        d = _fmt_poly(self.den, var)
        if _n_terms(self.num) > 1:
            n = f"({n})"
        if _n_terms(self.den) > 1:
            d = f"({d})"
        return f"{n}/{d}"


def _reduce_cyc(coeffs, n):
    mod = cyclotomic_polynomial(n)
    if len(coeffs) < len(mod):
        return _trim(coeffs)
    return _pdivmod(coeffs, mod)[1]


class CycElement(FieldElement):
    __slots__ = ("c",)

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def _key(self):
        return self.c

    def __bool__(self):
        return bool(self.c)

    def _add(self, o):
        return CycElement(self.field, _padd(self.c, o.c))

    def _neg(self):
        return CycElement(self.field, _pneg(self.c))

    def _mul(self, o):
        return CycElement(self.field, _reduce_cyc(_pmul(self.c, o.c), self.field.n))

    def _inv(self):
        # extended Euclid against the cyclotomic modulus
        mod = self.field.modulus
        r0, r1 = mod, self.c
        s0, s1 = (), (_ONE,)
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r1 is a nonzero constant because Phi_n is irreducible
        return CycElement(self.field, _reduce_cyc(_pscale(s1, 1 / r1[0]), self.field.n))

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def constant(self):
        return self.c[0] if self.c else _ZERO

    def __str__(self):
        return _fmt_poly(self.c, self.field.var)


# ---------------------------------------------------------------------------


def _rational_order(x: Fraction) -> Union[int, float]:
    if x == 1:
        return 1
    if x == -1:
        return 2
    return math.inf


def multiplicative_order(x: FieldElement) -> Union[int, float]:
    """Least t >= 1 with x**t == 1, or ``math.inf`` when no such t exists.

    The search is bounded: divisors of l - 1 in F_l, divisors of lcm(2, n)
    in the n-th cyclotomic field (the roots of unity there are exactly the
    lcm(2, n)-th ones).  In Q(q) only constants can have finite order.
    """
    if x.is_zero():
        raise FieldError("multiplicative order of zero")
    F = x.field
    if isinstance(F, Rationals):
        return _rational_order(x.v)
    if isinstance(F, RationalFunctions):
        return _rational_order(x.constant()) if x.is_constant() else math.inf
    if isinstance(F, PrimeField):
        bound = F.l - 1
    else:
        bound = F.n * 2 // math.gcd(F.n, 2)
    for d in _divisors(bound):
        if x ** d == 1:
            return d
    return math.inf


# ---------------------------------------------------------------------------
# string parsing: integers, the field symbol, + - * / ^ and parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")
_MOD_SUFFIX = re.compile(r"\s+mod\s+(\d+)\s*$")


class _Parser:
    def __init__(self, field: Field, text: str):
        self.field = field
        m = _MOD_SUFFIX.search(text)
        if m:
            if not isinstance(field, PrimeField) or int(m.group(1)) != field.l:
                raise FieldParseError(f"modulus in {text!r} does not match {field}")
            text = text[: m.start()]
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            t = _TOKEN.match(text, pos)
            if not t:
                break
            if t.group(1):
                self.toks.append(("int", int(t.group(1))))
            elif t.group(2):
                self.toks.append(("name", t.group(2)))
            else:
                self.toks.append(("op", t.group(3)))
            pos = t.end()
        self.i = 0

    def fail(self, msg):
        raise FieldParseError(f"{msg} in {self.text!r}")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self):
        if not self.toks:
            self.fail("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            v = v * w if op == "*" else v / w
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            v = v ** self.exponent()
        return v

    def exponent(self):
        paren = self.peek() == ("op", "(")
        if paren:
            self.take()
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        kind, val = self.take()
        if kind != "int":
            self.fail("integer exponent expected")
        if paren and self.take() != ("op", ")"):
            self.fail("missing ')'")
        return sign * val

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.field(val)
        if kind == "name":
            if val != self.field._symbol():
                self.fail(f"unknown symbol {val!r} for {self.field}")
            return self.field.gen()
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                self.fail("missing ')'")
            return v
        self.fail(f"unexpected token {val!r}")
