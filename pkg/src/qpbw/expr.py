"""Text syntax for polynomials, super-words and tensors.

A polynomial is a sum of terms ``[scalar *] monomial``.  A monomial is a
juxtaposition of group generators (``g1 g2^-1``), variables joined by dots
(``x1.x2``) and super-letters in square brackets (``[x1.x2]^2``); a lone
``.`` may separate the group part from the word part::

    x1.x2 - q * x2.x1
    q^2 * g1 g2 . x1.x2
    (q^2 - 1) * [x1.x2][x2]

Scalars containing ``+`` or ``-`` must be parenthesised.
"""
from __future__ import annotations

import re

from .algebra import GPoly, Poly, Tensor
from .context import QuantumContext
from .fields import FieldElement, FieldParseError, FpElement


class ExprError(ValueError):
    pass


def scalar_str(c: FieldElement) -> str:
    if isinstance(c, FpElement):
        return str(c.v)
    return str(c)


def _needs_parens(s: str) -> bool:
    return any(ch in s[1:] for ch in "+-") or " " in s or "/" in s


def format_terms(terms) -> str:
    """Join (coefficient, monomial string) pairs; monomial "1" means a scalar term."""
    parts = []
    for c, mono in terms:
        s = scalar_str(c)
        if mono == "1":
            t = s
        elif c == 1:
            t = mono
        elif c == -1:
            t = "-" + mono
        elif _needs_parens(s):
            t = f"({s}) * {mono}"
        else:
            t = f"{s} * {mono}"
        if parts:
            parts.append(" - " + t[1:] if t.startswith("-") else " + " + t)
        else:
            parts.append(t)
    return "".join(parts) if parts else "0"


def format_gword(ctx: QuantumContext, g, w) -> str:
    gs = ctx.group.format(g)
    ws = ctx.format_word(w)
    if gs == "1":
        return ws
    if ws == "1":
        return gs
    return f"{gs} . {ws}"


def format_poly(ctx: QuantumContext, f) -> str:
    if isinstance(f, GPoly):
        return format_terms([(c, format_gword(ctx, g, w)) for (g, w), c in f.items()])
    return format_terms([(c, ctx.format_word(w)) for w, c in f.items()])


def format_tensor(ctx: QuantumContext, t: Tensor) -> str:
    lines = []
    for key, c in t.items():
        mono = " (x) ".join(format_gword(ctx, g, w) for g, w in key)
        lines.append(format_terms([(c, mono)]))
    return "\n".join(lines) if lines else "0"


# ---------------------------------------------------------------------------
# parsing


def _split_terms(text: str) -> list:
    """Split at top-level + and -, keeping the sign with each term."""
    terms = []
    depth = 0
    cur = ""
    sign = 1
    prev = ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and prev != "^":
            if cur.strip():
                terms.append((sign, cur.strip()))
                cur = ""
                sign = 1
            if ch == "-":
                sign = -sign
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if depth != 0:
        raise ExprError(f"unbalanced brackets in {text!r}")
    if cur.strip():
        terms.append((sign, cur.strip()))
    elif terms or text.strip():
        raise ExprError(f"dangling sign in {text!r}")
    return terms


def _split_star(term: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in term:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    out.append(cur.strip())
    if any(not p for p in out):
        raise ExprError(f"empty factor in {term!r}")
    return out


_MONO_TOKEN = re.compile(r"\[[^\]]*\](?:\^-?\d+)?|[^\s.\[\]]+")
_POWER = re.compile(r"^(.*?)(?:\^(-?\d+))?$")


def _parse_monomial(ctx: QuantumContext, text: str, bracket_hook=None) -> GPoly:
    if not text.strip() or text.strip() in (".",):
        raise ExprError("empty monomial")
    leftover = _MONO_TOKEN.sub("", text).replace(".", "").strip()
    if leftover:
        raise ExprError(f"cannot read monomial {text!r}")
    result = GPoly.one(ctx)
    for tok in _MONO_TOKEN.findall(text):
        base, exp = _POWER.match(tok).groups()
        k = int(exp) if exp is not None else 1
        if base.startswith("["):
            if bracket_hook is None:
                raise ExprError("super-letters are not allowed here")
            factor = bracket_hook(ctx.parse_word(base[1:-1])).to_gpoly(ctx)
        elif base in ctx.names:
            factor = GPoly.letter(ctx, ctx.names.index(base))
        elif base in ctx.group.names:
            j = ctx.group.names.index(base)
            g = [0] * ctx.group.rank
            g[j] = k
            result = result * GPoly.group_element(ctx, g)
            continue
        elif base == "1":
            continue
        else:
            raise ExprError(f"unknown name {base!r}")
        if k < 0:
            raise ExprError(f"negative power of {base!r}")
        result = result * factor ** k
    return result


def _parse_scalar(ctx: QuantumContext, text: str) -> FieldElement:
    try:
        return ctx.field.parse(text)
    except FieldParseError as e:
        raise ExprError(str(e)) from e


def parse_gpoly(ctx: QuantumContext, text: str, bracket_hook=None) -> GPoly:
    """Parse an expression into G * k<x>; ``bracket_hook(word)`` expands ``[w]``."""
    out = GPoly._raw(ctx, {})
    for sign, term in _split_terms(text):
        pieces = _split_star(term)
        try:
            mono = _parse_monomial(ctx, pieces[-1], bracket_hook)
            scalars = pieces[:-1]
        except ExprError as err:
            try:
                _parse_scalar(ctx, pieces[-1])
            except ExprError:
                raise err from None
            mono = GPoly.one(ctx)
            scalars = pieces
        c = ctx.field.one() if sign > 0 else -ctx.field.one()
        for s in scalars:
            c = c * _parse_scalar(ctx, s)
        out = out + mono.scale(c)
    return out


def parse_poly(ctx: QuantumContext, text: str, bracket_hook=None) -> Poly:
    f = parse_gpoly(ctx, text, bracket_hook)
    if not f.is_plain():
        raise ExprError(f"{text!r} has group parts")
    return f.to_poly()


def parse_superword_sum(ctx: QuantumContext, text: str) -> dict:
    """Parse ``c * [w1][w2]^2 + ...`` into a combination of flat super-words."""
    out: dict = {}
    for sign, term in _split_terms(text):
        pieces = _split_star(term)
        mono = pieces[-1]
        leftover = _MONO_TOKEN.sub("", mono).replace(".", "").strip()
        if leftover:
            raise ExprError(f"cannot read super-word {mono!r}")
        sw = []
        for tok in _MONO_TOKEN.findall(mono):
            base, exp = _POWER.match(tok).groups()
            k = int(exp) if exp is not None else 1
            if k < 0:
                raise ExprError("negative exponent in a super-word")
            inner = base[1:-1] if base.startswith("[") else base
            sw.extend([ctx.parse_word(inner)] * k)
        c = ctx.field.one() if sign > 0 else -ctx.field.one()
        for s in pieces[:-1]:
            c = c * _parse_scalar(ctx, s)
        key = tuple(sw)
        v = out.get(key, ctx.field.zero()) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out
