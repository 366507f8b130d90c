"""Seeded invariant suite behind the ``selftest`` subcommand.

Each check returns None on success or a short failure message.  Output is
deterministic for a given seed: no timings, fixed check order.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .algebra import GPoly, Poly
from .context import AbelianGroup, Character, QuantumContext, QuantumVariable
from .coproduct import (
    binomial_identity_holds, delta, delta_left, delta_right, coproduct_certificate,
)
from .fields import Cyclotomic, PrimeField, Rationals, RationalFunctions, multiplicative_order
from .pbw import Presentation, enumerate_pbw
from .superletters import calculus, drop_brackets, is_monotonic, monotonic_superwords
from .words import (
    all_bracketings, all_words, enumerate_standard, is_standard, is_standard_bracketing,
    is_standard_by_endings, lyndon_factorization, necklace_count, shirshov_bracket,
    standard_factorization, word_gt,
)

# ---------------------------------------------------------------------------
# random instances


def random_rational(rng: random.Random, span: int = 9) -> Fraction:
    while True:
        a = rng.randint(-span, span)
        if a:
            return Fraction(a, rng.randint(1, span))


def random_context(rng: random.Random, n: int = 2, field=None) -> QuantumContext:
    """Diagonal context over the rationals with random nonzero p_ij."""
    F = field or Rationals()
    pm = [[random_rational(rng) for _ in range(n)] for _ in range(n)]
    return QuantumContext.diagonal(pm, F)


def random_word_of(rng: random.Random, const) -> tuple:
    letters = [i for i, m in enumerate(const) for _ in range(m)]
    rng.shuffle(letters)
    return tuple(letters)


def random_constitution(rng: random.Random, n: int, max_len: int) -> tuple:
    while True:
        c = tuple(rng.randint(0, max_len) for _ in range(n))
        if 0 < sum(c) <= max_len:
            return c


def random_homogeneous(rng: random.Random, ctx: QuantumContext, const, terms: int = 3) -> Poly:
    F = ctx.field
    out: dict = {}
    for _ in range(terms):
        w = random_word_of(rng, const)
        out[w] = out.get(w, F.zero()) + F(random_rational(rng))
    p = Poly({w: c for w, c in out.items() if c})
    return p if p else Poly.monomial(random_word_of(rng, const), F.one())


def random_poly(rng: random.Random, ctx: QuantumContext, max_len: int, terms: int = 4) -> Poly:
    F = ctx.field
    out = Poly._raw({})
    for _ in range(terms):
        L = rng.randint(1, max_len)
        w = tuple(rng.randrange(ctx.n) for _ in range(L))
        out = out + Poly.monomial(w, F(random_rational(rng)))
    return out


def random_gpoly(rng: random.Random, ctx: QuantumContext, max_len: int, terms: int = 3) -> GPoly:
    F = ctx.field
    out = GPoly._raw(ctx, {})
    for _ in range(terms):
        L = rng.randint(0, max_len)
        w = tuple(rng.randrange(ctx.n) for _ in range(L))
        g = ctx.group.element([rng.randint(-2, 2) for _ in range(ctx.group.rank)])
        out = out + GPoly(ctx, {(g, w): F(random_rational(rng))})
    return out


# ---------------------------------------------------------------------------
# identities


def jacobi_holds(ctx, u: Poly, v: Poly, w: Poly) -> bool:
    calc = calculus(ctx)
    br = calc.skew_bracket
    cv, cw = v.constitution(ctx), w.constitution(ctx)
    pvw, pwv = ctx.bicharacter(cv, cw), ctx.bicharacter(cw, cv)
    lhs = br(br(u, v), w)
    rhs = br(u, br(v, w)) + br(br(u, w), v).scale(pwv.inverse()) + (br(u, w) * v).scale(pvw - pwv.inverse())
    return lhs == rhs


def derivations_hold(ctx, u: Poly, v: Poly, w: Poly) -> bool:
    calc = calculus(ctx)
    br = calc.skew_bracket
    cu, cv, cw = (x.constitution(ctx) for x in (u, v, w))
    left = br(u, v * w) == br(u, v) * w + (v * br(u, w)).scale(ctx.bicharacter(cu, cv))
    right = br(u * v, w) == (br(u, w) * v).scale(ctx.bicharacter(cv, cw)) + u * br(v, w)
    return left and right


def bicharacter_laws_hold(ctx, a, b, c) -> bool:
    ab = tuple(x + y for x, y in zip(a, b))
    bc = tuple(x + y for x, y in zip(b, c))
    return (ctx.bicharacter(ab, c) == ctx.bicharacter(a, c) * ctx.bicharacter(b, c)
            and ctx.bicharacter(a, bc) == ctx.bicharacter(a, b) * ctx.bicharacter(a, c))


# ---------------------------------------------------------------------------
# the suite


def _check_order(rng):
    eq1 = [(0,), (0, 0), (0, 1), (1,), (1, 0), (1, 1)]
    if not all(word_gt(eq1[i], eq1[i + 1]) for i in range(len(eq1) - 1)):
        return "x1 > x1^2 > x1x2 > x2 > x2x1 > x2^2 fails"


def _check_standard_counts(rng):
    for L in range(1, 9):
        brute = sum(1 for w in product(range(2), repeat=L) if is_standard(w))
        if brute != necklace_count(2, L):
            return f"length {L}: {brute} != {necklace_count(2, L)}"


def _check_standard_tests_agree(rng):
    for w in all_words(2, 8):
        if is_standard(w) != is_standard_by_endings(w):
            return f"rotation and ending tests disagree on {w}"


def _check_no_suffix_prefix(rng):
    for w in all_words(2, 8):
        if is_standard(w):
            for k in range(1, len(w)):
                v = w[k:]
                if w[:len(v)] == v:
                    return f"ending {v} of standard {w} is a prefix"


def _check_powers_and_products(rng):
    std = enumerate_standard(2, 5)
    for _ in range(200):
        u, v = rng.sample(std, 2)
        if not word_gt(u, v):
            u, v = v, u
        h = rng.randint(1, 3)
        if not word_gt(u * h, v):
            return f"{u}^{h} > {v} fails"
    for u in std:
        if len(u) < 2:
            continue
        u3, u2 = standard_factorization(u)
        for u1 in std:
            if word_gt(u2, u1):
                if not (word_gt(u + u1, u3 + u1) and word_gt(u + u1, u2 + u1)):
                    return f"product inequalities fail for {u}, {u1}"


def _check_brackets(rng):
    for u in enumerate_standard(2, 7):
        t = shirshov_bracket(u)
        if not is_standard_bracketing(t):
            return f"bracketing of {u} is not standard"
        if len(u) <= 5 and sum(1 for b in all_bracketings(u) if is_standard_bracketing(b)) != 1:
            return f"standard bracketing of {u} is not unique"
        if len(u) > 1:
            v, w = standard_factorization(u)
            longest = next(u[k:] for k in range(1, len(u)) if is_standard(u[k:]))
            if w != longest:
                return f"factorization of {u} does not split off the longest standard ending"


def _check_fields(rng):
    F = RationalFunctions()
    q = F.gen()
    for _ in range(30):
        a, b, c = (F(random_rational(rng)) * q ** rng.randint(-2, 2) + F(random_rational(rng))
                   for _ in range(3))
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            return "rational function axioms fail"
        if a and a * a.inverse() != 1:
            return "inverse fails"
    for n in (3, 4, 5, 6, 8, 12):
        z = Cyclotomic(n).gen()
        t = multiplicative_order(z)
        if t != n or any(z ** s == 1 for s in range(1, t)):
            return f"order of zeta_{n} is {t}"
    P = PrimeField(7)
    for x in range(1, 7):
        t = multiplicative_order(P(x))
        if P(x) ** t != 1 or any(P(x) ** s == 1 for s in range(1, t)):
            return f"order of {x} mod 7"


def _check_identities(rng):
    for _ in range(60):
        ctx = random_context(rng, rng.choice((2, 3)))
        cs = [random_constitution(rng, ctx.n, 2) for _ in range(3)]
        u, v, w = (random_homogeneous(rng, ctx, c) for c in cs)
        if not jacobi_holds(ctx, u, v, w):
            return "Jacobi identity fails"
        if not derivations_hold(ctx, u, v, w):
            return "derivation identities fail"
        if not bicharacter_laws_hold(ctx, *cs):
            return "bicharacter laws fail"


def _check_characters(rng):
    G = AbelianGroup(1, (4,))
    F = Cyclotomic(4)
    z = F.gen()
    chi = Character((F(3), z))
    for _ in range(30):
        g = G.element([rng.randint(-3, 3), rng.randint(0, 3)])
        h = G.element([rng.randint(-3, 3), rng.randint(0, 3)])
        if chi(G.multiply(g, h)) != chi(g) * chi(h):
            return "character is not multiplicative"


def _check_monotonic_basis(rng):
    ctx = random_context(rng, 2)
    calc = calculus(ctx)
    for d in range(1, 7):
        letters = enumerate_standard(2, d)
        sws = monotonic_superwords(ctx, letters, d)
        if len(sws) != 2 ** d:
            return f"{len(sws)} monotonic super-words of degree {d}"
        for sw in sws:
            lw, lc = calc.superword_expansion(sw).leading()
            if lw != drop_brackets(sw) or lc != 1:
                return f"expansion of {sw} does not lead with its dropped word"
    for _ in range(20):
        f = random_poly(rng, ctx, 5)
        if calc.combo_expansion(calc.poly_to_monotonic(f)) != f:
            return "round trip through monotonic coordinates fails"


def _check_straighten(rng):
    ctx = random_context(rng, 2)
    calc = calculus(ctx)
    std = enumerate_standard(2, 3)
    for _ in range(30):
        sw = tuple(rng.choice(std) for _ in range(rng.randint(2, 3)))
        out = calc.straighten(sw)
        if not all(is_monotonic(s) for s in out):
            return f"straightening {sw} left a non-monotonic word"
        if calc.combo_expansion(out) != calc.superword_expansion(sw):
            return f"straightening {sw} changed its value"


def _check_lyndon(rng):
    for _ in range(50):
        w = tuple(rng.randrange(3) for _ in range(rng.randint(1, 9)))
        fs = lyndon_factorization(w)
        if sum(fs, ()) != w or not all(is_standard(f) for f in fs) or not is_monotonic(tuple(fs)):
            return f"factorization of {w}"


def _check_coproduct(rng):
    ctx = random_context(rng, 2)
    for _ in range(8):
        f = random_gpoly(rng, ctx, 3)
        g = random_gpoly(rng, ctx, 2)
        if delta_left(ctx, f) != delta_right(ctx, f):
            return "coassociativity fails"
        if delta(ctx, f * g) != delta(ctx, f) * delta(ctx, g):
            return "coproduct is not multiplicative"


def _check_superletter_coproducts(rng):
    ctx = random_context(rng, 2)
    for u in enumerate_standard(2, 5):
        cert = coproduct_certificate(ctx, u)
        if not cert.ok:
            return f"[{u}]: {cert.violations[0]}"
    ctx3 = random_context(rng, 3)
    for u in enumerate_standard(3, 3):
        cert = coproduct_certificate(ctx3, u)
        if not cert.ok:
            return f"[{u}]: {cert.violations[0]}"


def _check_binomial(rng):
    for n in (2, 3, 4, 6):
        z = Cyclotomic(n).gen()
        if not binomial_identity_holds(z, multiplicative_order(z)):
            return f"binomial identity fails at a primitive root of order {n}"
    one = PrimeField(2).one()
    if not all(binomial_identity_holds(one, h) for h in (1, 2, 4)):
        return "binomial identity fails in characteristic 2"


def _check_pbw(rng):
    F = RationalFunctions()
    G = AbelianGroup(2)
    vs = (QuantumVariable("x1", (1, 0), Character((F("q"), F("q")))),
          QuantumVariable("x2", (0, 1), Character((F("q^-1"), F("q")))))
    ctx = QuantumContext(F, G, vs)
    q = F.gen()
    P = Presentation(ctx, [Poly({(0, 1): F.one(), (1, 0): -q})])
    R = enumerate_pbw(P, 5)
    if not R.consistent or [R.hilbert[d] for d in range(6)] != [1, 2, 3, 4, 5, 6]:
        return f"quantum plane dimensions {R.hilbert} vs {R.oracle}"
    ctx2 = random_context(rng, 2)
    R2 = enumerate_pbw(Presentation(ctx2, []), 5)
    if not R2.consistent:
        return "free algebra count mismatch"


CHECKS = [
    ("word order", _check_order),
    ("standard word counts", _check_standard_counts),
    ("standard word tests agree", _check_standard_tests_agree),
    ("endings of standard words are not prefixes", _check_no_suffix_prefix),
    ("powers and products of standard words", _check_powers_and_products),
    ("standard bracketings", _check_brackets),
    ("Lyndon factorization", _check_lyndon),
    ("field arithmetic and orders", _check_fields),
    ("characters", _check_characters),
    ("Jacobi, derivation and bicharacter identities", _check_identities),
    ("monotonic super-word basis", _check_monotonic_basis),
    ("straightening", _check_straighten),
    ("coproduct", _check_coproduct),
    ("super-letter coproducts", _check_superletter_coproducts),
    ("quantum binomial", _check_binomial),
    ("PBW counts against the oracle", _check_pbw),
]


def run_selftest(seed: int = 0) -> list:
    """[(name, message or None)] in a fixed order."""
    out = []
    for name, fn in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            msg = fn(rng)
        except Exception as e:  # report, never crash the suite
            msg = f"{type(e).__name__}: {e}"
        out.append((name, msg))
    return out
