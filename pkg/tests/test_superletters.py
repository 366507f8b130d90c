import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import two_variable_context
from oracles import naive_expand
from qpbw.algebra import Poly
from qpbw.context import QuantumContext
from qpbw.selftest import (
    bicharacter_laws_hold, derivations_hold, jacobi_holds, random_constitution, random_context,
    random_homogeneous, random_poly,
)
from qpbw.superletters import (
    SuperLetterError, calculus, drop_brackets, format_combo, is_monotonic, monotonic_superwords,
)
from qpbw.words import enumerate_standard, shirshov_bracket, word_gt
from oracles import tree_of

seeds = st.integers(0, 10_000)
PM = [[Fraction(2), Fraction(3)], [Fraction(5), Fraction(7)]]


def as_fraction_dict(f: Poly):
    return {w: Fraction(str(c)) for w, c in f.terms.items()}


def test_expansion_against_naive_bracketing():
    ctx = QuantumContext.diagonal(PM)
    calc = calculus(ctx)
    for u in enumerate_standard(2, 6):
        assert as_fraction_dict(calc.expansion(u)) == naive_expand(tree_of(shirshov_bracket(u)), PM)


def test_three_variable_expansions():
    P3 = [[Fraction(2), Fraction(-1, 3), Fraction(5)], [Fraction(7), Fraction(1, 2), Fraction(3)],
          [Fraction(-2), Fraction(11), Fraction(1, 5)]]
    ctx = QuantumContext.diagonal(P3)
    calc = calculus(ctx)
    for u in enumerate_standard(3, 4):
        assert as_fraction_dict(calc.expansion(u)) == naive_expand(tree_of(shirshov_bracket(u)), P3)


def test_small_expansions_by_hand():
    ctx = QuantumContext.diagonal(PM)
    F = ctx.field
    assert calculus(ctx).expansion((0, 1)) == Poly({(0, 1): F.one(), (1, 0): F(-3)})
    with pytest.raises(SuperLetterError):
        calculus(ctx).expansion((1, 0))


@given(seeds)
def test_identities_hold(seed):
    rng = random.Random(seed)
    ctx = random_context(rng, rng.choice((2, 3)))
    cs = [random_constitution(rng, ctx.n, 2) for _ in range(3)]
    u, v, w = (random_homogeneous(rng, ctx, c) for c in cs)
    assert jacobi_holds(ctx, u, v, w)
    assert derivations_hold(ctx, u, v, w)
    assert bicharacter_laws_hold(ctx, *cs)


@pytest.mark.parametrize("d", range(1, 8))
def test_monotonic_basis_is_unitriangular(d):
    ctx = QuantumContext.diagonal(PM)
    calc = calculus(ctx)
    sws = monotonic_superwords(ctx, enumerate_standard(2, d), d)
    assert len(sws) == 2 ** d
    assert len({drop_brackets(s) for s in sws}) == 2 ** d
    for sw in sws:
        exp = calc.superword_expansion(sw)
        lw, lc = exp.leading()
        assert lw == drop_brackets(sw) and lc == 1
        assert all(not word_gt(w, lw) for w in exp.terms)


@given(seeds)
def test_round_trip(seed):
    rng = random.Random(seed)
    ctx = random_context(rng, 2)
    calc = calculus(ctx)
    f = random_poly(rng, ctx, 5)
    coords = calc.poly_to_monotonic(f)
    assert all(is_monotonic(s) for s in coords)
    assert calc.combo_expansion(coords) == f


def test_straighten_example():
    ctx = QuantumContext.diagonal(PM)
    calc = calculus(ctx)
    out = calc.straighten(((0,), (0, 1)))
    assert out == {((0, 0, 1),): ctx.field.one(), ((0, 1), (0,)): ctx.p_words((0,), (0, 1))}
    assert format_combo(ctx, out) == "[x1.x1.x2] + 6 * [x1.x2][x1]"


def test_straighten_swaps_letters():
    ctx = QuantumContext.diagonal(PM)
    out = calculus(ctx).straighten(((0,), (1,)))
    assert out == {((0, 1),): ctx.field.one(), ((1,), (0,)): ctx.field(3)}


@given(seeds)
def test_straighten_preserves_value(seed):
    rng = random.Random(seed)
    ctx = random_context(rng, 2)
    calc = calculus(ctx)
    std = enumerate_standard(2, 3)
    sw = tuple(rng.choice(std) for _ in range(rng.randint(2, 4)))
    out = calc.straighten(sw)
    assert all(is_monotonic(s) for s in out)
    assert calc.combo_expansion(out) == calc.superword_expansion(sw)


def test_decomposition_letters_lie_between():
    ctx = QuantumContext.diagonal(PM)
    calc = calculus(ctx)
    std = enumerate_standard(2, 4)
    for u, u1 in product(std, std):
        if word_gt(u, u1):
            for sw in calc.decompose_bracket(u, u1):
                for w in sw:
                    assert word_gt(u, w) and word_gt(w, u1) and not word_gt(w, u + u1)


def test_generic_q_sl3_letters():
    ctx = two_variable_context(("q^2", "q^-1"), ("q^-1", "q^2"))
    calc = calculus(ctx)
    q = ctx.field.gen()
    assert calc.expansion((0, 1)) == Poly({(0, 1): ctx.field.one(), (1, 0): -q ** -1})
