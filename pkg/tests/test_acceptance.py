"""Acceptance criteria, one test each, with their time limits.

Each test appends a PASS/FAIL line to the summary printed at the end of the
pytest run.  Run directly (``python tests/test_acceptance.py``) to get just
those lines.
"""
import functools
import importlib.util
import math
import random
import sys
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

import conftest  # noqa: E402
from conftest import taft  # noqa: E402
from oracles import bracketings, standard_bracketing_ok, necklaces, standard_by_rotation, tree_of  # noqa: E402
from qpbw.algebra import GPoly, Tensor  # noqa: E402
from qpbw.context import AbelianGroup, Character, QuantumContext, QuantumVariable  # noqa: E402
from qpbw.coproduct import binomial_identity_holds, coproduct_certificate, quantum_binomial_check  # noqa: E402
from qpbw.fields import Cyclotomic, PrimeField, Rationals  # noqa: E402
from qpbw.pbw import (  # noqa: E402
    associated_graded_check, build_vocabulary_R, enumerate_pbw, filtration_degree, finiteness_verdict,
    oracle_dimension,
)
from qpbw.selftest import (  # noqa: E402
    bicharacter_laws_hold, derivations_hold, jacobi_holds, random_constitution, random_context,
    random_homogeneous, random_poly,
)
from qpbw.superletters import calculus, drop_brackets, monotonic_superwords  # noqa: E402
from qpbw.words import enumerate_standard, is_standard, lex_compare, shirshov_bracket, word_gt, GREATER  # noqa: E402


def criterion(number: int, title: str, limit: float):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as e:
                dt = time.perf_counter() - t0
                conftest.ACCEPTANCE_LINES.append(
                    f"criterion {number:>2}: FAIL  {title}  ({dt:.2f}s): {type(e).__name__}: {e}")
                raise
            dt = time.perf_counter() - t0
            ok = dt < limit
            conftest.ACCEPTANCE_LINES.append(
                f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({dt:.2f}s, limit {limit:g}s)")
            assert ok, f"took {dt:.2f}s, limit {limit}s"
        return run
    return wrap


@criterion(1, "word order golden vector", 1)
def test_criterion_01_order():
    chain = [(0,), (0, 0), (0, 1), (1,), (1, 0), (1, 1)]
    for i, j in product(range(6), range(6)):
        assert word_gt(chain[i], chain[j]) == (i < j)
    assert all(lex_compare(a, b) == GREATER for a, b in zip(chain, chain[1:]))


@criterion(2, "standard word counts 2,1,2,3,6,9", 1)
def test_criterion_02_counts():
    from qpbw.words import words_of_degree
    brute = [sum(1 for w in words_of_degree(2, L) if standard_by_rotation(w)) for L in range(1, 7)]
    ours = [sum(1 for w in words_of_degree(2, L) if is_standard(w)) for L in range(1, 7)]
    formula = [necklaces(2, L) for L in range(1, 7)]
    assert brute == ours == formula == [2, 1, 2, 3, 6, 9]


@criterion(3, "Shirshov bracketings valid and unique", 10)
def test_criterion_03_brackets():
    for u in enumerate_standard(2, 7):
        t = tree_of(shirshov_bracket(u))
        assert standard_bracketing_ok(t)
        if len(u) <= 5:
            assert [b for b in bracketings(u) if standard_bracketing_ok(b)] == [t]


@criterion(4, "Jacobi, derivation and bicharacter identities on 500 instances", 30)
def test_criterion_04_identities():
    rng = random.Random(2024)
    for _ in range(500):
        ctx = random_context(rng, rng.choice((2, 3)))
        cs = [random_constitution(rng, ctx.n, 3) for _ in range(3)]
        u, v, w = (random_homogeneous(rng, ctx, c) for c in cs)
        assert jacobi_holds(ctx, u, v, w)
        assert derivations_hold(ctx, u, v, w)
        assert bicharacter_laws_hold(ctx, *cs)


@criterion(5, "monotonic super-word basis of size 2^d, unitriangular, round trip", 60)
def test_criterion_05_basis():
    rng = random.Random(5)
    ctx = random_context(rng, 2)
    calc = calculus(ctx)
    for d in range(1, 9):
        sws = monotonic_superwords(ctx, enumerate_standard(2, d), d)
        assert len(sws) == 2 ** d
        for sw in sws:
            exp = calc.superword_expansion(sw)
            lw, lc = exp.leading()
            assert lw == drop_brackets(sw) and lc == 1
            assert not any(word_gt(w, lw) for w in exp.terms)
    for _ in range(100):
        f = random_poly(rng, ctx, 6)
        assert calc.combo_expansion(calc.poly_to_monotonic(f)) == f


@criterion(6, "super-letter coproduct decomposition, degree 6 / 3 variables degree 4", 60)
def test_criterion_06_coproduct():
    rng = random.Random(6)
    ctx = random_context(rng, 2)
    for u in enumerate_standard(2, 6):
        assert coproduct_certificate(ctx, u, strict=True).ok
    ctx3 = random_context(rng, 3)
    for u in enumerate_standard(3, 4):
        assert coproduct_certificate(ctx3, u, strict=True).ok


def _power_of_sum(ctx, h):
    U = GPoly.letter(ctx, 0)
    one = GPoly.one(ctx)
    T = Tensor.pure(U, one) + Tensor.pure(GPoly.group_element(ctx, (1,)), U)
    acc = Tensor.one(ctx)
    for _ in range(h):
        acc = acc * T
    return acc == Tensor.pure(U ** h, one) + Tensor.pure(GPoly.group_element(ctx, (h,)), U ** h)


@criterion(7, "quantum binomial at -1, z3, z4, z6 and in characteristic 2", 5)
def test_criterion_07_binomial():
    cases = [(Rationals(), Rationals()(-1), 2)]
    for n in (3, 4, 6):
        F = Cyclotomic(n)
        cases.append((F, F.gen(), n))
    F2 = PrimeField(2)
    cases += [(F2, F2.one(), 2), (F2, F2.one(), 4)]
    for F, p, h in cases:
        ctx = QuantumContext(F, AbelianGroup(1), (QuantumVariable("x", (1,), Character((p,))),))
        assert binomial_identity_holds(p, h)
        assert quantum_binomial_check(ctx, (0,), h)
        assert _power_of_sum(ctx, h)


@criterion(8, "quantum plane: hard letters, infinite heights, dimensions d+1", 10)
def test_criterion_08_quantum_plane(qplane):
    ctx, P = qplane
    R = enumerate_pbw(P, 8)
    assert R.hard_letters == [(0,), (1,)]
    assert all(h == math.inf for h in R.heights.values())
    assert [R.hilbert[d] for d in range(9)] == [d + 1 for d in range(9)]
    assert all(R.hilbert[d] == oracle_dimension(P, d) for d in range(1, 9))


@criterion(9, "U_q+(sl3): three hard letters, dimensions 1,2,4,6,9,12,16", 120)
def test_criterion_09_sl3(uqsl3):
    from oracles import series_coefficients
    ctx, P = uqsl3
    R = enumerate_pbw(P, 6)
    assert R.hard_letters == [(0,), (0, 1), (1,)]
    dims = [R.hilbert[d] for d in range(7)]
    assert dims == [1, 2, 4, 6, 9, 12, 16] == series_coefficients([1, 1, 2], 6)
    assert all(R.hilbert[d] == oracle_dimension(P, d) for d in range(1, 7))


@criterion(10, "Taft t=4: height 4, total dimension 4, finite-dimensional", 10)
def test_criterion_10_taft():
    ctx, P = taft(4)
    R = enumerate_pbw(P, 8)
    assert R.hard_letters == [(0,)] and R.heights == {(0,): 4}
    assert R.total == 4 and R.consistent
    assert all(R.oracle[d] == 0 for d in range(4, 9))
    assert finiteness_verdict(P, R) == "finite-dimensional"


@criterion(11, "filtration degrees and degree drops", 30)
def test_criterion_11_filtration(qplane, uqsl3):
    ctx, P = qplane
    R = enumerate_pbw(P, 8)
    voc = build_vocabulary_R(P, R)
    assert (voc.M, voc.L, voc.n((1,)), voc.n((0,))) == (3, 6, 3, 6)
    assert filtration_degree(ctx, voc, ((1,),)) == 3 ** 7 + 3 ** 3 == 2214
    assert filtration_degree(ctx, voc, ((0,),)) == 3 ** 7 + 3 ** 6 == 2916
    assert all(c.ok for c in associated_graded_check(P, R, voc))
    ctx, P = uqsl3
    R = enumerate_pbw(P, 6)
    voc = build_vocabulary_R(P, R)
    M, L = voc.M, voc.L
    for u in R.hard_letters:
        assert voc.letter_degree(ctx, u) == M ** (L + 1) * len(u) + M ** voc.n(u)
    checks = associated_graded_check(P, R, voc)
    assert len(checks) == 3 and all(c.ok for c in checks)
    ctx, P = taft(4)
    checks = associated_graded_check(P, enumerate_pbw(P, 8))
    assert [c.kind for c in checks] == ["power"] and all(c.ok for c in checks)


@criterion(12, "byte-identical reports for selftest and every golden config", 300)
def test_criterion_12_determinism():
    mod_spec = importlib.util.spec_from_file_location("regen_golden", HERE.parent / "scripts" / "regen_golden.py")
    regen = importlib.util.module_from_spec(mod_spec)
    mod_spec.loader.exec_module(regen)
    for name, argv in regen.invocations():
        a = regen.render(regen.capture(argv))
        b = regen.render(regen.capture(argv))
        assert a == b, f"{name} differs between runs"
        assert a == (HERE / "golden" / f"{name}.json").read_text(), f"{name} differs from its golden file"


if __name__ == "__main__":
    import subprocess
    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q"]))
