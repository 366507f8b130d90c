import random
from fractions import Fraction

from hypothesis import given, strategies as st

from oracles import rank_mod
from qpbw.fields import Rationals
from qpbw.linalg import Echelon

Q = Rationals()
seeds = st.integers(0, 10_000)


def random_vectors(rng, n, cols):
    out = []
    for _ in range(n):
        v = {}
        for c in rng.sample(range(cols), rng.randint(1, cols)):
            a = rng.randint(-3, 3)
            if a:
                v[c] = a
        if v:
            out.append(v)
    return out


def to_field(v):
    return {k: Q(a) for k, a in v.items()}


@given(seeds)
def test_rank_matches_modular_oracle(seed):
    rng = random.Random(seed)
    vs = random_vectors(rng, rng.randint(1, 9), 7)
    E = Echelon()
    for v in vs:
        E.insert(to_field(v))
    # small integer entries: the rank mod a large prime equals the rational rank here
    assert E.rank == rank_mod(vs)


@given(seeds)
def test_members_reduce_to_zero(seed):
    rng = random.Random(seed)
    vs = random_vectors(rng, 5, 6)
    E = Echelon()
    for v in vs:
        E.insert(to_field(v))
    a, b = rng.randint(-2, 2), rng.randint(-2, 2)
    combo = {}
    for k, x in vs[0].items():
        combo[k] = combo.get(k, 0) + a * x
    for k, x in vs[-1].items():
        combo[k] = combo.get(k, 0) + b * x
    assert E.contains(to_field({k: x for k, x in combo.items() if x}))


def test_pivot_is_least_key():
    E = Echelon()
    assert E.insert({(1,): Q(1), (0, 1): Q(2)}) == (0, 1)
    E2 = Echelon(key=lambda c: -c)
    assert E2.insert({1: Q(1), 5: Q(1)}) == 5


def test_dependent_insert_returns_none():
    E = Echelon()
    E.insert({1: Q(1), 2: Q(1)})
    assert E.insert({1: Q(2), 2: Q(2)}) is None
    assert E.rank == 1


def test_coordinates():
    E = Echelon(track=True)
    E.insert({1: Q(1), 2: Q(1)}, "a")
    E.insert({2: Q(1), 3: Q(1)}, "b")
    rest, coords = E.coordinates({1: Q(2), 2: Q(5), 3: Q(3)})
    assert rest == {}
    assert coords == {"a": Q(2), "b": Q(3)}
    rest, _ = E.coordinates({4: Q(1)})
    assert rest == {4: Q(1)}


@given(seeds)
def test_canonical_form_ignores_insertion_order(seed):
    rng = random.Random(seed)
    vs = [to_field(v) for v in random_vectors(rng, 6, 6)]
    A, B = Echelon(), Echelon()
    for v in vs:
        A.insert(v)
    for v in reversed(vs):
        B.insert(v)
    assert A.canonical() == B.canonical()


def test_copy_is_independent():
    E = Echelon()
    E.insert({1: Q(Fraction(1, 2))})
    F = E.copy()
    F.insert({2: Q(1)})
    assert E.rank == 1 and F.rank == 2
