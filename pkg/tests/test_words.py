import random

import pytest
from hypothesis import given, strategies as st

from mapclass import words
from mapclass.words import (
    Automorphism,
    RankError,
    Word,
    WordTooLong,
    abelianize_word,
    aut_apply,
    aut_compose,
    aut_equal,
    concat,
    conjugate,
    cyclic_key,
    cyclic_reduce,
    inner_witness,
    invert,
    power,
    reduce,
)

from oracles import conjugacy_class_min, from_str, rewrite_reduce, to_str


def letters(rank, max_size=12):
    return st.lists(
        st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_size
    )


def word(rank, max_size=12):
    return letters(rank, max_size).map(lambda ls: Word(ls, rank))


# ---- examples -----------------------------------------------------------

def test_reduce_examples():
    assert reduce([1, -1], 3).letters == ()
    assert reduce([1, 2], 3).letters == (1, 2)
    assert reduce([1, 2, -2, 2, 3, -3], 3).letters == (1, 2)


def test_concat_invert_conjugate_examples():
    w = Word([1, 2, -3], 3)
    e = Word((), 3)
    assert concat(w, e) == w
    assert concat(w, invert(w)) == e
    assert conjugate(Word([1], 3), Word([2], 3)).letters == (2, 1, -2)


def test_rank_errors():
    with pytest.raises(RankError):
        Word([4], 3)
    with pytest.raises(RankError):
        Word([0], 3)
    with pytest.raises(RankError):
        concat(Word([1], 2), Word([1], 3))


def test_cyclic_key_examples():
    x1 = Word([1], 2)
    assert cyclic_key(conjugate(x1, Word([2], 2))) == cyclic_key(x1)
    assert cyclic_key(invert(Word([1, 2], 2))) == cyclic_key(Word([1, 2], 2))
    assert cyclic_key(Word((), 2)) == ()


def test_length_cap(monkeypatch):
    monkeypatch.setattr(words, "max_length", 10)
    with pytest.raises(WordTooLong):
        power(Word([1, 2], 2), 6)


def test_inner_witness_examples():
    assert inner_witness(Automorphism.identity(4)).letters == ()
    # a transvection-type map is not inner
    phi = Automorphism.from_images([(1, 2), (2,)], [(1, -2), (2,)], 2)
    assert inner_witness(phi) is None
    with pytest.raises(RankError):
        inner_witness(Automorphism.identity(1))


def test_str():
    assert str(Word([1, -2], 2)) == "x1 X2"
    assert str(Word((), 2)) == "1"


# ---- exhaustive oracles (length <= 8, rank <= 3) --------------------------

def _exhaustive_reduce(rank, max_len):
    import itertools

    alpha = "aAbBcC"[: 2 * rank]
    bad = 0
    for n in range(max_len + 1):
        for tup in itertools.product(alpha, repeat=n):
            s = "".join(tup)
            if to_str(Word(from_str(s), rank).letters) != rewrite_reduce(s):
                bad += 1
    return bad


def reduced_words(rank, max_len):
    gens = [k for i in range(1, rank + 1) for k in (i, -i)]
    layer = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (a,) for w in layer for a in gens if not w or w[-1] != -a]


def _exhaustive_conjugacy(rank, max_len):
    bad = 0
    for lt in reduced_words(rank, max_len):
        if cyclic_key(Word(lt, rank, _trusted=True)) != from_str(conjugacy_class_min(to_str(lt))):
            bad += 1
    return bad


@pytest.mark.parametrize("rank", [1, 2])
def test_reduce_exhaustive_small_rank(rank):
    assert _exhaustive_reduce(rank, 8) == 0


@pytest.mark.parametrize("rank", [1, 2])
def test_conjugacy_exhaustive_small_rank(rank):
    assert _exhaustive_conjugacy(rank, 8) == 0


def test_equal_keys_iff_conjugate_up_to_inversion():
    # pairwise on a smaller window: keys agree exactly when some rotation
    # of one cyclic reduction equals a rotation of the other or its inverse
    from oracles import all_words, cyclic_rewrite, invert_str

    ws = list(all_words(2, 4, reduced=True))

    def rots(s):
        return {s[k:] + s[:k] for k in range(len(s))} or {""}

    for u in ws[:60]:
        cu = cyclic_rewrite(u)
        cls = rots(cu) | rots(invert_str(cu))
        for v in ws:
            same = cyclic_rewrite(v) in cls
            assert (cyclic_key(Word(from_str(u), 2)) == cyclic_key(Word(from_str(v), 2))) == same


# ---- properties -----------------------------------------------------------

@given(letters(3, 20))
def test_reduce_idempotent_and_agrees_with_rewriting(ls):
    w = reduce(ls, 3)
    assert reduce(w.letters, 3) == w
    assert to_str(w.letters) == rewrite_reduce(to_str(ls))


@given(word(3), word(3))
def test_cyclic_key_conjugation_invariant(u, v):
    assert cyclic_key(conjugate(u, v)) == cyclic_key(u)
    assert cyclic_key(invert(u)) == cyclic_key(u)


@given(word(3))
def test_cyclic_reduce(u):
    c = cyclic_reduce(u)
    if len(c) >= 2:
        assert c.letters[0] != -c.letters[-1]


def _random_aut(rnd, rank, steps=6):
    """Random product of elementary Nielsen moves, with exact inverses."""
    phi = Automorphism.identity(rank)
    for _ in range(steps):
        i, j = rnd.sample(range(1, rank + 1), 2)
        e = rnd.choice([1, -1])
        # x_i -> x_i x_j^e, inverse x_i -> x_i x_j^-e
        fwd = [Word([k] if k != i else [i, e * j], rank) for k in range(1, rank + 1)]
        bwd = [Word([k] if k != i else [i, -e * j], rank) for k in range(1, rank + 1)]
        phi = aut_compose(Automorphism(fwd, bwd), phi)
    return phi


@given(st.integers(0, 10**6), word(3))
def test_aut_apply_homomorphic_and_inverse(seed, u):
    rnd = random.Random(seed)
    phi = _random_aut(rnd, 3)
    v = Word([rnd.choice([1, -1, 2, -2, 3, -3]) for _ in range(5)], 3)
    assert aut_apply(phi, concat(u, v)) == concat(aut_apply(phi, u), aut_apply(phi, v))
    assert phi.apply_inverse(phi(u)) == u
    ident = aut_compose(phi, phi.inverse())
    assert aut_equal(ident, Automorphism.identity(3))
    assert aut_equal(aut_compose(phi.inverse(), phi), Automorphism.identity(3))


@given(st.integers(0, 10**6))
def test_aut_compose_associative(seed):
    rnd = random.Random(seed)
    a, b, c = (_random_aut(rnd, 3, 4) for _ in range(3))
    assert aut_compose(aut_compose(a, b), c) == aut_compose(a, aut_compose(b, c))


def test_aut_compose_order():
    # psi applied first
    rnd = random.Random(1)
    a, b = _random_aut(rnd, 2), _random_aut(rnd, 2)
    u = Word([1, 2, -1], 2)
    assert aut_compose(a, b)(u) == a(b(u))


def test_inner_automorphism_convention():
    w = Word([1, 2], 2)
    phi = Automorphism.inner(w)
    u = Word([2, 2, -1], 2)
    assert phi(u) == conjugate(u, w)
    # phi(x) = w x w^-1 = v^-1 x v with v = w^-1
    assert inner_witness(phi) == invert(w)


def test_inner_witness_hundred_random_conjugations():
    rnd = random.Random(20240601)
    for _ in range(100):
        rank = rnd.choice([2, 3, 4])
        n = rnd.randint(0, 20)
        v = Word([rnd.choice([k for i in range(1, rank + 1) for k in (i, -i)]) for _ in range(n)], rank)
        phi = Automorphism.inner(invert(v))
        w = inner_witness(phi)
        assert w is not None
        assert all(
            phi.fwd[i - 1] == conjugate(Word([i], rank), invert(w)) for i in range(1, rank + 1)
        )
        assert w == v


@given(st.integers(0, 10**6))
def test_inner_witness_absent_off_identity_homology(seed):
    rnd = random.Random(seed)
    phi = _random_aut(rnd, 3, 3)
    hom = [abelianize_word(w) for w in phi.fwd]
    if hom != [[int(i == j) for j in range(3)] for i in range(3)]:
        assert inner_witness(phi) is None
