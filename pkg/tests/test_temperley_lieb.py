from __future__ import annotations

import itertools
import random

import pytest

from tlcrystals.temperley_lieb import (
    NoncrossingMatching,
    TLElement,
    TLError,
    all_reduced_words,
    compatible_types,
    f_coeff,
    generator,
    identity,
    inversions,
    is_321_avoiding,
    is_compatible,
    matching_of_321,
    permutation_of_word,
    reduced_word,
    theta,
    tl_basis,
    tl_multiply,
)
from tlcrystals.sympoly import permutation_sign

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def brute_noncrossing(n: int) -> set[NoncrossingMatching]:
    labels = [("L", i) for i in range(1, n + 1)] + [("R", i) for i in range(n, 0, -1)]
    pos = {lab: k for k, lab in enumerate(labels)}

    def matchings(pts):
        if not pts:
            yield []
            return
        a = pts[0]
        for k in range(1, len(pts)):
            for rest in matchings(pts[1:k] + pts[k + 1 :]):
                yield [(a, pts[k])] + rest

    out = set()
    for m in matchings(labels):
        arcs = [sorted((pos[a], pos[b])) for a, b in m]
        if not any(a < c < b < d for (a, b), (c, d) in itertools.permutations(arcs, 2)):
            out.add(NoncrossingMatching(n, m))
    return out


def trace_product(a: NoncrossingMatching, b: NoncrossingMatching) -> tuple[NoncrossingMatching, int]:
    """Concatenation by walking strands point by point."""
    n = a.n
    pa = {x: y for p in a.pairs for x, y in (p, p[::-1])}
    pb = {x: y for p in b.pairs for x, y in (p, p[::-1])}
    # outer points: ("A", L i) and ("B", R i); middle points: ("M", i)
    def step(side, lab):
        # returns next point after following the diagram `side` from `lab`
        other = (pa if side == "A" else pb)[lab]
        if side == "A" and other[0] == "R":
            return ("M", other[1]), "B"
        if side == "B" and other[0] == "L":
            return ("M", other[1]), "A"
        return ("out", side, other), None

    pairs, used_mid = [], set()
    outer = [("A", ("L", i)) for i in range(1, n + 1)] + [("B", ("R", i)) for i in range(1, n + 1)]
    done = set()
    for side, lab in outer:
        if (side, lab) in done:
            continue
        cur_side, cur = side, lab
        while True:
            nxt, nside = step(cur_side, cur)
            if nxt[0] == "out":
                end = (nxt[1], nxt[2])
                break
            used_mid.add(nxt[1])
            cur_side, cur = nside, ("L", nxt[1]) if nside == "B" else ("R", nxt[1])
        done.add((side, lab))
        done.add(end)
        pairs.append((lab, end[1]))
    loops = 0
    seen = set(used_mid)
    for i in range(1, n + 1):
        if i in seen:
            continue
        loops += 1
        j, side = i, "A"
        while j not in seen:
            seen.add(j)
            lab = pa[("R", j)] if side == "A" else pb[("L", j)]
            j = lab[1]
            side = "B" if side == "A" else "A"
    return NoncrossingMatching(n, pairs), loops


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_counts(n):
    basis = tl_basis(n)
    assert len(basis) == CATALAN[n]
    assert set(basis) == brute_noncrossing(n)
    avoiders = [v for v in itertools.permutations(range(1, n + 1)) if is_321_avoiding(v)]
    assert len(avoiders) == CATALAN[n]


def test_generators_and_identity():
    assert str(identity(2)) == "[L1-R1, L2-R2]"
    assert str(generator(1, 2)) == "[L1-L2, R1-R2]"
    with pytest.raises(TLError):
        generator(2, 2)


def test_matching_text_roundtrip():
    m = NoncrossingMatching.parse("[L1-L2,L3-L4,R1-R4,R2-R3]")
    assert str(m) == "[L1-L2, L3-L4, R1-R4, R2-R3]"
    with pytest.raises(TLError):
        NoncrossingMatching.parse("[L1-R2, L2-R1]")
    with pytest.raises(TLError):
        NoncrossingMatching.parse("[L1-R1]", n=2)


def test_small_products():
    t1 = TLElement.basis(generator(1, 2))
    assert tl_multiply(t1, t1) == t1.scale(2)
    t = [None] + [TLElement.basis(generator(i, 3)) for i in (1, 2)]
    prod = tl_multiply(t[1], t[2])
    assert prod == TLElement.basis(NoncrossingMatching.parse("[L1-L2, L3-R1, R2-R3]"))


def test_five_fold_product():
    n = 4
    g = {i: TLElement.basis(generator(i, n)) for i in (1, 2, 3)}
    prod = g[1]
    for i in (3, 2, 1, 3):
        prod = tl_multiply(prod, g[i])
    assert prod == tl_multiply(g[1], g[3]).scale(2)


@pytest.mark.parametrize("n", range(2, 7))
def test_relations(n):
    g = {i: TLElement.basis(generator(i, n)) for i in range(1, n)}
    for i in g:
        assert tl_multiply(g[i], g[i]) == g[i].scale(2)
        for j in g:
            if abs(i - j) == 1:
                assert tl_multiply(tl_multiply(g[i], g[j]), g[i]) == g[i]
            elif abs(i - j) > 1:
                assert tl_multiply(g[i], g[j]) == tl_multiply(g[j], g[i])


@pytest.mark.parametrize("n", range(1, 6))
def test_associativity_and_trace_oracle(n):
    rng = random.Random(100 + n)
    basis = tl_basis(n)
    for _ in range(30):
        a, b, c = (rng.choice(basis) for _ in range(3))
        ea, eb, ec = (TLElement.basis(x) for x in (a, b, c))
        assert tl_multiply(tl_multiply(ea, eb), ec) == tl_multiply(ea, tl_multiply(eb, ec))
        m, loops = trace_product(a, b)
        assert tl_multiply(ea, eb) == TLElement.basis(m, 2**loops)


def test_reduced_words():
    assert reduced_word((1, 2, 3)) == ()
    assert len(reduced_word((3, 2, 1))) == 3 and not is_321_avoiding((3, 2, 1))
    assert len(reduced_word((2, 3, 1))) == 2 and is_321_avoiding((2, 3, 1))
    for n in range(1, 5):
        for v in itertools.permutations(range(1, n + 1)):
            w = reduced_word(v)
            assert len(w) == inversions(v)
            assert permutation_of_word(w, n) == v


def test_f_coeff_small():
    e, s1 = (1, 2), (2, 1)
    assert f_coeff(e, s1) == -1
    assert f_coeff(s1, s1) == 1
    assert theta(s1) == TLElement.basis(generator(1, 2)) - TLElement.one(2)
    with pytest.raises(TLError):
        f_coeff((3, 2, 1), (1, 2, 3))


@pytest.mark.parametrize("n", range(1, 5))
def test_f_coeff_identity_and_sign(n):
    e = tuple(range(1, n + 1))
    for v in itertools.permutations(e):
        assert f_coeff(e, v) == permutation_sign([x - 1 for x in v])
    for w in itertools.permutations(e):
        if is_321_avoiding(w):
            assert f_coeff(w, e) == (1 if w == e else 0)


@pytest.mark.parametrize("n", range(1, 5))
def test_f_coeff_independent_of_reduced_word(n):
    from tlcrystals.temperley_lieb import word_element

    for v in itertools.permutations(range(1, n + 1)):
        words = all_reduced_words(v)
        values = {word_element(w, n, shift=-1) for w in words}
        assert len(values) == 1
        assert values == {theta(v)}


def test_321_matching_roundtrip():
    for n in range(1, 6):
        mats = {matching_of_321(v) for v in itertools.permutations(range(1, n + 1)) if is_321_avoiding(v)}
        assert mats == set(tl_basis(n))


def test_compatibility():
    e2 = identity(2)
    assert is_compatible(e2, {1}, {1})
    assert not is_compatible(e2, {1}, {2})
    with pytest.raises(TLError):
        is_compatible(e2, {1}, set())
    for n in range(1, 6):
        odd = set(range(1, n + 1, 2))
        assert compatible_types(odd, odd, n) == list(tl_basis(n))
