from __future__ import annotations

import itertools

import pytest

from tlcrystals.partitions import SkewShape, SkewSSYT, enumerate_skew_ssyt
from tlcrystals.shuffle import (
    ShuffleError,
    ShufflePair,
    ShuffleTableau,
    content_weight,
    enumerate_shuffle,
    from_cover,
    is_valid_rows,
    shape_of,
    shape_params,
    shuffle,
    tl_type,
    to_cover,
    unshuffle,
)
from tlcrystals.sympoly import SymPoly

# A six-row reference tableau, rows top to bottom.
RUNNING = ShuffleTableau(
    (
        (11, (1, 3)),
        (6, (2, 2, 2, 4, 4)),
        (3, (1, 1, 1, 2, 3)),
        (2, (1, 2, 4, 4, 4)),
        (1, (1, 2, 2, 3)),
        (2, (3, 4)),
    )
)
RUNNING_RED = SkewSSYT(SkewShape.parse("7,6,4/5,1,0"), ((1, 3), (1, 1, 1, 2, 3), (1, 2, 2, 3)))
RUNNING_BLUE = SkewSSYT(SkewShape.parse("7,5,2/2,0,0"), ((2, 2, 2, 4, 4), (1, 2, 4, 4, 4), (3, 4)))


def test_shape_params_small():
    p = shape_params((4, 3, 3), (3, 2, 1))
    assert p.columns == ((3, 3), (2, 2), (1, 3))
    assert str(p.red) == "2,2/1,0"
    # blue row sits at column 2, so its inner part is 0
    assert str(p.blue) == "1/0"
    assert shape_params((1,), (0,)).columns == ((1, 1),)


def test_shape_params_running_example():
    p = shape_params((10, 10, 8, 7, 5, 3), (8, 5, 3, 2, 1, 1))
    assert p.red == RUNNING_RED.shape
    assert p.blue == RUNNING_BLUE.shape


def test_shape_params_errors():
    with pytest.raises(ShuffleError, match="not a valid shuffle shape"):
        shape_params((3, 3, 3), (0,))
    with pytest.raises(ShuffleError, match="not a valid shuffle shape"):
        shape_params((2, 1), (0, 2))


def test_shuffle_running_example():
    t = shuffle(ShufflePair(RUNNING_RED, RUNNING_BLUE))
    assert t == RUNNING
    assert shape_of(t) == ((10, 10, 8, 7, 5, 3), (8, 5, 3, 2, 1, 1))
    assert unshuffle(t) == ShufflePair(RUNNING_RED, RUNNING_BLUE)


def test_running_example_type_and_first_path():
    assert str(tl_type(RUNNING).matching) == "[L1-L2, L3-R1, L4-L5, L6-R4, R2-R3, R5-R6]"
    assert to_cover(RUNNING).paths[0].step_heights == (1, 3)


def test_single_red_row():
    red = SkewSSYT(SkewShape.parse("3/1"), ((1, 2),))
    blue = SkewSSYT(SkewShape.parse("0/0"), ())
    t = shuffle(ShufflePair(red, blue))
    assert t.rows == ((3, (1, 2)),)


def test_roundtrip_on_running_shape():
    p = shape_params((10, 10, 8, 7, 5, 3), (8, 5, 3, 2, 1, 1))
    reds = enumerate_skew_ssyt(p.red, 4)[:40]
    blues = enumerate_skew_ssyt(p.blue, 4)[:40]
    for r, b in itertools.product(reds, blues):
        pair = ShufflePair(r, b)
        assert unshuffle(shuffle(pair)) == pair


def test_enumeration_counts():
    assert len(enumerate_shuffle((4, 3, 3), (3, 2, 1), 3)) == 24
    assert [str(t) for t in enumerate_shuffle((1,), (0,), 2)] == ["c1:1", "c1:2"]


def brute_shuffle(mu, nu, m):
    """All row fillings at the derived columns accepted by the validator."""
    p = shape_params(mu, nu)
    lengths = [(e - s) // 2 + 1 for s, e in p.columns]
    out = []
    for flat in itertools.product(range(1, m + 1), repeat=sum(lengths)):
        rows, k = [], 0
        for (s, _), n in zip(p.columns, lengths):
            rows.append((s, tuple(flat[k : k + n])))
            k += n
        if is_valid_rows(rows):
            out.append(ShuffleTableau(tuple(rows)))
    return sorted(out, key=ShuffleTableau.sort_key)


@pytest.mark.parametrize(
    "mu, nu, m",
    [((4, 3, 3), (3, 2, 1), 3), ((2, 2), (1, 0), 3), ((3, 2, 1), (1, 0, 0), 2), ((3, 3, 2, 2), (2, 1, 1, 0), 2)],
)
def test_validator_accepts_exactly_the_shuffles(mu, nu, m):
    assert enumerate_shuffle(mu, nu, m) == brute_shuffle(mu, nu, m)


def test_validator_rejections():
    with pytest.raises(ShuffleError, match="parity"):
        ShuffleTableau(((2, (1,)),))
    with pytest.raises(ShuffleError, match="strictly"):
        ShuffleTableau(((3, (1,)), (2, (1,)), (1, (1, 1))))
    with pytest.raises(ShuffleError, match="weakly"):
        ShuffleTableau(((1, (2, 1)),))


def test_example_highest_tableau_types(tau1, tau2):
    a = ShuffleTableau(((3, (1,)), (2, (1,)), (1, (1, 2))))
    b = ShuffleTableau(((3, (1,)), (2, (1,)), (1, (2, 2))))
    assert tl_type(a).matching == tau1
    assert tl_type(b).matching == tau2


def test_to_cover_roundtrip_and_weights():
    ts = enumerate_shuffle((4, 3, 3), (3, 2, 1), 3)
    for t in ts:
        w = to_cover(t, 3)
        assert from_cover(w) == t
        assert w.weight() == content_weight(t, 3)[1]
        assert sum(content_weight(t)[0]) == 4
        assert shape_params(*shape_of(t)).columns == tuple((t.start(r), t.end(r)) for r in range(1, 4))


def test_one_box_cover():
    w = to_cover(ShuffleTableau(((1, (2,)),)))
    assert len(w.paths) == 1 and w.paths[0].step_heights == (2,)


def test_content_weight():
    assert content_weight(ShuffleTableau(())) == ((), SymPoly.const(0))
    c, mono = content_weight(ShuffleTableau(((1, (1, 2)),)), 3)
    assert c == (1, 1) and mono == SymPoly.monomial((1, 1, 0))


def test_serialization():
    assert str(RUNNING) == "c11:1,3;c6:2,2,2,4,4;c3:1,1,1,2,3;c2:1,2,4,4,4;c1:1,2,2,3;c2:3,4"
    assert ShuffleTableau.parse(str(RUNNING)) == RUNNING
    assert ShuffleTableau.from_json(RUNNING.to_json()) == RUNNING
    with pytest.raises(ShuffleError):
        ShuffleTableau.parse("x1:1")
