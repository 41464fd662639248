"""Braid word parsing and closure combinatorics."""
import random

import pytest

from walkjones.braid import BraidWord, parse_braid


def rand_braid(rng, max_strands=5, max_len=10):
    m = rng.randint(2, max_strands)
    k = rng.randint(1, max_len)
    crossings = tuple((rng.randint(1, m - 1), rng.choice((1, -1))) for _ in range(k))
    return BraidWord(crossings, m)


def test_parse_figure_eight():
    b = parse_braid("-1 2 -1 2")
    assert b.k == 4
    assert b.strands == 3
    assert b.crossings == ((1, -1), (2, 1), (1, -1), (2, 1))


def test_parse_trefoil():
    b = parse_braid("1 1 1")
    assert b.k == 3 and b.strands == 2


def test_parse_zero_token_rejected():
    with pytest.raises(ValueError):
        parse_braid("0 2")


def test_parse_commas_allowed():
    assert parse_braid("1, -2, 1, -2") == parse_braid("1 -2 1 -2")


def test_parse_strands_override():
    b = parse_braid("1 1 1", strands=4)
    assert b.strands == 4
    with pytest.raises(ValueError):
        parse_braid("1 2 3", strands=2)


def test_parse_empty_with_override():
    b = parse_braid("", strands=3)
    assert b.k == 0 and b.strands == 3
    assert parse_braid("").strands == 1


def test_closure_permutation_figure_eight():
    assert parse_braid("-1 2 -1 2").closure_permutation() == (3, 1, 2)


def test_closure_permutation_trivial():
    assert parse_braid("", strands=1).closure_permutation() == (1,)


def test_closure_permutation_two_crossings_cancel():
    assert parse_braid("1 1").closure_permutation() == (1, 2)


def test_is_knot_closure():
    assert parse_braid("-1 2 -1 2").is_knot_closure()
    assert not parse_braid("1 1").is_knot_closure()
    assert parse_braid("", strands=1).is_knot_closure()


def test_writhe():
    assert parse_braid("-1 2 -1 2").writhe() == 0
    assert parse_braid("1 1 1").writhe() == 3
    assert parse_braid("-1").writhe() == -1


def test_mirror():
    assert parse_braid("-1 2 -1 2").mirror() == parse_braid("1 -2 1 -2")
    assert parse_braid("1 1 1").mirror() == parse_braid("-1 -1 -1")


def test_mirror_involution_random():
    rng = random.Random(5)
    for _ in range(200):
        b = rand_braid(rng)
        assert b.mirror().mirror() == b


def test_mirror_preserves_permutation_and_negates_writhe():
    rng = random.Random(6)
    for _ in range(200):
        b = rand_braid(rng)
        assert b.mirror().closure_permutation() == b.closure_permutation()
        assert b.mirror().writhe() == -b.writhe()


def test_knot_closure_parity():
    # an m-cycle is an odd/even permutation per m-1, so k = m-1 (mod 2)
    rng = random.Random(8)
    seen = 0
    for _ in range(500):
        b = rand_braid(rng)
        if b.is_knot_closure():
            seen += 1
            assert (b.k - (b.strands - 1)) % 2 == 0
            assert (b.writhe() - b.strands + 1) % 2 == 0
    assert seen > 50


def test_bad_construction():
    with pytest.raises(ValueError):
        BraidWord(((3, 1),), 3)
    with pytest.raises(ValueError):
        BraidWord(((1, 2),), 3)
    with pytest.raises(ValueError):
        BraidWord((), 0)


def test_text_roundtrip():
    b = parse_braid("-1 2 -1 2")
    assert parse_braid(b.text()) == b
