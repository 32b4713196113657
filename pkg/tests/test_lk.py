"""Matrix oracle: defining relations, inverses, agreement, polynomial ring."""

import random

import pytest

from braidcat import BraidWord, braids_equal, compose, invert, lk_equal, lk_matrix, parse_word
from braidcat.lk import LaurentPoly2, identity_matrix


def rand_word(rng, n, max_len):
    letters = [s * g for g in range(1, n) for s in (1, -1)]
    return BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randrange(max_len + 1))))


def test_poly_ring_arithmetic():
    one = LaurentPoly2({(0, 0): 1})
    t = LaurentPoly2({(1, 0): 1})
    q = LaurentPoly2({(0, 1): 1})
    assert t * q == q * t
    assert (one + t) * (one + q) == one + t + q + t * q
    assert t + (-t) == LaurentPoly2()
    assert (t - t) == LaurentPoly2()
    tinv = LaurentPoly2({(-1, 0): 1})
    assert t * tinv == one


def test_far_generators_commute():
    for n in (4, 5, 6):
        a = lk_matrix(parse_word("1 3", n))
        b = lk_matrix(parse_word("3 1", n))
        assert a == b


def test_braid_relation_holds_in_the_representation():
    for n in (3, 4, 5, 6):
        for i in range(1, n - 1):
            lhs = lk_matrix(BraidWord(n, (i, i + 1, i)))
            rhs = lk_matrix(BraidWord(n, (i + 1, i, i + 1)))
            assert lhs == rhs


def test_generator_matrices_are_invertible():
    for n in (3, 4, 5):
        for i in range(1, n):
            g = BraidWord(n, (i,))
            prod = lk_matrix(compose(g, invert(g)))
            assert prod == identity_matrix(len(lk_matrix(g)))


def test_identity_word_maps_to_identity_matrix():
    for n in (3, 4, 6):
        m = lk_matrix(parse_word("", n))
        assert m == identity_matrix(len(m))


def test_agrees_with_the_exact_oracle():
    rng = random.Random(30)
    for _ in range(150):
        n = rng.choice((3, 4))
        a, b = rand_word(rng, n, 8), rand_word(rng, n, 8)
        assert lk_equal(a, b) == braids_equal(a, b)


def test_detects_inequality_of_close_words():
    assert not lk_equal(parse_word("1 2", 4), parse_word("2 1", 4))
    assert not lk_equal(parse_word("1", 4), parse_word("-1", 4))
    assert lk_equal(parse_word("1 2 1", 4), parse_word("2 1 2", 4))


def test_large_strand_counts_are_refused():
    with pytest.raises(ValueError):
        lk_matrix(parse_word("1", 7))
    with pytest.raises(ValueError):
        lk_equal(parse_word("1", 8), parse_word("1", 8))
