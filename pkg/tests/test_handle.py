"""Handle reduction: agreement with the exact oracle and budget handling."""

import random

from braidcat import (
    BUDGET_EXHAUSTED,
    EQUAL,
    UNEQUAL,
    BraidWord,
    braids_equal,
    compose,
    handle_equal,
    invert,
    parse_word,
    reduce_word,
)


def rand_word(rng, n, max_len):
    letters = [s * g for g in range(1, n) for s in (1, -1)]
    return BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randrange(max_len + 1))))


def test_verdict_constants_are_distinct():
    assert len({EQUAL, UNEQUAL, BUDGET_EXHAUSTED}) == 3


def test_trivial_cases():
    e = parse_word("", 4)
    assert handle_equal(e, e) == EQUAL
    assert handle_equal(parse_word("1", 4), e) == UNEQUAL
    assert handle_equal(parse_word("1 2 1", 4), parse_word("2 1 2", 4)) == EQUAL


def test_agrees_with_the_exact_oracle():
    rng = random.Random(20)
    for _ in range(200):
        n = rng.choice((3, 4, 5))
        a, b = rand_word(rng, n, 10), rand_word(rng, n, 10)
        verdict = handle_equal(a, b)
        assert verdict in (EQUAL, UNEQUAL)
        assert (verdict == EQUAL) == braids_equal(a, b)


def test_equal_on_shuffled_inverses():
    rng = random.Random(21)
    for _ in range(50):
        b = rand_word(rng, 4, 8)
        assert handle_equal(compose(b, invert(b)), parse_word("", 4)) == EQUAL


def test_reduced_words_are_sigma_definite():
    # the lowest generator index left in a reduced word occurs with a
    # single sign; that is what makes the verdict readable off the word
    rng = random.Random(22)
    for _ in range(200):
        n = rng.choice((3, 4, 5))
        r = reduce_word(rand_word(rng, n, 12))
        assert r is not None
        if r.letters:
            m = min(abs(x) for x in r.letters)
            signs = {x > 0 for x in r.letters if abs(x) == m}
            assert len(signs) == 1


def test_reduction_preserves_the_braid():
    rng = random.Random(23)
    for _ in range(100):
        b = rand_word(rng, 4, 10)
        r = reduce_word(b)
        assert braids_equal(b, r)


def test_tiny_budget_reports_exhaustion():
    w = parse_word("1 2 -1 -2 1 2 -1 -2", 4)
    assert handle_equal(w, parse_word("", 4), budget=1) == BUDGET_EXHAUSTED
    assert reduce_word(w, budget=1) is None
    assert handle_equal(w, parse_word("", 4)) == UNEQUAL
