"""Doubled braids, crossing blocks, coset words and the two obligations."""

import random

import pytest

from braidcat import (
    BraidWord,
    CheckPreconditionError,
    block_cross,
    braiding_equation_holds,
    braids_equal,
    cable,
    check,
    compose,
    coset_element,
    derived_braid,
    embed,
    format_word,
    invert,
    left_normal_form,
    op_transform,
    parse_word,
    rot180,
    underlying_permutation,
)
from braidcat.derive import DERIVED_KINDS, H_GENERATOR, TARGET_CYCLE


def candidates(grid=2):
    out = []
    for m in range(-grid, grid + 1):
        for p in range(-grid, grid + 1):
            for q in range(-grid, grid + 1):
                e = coset_element(m, p, q)
                if underlying_permutation(e).image == TARGET_CYCLE:
                    out.append(e)
    return out


def test_embed_shifts_letters():
    assert embed(parse_word("1 -2", 4), 6, 0).letters == (1, -2)
    assert embed(parse_word("1 -2", 4), 6, 2).letters == (3, -4)
    with pytest.raises(ValueError):
        embed(parse_word("1", 4), 6, 3)


def test_block_cross_examples():
    assert format_word(block_cross(1, 2, 2, 4)) == "2 1 3 2"
    assert format_word(block_cross(3, 2, 1, 6)) == "4 3"
    with pytest.raises(ValueError):
        block_cross(2, 2, 2, 4)


def test_block_cross_crosses_the_blocks():
    # strands p..p+a-1 must end up after the c strands that follow them
    p, a, c, n = 2, 2, 2, 6
    perm = underlying_permutation(block_cross(p, a, c, n))
    assert perm.image == (1, 4, 5, 2, 3, 6)


def test_cable_doubles_single_generator():
    assert format_word(cable(parse_word("1", 2), (2, 2))) == "2 1 3 2"
    with pytest.raises(ValueError):
        cable(parse_word("1", 4), (2, 2))


def test_h_generator_and_half_twist():
    assert H_GENERATOR.letters == (2, 1, 3, 2)
    nf = left_normal_form(compose(H_GENERATOR, parse_word("1 3", 4)))
    assert nf.delta_power == 1
    assert nf.factors == ()


def test_derived_kinds_of_the_generator():
    b = parse_word("2", 4)
    expect = {"L": "2 4 3", "R": "4 2 3", "FL": "3 2 4", "FR": "3 4 2"}
    for kind in DERIVED_KINDS:
        got = derived_braid(b, kind)
        assert got.n == 6
        assert braids_equal(got, parse_word(expect[kind], 6))


def test_derived_braid_needs_four_strands():
    with pytest.raises(ValueError):
        derived_braid(parse_word("1", 3), "L")
    with pytest.raises(ValueError):
        derived_braid(parse_word("2", 4), "LL")


def test_truth_table_of_the_generator():
    b = parse_word("2", 4)
    assert check(b, "assoc") is True
    assert check(b, "funct") is True
    binv = parse_word("-2", 4)
    assert check(binv, "assoc") is True
    assert check(binv, "funct") is True


def test_example_words_truth_table():
    table = {
        "2": (True, True),
        "3 3 2": (False, True),
        "2 1 1": (True, False),
        "2 2 2": (False, False),
    }
    for text, (assoc, funct) in table.items():
        b = parse_word(text, 4)
        assert check(b, "assoc") is assoc
        assert check(b, "funct") is funct


def test_rotation_pairs_up_the_example_words():
    assert rot180(parse_word("3 3 2", 4)) == parse_word("2 1 1", 4)


def test_precondition_names_the_actual_cycle():
    with pytest.raises(CheckPreconditionError) as err:
        check(parse_word("1", 4), "assoc")
    assert "(1 2)" in str(err.value)
    with pytest.raises(CheckPreconditionError):
        check(parse_word("2 2", 4), "funct")
    with pytest.raises(ValueError):
        check(parse_word("2", 4), "bogus")


def test_derived_braids_share_a_permutation_on_candidates():
    for e in candidates(1):
        sl = underlying_permutation(derived_braid(e, "L"))
        sr = underlying_permutation(derived_braid(e, "R"))
        assert sl == sr


def test_rotation_swaps_the_obligations():
    for e in candidates():
        r = rot180(e)
        assert underlying_permutation(r).image == TARGET_CYCLE
        assert check(e, "assoc") == check(r, "funct")
        assert check(e, "funct") == check(r, "assoc")


def test_coset_element_shape():
    assert format_word(coset_element(0, 0, 0)) == "2"
    assert format_word(coset_element(0, 2, -1)) == "2 1 1 -3"
    assert format_word(coset_element(1, 0, 0)) == "2 1 3 2 2"
    assert coset_element(-1, 0, 0).letters == (-2, -3, -1, -2, 2)


def test_diagonal_family_passes_both_obligations():
    for m in range(-2, 3):
        e = coset_element(m, -m, -m)
        assert check(e, "assoc")
        assert check(e, "funct")


def test_op_transforms():
    b = parse_word("2", 4)
    assert op_transform(b, "outer").letters == (2, 1, 3, 2, 2)
    assert op_transform(b, "A").letters == (2, 1)
    assert op_transform(b, "B").letters == (2, 3)
    with pytest.raises(ValueError):
        op_transform(b, "C")
    with pytest.raises(ValueError):
        op_transform(parse_word("1", 3), "A")


def test_braiding_equation_matches_direct_comparison():
    rng = random.Random(40)
    letters = [s * g for g in range(1, 4) for s in (1, -1)]
    for _ in range(30):
        x = BraidWord(4, tuple(rng.choice(letters) for _ in range(rng.randrange(7))))
        direct = braids_equal(compose(x, parse_word("1 3", 4)), compose(H_GENERATOR, x))
        assert braiding_equation_holds(x) == direct


def test_braiding_equation_has_no_small_solutions():
    # exponent sums already rule the equation out, so every sample fails
    rng = random.Random(41)
    letters = [s * g for g in range(1, 4) for s in (1, -1)]
    for _ in range(40):
        x = BraidWord(4, tuple(rng.choice(letters) for _ in range(rng.randrange(9))))
        assert not braiding_equation_holds(x)
    assert not braiding_equation_holds(invert(H_GENERATOR))
