"""Bounded searches: enumeration counts, dedup, survivors, fuzzing."""

import itertools
import json

from braidcat import (
    BraidWord,
    conjecture_search,
    coset_scan,
    nf_key,
    obstruction_scan,
    oracle_fuzz,
    underlying_permutation,
    word_count,
)
from braidcat.derive import TARGET_CYCLE

ALPHABET = (1, -1, 2, -2, 3, -3)


def brute_words(max_len):
    """All freely reduced-in-place words: no letter directly followed by its inverse."""
    out = [()]
    for length in range(1, max_len + 1):
        for w in itertools.product(ALPHABET, repeat=length):
            if any(w[i] == -w[i + 1] for i in range(length - 1)):
                continue
            out.append(w)
    return out


def test_word_count_matches_brute_enumeration():
    for L in range(4):
        assert word_count(L) == len(brute_words(L))


def test_word_count_closed_form():
    for L in range(8):
        assert word_count(L) == 1 + 6 * (5 ** L - 1) // 4


def test_survivors_at_length_one():
    r = conjecture_search(1)
    assert sorted(s["word"] for s in r.survivors) == ["-2", "2"]
    assert all(s["assoc"] and s["funct"] for s in r.survivors)
    assert r.words_enumerated == word_count(1)


def test_dedup_count_matches_brute_force():
    r = conjecture_search(4)
    keys = set()
    for w in brute_words(4):
        b = BraidWord(4, w)
        if underlying_permutation(b).image == TARGET_CYCLE:
            keys.add(nf_key(b))
    assert r.classes_after_dedup == len(keys)
    assert r.words_enumerated == word_count(4)


def test_parallel_jobs_change_nothing_but_wall_time():
    a = conjecture_search(3, jobs=1)
    b = conjecture_search(3, jobs=4)
    assert a.survivors == b.survivors
    assert a.words_enumerated == b.words_enumerated
    assert a.classes_after_dedup == b.classes_after_dedup


def test_search_report_serializes():
    r = conjecture_search(2)
    d = json.loads(r.to_json())
    assert d["max_len"] == 2
    assert d["words_enumerated"] == r.words_enumerated
    assert [s["word"] for s in d["survivors"]] == [s["word"] for s in r.survivors]


def test_obstruction_scan_small():
    r = obstruction_scan(6)
    assert r.witnesses_found == 0
    assert r.witnesses == []
    assert r.words_enumerated == word_count(6)


def test_obstruction_scan_parallel_agrees():
    a = obstruction_scan(5, jobs=1)
    b = obstruction_scan(5, jobs=3)
    assert (a.words_enumerated, a.witnesses_found) == (b.words_enumerated, b.witnesses_found)


def test_coset_scan_unit_cube():
    r = coset_scan(1)
    assert r.checked == 27
    assert r.l_equals_r == 27
    assert r.failures == []
    assert r.candidates == 9
    dp = {(d["m"], d["p"], d["q"]) for d in r.double_passers}
    assert {(0, 0, 0), (1, -1, -1), (-1, 1, 1)} <= dp


def test_oracle_fuzz_accounts_for_every_trial():
    r = oracle_fuzz(60, seed=3)
    assert r.trials == 60
    assert r.disagreements == []
    assert r.equal_pairs + r.unequal_pairs + r.budget_exhausted == r.trials
    assert r.equal_pairs > 0 and r.unequal_pairs > 0


def test_oracle_fuzz_is_seeded():
    a = oracle_fuzz(40, seed=9)
    b = oracle_fuzz(40, seed=9)
    assert (a.equal_pairs, a.unequal_pairs) == (b.equal_pairs, b.unequal_pairs)
