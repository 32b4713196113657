"""Bounded exhaustive searches over B_4 and randomized oracle cross-checks.

The searches enumerate every freely reduced word up to a length bound
(there are 1 + 6(5^L - 1)/4 of them), carrying the left normal form
incrementally so each word costs one table append.  Words are chunked
by a fixed-depth prefix and chunks can run on several threads; results
are merged by a global sort, so the output is byte-identical no matter
how many jobs ran, except for the measured wall time.

``conjecture_search`` keeps words whose strand permutation is (2 3),
deduplicates them into braid classes by normal form, picks the
shortest-then-lexicographically-first word of each class, and reports
the classes passing both the associativity and functoriality
obligations.  Survivors other than s2 and s2^-1 are confirmed again
with the two independent oracles.  ``obstruction_scan`` counts words
satisfying the braiding equation  x s1 s3 = s2 s1 s3 s2 x  (expected:
none).  ``coset_scan`` replays the L = R guarantee on a grid of the
double coset.  ``oracle_fuzz`` compares all three equality oracles on
seeded random word pairs.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import handle
from .derive import check, coset_element, derived_braid
from .garside import braids_equal, left_normal_form, tables
from .kernels import enum_classes, enum_equation
from .lk import lk_equal
from .words import BraidWord, format_word, relation_shuffle, underlying_permutation

ALPHABET = ("1", "-1", "2", "-2", "3", "-3")
_MAX_SEARCH_LEN = 11  # int64 packing bound for keys and word codes

H_LETTERS = (2, 1, 3, 2)
TARGET_IMAGE = (1, 3, 2, 4)


def _letter_of_code(c: int) -> int:
    return (c // 2 + 1) * (1 if c % 2 == 0 else -1)


def _decode_rep(rep: int) -> BraidWord:
    length = rep >> 30
    base = rep & ((1 << 30) - 1)
    codes = []
    for _ in range(length):
        codes.append(base % 6)
        base //= 6
    return BraidWord(4, tuple(_letter_of_code(c) for c in reversed(codes)))


def _prefixes(depth: int) -> list[tuple[int, ...]]:
    words: list[tuple[int, ...]] = [()]
    for _ in range(depth):
        words = [w + (c,) for w in words for c in range(6) if not w or (w[-1] ^ c) != 1]
    return words


def _chunks(max_len: int) -> list[tuple[tuple[int, ...], int, int]]:
    """(prefix, min_len, max_len) triples that partition the word set."""
    depth = min(4, max_len)
    out: list[tuple[tuple[int, ...], int, int]] = []
    if depth > 0:
        out.append(((), 0, depth - 1))
    out.extend((p, depth, max_len) for p in _prefixes(depth))
    return out


def _capacity(prefix_len: int, max_len: int) -> int:
    return sum(5**d for d in range(max_len - prefix_len + 1))


def word_count(max_len: int) -> int:
    """Number of freely reduced words of length <= max_len over six letters."""
    return 1 + 6 * (5**max_len - 1) // 4


@dataclass
class SearchReport:
    """Outcome of a conjecture search; serializes deterministically."""

    max_len: int
    alphabet: list[str]
    words_enumerated: int
    classes_after_dedup: int
    survivors: list[dict]
    wall_time: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    def summary(self) -> str:
        lines = [
            f"max_len {self.max_len}: {self.words_enumerated} words, "
            f"{self.classes_after_dedup} braid classes with permutation (2 3)",
            f"survivors passing both obligations: {len(self.survivors)}",
        ]
        lines.extend(
            f"  word {s['word']!r}  nf {s['normal_form']}" for s in self.survivors
        )
        lines.append(f"wall time {self.wall_time:.2f}s")
        return "\n".join(lines)


@dataclass
class ObstructionReport:
    """Outcome of a braiding-equation scan."""

    max_len: int
    words_enumerated: int
    witnesses_found: int
    witnesses: list[str]
    wall_time: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    def summary(self) -> str:
        head = (
            f"max_len {self.max_len}: {self.words_enumerated} words tested against "
            f"x s1 s3 = s2 s1 s3 s2 x; witnesses: {self.witnesses_found}"
        )
        tail = [f"  {w!r}" for w in self.witnesses]
        tail.append(f"wall time {self.wall_time:.2f}s")
        return "\n".join([head] + tail)


@dataclass
class CosetReport:
    """Outcome of replaying L = R over the parametrized double coset."""

    bound: int
    checked: int
    l_equals_r: int
    failures: list[list[int]]
    candidates: int
    double_passers: list[dict]
    wall_time: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    def summary(self) -> str:
        lines = [
            f"grid [-{self.bound},{self.bound}]^3: {self.checked} coset words, "
            f"L = R holds for {self.l_equals_r}"
            + (f", FAILS for {len(self.failures)}" if self.failures else ""),
            f"(2 3)-candidates: {self.candidates}, of which "
            f"{len(self.double_passers)} also pass functoriality",
        ]
        lines.extend(
            f"  (m,p,q)=({d['m']},{d['p']},{d['q']})  word {d['word']!r}" for d in self.double_passers
        )
        lines.append(f"wall time {self.wall_time:.2f}s")
        return "\n".join(lines)


@dataclass
class FuzzReport:
    """Outcome of randomized three-oracle agreement trials."""

    trials: int
    seed: int
    equal_pairs: int
    unequal_pairs: int
    budget_exhausted: int
    disagreements: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    def summary(self) -> str:
        return (
            f"{self.trials} trials (seed {self.seed}): {self.equal_pairs} equal, "
            f"{self.unequal_pairs} unequal, {self.budget_exhausted} undecided by handle budget, "
            f"{len(self.disagreements)} oracle disagreements"
        )


def _table_args(n: int = 4):
    t = tables(n)
    return (t.gen, t.negf, t.tau, t.w0, t.lmult, t.rmult, t.ldesc, t.rdesc)


def _run_chunks(fn, chunk_args, jobs: int):
    if jobs <= 1:
        return [fn(*a) for a in chunk_args]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda a: fn(*a), chunk_args))


def enumerate_classes(max_len: int, jobs: int = 1, filter_perm: bool = True):
    """All braid classes among freely reduced B_4 words of length <= max_len.

    Returns (words_enumerated, keys, reps): sorted unique normal-form keys
    and the packed shortest-then-lex representative word of each class.
    """
    if not 0 <= max_len <= _MAX_SEARCH_LEN:
        raise ValueError(f"search length must be 0..{_MAX_SEARCH_LEN}, got {max_len}")
    targs = _table_args(4)
    target = np.int64(tables(4).rank_of(TARGET_IMAGE))

    def run(prefix: tuple[int, ...], min_len: int, hi: int):
        cap = _capacity(len(prefix), hi)
        keys = np.empty(cap, dtype=np.int64)
        reps = np.empty(cap, dtype=np.int64)
        n, visited = enum_classes(
            np.asarray(prefix, dtype=np.int64), min_len, hi, max_len, filter_perm, target,
            *targs, keys, reps,
        )
        return keys[:n], reps[:n], visited

    results = _run_chunks(run, _chunks(max_len), jobs)
    visited_total = sum(r[2] for r in results)
    all_keys = np.concatenate([r[0] for r in results])
    all_reps = np.concatenate([r[1] for r in results])
    order = np.lexsort((all_reps, all_keys))
    all_keys = all_keys[order]
    all_reps = all_reps[order]
    first = np.ones(len(all_keys), dtype=bool)
    first[1:] = all_keys[1:] != all_keys[:-1]
    return visited_total, all_keys[first], all_reps[first]


def conjecture_search(max_len: int, jobs: int = 1, seed: int | None = None) -> SearchReport:
    """Search all words up to max_len for interchange candidates passing both obligations."""
    t0 = time.perf_counter()
    visited, keys, reps = enumerate_classes(max_len, jobs=jobs, filter_perm=True)
    survivors = []
    for rep in reps:
        b = _decode_rep(int(rep))
        if check(b, "assoc") and check(b, "funct"):
            survivors.append(b)
    known = (BraidWord(4, (2,)), BraidWord(4, (-2,)))
    rng = None
    if seed is not None:
        import random

        rng = random.Random(seed)
    for b in survivors:
        extra = not any(braids_equal(b, k) for k in known)
        if extra or rng is not None:
            # confirm with the two independent oracles, on the word itself
            # and (when seeded) on a random rewrite of it
            words = [b]
            if rng is not None:
                words.append(relation_shuffle(b, 12, rng))
            for w in words:
                for lhs, rhs in (("L", "R"), ("FL", "FR")):
                    x, y = derived_braid(w, lhs), derived_braid(w, rhs)
                    if handle.handle_equal(x, y) != handle.EQUAL or not lk_equal(x, y):
                        raise AssertionError(
                            f"oracles disagree on survivor {format_word(b)!r}"
                        )
    entries = [
        {
            "word": format_word(b),
            "normal_form": str(left_normal_form(b)),
            "assoc": True,
            "funct": True,
        }
        for b in survivors
    ]
    entries.sort(key=lambda e: e["normal_form"])
    return SearchReport(
        max_len=max_len,
        alphabet=list(ALPHABET),
        words_enumerated=visited,
        classes_after_dedup=int(len(keys)),
        survivors=entries,
        wall_time=round(time.perf_counter() - t0, 3),
    )


def obstruction_scan(max_len: int, jobs: int = 1, witness_cap: int = 32) -> ObstructionReport:
    """Scan all words up to max_len for solutions of the braiding equation."""
    if not 0 <= max_len <= _MAX_SEARCH_LEN:
        raise ValueError(f"search length must be 0..{_MAX_SEARCH_LEN}, got {max_len}")
    t0 = time.perf_counter()
    targs = _table_args(4)
    lhs = np.asarray((1, 3), dtype=np.int64)
    rhs = np.asarray(H_LETTERS, dtype=np.int64)

    def run(prefix: tuple[int, ...], min_len: int, hi: int):
        wits = np.empty(witness_cap, dtype=np.int64)
        stored, total, visited = enum_equation(
            np.asarray(prefix, dtype=np.int64), min_len, hi, lhs, rhs,
            *targs, wits, witness_cap,
        )
        return wits[:stored], total, visited

    results = _run_chunks(run, _chunks(max_len), jobs)
    visited_total = sum(r[2] for r in results)
    total = sum(r[1] for r in results)
    wit_reps = sorted(int(w) for r in results for w in r[0])
    witnesses = [format_word(_decode_rep(w)) for w in wit_reps[:witness_cap]]
    return ObstructionReport(
        max_len=max_len,
        words_enumerated=visited_total,
        witnesses_found=total,
        witnesses=witnesses,
        wall_time=round(time.perf_counter() - t0, 3),
    )


def coset_scan(bound: int) -> CosetReport:
    """Check L = R for every (m, p, q) in [-bound, bound]^3."""
    t0 = time.perf_counter()
    rng = range(-bound, bound + 1)
    checked = good = candidates = 0
    failures: list[list[int]] = []
    double_passers: list[dict] = []
    for m in rng:
        for p in rng:
            for q in rng:
                b = coset_element(m, p, q)
                checked += 1
                if braids_equal(derived_braid(b, "L"), derived_braid(b, "R")):
                    good += 1
                else:
                    failures.append([m, p, q])
                if underlying_permutation(b).image == TARGET_IMAGE:
                    candidates += 1
                    if check(b, "funct"):
                        double_passers.append(
                            {"m": m, "p": p, "q": q, "word": format_word(b)}
                        )
    return CosetReport(
        bound=bound,
        checked=checked,
        l_equals_r=good,
        failures=failures,
        candidates=candidates,
        double_passers=double_passers,
        wall_time=round(time.perf_counter() - t0, 3),
    )


def oracle_fuzz(trials: int, seed: int) -> FuzzReport:
    """Seeded random word pairs, each decided by all three oracles."""
    import random

    t0 = time.perf_counter()
    rng = random.Random(seed)
    equal = unequal = budget = 0
    disagreements: list[dict] = []
    for trial in range(trials):
        n = rng.choice((2, 3, 4, 5, 6))
        letters = [i for i in range(-(n - 1), n) if i != 0]
        a = BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randrange(0, 11))))
        if trial % 2 == 0:
            b = relation_shuffle(a, rng.randrange(1, 21), rng)
        else:
            b = BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randrange(0, 11))))
        nf_eq = braids_equal(a, b)
        lk_eq = lk_equal(a, b)
        h = handle.handle_equal(a, b)
        if h == handle.BUDGET_EXHAUSTED:
            budget += 1
            agree = nf_eq == lk_eq
        else:
            agree = nf_eq == lk_eq == (h == handle.EQUAL)
        if not agree:
            disagreements.append(
                {"n": n, "a": format_word(a), "b": format_word(b),
                 "nf": nf_eq, "handle": h, "lk": lk_eq}
            )
        if nf_eq:
            equal += 1
        else:
            unequal += 1
    return FuzzReport(
        trials=trials,
        seed=seed,
        equal_pairs=equal,
        unequal_pairs=unequal,
        budget_exhausted=budget,
        disagreements=disagreements,
        wall_time=round(time.perf_counter() - t0, 3),
    )
