"""Handle reduction: a normal-form-free decision procedure for braid equality.

A sigma_i-handle is a subword  sigma_i^e v sigma_i^-e  whose interior v
uses no generator with index <= i.  Reducing it deletes the outer pair
and rewrites each interior sigma_{i+1}^d as
sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e, an equality that follows from
the braid relations, so the represented element never changes.  A word
with no handles and at least one letter uses its lowest occurring
generator with a single sign, and such words are never trivial; hence
a word reduces to the empty word exactly when it represents the
identity.  Reduction always terminates, but no small bound on the
number of steps is known, so a step budget keeps the oracle honest:
when it runs out the verdict says so instead of guessing.
"""

from __future__ import annotations

from .words import BraidWord, compose, free_reduce, invert

EQUAL = "equal"
UNEQUAL = "unequal"
BUDGET_EXHAUSTED = "budget_exhausted"

DEFAULT_BUDGET = 10**6


def _free_reduce_list(w: list[int]) -> list[int]:
    out: list[int] = []
    for k in w:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return out


def _first_handle(w: list[int], maxgen: int) -> tuple[int, int] | None:
    """The handle closing earliest in the word, as (open, close) positions."""
    last = [-1] * (maxgen + 1)  # last position holding a generator of index <= i
    for pos, k in enumerate(w):
        i = abs(k)
        p = last[i]
        if p >= 0 and w[p] == -k:
            return p, pos
        for j in range(i, maxgen + 1):
            last[j] = pos
    return None


def _reduce_handle(w: list[int], p: int, q: int) -> list[int]:
    i, e = abs(w[p]), (1 if w[p] > 0 else -1)
    mid: list[int] = []
    for k in w[p + 1 : q]:
        if abs(k) == i + 1:
            mid.extend((-e * (i + 1), (1 if k > 0 else -1) * i, e * (i + 1)))
        else:
            mid.append(k)
    return w[:p] + mid + w[q + 1 :]


def reduce_word(b: BraidWord, budget: int = DEFAULT_BUDGET) -> BraidWord | None:
    """Reduce until handle-free, or return None if the budget runs out."""
    w = _free_reduce_list(list(b.letters))
    maxgen = b.n - 1
    for _ in range(budget):
        h = _first_handle(w, maxgen)
        if h is None:
            return BraidWord(b.n, tuple(w))
        w = _free_reduce_list(_reduce_handle(w, *h))
    return None


def handle_equal(a: BraidWord, b: BraidWord, budget: int = DEFAULT_BUDGET) -> str:
    """Compare two words; returns 'equal', 'unequal' or 'budget_exhausted'."""
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    diff = free_reduce(compose(a, invert(b)))
    if not diff.letters:
        return EQUAL
    reduced = reduce_word(diff, budget)
    if reduced is None:
        return BUDGET_EXHAUSTED
    return EQUAL if not reduced.letters else UNEQUAL
