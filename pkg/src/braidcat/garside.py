"""Garside left normal forms in B_n and exact word-problem decisions.

Every braid has a unique expression Delta^p f_1 ... f_k where Delta is
the positive half twist, each f_i is a simple element (a positive braid
whose strands cross at most once, one per permutation), no f_i is
trivial or Delta, and each adjacent pair is left-weighted: every
generator dividing f_{i+1} on the left already divides f_i on the
right.  Two words are equal in the group exactly when these forms
coincide, which makes the normal form a complete equality oracle.

Simple elements are identified with permutations of 1..n and handled
as ranks into multiplication and descent tables built once per strand
count.  Table size is n!, so strand counts above 8 are refused.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .kernels import nf_of_word
from .words import BraidWord, Permutation

_MAX_N = 8


class GarsideTables:
    """Per-n lookup tables over the n! simple elements, ranked in lex order."""

    def __init__(self, n: int) -> None:
        perms = list(itertools.permutations(range(1, n + 1)))
        order = len(perms)
        rank_of = {p: r for r, p in enumerate(perms)}
        images = np.array(perms, dtype=np.int8)
        lmult = np.empty((order, n - 1), dtype=np.int32)
        rmult = np.empty((order, n - 1), dtype=np.int32)
        ldesc = np.zeros(order, dtype=np.int64)
        inv = np.empty(order, dtype=np.int32)
        for r, p in enumerate(perms):
            for s in range(n - 1):
                q = list(p)
                q[s], q[s + 1] = q[s + 1], q[s]
                lmult[r, s] = rank_of[tuple(q)]
                a, b = s + 1, s + 2
                rmult[r, s] = rank_of[tuple(b if v == a else a if v == b else v for v in p)]
                if p[s] > p[s + 1]:
                    ldesc[r] |= 1 << s
            ip = [0] * n
            for i, v in enumerate(p):
                ip[v - 1] = i + 1
            inv[r] = rank_of[tuple(ip)]
        rdesc = ldesc[inv]
        tau = np.empty(order, dtype=np.int32)
        for r, p in enumerate(perms):
            tau[r] = rank_of[tuple(n + 1 - p[n - 1 - i] for i in range(n))]
        w0 = rank_of[tuple(range(n, 0, -1))]
        gen = np.zeros(n, dtype=np.int32)
        negf = np.zeros(n, dtype=np.int32)
        for i in range(1, n):
            gen[i] = lmult[0, i - 1]
            negf[i] = rmult[w0, i - 1]  # the simple Delta sigma_i^-1

        self.n = n
        self.order = order
        self.images = images
        self.lmult = lmult
        self.rmult = rmult
        self.ldesc = ldesc
        self.rdesc = rdesc
        self.tau = tau
        self.inv = inv
        self.w0 = w0
        self.gen = gen
        self.negf = negf

    def rank_permutation(self, r: int) -> Permutation:
        return Permutation(tuple(int(v) for v in self.images[r]))

    def rank_of(self, image: tuple[int, ...]) -> int:
        hits = np.where((self.images == np.asarray(image, dtype=np.int8)).all(axis=1))[0]
        if len(hits) != 1:
            raise ValueError(f"not a permutation image for n={self.n}: {image}")
        return int(hits[0])


_TABLES: dict[int, GarsideTables] = {}


def tables(n: int) -> GarsideTables:
    """The (cached) simple-element tables for B_n."""
    if n not in _TABLES:
        if not 2 <= n <= _MAX_N:
            raise ValueError(f"normal-form tables cover 2 <= n <= {_MAX_N}, got n={n}")
        _TABLES[n] = GarsideTables(n)
    return _TABLES[n]


@dataclass(frozen=True)
class GarsideNormalForm:
    """The unique left normal form Delta^delta_power f_1 ... f_k."""

    n: int
    delta_power: int
    factors: tuple[Permutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def infimum(self) -> int:
        return self.delta_power

    @property
    def supremum(self) -> int:
        return self.delta_power + len(self.factors)

    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def __str__(self) -> str:
        parts = [f"D^{self.delta_power}"]
        parts.extend(" ".join(str(v) for v in f.image) for f in self.factors)
        return " | ".join(parts)


def _nf_raw(b: BraidWord) -> tuple[int, tuple[int, ...]]:
    t = tables(b.n)
    letters = np.asarray(b.letters, dtype=np.int64)
    buf = np.empty(len(b.letters) + 1, dtype=np.int32)
    delta, nfac = nf_of_word(
        letters, buf, t.gen, t.negf, t.tau, t.w0, t.lmult, t.rmult, t.ldesc, t.rdesc
    )
    return int(delta), tuple(int(r) for r in buf[:nfac])


def left_normal_form(b: BraidWord) -> GarsideNormalForm:
    """Compute the left normal form of a word."""
    t = tables(b.n)
    delta, ranks = _nf_raw(b)
    return GarsideNormalForm(b.n, delta, tuple(t.rank_permutation(r) for r in ranks))


def nf_key(b: BraidWord) -> tuple[int, int, tuple[int, ...]]:
    """A hashable complete invariant: (n, delta power, factor ranks)."""
    delta, ranks = _nf_raw(b)
    return (b.n, delta, ranks)


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    """Decide equality in B_n by comparing left normal forms."""
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    return nf_key(a) == nf_key(b)


def is_trivial(b: BraidWord) -> bool:
    """Whether the word represents the identity braid."""
    delta, ranks = _nf_raw(b)
    return delta == 0 and not ranks


def permutation_word(p: Permutation) -> list[int]:
    """A reduced positive word for a permutation, by greedy descent stripping."""
    img = list(p.image)
    out: list[int] = []
    while True:
        for s in range(len(img) - 1):
            if img[s] > img[s + 1]:
                out.append(s + 1)
                img[s], img[s + 1] = img[s + 1], img[s]
                break
        else:
            return out


def normal_form_word(nf: GarsideNormalForm) -> BraidWord:
    """Rebuild a braid word from a normal form (a round-trip oracle)."""
    t = tables(nf.n)
    delta_word = permutation_word(t.rank_permutation(t.w0))
    letters: list[int] = []
    if nf.delta_power >= 0:
        letters.extend(delta_word * nf.delta_power)
    else:
        letters.extend([-k for k in reversed(delta_word)] * (-nf.delta_power))
    for f in nf.factors:
        letters.extend(permutation_word(f))
    return BraidWord(nf.n, tuple(letters))
