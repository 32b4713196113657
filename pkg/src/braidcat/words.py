"""Braid words and the permutations underlying them.

A word in the braid group B_n is stored as a sequence of nonzero signed
integers: the letter ``k > 0`` is the Artin generator sigma_k (strand k
crosses over strand k+1) and ``k < 0`` is its inverse.  Letters are read
left to right, matching braid diagrams read top to bottom.

Permutations are written as image tuples on ``1..n`` and composed in
diagram order: ``(x * y)(i) = y(x(i))``, so that the strand permutation
of a concatenation is the product of the strand permutations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n given by its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The adjacent transposition (i, i+1) in S_n."""
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.image)

    def __mul__(self, other: Permutation) -> Permutation:
        # self first, then other
        return Permutation(tuple(other.image[v - 1] for v in self.image))

    def inverse(self) -> Permutation:
        img = [0] * self.n
        for i, v in enumerate(self.image):
            img[v - 1] = i + 1
        return Permutation(tuple(img))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    def cycle_string(self) -> str:
        """Cycle notation with fixed points omitted, e.g. '(2 3)'."""
        seen = [False] * self.n
        parts = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            v = self.image[start - 1]
            while v != start:
                cyc.append(v)
                seen[v - 1] = True
                v = self.image[v - 1]
            if len(cyc) > 1:
                parts.append("(" + " ".join(str(c) for c in cyc) + ")")
        return "".join(parts) if parts else "()"

    def __str__(self) -> str:
        return self.cycle_string()


@dataclass(frozen=True)
class BraidWord:
    """A word in B_n: strand count plus a tuple of signed generator letters."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"braid group needs at least 2 strands, got n={self.n}")
        for k in self.letters:
            if k == 0 or abs(k) >= self.n:
                raise ValueError(f"letter {k} out of range for B_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse a whitespace-separated list of signed letters into a word in B_n.

    The empty string parses to the empty word.
    """
    letters = []
    for tok in text.split():
        try:
            k = int(tok)
        except ValueError:
            raise ValueError(f"bad letter {tok!r}: expected a nonzero integer") from None
        if k == 0:
            raise ValueError("bad letter '0': generator indices start at 1")
        if abs(k) >= n:
            raise ValueError(f"letter {k} out of range for B_{n} (allowed 1..{n - 1})")
        letters.append(k)
    return BraidWord(n, tuple(letters))


def format_word(b: BraidWord) -> str:
    """Render a word as space-separated signed letters; empty word is ''."""
    return " ".join(str(k) for k in b.letters)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenate two words on the same strand count."""
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    return BraidWord(a.n, a.letters + b.letters)


def invert(b: BraidWord) -> BraidWord:
    """The group inverse: reverse the word and flip every sign."""
    return BraidWord(b.n, tuple(-k for k in reversed(b.letters)))


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for k in b.letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return BraidWord(b.n, tuple(out))


def rot180(b: BraidWord) -> BraidWord:
    """Rotate the diagram by a half turn: reverse the word and send index i to n-i."""
    return BraidWord(b.n, tuple((b.n - abs(k)) * (1 if k > 0 else -1) for k in reversed(b.letters)))


def underlying_permutation(b: BraidWord) -> Permutation:
    """The strand permutation, forgetting crossing signs."""
    img = list(range(1, b.n + 1))
    for k in b.letters:
        i = abs(k)
        # the crossing swaps whichever strands currently end at positions i, i+1
        for j, v in enumerate(img):
            if v == i:
                img[j] = i + 1
            elif v == i + 1:
                img[j] = i
    return Permutation(tuple(img))


def exponent_sum(b: BraidWord) -> int:
    """Sum of letter signs; invariant under the braid relations."""
    return sum(1 if k > 0 else -1 for k in b.letters)


def relation_shuffle(b: BraidWord, moves: int, rng: random.Random) -> BraidWord:
    """Rewrite a word by random relation-preserving moves.

    Moves: insert a cancelling pair, delete one, swap far commuting
    letters, or rewrite a braid-relation triple.  The result represents
    the same group element.
    """
    w = list(b.letters)
    for _ in range(moves):
        kind = rng.randrange(4)
        if kind == 0:
            i = rng.randint(1, b.n - 1) * rng.choice((1, -1))
            pos = rng.randint(0, len(w))
            w[pos:pos] = [i, -i]
        elif kind == 1:
            spots = [p for p in range(len(w) - 1) if w[p] == -w[p + 1]]
            if spots:
                p = rng.choice(spots)
                del w[p : p + 2]
        elif kind == 2:
            spots = [p for p in range(len(w) - 1) if abs(abs(w[p]) - abs(w[p + 1])) >= 2]
            if spots:
                p = rng.choice(spots)
                w[p], w[p + 1] = w[p + 1], w[p]
        else:
            # sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}, same for inverses
            spots = []
            for p in range(len(w) - 2):
                x, y, z = w[p], w[p + 1], w[p + 2]
                if x == z and (y == x + 1 or y == x - 1) and abs(abs(x) - abs(y)) == 1:
                    spots.append(p)
            if spots:
                p = rng.choice(spots)
                x, y = w[p], w[p + 1]
                w[p], w[p + 1], w[p + 2] = y, x, y
    return BraidWord(b.n, tuple(w))
