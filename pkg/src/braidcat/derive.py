"""Derived braids: how a 4-strand braid acts after its strands are doubled.

Doubling the strands of b in B_4 in two different orders gives two
braids in B_6: embed b on four of the six strands and then cable it
with the complementary widths, or cable first and embed after.  The
four results

    L(b)  = embed(b, 0) . cable(b, [2, 2, 1, 1])
    R(b)  = embed(b, 2) . cable(b, [1, 1, 2, 2])
    FL(b) = cable(b, [1, 2, 1, 2]) . embed(b, 2)
    FR(b) = cable(b, [2, 1, 2, 1]) . embed(b, 0)

encode the two candidate interchange maps: a braid whose strand
permutation is (2 3) passes the associativity obligation when
L(b) = R(b) and the functoriality obligation when FL(b) = FR(b).

Words of the form (s2 s1 s3 s2)^m s2 s1^p s3^q form a double coset on
which L = R always holds; ``coset_element`` builds them and
``op_transform`` steps between them.  ``braiding_equation_holds`` tests
the equation  x s1 s3 = s2 s1 s3 s2 x  that a braiding built from an
interchange candidate x would have to satisfy.
"""

from __future__ import annotations

from .garside import braids_equal
from .words import BraidWord, compose, invert, underlying_permutation

H_GENERATOR = BraidWord(4, (2, 1, 3, 2))
TARGET_CYCLE = (1, 3, 2, 4)  # the transposition (2 3) as an image tuple


class CheckPreconditionError(ValueError):
    """Raised when a word's strand permutation rules the check out entirely."""


def embed(b: BraidWord, n_target: int, offset: int = 0) -> BraidWord:
    """Include B_n into B_m on strands offset+1 .. offset+n."""
    if n_target < b.n + offset:
        raise ValueError(f"cannot place {b.n} strands at offset {offset} inside B_{n_target}")
    return BraidWord(
        n_target, tuple((abs(k) + offset) * (1 if k > 0 else -1) for k in b.letters)
    )


def block_cross(p: int, a: int, c: int, n: int) -> BraidWord:
    """A block of a parallel strands at position p crossing over the c strands after it.

    The word is prod_{j=0..c-1} (s_{p+a-1+j} ... s_{p+j}), all positive.
    """
    if p < 1 or a < 1 or c < 1:
        raise ValueError(f"need p, a, c >= 1, got p={p} a={a} c={c}")
    if p + a + c - 1 > n:
        raise ValueError(f"blocks of widths {a}+{c} at position {p} do not fit in B_{n}")
    letters = []
    for j in range(c):
        letters.extend(range(p + a - 1 + j, p + j - 1, -1))
    return BraidWord(n, tuple(letters))


def cable(b: BraidWord, widths: list[int] | tuple[int, ...]) -> BraidWord:
    """Replace each strand of b by a parallel block of the given width.

    ``widths`` lists the block widths top to bottom; blocks travel with
    the strands, so the width list is permuted as letters are read.  A
    positive letter becomes a positive block crossing; a negative
    letter becomes the exact inverse of the block crossing that would
    undo it, so cabling sends inverse words to inverse words.
    """
    if len(widths) != b.n:
        raise ValueError(f"need {b.n} widths, got {len(widths)}")
    if any(w < 1 for w in widths):
        raise ValueError(f"widths must be positive, got {list(widths)}")
    n_out = sum(widths)
    w = list(widths)
    out = BraidWord(n_out, ())
    for k in b.letters:
        i = abs(k)
        p = 1 + sum(w[: i - 1])
        u, v = w[i - 1], w[i]
        if k > 0:
            out = compose(out, block_cross(p, u, v, n_out))
        else:
            out = compose(out, invert(block_cross(p, v, u, n_out)))
        w[i - 1], w[i] = v, u
    return out


DERIVED_KINDS = ("L", "R", "FL", "FR")


def derived_braid(b: BraidWord, kind: str) -> BraidWord:
    """One of the four doubled versions of a 4-strand braid, in B_6."""
    if b.n != 4:
        raise ValueError(f"derived braids are defined for B_4 words, got n={b.n}")
    if kind == "L":
        return compose(embed(b, 6, 0), cable(b, (2, 2, 1, 1)))
    if kind == "R":
        return compose(embed(b, 6, 2), cable(b, (1, 1, 2, 2)))
    if kind == "FL":
        return compose(cable(b, (1, 2, 1, 2)), embed(b, 6, 2))
    if kind == "FR":
        return compose(cable(b, (2, 1, 2, 1)), embed(b, 6, 0))
    raise ValueError(f"unknown derived-braid kind {kind!r}, expected one of {DERIVED_KINDS}")


def check(b: BraidWord, kind: str) -> bool:
    """Decide one obligation for an interchange candidate.

    ``kind`` is 'assoc' (L = R) or 'funct' (FL = FR).  The word must
    permute strands by (2 3); anything else is not a candidate and
    raises CheckPreconditionError rather than returning False.
    """
    perm = underlying_permutation(b)
    if perm.image != TARGET_CYCLE:
        raise CheckPreconditionError(
            f"candidate must permute strands by (2 3), this word gives {perm.cycle_string()}"
        )
    if kind == "assoc":
        return braids_equal(derived_braid(b, "L"), derived_braid(b, "R"))
    if kind == "funct":
        return braids_equal(derived_braid(b, "FL"), derived_braid(b, "FR"))
    raise ValueError(f"unknown check kind {kind!r}, expected 'assoc' or 'funct'")


def coset_element(m: int, p: int, q: int) -> BraidWord:
    """The word (s2 s1 s3 s2)^m s2 s1^p s3^q in B_4; exponents may be negative."""

    def power(word: tuple[int, ...], e: int) -> tuple[int, ...]:
        if e >= 0:
            return word * e
        return tuple(-k for k in reversed(word)) * (-e)

    letters = power(H_GENERATOR.letters, m) + (2,) + power((1,), p) + power((3,), q)
    return BraidWord(4, letters)


def op_transform(b: BraidWord, which: str) -> BraidWord:
    """Act on a candidate: 'outer' left-multiplies by s2 s1 s3 s2, 'A' and 'B' right-multiply by s1 and s3."""
    if b.n != 4:
        raise ValueError(f"transforms act on B_4 words, got n={b.n}")
    if which == "outer":
        return compose(H_GENERATOR, b)
    if which == "A":
        return compose(b, BraidWord(4, (1,)))
    if which == "B":
        return compose(b, BraidWord(4, (3,)))
    raise ValueError(f"unknown transform {which!r}, expected 'outer', 'A' or 'B'")


def braiding_equation_holds(x: BraidWord) -> bool:
    """Whether  x s1 s3 = s2 s1 s3 s2 x  holds in B_4."""
    if x.n != 4:
        raise ValueError(f"the braiding equation lives in B_4, got n={x.n}")
    return braids_equal(compose(x, BraidWord(4, (1, 3))), compose(H_GENERATOR, x))
