"""A faithful matrix oracle for braid equality.

B_n acts on a free module of rank n(n-1)/2 over Z[q^+-1, t^+-1] with
basis vectors x_{i,j} indexed by strand pairs 1 <= i < j <= n.  The
action of sigma_k moves x_{i,j} according to how the crossing at
(k, k+1) meets the pair, with coefficients in q and t; the resulting
representation is faithful, so two words are equal in B_n exactly when
their matrices agree.  All arithmetic is exact integer Laurent
polynomial arithmetic, never floating point, so agreement is a proof
and disagreement is a counterexample.

Matrix size grows quadratically with n; this oracle is kept to n <= 6
(15 x 15), which covers the groups the rest of the package works in.
"""

from __future__ import annotations

from .words import BraidWord

_MAX_N = 6


class LaurentPoly2:
    """An integer Laurent polynomial in q and t, stored as {(qexp, texp): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None) -> None:
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def term(cls, coeff: int, qexp: int = 0, texp: int = 0) -> LaurentPoly2:
        return cls({(qexp, texp): coeff})

    @classmethod
    def zero(cls) -> LaurentPoly2:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly2:
        return cls({(0, 0): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: LaurentPoly2) -> LaurentPoly2:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly2) -> LaurentPoly2:
        return self + (-other)

    def __mul__(self, other: LaurentPoly2) -> LaurentPoly2:
        out: dict[tuple[int, int], int] = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                k = (qa + qb, ta + tb)
                out[k] = out.get(k, 0) + ca * cb
        return LaurentPoly2(out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (qe, te), c in sorted(self.terms.items()):
            factors = [] if abs(c) != 1 else None
            s = "" if c > 0 else "-"
            mon = [f"q^{qe}" if qe not in (0, 1) else ("q" if qe == 1 else "")]
            mon.append(f"t^{te}" if te not in (0, 1) else ("t" if te == 1 else ""))
            mon = [m for m in mon if m]
            if abs(c) != 1 or not mon:
                mon.insert(0, str(abs(c)))
            bits.append(s + "*".join(mon))
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


def _p(spec: list[tuple[int, int, int]]) -> LaurentPoly2:
    return LaurentPoly2({(q, t): c for c, q, t in spec})


_ZERO = LaurentPoly2.zero()
_ONE = LaurentPoly2.one()

Matrix = tuple[tuple[LaurentPoly2, ...], ...]


def basis_index(n: int) -> dict[tuple[int, int], int]:
    """Lex ordering of the strand pairs (i, j), 1 <= i < j <= n."""
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out[(i, j)] = len(out)
    return out


def _column(n: int, k: int, i: int, j: int) -> dict[tuple[int, int], LaurentPoly2]:
    """The image of x_{i,j} under sigma_k, as {basis pair: coefficient}."""
    if k < i - 1 or k > j:
        return {(i, j): _ONE}
    if k == i - 1:
        return {(i - 1, j): _ONE, (i, j): _p([(1, 0, 0), (-1, 1, 0)])}
    if k == i == j - 1:
        return {(i, j): _p([(1, 2, 1)])}
    if k == i:
        return {(i, i + 1): _p([(1, 2, 1), (-1, 1, 1)]), (i + 1, j): _p([(1, 1, 0)])}
    if k < j - 1:
        return {(i, j): _ONE, (k, k + 1): _p([(1, k - i + 2, 1), (-2, k - i + 1, 1), (1, k - i, 1)])}
    if k == j - 1:
        return {(i, j - 1): _ONE, (j - 1, j): _p([(1, j - i + 1, 1), (-1, j - i, 1)])}
    return {(i, j): _p([(1, 0, 0), (-1, 1, 0)]), (i, j + 1): _p([(1, 1, 0)])}  # k == j


def _column_inv(n: int, k: int, i: int, j: int) -> dict[tuple[int, int], LaurentPoly2]:
    """The image of x_{i,j} under sigma_k^-1, solved from the forward action."""
    if k < i - 1 or k > j:
        return {(i, j): _ONE}
    if k == i == j - 1:
        return {(i, j): _p([(1, -2, -1)])}
    if k == j:
        # sigma_k x_{i,k+1} involves x_{i,k}; invert that pair
        return {
            (i, j + 1): _ONE,
            (j, j + 1): _p([(-1, j - i, 0), (1, j - i - 1, 0)]),
        }
    if k == j - 1 and i < j - 1:
        return {
            (i, j - 1): _p([(1, -1, 0)]),
            (i, j): _p([(1, 0, 0), (-1, -1, 0)]),
            (j - 1, j): _p([(-1, j - i - 1, 0), (2, j - i - 2, 0), (-1, j - i - 3, 0)]),
        }
    if k == i:
        return {
            (i, j): _p([(1, 0, 0), (-1, -1, 0)]),
            (i + 1, j): _ONE,
            (i, i + 1): _p([(-1, 0, 0), (2, -1, 0), (-1, -2, 0)]),
        }
    if k == i - 1:
        return {(i - 1, j): _p([(1, -1, 0)]), (i - 1, i): _p([(-1, -1, 0), (1, -2, 0)])}
    # i < k < j - 1
    return {(i, j): _ONE, (k, k + 1): _p([(-1, k - i, 0), (2, k - i - 1, 0), (-1, k - i - 2, 0)])}


def identity_matrix(m: int) -> Matrix:
    return tuple(tuple(_ONE if r == c else _ZERO for c in range(m)) for r in range(m))


_GEN_CACHE: dict[tuple[int, int], Matrix] = {}


def generator_matrix(n: int, letter: int) -> Matrix:
    """The matrix of one signed Artin letter, columns indexed like the basis."""
    if n > _MAX_N:
        raise ValueError(f"matrix oracle covers n <= {_MAX_N}, got n={n}")
    if (n, letter) not in _GEN_CACHE:
        idx = basis_index(n)
        m = len(idx)
        rows = [[_ZERO] * m for _ in range(m)]
        col_of = _column if letter > 0 else _column_inv
        for (i, j), c in idx.items():
            for pair, coeff in col_of(n, abs(letter), i, j).items():
                rows[idx[pair]][c] = coeff
        _GEN_CACHE[(n, letter)] = tuple(tuple(r) for r in rows)
    return _GEN_CACHE[(n, letter)]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m = len(a)
    out = [[_ZERO] * m for _ in range(m)]
    for r in range(m):
        for mid in range(m):
            brc = b[mid]
            arm = a[r][mid]
            if not arm:
                continue
            for c in range(m):
                if brc[c]:
                    out[r][c] = out[r][c] + arm * brc[c]
    return tuple(tuple(r) for r in out)


def lk_matrix(b: BraidWord) -> Matrix:
    """The representation matrix of a word (letter matrices multiplied in order)."""
    m = identity_matrix(len(basis_index(b.n)))
    for letter in b.letters:
        m = _mat_mul(m, generator_matrix(b.n, letter))
    return m


def lk_equal(a: BraidWord, b: BraidWord) -> bool:
    """Decide equality in B_n (n <= 6) by comparing representation matrices."""
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    return lk_matrix(a) == lk_matrix(b)
