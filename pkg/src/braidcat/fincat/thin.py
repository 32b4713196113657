"""Thin instances: the truncated-addition order on {0, ..., K}.

Objects are the integers 0..K, there is exactly one morphism x -> y
when x >= y and none otherwise, and every tensor product is
x (+) y = min(x + y, K) with unit 0.  Because each hom-set has at most
one element, a diagram commutes as soon as its endpoints agree, so the
axiom checks reduce to equalities between integer grids and to the
existence of single morphisms, and both are vectorized exactly over the
full object range.

Coherence data in higher arity reduces to the checked grids: once
(x(+)y)(+)z = x(+)(y(+)z), x(+)y = y(+)x and monotonicity hold on the
full grids, induction on expression size shows every bracketing and
interleaving of a list of objects evaluates to min(sum, K), which is
what makes the six- and eight-object interchange diagrams well-typed
without enumerating six- and eight-dimensional grids.
"""

from __future__ import annotations

import numpy as np

from .core import Failure, Verdict


class ThinInstance:
    """k copies of truncated addition on the poset {0, ..., K}."""

    is_thin = True

    def __init__(self, K: int, k: int = 2):
        if K < 1:
            raise ValueError("K must be at least 1")
        if k < 1:
            raise ValueError("need at least one tensor product")
        self.K = int(K)
        self.k = int(k)
        self.unit = 0

    @property
    def objects(self) -> range:
        return range(self.K + 1)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.k:
            raise ValueError(f"tensor index {i} out of range 1..{self.k}")

    def tob(self, i: int, a: int, b: int) -> int:
        self._check_index(i)
        return min(a + b, self.K)

    def hom_exists(self, a: int, b: int) -> bool:
        return a >= b

    def __repr__(self) -> str:
        return f"ThinInstance(K={self.K}, k={self.k})"


def make_vk(K: int, k: int = 2) -> ThinInstance:
    return ThinInstance(K, k)


def _first_bad(mask: np.ndarray, grids: tuple[np.ndarray, ...]) -> tuple:
    idx = np.argwhere(mask)[0]
    return tuple(int(g[tuple(idx)]) for g in grids)


def check_thin_monoidal(V: ThinInstance) -> Verdict:
    """Exact grid checks for units, associativity, symmetry, monotonicity.

    Monotonicity of (+) in each slot is what makes the product of two
    morphisms exist, so it is the thin form of functoriality; the other
    grids pin down the endpoints of every unit, associator and symmetry
    cell, and thinness supplies commutativity of all diagrams for free.
    """
    K = V.K
    xs = np.arange(K + 1, dtype=np.int64)
    fails: list[Failure] = []

    def plus(a, b):
        return np.minimum(a + b, K)

    if not np.array_equal(plus(xs, 0), xs) or not np.array_equal(plus(0, xs), xs):
        bad = int(xs[plus(xs, 0) != xs][0])
        fails.append(Failure("strict-unit", (bad,), "x (+) 0 must equal x"))

    x, y = np.meshgrid(xs, xs, indexing="ij")
    comm = plus(x, y) != plus(y, x)
    if comm.any():
        fails.append(Failure("commutativity", _first_bad(comm, (x, y)), "x (+) y != y (+) x"))

    mono = np.diff(plus(x, y), axis=0) < 0
    if mono.any():
        i, j = np.argwhere(mono)[0]
        fails.append(Failure("monotonicity", (int(i), int(i) + 1, int(j)), "(+) not monotone in its first slot"))

    x3, y3, z3 = np.meshgrid(xs, xs, xs, indexing="ij")
    assoc = plus(plus(x3, y3), z3) != plus(x3, plus(y3, z3))
    if assoc.any():
        fails.append(Failure("associativity", _first_bad(assoc, (x3, y3, z3)), "bracketings disagree"))

    return Verdict(not fails, fails)


def check_thin_kfold(V: ThinInstance) -> Verdict:
    """Interchange endpoints agree on the full four-object grid.

    All k products coincide, so the only content beyond
    `check_thin_monoidal` is that (a(+)b)(+)(c(+)d) equals
    (a(+)c)(+)(b(+)d) for every quadruple; the interchange cell is then
    the unique endomorphism of that object and all its axioms hold by
    thinness.  The grid is walked in chunks along the first axis to
    bound memory at K = 100.
    """
    base = check_thin_monoidal(V)
    if not base.ok:
        return base
    K = V.K
    xs = np.arange(K + 1, dtype=np.int64)
    fails: list[Failure] = []

    def plus(a, b):
        return np.minimum(a + b, K)

    b3, c3, d3 = np.meshgrid(xs, xs, xs, indexing="ij")
    for a in range(K + 1):
        lhs = plus(plus(a, b3), plus(c3, d3))
        rhs = plus(plus(a, c3), plus(b3, d3))
        bad = lhs != rhs
        if bad.any():
            w = _first_bad(bad, (b3, c3, d3))
            fails.append(Failure("interchange-endpoints", (a,) + w, "middle-four exchange changes the object"))
            break
    return Verdict(not fails, fails)


def materialize(K: int, k: int = 2):
    """Spell a thin instance out as explicit tables for the generic checkers.

    Intended for small K: the morphism id for x >= y is "x>y", every
    structure cell is forced (identities where endpoints coincide), and
    the result exercises exactly the same code paths as hand-built
    tables.  Interchange cells exist for every pair i < j when k >= 2.
    """
    from .core import FinCategory, FinMonoidalInstance

    if K > 8:
        raise ValueError("materialize is meant for small K; use the thin checkers beyond 8")
    objects = list(range(K + 1))
    morphisms = {f"{x}>{y}": (x, y) for x in objects for y in objects if x >= y}
    identities = {x: f"{x}>{x}" for x in objects}
    compose = {
        (f"{y}>{z}", f"{x}>{y}"): f"{x}>{z}"
        for x in objects
        for y in objects
        for z in objects
        if x >= y >= z
    }
    cat = FinCategory(objects, morphisms, identities, compose)

    def plus(a, b):
        return min(a + b, K)

    tob = {}
    tmor = {}
    alpha = {}
    sym = {}
    for i in range(1, k + 1):
        for a in objects:
            for b in objects:
                tob[(i, a, b)] = plus(a, b)
                sym[(i, a, b)] = identities[plus(a, b)]
        for f, (fs, ft) in morphisms.items():
            for g, (gs, gt) in morphisms.items():
                tmor[(i, f, g)] = f"{plus(fs, gs)}>{plus(ft, gt)}"
        for a in objects:
            for b in objects:
                for c in objects:
                    alpha[(i, a, b, c)] = identities[plus(plus(a, b), c)]
    eta = None
    if k >= 2:
        eta = {}
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                for a in objects:
                    for b in objects:
                        for c in objects:
                            for d in objects:
                                eta[(i, j, a, b, c, d)] = identities[plus(plus(a, b), plus(c, d))]
    return FinMonoidalInstance(cat, k, 0, tob, tmor, alpha, sym, eta)
