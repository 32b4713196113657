"""Categories enriched in a finite monoidal instance, and their checkers.

An enriched category here is a finite object set, a hom-object of the
base instance for each ordered pair, a composition cell

    M[(a, b, c)] : hom(b, c) (x) hom(a, b) -> hom(a, c)

and a unit cell j[a] : I -> hom(a, a), all tensoring with product 1 of
the base.  Over a thin base the cells are determined by their
endpoints, so `M` and `j` may be omitted and the checks become
inequalities between integers: hom behaves exactly like a generalized
distance, composition existence is the (truncated) triangle inequality
and unit existence says the self-distance is zero.

Random quasi-metric instances are generated by shortest-path closure of
random nonnegative weights, which satisfies the triangle inequality by
construction and survives truncation at K.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from .core import Failure, Verdict


class FinEnrichedCategory:
    """Objects with hom-objects, composition and unit cells over a base."""

    def __init__(self, V, objects, hom, M=None, j=None, name="A"):
        self.V = V
        self.objects = tuple(objects)
        self.hom = dict(hom)
        self.M = dict(M) if M is not None else None
        self.j = dict(j) if j is not None else None
        self.name = name
        for a, b in itertools.product(self.objects, repeat=2):
            if (a, b) not in self.hom:
                raise ValueError(f"missing hom-object for ({a!r}, {b!r})")

    def d(self, a, b):
        """Hom-object; reads as a distance over a thin base."""
        return self.hom[(a, b)]

    def dist_matrix(self):
        """Hom-objects as an integer matrix indexed by object position."""
        n = len(self.objects)
        mat = np.empty((n, n), dtype=np.int64)
        for ia, a in enumerate(self.objects):
            for ib, b in enumerate(self.objects):
                mat[ia, ib] = self.hom[(a, b)]
        return mat

    def __repr__(self) -> str:
        return f"FinEnrichedCategory({self.name}, {len(self.objects)} objects)"


def quasi_metric_instance(V, labels, dist, name="A") -> FinEnrichedCategory:
    """Wrap a distance table (dict or nested list) as a thin enriched category."""
    labels = tuple(labels)
    hom = {}
    for ia, a in enumerate(labels):
        for ib, b in enumerate(labels):
            v = dist[(a, b)] if isinstance(dist, dict) else dist[ia][ib]
            v = int(v)
            if not 0 <= v <= V.K:
                raise ValueError(f"distance {v} at ({a!r}, {b!r}) outside 0..{V.K}")
            hom[(a, b)] = v
    return FinEnrichedCategory(V, labels, hom, name=name)


def random_quasi_metric(n_points: int, V, rng: random.Random, name="A") -> FinEnrichedCategory:
    """Shortest-path closure of random directed weights, truncated at K.

    Weights are drawn in 1..K; the closure keeps d(a, a) = 0 and the
    triangle inequality, and min(d, K) preserves the truncated triangle
    inequality because the tensor saturates at K as well.
    """
    K = V.K
    big = K * (n_points + 1)
    d = [[0 if i == j else rng.randint(1, K) for j in range(n_points)] for i in range(n_points)]
    for m in range(n_points):
        for i in range(n_points):
            for j in range(n_points):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = min(d[i][m] + d[m][j], big)
    dist = [[min(v, K) for v in row] for row in d]
    return quasi_metric_instance(V, range(n_points), dist, name=name)


def unit_enriched(V, name="I") -> FinEnrichedCategory:
    """One object whose self-hom is the unit of the base."""
    if V.is_thin:
        return FinEnrichedCategory(V, ("*",), {("*", "*"): V.unit}, name=name)
    uid = V.cat.id_of(V.unit)
    return FinEnrichedCategory(
        V, ("*",), {("*", "*"): V.unit}, M={("*", "*", "*"): uid}, j={"*": uid}, name=name
    )


def check_enriched(A: FinEnrichedCategory) -> Verdict:
    """Composition and unit cells exist, are well-typed, and satisfy the laws.

    Thin base: existence of M is min(d(b,c) + d(a,b), K) >= d(a,c) and
    existence of j is d(a,a) = 0; the associativity and unit diagrams
    then commute by thinness.  Table base: the diagrams are evaluated
    cell by cell over all object tuples.
    """
    V = A.V
    fails: list[Failure] = []
    if V.is_thin:
        dm = A.dist_matrix()
        diag = np.diagonal(dm)
        if (diag != 0).any():
            ia = int(np.argwhere(diag != 0)[0][0])
            a = A.objects[ia]
            fails.append(Failure("unit-cell", (a,), f"self-distance {A.d(a, a)} != 0"))
        # bad[a, b, c] <=> min(d(b,c) + d(a,b), K) < d(a,c)
        tri = np.minimum(dm[None, :, :] + dm[:, :, None], V.K)
        bad = tri < dm[:, None, :]
        if bad.any():
            ia, ib, ic = (int(v) for v in np.argwhere(bad)[0])
            a, b, c = A.objects[ia], A.objects[ib], A.objects[ic]
            fails.append(
                Failure(
                    "composition-cell",
                    (a, b, c),
                    f"triangle fails: min({A.d(b, c)} + {A.d(a, b)}, K) < {A.d(a, c)}",
                )
            )
        return Verdict(not fails, fails)

    cat = V.cat
    if A.M is None or A.j is None:
        return Verdict(False, [Failure("cells", (), "table base needs explicit M and j cells")])
    for a, b, c in itertools.product(A.objects, repeat=3):
        m = A.M.get((a, b, c))
        want = (V.tob(1, A.d(b, c), A.d(a, b)), A.d(a, c))
        if m is None or cat.morphisms.get(m) != want:
            fails.append(Failure("composition-typing", (a, b, c), f"cell {m!r} should go {want[0]!r} -> {want[1]!r}"))
            return Verdict(False, fails)
    for a in A.objects:
        jj = A.j.get(a)
        want = (V.unit, A.d(a, a))
        if jj is None or cat.morphisms.get(jj) != want:
            fails.append(Failure("unit-typing", (a,), f"cell {jj!r} should go {want[0]!r} -> {want[1]!r}"))
            return Verdict(False, fails)
    for a, b, c, e in itertools.product(A.objects, repeat=4):
        lhs = cat.chain([
            V.alpha_mor(1, A.d(c, e), A.d(b, c), A.d(a, b)),
            V.tmor(1, cat.id_of(A.d(c, e)), A.M[(a, b, c)]),
            A.M[(a, c, e)],
        ])
        rhs = cat.chain([
            V.tmor(1, A.M[(b, c, e)], cat.id_of(A.d(a, b))),
            A.M[(a, b, e)],
        ])
        if lhs != rhs:
            fails.append(Failure("associativity", (a, b, c, e), f"{lhs!r} != {rhs!r}"))
            break
    for a, b in itertools.product(A.objects, repeat=2):
        f = cat.id_of(A.d(a, b))
        left = cat.comp(A.M[(a, a, b)], V.tmor(1, f, A.j[a]))
        right = cat.comp(A.M[(a, b, b)], V.tmor(1, A.j[b], f))
        if left != f or right != f:
            fails.append(Failure("unit-law", (a, b), "composing with a unit cell is not the identity"))
            break
    return Verdict(not fails, fails)


class FinEnrichedFunctor:
    """Object map plus a base-morphism component per hom-object."""

    def __init__(self, source, target, obj_map, components=None, name="F"):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.components = dict(components) if components is not None else None
        self.name = name

    def fo(self, a):
        try:
            return self.obj_map[a]
        except KeyError:
            raise ValueError(f"functor {self.name} has no image for object {a!r}") from None


def check_functor(F: FinEnrichedFunctor) -> Verdict:
    """Components are well-typed and respect composition and unit cells.

    Thin base: the component a -> b exists exactly when
    d_target(Fa, Fb) <= d_source(a, b), and the two diagrams commute by
    thinness.
    """
    A, B = F.source, F.target
    V = A.V
    fails: list[Failure] = []
    for a in A.objects:
        if F.fo(a) not in B.objects:
            return Verdict(False, [Failure("object-map", (a,), f"image {F.fo(a)!r} not in target")])
    if V.is_thin:
        da = A.dist_matrix()
        db = B.dist_matrix()
        bidx = {b: i for i, b in enumerate(B.objects)}
        img = np.array([bidx[F.fo(a)] for a in A.objects], dtype=np.int64)
        mapped = db[np.ix_(img, img)]
        bad = mapped > da
        if bad.any():
            ia, ib = (int(v) for v in np.argwhere(bad)[0])
            a, b = A.objects[ia], A.objects[ib]
            fails.append(
                Failure(
                    "component",
                    (a, b),
                    f"target distance {B.d(F.fo(a), F.fo(b))} exceeds source {A.d(a, b)}",
                )
            )
        return Verdict(not fails, fails)
    cat = V.cat
    if F.components is None:
        return Verdict(False, [Failure("components", (), "table base needs explicit components")])
    for a, b in itertools.product(A.objects, repeat=2):
        t = F.components.get((a, b))
        want = (A.d(a, b), B.d(F.fo(a), F.fo(b)))
        if t is None or cat.morphisms.get(t) != want:
            fails.append(Failure("component-typing", (a, b), f"cell {t!r} should go {want[0]!r} -> {want[1]!r}"))
            return Verdict(False, fails)
    for a, b, c in itertools.product(A.objects, repeat=3):
        lhs = cat.comp(F.components[(a, c)], A.M[(a, b, c)])
        rhs = cat.comp(
            B.M[(F.fo(a), F.fo(b), F.fo(c))],
            V.tmor(1, F.components[(b, c)], F.components[(a, b)]),
        )
        if lhs != rhs:
            fails.append(Failure("composition-compat", (a, b, c), f"{lhs!r} != {rhs!r}"))
            break
    for a in A.objects:
        if cat.comp(F.components[(a, a)], A.j[a]) != B.j[F.fo(a)]:
            fails.append(Failure("unit-compat", (a,), "component does not carry units to units"))
            break
    return Verdict(not fails, fails)


class FinEnrichedNat:
    """Components I -> target-hom(Fa, Ga) between two parallel functors."""

    def __init__(self, F: FinEnrichedFunctor, G: FinEnrichedFunctor, components=None, name="t"):
        if F.source is not G.source or F.target is not G.target:
            raise ValueError("transformation needs parallel functors")
        self.F = F
        self.G = G
        self.components = dict(components) if components is not None else None
        self.name = name


def check_nat(t: FinEnrichedNat) -> Verdict:
    """Components exist and the two whiskered composites agree.

    Thin base: a component at `a` exists exactly when the target
    distance from Fa to Ga is zero, and the square commutes by
    thinness.
    """
    F, G = t.F, t.G
    A, B = F.source, F.target
    V = A.V
    fails: list[Failure] = []
    if V.is_thin:
        for a in A.objects:
            if B.d(F.fo(a), G.fo(a)) != 0:
                fails.append(
                    Failure("component", (a,), f"distance {B.d(F.fo(a), G.fo(a))} from Fa to Ga is not 0")
                )
                break
        return Verdict(not fails, fails)
    cat = V.cat
    if t.components is None:
        return Verdict(False, [Failure("components", (), "table base needs explicit components")])
    for a in A.objects:
        c = t.components.get(a)
        want = (V.unit, B.d(F.fo(a), G.fo(a)))
        if c is None or cat.morphisms.get(c) != want:
            fails.append(Failure("component-typing", (a,), f"cell {c!r} should go {want[0]!r} -> {want[1]!r}"))
            return Verdict(False, fails)
    for a, b in itertools.product(A.objects, repeat=2):
        lhs = cat.comp(
            B.M[(F.fo(a), G.fo(a), G.fo(b))],
            V.tmor(1, G.components[(a, b)], t.components[a]),
        )
        rhs = cat.comp(
            B.M[(F.fo(a), F.fo(b), G.fo(b))],
            V.tmor(1, t.components[b], F.components[(a, b)]),
        )
        if lhs != rhs:
            fails.append(Failure("naturality", (a, b), f"{lhs!r} != {rhs!r}"))
            break
    return Verdict(not fails, fails)
