"""Small hand-sized table instances used by tests and demonstrations.

The discrete cyclic instance has objects Z_n with only identity
morphisms and every tensor given by addition mod n, so all structure
cells are forced identities and the interchange hexagons quantify over
genuine 6- and 8-tuples of distinct objects.  The one-object instance
has morphism monoid {1, s} with s * s = 1; its single associator cell
can be corrupted from the identity to s, which slips past naturality
(the monoid is commutative) but is caught by the pentagon, making it a
sharp probe that the pentagon loop really runs.

Over a discrete base, an enriched category amounts to a cocycle: the
composition cell forces d(a, b) + d(b, c) = d(a, c) in Z_n, so any
potential function phi induces one via d(a, b) = phi(b) - phi(a).
"""

from __future__ import annotations

from .core import FinCategory, FinMonoidalInstance
from .enriched import FinEnrichedCategory


def discrete_monoid_instance(n: int = 3, k: int = 3) -> FinMonoidalInstance:
    """Z_n with addition as every tensor and identity structure cells."""
    objects = list(range(n))
    morphisms = {f"id{a}": (a, a) for a in objects}
    identities = {a: f"id{a}" for a in objects}
    compose = {(f"id{a}", f"id{a}"): f"id{a}" for a in objects}
    cat = FinCategory(objects, morphisms, identities, compose)
    tob = {}
    tmor = {}
    alpha = {}
    sym = {}
    eta = {}
    for i in range(1, k + 1):
        for a in objects:
            for b in objects:
                s = (a + b) % n
                tob[(i, a, b)] = s
                tmor[(i, f"id{a}", f"id{b}")] = f"id{s}"
                sym[(i, a, b)] = f"id{s}"
                for c in objects:
                    alpha[(i, a, b, c)] = f"id{(a + b + c) % n}"
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            for a in objects:
                for b in objects:
                    for c in objects:
                        for d in objects:
                            eta[(i, j, a, b, c, d)] = f"id{(a + b + c + d) % n}"
    return FinMonoidalInstance(cat, k, 0, tob, tmor, alpha, sym, eta)


def one_object_involution_instance() -> FinMonoidalInstance:
    """One object, morphisms {1, s} with s * s = 1, tensor = multiplication."""
    o = "*"
    morphisms = {"1": (o, o), "s": (o, o)}
    compose = {
        ("1", "1"): "1",
        ("1", "s"): "s",
        ("s", "1"): "s",
        ("s", "s"): "1",
    }
    cat = FinCategory((o,), morphisms, {o: "1"}, compose)
    tmor = {
        (1, "1", "1"): "1",
        (1, "1", "s"): "s",
        (1, "s", "1"): "s",
        (1, "s", "s"): "1",
    }
    return FinMonoidalInstance(
        cat,
        1,
        o,
        {(1, o, o): o},
        tmor,
        {(1, o, o, o): "1"},
        sym={(1, o, o): "1"},
    )


def two_object_sign_instance() -> FinMonoidalInstance:
    """Objects Z_2, homs {1, s} on each object, tensor adds objects and multiplies signs.

    The sign morphisms give parallel arrows, so an interchange cell can
    be redirected without breaking typing; that is what lets tests reach
    the associativity and giant-hexagon clauses of the interchange
    checker rather than stopping at a typing failure.
    """
    objects = [0, 1]
    morphisms = {}
    compose = {}
    for x in objects:
        morphisms[f"1_{x}"] = (x, x)
        morphisms[f"s_{x}"] = (x, x)
        compose[(f"1_{x}", f"1_{x}")] = f"1_{x}"
        compose[(f"1_{x}", f"s_{x}")] = f"s_{x}"
        compose[(f"s_{x}", f"1_{x}")] = f"s_{x}"
        compose[(f"s_{x}", f"s_{x}")] = f"1_{x}"
    cat = FinCategory(objects, morphisms, {x: f"1_{x}" for x in objects}, compose)
    tob = {}
    tmor = {}
    alpha = {}
    sym = {}
    for a in objects:
        for b in objects:
            r = (a + b) % 2
            tob[(1, a, b)] = r
            sym[(1, a, b)] = f"1_{r}"
            for c in objects:
                alpha[(1, a, b, c)] = f"1_{(a + b + c) % 2}"
            for ea in "1s":
                for eb in "1s":
                    sign = "1" if ea == eb else "s"
                    tmor[(1, f"{ea}_{a}", f"{eb}_{b}")] = f"{sign}_{r}"
    return FinMonoidalInstance(cat, 1, 0, tob, tmor, alpha, sym)


def potential_enriched_instance(V: FinMonoidalInstance, potentials: dict, name: str = "P") -> FinEnrichedCategory:
    """Cocycle enrichment over a discrete cyclic base from a potential."""
    n = len(V.cat.objects)
    objects = tuple(potentials)
    hom = {
        (a, b): (potentials[b] - potentials[a]) % n
        for a in objects
        for b in objects
    }
    M = {
        (a, b, c): V.cat.id_of(hom[(a, c)])
        for a in objects
        for b in objects
        for c in objects
    }
    j = {a: V.cat.id_of(0) for a in objects}
    return FinEnrichedCategory(V, objects, hom, M=M, j=j, name=name)
