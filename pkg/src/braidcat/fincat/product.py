"""Products of enriched categories via a second tensor, and their laws.

Enrichment always uses product 1 of the base.  For 1 <= i <= k - 1 the
i-th product of enriched categories A and B has object pairs, hom

    (A (x)_i B)((a, b), (a2, b2)) = A(a, a2) (x)_{i+1} B(b, b2),

composition routed through the interchange cell eta^{1, i+1} followed by
the two compositions tensored with product i + 1, and unit cells
j_A (x)_{i+1} j_B.  The verifier checks, on concrete instances, every
clause of the claim that this makes enriched categories over a k-fold
base into a (k-1)-fold structure: products are again enriched, the
one-object unit instance is a strict two-sided unit, rebracketing of a
triple product is an enriched functor with associator components, and
the interchange of a quadruple product is an enriched functor with
interchange components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import Verdict
from .enriched import FinEnrichedFunctor, FinEnrichedCategory, check_enriched, check_functor, unit_enriched


def product_enriched(A: FinEnrichedCategory, B: FinEnrichedCategory, i: int = 1) -> FinEnrichedCategory:
    """The i-th product; needs the base to have at least i + 1 tensors."""
    V = A.V
    if B.V is not V:
        raise ValueError("both factors must live over the same base instance")
    if not 1 <= i <= V.k - 1:
        raise ValueError(f"product index {i} needs base tensors 1..{i + 1}, have k={V.k}")
    objects = [(a, b) for a in A.objects for b in B.objects]
    hom = {
        ((a, b), (a2, b2)): V.tob(i + 1, A.d(a, a2), B.d(b, b2))
        for (a, b) in objects
        for (a2, b2) in objects
    }
    name = f"({A.name}*{i}*{B.name})"
    if V.is_thin:
        return FinEnrichedCategory(V, objects, hom, name=name)
    M = {}
    for (a, b), (a2, b2), (a3, b3) in itertools.product(objects, repeat=3):
        swap = V.eta_mor(1, i + 1, A.d(a2, a3), B.d(b2, b3), A.d(a, a2), B.d(b, b2))
        M[((a, b), (a2, b2), (a3, b3))] = V.cat.comp(
            V.tmor(i + 1, A.M[(a, a2, a3)], B.M[(b, b2, b3)]), swap
        )
    j = {(a, b): V.tmor(i + 1, A.j[a], B.j[b]) for (a, b) in objects}
    return FinEnrichedCategory(V, objects, hom, M=M, j=j, name=name)


def alpha1_functor(A, B, C, i: int = 1) -> FinEnrichedFunctor:
    """Rebracketing (A *i B) *i C -> A *i (B *i C) with associator components."""
    source = product_enriched(product_enriched(A, B, i), C, i)
    target = product_enriched(A, product_enriched(B, C, i), i)
    obj_map = {((a, b), c): (a, (b, c)) for ((a, b), c) in source.objects}
    V = A.V
    components = None
    if not V.is_thin:
        components = {}
        for x, y in itertools.product(source.objects, repeat=2):
            ((a, b), c), ((a2, b2), c2) = x, y
            components[(x, y)] = V.alpha_mor(i + 1, A.d(a, a2), B.d(b, b2), C.d(c, c2))
    return FinEnrichedFunctor(source, target, obj_map, components, name=f"alpha1[{i}]")


def eta1_functor(A, B, C, D, i: int = 1, j: int = 2) -> FinEnrichedFunctor:
    """Interchange (A *j B) *i (C *j D) -> (A *i C) *j (B *i D).

    Components are the base interchange cells eta^{i+1, j+1}, so the
    base must carry at least j + 1 tensors.
    """
    if not i < j:
        raise ValueError("need i < j")
    source = product_enriched(product_enriched(A, B, j), product_enriched(C, D, j), i)
    target = product_enriched(product_enriched(A, C, i), product_enriched(B, D, i), j)
    obj_map = {((a, b), (c, d)): ((a, c), (b, d)) for ((a, b), (c, d)) in source.objects}
    V = A.V
    components = None
    if not V.is_thin:
        components = {}
        for x, y in itertools.product(source.objects, repeat=2):
            ((a, b), (c, d)), ((a2, b2), (c2, d2)) = x, y
            components[(x, y)] = V.eta_mor(
                i + 1, j + 1, A.d(a, a2), B.d(b, b2), C.d(c, c2), D.d(d, d2)
            )
    return FinEnrichedFunctor(source, target, obj_map, components, name=f"eta1[{i},{j}]")


def _same_category(P: FinEnrichedCategory, Q: FinEnrichedCategory, relabel) -> bool:
    """Equality of instances after renaming P's objects through `relabel`."""
    if [relabel(x) for x in P.objects] != list(Q.objects):
        return False
    for x, y in itertools.product(P.objects, repeat=2):
        if P.d(x, y) != Q.d(relabel(x), relabel(y)):
            return False
    if (P.M is None) != (Q.M is None):
        return False
    if P.M is not None:
        for x, y, z in itertools.product(P.objects, repeat=3):
            if P.M[(x, y, z)] != Q.M[(relabel(x), relabel(y), relabel(z))]:
                return False
        for x in P.objects:
            if P.j[x] != Q.j[relabel(x)]:
                return False
    return True


@dataclass
class Theorem41Report:
    obligations: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(status != "fail" for _, status, _ in self.obligations)

    def add(self, name: str, verdict: Verdict | bool, detail: str = "") -> None:
        if isinstance(verdict, Verdict):
            status = "pass" if verdict.ok else "fail"
            if not verdict.ok and not detail:
                detail = verdict.failures[0].axiom + " at " + repr(verdict.failures[0].witness)
        else:
            status = "pass" if verdict else "fail"
        self.obligations.append((name, status, detail))

    def skip(self, name: str, detail: str) -> None:
        self.obligations.append((name, "skip", detail))

    def summary(self) -> str:
        lines = [f"{'PASS' if self.ok else 'FAIL'}: {len(self.obligations)} obligations"]
        for name, status, detail in self.obligations:
            lines.append(f"  [{status}] {name}" + (f"  ({detail})" if detail else ""))
        return "\n".join(lines)


def verify_theorem41(V, cats: list[FinEnrichedCategory], i: int = 1) -> Theorem41Report:
    """Check the product construction clause by clause on given instances.

    Quantifies over the supplied enriched categories: each must be
    enriched, every ordered pair must produce an enriched product, the
    one-object unit must absorb on both sides, triple products must be
    rebracketed by an enriched functor, and (when the base has enough
    tensors) quadruple products must be interchanged by one.
    """
    rep = Theorem41Report()
    if not cats:
        raise ValueError("need at least one enriched category")

    def guarded(name, thunk, fail_detail=""):
        # a corrupted base makes the constructions themselves raise;
        # record that as the obligation's failure
        try:
            v = thunk()
        except ValueError as exc:
            rep.add(name, False, str(exc))
            return
        ok = v.ok if isinstance(v, Verdict) else bool(v)
        rep.add(name, v, "" if ok else fail_detail)

    for A in cats:
        guarded(f"enriched[{A.name}]", lambda A=A: check_enriched(A))
    for A, B in itertools.product(cats, repeat=2):
        guarded(
            f"product-enriched[{A.name},{B.name}]",
            lambda A=A, B=B: check_enriched(product_enriched(A, B, i)),
        )
    for A in cats:
        guarded(
            f"unit-left[{A.name}]",
            lambda A=A: _same_category(product_enriched(unit_enriched(V), A, i), A, lambda x: x[1]),
            "unit product differs from the factor",
        )
        guarded(
            f"unit-right[{A.name}]",
            lambda A=A: _same_category(product_enriched(A, unit_enriched(V), i), A, lambda x: x[0]),
            "unit product differs from the factor",
        )
    triples = list(itertools.islice(itertools.product(cats, repeat=3), 4))
    for A, B, C in triples:
        guarded(
            f"assoc-functor[{A.name},{B.name},{C.name}]",
            lambda A=A, B=B, C=C: check_functor(alpha1_functor(A, B, C, i)),
        )

        def assoc_iso(A=A, B=B, C=C):
            F = alpha1_functor(A, B, C, i)
            if V.is_thin:
                return _same_category(F.source, F.target, F.fo)
            return all(
                F.source.d(x, y) == F.target.d(F.fo(x), F.fo(y))
                for x, y in itertools.product(F.source.objects, repeat=2)
            )

        guarded(
            f"assoc-iso[{A.name},{B.name},{C.name}]",
            assoc_iso,
            "rebracketing changes a hom-object",
        )
    j = i + 1
    if j + 1 > V.k:
        rep.skip("interchange-functor", f"needs base tensors up to {j + 1}, have k={V.k}")
    else:
        quads = list(itertools.islice(itertools.product(cats, repeat=4), 2))
        for A, B, C, D in quads:
            guarded(
                f"interchange-functor[{A.name},{B.name},{C.name},{D.name}]",
                lambda A=A, B=B, C=C, D=D: check_functor(eta1_functor(A, B, C, D, i, j)),
            )
    return rep
