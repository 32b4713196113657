"""Single-cell corruptions must be caught by the matching checker.

Corruptions are drawn from families that are provably invalid: redirects
that break typing, sign flips that unbalance an axiom's two legs, and
distance edits past a triangle bound.  Random redirects that happen to
produce a different valid instance (a 3-cocycle associator, a
super-symmetry) are exactly what these families avoid.
"""

import itertools
import random

from braidcat.fincat import (
    FinEnrichedFunctor,
    check_enriched,
    check_functor,
    check_kfold,
    check_monoidal,
    check_symmetry,
    discrete_monoid_instance,
    make_vk,
    materialize,
    potential_enriched_instance,
    quasi_metric_instance,
    random_quasi_metric,
    two_object_sign_instance,
)

V10 = make_vk(10, 2)


def test_validate_detects_compose_redirects():
    rng = random.Random(60)
    mors = list(materialize(3, 2).cat.morphisms)
    hits = 0
    for _ in range(50):
        V = materialize(3, 2)
        key = rng.choice(list(V.cat.compose))
        old = V.cat.compose[key]
        V.cat.compose[key] = rng.choice([m for m in mors if m != old])
        r = V.cat.validate()
        assert not r.ok
        assert r.failures
        hits += 1
    assert hits == 50


def test_monoidal_detects_every_tensor_sign_flip():
    base = two_object_sign_instance()
    flip = {"1": "s", "s": "1"}
    for key in list(base.tensor_mor):
        V = two_object_sign_instance()
        sign, obj = V.tensor_mor[key].split("_")
        V.tensor_mor[key] = f"{flip[sign]}_{obj}"
        r = check_monoidal(V)
        assert not r.ok, key
        assert r.failures[0].axiom.startswith("tensor1-")


def test_monoidal_detects_tensor_redirects_on_tables():
    rng = random.Random(61)
    mors = list(materialize(3, 2).cat.morphisms)
    for _ in range(50):
        V = materialize(3, 2)
        key = rng.choice(list(V.tensor_mor))
        old = V.tensor_mor[key]
        V.tensor_mor[key] = rng.choice([m for m in mors if m != old])
        assert not check_monoidal(V).ok


def test_monoidal_detects_object_cell_redirects():
    rng = random.Random(62)
    for _ in range(25):
        V = materialize(3, 2)
        key = rng.choice(list(V.tensor_obj))
        old = V.tensor_obj[key]
        V.tensor_obj[key] = rng.choice([o for o in V.cat.objects if o != old])
        assert not check_monoidal(V).ok


def test_symmetry_detects_redirects():
    rng = random.Random(63)
    mors = list(materialize(4, 2).cat.morphisms)
    for _ in range(50):
        V = materialize(4, 2)
        key = rng.choice(list(V.sym))
        old = V.sym[key]
        V.sym[key] = rng.choice([m for m in mors if m != old])
        r = check_symmetry(V, i=key[0])
        assert not r.ok


def test_symmetry_unit_flips_are_detected():
    # flipping a switch cell that touches the unit breaks the unit law
    # even though every cell stays well typed
    for key in ((1, 0, 0), (1, 0, 1), (1, 1, 0)):
        V = two_object_sign_instance()
        sign, obj = V.sym[key].split("_")
        V.sym[key] = f"{'s' if sign == '1' else '1'}_{obj}"
        r = check_symmetry(V)
        assert not r.ok, key
        assert any(f.axiom == "symmetry-unit" for f in r.failures)


def test_kfold_detects_every_interchange_redirect():
    base = discrete_monoid_instance(2, 3)
    for key in list(base.eta):
        V = discrete_monoid_instance(2, 3)
        old = V.eta[key]
        V.eta[key] = "id1" if old == "id0" else "id0"
        r = check_kfold(V)
        assert not r.ok, key
        assert r.failures[0].axiom.endswith("-typing")


def test_enriched_detects_nonzero_self_distance():
    rng = random.Random(64)
    for _ in range(25):
        A = random_quasi_metric(5, V10, rng)
        x = rng.choice(A.objects)
        A.hom[(x, x)] = rng.randrange(1, 11)
        assert not check_enriched(A).ok


def test_enriched_detects_triangle_breaks():
    rng = random.Random(65)
    injected = 0
    while injected < 25:
        A = random_quasi_metric(5, V10, rng)
        pts = A.objects
        a, c = rng.sample(list(pts), 2)
        bound = min(min(A.hom[(a, b)] + A.hom[(b, c)], 10) for b in pts if b not in (a, c))
        if bound >= 10:
            continue
        A.hom[(a, c)] = bound + 1
        assert not check_enriched(A).ok
        injected += 1


def test_enriched_checker_matches_brute_force_after_corruption():
    rng = random.Random(66)
    flagged = kept = 0
    for _ in range(60):
        A = random_quasi_metric(4, V10, rng)
        x, y = rng.choice(A.objects), rng.choice(A.objects)
        A.hom[(x, y)] = rng.randrange(0, 11)
        valid = all(A.hom[(p, p)] == 0 for p in A.objects) and all(
            A.hom[(p, r)] <= min(A.hom[(p, q)] + A.hom[(q, r)], 10)
            for p, q, r in itertools.product(A.objects, repeat=3)
        )
        assert check_enriched(A).ok == valid
        flagged += not valid
        kept += valid
    assert flagged > 0 and kept > 0


def test_functor_checker_matches_brute_force():
    rng = random.Random(67)
    flagged = kept = 0
    for _ in range(60):
        A = random_quasi_metric(4, V10, rng)
        B = random_quasi_metric(3, V10, rng, name="B")
        fo = {a: rng.choice(B.objects) for a in A.objects}
        F = FinEnrichedFunctor(A, B, fo)
        valid = all(
            B.hom[(fo[a], fo[b])] <= A.hom[(a, b)]
            for a, b in itertools.product(A.objects, repeat=2)
        )
        assert check_functor(F).ok == valid
        flagged += not valid
        kept += valid
    assert flagged > 0 and kept > 0


def test_table_enriched_detects_M_redirects():
    D = discrete_monoid_instance(3, 2)
    base = potential_enriched_instance(D, {"x": 0, "y": 1, "z": 2})
    for key in list(base.M):
        P = potential_enriched_instance(D, {"x": 0, "y": 1, "z": 2})
        old = P.M[key]
        P.M[key] = "id0" if old != "id0" else "id1"
        assert not check_enriched(P).ok, key


def test_table_enriched_detects_unit_redirects():
    D = discrete_monoid_instance(3, 2)
    base = potential_enriched_instance(D, {"x": 0, "y": 1, "z": 2})
    for key in list(base.j):
        P = potential_enriched_instance(D, {"x": 0, "y": 1, "z": 2})
        old = P.j[key]
        P.j[key] = "id0" if old != "id0" else "id1"
        assert not check_enriched(P).ok, key


def test_quasi_metric_instance_rejects_out_of_range_distances():
    import pytest

    with pytest.raises(ValueError):
        quasi_metric_instance(V10, ["a", "b"], {("a", "a"): 0, ("a", "b"): 11, ("b", "a"): 1, ("b", "b"): 0})
