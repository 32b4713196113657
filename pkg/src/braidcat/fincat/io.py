"""JSON instance documents with structural validation on load.

A document either spells out one monoidal instance as cell tables or
uses the compact `thin_distance` form.  The table form has sections
`objects`, `morphisms` (rows [id, src, tgt]), `compose` (rows
[g, f, g-after-f]), `identities` (rows [object, id]), `unit`, `tensors`
(one entry per index with object and morphism tables), `alpha` (rows
[i, a, b, c, cell]), optional `c` (rows [i, a, b, cell]), optional
`eta` (rows [i, j, a, b, c, d, cell]), and optional `enriched` (a list
of {name, objects, hom, M, j} sections over the base).  The compact
form is {"thin_distance": {"K", "k", "instances": [{name, labels, d}]}}
and expands to a thin base internally.

Loading validates every structural invariant: unknown references,
category axioms, tensor functoriality, strict units and associator
coherence, and the typing of enriched cells.  Failures raise ValueError
naming the axiom and the offending cell.  Axiom checks beyond structure
(symmetry, interchange, enriched laws) stay with the checkers.

Tuple-valued objects round-trip through JSON arrays, so object slots in
all rows accept nested arrays.
"""

from __future__ import annotations

import json

from .core import FinCategory, FinMonoidalInstance, check_monoidal
from .enriched import FinEnrichedCategory, quasi_metric_instance
from .thin import ThinInstance, check_thin_monoidal


def _freeze(v):
    """JSON arrays become tuples so they can serve as objects again."""
    if isinstance(v, list):
        return tuple(_freeze(x) for x in v)
    return v


def _thaw(v):
    if isinstance(v, tuple):
        return [_thaw(x) for x in v]
    return v


def _load_thin(doc: dict):
    spec = doc["thin_distance"]
    V = ThinInstance(int(spec["K"]), int(spec.get("k", 2)))
    verdict = check_thin_monoidal(V)
    if not verdict.ok:
        raise ValueError("thin base invalid: " + verdict.summary())
    enriched = {}
    for ent in spec.get("instances", []):
        name = ent.get("name", "A")
        labels = [_freeze(x) for x in ent["labels"]]
        d = ent["d"]
        if len(d) != len(labels) or any(len(row) != len(labels) for row in d):
            raise ValueError(f"distance matrix shape for {name!r} does not match its label list")
        enriched[name] = quasi_metric_instance(V, labels, d, name=name)
    V.enriched = enriched
    return V


def _load_tables(doc: dict) -> FinMonoidalInstance:
    objects = [_freeze(a) for a in doc["objects"]]
    obj_set = set(objects)
    morphisms = {}
    for f, s, t in doc["morphisms"]:
        s, t = _freeze(s), _freeze(t)
        if s not in obj_set or t not in obj_set:
            raise ValueError(f"morphism {f!r} references unknown endpoint")
        morphisms[f] = (s, t)
    identities = {}
    for a, f in doc["identities"]:
        a = _freeze(a)
        if a not in obj_set or f not in morphisms:
            raise ValueError(f"identity row ({a!r}, {f!r}) references unknown data")
        identities[a] = f
    compose = {}
    for g, f, h in doc["compose"]:
        if g not in morphisms or f not in morphisms or h not in morphisms:
            raise ValueError(f"composition cell ({g!r}, {f!r}) -> {h!r} references unknown morphism")
        compose[(g, f)] = h
    cat = FinCategory(objects, morphisms, identities, compose)
    unit = _freeze(doc["unit"])
    if unit not in obj_set:
        raise ValueError(f"unit {unit!r} is not an object")

    tob = {}
    tmor = {}
    indices = []
    for entry in doc["tensors"]:
        i = int(entry["index"])
        indices.append(i)
        for a, b, r in entry["objects"]:
            a, b, r = _freeze(a), _freeze(b), _freeze(r)
            if a not in obj_set or b not in obj_set or r not in obj_set:
                raise ValueError(f"tensor {i} object cell ({a!r}, {b!r}) references unknown object")
            tob[(i, a, b)] = r
        for f, g, h in entry["morphisms"]:
            if f not in morphisms or g not in morphisms or h not in morphisms:
                raise ValueError(f"tensor {i} morphism cell ({f!r}, {g!r}) references unknown morphism")
            tmor[(i, f, g)] = h
    if sorted(indices) != list(range(1, len(indices) + 1)):
        raise ValueError(f"tensor indices {sorted(indices)} must be 1..k")
    alpha = {}
    for i, a, b, c, m in doc["alpha"]:
        a, b, c = _freeze(a), _freeze(b), _freeze(c)
        if m not in morphisms:
            raise ValueError(f"alpha cell ({i}, {a!r}, {b!r}, {c!r}) references unknown morphism {m!r}")
        alpha[(int(i), a, b, c)] = m
    sym = None
    if doc.get("c") is not None:
        sym = {}
        for i, a, b, m in doc["c"]:
            a, b = _freeze(a), _freeze(b)
            if m not in morphisms:
                raise ValueError(f"c cell ({i}, {a!r}, {b!r}) references unknown morphism {m!r}")
            sym[(int(i), a, b)] = m
    eta = None
    if doc.get("eta") is not None:
        eta = {}
        for i, j, a, b, c, d, m in doc["eta"]:
            a, b, c, d = _freeze(a), _freeze(b), _freeze(c), _freeze(d)
            if m not in morphisms:
                raise ValueError(
                    f"eta cell ({i}, {j}, {a!r}, {b!r}, {c!r}, {d!r}) references unknown morphism {m!r}"
                )
            eta[(int(i), int(j), a, b, c, d)] = m
    V = FinMonoidalInstance(cat, len(indices), unit, tob, tmor, alpha, sym, eta)

    base = cat.validate()
    if not base.ok:
        f = base.failures[0]
        raise ValueError(f"category axiom {f.axiom} fails at {f.witness}: {f.detail}")
    verdict = check_monoidal(V)
    if not verdict.ok:
        f = verdict.failures[0]
        raise ValueError(f"monoidal invariant {f.axiom} fails at {f.witness}: {f.detail}")

    enriched = {}
    for ent in doc.get("enriched", []):
        name = ent.get("name", "A")
        eobjs = [_freeze(x) for x in ent["objects"]]
        hom = {}
        for a, b, v in ent["hom"]:
            a, b, v = _freeze(a), _freeze(b), _freeze(v)
            if v not in obj_set:
                raise ValueError(f"hom cell ({a!r}, {b!r}) of {name!r} references unknown base object {v!r}")
            hom[(a, b)] = v
        M = {}
        for a, b, c, m in ent["M"]:
            a, b, c = _freeze(a), _freeze(b), _freeze(c)
            if m not in morphisms:
                raise ValueError(f"M cell ({a!r}, {b!r}, {c!r}) of {name!r} references unknown morphism {m!r}")
            M[(a, b, c)] = m
        j = {}
        for a, m in ent["j"]:
            a = _freeze(a)
            if m not in morphisms:
                raise ValueError(f"j cell ({a!r}) of {name!r} references unknown morphism {m!r}")
            j[a] = m
        A = FinEnrichedCategory(V, eobjs, hom, M=M, j=j, name=name)
        for (a, b, c), m in M.items():
            want = (V.tob(1, hom[(b, c)], hom[(a, b)]), hom[(a, c)])
            if morphisms[m] != want:
                raise ValueError(
                    f"M cell ({a!r}, {b!r}, {c!r}) of {name!r}: {m!r} should go {want[0]!r} -> {want[1]!r}"
                )
        for a, m in j.items():
            want = (unit, hom[(a, a)])
            if morphisms[m] != want:
                raise ValueError(f"j cell ({a!r}) of {name!r}: {m!r} should go {want[0]!r} -> {want[1]!r}")
        enriched[name] = A
    V.enriched = enriched
    return V


def load_instance(source):
    """Parse and validate a document from a path, JSON text, or dict.

    Returns the base instance; any enriched sections are attached to it
    as an `enriched` dict keyed by name.
    """
    if isinstance(source, dict):
        doc = source
    else:
        text = None
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError:
            text = source
        doc = json.loads(text)
    if "thin_distance" in doc:
        return _load_thin(doc)
    return _load_tables(doc)


def _dump_enriched_section(A: FinEnrichedCategory) -> dict:
    return {
        "name": A.name,
        "objects": [_thaw(a) for a in A.objects],
        "hom": [[_thaw(a), _thaw(b), _thaw(v)] for (a, b), v in A.hom.items()],
        "M": [[_thaw(a), _thaw(b), _thaw(c), m] for (a, b, c), m in A.M.items()],
        "j": [[_thaw(a), m] for a, m in A.j.items()],
    }


def save_instance(V, path: str, enriched=None) -> None:
    """Serialize a base instance (plus optional enriched sections) to JSON."""
    if enriched is None:
        enriched = list(getattr(V, "enriched", {}).values())
    if isinstance(V, ThinInstance):
        doc = {
            "thin_distance": {
                "K": V.K,
                "k": V.k,
                "instances": [
                    {
                        "name": A.name,
                        "labels": [_thaw(x) for x in A.objects],
                        "d": [[A.d(a, b) for b in A.objects] for a in A.objects],
                    }
                    for A in enriched
                ],
            }
        }
    elif isinstance(V, FinMonoidalInstance):
        cat = V.cat
        tensors = []
        for i in range(1, V.k + 1):
            tensors.append(
                {
                    "index": i,
                    "objects": [
                        [_thaw(a), _thaw(b), _thaw(r)] for (ii, a, b), r in V.tensor_obj.items() if ii == i
                    ],
                    "morphisms": [[f, g, h] for (ii, f, g), h in V.tensor_mor.items() if ii == i],
                }
            )
        doc = {
            "objects": [_thaw(a) for a in cat.objects],
            "morphisms": [[f, _thaw(s), _thaw(t)] for f, (s, t) in cat.morphisms.items()],
            "compose": [[g, f, h] for (g, f), h in cat.compose.items()],
            "identities": [[_thaw(a), f] for a, f in cat.identities.items()],
            "unit": _thaw(V.unit),
            "tensors": tensors,
            "alpha": [[i, _thaw(a), _thaw(b), _thaw(c), m] for (i, a, b, c), m in V.alpha.items()],
            "c": None if V.sym is None else [[i, _thaw(a), _thaw(b), m] for (i, a, b), m in V.sym.items()],
            "eta": None
            if V.eta is None
            else [
                [i, j, _thaw(a), _thaw(b), _thaw(c), _thaw(d), m]
                for (i, j, a, b, c, d), m in V.eta.items()
            ],
            "enriched": [_dump_enriched_section(A) for A in enriched],
        }
    else:
        raise ValueError(f"cannot serialize {type(V).__name__}")
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
