"""Table-driven kernels for normal forms and word enumeration.

Everything here works on plain integer arrays so the hot loops can be
compiled with numba.  Set ``BRAIDCAT_NO_NUMBA=1`` to skip compilation
and run the same code as ordinary Python (slow but dependency-light);
``python_impl`` exposes the uncompiled function either way.

Permutations appear only as ranks into precomputed multiplication,
descent and conjugation tables (built in ``garside``); rank 0 is the
identity.  A left normal form is a pair ``(delta, factors[0:nfac])``
of a power of the half twist and ranks of the simple factors.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_ENABLED = os.environ.get("BRAIDCAT_NO_NUMBA", "0").lower() not in ("1", "true", "yes")

if NUMBA_ENABLED:
    from functools import partial

    import numba

    njit = partial(numba.njit, cache=True, nogil=True)
else:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


def python_impl(fn):
    """The uncompiled version of a kernel (the kernel itself in fallback mode)."""
    return getattr(fn, "py_func", fn)


@njit
def nf_append(factors, nfac, delta, letter, gen, negf, tau, w0, lmult, rmult, ldesc, rdesc):
    """Multiply the normal form Delta^delta f_1..f_nfac by one letter on the right.

    Mutates ``factors`` in place and returns the new ``(nfac, delta)``.
    ``factors`` needs one slot of headroom.
    """
    if letter > 0:
        x = gen[letter]
    else:
        # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); pulling Delta^-1 leftward
        # conjugates every factor by the half twist
        delta -= 1
        for i in range(nfac):
            factors[i] = tau[factors[i]]
        x = negf[-letter]
    if x != 0:
        factors[nfac] = x
        nfac += 1
        changed = True
        while changed:
            changed = False
            for k in range(nfac - 1, 0, -1):
                w = factors[k - 1]
                z = factors[k]
                m = ldesc[z] & ~rdesc[w]
                while m != 0:
                    s = 0
                    while (m >> s) & 1 == 0:
                        s += 1
                    w = rmult[w, s]
                    z = lmult[z, s]
                    m = ldesc[z] & ~rdesc[w]
                if w != factors[k - 1]:
                    factors[k - 1] = w
                    factors[k] = z
                    changed = True
            if changed:
                j = 0
                for k in range(nfac):
                    if factors[k] != 0:
                        factors[j] = factors[k]
                        j += 1
                nfac = j
    while nfac > 0 and factors[0] == w0:
        delta += 1
        for k in range(1, nfac):
            factors[k - 1] = factors[k]
        nfac -= 1
    return nfac, delta


@njit
def nf_of_word(letters, factors, gen, negf, tau, w0, lmult, rmult, ldesc, rdesc):
    """Left normal form of a letter array; returns (delta, nfac)."""
    delta = 0
    nfac = 0
    for t in range(letters.shape[0]):
        nfac, delta = nf_append(
            factors, nfac, delta, letters[t], gen, negf, tau, w0, lmult, rmult, ldesc, rdesc
        )
    return delta, nfac


# Free-reduced word enumeration.  Letters are coded 0..2n-3: code c is the
# generator c//2 + 1, inverted when c is odd, so two codes cancel exactly
# when they differ in the low bit.  Words are walked depth first with the
# normal form carried incrementally, one append per node.  A word of length
# len packs into an int64 as (len << 30) | base-6 digits, which sorts by
# (length, lexicographic) and stays exact for len <= 11.


@njit
def _push(t, c, codes, factors, deltas, nfacs, perms, gen, negf, tau, w0, lmult, rmult, ldesc, rdesc):
    """Extend the depth-t word state by letter code c."""
    codes[t] = c
    for idx in range(nfacs[t]):
        factors[t + 1, idx] = factors[t, idx]
    letter = (c >> 1) + 1
    if c & 1 == 1:
        letter = -letter
    nfa, dlt = nf_append(
        factors[t + 1], nfacs[t], deltas[t], letter, gen, negf, tau, w0, lmult, rmult, ldesc, rdesc
    )
    nfacs[t + 1] = nfa
    deltas[t + 1] = dlt
    perms[t + 1] = rmult[perms[t], c >> 1]


@njit
def _pack_key(length, factors_row, nfac, delta, koff, knf, order):
    key = (delta + koff) * knf + nfac
    for idx in range(nfac):
        key = key * order + factors_row[idx]
    return key


@njit
def _pack_rep(codes, length):
    base = np.int64(0)
    for t in range(length):
        base = base * 6 + codes[t]
    return (np.int64(length) << 30) | base


@njit
def enum_classes(prefix, min_len, max_len, pack_len, do_filter, target_perm,
                 gen, negf, tau, w0, lmult, rmult, ldesc, rdesc,
                 out_keys, out_reps):
    """Emit (normal-form key, packed word) for freely reduced words.

    Covers the prefix itself plus every freely reduced extension up to
    max_len, keeping only lengths >= min_len; with do_filter set, only
    words whose strand permutation has rank target_perm are emitted.
    pack_len fixes the key-packing radix so chunks with different
    bounds produce comparable keys.  Returns (emitted, visited) where
    visited counts all words seen.
    """
    L = max_len
    P = prefix.shape[0]
    factors = np.zeros((L + 1, L + 1), dtype=np.int32)
    deltas = np.zeros(L + 1, dtype=np.int64)
    nfacs = np.zeros(L + 1, dtype=np.int64)
    perms = np.zeros(L + 1, dtype=np.int64)
    codes = np.zeros(L + 1, dtype=np.int64)
    order = np.int64(tau.shape[0])
    koff = np.int64(pack_len + 1)
    knf = np.int64(pack_len + 2)
    for t in range(P):
        _push(t, prefix[t], codes, factors, deltas, nfacs, perms,
              gen, negf, tau, w0, lmult, rmult, ldesc, rdesc)
    n_emit = 0
    visited = 1
    if P >= min_len and (not do_filter or perms[P] == target_perm):
        out_keys[n_emit] = _pack_key(P, factors[P], nfacs[P], deltas[P], koff, knf, order)
        out_reps[n_emit] = _pack_rep(codes, P)
        n_emit += 1
    cur = P
    nxt = np.zeros(L + 2, dtype=np.int64)
    nxt[cur] = 0
    while cur >= P:
        if cur >= L:
            cur -= 1
            continue
        c = nxt[cur]
        if c >= 6:
            cur -= 1
            continue
        nxt[cur] = c + 1
        if cur > 0 and (codes[cur - 1] ^ c) == 1:
            continue
        _push(cur, c, codes, factors, deltas, nfacs, perms,
              gen, negf, tau, w0, lmult, rmult, ldesc, rdesc)
        visited += 1
        newlen = cur + 1
        if newlen >= min_len and (not do_filter or perms[newlen] == target_perm):
            out_keys[n_emit] = _pack_key(newlen, factors[newlen], nfacs[newlen], deltas[newlen], koff, knf, order)
            out_reps[n_emit] = _pack_rep(codes, newlen)
            n_emit += 1
        nxt[newlen] = 0
        cur = newlen
    return n_emit, visited


@njit
def enum_equation(prefix, min_len, max_len, lhs_suffix, rhs_prefix,
                  gen, negf, tau, w0, lmult, rmult, ldesc, rdesc,
                  wit_reps, wit_cap):
    """Count words x with  x . lhs_suffix == rhs_prefix . x  as braids.

    Enumerates like enum_classes; for each word both sides are held as
    incremental normal forms (the right side seeded with rhs_prefix), so
    the test is an O(1) comparison plus two appends per word.  Returns
    (stored, total_witnesses, visited); up to wit_cap witnesses are
    recorded as packed words.
    """
    L = max_len
    P = prefix.shape[0]
    S = lhs_suffix.shape[0]
    R = rhs_prefix.shape[0]
    factors = np.zeros((L + 1, L + 1), dtype=np.int32)
    deltas = np.zeros(L + 1, dtype=np.int64)
    nfacs = np.zeros(L + 1, dtype=np.int64)
    perms = np.zeros(L + 1, dtype=np.int64)
    codes = np.zeros(L + 1, dtype=np.int64)
    bfact = np.zeros((L + 1, L + R + 1), dtype=np.int32)
    bdelt = np.zeros(L + 1, dtype=np.int64)
    bnfac = np.zeros(L + 1, dtype=np.int64)
    scratch = np.zeros(L + S + 1, dtype=np.int32)
    for t in range(R):
        nfa, dlt = nf_append(
            bfact[0], bnfac[0], bdelt[0], rhs_prefix[t],
            gen, negf, tau, w0, lmult, rmult, ldesc, rdesc
        )
        bnfac[0] = nfa
        bdelt[0] = dlt
    for t in range(P):
        _push(t, prefix[t], codes, factors, deltas, nfacs, perms,
              gen, negf, tau, w0, lmult, rmult, ldesc, rdesc)
        for idx in range(bnfac[t]):
            bfact[t + 1, idx] = bfact[t, idx]
        letter = (prefix[t] >> 1) + 1
        if prefix[t] & 1 == 1:
            letter = -letter
        nfa, dlt = nf_append(
            bfact[t + 1], bnfac[t], bdelt[t], letter,
            gen, negf, tau, w0, lmult, rmult, ldesc, rdesc
        )
        bnfac[t + 1] = nfa
        bdelt[t + 1] = dlt
    stored = 0
    total = 0
    visited = 1

    def _test(d):
        for idx in range(nfacs[d]):
            scratch[idx] = factors[d, idx]
        nfa = nfacs[d]
        dlt = deltas[d]
        for t in range(S):
            nfa, dlt = nf_append(
                scratch, nfa, dlt, lhs_suffix[t],
                gen, negf, tau, w0, lmult, rmult, ldesc, rdesc
            )
        if dlt != bdelt[d] or nfa != bnfac[d]:
            return False
        for idx in range(nfa):
            if scratch[idx] != bfact[d, idx]:
                return False
        return True

    if P >= min_len and _test(P):
        total += 1
        if stored < wit_cap:
            wit_reps[stored] = _pack_rep(codes, P)
            stored += 1
    cur = P
    nxt = np.zeros(L + 2, dtype=np.int64)
    nxt[cur] = 0
    while cur >= P:
        if cur >= L:
            cur -= 1
            continue
        c = nxt[cur]
        if c >= 6:
            cur -= 1
            continue
        nxt[cur] = c + 1
        if cur > 0 and (codes[cur - 1] ^ c) == 1:
            continue
        _push(cur, c, codes, factors, deltas, nfacs, perms,
              gen, negf, tau, w0, lmult, rmult, ldesc, rdesc)
        for idx in range(bnfac[cur]):
            bfact[cur + 1, idx] = bfact[cur, idx]
        letter = (c >> 1) + 1
        if c & 1 == 1:
            letter = -letter
        nfa, dlt = nf_append(
            bfact[cur + 1], bnfac[cur], bdelt[cur], letter,
            gen, negf, tau, w0, lmult, rmult, ldesc, rdesc
        )
        bnfac[cur + 1] = nfa
        bdelt[cur + 1] = dlt
        visited += 1
        newlen = cur + 1
        if newlen >= min_len and _test(newlen):
            total += 1
            if stored < wit_cap:
                wit_reps[stored] = _pack_rep(codes, newlen)
                stored += 1
        nxt[newlen] = 0
        cur = newlen
    return stored, total, visited
