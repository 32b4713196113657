"""Command-line interface.

Exit codes: 0 on success (or no witness / all checks true), 1 when a
check is false, words are unequal, or a scan finds witnesses, and 2 for
usage errors including words that fail a command's precondition.
"""

from __future__ import annotations

import argparse
import sys

from . import handle
from .derive import CheckPreconditionError, DERIVED_KINDS, check, derived_braid
from .garside import braids_equal, left_normal_form
from .lk import lk_equal
from .search import conjecture_search, coset_scan, obstruction_scan, oracle_fuzz
from .words import format_word, parse_word


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="braidcat",
        description="exact braid words, derived-braid obligations, bounded searches",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    braid = sub.add_parser("braid", help="normal forms and equality")
    bsub = braid.add_subparsers(dest="sub", required=True)
    nf = bsub.add_parser("nf", help="print the left normal form of a word")
    nf.add_argument("--n", type=int, required=True, help="strand count")
    nf.add_argument("--word", required=True, help="space-separated signed letters")
    eq = bsub.add_parser("eq", help="decide equality of two words")
    eq.add_argument("--n", type=int, required=True)
    eq.add_argument("--a", required=True)
    eq.add_argument("--b", required=True)
    eq.add_argument("--oracle", choices=("nf", "handle", "lk", "all"), default="nf")

    derive = sub.add_parser("derive", help="compute a derived braid in B_6")
    derive.add_argument("--kind", choices=DERIVED_KINDS, required=True)
    derive.add_argument("--word", required=True, help="a word in B_4")

    chk = sub.add_parser("check", help="test interchange obligations of a B_4 word")
    chk.add_argument("--word", required=True)
    chk.add_argument("--tests", default="assoc,funct", help="comma list from {assoc,funct}")

    search = sub.add_parser("search", help="bounded exhaustive searches")
    ssub = search.add_subparsers(dest="sub", required=True)
    conj = ssub.add_parser("conjecture", help="find words passing both obligations")
    conj.add_argument("--max-len", type=int, required=True)
    conj.add_argument("--jobs", type=int, default=1)
    conj.add_argument("--seed", type=int, default=None)
    conj.add_argument("--out", default=None, help="write the JSON report here")

    coset = sub.add_parser("coset", help="double-coset guarantees")
    csub = coset.add_subparsers(dest="sub", required=True)
    cscan = csub.add_parser("scan", help="verify L = R on a parameter grid")
    cscan.add_argument("--range", dest="bound", type=int, required=True)

    obs = sub.add_parser("obstruction", help="braiding-equation scans")
    osub = obs.add_subparsers(dest="sub", required=True)
    oscan = osub.add_parser("scan", help="search for solutions of x s1 s3 = s2 s1 s3 s2 x")
    oscan.add_argument("--max-len", type=int, required=True)
    oscan.add_argument("--jobs", type=int, default=1)

    fuzz = sub.add_parser("fuzz", help="random three-oracle agreement trials")
    fuzz.add_argument("--trials", type=int, required=True)
    fuzz.add_argument("--seed", type=int, required=True)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.cmd == "braid" and args.sub == "nf":
            b = parse_word(args.word, args.n)
            print(left_normal_form(b))
            return 0
        if args.cmd == "braid" and args.sub == "eq":
            a = parse_word(args.a, args.n)
            b = parse_word(args.b, args.n)
            verdicts = {}
            if args.oracle in ("nf", "all"):
                verdicts["nf"] = "equal" if braids_equal(a, b) else "unequal"
            if args.oracle in ("handle", "all"):
                verdicts["handle"] = handle.handle_equal(a, b)
            if args.oracle in ("lk", "all"):
                verdicts["lk"] = "equal" if lk_equal(a, b) else "unequal"
            for name, v in verdicts.items():
                print(f"{name}: {v}")
            decisive = [v for v in verdicts.values() if v != handle.BUDGET_EXHAUSTED]
            if len(set(decisive)) > 1:
                print("oracle disagreement", file=sys.stderr)
                return 1
            return 0 if decisive and decisive[0] == "equal" else 1
        if args.cmd == "derive":
            b = parse_word(args.word, 4)
            print(format_word(derived_braid(b, args.kind)))
            return 0
        if args.cmd == "check":
            b = parse_word(args.word, 4)
            tests = [t.strip() for t in args.tests.split(",") if t.strip()]
            bad = [t for t in tests if t not in ("assoc", "funct")]
            if bad or not tests:
                ap.error(f"unknown tests {bad}; choose from assoc, funct")
            results = {t: check(b, t) for t in tests}
            for t, ok in results.items():
                print(f"{t}: {str(ok).lower()}")
            return 0 if all(results.values()) else 1
        if args.cmd == "search":
            rep = conjecture_search(args.max_len, jobs=args.jobs, seed=args.seed)
            print(rep.summary())
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(rep.to_json())
            extras = [
                s for s in rep.survivors if s["word"] not in ("2", "-2")
            ]
            return 1 if extras else 0
        if args.cmd == "coset":
            rep = coset_scan(args.bound)
            print(rep.summary())
            return 1 if rep.failures else 0
        if args.cmd == "obstruction":
            rep = obstruction_scan(args.max_len, jobs=args.jobs)
            print(rep.summary())
            return 1 if rep.witnesses_found else 0
        if args.cmd == "fuzz":
            rep = oracle_fuzz(args.trials, args.seed)
            print(rep.summary())
            return 1 if rep.disagreements else 0
    except CheckPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
