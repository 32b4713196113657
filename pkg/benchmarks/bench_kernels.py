"""Compare the compiled kernels against the pure-Python fallback.

Runs the same medium-sized workload twice in subprocesses, once as
installed and once with BRAIDCAT_NO_NUMBA=1, and prints both timings.
The first compiled run includes jit compilation; numba caches the
result on disk, so repeat runs show the steady state.

Usage: python benchmarks/bench_kernels.py [--max-len N]
"""

import argparse
import os
import subprocess
import sys

WORKLOAD = """
import time
from braidcat import conjecture_search, obstruction_scan, word_count
from braidcat.kernels import NUMBA_ENABLED

t0 = time.perf_counter()
r1 = obstruction_scan({max_len})
r2 = conjecture_search({max_len})
dt = time.perf_counter() - t0
assert r1.words_enumerated == word_count({max_len})
assert r1.witnesses_found == 0
mode = "numba" if NUMBA_ENABLED else "python"
print(f"{{mode}}: {{dt:.3f}}s  ({{r1.words_enumerated}} words scanned twice, "
      f"{{r2.classes_after_dedup}} classes)")
"""


def run(max_len, no_numba):
    env = dict(os.environ)
    if no_numba:
        env["BRAIDCAT_NO_NUMBA"] = "1"
    else:
        env.pop("BRAIDCAT_NO_NUMBA", None)
    code = WORKLOAD.format(max_len=max_len)
    subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-len", type=int, default=7, help="enumeration depth for both scans")
    args = ap.parse_args()
    print(f"workload: obstruction_scan({args.max_len}) + conjecture_search({args.max_len})", flush=True)
    run(args.max_len, no_numba=False)
    run(args.max_len, no_numba=True)


if __name__ == "__main__":
    main()
