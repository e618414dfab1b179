"""Time the Garside normal form with and without numba.

    python3 benchmarks/bench_garside.py [--words 300] [--length 200] [--strands 6]

Each path runs in its own interpreter because the choice is made at import
time from BRAIDKIT_DISABLE_NUMBA.
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = """
import json, random, sys, time
import numpy as np
from braidkit import _kernels
words, length, n = map(int, sys.argv[1:4])
rng = random.Random(1)
data = [np.array([rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)], dtype=np.int64) for _ in range(words)]
_kernels.left_normal_form(data[0], n)  # compile outside the timed loop
t0 = time.perf_counter()
for a in data:
    _kernels.left_normal_form(a, n)
print(json.dumps({"numba": _kernels.USE_NUMBA, "seconds": time.perf_counter() - t0}))
"""


def run(disable: bool, words: int, length: int, n: int) -> dict:
    env = dict(os.environ, BRAIDKIT_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(words), str(length), str(n)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--words", type=int, default=300)
    p.add_argument("--length", type=int, default=200)
    p.add_argument("--strands", type=int, default=6)
    args = p.parse_args()

    fast = run(False, args.words, args.length, args.strands)
    slow = run(True, args.words, args.length, args.strands)
    print(f"{args.words} words of length {args.length} on {args.strands} strands")
    print(f"  numba     ({'on' if fast['numba'] else 'unavailable'}): {fast['seconds']:.3f} s")
    print(f"  fallback: {slow['seconds']:.3f} s")
    if fast["numba"]:
        print(f"  speedup: {slow['seconds'] / fast['seconds']:.1f}x")


if __name__ == "__main__":
    main()
