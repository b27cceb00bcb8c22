"""Steinberg-like characters of S_n at p = 2 for small n, by exhaustive search."""

import argparse
import time

from sylreg.search import search
from sylreg.symmchar import sn_table

ap = argparse.ArgumentParser()
ap.add_argument("--nmax", type=int, default=12)
ap.add_argument("--threads", type=int, default=1)
args = ap.parse_args()

for n in range(2, args.nmax + 1):
    t = sn_table(n)
    t0 = time.perf_counter()
    rep = search(t, 2, "steinberg", 1, threads=args.threads)
    dt = time.perf_counter() - t0
    print(f"S{n:<3d} |S|_2={rep.stats['sylow_order']:<6d} solutions={len(rep):<3d} {dt:7.3f}s")
    for s in rep.solutions:
        parts = " + ".join(lab if m == 1 else f"{m}*{lab}" for lab, _, m in s.constituents(t))
        print(f"      {parts}")
