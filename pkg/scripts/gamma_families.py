"""Table of hook-sum families: degree, level and Steinberg-like verdicts."""

import argparse

from sylreg.hookfam import valid_pairs, verify_family

ap = argparse.ArgumentParser()
ap.add_argument("--nmax", type=int, default=17)
args = ap.parse_args()

print(f"{'n':>3s} {'variant':<8s} {'group':<5s} {'degree':>8s} {'|S|_2':>7s} level vanishing steinberg-like")
for n, v in valid_pairs(args.nmax):
    r = verify_family(n, v)
    print(f"{n:>3d} {v:<8s} {r.group:<5s} {r.degree:>8d} {r.sylow_order:>7d} {str(r.level):>5s} "
          f"{str(r.vanishing):<9s} {r.steinberg_like}")
