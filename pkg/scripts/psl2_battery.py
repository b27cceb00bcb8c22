"""Syl_2-regular and Steinberg-like characters of PSL2(q) and SL2(q)."""

import argparse

from sylreg.ctable import validate
from sylreg.psl2 import PSL2Spec, psl2_table
from sylreg.search import search

ap = argparse.ArgumentParser()
ap.add_argument("--qs", type=int, nargs="*", default=[5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31])
args = ap.parse_args()

print("q    variant  valid  reducible Syl_2-regular (degree lists)")
for q in args.qs:
    for var in ("PSL2", "SL2"):
        t = psl2_table(PSL2Spec(q, var))
        rep = search(t, 2, "sylreg")
        red = [rep.degrees_of(i) for i in range(len(rep)) if sum(rep.solutions[i].mult) > 1]
        print(f"{q:<4d} {var:<8s} {str(validate(t).ok):<6s} {len(red)} {red[:4]}")

print()
print("p    Steinberg-like characters of PSL2(p) at p")
for p in [q for q in args.qs if all(q % d for d in range(2, q))]:
    rep = search(psl2_table(p), p, "steinberg")
    print(f"{p:<4d} {[rep.degrees_of(i) for i in range(len(rep))]}")
