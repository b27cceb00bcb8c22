"""Searches on library tables exported by export_fixtures.g."""

import os
from pathlib import Path

from sylreg.ctable import ingest
from sylreg.search import search

FX = Path(os.environ.get("SYLREG_FIXTURES", Path(__file__).resolve().parent.parent / "fixtures"))

RUNS = [
    ("M11", 11, "steinberg", 1), ("M12", 3, "steinberg", 1), ("M24", 2, "sylreg", 1),
    ("M24", 2, "steinberg", 1), ("PSL4(3)", 2, "sylvanish", 3), ("PSU4(3)", 2, "sylvanish", 3),
    ("Sp6(2)", 3, "sylreg", 1), ("PSL3(3)", 2, "sylreg", 1), ("PSU3(3)", 2, "sylreg", 1),
    ("PSp6(3)", 2, "steinberg", 1), ("Omega7(3)", 2, "steinberg", 1),
]

for name, p, mode, level in RUNS:
    path = FX / f"{name}.json"
    if not path.is_file():
        print(f"{name}: missing")
        continue
    rep = search(ingest(path), p, mode, level)
    degs = [rep.degrees_of(i) for i in range(len(rep))]
    print(f"{name:<10s} p={p:<3d} {mode:<10s} level<={level} {len(rep)} solutions {degs}")
