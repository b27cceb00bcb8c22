"""Run every degree/Sylow inequality audit over a parameter grid."""

import argparse
import json

from sylreg.sylow import AUDITS, audit_inequality

ap = argparse.ArgumentParser()
ap.add_argument("--pmax", type=int, default=13)
ap.add_argument("--qmax", type=int, default=16)
ap.add_argument("--nmax", type=int, default=12)
ap.add_argument("--jsonl", default=None, help="write every record here")
args = ap.parse_args()

out = open(args.jsonl, "w") if args.jsonl else None
for name in AUDITS:
    rep = audit_inequality(name, args.pmax, args.qmax, args.nmax)
    skipped = sum(r.status == "skipped" for r in rep.records)
    listed = sum(1 for r in rep.records if r.exception_expected and not r.holds)
    print(f"{name:<9s} checked={len(rep.checked):<5d} skipped={skipped:<3d} "
          f"listed-exceptions={listed:<3d} unexplained={len(rep.unexplained)}")
    if out:
        for r in rep.records:
            out.write(json.dumps({"audit": name, **r.to_json()}) + "\n")
if out:
    out.close()
