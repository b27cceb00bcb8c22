"""Eigenvalue multiplicities of h on Weil modules over the (p, q) grid."""

import argparse

from sylreg.weil import check_spec, grid

ap = argparse.ArgumentParser()
ap.add_argument("--qmax", type=int, default=19)
ap.add_argument("--primes", type=int, nargs="*", default=[3, 5, 7])
args = ap.parse_args()

for s in grid(primes=tuple(args.primes), qmax=args.qmax):
    recs = check_spec(s)
    rhos = sorted({r.rho for r in recs})
    bad = [r.zeta for r in recs if not r.ok]
    print(f"{s.kind:<8s} p={s.p} q={s.q:<3d} |X|={s.order_x:<4d} rho values {rhos} "
          f"closed forms {'ok' if all(r.closed_forms_ok for r in recs) else 'MISMATCH'}"
          + (f"  outside claimed set at zeta={bad}" if bad else ""))
