"""Command line front end.

Exit codes: 0 success, 2 a verification or audit assertion failed (the
report is still written), 1 usage, input or parameter error. Errors are a
single JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import ctable, hookfam, psl2, search, sylow, symmchar, weil

OK, USAGE, FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _die(msg: str) -> int:
    print(json.dumps({"error": msg}), file=sys.stderr)
    return USAGE


def _write(obj, out: str | None, pretty: bool = False):
    text = json.dumps(obj, indent=2 if pretty else None, sort_keys=False) + "\n"
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def resolve_table(ref: str) -> ctable.CharacterTable:
    path = Path(ref)
    if path.is_file():
        return ctable.ingest(path)
    fx = os.environ.get("SYLREG_FIXTURES")
    if fx:
        for cand in (Path(fx) / ref, Path(fx) / f"{ref}.json"):
            if cand.is_file():
                return ctable.ingest(cand)
    raise FileNotFoundError(f"no table file or fixture named {ref!r}")


# ---------------------------------------------------------------- commands

def cmd_gen(a) -> int:
    if a.kind in ("sn", "an"):
        if a.n is None:
            raise UsageError("gen sn/an needs --n")
        t = symmchar.sn_table(a.n) if a.kind == "sn" else symmchar.an_table(a.n)
    else:
        if a.q is None:
            raise UsageError("gen psl2/sl2 needs --q")
        t = psl2.psl2_table(psl2.PSL2Spec(a.q, "PSL2" if a.kind == "psl2" else "SL2"))
    if a.out and a.out != "-":
        ctable.emit(t, a.out)
    else:
        sys.stdout.write(ctable.dumps(t))
    return OK


def _pretty_search(rep: search.SearchReport) -> str:
    t = rep.query.table
    lines = [f"{t.name}  p={rep.query.p}  mode={rep.query.mode}  level={rep.query.level}"
             f"  solutions={len(rep)}  exhaustive={rep.exhaustive}"]
    for k, s in enumerate(rep.solutions):
        parts = " + ".join(f"{m}*{lab}" if m > 1 else lab for lab, _, m in s.constituents(t))
        lines.append(f"  {k + 1:3d}. deg {s.flags.degree}  level {s.flags.level}  {parts}")
    return "\n".join(lines) + "\n"


def cmd_search(a) -> int:
    t = resolve_table(a.table)
    rep = search.search(t, a.p, a.mode, a.level, a.max_solutions, a.threads)
    obj = rep.to_json(timestamp=not a.no_timestamp)
    _write(obj, a.out)
    if a.pretty:
        sys.stderr.write(_pretty_search(rep))
    return OK


def cmd_verify_gamma(a) -> int:
    variants = hookfam.VARIANTS if a.variant == "all" else (a.variant,)
    reports = []
    for v in variants:
        if a.variant == "all" and not hookfam.parity_ok(a.n, v):
            continue
        if not hookfam.parity_ok(a.n, v):
            raise UsageError(f"variant {v} is not defined for n={a.n}")
        reports.append(hookfam.verify_family(a.n, v))
    _write([r.to_json() for r in reports] if len(reports) != 1 else reports[0].to_json(),
           a.out, a.pretty)
    return OK if all(r.ok for r in reports) else FAILED


def cmd_sylow(a) -> int:
    g = sylow.GroupFamilySpec(a.family, a.n, a.q)
    s = sylow.sylow_order(g, a.p)
    sc = sylow.sylow_shortcut(g, a.p)
    _write({"group": str(g), "p": a.p, "sylow_order": str(s),
            "shortcut": None if sc is None else str(sc)}, a.out, a.pretty)
    return OK if sc is None or sc == s else FAILED


def cmd_mu(a) -> int:
    g = sylow.GroupFamilySpec(a.family, a.n, a.q)
    m = sylow.mu_degrees(g)
    _write({"group": str(g), "mu": [str(x) if isinstance(x, int) else x for x in m.as_tuple()]},
           a.out, a.pretty)
    return OK


def cmd_audit(a) -> int:
    rep = sylow.audit_inequality(a.lemma, a.pmax, a.qmax, a.nmax)
    obj = {"lemma": rep.lemma, "checked": len(rep.checked), "ok": rep.ok,
           "unexplained": [r.to_json() for r in rep.unexplained]}
    if a.full:
        obj["records"] = [r.to_json() for r in rep.records]
    _write(obj, a.out, a.pretty)
    return OK if rep.ok else FAILED


def cmd_weil(a) -> int:
    recs = weil.check_spec(weil.WeilSpec(a.kind, a.p, a.q))
    if a.out and a.out != "-":
        Path(a.out).write_text("".join(json.dumps(r.to_json()) + "\n" for r in recs))
    else:
        for r in recs:
            print(json.dumps(r.to_json()))
    return OK if all(r.ok for r in recs) else FAILED


def cmd_check(a) -> int:
    t = resolve_table(a.table)
    rep = ctable.validate(t)
    _write({"table": t.name, "ok": rep.ok, "failures": rep.failures,
            "galois_consistent": ctable.galois_check(t)}, a.out, a.pretty)
    return OK if rep.ok else FAILED


def cmd_product(a) -> int:
    t = ctable.direct_product(resolve_table(a.a), resolve_table(a.b))
    if a.out and a.out != "-":
        ctable.emit(t, a.out)
    else:
        sys.stdout.write(ctable.dumps(t))
    return OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="sylreg", description="Syl_p-vanishing and Steinberg-like character tools")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, pretty=True):
        p.add_argument("--out", default=None)
        if pretty:
            p.add_argument("--pretty", action="store_true")

    g = sub.add_parser("gen", help="generate a character table")
    g.add_argument("kind", choices=["sn", "an", "psl2", "sl2"])
    g.add_argument("--n", type=int)
    g.add_argument("--q", type=int)
    common(g, pretty=False)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("search", help="enumerate characters of a table")
    s.add_argument("--table", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--mode", default="steinberg",
                   choices=sorted(search.MODES + tuple(search.MODE_ALIASES)))
    s.add_argument("--level", type=int, default=1)
    s.add_argument("--max-solutions", type=int, default=None)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--no-timestamp", action="store_true")
    common(s)
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-gamma", help="check a hook-character family")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--variant", default="all", choices=hookfam.VARIANTS + ("all",))
    common(v)
    v.set_defaults(func=cmd_verify_gamma)

    y = sub.add_parser("sylow", help="order of a Sylow subgroup")
    y.add_argument("--family", required=True)
    y.add_argument("--n", type=int, required=True)
    y.add_argument("--q", type=int)
    y.add_argument("--p", type=int, required=True)
    common(y)
    y.set_defaults(func=cmd_sylow)

    m = sub.add_parser("mu", help="smallest nontrivial degrees")
    m.add_argument("--family", required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--q", type=int)
    common(m)
    m.set_defaults(func=cmd_mu)

    u = sub.add_parser("audit", help="audit a degree inequality over a grid")
    u.add_argument("--lemma", required=True)
    u.add_argument("--pmax", type=int, default=13)
    u.add_argument("--qmax", type=int, default=16)
    u.add_argument("--nmax", type=int, default=12)
    u.add_argument("--full", action="store_true", help="include every record")
    common(u)
    u.set_defaults(func=cmd_audit)

    w = sub.add_parser("weil", help="Weil character eigenvalue checks")
    w.add_argument("--kind", required=True, choices=sorted(weil.KINDS))
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--q", type=int, required=True)
    common(w, pretty=False)
    w.set_defaults(func=cmd_weil)

    c = sub.add_parser("check", help="validate a table")
    c.add_argument("--table", required=True)
    common(c)
    c.set_defaults(func=cmd_check)

    x = sub.add_parser("product", help="direct product of two tables")
    x.add_argument("--a", required=True)
    x.add_argument("--b", required=True)
    common(x, pretty=False)
    x.set_defaults(func=cmd_product)
    return ap


def run(argv=None) -> int:
    try:
        a = build_parser().parse_args(argv)
        if getattr(a, "threads", 1) < 1:
            raise UsageError("--threads must be positive")
        return a.func(a)
    except UsageError as e:
        return _die(f"usage: {e}")
    except (OSError, ValueError, ArithmeticError) as e:
        return _die(f"{type(e).__name__}: {e}")


def main():
    sys.exit(run())
