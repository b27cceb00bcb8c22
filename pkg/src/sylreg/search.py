"""Exhaustive search for Syl_p-regular, Steinberg-like and p-vanishing characters.

A candidate is a nonnegative integer combination sum m_i chi_i of the
irreducibles with prescribed degree that vanishes on a set of classes: the
nontrivial p-elements (Syl_p-vanishing) or all p-singular classes
(p-vanishing). Character values are split into rational coordinates, so each
class contributes a handful of integer linear equations.

The DFS visits irreducibles by decreasing degree. A partial assignment is
abandoned when
  * the residual degree cannot be filled,
  * the trivial character would occur more than level times (its multiplicity
    in chi is at most its multiplicity in the restriction to a Sylow
    subgroup, which equals the level), or
  * some equation cannot be balanced: with residual degree R the remaining
    contribution to an equation lies between R*min(a_i/d_i) and
    R*max(a_i/d_i) over the unassigned characters. When all remaining values
    on a class are nonnegative this is the familiar positivity argument.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from math import gcd, lcm

from .ctable import CharacterTable, VirtualCharacter, classes_by_p_type, group_p_part, validate
from .cyclo import Cyclotomic

MODES = ("syl_regular", "steinberg_like", "p_vanishing", "syl_vanishing")
MODE_ALIASES = {
    "sylreg": "syl_regular",
    "steinberg": "steinberg_like",
    "pvanish": "p_vanishing",
    "sylvanish": "syl_vanishing",
}


class SearchError(ValueError):
    pass


def normalize_mode(mode: str) -> str:
    m = MODE_ALIASES.get(mode, mode)
    if m not in MODES:
        raise SearchError(f"unknown mode {mode!r}")
    return m


@dataclass
class SearchQuery:
    table: CharacterTable
    p: int
    mode: str = "steinberg_like"
    level: int = 1
    max_solutions: int | None = None

    def __post_init__(self):
        self.mode = normalize_mode(self.mode)
        if self.level < 1:
            raise SearchError("level must be positive")
        if self.max_solutions is not None and self.max_solutions < 0:
            raise SearchError("max_solutions must be nonnegative")

    @property
    def exact_level(self) -> bool:
        return self.mode in ("syl_regular", "steinberg_like")

    @property
    def uses_singular(self) -> bool:
        return self.mode in ("steinberg_like", "p_vanishing")


@dataclass
class Flags:
    degree: int
    level: int | None
    is_syl_vanishing: bool
    is_p_vanishing: bool
    is_syl_regular: bool
    is_steinberg_like: bool
    contains_trivial: int

    def to_json(self):
        return {
            "degree": str(self.degree),
            "level": self.level if self.level is not None else "undefined",
            "is_syl_vanishing": self.is_syl_vanishing,
            "is_p_vanishing": self.is_p_vanishing,
            "is_syl_regular": self.is_syl_regular,
            "is_steinberg_like": self.is_steinberg_like,
            "contains_trivial": self.contains_trivial,
        }


@dataclass
class Solution:
    mult: tuple[int, ...]
    flags: Flags

    def constituents(self, t: CharacterTable):
        degs = t.degrees()
        return [(t.labels[i], degs[i], m) for i, m in enumerate(self.mult) if m]


@dataclass
class SearchReport:
    query: SearchQuery
    solutions: list[Solution]
    exhaustive: bool
    stats: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.solutions)

    def degrees_of(self, i: int) -> list[int]:
        t = self.query.table
        degs = t.degrees()
        return sorted(degs[j] for j, m in enumerate(self.solutions[i].mult) for _ in range(m))

    def to_json(self, timestamp: bool = True) -> dict:
        t = self.query.table
        out = {
            "query": {
                "table": t.name,
                "p": self.query.p,
                "mode": self.query.mode,
                "level": self.query.level,
                "max_solutions": self.query.max_solutions,
            },
            "exhaustive": self.exhaustive,
            "solutions": [
                {
                    "mult": list(s.mult),
                    **s.flags.to_json(),
                    "constituents": [
                        {"label": lab, "degree": str(d), "mult": m} for lab, d, m in s.constituents(t)
                    ],
                }
                for s in self.solutions
            ],
            "stats": {"nodes": self.stats.get("nodes", 0), "sylow_order": str(self.stats.get("sylow_order"))},
        }
        if timestamp:
            out["timestamp"] = {
                "generated": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                "wall_time_s": round(self.stats.get("wall_time", 0.0), 3),
            }
        return out


# ---------------------------------------------------------------- classify

def _vanishes(vals: list[Cyclotomic], idx) -> bool:
    return all(vals[j].is_zero() for j in idx)


def classify(t: CharacterTable, p: int, v: VirtualCharacter | tuple | list) -> Flags:
    """Evaluate v on the table and report which vanishing properties hold."""
    if not isinstance(v, VirtualCharacter):
        v = VirtualCharacter(tuple(v))
    if len(v.mult) != len(t.irreducibles):
        raise ValueError(f"multiplicity vector has length {len(v.mult)}, expected {len(t.irreducibles)}")
    sing, pel = classes_by_p_type(t, p)
    vals = v.values(t)
    deg = vals[0].to_rational()
    deg = int(deg)
    s = group_p_part(t.order, p)
    sv = deg > 0 and _vanishes(vals, pel)
    pv = deg > 0 and _vanishes(vals, sing)
    level = None
    if sv:
        if deg % s:
            raise ArithmeticError(f"Syl_{p}-vanishing character of degree {deg} not divisible by {s}")
        level = deg // s
    return Flags(
        degree=deg,
        level=level,
        is_syl_vanishing=sv,
        is_p_vanishing=pv,
        is_syl_regular=sv and deg == s,
        is_steinberg_like=pv and deg == s,
        contains_trivial=v.mult[0] if v.mult else 0,
    )


# ---------------------------------------------------------------- compilation

def _column_equations(values: list[Cyclotomic]) -> list[tuple[int, ...]]:
    L = 1
    for x in values:
        L = lcm(L, x.N)
    coords: dict[int, list] = {}
    n = len(values)
    for i, x in enumerate(values):
        for k, c in x.rebase(L).coeffs.items():
            coords.setdefault(k, [0] * n)[i] = c
    out = []
    for k in sorted(coords):
        row = coords[k]
        den = 1
        for c in row:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = [int(c * den) for c in row]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if g == 0:
            continue
        ints = [c // g for c in ints]
        first = next(c for c in ints if c)
        if first < 0:
            ints = [-c for c in ints]
        out.append(tuple(ints))
    return out


@dataclass
class _Problem:
    degrees: list[int]        # in search order
    eqs: list[list[int]]      # eqs[c][i], search order
    trivial_pos: int
    target: int
    trivial_cap: int
    perm: list[int]           # search position -> table row


def compile_problem(t: CharacterTable, p: int, uses_singular: bool, target: int, trivial_cap: int) -> _Problem:
    sing, pel = classes_by_p_type(t, p)
    cls = sorted(sing if uses_singular else pel)
    degs = t.degrees()
    perm = sorted(range(len(degs)), key=lambda i: (-degs[i], i))
    eqset = {}
    for j in cls:
        col = [t.irreducibles[i][j] for i in perm]
        for e in _column_equations(col):
            eqset.setdefault(e, None)
    eqs = [list(e) for e in eqset]
    return _Problem([degs[i] for i in perm], eqs, perm.index(0), target, trivial_cap, perm)


# ---------------------------------------------------------------- DFS

class _Cap(Exception):
    pass


def _suffix_bounds(prob: _Problem):
    """For each equation and position k: (a, d) of min and max a_i/d_i over i >= k."""
    n = len(prob.degrees)
    lo, hi = [], []
    for row in prob.eqs:
        l = [None] * (n + 1)
        h = [None] * (n + 1)
        for k in range(n - 1, -1, -1):
            a, d = row[k], prob.degrees[k]
            cur_l, cur_h = l[k + 1], h[k + 1]
            l[k] = (a, d) if cur_l is None or a * cur_l[1] < cur_l[0] * d else cur_l
            h[k] = (a, d) if cur_h is None or a * cur_h[1] > cur_h[0] * d else cur_h
        lo.append(l)
        hi.append(h)
    return lo, hi


def _run_task(prob: _Problem, prefix: tuple[int, ...], cap: int | None):
    n = len(prob.degrees)
    degs = prob.degrees
    eqs = prob.eqs
    E = len(eqs)
    cols = [[eqs[c][i] for c in range(E)] for i in range(n)]
    lo, hi = _suffix_bounds(prob)
    tpos, tcap = prob.trivial_pos, prob.trivial_cap
    found: list[tuple[int, ...]] = []
    x = [0] * n
    nodes = 0

    def feasible(k, R, s):
        for c in range(E):
            need = -s[c]
            a, d = lo[c][k]
            if R * a > need * d:
                return False
            a, d = hi[c][k]
            if R * a < need * d:
                return False
        return True

    def dfs(k, R, s):
        nonlocal nodes
        nodes += 1
        if R == 0:
            if all(v == 0 for v in s):
                found.append(tuple(x))
                if cap is not None and len(found) > cap:
                    raise _Cap
            return
        if k == n:
            return
        if not feasible(k, R, s):
            return
        d = degs[k]
        top = R // d
        if k == tpos:
            top = min(top, tcap)
        if k < len(prefix):
            choices = [prefix[k]] if prefix[k] <= top else []
        else:
            choices = range(top, -1, -1)
        col = cols[k]
        for m in choices:
            x[k] = m
            if m:
                s2 = [s[c] + m * col[c] for c in range(E)]
            else:
                s2 = s
            dfs(k + 1, R - m * d, s2)
        x[k] = 0

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * n + 100))
    try:
        dfs(0, prob.target, [0] * E)
    except _Cap:
        pass
    finally:
        sys.setrecursionlimit(old)
    return found, nodes


def _tasks(prob: _Problem, depth: int = 2) -> list[tuple[int, ...]]:
    out = [()]
    for k in range(min(depth, len(prob.degrees))):
        nxt = []
        for pre in out:
            used = sum(m * d for m, d in zip(pre, prob.degrees))
            top = (prob.target - used) // prob.degrees[k]
            if k == prob.trivial_pos:
                top = min(top, prob.trivial_cap)
            nxt += [pre + (m,) for m in range(top, -1, -1)]
        out = nxt
    return out


def _worker(args):
    prob, prefix, cap = args
    return _run_task(prob, prefix, cap)


def _solve(prob: _Problem, cap: int | None, threads: int):
    tasks = _tasks(prob)
    jobs = [(prob, pre, cap) for pre in tasks]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(_worker, jobs, chunksize=1))
    else:
        results = [_worker(j) for j in jobs]
    sols, nodes = [], 0
    for f, nd in results:
        sols += f
        nodes += nd
    return sols, nodes


# ---------------------------------------------------------------- public

def ensure_valid(t: CharacterTable):
    cached = getattr(t, "_validation_ok", None)
    if cached is None:
        rep = validate(t)
        cached = rep.ok
        t._validation_ok = cached
        t._validation_failures = rep.failures[:5]
    if not cached:
        raise SearchError(f"table {t.name} fails validation: {t._validation_failures}")


def enumerate_characters(q: SearchQuery, threads: int = 1) -> SearchReport:
    t, p = q.table, q.p
    if p < 2 or t.order % p:
        raise SearchError(f"p={p} does not divide |G|={t.order}")
    ensure_valid(t)
    start = time.perf_counter()
    s = group_p_part(t.order, p)
    levels = [q.level] if q.exact_level else list(range(1, q.level + 1))
    cap = q.max_solutions
    vectors: list[tuple[int, ...]] = []
    nodes = 0
    truncated = False
    for lev in levels:
        remaining = None if cap is None else cap - len(vectors)
        if remaining is not None and remaining < 0:
            truncated = True
            break
        prob = compile_problem(t, p, q.uses_singular, lev * s, lev)
        found, nd = _solve(prob, remaining, threads)
        nodes += nd
        if remaining is not None and len(found) > remaining:
            found = found[:remaining]
            truncated = True
        for sol in found:
            m = [0] * len(sol)
            for pos, row in enumerate(prob.perm):
                m[row] = sol[pos]
            vectors.append(tuple(m))
        if truncated:
            break
    vectors = sorted(set(vectors))
    sols = []
    for vec in vectors:
        fl = classify(t, p, VirtualCharacter(vec))
        ok = fl.is_p_vanishing if q.uses_singular else fl.is_syl_vanishing
        if not ok or fl.level not in levels:
            raise AssertionError(f"search produced an invalid solution {vec}")
        sols.append(Solution(vec, fl))
    stats = {"nodes": nodes, "wall_time": time.perf_counter() - start, "sylow_order": s}
    return SearchReport(q, sols, not truncated, stats)


def search(t: CharacterTable, p: int, mode: str = "steinberg_like", level: int = 1,
           max_solutions: int | None = None, threads: int = 1) -> SearchReport:
    return enumerate_characters(SearchQuery(t, p, mode, level, max_solutions), threads)
