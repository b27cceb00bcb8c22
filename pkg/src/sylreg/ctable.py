"""Character tables: data model, JSON I/O, validation and direct products."""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import IO

from .cyclo import Cyclotomic, from_json, factorize


class TableFormatError(ValueError):
    pass


@dataclass(frozen=True)
class ClassInfo:
    label: str
    size: int
    order: int


@dataclass
class CharacterTable:
    name: str
    order: int
    classes: list[ClassInfo]
    irreducibles: list[list[Cyclotomic]]
    labels: list[str]
    power_maps: dict[int, list[int]] | None = None

    @property
    def nclasses(self) -> int:
        return len(self.classes)

    def degrees(self) -> list[int]:
        out = []
        for row in self.irreducibles:
            d = row[0].to_rational()
            out.append(int(d) if d is not None and Fraction(d).denominator == 1 else d)
        return out

    def is_rational(self) -> bool:
        return all(v.N == 1 for row in self.irreducibles for v in row)

    def class_index(self, label: str) -> int:
        for i, c in enumerate(self.classes):
            if c.label == label:
                return i
        raise KeyError(label)

    def row_index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class VirtualCharacter:
    """Nonnegative integer combination of a table's irreducibles."""

    mult: tuple[int, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be nonnegative")

    def degree(self, t: CharacterTable) -> int:
        self._check(t)
        return sum(m * d for m, d in zip(self.mult, t.degrees()))

    def values(self, t: CharacterTable) -> list[Cyclotomic]:
        self._check(t)
        out = []
        for j in range(t.nclasses):
            s = Cyclotomic.rational(0)
            for m, row in zip(self.mult, t.irreducibles):
                if m:
                    s = s + row[j] * m
            out.append(s)
        return out

    def support(self) -> list[int]:
        return [i for i, m in enumerate(self.mult) if m]

    def _check(self, t):
        if len(self.mult) != len(t.irreducibles):
            raise ValueError(
                f"multiplicity vector has length {len(self.mult)}, table has {len(t.irreducibles)} irreducibles"
            )


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, msg: str):
        self.failures.append(msg)


# ---------------------------------------------------------------- JSON

def to_json(t: CharacterTable) -> dict:
    obj = {
        "name": t.name,
        "order": str(t.order),
        "classes": [{"label": c.label, "size": str(c.size), "order": c.order} for c in t.classes],
    }
    if t.power_maps:
        obj["powermaps"] = {str(p): list(m) for p, m in sorted(t.power_maps.items())}
    obj["irreducibles"] = [
        {"label": lab, "values": [v.to_json() for v in row]} for lab, row in zip(t.labels, t.irreducibles)
    ]
    return obj


def dumps(t: CharacterTable) -> str:
    return json.dumps(to_json(t), separators=(",", ":"), ensure_ascii=False) + "\n"


def emit(t: CharacterTable, dest: str | Path | IO[str]):
    text = dumps(t)
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)


def _int_field(x, what: str) -> int:
    if isinstance(x, bool):
        raise TableFormatError(f"{what}: expected integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x, 10)
        except ValueError:
            pass
    raise TableFormatError(f"{what}: expected integer, got {x!r}")


def from_obj(obj) -> CharacterTable:
    if not isinstance(obj, dict):
        raise TableFormatError("top level must be an object")
    for key in ("name", "order", "classes", "irreducibles"):
        if key not in obj:
            raise TableFormatError(f"missing field {key!r}")
    order = _int_field(obj["order"], "order")
    classes = []
    for i, c in enumerate(obj["classes"]):
        if not isinstance(c, dict):
            raise TableFormatError(f"class {i}: not an object")
        if "order" not in c:
            raise TableFormatError(f"class {i}: missing element order")
        if "size" not in c:
            raise TableFormatError(f"class {i}: missing size")
        classes.append(
            ClassInfo(
                str(c.get("label", i)),
                _int_field(c["size"], f"class {i} size"),
                _int_field(c["order"], f"class {i} order"),
            )
        )
    rows, labels = [], []
    for i, r in enumerate(obj["irreducibles"]):
        vals = r.get("values") if isinstance(r, dict) else None
        if not isinstance(vals, list):
            raise TableFormatError(f"irreducible {i}: missing values")
        if len(vals) != len(classes):
            raise TableFormatError(f"irreducible {i}: {len(vals)} values for {len(classes)} classes")
        try:
            rows.append([from_json(v) for v in vals])
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise TableFormatError(f"irreducible {i}: {exc}") from None
        labels.append(str(r.get("label", i)))
    pm = None
    if obj.get("powermaps"):
        pm = {}
        for p, m in obj["powermaps"].items():
            m = [_int_field(x, f"powermap {p}") for x in m]
            if len(m) != len(classes) or any(not 0 <= x < len(classes) for x in m):
                raise TableFormatError(f"powermap {p}: bad length or index")
            pm[_int_field(p, "powermap prime")] = m
    return CharacterTable(str(obj["name"]), order, classes, rows, labels, pm)


def ingest(src: str | Path | IO[str]) -> CharacterTable:
    """Parse a table file. The result is not validated."""
    try:
        if isinstance(src, (str, Path)):
            text = Path(src).read_text(encoding="utf-8")
        else:
            text = src.read()
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"invalid JSON: {exc}") from None
    return from_obj(obj)


def loads(text: str) -> CharacterTable:
    return ingest(io.StringIO(text))


# ---------------------------------------------------------------- validation

def _rational_matrix(t: CharacterTable):
    rows = []
    for row in t.irreducibles:
        r = []
        for v in row:
            x = v.to_rational()
            if x is None:
                return None
            r.append(x)
        rows.append(r)
    return rows


def validate(t: CharacterTable) -> ValidationReport:
    rep = ValidationReport()
    k = t.nclasses
    if not t.classes:
        rep.add("table has no classes")
        return rep
    c0 = t.classes[0]
    if c0.size != 1 or c0.order != 1:
        rep.add("class 0 is not the identity")
    if sum(c.size for c in t.classes) != t.order:
        rep.add(f"class sizes sum to {sum(c.size for c in t.classes)}, not {t.order}")
    for j, c in enumerate(t.classes):
        if c.size <= 0 or t.order % c.size:
            rep.add(f"class {j} ({c.label}): size {c.size} does not divide {t.order}")
        if c.order <= 0 or t.order % c.order:
            rep.add(f"class {j} ({c.label}): element order {c.order} does not divide {t.order}")
    if len(t.irreducibles) != k:
        rep.add(f"{len(t.irreducibles)} irreducibles but {k} classes")
    for i, row in enumerate(t.irreducibles):
        if len(row) != k:
            rep.add(f"row {i}: ragged")
            return rep
    degs = []
    for i, row in enumerate(t.irreducibles):
        d = row[0].to_rational()
        if d is None or Fraction(d).denominator != 1 or d <= 0:
            rep.add(f"row {i} ({t.labels[i]}): degree {row[0]!r} is not a positive integer")
            degs.append(0)
        else:
            degs.append(int(d))
    if sum(d * d for d in degs) != t.order:
        rep.add(f"sum of squared degrees is {sum(d * d for d in degs)}, not {t.order}")
    if t.irreducibles and any(v != 1 for v in t.irreducibles[0]):
        rep.add("row 0 is not the trivial character")
    if not rep.ok:
        return rep

    mat = _rational_matrix(t)
    if mat is not None:
        conj = mat
    else:
        mat = t.irreducibles
        conj = [[v.conj() for v in row] for row in mat]
    sizes = [c.size for c in t.classes]
    n = len(mat)
    zero = 0 if isinstance(mat[0][0], (int, Fraction)) else Cyclotomic.rational(0)

    for a in range(n):
        for b in range(a, n):
            s = zero
            ra, rb = mat[a], conj[b]
            for j in range(k):
                x = ra[j]
                if x:
                    y = rb[j]
                    if y:
                        s = s + x * y * sizes[j]
            want = t.order if a == b else 0
            if s != want:
                rep.add(f"row orthogonality fails at ({a},{b}): got {s!r}, expected {want}")
    cols = list(zip(*mat))
    ccols = list(zip(*conj))
    for g in range(k):
        for h in range(g, k):
            s = zero
            cg, ch = cols[g], ccols[h]
            for i in range(n):
                x = cg[i]
                if x:
                    y = ch[i]
                    if y:
                        s = s + x * y
            want = t.order // sizes[g] if g == h else 0
            if s != want:
                rep.add(f"column orthogonality fails at ({g},{h}): got {s!r}, expected {want}")
    return rep


# ---------------------------------------------------------------- predicates

def group_p_part(order: int, p: int) -> int:
    r = 1
    while order % p == 0:
        order //= p
        r *= p
    return r


def _is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def classes_by_p_type(t: CharacterTable, p: int) -> tuple[frozenset[int], frozenset[int]]:
    """(p-singular classes, classes of nontrivial p-elements).

    A character vanishes on a Sylow p-subgroup minus the identity exactly
    when it vanishes on the second set, since every p-element lies in some
    Sylow p-subgroup and those are all conjugate.
    """
    if t.order % p:
        return frozenset(), frozenset()
    sing = frozenset(j for j, c in enumerate(t.classes) if c.order % p == 0)
    pel = frozenset(j for j in sing if _is_p_power(t.classes[j].order, p))
    return sing, pel


def direct_product(t1: CharacterTable, t2: CharacterTable) -> CharacterTable:
    classes = [
        ClassInfo(f"({a.label},{b.label})", a.size * b.size, lcm(a.order, b.order))
        for a in t1.classes
        for b in t2.classes
    ]
    rows, labels = [], []
    for la, ra in zip(t1.labels, t1.irreducibles):
        for lb, rb in zip(t2.labels, t2.irreducibles):
            rows.append([x * y for x in ra for y in rb])
            labels.append(f"({la},{lb})")
    pm = None
    if t1.power_maps and t2.power_maps:
        k2 = t2.nclasses
        common = set(t1.power_maps) & set(t2.power_maps)
        pm = {
            p: [t1.power_maps[p][i] * k2 + t2.power_maps[p][j] for i in range(t1.nclasses) for j in range(k2)]
            for p in sorted(common)
        } or None
    return CharacterTable(f"{t1.name}x{t2.name}", t1.order * t2.order, classes, rows, labels, pm)


def _unit_group_generated(m: int, gens: list[int]) -> bool:
    units = {u for u in range(1, m + 1) if gcd(u, m) == 1}
    units = {u % m for u in units}
    seen = {1 % m}
    frontier = [1 % m]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % m
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen == units


def galois_check(t: CharacterTable) -> bool | None:
    """Compare rational rows with classes fixed by all coprime power maps.

    Returns None when the supplied power maps cannot realize every Galois
    automorphism on some class.
    """
    if not t.power_maps:
        return None
    fixed = 0
    for j, c in enumerate(t.classes):
        gens = [p for p in t.power_maps if c.order % p]
        if c.order > 2 and not _unit_group_generated(c.order, [p % c.order for p in gens]):
            return None
        if all(t.power_maps[p][j] == j for p in gens):
            fixed += 1
    rational_rows = sum(1 for row in t.irreducibles if all(v.N == 1 for v in row))
    return fixed == rational_rows


def trivial_group_table() -> CharacterTable:
    return CharacterTable("1", 1, [ClassInfo("1a", 1, 1)], [[Cyclotomic.rational(1)]], ["1"], None)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]
