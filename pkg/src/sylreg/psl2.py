"""Generic character tables of SL_2(q) and PSL_2(q), q odd.

Conventions for the torus-indexed families (a tool choice, not canonical):
the split torus is generated by a of order q-1 and the nonsplit torus by b
of order q+1; rho = E(q-1), sigma = E(q+1).

* chi_i, i = 1..(q-3)/2: principal series, degree q+1, value rho^(il) + rho^(-il) on a^l.
* theta_j, j = 1..(q-1)/2: discrete series, degree q-1, value -(sigma^(jm) + sigma^(-jm)) on b^m.
* xi1, xi2 of degree (q+1)/2 and eta1, eta2 of degree (q-1)/2, whose
  values on the unipotent classes involve (+-1 +- sqrt(eps*q))/2 with
  eps = (-1)^((q-1)/2).

Unipotent classes c, d are the classes of [[1,1],[0,1]] and [[1,t],[0,1]]
for a nonsquare t; z is the central element -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .ctable import CharacterTable, ClassInfo
from .cyclo import Cyclotomic, E, factorize, sqrt_int

R = Cyclotomic.rational


@dataclass(frozen=True)
class PSL2Spec:
    q: int
    variant: str = "PSL2"

    def __post_init__(self):
        f = factorize(self.q) if self.q > 1 else ()
        if len(f) != 1:
            raise ValueError(f"q={self.q} is not a prime power")
        if self.q % 2 == 0:
            raise ValueError(f"q={self.q} must be odd")
        if self.q < 5:
            raise ValueError("q must be at least 5")
        if self.variant not in ("SL2", "PSL2"):
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def r(self) -> int:
        return factorize(self.q)[0][0]


def _sl2(q: int) -> CharacterTable:
    r = factorize(q)[0][0]
    eps = 1 if q % 4 == 1 else -1
    root = sqrt_int(eps * q)
    order = q * (q * q - 1)

    cls = [("1", 1, 1), ("z", 1, 2)]
    cls += [("c", (q * q - 1) // 2, r), ("d", (q * q - 1) // 2, r)]
    cls += [("zc", (q * q - 1) // 2, 2 * r), ("zd", (q * q - 1) // 2, 2 * r)]
    A = range(1, (q - 3) // 2 + 1)
    B = range(1, (q - 1) // 2 + 1)
    cls += [(f"a{l}", q * (q + 1), (q - 1) // gcd(l, q - 1)) for l in A]
    cls += [(f"b{m}", q * (q - 1), (q + 1) // gcd(m, q + 1)) for m in B]
    classes = [ClassInfo(*c) for c in cls]

    def row(at1, atz, c, d, zc, zd, fa, fb):
        return [R(at1), R(atz), c, d, zc, zd] + [fa(l) for l in A] + [fb(m) for m in B]

    rho = lambda k: E(q - 1, k % (q - 1))
    sig = lambda k: E(q + 1, k % (q + 1))
    one, zero = R(1), R(0)
    rows, labels = [], []

    rows.append(row(1, 1, one, one, one, one, lambda l: one, lambda m: one))
    labels.append("1")
    rows.append(row(q, q, zero, zero, zero, zero, lambda l: one, lambda m: R(-1)))
    labels.append("St")
    for i in A:
        s = (-1) ** i
        rows.append(row(q + 1, s * (q + 1), one, one, R(s), R(s),
                        lambda l, i=i: rho(i * l) + rho(-i * l), lambda m: zero))
        labels.append(f"chi{i}")
    for j in B:
        s = (-1) ** j
        rows.append(row(q - 1, s * (q - 1), R(-1), R(-1), R(-s), R(-s),
                        lambda l: zero, lambda m, j=j: -(sig(j * m) + sig(-j * m))))
        labels.append(f"theta{j}")
    up, um = (1 + root) / 2, (1 - root) / 2
    for name, (x, y) in (("xi1", (up, um)), ("xi2", (um, up))):
        rows.append(row((q + 1) // 2, eps * (q + 1) // 2, x, y, x * eps, y * eps,
                        lambda l: R((-1) ** l), lambda m: zero))
        labels.append(name)
    vp, vm = (-1 + root) / 2, (-1 - root) / 2
    for name, (x, y) in (("eta1", (vp, vm)), ("eta2", (vm, vp))):
        rows.append(row((q - 1) // 2, -eps * (q - 1) // 2, x, y, x * (-eps), y * (-eps),
                        lambda l: zero, lambda m: R((-1) ** (m + 1))))
        labels.append(name)
    return CharacterTable(f"SL2({q})", order, classes, rows, labels)


def _psl2_from_sl2(t: CharacterTable, q: int) -> CharacterTable:
    r = factorize(q)[0][0]
    order = t.order // 2
    idx = {c.label: j for j, c in enumerate(t.classes)}
    # representatives of the fused classes {g, zg}
    reps = [("1", 1, 1, 1), ("c", (q * q - 1) // 2, r, 1), ("d", (q * q - 1) // 2, r, 1)]
    for l in range(1, (q - 3) // 2 + 1):
        partner = (q - 1) // 2 - l
        if partner < l and partner >= 1:
            continue
        self_paired = partner == l
        size = q * (q + 1) // (2 if self_paired else 1)
        reps.append((f"a{l}", size, (q - 1) // gcd(2 * l, q - 1), 0))
    for m in range(1, (q - 1) // 2 + 1):
        partner = (q + 1) // 2 - m
        if partner < m:
            continue
        self_paired = partner == m
        size = q * (q - 1) // (2 if self_paired else 1)
        reps.append((f"b{m}", size, (q + 1) // gcd(2 * m, q + 1), 0))
    classes = [ClassInfo(lab, size, o) for lab, size, o, _ in reps]
    cols = [idx[lab] for lab, *_ in reps]
    rows, labels = [], []
    for lab, row in zip(t.labels, t.irreducibles):
        if row[1] != row[0]:
            continue
        rows.append([row[j] for j in cols])
        labels.append(lab)
    return CharacterTable(f"PSL2({q})", order, classes, rows, labels)


def psl2_table(spec: PSL2Spec | int, variant: str | None = None) -> CharacterTable:
    if isinstance(spec, int):
        spec = PSL2Spec(spec, variant or "PSL2")
    t = _sl2(spec.q)
    if spec.variant == "SL2":
        return t
    return _psl2_from_sl2(t, spec.q)
