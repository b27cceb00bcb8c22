"""Weil character eigenvalue counts on X = <Z, h> for GU_p(q) and GL_p(q).

X is modelled as Z_c x Z_p: the pair (a, k) stands for g^a * h^k with g a
generator of the scalar torus Z of order c (c = q+1 unitary, q-1 linear)
and h = diag(1, eps, ..., eps^(p-1)), eps = g^(c/p). The number of
eigenvalues equal to 1 of g^a h^k is the count of j in 0..p-1 with
a + j*k*(c/p) = 0 mod c; that is all the Weil character needs.

Character values used:

* unitary: omega(x) = -(-q)^d(x)
* linear: omega(x) = q^d(x), the permutation character on F_q^p. Its
  trivial-central block contains the trivial character twice (zero vector
  plus the sum over projective points), so the nonlinear constituent there
  is the block minus 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import E
from .sylow import is_prime, is_prime_power

KINDS = {"u": "unitary", "unitary": "unitary", "l": "linear", "linear": "linear"}


@dataclass(frozen=True)
class WeilSpec:
    kind: str
    p: int
    q: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "kind", KINDS[self.kind])
        if not is_prime(self.p) or self.p == 2:
            raise ValueError("p must be an odd prime")
        if not is_prime_power(self.q):
            raise ValueError(f"q={self.q} is not a prime power")
        if self.c % self.p:
            raise ValueError(f"p={self.p} does not divide c={self.c}")
        if self.kind == "unitary" and (self.p, self.q) == (3, 2):
            raise ValueError("(p, q) = (3, 2) is excluded for the unitary kind")

    @property
    def c(self) -> int:
        return self.q + 1 if self.kind == "unitary" else self.q - 1

    @property
    def order_x(self) -> int:
        return self.c * self.p

    def elements(self):
        return [XElement(a, k) for a in range(self.c) for k in range(self.p)]

    def kills_zp(self, zeta: int) -> bool:
        """True when the central character zeta is trivial on Z_p."""
        return (zeta * (self.c // self.p)) % self.c == 0


@dataclass(frozen=True)
class XElement:
    z_exp: int
    h_exp: int


def valid(kind: str, p: int, q: int) -> bool:
    try:
        WeilSpec(kind, p, q)
    except ValueError:
        return False
    return True


def fixed_dim(s: WeilSpec, x: XElement) -> int:
    step = x.h_exp * (s.c // s.p)
    return sum(1 for j in range(s.p) if (x.z_exp + j * step) % s.c == 0)


def omega_value(s: WeilSpec, x: XElement) -> int:
    d = fixed_dim(s, x)
    if s.kind == "unitary":
        return -((-s.q) ** d)
    return s.q**d


def weil_inner(s: WeilSpec, zeta: int, i: int) -> int:
    """Multiplicity of nu^i as an eigenvalue of h on the zeta-block."""
    c, p = s.c, s.p
    total = 0
    for x in s.elements():
        arg = (zeta * x.z_exp + i * x.h_exp * (c // p)) % c
        total = total + omega_value(s, x) * E(c, (-arg) % c)
    v = total.to_rational()
    if v is None:
        raise ArithmeticError(f"irrational inner product for {s}, zeta={zeta}, i={i}")
    v = Fraction(v) / s.order_x
    if v.denominator != 1 or v < 0:
        raise ArithmeticError(f"inner product {v} is not a nonnegative integer")
    return int(v)


def closed_form(s: WeilSpec, zeta: int, i: int) -> int:
    """|X| times the multiplicity, from the case analysis."""
    p, q, c = s.p, s.q, s.c
    i %= p
    if s.kind == "unitary":
        base = q**p + 1
        if not s.kills_zp(zeta):
            return base
        if i:
            return base - p * c
        return base + (p - 1) * p * c if zeta % c else base + (p - 2) * p * c
    base = q**p - 1
    if not s.kills_zp(zeta):
        return base
    if i:
        return base - p * c
    return base + (p - 1) * p * c if zeta % c else base + p * p * c


def block_trace(s: WeilSpec, zeta: int) -> int:
    mults = [weil_inner(s, zeta, i) for i in range(s.p)]
    tr = sum(m * E(s.p, i) for i, m in enumerate(mults) if m)
    if isinstance(tr, int):
        return tr
    v = tr.to_rational()
    if v is None or Fraction(v).denominator != 1:
        raise ArithmeticError("trace of h is not a rational integer")
    return int(v)


def rho_at_h(s: WeilSpec, zeta: int) -> int:
    tr = block_trace(s, zeta)
    if s.kind == "linear" and zeta % s.c == 0:
        tr -= 2
    return tr


def expected_rho(s: WeilSpec, zeta: int) -> set[int]:
    """Value set claimed for rho(h), read literally."""
    if not s.kills_zp(zeta):
        return {0}
    if zeta % s.c == 0:
        return {s.p - 2} if s.kind == "linear" else {s.p - 1}
    return {s.p}


@dataclass
class WeilRecord:
    kind: str
    p: int
    q: int
    zeta: int
    multiplicities: list[int]
    closed_forms_ok: bool
    rho: int
    expected: list[int]

    @property
    def ok(self) -> bool:
        return self.closed_forms_ok and self.rho in self.expected

    def to_json(self):
        return {
            "kind": self.kind, "p": self.p, "q": self.q, "zeta": self.zeta,
            "multiplicities": self.multiplicities,
            "closed_forms_ok": self.closed_forms_ok,
            "rho": self.rho, "expected": self.expected, "ok": self.ok,
        }


def check_spec(s: WeilSpec) -> list[WeilRecord]:
    out = []
    total = 0
    for zeta in range(s.c):
        mults = [weil_inner(s, zeta, i) for i in range(s.p)]
        total += sum(mults)
        cf = all(m * s.order_x == closed_form(s, zeta, i) for i, m in enumerate(mults))
        out.append(WeilRecord(s.kind, s.p, s.q, zeta, mults, cf, rho_at_h(s, zeta),
                              sorted(expected_rho(s, zeta))))
    dim = omega_value(s, XElement(0, 0))
    if total != dim:
        raise ArithmeticError(f"multiplicities sum to {total}, expected {dim}")
    return out


def grid(kinds=("unitary", "linear"), primes=(3, 5, 7), qmax: int = 19):
    return [WeilSpec(k, p, q) for k in kinds for p in primes
            for q in range(2, qmax + 1) if valid(k, p, q)]
