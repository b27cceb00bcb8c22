"""Sylow p-parts, minimal degrees and inequality audits for classical groups.

Group orders are exact products; ``sylow_order`` takes the p-part of that
product and is the reference. ``sylow_shortcut`` evaluates closed forms for
GL with p odd and for the groups that reduce to it, plus the 2-part of
symplectic groups for odd q. It is checked against the reference.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from math import factorial, gcd, prod

from .cyclo import factorize

UNKNOWN = "unknown-for-params"

ALIASES = {
    "oplus": "go_plus",
    "ominus": "go_minus",
    "goplus": "go_plus",
    "gominus": "go_minus",
    "soodd": "omega_odd",
    "omega": "omega_odd",
    "pomegaplus": "pomega_plus",
    "pomegaminus": "pomega_minus",
}

LIE = (
    "gl", "sl", "psl", "pgl",
    "gu", "su", "psu", "pgu",
    "sp", "psp", "omega_odd",
    "go_plus", "go_minus", "pomega_plus", "pomega_minus",
)
FAMILIES = ("sym", "alt") + LIE


def is_prime(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1 and factorize(n)[0][1] == 1


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorize(q)) == 1


def char_of(q: int) -> int:
    return factorize(q)[0][0]


@dataclass(frozen=True)
class GroupFamilySpec:
    family: str
    n: int
    q: int | None = None

    def __post_init__(self):
        fam = ALIASES.get(self.family.lower().replace("-", "").replace("_", ""), self.family.lower())
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        if self.n < 1:
            raise ValueError("n must be positive")
        if fam in LIE:
            if self.q is None or not is_prime_power(self.q):
                raise ValueError(f"{fam} needs q a prime power, got {self.q!r}")
        elif self.q is not None:
            raise ValueError(f"{fam} takes no q")

    def __str__(self):
        return f"{self.family}({self.n})" if self.q is None else f"{self.family}({self.n},{self.q})"


def p_part(x: int, p: int) -> int:
    """The largest power of p dividing x."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if x < 1:
        raise ValueError("argument must be positive")
    r = 1
    while x % p == 0:
        x //= p
        r *= p
    return r


def factorial_p_part(n: int, p: int) -> int:
    """|n!|_p by Legendre's formula."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s, k = 0, p
    while k <= n:
        s += n // k
        k *= p
    return p**s


def mult_order(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ValueError("not a unit")
    k, x = 1, a
    while x != 1:
        x = x * a % p
        k += 1
    return k


def e_and_d(q: int, p: int) -> tuple[int, int]:
    """(order of q mod p, order of -q mod p)."""
    if q % p == 0:
        raise ValueError(f"p={p} divides q={q}")
    return mult_order(q, p), mult_order(-q, p)


# ---------------------------------------------------------------- orders

def group_order(g: GroupFamilySpec) -> int:
    n, q, f = g.n, g.q, g.family
    if f == "sym":
        return factorial(n)
    if f == "alt":
        return max(factorial(n) // 2, 1)
    if f in ("gl", "sl", "psl", "pgl"):
        o = q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(1, n + 1))
        if f == "gl":
            return o
        o //= q - 1
        return o // gcd(n, q - 1) if f == "psl" else o
    if f in ("gu", "su", "psu", "pgu"):
        o = q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, n + 1))
        if f == "gu":
            return o
        o //= q + 1
        return o // gcd(n, q + 1) if f == "psu" else o
    if f in ("sp", "psp", "omega_odd"):
        o = q ** (n * n) * prod(q ** (2 * i) - 1 for i in range(1, n + 1))
        return o if f == "sp" else o // gcd(2, q - 1)
    eps = 1 if f.endswith("plus") else -1
    base = q ** (n * (n - 1)) * (q**n - eps) * prod(q ** (2 * i) - 1 for i in range(1, n))
    if f.startswith("go"):
        return 2 * base
    return base // gcd(4, q**n - eps)


def sylow_order(g: GroupFamilySpec, p: int) -> int:
    """Exact |G|_p from the order formula."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if g.family == "sym":
        return factorial_p_part(g.n, p)
    if g.family == "alt":
        s = factorial_p_part(g.n, p)
        return s // 2 if p == 2 and g.n >= 2 else s
    return p_part(group_order(g), p)


def _gl_odd(n: int, q: int, p: int) -> int:
    e = mult_order(q, p)
    m = n // e
    return p_part(q**e - 1, p) ** m * factorial_p_part(m, p)


def _gu_odd(n: int, q: int, p: int) -> int:
    e = mult_order(q, p)
    if e % 2:
        return _gl_odd(n // 2, q, p)
    if e % 4 == 0:
        return _gl_odd(n // 2, q * q, p)
    return _gl_odd(n, q * q, p)


def _gu_e2(m: int, Q: int, p: int) -> int:
    # GU_m(Q) with p | Q+1
    return p_part(Q + 1, p) ** m * factorial_p_part(m, p)


def sylow_shortcut(g: GroupFamilySpec, p: int) -> int | None:
    """Closed-form |G|_p, or None where no shortcut applies."""
    f, n, q = g.family, g.n, g.q
    if f in ("sym", "alt") or q % p == 0:
        return None
    if p == 2:
        if f in ("sp", "psp") and q % 2:
            s = p_part(q * q - 1, 2) ** n * factorial_p_part(n, 2)
            return s if f == "sp" else s // 2
        return None
    if f in ("gl", "sl", "psl", "pgl"):
        s = _gl_odd(n, q, p)
        if f == "gl":
            return s
        s //= p_part(q - 1, p)
        return s // p_part(gcd(n, q - 1), p) if f == "psl" else s
    if f in ("gu", "su", "psu", "pgu"):
        s = _gu_odd(n, q, p)
        if f == "gu":
            return s
        s //= p_part(q + 1, p)
        return s // p_part(gcd(n, q + 1), p) if f == "psu" else s
    e = mult_order(q, p)
    if f in ("sp", "psp", "omega_odd"):
        if e % 2:
            return _gl_odd(n, q, p)
        return _gu_e2(2 * n // e, q ** (e // 2), p)
    plus = f.endswith("plus")
    if e % 2:
        return _gl_odd(n if plus else n - 1, q, p)
    m, rest = divmod(2 * n, e)
    if rest == 0 and (m % 2 == 1) == plus:
        m -= 1
    return _gu_e2(m, q ** (e // 2), p)


# ---------------------------------------------------------------- minimal degrees

@dataclass(frozen=True)
class MuTriple:
    mu1: int | str = UNKNOWN
    mu2: int | str = UNKNOWN
    mu3: int | str = UNKNOWN

    def as_tuple(self):
        return (self.mu1, self.mu2, self.mu3)

    def known(self) -> bool:
        return all(isinstance(x, int) for x in self.as_tuple())


def _exact(num: int, den: int) -> int | str:
    return num // den if num % den == 0 else UNKNOWN


def _linear_mu(n: int, q: int) -> MuTriple:
    d = lambda k: (q**k - 1) // (q - 1)
    if (n, q) == (6, 2):
        return MuTriple(62, 217, 588)
    if (n, q) == (6, 3):
        return MuTriple(363, 364, 6318)
    if (n, q) == (4, 3):
        return MuTriple(26, 39, 52)
    if n == 3 and q > 2:
        return MuTriple(d(3) - 1, d(3), (q * q - 1) * (q - 1) // gcd(3, q - 1))
    if n == 4 and q > 3:
        return MuTriple(d(4) - 1, d(4), (q**3 - 1) * (q - 1) // gcd(2, q - 1))
    if n > 4 and q > 2:
        return MuTriple(d(n) - 1, d(n), _exact(d(n) * (q ** (n - 1) - q * q), q * q - 1))
    if n > 4 and q == 2:
        return MuTriple(d(n) - 1, _exact(d(n) * (2 ** (n - 1) - 4), 3), _exact(d(n) * d(n - 1), 3))
    return MuTriple()


def _unitary_mu(n: int, q: int) -> MuTriple:
    if q == 2 and n in (3, 4, 6):
        return MuTriple()
    if n == 3:
        return MuTriple(q * q - q, q * q - q + 1, (q * q - q + 1) * (q - 1) // gcd(3, q + 1))
    if n == 4:
        if q % 2 == 0:
            return MuTriple()
        return MuTriple((q - 1) * (q * q + 1), q * (q * q - q + 1), (q * q - q + 1) * (q * q + 1) // 2)
    if n >= 5 and n % 2:
        return MuTriple(
            _exact(q**n - q, q + 1),
            _exact(q**n + 1, q + 1),
            _exact((q**n + 1) * (q ** (n - 1) - q * q), (q * q - 1) * (q + 1)),
        )
    if n >= 6:
        return MuTriple(
            _exact(q**n - 1, q + 1),
            _exact(q**n + q, q + 1),
            _exact((q**n - 1) * (q ** (n - 1) + 1), (q * q - 1) * (q + 1)),
        )
    return MuTriple()


def mu_degrees(g: GroupFamilySpec) -> MuTriple:
    """The three smallest nontrivial degrees, where a known formula covers g."""
    f, n, q = g.family, g.n, g.q
    if f in ("sym", "alt"):
        if f == "alt" and n == 5:
            return MuTriple(3)
        return MuTriple(n - 1) if n >= 5 else MuTriple()
    if f in ("gl", "sl", "psl", "pgl"):
        if (n, q) == (3, 4):
            # the generic formula fails for SL_3(4); only the
            # quotient values are known exactly
            return MuTriple(20, 35, 45) if f in ("psl", "pgl") else MuTriple()
        return _linear_mu(n, q)
    if f in ("gu", "su", "psu", "pgu"):
        return _unitary_mu(n, q)
    if q % 2 == 0:
        return MuTriple()
    if f == "sp" and n >= 2:
        return MuTriple((q**n - 1) // 2, (q**n + 1) // 2, _exact((q**n - 1) * (q**n - q), 2 * (q + 1)))
    if f == "psp" and n >= 2:
        return MuTriple(mu3=_exact((q**n - 1) * (q**n - q), 2 * (q + 1)))
    if f == "omega_odd" and n >= 3 and q >= 5:
        return MuTriple(mu1=(q ** (2 * n) - 1) // (q * q - 1))
    if f == "pomega_plus" and n >= 4 and q >= 5:
        return MuTriple(
            _exact((q**n - 1) * (q ** (n - 1) + q), q * q - 1),
            _exact((q**n - 1) * (q ** (n - 1) - 1), 2 * (q + 1)),
        )
    if f == "pomega_minus" and n >= 4 and q >= 5:
        return MuTriple(mu2=_exact((q**n + 1) * (q ** (n - 1) + 1), 2 * (q + 1)))
    return MuTriple()


# ---------------------------------------------------------------- audits

@dataclass
class AuditRecord:
    params: dict
    lhs: int | None
    rhs: int | None
    holds: bool | None
    exception_expected: bool = False
    status: str = "checked"

    def to_json(self):
        d = asdict(self)
        d["lhs"] = None if self.lhs is None else str(self.lhs)
        d["rhs"] = None if self.rhs is None else str(self.rhs)
        return d

    @property
    def explained(self) -> bool:
        return self.status == "skipped" or self.holds or self.exception_expected


@dataclass
class AuditReport:
    lemma: str
    records: list[AuditRecord]

    @property
    def checked(self):
        return [r for r in self.records if r.status == "checked"]

    @property
    def ok(self) -> bool:
        return all(r.explained for r in self.records)

    @property
    def unexplained(self):
        return [r for r in self.records if not r.explained]


def _primes(lo, hi):
    return [p for p in range(lo, hi + 1) if is_prime(p)]


def _prime_powers(hi):
    return [q for q in range(2, hi + 1) if is_prime_power(q)]


def _skip(params):
    return AuditRecord(params, None, None, None, False, "skipped")


def _rec(params, lhs, rhs, holds, exc=False):
    return AuditRecord(params, lhs, rhs, holds, exc)


def audit_dd77(pmax, qmax, nmax):
    out = []
    for p in _primes(3, pmax):
        for q in _prime_powers(qmax):
            if q % p == 0:
                continue
            e = mult_order(q, p)
            if e <= 1:
                continue
            for n in range(2, min(p, nmax) + 1):
                if q == 2 and not (n < p or p < 2**e - 1):
                    continue
                g = GroupFamilySpec("gl", e * n, q)
                params = {"group": str(g), "p": p, "e": e, "n": n}
                mu1 = mu_degrees(g).mu1
                if mu1 == UNKNOWN:
                    out.append(_skip(params))
                    continue
                s = sylow_order(g, p)
                out.append(_rec(params, s, mu1, s < mu1))
    return out


def audit_666(pmax, qmax, nmax):
    out = []
    for e in range(2, 8):
        p = 2**e - 1
        if p > pmax or not is_prime(p):
            continue
        g = GroupFamilySpec("gl", e * p, 2)
        params = {"group": str(g), "p": p, "e": e}
        mu1 = mu_degrees(g).mu1
        s = sylow_order(g, p)
        chain = s == p ** (p + 1) and mu1 == (p + 1) ** p - 2 == 2 ** (e * p) - 2
        out.append(_rec(params, s, mu1, chain and s > mu1))
    return out


def audit_u44(pmax, qmax, nmax):
    out = []
    for p in _primes(3, pmax):
        e = mult_order(2, p)
        if e <= 1:
            continue
        g = GroupFamilySpec("gl", e * p, 2)
        params = {"group": str(g), "p": p, "e": e}
        mu2 = mu_degrees(g).mu2
        if mu2 == UNKNOWN:
            out.append(_skip(params))
            continue
        s = sylow_order(g, p)
        out.append(_rec(params, s, mu2, s < mu2))
    return out


def audit_sudp(pmax, qmax, nmax):
    out = []
    for p in _primes(3, pmax):
        for q in _prime_powers(qmax):
            if q % p == 0:
                continue
            d = mult_order(-q, p)
            if d <= 1:
                continue
            for n in range(2 * d, min(d * p, nmax) + 1):
                g = GroupFamilySpec("su", n, q)
                params = {"group": str(g), "p": p, "d": d}
                mu1 = mu_degrees(g).mu1
                if mu1 == UNKNOWN:
                    out.append(_skip(params))
                    continue
                s = sylow_order(g, p)
                out.append(_rec(params, s, mu1, s < mu1))
    return out


def audit_md5(pmax, qmax, nmax):
    out = []
    for p in _primes(3, pmax):
        for q in _prime_powers(qmax):
            if (q - 1) % p:
                continue
            for n in range(3, min(p - 1, nmax) + 1):
                g = GroupFamilySpec("pgl", n, q)
                params = {"group": str(g), "p": p}
                rhs = (q**n - q) // (q - 1)
                s = sylow_order(g, p)
                out.append(_rec(params, s, rhs, s < rhs))
    return out


def audit_3rd(pmax, qmax, nmax):
    out = []
    for fam in ("psl", "psu"):
        for q in _prime_powers(qmax):
            if q <= 3 or q % 2 == 0:
                continue
            for n in range(3, nmax + 1):
                g = GroupFamilySpec(fam, n, q)
                params = {"group": str(g), "p": 2}
                mu3 = mu_degrees(g).mu3
                if mu3 == UNKNOWN:
                    out.append(_skip(params))
                    continue
                s = sylow_order(g, 2)
                out.append(_rec(params, s, mu3, s < mu3))
    return out


def _psl2_mu(q: int) -> int:
    if q % 2 == 0:
        return q - 1
    return (q + 1) // 2 if q % 4 == 1 else (q - 1) // 2


def audit_ms1(pmax, qmax, nmax):
    out = []
    for q in _prime_powers(qmax):
        if q < 4:
            continue
        g = GroupFamilySpec("psl", 2, q)
        r = char_of(q)
        mu = _psl2_mu(q)
        for p in _primes(2, pmax):
            s = sylow_order(g, p)
            if s == 1:
                continue
            cyclic = (p == r and q == p) or (p != r and p != 2)
            if not cyclic:
                continue
            exc = q == p and p % 4 == 3 and mu == (p - 1) // 2
            out.append(_rec({"group": str(g), "p": p, "mu": mu}, 2 * mu, s, 2 * mu > s, exc))
    for n in range(5, nmax + 1):
        g = GroupFamilySpec("alt", n)
        mu = mu_degrees(g).mu1
        for p in _primes(2, pmax):
            s = sylow_order(g, p)
            if s != p or p == 2:
                continue
            out.append(_rec({"group": str(g), "p": p, "mu": mu}, 2 * mu, s, 2 * mu > s))
    return out


def audit_sp2(pmax, qmax, nmax):
    out = []
    for q in _prime_powers(qmax):
        if q <= 3 or q % 2 == 0:
            continue
        for n in range(2, nmax + 1):
            g = GroupFamilySpec("psp", n, q)
            mu3 = mu_degrees(g).mu3
            s = sylow_order(g, 2)
            out.append(_rec({"group": str(g), "p": 2}, s, mu3, s < mu3, (n, q) in ((2, 5), (2, 7))))
    return out


def audit_oddorth(pmax, qmax, nmax):
    out = []
    for q in _prime_powers(qmax):
        if q <= 3 or q % 2 == 0:
            continue
        for n in range(3, nmax + 1):
            g = GroupFamilySpec("omega_odd", n, q)
            mu1 = mu_degrees(g).mu1
            s = sylow_order(g, 2)
            out.append(_rec({"group": str(g), "p": 2}, s, mu1, s < mu1, (n, q) in ((3, 7), (4, 5), (4, 7))))
    return out


def audit_evenorth(pmax, qmax, nmax):
    out = []
    for fam in ("pomega_plus", "pomega_minus"):
        for q in _prime_powers(qmax):
            if q <= 3 or q % 2 == 0:
                continue
            for n in range(4, nmax + 1):
                g = GroupFamilySpec(fam, n, q)
                mu2 = mu_degrees(g).mu2
                s = sylow_order(g, 2)
                exc = fam == "pomega_plus" and (n, q) == (4, 7)
                out.append(_rec({"group": str(g), "p": 2}, s, mu2, s < mu2, exc))
    return out


AUDITS = {
    "dd77": audit_dd77,
    "666": audit_666,
    "u44": audit_u44,
    "SU_dp": audit_sudp,
    "md5": audit_md5,
    "3rd": audit_3rd,
    "ms1": audit_ms1,
    "sp2": audit_sp2,
    "oddorth": audit_oddorth,
    "evenorth": audit_evenorth,
}


def audit_inequality(lemma: str, pmax: int = 13, qmax: int = 16, nmax: int = 12) -> AuditReport:
    key = {k.lower(): k for k in AUDITS}.get(lemma.lower().replace("lem:", ""))
    if key is None:
        raise ValueError(f"unknown audit {lemma!r}; choose from {', '.join(AUDITS)}")
    return AuditReport(key, AUDITS[key](pmax, qmax, nmax))
