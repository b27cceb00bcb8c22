"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored sparsely over a fixed basis of Q(zeta_N). For a prime
power N = p^a the basis is the usual power basis zeta^k, k < phi(N). For
composite N it is the tensor product of the prime-power power bases, taken
through the CRT splitting zeta_N^k = prod_p zeta_{p^a}^{e_p}. Reduction is
exact and canonical for fixed N, and roots of unity stay sparse, which keeps
products of character values cheap even for conductors in the thousands.

``power_basis`` exposes the same element in the plain power basis modulo
Phi_N for callers (and tests) that want that representation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

Number = int | Fraction


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _to_rat(c) -> Number:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def mobius(n: int) -> int:
    f = factorize(n)
    if any(a > 1 for _, a in f):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Built from x^n - 1 = prod_{d | n} Phi_d by exact division.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _polydiv_exact(a: list[int], b: list[int]) -> list[int]:
    # b is monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact division")
    return q


class _Layout:
    """Per-conductor data: prime-power components and the reduction cache."""

    def __init__(self, N: int):
        self.N = N
        self.parts = []  # (p, a, p^a, cofactor N/p^a, inverse of cofactor mod p^a)
        for p, a in factorize(N):
            pa = p**a
            co = N // pa
            self.parts.append((p, a, pa, co, pow(co, -1, pa)))
        self.cache: dict[int, tuple[tuple[int, int], ...]] = {}

    def reduce(self, k: int) -> tuple[tuple[int, int], ...]:
        """zeta_N^k as ((exponent, sign), ...) over the canonical basis."""
        k %= self.N
        hit = self.cache.get(k)
        if hit is not None:
            return hit
        terms = [(0, 1)]
        for p, a, pa, co, inv in self.parts:
            e = k * inv % pa
            block = pa // p
            bound = (p - 1) * block
            if e < bound:
                opts = [(e, 1)]
            else:
                r = e - bound
                opts = [(t * block + r, -1) for t in range(p - 1)]
            terms = [(x + ee * co, s * ss) for x, s in terms for ee, ss in opts]
        out = tuple((x % self.N, s) for x, s in terms)
        self.cache[k] = out
        return out

    def is_basis(self, k: int) -> bool:
        for p, a, pa, co, inv in self.parts:
            if k * inv % pa >= (p - 1) * (pa // p):
                return False
        return True


@lru_cache(maxsize=None)
def _layout(N: int) -> _Layout:
    return _Layout(N)


class Cyclotomic:
    """An element sum_k c_k zeta_N^k of Q(zeta_N) in canonical sparse form.

    Instances are immutable. Use :func:`canonicalize`, :func:`E` or
    :meth:`Cyclotomic.rational` to build them.
    """

    __slots__ = ("N", "coeffs", "_hash")

    def __init__(self, N: int, coeffs: Mapping[int, Number]):
        # trusted constructor: coeffs already canonical for N
        if len(coeffs) == 0 or (len(coeffs) == 1 and 0 in coeffs):
            N = 1
        self.N = N
        self.coeffs = dict(coeffs)
        self._hash = None

    @classmethod
    def rational(cls, x) -> "Cyclotomic":
        x = _to_rat(x)
        return cls(1, {0: x} if x else {})

    def __repr__(self):
        if self.N == 1:
            return f"Cyclotomic({self.coeffs.get(0, 0)})"
        body = " + ".join(f"{c}*E({self.N})^{k}" for k, c in sorted(self.coeffs.items()))
        return f"Cyclotomic({body})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.N == 1

    def to_rational(self) -> Number | None:
        if self.N == 1:
            return self.coeffs.get(0, 0)
        return None

    def rebase(self, M: int) -> "Cyclotomic":
        """The same element expressed with conductor M (N must divide M)."""
        if M == self.N:
            return self
        if M % self.N:
            raise ValueError(f"conductor {self.N} does not divide {M}")
        s = M // self.N
        lay = _layout(M)
        out: dict[int, Number] = {}
        for k, c in self.coeffs.items():
            for kk, sg in lay.reduce(k * s):
                out[kk] = out.get(kk, 0) + sg * c
        return _finish(M, out)

    def _binary(self, other, sign):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.N == 1 and o.N == 1:
            return Cyclotomic.rational(self.coeffs.get(0, 0) + sign * o.coeffs.get(0, 0))
        L = self.N * o.N // gcd(self.N, o.N)
        a, b = self.rebase(L), o.rebase(L)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            out[k] = out.get(k, 0) + sign * c
        return _finish(L, out)

    def __add__(self, other):
        return self._binary(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, -1)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Cyclotomic(self.N, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.N == 1:
            c = o.coeffs.get(0, 0)
            if not c:
                return ZERO
            return Cyclotomic(self.N, {k: _norm(v * c) for k, v in self.coeffs.items()})
        if self.N == 1:
            return o.__mul__(self)
        L = self.N * o.N // gcd(self.N, o.N)
        a, b = self.rebase(L), o.rebase(L)
        lay = _layout(L)
        out: dict[int, Number] = {}
        for k1, c1 in a.coeffs.items():
            for k2, c2 in b.coeffs.items():
                c = c1 * c2
                for kk, sg in lay.reduce(k1 + k2):
                    out[kk] = out.get(kk, 0) + sg * c
        return _finish(L, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None or o.N != 1:
            raise TypeError("division only by nonzero rationals")
        c = o.coeffs.get(0, 0)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * _norm(1 / Fraction(c))

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta_N -> zeta_N^k."""
        if gcd(k, self.N) != 1:
            raise ValueError(f"{k} is not coprime to the conductor {self.N}")
        if self.N == 1:
            return self
        lay = _layout(self.N)
        out: dict[int, Number] = {}
        for j, c in self.coeffs.items():
            for kk, sg in lay.reduce(j * k):
                out[kk] = out.get(kk, 0) + sg * c
        return _finish(self.N, out)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.N == o.N:
            return self.coeffs == o.coeffs
        return (self - o).is_zero()

    def __hash__(self):
        if self._hash is None:
            # normalized trace: independent of the conductor used
            t = Fraction(0)
            for k, c in self.coeffs.items():
                m = self.N // gcd(k, self.N)
                t += Fraction(c) * mobius(m) / euler_phi(m)
            self._hash = hash(_norm(t))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def power_basis(self) -> tuple[int, list[Number]]:
        """(N, coefficients of the reduced polynomial modulo Phi_N)."""
        N = self.N
        phi = cyclotomic_poly(N)
        d = len(phi) - 1
        poly: list[Number] = [0] * max(N, 1)
        for k, c in self.coeffs.items():
            poly[k] += c
        for i in range(len(poly) - 1, d - 1, -1):
            c = poly[i]
            if c:
                for j in range(d + 1):
                    poly[i - d + j] -= c * phi[j]
        return N, [_norm(Fraction(c)) if isinstance(c, Fraction) else c for c in poly[:d]]

    def to_json(self):
        if self.N == 1:
            return _rat_str(self.coeffs.get(0, 0))
        return {"N": self.N, "terms": [[k, _rat_str(c)] for k, c in sorted(self.coeffs.items())]}


def _rat_str(c: Number) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _finish(N: int, out: dict[int, Number]) -> Cyclotomic:
    clean = {k: _norm(c) for k, c in out.items() if c}
    return Cyclotomic(N, clean)


def _coerce(x) -> Cyclotomic | None:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Cyclotomic.rational(x)
    return None


ZERO = Cyclotomic(1, {})
ONE = Cyclotomic(1, {0: 1})


def canonicalize(N: int, raw: Iterable[tuple[int, object]]) -> Cyclotomic:
    """Reduce sum c * zeta_N^k (arbitrary k >= 0) to canonical form."""
    if N <= 0:
        raise ValueError("conductor must be positive")
    lay = _layout(N)
    out: dict[int, Number] = {}
    for k, c in raw:
        c = _to_rat(c)
        if not c:
            continue
        for kk, sg in lay.reduce(k):
            out[kk] = out.get(kk, 0) + sg * c
    return _finish(N, out)


def E(N: int, k: int = 1) -> Cyclotomic:
    """The root of unity zeta_N^k."""
    return canonicalize(N, [(k % N, 1)])


def from_json(v) -> Cyclotomic:
    if isinstance(v, (str, int)) and not isinstance(v, bool):
        return Cyclotomic.rational(_to_rat(v))
    if isinstance(v, dict) and set(v) == {"N", "terms"}:
        N = v["N"]
        if not isinstance(N, int) or N <= 0:
            raise ValueError(f"bad conductor {N!r}")
        return canonicalize(N, [(int(k), c) for k, c in v["terms"]])
    raise ValueError(f"malformed cyclotomic value {v!r}")


def _legendre(t: int, p: int) -> int:
    r = pow(t % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Cyclotomic:
    # positive real square root of the prime p
    if p == 2:
        return E(8) + E(8, 7)
    g = canonicalize(p, [(t, _legendre(t, p)) for t in range(1, p)])
    if p % 4 == 1:
        return g
    return g * E(4, 3)  # g = i*sqrt(p)


def sqrt_int(D: int) -> Cyclotomic:
    """Principal square root of an integer (i*sqrt(|D|) when D < 0)."""
    if D == 0:
        return ZERO
    out = ONE
    m = abs(D)
    for p, a in factorize(m):
        out = out * (p ** (a // 2))
        if a % 2:
            out = out * _sqrt_prime(p)
    if D < 0:
        out = out * E(4)
    return out
