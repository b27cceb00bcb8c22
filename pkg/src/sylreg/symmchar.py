"""Partitions, the Murnaghan-Nakayama rule and character tables of S_n, A_n."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, gcd, lcm, prod

from .ctable import CharacterTable, ClassInfo
from .cyclo import Cyclotomic, sqrt_int

Partition = tuple[int, ...]

MAX_N = 17


def as_partition(parts) -> Partition:
    p = tuple(int(x) for x in parts if x)
    if any(a < b for a, b in zip(p, p[1:])) or any(x < 0 for x in p):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def label(p: Partition) -> str:
    return "[" + ",".join(map(str, p)) + "]"


def parse_label(s: str) -> Partition:
    s = s.strip().rstrip("+-").strip("[]")
    return as_partition(int(x) for x in s.split(",")) if s else ()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographic ([n] first, [1^n] last)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def hook(n: int, i: int) -> Partition:
    """The hook [i, 1^(n-i)]."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    return (i,) + (1,) * (n - i)


def hook_lengths(p: Partition) -> list[int]:
    c = conjugate(p)
    return [p[r] - s + c[s] - r - 1 for r in range(len(p)) for s in range(p[r])]


def hook_degree(p: Partition) -> int:
    return factorial(sum(p)) // prod(hook_lengths(p))


def diagonal_hooks(p: Partition) -> list[int]:
    c = conjugate(p)
    return [p[i] - i + c[i] - i - 1 for i in range(len(p)) if p[i] > i]


def z_mu(mu: Partition) -> int:
    """Centralizer order of an element of cycle type mu in S_n."""
    return prod(m**k * factorial(k) for m, k in Counter(mu).items())


def is_even_type(mu: Partition) -> bool:
    return sum(m - 1 for m in mu) % 2 == 0


# ---------------------------------------------------------------- MN rule

def _beta(lam: Partition) -> tuple[int, ...]:
    L = len(lam)
    return tuple(lam[i] + L - 1 - i for i in range(L))


def _unbeta(beta) -> Partition:
    b = sorted(beta, reverse=True)
    L = len(b)
    return tuple(x for x in (b[i] - (L - 1 - i) for i in range(L)) if x)


@lru_cache(maxsize=None)
def _rim_hooks(lam: Partition, r: int) -> tuple[tuple[Partition, int], ...]:
    """All (lam minus a rim hook of length r, leg length)."""
    beta = _beta(lam)
    bs = set(beta)
    out = []
    for b in beta:
        if b >= r and b - r not in bs:
            leg = sum(1 for x in beta if b - r < x < b)
            new = [x for x in beta if x != b] + [b - r]
            out.append((_unbeta(new), leg))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    s = 0
    for sub, leg in _rim_hooks(lam, r):
        v = _mn(sub, rest)
        if v:
            s += -v if leg % 2 else v
    return s


def mn_value(lam, mu) -> int:
    """chi^lam on the class of cycle type mu."""
    lam = as_partition(lam)
    mu = as_partition(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{label(lam)}| != |{label(mu)}|")
    return _mn(lam, mu)


# ---------------------------------------------------------------- tables

def _power_type(mu: Partition, p: int) -> Partition:
    out = []
    for m in mu:
        g = gcd(m, p)
        out += [m // g] * g
    return tuple(sorted(out, reverse=True))


def _primes_upto(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


def sn_classes(n: int) -> list[Partition]:
    # identity first: ascending lexicographic order of cycle types
    return list(reversed(partitions_of(n)))


@lru_cache(maxsize=None)
def sn_table(n: int) -> CharacterTable:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"sn_table supports 1 <= n <= {MAX_N}, got {n}")
    cls = sn_classes(n)
    order = factorial(n)
    classes = [ClassInfo(label(mu), order // z_mu(mu), lcm(*mu)) for mu in cls]
    idx = {mu: j for j, mu in enumerate(cls)}
    rows = [[Cyclotomic.rational(_mn(lam, mu)) for mu in cls] for lam in partitions_of(n)]
    pm = {p: [idx[_power_type(mu, p)] for mu in cls] for p in _primes_upto(n)}
    return CharacterTable(f"S{n}", order, classes, rows, [label(l) for l in partitions_of(n)], pm or None)


def _splits(mu: Partition) -> bool:
    return all(m % 2 for m in mu) and len(set(mu)) == len(mu)


def _jacobi(a: int, m: int) -> int:
    a %= m
    r = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                r = -r
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            r = -r
        a %= m
    return r if m == 1 else 0


def an_classes(n: int) -> list[tuple[Partition, str]]:
    out = []
    for mu in sn_classes(n):
        if not is_even_type(mu):
            continue
        if _splits(mu) and n > 1:
            out += [(mu, "+"), (mu, "-")]
        else:
            out.append((mu, ""))
    return out


@lru_cache(maxsize=None)
def an_table(n: int) -> CharacterTable:
    """Character table of A_n.

    Rows: one per pair {lam, lam'} of distinct conjugate partitions, labelled
    by the reverse-lex-first member, and lam+/lam- for self-conjugate lam.
    On the split class of cycle type equal to the diagonal hook lengths of a
    self-conjugate lam, lam+ takes (eps + sqrt(eps*prod h))/2 on the '+'
    class and the conjugate value on the '-' class.
    """
    if not 3 <= n <= MAX_N:
        raise ValueError(f"an_table supports 3 <= n <= {MAX_N}, got {n}")
    cls = an_classes(n)
    order = factorial(n) // 2
    classes = []
    for mu, s in cls:
        size = order * 2 // z_mu(mu)
        if s:
            size //= 2
        classes.append(ClassInfo(label(mu) + s, size, lcm(*mu)))
    rows, labels = [], []
    seen = set()
    for lam in partitions_of(n):
        if lam in seen:
            continue
        lc = conjugate(lam)
        seen.update((lam, lc))
        base = [_mn(lam, mu) for mu, _ in cls]
        if lc != lam:
            rows.append([Cyclotomic.rational(v) for v in base])
            labels.append(label(lam))
            continue
        h = tuple(diagonal_hooks(lam))
        eps = (-1) ** ((n - len(h)) // 2)
        root = sqrt_int(eps * prod(h))
        plus = (root + eps) / 2
        minus = (-root + eps) / 2
        for sign in "+-":
            row = []
            for (mu, s), v in zip(cls, base):
                if mu == h:
                    first = plus if sign == "+" else minus
                    second = minus if sign == "+" else plus
                    row.append(first if s == "+" else second)
                else:
                    row.append(Cyclotomic.rational(v) / 2)
            rows.append(row)
            labels.append(label(lam) + sign)
    pm = {}
    idx = {c: j for j, c in enumerate(cls)}
    for p in _primes_upto(n):
        m = []
        for mu, s in cls:
            t = _power_type(mu, p)
            if not s:
                m.append(idx[(t, "")] if (t, "") in idx else idx[(t, "+")])
            elif t != mu:
                m.append(idx[(t, "")])
            else:
                j = prod(_jacobi(p, x) for x in mu)
                m.append(idx[(mu, s if j == 1 else ("-" if s == "+" else "+"))])
        pm[p] = m
    return CharacterTable(f"A{n}", order, classes, rows, labels, pm)
