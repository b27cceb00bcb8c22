"""Sums of hook characters that vanish on all elements of even order.

Gamma_i is the character of S_n labelled by the hook [i, 1^(n-i)]. The
families, with their parity conditions:

    full     S_n, n even    Gamma_1 + ... + Gamma_n
    e        S_n, n odd     Gamma_2 + Gamma_4 + ... + Gamma_(n-1)
    o        S_n, n odd     Gamma_1 + Gamma_3 + ... + Gamma_n
    a0       A_n, n even    (Gamma_1 + ... + Gamma_(n/2)) restricted
    ea       A_n, n = 1 mod 4   (Gamma_2 + ... + Gamma_((n-1)/2)) restricted
    o_plus, o_minus    A_n, n = 1 mod 4
             (Gamma_1 + Gamma_3 + ... + Gamma_((n-3)/2)) restricted + Gamma_((n+1)/2)^(+/-)
    oa       A_n, n = 3 mod 4   (Gamma_1 + Gamma_3 + ... + Gamma_((n-1)/2)) restricted
    e_plus, e_minus    A_n, n = 3 mod 4, n > 3
             (Gamma_2 + ... + Gamma_((n-3)/2)) restricted + Gamma_((n+1)/2)^(+/-)

``verify_family`` evaluates a family on every class of even order of the
full table. ``h66_value`` computes Gamma_i on (m-cycle) x h from hooks of
S_(n-m); it is kept as an independent cross-check of the table values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ctable import CharacterTable, VirtualCharacter, classes_by_p_type, group_p_part
from .symmchar import an_table, hook, label, mn_value, sn_table

VARIANTS = ("full", "e", "o", "a0", "ea", "o_plus", "o_minus", "oa", "e_plus", "e_minus")


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def variant_group(v: str) -> str:
    return "S" if v in ("full", "e", "o") else "A"


def parity_ok(n: int, v: str) -> bool:
    if v not in VARIANTS:
        raise ValueError(f"unknown variant {v!r}")
    if v == "full":
        return n >= 2 and n % 2 == 0
    if v in ("e", "o"):
        return n >= 3 and n % 2 == 1
    if v == "a0":
        return n >= 4 and n % 2 == 0
    if v in ("ea", "o_plus", "o_minus"):
        return n >= 5 and n % 4 == 1
    if v == "oa":
        return n >= 7 and n % 4 == 3
    return n >= 7 and n % 4 == 3


def valid_pairs(nmax: int = 17):
    return [(n, v) for n in range(2, nmax + 1) for v in VARIANTS if parity_ok(n, v)]


def _pieces(n: int, v: str) -> list[tuple[int, str]]:
    """Hooks in the family as (i, split sign or '')."""
    mid = (n + 1) // 2
    if v == "full":
        return [(i, "") for i in range(1, n + 1)]
    if v == "e":
        return [(i, "") for i in range(2, n, 2)]
    if v == "o":
        return [(i, "") for i in range(1, n + 1, 2)]
    if v == "a0":
        return [(i, "") for i in range(1, n // 2 + 1)]
    if v == "ea":
        return [(i, "") for i in range(2, (n - 1) // 2 + 1, 2)]
    if v == "oa":
        return [(i, "") for i in range(1, (n - 1) // 2 + 1, 2)]
    sign = "+" if v.endswith("plus") else "-"
    if v.startswith("o"):
        return [(i, "") for i in range(1, (n - 3) // 2 + 1, 2)] + [(mid, sign)]
    return [(i, "") for i in range(2, (n - 3) // 2 + 1, 2)] + [(mid, sign)]


def family_table(n: int, v: str) -> CharacterTable:
    return sn_table(n) if variant_group(v) == "S" else an_table(n)


def gamma_family(n: int, v: str) -> VirtualCharacter:
    if not parity_ok(n, v):
        raise ValueError(f"variant {v} is not defined for n={n}")
    t = family_table(n, v)
    mult = [0] * len(t.irreducibles)
    for i, s in _pieces(n, v):
        if variant_group(v) == "S":
            lab = label(hook(n, i))
        else:
            j = max(i, n + 1 - i)  # Gamma_i and Gamma_(n+1-i) agree on A_n
            lab = label(hook(n, j)) + s
        mult[t.row_index(lab)] += 1
    return VirtualCharacter(tuple(mult))


def expected_steinberg_like(n: int, v: str) -> bool:
    if v in ("full", "a0"):
        return is_power_of_two(n)
    if v in ("e", "o", "ea", "o_plus", "o_minus"):
        return is_power_of_two(n - 1)
    return False


def _hook_value(k: int, h) -> int:
    r = sum(h)
    if not 1 <= k <= r:
        return 0
    return mn_value(hook(r, k), h)


def h66_value(n: int, m: int, i: int, h) -> int:
    """Gamma_i of S_n at g = c*h, c an m-cycle (m even) disjoint from h."""
    h = tuple(sorted(h, reverse=True))
    if m % 2 or not 0 < m < n:
        raise ValueError("need m even with 0 < m < n")
    if sum(h) != n - m:
        raise ValueError("h must be a partition of n - m")
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    if i <= m:
        return -_hook_value(i, h)
    if i > n - m:
        return _hook_value(i - m, h)
    return _hook_value(i - m, h) - _hook_value(i, h)


@dataclass
class VerificationReport:
    n: int
    variant: str
    group: str
    degree: int
    sylow_order: int
    vanishing: bool
    steinberg_like: bool
    expected_steinberg_like: bool
    nonzero_classes: list[str]

    @property
    def level(self) -> int | None:
        if not self.vanishing or self.degree % self.sylow_order:
            return None
        return self.degree // self.sylow_order

    @property
    def ok(self) -> bool:
        return self.vanishing and self.steinberg_like == self.expected_steinberg_like

    def to_json(self):
        return {
            "n": self.n,
            "variant": self.variant,
            "group": self.group,
            "degree": str(self.degree),
            "sylow_order": str(self.sylow_order),
            "level": self.level,
            "vanishing": self.vanishing,
            "steinberg_like": self.steinberg_like,
            "expected_steinberg_like": self.expected_steinberg_like,
            "nonzero_classes": self.nonzero_classes,
            "ok": self.ok,
        }


def verify_family(n: int, v: str, p: int = 2) -> VerificationReport:
    t = family_table(n, v)
    vec = gamma_family(n, v)
    sing, _ = classes_by_p_type(t, p)
    vals = vec.values(t)
    bad = [t.classes[j].label for j in sorted(sing) if not vals[j].is_zero()]
    deg = vec.degree(t)
    s = group_p_part(t.order, p)
    return VerificationReport(
        n, v, t.name, deg, s, not bad, not bad and deg == s, expected_steinberg_like(n, v), bad
    )
