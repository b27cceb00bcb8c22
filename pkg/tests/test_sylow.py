from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from sylreg.sylow import (
    AUDITS, FAMILIES, LIE, UNKNOWN, GroupFamilySpec, audit_inequality, e_and_d, factorial_p_part,
    group_order, is_prime, is_prime_power, mu_degrees, p_part, sylow_order, sylow_shortcut,
)
from sylreg.symmchar import an_table, sn_table

from conftest import load_fixture

PRIMES = [2, 3, 5, 7, 11, 13]
QS = [q for q in range(2, 10) if is_prime_power(q)]


def test_shortcut_grid():
    checked = 0
    for fam in LIE:
        for n in range(1, 13):
            for q in QS:
                try:
                    g = GroupFamilySpec(fam, n, q)
                except ValueError:
                    continue
                for p in PRIMES:
                    sc = sylow_shortcut(g, p)
                    if sc is None:
                        continue
                    assert sc == sylow_order(g, p), (str(g), p)
                    checked += 1
    assert checked > 4000


@pytest.mark.parametrize("fam,n,q,p,val", [
    ("psp", 2, 5, 2, 64), ("su", 5, 2, 3, 243), ("pgu", 6, 2, 3, 2187), ("go_plus", 4, 2, 3, 243),
    ("psp", 2, 7, 2, 256), ("omega_odd", 3, 7, 2, 4096),
])
def test_spot_values(fam, n, q, p, val):
    g = GroupFamilySpec(fam, n, q)
    assert sylow_order(g, p) == val
    sc = sylow_shortcut(g, p)
    assert sc is None or sc == val


@pytest.mark.parametrize("k", range(1, 8))
def test_symmetric_two_power(k):
    assert sylow_order(GroupFamilySpec("sym", 2**k), 2) == 2 ** (2**k - 1)


@settings(max_examples=60)
@given(st.integers(1, 60), st.sampled_from(PRIMES))
def test_legendre(n, p):
    assert factorial_p_part(n, p) == p_part(factorial(n), p)


def test_e_and_d():
    assert e_and_d(2, 3) == (2, 1)
    assert e_and_d(2, 5) == (4, 4)
    assert e_and_d(3, 7) == (6, 3)
    with pytest.raises(ValueError):
        e_and_d(9, 3)


def test_orders_small():
    assert group_order(GroupFamilySpec("psl", 2, 7)) == 168
    assert group_order(GroupFamilySpec("psu", 3, 3)) == 6048
    assert group_order(GroupFamilySpec("psp", 3, 2)) == 1451520
    assert group_order(GroupFamilySpec("pomega_minus", 4, 2)) == 197406720
    assert group_order(GroupFamilySpec("alt", 5)) == 60


def test_family_validation():
    with pytest.raises(ValueError):
        GroupFamilySpec("gl", 3, 6)
    with pytest.raises(ValueError):
        GroupFamilySpec("sym", 3, 2)
    with pytest.raises(ValueError):
        GroupFamilySpec("bogus", 3, 2)
    assert GroupFamilySpec("Oplus", 4, 3).family == "go_plus"
    assert set(FAMILIES) >= {"sym", "alt", "gl", "gu", "sp"}


def test_mu_examples():
    assert mu_degrees(GroupFamilySpec("sl", 6, 2)).as_tuple() == (62, 217, 588)
    assert mu_degrees(GroupFamilySpec("sl", 3, 4)).as_tuple() == (UNKNOWN,) * 3
    assert mu_degrees(GroupFamilySpec("psl", 3, 4)).as_tuple() == (20, 35, 45)
    assert mu_degrees(GroupFamilySpec("su", 4, 2)).known() is False


@pytest.mark.parametrize("n", range(5, 13))
def test_mu_alt_sym_against_tables(n):
    for fam, t in (("sym", sn_table(n)), ("alt", an_table(n))):
        smallest = min(d for d in t.degrees() if d > 1)
        assert mu_degrees(GroupFamilySpec(fam, n)).mu1 == smallest


def _nontrivial_degrees(t):
    return sorted(set(d for d in t.degrees() if d > 1))


def test_mu_against_fixtures():
    t = load_fixture("PSL4(3)")
    assert list(mu_degrees(GroupFamilySpec("psl", 4, 3)).as_tuple()) == _nontrivial_degrees(t)[:3]
    t = load_fixture("PSU3(3)")
    m = mu_degrees(GroupFamilySpec("psu", 3, 3))
    assert m.mu1 == _nontrivial_degrees(t)[0]


@pytest.mark.parametrize("lemma", sorted(AUDITS))
def test_audits_have_no_unexplained_points(lemma):
    rep = audit_inequality(lemma, 13, 16, 12)
    assert rep.ok, [r.to_json() for r in rep.unexplained[:3]]
    assert rep.checked


def test_audit_unknown():
    with pytest.raises(ValueError):
        audit_inequality("zzz")
