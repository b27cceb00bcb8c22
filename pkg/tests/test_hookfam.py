import pytest

from sylreg.hookfam import (
    VARIANTS, expected_steinberg_like, gamma_family, h66_value, parity_ok, valid_pairs, verify_family,
)
from sylreg.symmchar import hook, mn_value, partitions_of, sn_table


@pytest.mark.parametrize("n,v", valid_pairs(17))
def test_verify_family(n, v):
    r = verify_family(n, v)
    assert r.vanishing, r.nonzero_classes
    assert r.steinberg_like == expected_steinberg_like(n, v)
    assert r.ok


def test_valid_pair_count():
    pairs = valid_pairs(17)
    assert all(parity_ok(n, v) for n, v in pairs)
    assert {v for _, v in pairs} == set(VARIANTS)


def test_named_examples():
    assert verify_family(8, "full").steinberg_like
    r = verify_family(9, "e")
    assert r.degree == 2**7 == r.sylow_order and r.steinberg_like
    r = verify_family(10, "full")
    assert r.degree == 2**9 and r.level == 2 and not r.steinberg_like
    assert verify_family(16, "a0").steinberg_like
    assert verify_family(17, "ea").steinberg_like
    assert verify_family(17, "o_plus").steinberg_like and verify_family(17, "o_minus").steinberg_like
    r = verify_family(11, "oa")
    assert r.vanishing and r.degree == 2**8 and not r.steinberg_like


@pytest.mark.parametrize("n", range(3, 18))
def test_degrees(n):
    if n % 2 == 0:
        assert gamma_family(n, "full").degree(sn_table(n)) == 2 ** (n - 1)
    else:
        t = sn_table(n)
        assert gamma_family(n, "e").degree(t) == gamma_family(n, "o").degree(t) == 2 ** (n - 2)


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
def test_e_and_o_agree_on_point_stabilizer(n):
    t = sn_table(n)
    ve = gamma_family(n, "e").values(t)
    vo = gamma_family(n, "o").values(t)
    for j, c in enumerate(t.classes):
        if c.label.endswith(",1]") or c.label == "[1]":
            assert ve[j] == vo[j]


def test_plus_minus_swap_symmetry():
    for n, (a, b) in [(9, ("o_plus", "o_minus")), (13, ("o_plus", "o_minus")),
                      (11, ("e_plus", "e_minus")), (15, ("e_plus", "e_minus"))]:
        ra, rb = verify_family(n, a), verify_family(n, b)
        assert ra.degree == rb.degree and ra.vanishing == rb.vanishing
        assert ra.steinberg_like == rb.steinberg_like


@pytest.mark.parametrize("n,v", [(6, "e"), (7, "full"), (7, "a0"), (7, "ea"), (9, "oa"), (5, "nope")])
def test_parity_rejected(n, v):
    with pytest.raises(ValueError):
        gamma_family(n, v)


@pytest.mark.parametrize("n", range(3, 15))
def test_h66_matches_mn(n):
    for m in range(2, n, 2):
        for h in partitions_of(n - m):
            g = tuple(sorted((m,) + h, reverse=True))
            for i in range(1, n + 1):
                assert h66_value(n, m, i, h) == mn_value(hook(n, i), g), (n, m, i, h)


def test_h66_example():
    assert h66_value(6, 2, 4, (3, 1)) == mn_value((4, 1, 1), (3, 2, 1))


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_h66_sum_vanishes(n):
    for m in range(2, n, 2):
        for h in partitions_of(n - m):
            assert sum(h66_value(n, m, i, h) for i in range(1, n + 1)) == 0


def test_h66_errors():
    with pytest.raises(ValueError):
        h66_value(6, 3, 1, (2, 1))
    with pytest.raises(ValueError):
        h66_value(6, 2, 1, (3,))
    with pytest.raises(ValueError):
        h66_value(6, 2, 7, (3, 1))


def test_report_json():
    d = verify_family(12, "full").to_json()
    assert d["level"] == 2 and d["ok"] and d["degree"] == "2048"
