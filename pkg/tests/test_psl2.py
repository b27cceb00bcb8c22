from collections import Counter

import pytest

from sylreg.ctable import validate
from sylreg.psl2 import PSL2Spec, psl2_table
from sylreg.search import search

QS = [5, 7, 9, 11, 13, 17, 23, 25, 27, 31]


def _is_two_power(x):
    return x & (x - 1) == 0


@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("variant", ["SL2", "PSL2"])
def test_validates(q, variant):
    t = psl2_table(PSL2Spec(q, variant))
    rep = validate(t)
    assert rep.ok, rep.failures[:3]
    order = q * (q * q - 1) // (1 if variant == "SL2" else 2)
    assert t.order == order
    assert sum(d * d for d in t.degrees()) == order


@pytest.mark.parametrize("q", QS)
def test_degree_multiset(q):
    c = Counter(psl2_table(q).degrees())
    assert c[1] == 1 and c[q] == 1
    if q % 4 == 1:
        assert c[(q + 1) // 2] == 2 and c[(q - 1) // 2] == 0
    else:
        assert c[(q - 1) // 2] == 2 and c[(q + 1) // 2] == 0
    assert set(c) <= {1, q, q + 1, q - 1, (q + 1) // 2, (q - 1) // 2}


def test_psl2_7():
    t = psl2_table(7)
    assert sorted(t.degrees()) == [1, 3, 3, 6, 7, 8]
    rep = search(t, 2, "sylreg")
    assert [1, 7] in [rep.degrees_of(i) for i in range(len(rep))]


def test_psl2_5_two_reducible_degree_4():
    rep = search(psl2_table(5), 2, "sylreg")
    red = [rep.degrees_of(i) for i in range(len(rep)) if sum(rep.solutions[i].mult) > 1]
    assert red == [[1, 3], [1, 3]]


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 17, 23, 31])
def test_psl2_reducible_syl2_regular(q):
    rep = search(psl2_table(q), 2, "sylreg")
    reducible = [s for s in rep.solutions if sum(s.mult) > 1]
    assert bool(reducible) == (_is_two_power(q + 1) or q == 5)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 17, 31])
def test_sl2_reducible_syl2_regular(q):
    rep = search(psl2_table(PSL2Spec(q, "SL2")), 2, "sylreg")
    reducible = [s for s in rep.solutions if sum(s.mult) > 1]
    assert bool(reducible) == (_is_two_power(q + 1) or _is_two_power(q - 1))


@pytest.mark.parametrize("p", [7, 11, 13, 19, 23])
def test_cyclic_sylow_composition(p):
    """Reducible Steinberg-like characters of PSL2(p) at p.

    1 + tau with tau irreducible of degree p-1, one for each such tau, plus
    1 + tau1 + tau2 with both of degree (p-1)/2 when p = 3 mod 4.
    """
    t = psl2_table(p)
    rep = search(t, p, "steinberg")
    degs = [rep.degrees_of(i) for i in range(len(rep))]
    n_pm1 = t.degrees().count(p - 1)
    assert n_pm1 == ((p - 3) // 4 if p % 4 == 3 else (p - 1) // 4)
    assert degs.count([1, p - 1]) == n_pm1
    extra = 1 if p % 4 == 3 else 0
    assert degs.count([1, (p - 1) // 2, (p - 1) // 2]) == extra
    assert degs.count([p]) == 1
    assert len(degs) == 1 + n_pm1 + extra


@pytest.mark.parametrize("bad", [4, 6, 8, 15, 3, 1, 0])
def test_bad_q(bad):
    with pytest.raises(ValueError):
        PSL2Spec(bad)


def test_bad_variant():
    with pytest.raises(ValueError):
        PSL2Spec(7, "GL2")
