import json
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sylreg.ctable import VirtualCharacter, classes_by_p_type, direct_product, group_p_part
from sylreg.hookfam import gamma_family
from sylreg.psl2 import psl2_table
from sylreg.search import SearchError, SearchQuery, classify, search
from sylreg.symmchar import an_table, sn_table

SMALL = {
    "S3": lambda: sn_table(3), "S4": lambda: sn_table(4), "S5": lambda: sn_table(5),
    "A4": lambda: an_table(4), "A5": lambda: an_table(5), "A6": lambda: an_table(6),
    "PSL2(7)": lambda: psl2_table(7), "PSL2(9)": lambda: psl2_table(9),
    "PSL2(11)": lambda: psl2_table(11),
}


def naive(t, p, mode, level):
    """Unpruned bounded enumeration of all degree-feasible vectors."""
    uses_sing = mode in ("steinberg_like", "p_vanishing")
    sing, pel = classes_by_p_type(t, p)
    cols = sorted(sing if uses_sing else pel)
    s = group_p_part(t.order, p)
    levels = [level] if mode in ("syl_regular", "steinberg_like") else range(1, level + 1)
    degs = t.degrees()
    out = set()
    for lev in levels:
        target = lev * s
        for m in product(*[range(target // d + 1) for d in degs]):
            if sum(a * d for a, d in zip(m, degs)) != target:
                continue
            vals = VirtualCharacter(m).values(t)
            if all(vals[j].is_zero() for j in cols):
                out.add(m)
    return sorted(out)


CASES = [(name, p, mode, lev)
         for name, ps in [("S3", [2, 3]), ("S4", [2, 3]), ("S5", [2, 3, 5]), ("A4", [2, 3]),
                          ("A5", [2, 3, 5]), ("A6", [3, 5]), ("PSL2(7)", [2, 3, 7]),
                          ("PSL2(9)", [3, 5]), ("PSL2(11)", [2, 3, 5, 11])]
         for p in ps
         for mode, lev in [("steinberg_like", 1), ("syl_regular", 1), ("p_vanishing", 2), ("syl_vanishing", 2)]]


@pytest.mark.parametrize("name,p,mode,level", CASES)
def test_complete_against_naive(name, p, mode, level):
    t = SMALL[name]()
    assert len(t.irreducibles) <= 8
    rep = search(t, p, mode, level)
    assert [s.mult for s in rep.solutions] == naive(t, p, mode, level)
    assert rep.exhaustive


def test_a6_p2_complete():
    t = an_table(6)
    rep = search(t, 2, "steinberg_like", 1)
    assert [s.mult for s in rep.solutions] == naive(t, 2, "steinberg_like", 1)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_sn_small_p2(n):
    t = sn_table(n)
    rep = search(t, 2, "steinberg", 1)
    got = {tuple(s.mult) for s in rep.solutions}
    if n == 4:
        nonlinear = tuple(int(d > 1) for d in t.degrees())
        assert got == {gamma_family(4, "full").mult, nonlinear}
    elif n == 6:
        assert [rep.degrees_of(i) for i in range(len(rep))] == [[16]]
    else:
        two64 = tuple(int(d == 64) for d in t.degrees())
        assert got == {gamma_family(8, "full").mult, two64}


def test_s10_gamma_level_2():
    t = sn_table(10)
    fl = classify(t, 2, gamma_family(10, "full"))
    assert fl.degree == 512 and fl.level == 2
    assert fl.is_p_vanishing and not fl.is_steinberg_like
    rep = search(t, 2, "pvanish", 2)
    assert gamma_family(10, "full").mult in [s.mult for s in rep.solutions]


def test_classify_examples():
    t = psl2_table(7)
    v = [0] * len(t.irreducibles)
    v[t.row_index("1")] = v[t.row_index("St")] = 1
    fl = classify(t, 2, v)
    assert fl.degree == 8 and fl.is_syl_regular and fl.is_steinberg_like and fl.contains_trivial == 1
    triv = [1] + [0] * (len(t.irreducibles) - 1)
    fl = classify(t, 2, triv)
    assert not fl.is_syl_vanishing and fl.level is None
    assert fl.to_json()["level"] == "undefined"


def test_a7_p7():
    rep = search(an_table(7), 7, "steinberg")
    assert [rep.degrees_of(i) for i in range(len(rep))] == [[1, 6]]


@pytest.mark.parametrize("make,p", [(lambda: sn_table(7), 2), (lambda: an_table(8), 2),
                                     (lambda: psl2_table(17), 2), (lambda: sn_table(9), 3)])
def test_determinism_across_threads(make, p):
    t = make()
    reps = [search(t, p, "pvanish", 2, threads=k).to_json(timestamp=False) for k in (1, 2, 4)]
    texts = [json.dumps(r, sort_keys=True) for r in reps]
    assert texts[0] == texts[1] == texts[2]


@pytest.mark.parametrize("make,p", [(lambda: sn_table(6), 2), (lambda: an_table(7), 3),
                                     (lambda: psl2_table(13), 2), (lambda: psl2_table(11), 11)])
def test_mode_monotonicity(make, p):
    t = make()
    st_like = {s.mult for s in search(t, p, "steinberg", 1).solutions}
    pv = {s.mult for s in search(t, p, "pvanish", 1).solutions}
    sr = {s.mult for s in search(t, p, "sylreg", 1).solutions}
    sv = {s.mult for s in search(t, p, "sylvanish", 1).solutions}
    assert st_like <= pv
    assert st_like <= sr
    assert sr == sv
    assert pv <= sv


def test_trivial_multiplicity_bounded_by_level():
    for make, p in [(lambda: sn_table(6), 2), (lambda: psl2_table(9), 3), (lambda: an_table(6), 3)]:
        t = make()
        for s in search(t, p, "sylvanish", 3).solutions:
            assert s.flags.contains_trivial <= s.flags.level


def test_product_decomposition():
    """p-vanishing characters of G1 x G2 split along Irr(G1)."""
    a, b = sn_table(3), sn_table(4)
    t = direct_product(a, b)
    kb = len(b.irreducibles)
    rep = search(t, 2, "pvanish", 2)
    assert len(rep) > 0
    for sol in rep.solutions:
        chi1 = [0] * len(a.irreducibles)
        for i in range(len(a.irreducibles)):
            sigma = sol.mult[i * kb:(i + 1) * kb]
            if not any(sigma):
                continue
            fl = classify(b, 2, sigma)
            assert fl.is_p_vanishing
            chi1[i] = fl.level
        f1 = classify(a, 2, chi1)
        assert f1.is_syl_vanishing
        assert f1.degree == sol.flags.level * group_p_part(a.order, 2)


def test_truncation():
    rep = search(sn_table(8), 2, "sylvanish", 2, max_solutions=3)
    assert len(rep) == 3 and not rep.exhaustive
    full = search(sn_table(8), 2, "sylvanish", 2)
    assert full.exhaustive and len(full) > 3
    assert {s.mult for s in rep.solutions} <= {s.mult for s in full.solutions}


def test_truncation_deterministic():
    a = search(sn_table(8), 2, "sylvanish", 2, max_solutions=5, threads=1)
    b = search(sn_table(8), 2, "sylvanish", 2, max_solutions=5, threads=3)
    assert [s.mult for s in a.solutions] == [s.mult for s in b.solutions]


def test_errors():
    with pytest.raises(SearchError):
        search(sn_table(4), 5, "steinberg")
    with pytest.raises(SearchError):
        SearchQuery(sn_table(4), 2, "nonsense")
    with pytest.raises(SearchError):
        SearchQuery(sn_table(4), 2, "steinberg", level=0)


def test_refuses_invalid_table():
    t = sn_table(4)
    from sylreg.ctable import CharacterTable
    bad = CharacterTable("bad", t.order, t.classes, [r[:] for r in t.irreducibles], t.labels)
    bad.irreducibles[1][1] = bad.irreducibles[1][1] + 1
    with pytest.raises(SearchError):
        search(bad, 2, "steinberg")


def test_report_json_shape():
    rep = search(sn_table(6), 2, "steinberg")
    obj = rep.to_json()
    assert set(obj) == {"query", "exhaustive", "solutions", "stats", "timestamp"}
    s = obj["solutions"][0]
    assert s["degree"] == "16" and s["is_steinberg_like"]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=7, max_size=7))
def test_found_iff_classified(mult):
    """A vector is reported exactly when classify says it qualifies."""
    t = sn_table(5)
    fl = classify(t, 2, mult)
    if fl.is_steinberg_like:
        assert tuple(mult) in {s.mult for s in search(t, 2, "steinberg").solutions}
