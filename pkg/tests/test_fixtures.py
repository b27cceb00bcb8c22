import pytest

from sylreg.ctable import validate
from sylreg.search import search

from conftest import load_fixture

NAMES = ["M11", "M12", "M24", "PSL4(3)", "Sp6(2)", "PSL3(3)", "PSU3(3)", "PSU4(3)", "PSp6(3)", "Omega7(3)"]


@pytest.mark.parametrize("name", NAMES)
def test_fixture_validates(name):
    t = load_fixture(name)
    assert validate(t).ok


def test_m11_p11():
    rep = search(load_fixture("M11"), 11, "steinberg")
    degs = [rep.degrees_of(i) for i in range(len(rep))]
    assert degs.count([1, 10]) == 3
    assert degs.count([11]) == 1
    assert len(degs) == 4


def test_m12_p3():
    rep = search(load_fixture("M12"), 3, "steinberg")
    assert len(rep) == 4
    assert all(rep.degrees_of(i) == [11, 16] for i in range(4))
    assert all(s.flags.is_steinberg_like for s in rep.solutions)


def test_m24_p2():
    t = load_fixture("M24")
    rep = search(t, 2, "sylreg")
    assert len(rep) == 6
    assert not any(s.flags.is_steinberg_like for s in rep.solutions)
    assert len(search(t, 2, "steinberg")) == 0


def test_psl43_level_at_least_4():
    for name in ("PSL4(3)", "PSU4(3)"):
        rep = search(load_fixture(name), 2, "sylvanish", 3)
        assert len(rep) == 0 and rep.exhaustive


def test_sp62_p3():
    assert len(search(load_fixture("Sp6(2)"), 3, "sylreg")) == 0


def test_sp43_no_reducible():
    for name in ("PSL3(3)", "PSU3(3)"):
        rep = search(load_fixture(name), 2, "sylreg")
        assert all(sum(s.mult) == 1 for s in rep.solutions)


def test_mi8_no_steinberg_like():
    for name in ("PSp6(3)", "Omega7(3)"):
        assert len(search(load_fixture(name), 2, "steinberg")) == 0
