import pytest
from hypothesis import given, strategies as st

from springer_cups.shoji import (
    ShojiError,
    StablePair,
    character_label,
    one_row_closed_form,
    shoji_init,
    shoji_stable,
    shoji_step,
    springer_consistency,
)
from springer_cups.diagrams import valid_mk


def test_init():
    sp = shoji_init(1, 2)
    assert sp.d[:2] == (2, 4) and set(sp.d[2:]) == {0} and set(sp.eps) == {1}
    assert set(shoji_init(0, 0).d) == {0}
    assert shoji_init(3, 0).d[:2] == (6, 0)


def test_step_rules():
    assert shoji_step(StablePair((2, 4), (1, 1))) == StablePair((3, 3), (1, 1))
    assert shoji_step(StablePair((0, 6), (1, 1))) == StablePair((4, 2), (-1, -1))
    fixed = StablePair((4, 2), (1, 1))
    assert shoji_step(fixed) == fixed


@pytest.mark.parametrize("lam,mu,d,eps", [
    (1, 2, (3, 3), (1, 1)),
    (0, 3, (4, 2), (-1, -1)),
    (2, 1, (4, 2), (1, 1)),
    (0, 0, (), ()),
])
def test_closed_form_cases(lam, mu, d, eps):
    sp = shoji_stable(lam, mu)
    assert sp.trimmed() == StablePair(d, eps) == one_row_closed_form(lam, mu)


def test_trailing_eps_are_one():
    sp = shoji_stable(0, 3)
    assert sp.eps[:2] == (-1, -1) and all(e == 1 for e in sp.eps[2:])


@given(st.integers(0, 30), st.integers(0, 30))
def test_stable_pairs_property(lam, mu):
    sp = shoji_stable(lam, mu)
    assert shoji_step(sp) == sp
    assert sum(sp.d) == 2 * (lam + mu)
    assert sp.trimmed() == one_row_closed_form(lam, mu)


def test_character_label():
    assert character_label(shoji_stable(0, 3)) == {4: -1, 2: -1}
    with pytest.raises(ShojiError):
        character_label(StablePair((2, 2), (1, -1)))


def test_json():
    assert shoji_stable(0, 3).to_json() == {"d": [4, 2], "eps": [-1, -1], "character": {"2": -1, "4": -1}}


@pytest.mark.parametrize("m,k", [(m, k) for m, k in valid_mk(8) if m >= 2])
def test_jordan_types(m, k):
    assert all(c.ok for c in springer_consistency(m, k))


def test_step_budget():
    with pytest.raises(ShojiError):
        shoji_stable(0, 9, max_steps=1)
