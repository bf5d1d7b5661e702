import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from springer_cups import tangle
from springer_cups.diagrams import CupDiagram, enumerate_ckl, enumerate_valid
from springer_cups.tangle import Tangle, stack, stack_py

B = CupDiagram.build


def _pictures(m):
    out = [Tangle.identity(m)]
    for i in range(1, m):
        out += [Tangle.cup_cap(m, i), Tangle.cup_cap(m, i, marked=True)]
    return out


@pytest.mark.parametrize("m", range(1, 8))
def test_backends_agree_exhaustively(m):
    for a in enumerate_valid(m, all_markings=True):
        for t in _pictures(m):
            assert stack(t, a) == stack_py(t, a)


def test_identity_stack():
    for a in enumerate_ckl(5):
        r = stack(Tangle.identity(5), a)
        assert r.diagram == a and r.bottom == () and r.circles == ()


def test_circle_and_bottom_strand():
    r = stack(Tangle.cup_cap(2, 1), B(2, cups=[(1, 2)]))
    assert r.circles == (0,) and r.bottom == ()
    r = stack(Tangle.cup_cap(2, 1, marked=True), B(2, rays=[1, 2]))
    assert r.bottom == (1,) and r.diagram == B(2, cups=[(1, 2, True)])


def test_large_m_uses_python_route():
    a = B(40, rays=list(range(1, 41)))
    r = stack(Tangle.cup_cap(40, 5), a)
    assert r.bottom == (0,)


def test_pure_env_selects_python():
    env = dict(os.environ, SPRINGER_CUPS_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import springer_cups.tangle as t; print(t.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert tangle.BACKEND in ("compiled", "python")


@settings(max_examples=100)
@given(st.integers(2, 12).flatmap(lambda m: st.tuples(
    st.sampled_from(enumerate_ckl(m)), st.integers(1, m - 1), st.booleans())))
def test_backends_agree_random(case):
    a, i, marked = case
    t = Tangle.cup_cap(a.m, i, marked)
    assert stack(t, a) == stack_py(t, a)
