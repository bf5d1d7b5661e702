import pytest
from hypothesis import given, settings, strategies as st

from springer_cups.core_algebra import FormalSum, matrix_rank
from springer_cups.diagrams import CupDiagram, enumerate_at_most, enumerate_basis, valid_mk
from springer_cups.homology import gamma, line, line_basis
from springer_cups.specht import (
    Bitabloid,
    act_bitabloid,
    act_vector,
    act_vector_word,
    d_word_in_c,
    explicit_iso_C_even_top,
    explicit_iso_C_formula,
    explicit_iso_C_minus,
    explicit_iso_C_plus,
    explicit_iso_D,
    homology_to_specht,
    in_plus_span,
    in_plus_span_specht,
    polytabloid,
    specht_coordinates,
    standard_bitableaux,
    tableau_of,
    v_plus_minus_bases,
)
from springer_cups.springer_action import C, D, act_class, act_line, act_line_type_c, component_act

B = CupDiagram.build


def test_standard_counts():
    assert len(standard_bitableaux(2, 1)) == 3
    assert len(standard_bitableaux(4, 0)) == 1
    assert len(standard_bitableaux(2, 2)) == 6


def test_action_rules():
    T = tableau_of(2, [])
    assert act_bitabloid(T, 0) == (1, T)
    sign, U = act_bitabloid(tableau_of(2, [1]), 0)
    assert sign == -1 and U == Bitabloid.make(2, [2], [-1])
    T = tableau_of(3, [1, 2])
    assert act_bitabloid(T, 1) == (1, T)


def test_polytabloid_expansion():
    T = tableau_of(3, [])
    assert polytabloid(T) == FormalSum.basis(T)
    T = tableau_of(2, [2])
    assert polytabloid(T) == FormalSum({T: 1, Bitabloid.make(2, [1], [-2]): 1})
    assert len(polytabloid(tableau_of(3, [2, 3]))) == 4


@pytest.mark.parametrize("lam,mu", [(2, 1), (2, 2), (1, 3), (3, 2)])
def test_polytabloids_span_invariant_subspace(lam, mu):
    basis = [polytabloid(T) for T in standard_bitableaux(lam, mu)]
    for v in basis:
        for i in range(lam + mu):
            assert specht_coordinates(act_vector(v, i), lam, mu) is not None


def test_lines_to_specht_small():
    x = FormalSum.basis(line(2, 1))
    assert homology_to_specht(x) == polytabloid(tableau_of(2, [1]))
    assert homology_to_specht(act_line_type_c(x, 0)) == homology_to_specht(x).scale(-1)
    assert homology_to_specht(FormalSum.basis(line(3))) == FormalSum.basis(tableau_of(3, []))


@pytest.mark.parametrize("m", range(1, 6))
def test_lines_to_specht_equivariant_bijection(m):
    for mu in range(m + 1):
        imgs = [homology_to_specht(FormalSum.basis(L)) for L in line_basis(m, mu)]
        coords = [specht_coordinates(v, m - mu, mu) for v in imgs]
        T = standard_bitableaux(m - mu, mu)
        assert matrix_rank([[c[t] for t in T] for c in coords]) == len(T) == len(imgs)
        for L, v in zip(line_basis(m, mu), imgs):
            for i in range(m):
                assert homology_to_specht(act_line_type_c(FormalSum.basis(L), i)) == act_vector(v, i)


def test_type_d_iso_examples():
    assert explicit_iso_D(B(3, rays=[1, 2, 3])) == FormalSum.basis(tableau_of(3, []))
    a = B(3, cups=[(1, 2)], rays=[(3, True)])
    assert explicit_iso_D(a) == homology_to_specht(gamma(a))


@pytest.mark.parametrize("m,k", valid_mk(5))
def test_type_d_iso_matches_gamma_route(m, k):
    for a in enumerate_at_most(m, k):
        assert explicit_iso_D(a) == homology_to_specht(gamma(a))
        if m >= 2:
            for i in range(m):
                lhs = act_class(FormalSum.basis(a), [D(i)]).linear_map(explicit_iso_D)
                assert lhs == act_vector_word(explicit_iso_D(a), d_word_in_c(i))


@pytest.mark.parametrize("m", [2, 4])
def test_equal_blocks_top_degree_in_plus_part(m):
    for a in enumerate_basis(m, m):
        assert in_plus_span(gamma(a))
        assert in_plus_span_specht(explicit_iso_D(a), m)


def _complement(L):
    return line(L.m, *(v for v in range(1, L.m + 1) if v not in L.undotted))


def test_plus_minus_line_bases():
    pm = v_plus_minus_bases(2)
    assert pm.plus == [FormalSum({line(2, 1): 1, line(2, 2): 1})]
    assert pm.minus == [FormalSum({line(2, 1): 1, line(2, 2): -1})]
    pm = v_plus_minus_bases(4)
    assert len(pm.plus) == len(pm.minus) == 3
    for x in pm.plus:
        for i in range(4):
            assert in_plus_span(act_line(x, D(i)))
    for x in pm.minus:
        for i in range(4):
            y = act_line(x, D(i))
            assert all(y.coeff(_complement(L)) == -c for L, c in y.items())


@pytest.mark.parametrize("m,k", [(3, 3), (4, 3), (5, 3), (5, 5)])
def test_closed_formulas_match_maps(m, k):
    for a in enumerate_at_most(m, k):
        b = component_act(a)
        x = FormalSum.basis(a)
        if b == a:
            assert explicit_iso_C_formula(a, "r1") == explicit_iso_C_plus(x)
        else:
            y = FormalSum.basis(b)
            assert explicit_iso_C_formula(a, "plus") == explicit_iso_C_plus(x + y)
            assert explicit_iso_C_formula(a, "minus") == explicit_iso_C_minus(x - y)


def test_even_top_formula_m4():
    for a in enumerate_basis(4, 4):
        v = explicit_iso_C_even_top(a)
        assert specht_coordinates(v, 1, 2) is not None
        for i in range(3):
            w = act_class(FormalSum.basis(a), [C(i)])
            assert w.linear_map(explicit_iso_C_even_top) == act_vector(v, i)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(lambda m: st.tuples(
    st.just(m), st.sets(st.integers(1, m)), st.lists(st.integers(0, m - 1), max_size=6))))
def test_specht_action_is_a_right_action_of_signed_permutations(case):
    m, U, word = case
    v = polytabloid(tableau_of(m, sorted(U)))
    w = act_vector_word(v, word)
    assert specht_coordinates(w, m - len(U), len(U)) is not None
