
import pytest
from hypothesis import given, settings, strategies as st

from springer_cups.core_algebra import FormalSum
from springer_cups.diagrams import CupDiagram, DiagramError, diagram_from_obj, enumerate_at_most, enumerate_ckl, valid_mk
from springer_cups.homology import gamma, line
from springer_cups.springer_action import (
    C,
    D,
    act_class,
    act_cup_skein,
    act_cup_table,
    act_line,
    act_via_gamma,
    component_act,
    component_act_via_gamma,
    component_group_nontrivial,
    component_matrix,
    expand_word,
    generator_matrix,
    isotypic_bases,
    parse_word,
    verify_coxeter,
)

B = CupDiagram.build


def test_line_action():
    l1 = FormalSum.basis(line(2, 1))
    assert act_line(l1, D(1)) == FormalSum.basis(line(2, 2))
    assert act_line(l1, D(0)) == FormalSum.basis(line(2, 2), -1)
    l12 = FormalSum.basis(line(2, 1, 2))
    assert act_line(l12, D(0)) == l12


def test_table_entries():
    a = B(3, cups=[(2, 3)], rays=[(1, True)])
    assert act_cup_table(a, D(2)) == FormalSum.basis(a, -1)
    b = B(2, cups=[(1, 2, True)])
    assert act_cup_table(b, D(1)) == FormalSum.basis(b)
    c = B(3, cups=[(1, 2)], rays=[(3, True)])
    assert act_cup_table(c, D(2)) == FormalSum.basis(c) + FormalSum.basis(B(3, cups=[(2, 3)], rays=[(1, True)]))


def test_skein_unmarked_cup_example():
    a = B(2, cups=[(1, 2, True)])
    u = B(4, cups=[(1, 2), (3, 4)])
    assert act_cup_skein(u, D(1)) == FormalSum.basis(u, -1)
    assert act_cup_skein(a, D(0)) == act_cup_table(a, D(0))


@pytest.mark.parametrize("m", range(2, 8))
def test_three_engines_agree(m):
    for a in enumerate_ckl(m):
        for i in range(m):
            t = act_cup_table(a, D(i))
            assert act_cup_skein(a, D(i)) == t
            assert act_via_gamma(a, D(i)) == t
            assert all(b.ncups == a.ncups for b, _ in t.items())


def test_parse_word():
    assert parse_word("d0, D1 c_2") == [D(0), D(1), C(2)]
    assert parse_word("") == []
    assert expand_word([C(0), C(1)]) == [D(0), D(1), D(2)]
    with pytest.raises(DiagramError):
        parse_word("x3")


def test_generator_range():
    with pytest.raises(DiagramError):
        D(4).check(4)
    with pytest.raises(DiagramError):
        C(3).check(4)


def test_empty_word_and_involution():
    for a in enumerate_ckl(5):
        x = FormalSum.basis(a)
        assert act_class(x, []) == x
        assert act_class(x, [D(1), D(1)]) == x


def test_braid_word_on_m4():
    for a in enumerate_at_most(4, 3):
        x = FormalSum.basis(a)
        assert act_class(x, [D(1), D(2)] * 3) == x


@pytest.mark.parametrize("m,k", [(4, 4), (4, 3), (5, 5), (5, 3)])
def test_coxeter_relations_d(m, k):
    rep = verify_coxeter(m, k, "D")
    assert rep.ok, [c.describe() for c in rep.checks if not c.ok]


def test_coxeter_relations_c_order_four():
    rep = verify_coxeter(5, 3, "C")
    assert rep.ok
    assert any("(c0 c1)^4" in c.describe() for c in rep.checks)


def test_s0_involution_h2_44():
    M = generator_matrix(4, 4, D(0), 2)
    assert (M @ M).is_identity()


def test_c_matrices_are_products_of_d_matrices():
    for m, k in [(4, 3), (5, 5)]:
        assert generator_matrix(m, k, C(0)) == generator_matrix(m, k, D(0)) @ generator_matrix(m, k, D(1))
        for i in range(1, m - 1):
            assert generator_matrix(m, k, C(i)) == generator_matrix(m, k, D(i + 1))


def test_component_golden(golden):
    for case in golden("component_example.json")["cases"]:
        a = diagram_from_obj(case["input"])
        assert component_act(a) == diagram_from_obj(case["output"])


def test_component_ray_at_one_fixed():
    a = B(3, cups=[(2, 3)], rays=[(1, True)])
    assert component_act(a) == a


@pytest.mark.parametrize("m,k", [(m, k) for m, k in valid_mk(7) if component_group_nontrivial(m, k)])
def test_component_involution_and_gamma_route(m, k):
    for a in enumerate_at_most(m, k):
        b = component_act(a)
        assert component_act(b) == a and b.in_ckl()
        if m <= 6:
            assert component_act_via_gamma(a) == FormalSum.basis(b)


def test_component_commutes_with_type_c():
    A = component_matrix(5, 3)
    for i in range(4):
        G = generator_matrix(5, 3, C(i))
        assert A @ G == G @ A


def test_component_does_not_commute_with_single_d_generators():
    # the toggle lives on the symplectic side; s0^D alone is not in the image of W(C)
    A = component_matrix(4, 3)
    G = generator_matrix(4, 3, D(0))
    assert A @ G != G @ A


def test_isotypic_dims():
    ib = isotypic_bases(5, 5, 2)
    assert (len(ib.plus), len(ib.minus)) == (6, 4)
    ib = isotypic_bases(4, 3, 1)
    assert (len(ib.plus), len(ib.minus)) == (3, 1)
    assert isotypic_bases(5, 5, 0).minus == []


def test_isotypic_trivial_group_flagged():
    assert not component_group_nontrivial(4, 4)
    with pytest.raises(DiagramError):
        isotypic_bases(4, 4, 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 6).flatmap(
    lambda m: st.tuples(st.sampled_from(enumerate_ckl(m)),
                        st.lists(st.sampled_from([D(i) for i in range(m)] + [C(i) for i in range(m - 1)]),
                                 max_size=5))))
def test_gamma_intertwines_words(case):
    a, word = case
    lhs = act_class(FormalSum.basis(a), word).linear_map(gamma)
    rhs = gamma(a)
    for g in word:
        rhs = act_line(rhs, g)
    assert lhs == rhs
