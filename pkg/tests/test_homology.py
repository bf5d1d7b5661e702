import pytest
from hypothesis import given, settings, strategies as st

from springer_cups.core_algebra import FormalSum
from springer_cups.diagrams import (
    CupDiagram,
    EnrichedCupDiagram,
    diagram_from_obj,
    enumerate_at_most,
    enumerate_ckl,
    glue,
    valid_mk,
)
from springer_cups.homology import (
    MIXED,
    gamma,
    gamma_brute,
    gamma_inverse,
    gamma_matrix,
    grade,
    line,
    line_sum_enriched,
    line_sum_to_json,
)

B = CupDiagram.build


def test_cup_images_m2():
    assert gamma(B(2, cups=[(1, 2)])) == FormalSum({line(2, 1): 1, line(2, 2): -1})
    assert gamma(B(2, cups=[(1, 2, True)])) == FormalSum({line(2, 1): -1, line(2, 2): -1})
    dotted = EnrichedCupDiagram(B(2, cups=[(1, 2, True)]), frozenset({1}))
    assert line_sum_enriched(dotted) == FormalSum.basis(line(2))


def test_golden_m3(golden):
    data = golden("gamma_m3.json")
    seen = set()
    for case in data["cases"]:
        a = diagram_from_obj(case["diagram"])
        want = FormalSum({line(3, *t["undotted"]): int(t["coefficient"]) for t in case["image"]})
        assert gamma(a) == want
        assert line_sum_to_json(gamma(a)) == [
            {"coefficient": t["coefficient"], "m": 3, "undotted": t["undotted"]} for t in case["image"]]
        seen.add(a)
    assert seen == set(enumerate_ckl(3))


@pytest.mark.parametrize("m", range(1, 8))
def test_gamma_matches_factor_expansion(m):
    for a in enumerate_ckl(m):
        assert gamma(a) == gamma_brute(a)


@pytest.mark.parametrize("m,k,r", [(3, 3, 4), (4, 3, 5), (1, 1, 1), (5, 3, 6), (7, 5, 29)])
def test_gamma_rank(m, k, r):
    gm = gamma_matrix(m, k)
    assert gm.rank == r == len(gm.rows)


def test_grade():
    assert grade(FormalSum.basis(B(3, rays=[1, 2, 3]))) == 0
    assert grade(FormalSum.basis(B(3, cups=[(1, 2)], rays=[(3, True)]))) == 2
    mixed = FormalSum.basis(B(4, cups=[(1, 2)], rays=[(3, True), 4])) + FormalSum.basis(B(4, cups=[(1, 2), (3, 4)]))
    assert grade(mixed) == MIXED
    assert grade(FormalSum()) is None


@pytest.mark.parametrize("m,k", valid_mk(6))
def test_gamma_inverse(m, k):
    for a in enumerate_at_most(m, k):
        assert gamma_inverse(gamma(a), m) == FormalSum.basis(a)


def test_gamma_inverse_rejects_outside_image():
    with pytest.raises(ValueError):
        gamma_inverse(FormalSum.basis(line(2, 1)), 2)


@settings(max_examples=60)
@given(st.integers(2, 7).flatmap(lambda m: st.tuples(st.just(m), st.sampled_from(enumerate_ckl(m)))))
def test_dots_on_glued_cups_kill_their_factor(ma):
    # dotting a cup replaces its binomial factor by 1, so the glued image has the
    # same grading as the base diagram minus the dotted cups
    m, a = ma
    M = glue(a, m // 2)
    L = line_sum_enriched(M)
    assert L
    assert all(len(k.undotted) == a.ncups for k, _ in L.items())
