"""Verification suites shared by the CLI and the acceptance tests."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .core_algebra import ExactMatrix, FormalSum, matrix_rank
from .diagrams import enumerate_at_most, enumerate_ckl, valid_mk
from .homology import gamma, gamma_matrix


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class RunReport:
    command: str
    params: dict
    payload: Any = None
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def to_json(self, timing: bool = False) -> dict:
        out = {"command": self.command, "params": self.params, "ok": self.ok,
               "checks": [c.to_json() for c in self.checks]}
        if self.payload is not None:
            out["results"] = self.payload
        if timing:
            out["wall_time_s"] = f"{self.wall_time:.3f}"
        return out


def timed(report: RunReport, f: Callable[[RunReport], None]) -> RunReport:
    t = time.perf_counter()
    f(report)
    report.wall_time = time.perf_counter() - t
    return report


# --- suites -----------------------------------------------------------------------------


def suite_enumeration(rep: RunReport, ms: list[int]) -> None:
    for m in ms:
        n = len(enumerate_ckl(m))
        rep.add(f"|C_KL({m})| = 2^{m - 1}", n == 2 ** (m - 1), str(n))


def suite_dims(rep: RunReport, ms: list[int]) -> None:
    from .cohomology import reconcile

    for m, k in valid_mk(max(ms), min(ms)):
        r = reconcile(m, k)
        rep.add(f"dims ({m},{k})", r.ok,
                f"quotient={r.quotient_total} formula={r.formula} cells={r.cells} basis={r.basis} rank={r.gamma_rank}")


def suite_skein(rep: RunReport, ms: list[int]) -> None:
    from .springer_action import D, act_cup_skein, act_cup_table

    for m in ms:
        if m < 2:
            continue
        bad = 0
        for a in enumerate_ckl(m):
            for i in range(m):
                bad += act_cup_table(a, D(i)) != act_cup_skein(a, D(i))
        rep.add(f"skein = table, m={m}", bad == 0, f"{bad} mismatches")


def suite_coxeter(rep: RunReport, ms: list[int]) -> None:
    from .springer_action import verify_coxeter

    for m in ms:
        for fam, lo in (("D", 4), ("C", 3)):
            if m < lo:
                continue
            for mm, k in valid_mk(m, m):
                r = verify_coxeter(mm, k, fam)
                failed = [c.describe() for c in r.checks if not c.ok]
                rep.add(f"Coxeter {fam} m={m} k={k}", r.ok, "; ".join(failed))


def suite_equivariance(rep: RunReport, ms: list[int]) -> None:
    from .springer_action import C, D, act_cup_table, act_line

    for m in ms:
        if m < 2:
            continue
        gens = [D(i) for i in range(m)] + [C(i) for i in range(m - 1)]
        bad = 0
        for a in enumerate_ckl(m):
            for g in gens:
                lhs = act_cup_table(a, g).linear_map(gamma)
                rhs = act_line(gamma(a), g)
                bad += lhs != rhs
        rep.add(f"gamma equivariance m={m}", bad == 0, f"{bad} mismatches")
        for mm, k in valid_mk(m, m):
            gm = gamma_matrix(mm, k)
            rep.add(f"gamma rank ({mm},{k})", gm.rank == len(gm.rows), f"{gm.rank}/{len(gm.rows)}")


def suite_component(rep: RunReport, ms: list[int]) -> None:
    from math import comb

    from .springer_action import (
        C, D, component_act, component_group_nontrivial, component_matrix, generator_matrix,
        isotypic_bases,
    )

    for m in ms:
        for mm, k in valid_mk(m, m):
            if not component_group_nontrivial(mm, k):
                continue
            basis = enumerate_at_most(mm, k)
            rep.add(f"component involution ({mm},{k})", all(component_act(component_act(a)) == a for a in basis))
            if mm >= 2:
                # the toggle belongs to the symplectic side, so it is tested against the
                # type C generators; the orthogonal component group acts by the identity
                A = component_matrix(mm, k)
                ok = all(A @ G == G @ A for G in (generator_matrix(mm, k, C(i)) for i in range(mm - 1)))
                rep.add(f"component commutes with type C generators ({mm},{k})", ok)
                s0 = generator_matrix(mm, k, D(0)) @ generator_matrix(mm, k, D(1))
                rep.add(f"component commutes with s0^D s1^D ({mm},{k})", A @ s0 == s0 @ A)
            for l in range(k // 2 + 1):
                ib = isotypic_bases(mm, k, l)
                want = (comb(mm - 1, l), comb(mm - 1, l - 1) if l else 0)
                rep.add(f"isotypic dims ({mm},{k}) l={l}", (len(ib.plus), len(ib.minus)) == want,
                        f"{len(ib.plus)},{len(ib.minus)} vs {want}")


def suite_hecke(rep: RunReport, ms: list[int]) -> None:
    from .hecke import check_braid, check_c_d_compatibility, check_filtration, check_quadratic, graded_q1_compare

    for m in ms:
        if m < 2:
            continue
        for name, r in (("quadratic", check_quadratic(m)), ("braid", check_braid(m)),
                        ("filtration", check_filtration(m)), ("C/D", check_c_d_compatibility(m))):
            rep.add(f"Hecke {name} m={m}", r.ok, "; ".join(c.name for c in r.checks if not c.ok))
        for mm, k in valid_mk(m, m):
            r = graded_q1_compare(mm, k)
            rep.add(f"Hecke q=1 ({mm},{k})", r.ok)


def suite_specht(rep: RunReport, ms: list[int]) -> None:
    from .homology import line_basis
    from .specht import (
        act_vector, act_vector_word, d_word_in_c, explicit_iso_C_minus, explicit_iso_C_plus, explicit_iso_D,
        homology_to_specht, in_plus_span_specht, specht_coordinates, standard_bitableaux,
    )
    from .springer_action import C, D, act_class, act_line_type_c, component_group_nontrivial, isotypic_bases

    def rank_of(vectors, lam, mu):
        coords = [specht_coordinates(v, lam, mu) for v in vectors]
        if any(c is None for c in coords):
            return -1
        T = standard_bitableaux(lam, mu)
        return matrix_rank(ExactMatrix([[c[t] for t in T] for c in coords], len(T))) if coords else 0

    for m in ms:
        ok = True
        for mu in range(m + 1):
            lines = line_basis(m, mu)
            ok &= rank_of([homology_to_specht(FormalSum.basis(L)) for L in lines], m - mu, mu) == len(lines)
            for L in lines:
                x = FormalSum.basis(L)
                for i in range(m):
                    ok &= homology_to_specht(act_line_type_c(x, i)) == act_vector(homology_to_specht(x), i)
        rep.add(f"lines -> Specht bijective and equivariant m={m}", ok)
        for mm, k in valid_mk(m, m):
            ok = True
            for l in range(k // 2 + 1):
                basis = [a for a in enumerate_at_most(mm, k) if a.ncups == l]
                imgs = [explicit_iso_D(a) for a in basis]
                ok &= rank_of(imgs, mm - l, l) == len(basis)
                if mm >= 2:
                    for a, im in zip(basis, imgs):
                        for i in range(mm):
                            lhs = act_class(FormalSum.basis(a), [D(i)]).linear_map(explicit_iso_D)
                            ok &= lhs == act_vector_word(im, d_word_in_c(i))
                if mm == k and mm % 2 == 0 and l == mm // 2:
                    ok &= all(in_plus_span_specht(v, mm) for v in imgs)
            rep.add(f"type D identification ({mm},{k})", ok)
            if mm < 3 or not component_group_nontrivial(mm, k):
                continue
            ok = True
            for l in range(k // 2 + 1):
                ib = isotypic_bases(mm, k, l)
                for vecs, f, lam, mu in ((ib.plus, explicit_iso_C_plus, mm - 1 - l, l),
                                         (ib.minus, explicit_iso_C_minus, l - 1, mm - l)):
                    if not vecs:
                        continue
                    imgs = [f(x) for x in vecs]
                    ok &= rank_of(imgs, lam, mu) == len(vecs) == len(standard_bitableaux(lam, mu))
                    for x, im in zip(vecs, imgs):
                        for i in range(mm - 1):
                            ok &= f(act_class(x, [C(i)])) == act_vector(im, i)
            rep.add(f"type C identifications ({mm},{k})", ok)


def suite_shoji(rep: RunReport, ms: list[int]) -> None:
    from .shoji import one_row_closed_form, shoji_stable, shoji_step, springer_consistency

    ok = True
    for lam in range(11):
        for mu in range(11):
            sp = shoji_stable(lam, mu)
            ok &= sp.trimmed() == one_row_closed_form(lam, mu) and shoji_step(sp) == sp
    rep.add("Shoji one-row closed forms, parts <= 10", ok)
    for m in ms:
        for mm, k in valid_mk(m, m):
            if mm < 2:
                continue
            cases = springer_consistency(mm, k)
            rep.add(f"Shoji Jordan types ({mm},{k})", all(c.ok for c in cases))


SUITES: dict[str, Callable[[RunReport, list[int]], None]] = {
    "enumeration": suite_enumeration,
    "dims": suite_dims,
    "skein": suite_skein,
    "coxeter": suite_coxeter,
    "equivariance": suite_equivariance,
    "component": suite_component,
    "hecke": suite_hecke,
    "specht": suite_specht,
    "shoji": suite_shoji,
}
