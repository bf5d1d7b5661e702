"""The parabolic Hecke module on C_KL(m) with diagrammatic Kazhdan-Lusztig
generators of types D_m and C_{m-1}."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core_algebra import QUANTUM_TWO, ExactMatrix, FormalSum, LaurentPoly, laurent_specialize
from .diagrams import CupDiagram, DiagramError, check_mk, enumerate_ckl
from .springer_action import act_cup_table, coxeter_order, D
from .tangle import Tangle, stack

CIRCLE = -QUANTUM_TWO  # value of an unmarked circle
ONE = LaurentPoly.const(1)
Q_INV = LaurentPoly.q(-1)


def _pictures(m: int, family: str, i: int) -> list[Tangle]:
    if family == "D":
        if not 0 <= i < m:
            raise DiagramError(f"type D generator {i} out of range for m={m}")
        return [Tangle.cup_cap(m, 1, marked=True)] if i == 0 else [Tangle.cup_cap(m, i)]
    if not 0 <= i < m - 1:
        raise DiagramError(f"type C generator {i} out of range for m={m}")
    if i == 0:
        return [Tangle.cup_cap(m, 1), Tangle.cup_cap(m, 1, marked=True)]
    return [Tangle.cup_cap(m, i + 1)]


def _evaluate(t: Tangle, a: CupDiagram) -> FormalSum:
    r = stack(t, a)
    # a bottom strand is removed if marked and kills the term otherwise
    if any(p == 0 for p in r.bottom):
        return FormalSum()
    if any(r.circles):
        return FormalSum()
    coeff = ONE
    for _ in r.circles:
        coeff = coeff * CIRCLE
    if not r.diagram.in_ckl():
        raise ArithmeticError(f"Hecke action produced an invalid diagram {r.diagram}")
    return FormalSum.basis(r.diagram, coeff)


def hecke_act_basis(a: CupDiagram, family: str, i: int) -> FormalSum:
    out = FormalSum()
    for t in _pictures(a.m, family, i):
        out = out + _evaluate(t, a)
    return out


def hecke_act_D(x: FormalSum, i: int) -> FormalSum:
    return x.linear_map(lambda a: hecke_act_basis(a, "D", i))


def hecke_act_C(x: FormalSum, i: int) -> FormalSum:
    return x.linear_map(lambda a: hecke_act_basis(a, "C", i))


def hecke_act_word(x: FormalSum, word: Sequence[tuple[str, int]]) -> FormalSum:
    for fam, i in word:
        x = x.linear_map(lambda a, fam=fam, i=i: hecke_act_basis(a, fam, i))
    return x


def filtration_degree(x: FormalSum) -> int | None:
    """Minimum cup count over the terms of x, None for zero."""
    return min((a.ncups for a, _ in x.items()), default=None)


@lru_cache(maxsize=None)
def _basis(m: int) -> tuple[CupDiagram, ...]:
    return tuple(enumerate_ckl(m))


def kl_matrix(m: int, family: str, i: int) -> ExactMatrix:
    """Matrix of x -> x.C_s on C_KL(m) (row i = image of basis element i)."""
    basis = list(_basis(m))
    return ExactMatrix.from_vectors([hecke_act_basis(a, family, i) for a in basis], basis)


def standard_matrix(m: int, family: str, i: int) -> ExactMatrix:
    """Matrix of H_s = C_s + q^{-1}."""
    n = len(_basis(m))
    return kl_matrix(m, family, i) + ExactMatrix.identity(n).scale(Q_INV)


@dataclass
class HeckeCheck:
    name: str
    ok: bool


@dataclass
class HeckeReport:
    m: int
    checks: list[HeckeCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool) -> None:
        self.checks.append(HeckeCheck(name, ok))


def _ngens(m: int, family: str) -> int:
    return m if family == "D" else m - 1


def check_quadratic(m: int, families: Sequence[str] = ("D", "C")) -> HeckeReport:
    """x.C_s.C_s = -(q+q^{-1}) x.C_s on every basis element, and H_s^2 = 1 + (q^{-1}-q) H_s."""
    rep = HeckeReport(m)
    n = len(_basis(m))
    I = ExactMatrix.identity(n)
    for fam in families:
        for i in range(_ngens(m, fam)):
            Cs = kl_matrix(m, fam, i)
            rep.add(f"{fam}{i}: C_s^2 = -(q+q^-1) C_s", Cs @ Cs == Cs.scale(CIRCLE))
            Hs = Cs + I.scale(Q_INV)
            rep.add(f"{fam}{i}: H_s^2 = 1 + (q^-1 - q) H_s",
                    Hs @ Hs == I + Hs.scale(Q_INV - LaurentPoly.q(1)))
    return rep


def check_braid(m: int, families: Sequence[str] = ("D", "C")) -> HeckeReport:
    """Alternating products of H_s and H_t of length m_st agree, as operators on the module."""
    rep = HeckeReport(m)
    for fam in families:
        n = _ngens(m, fam)
        H = [standard_matrix(m, fam, i) for i in range(n)]
        Cm = [kl_matrix(m, fam, i) for i in range(n)]
        for s in range(n):
            for t in range(s + 1, n):
                o = coxeter_order(fam, n, s, t)
                left = right = ExactMatrix.identity(len(_basis(m)))
                for j in range(o):
                    left = left @ (H[s] if j % 2 == 0 else H[t])
                    right = right @ (H[t] if j % 2 == 0 else H[s])
                rep.add(f"{fam}: braid ({s},{t}) of length {o}", left == right)
                if o == 2:
                    rep.add(f"{fam}: C_{s} C_{t} = C_{t} C_{s}", Cm[s] @ Cm[t] == Cm[t] @ Cm[s])
    return rep


def check_filtration(m: int, families: Sequence[str] = ("D", "C")) -> HeckeReport:
    rep = HeckeReport(m)
    for fam in families:
        for i in range(_ngens(m, fam)):
            ok = True
            for a in _basis(m):
                y = hecke_act_basis(a, fam, i)
                d = filtration_degree(y)
                if d is not None and d < a.ncups:
                    ok = False
            rep.add(f"{fam}{i}: filtration preserved", ok)
    return rep


def check_c_d_compatibility(m: int) -> HeckeReport:
    """x.C_{s_0^C} = x.(C_{s_0^D} + C_{s_1^D}) and x.C_{s_i^C} = x.C_{s_{i+1}^D}."""
    rep = HeckeReport(m)
    for i in range(m - 1):
        ok = True
        for a in _basis(m):
            x = FormalSum.basis(a)
            lhs = hecke_act_C(x, i)
            rhs = hecke_act_D(x, 0) + hecke_act_D(x, 1) if i == 0 else hecke_act_D(x, i + 1)
            ok &= lhs == rhs
        rep.add(f"C{i} vs D", ok)
    return rep


def specialize_q1(x: FormalSum) -> FormalSum:
    def f(c):
        v = laurent_specialize(c, 1) if isinstance(c, LaurentPoly) else Fraction(c)
        return int(v) if v.denominator == 1 else v

    return x.map_coeffs(f)


def graded_q1_compare(m: int, k: int) -> HeckeReport:
    """At q = 1, a.(C_s + 1) projected to the cup count of a equals the Springer action."""
    check_mk(m, k)
    rep = HeckeReport(m)
    l_max = k // 2
    for i in range(m if m >= 2 else 0):
        ok = True
        for a in _basis(m):
            if a.ncups > l_max:
                continue
            y = specialize_q1(hecke_act_D(FormalSum.basis(a), i)) + FormalSum.basis(a)
            y = y.filter(lambda b: b.ncups == a.ncups)
            ok &= y == act_cup_table(a, D(i))
        rep.add(f"D{i}: q=1 graded comparison (k={k})", ok)
    return rep


def hecke_to_json(x: FormalSum) -> list[dict]:
    from .diagrams import diagram_to_obj

    return [{"coefficient": (c.to_json() if isinstance(c, LaurentPoly) else {"0": str(c)}),
             "diagram": diagram_to_obj(a)} for a, c in x.items()]
