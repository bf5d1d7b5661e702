"""Right actions of the Weyl groups of types D_m and C_{m-1} on cup-diagram
homology, the component-group action, and Coxeter-relation checks."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core_algebra import ExactMatrix, FormalSum
from .diagrams import Cup, CupDiagram, DiagramError, Ray, check_mk, enumerate_at_most
from .homology import LineDiagram, gamma, gamma_inverse
from .tangle import Tangle, stack


@dataclass(frozen=True, order=True)
class Generator:
    family: str  # "D" or "C"
    index: int

    def __post_init__(self):
        if self.family not in ("D", "C"):
            raise DiagramError(f"unknown generator family {self.family!r}")
        if self.index < 0:
            raise DiagramError("generator index must be non-negative")

    def check(self, m: int) -> None:
        top = m - 1 if self.family == "D" else m - 2
        if self.index > top or m < 2:
            raise DiagramError(f"generator {self} out of range for m={m}")

    def d_word(self) -> tuple["Generator", ...]:
        """Expansion into type D generators along the embedding of C_{m-1} into D_m."""
        if self.family == "D":
            return (self,)
        if self.index == 0:
            return (D(0), D(1))
        return (D(self.index + 1),)

    def __str__(self):
        return f"{self.family.lower()}{self.index}"


def D(i: int) -> Generator:
    return Generator("D", i)


def C(i: int) -> Generator:
    return Generator("C", i)


_TOKEN = re.compile(r"^([dDcC])_?(\d+)$")


def parse_word(text: str) -> list[Generator]:
    """Parse a word like 'd0 d1 c2' (commas also accepted); the empty string is the identity."""
    out = []
    for tok in re.split(r"[\s,]+", text.strip()):
        if not tok or tok in ("e", "id"):
            continue
        mt = _TOKEN.match(tok)
        if not mt:
            raise DiagramError(f"cannot parse generator {tok!r}")
        out.append(Generator(mt.group(1).upper(), int(mt.group(2))))
    return out


def expand_word(word: Iterable[Generator]) -> list[Generator]:
    return [h for g in word for h in g.d_word()]


# --- line diagrams ------------------------------------------------------------------


def _swap(U: frozenset, i: int) -> frozenset:
    a, b = i in U, (i + 1) in U
    if a == b:
        return U
    return (U - {i, i + 1}) | ({i + 1} if a else {i})


def act_line_basis(L: LineDiagram, g: Generator) -> FormalSum:
    g.check(L.m)
    U = L.undotted
    if g.family == "C":
        if g.index == 0:
            return FormalSum.basis(L, -1 if 1 in U else 1)
        return FormalSum.basis(LineDiagram(L.m, _swap(U, g.index)))
    if g.index == 0:
        chi = len(U & {1, 2})
        return FormalSum.basis(LineDiagram(L.m, _swap(U, 1)), (-1) ** chi)
    return FormalSum.basis(LineDiagram(L.m, _swap(U, g.index)))


def act_line(x: FormalSum, g: Generator) -> FormalSum:
    """Type D action on line sums; C generators go through their D expansion."""
    for h in g.d_word():
        x = x.linear_map(lambda L, h=h: act_line_basis(L, h))
    return x


def act_line_type_c(x: FormalSum, i: int) -> FormalSum:
    """The type C_m action on line sums on m lines: s_0 negates terms with 1 undotted."""
    def one(L: LineDiagram) -> FormalSum:
        if not 0 <= i < L.m:
            raise DiagramError(f"type C generator s{i} out of range for m={L.m}")
        if i == 0:
            return FormalSum.basis(L, -1 if 1 in L.undotted else 1)
        return FormalSum.basis(LineDiagram(L.m, _swap(L.undotted, i)))

    return x.linear_map(one)


# --- the tables ------------------------------------------------------------------------


def _table_si(a: CupDiagram, i: int) -> FormalSum:
    x, y = a.component_at(i), a.component_at(i + 1)
    one = FormalSum.basis(a)
    if isinstance(x, Ray) and isinstance(y, Ray):
        return one
    if x is y:
        return FormalSum.basis(a, 1 if x.marked else -1)
    new_cup = Cup(i, i + 1, False)
    if isinstance(y, Ray):  # i is the right end of (j, i)
        b = a.replace([x, y], [Ray(x.left, x.marked ^ y.marked), new_cup])
    elif isinstance(x, Ray):  # i+1 is the left end of (i+1, j)
        b = a.replace([x, y], [new_cup, Ray(y.right, x.marked ^ y.marked)])
    elif x.right == i and y.left == i + 1:
        b = a.replace([x, y], [Cup(x.left, y.right, x.marked ^ y.marked), new_cup])
    elif x.left == i and y.left == i + 1:  # (i+1, j2) nested in (i, j)
        b = a.replace([x, y], [new_cup, Cup(y.right, x.right, x.marked ^ y.marked)])
    elif x.right == i and y.right == i + 1:  # (j2, i) nested in (j, i+1)
        b = a.replace([x, y], [new_cup, Cup(y.left, x.left, x.marked ^ y.marked)])
    else:
        raise DiagramError(f"no table entry for {a} at s{i}")
    return one + FormalSum.basis(b)


def _table_s0(a: CupDiagram) -> FormalSum:
    x, y = a.component_at(1), a.component_at(2)
    one = FormalSum.basis(a)
    if isinstance(x, Ray) and isinstance(y, Ray):
        return one
    if x is y:
        return FormalSum.basis(a, -1 if x.marked else 1)
    new_cup = Cup(1, 2, True)
    if isinstance(x, Ray):  # ray 1 and cup (2, j)
        b = a.replace([x, y], [new_cup, Ray(y.right, not x.marked)])
    elif x.left == 1 and y.left == 2:  # (2, j) nested in (1, j')
        b = a.replace([x, y], [new_cup, Cup(y.right, x.right, not x.marked)])
    else:
        raise DiagramError(f"no table entry for {a} at s0")
    return one + FormalSum.basis(b)


def act_cup_table(a: CupDiagram, g: Generator) -> FormalSum:
    g.check(a.m)
    x = FormalSum.basis(a)
    for h in g.d_word():
        x = x.linear_map(lambda d, h=h: _table_s0(d) if h.index == 0 else _table_si(d, h.index))
    return x


# --- the skein calculus ------------------------------------------------------------------


def _skein_pictures(m: int, h: Generator) -> list[Tangle]:
    """The two smoothings of the crossing; for s_0 the two markers sit on the smoothed arcs
    in the cup-cap term and cancel on one strand in the identity term."""
    i = h.index
    if i == 0:
        return [Tangle.cup_cap(m, 1, marked=True), Tangle.identity(m)]
    return [Tangle.cup_cap(m, i), Tangle.identity(m)]


def _skein_one(a: CupDiagram, h: Generator) -> FormalSum:
    out = FormalSum()
    for t in _skein_pictures(a.m, h):
        r = stack(t, a)
        if r.bottom:
            continue
        if any(r.circles):
            continue
        coeff = (-2) ** len(r.circles)
        if not r.diagram.in_ckl():
            raise ArithmeticError(f"skein produced an invalid diagram {r.diagram}")
        out = out + FormalSum.basis(r.diagram, coeff)
    return out


def act_cup_skein(a: CupDiagram, g: Generator) -> FormalSum:
    g.check(a.m)
    x = FormalSum.basis(a)
    for h in g.d_word():
        x = x.linear_map(lambda d, h=h: _skein_one(d, h))
    return x


def act_via_gamma(a: CupDiagram, g: Generator) -> FormalSum:
    """a.g computed by moving to line sums, acting there, and pulling back."""
    g.check(a.m)
    return gamma_inverse(act_line(gamma(a), g), a.m)


ENGINES: dict[str, Callable[[CupDiagram, Generator], FormalSum]] = {
    "table": act_cup_table,
    "skein": act_cup_skein,
    "gamma": act_via_gamma,
}


def act_class(x: FormalSum, word: Sequence[Generator], engine: str = "table") -> FormalSum:
    f = ENGINES[engine]
    for g in word:
        x = x.linear_map(lambda a, g=g: f(a, g))
    return x


# --- the component group -----------------------------------------------------------------


def component_act(a: CupDiagram) -> CupDiagram:
    """Toggle the markers on the cup at vertex 1 and on the leftmost ray together."""
    x = a.component_at(1)
    if isinstance(x, Ray):
        return a
    r = a.leftmost_ray()
    if r is None:
        raise DiagramError("no ray: the component group acts trivially here")
    return a.replace([x, r], [Cup(x.left, x.right, not x.marked), Ray(r.at, not r.marked)])


def component_act_class(x: FormalSum) -> FormalSum:
    return x.map_keys(component_act)


def _alpha_line(L: LineDiagram) -> FormalSum:
    return FormalSum.basis(L, -1 if 1 in L.undotted else 1)


def component_act_via_gamma(a: CupDiagram) -> FormalSum:
    return gamma_inverse(gamma(a).linear_map(_alpha_line), a.m)


def component_group_nontrivial(m: int, k: int) -> bool:
    return m != k or m % 2 == 1


# --- matrices and relations ----------------------------------------------------------------


def graded_basis(m: int, k: int, l: int | None = None) -> list[CupDiagram]:
    basis = enumerate_at_most(m, k)
    return basis if l is None else [a for a in basis if a.ncups == l]


def action_matrix(basis: Sequence[CupDiagram], f: Callable[[CupDiagram], FormalSum]) -> ExactMatrix:
    """Row i holds the coordinates of f(basis[i]) (row-vector convention for right actions)."""
    return ExactMatrix.from_vectors([f(a) for a in basis], basis)


def generator_matrix(m: int, k: int, g: Generator, l: int | None = None, engine: str = "table") -> ExactMatrix:
    check_mk(m, k)
    g.check(m)
    f = ENGINES[engine]
    return action_matrix(graded_basis(m, k, l), lambda a: f(a, g))


def component_matrix(m: int, k: int, l: int | None = None) -> ExactMatrix:
    return action_matrix(graded_basis(m, k, l), lambda a: FormalSum.basis(component_act(a)))


def coxeter_order(family: str, n: int, s: int, t: int) -> int:
    """Entry of the Coxeter matrix of D_n or C_n (generators 0..n-1)."""
    if s == t:
        return 1
    s, t = min(s, t), max(s, t)
    if family == "D":
        if (s, t) == (0, 1):
            return 2
        if s == 0 and t == 2:
            return 3
        if s >= 1 and t == s + 1:
            return 3
        return 2
    if (s, t) == (0, 1):
        return 4
    if s >= 1 and t == s + 1:
        return 3
    return 2


@dataclass
class RelationCheck:
    family: str
    s: int
    t: int
    order: int
    degree: int
    ok: bool

    def describe(self) -> str:
        lhs = f"({self.family.lower()}{self.s})^2" if self.s == self.t else \
            f"({self.family.lower()}{self.s} {self.family.lower()}{self.t})^{self.order}"
        return f"{lhs} = e on H_{self.degree}: {'ok' if self.ok else 'FAIL'}"


@dataclass
class CoxeterReport:
    m: int
    k: int
    family: str
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_coxeter(m: int, k: int, family: str = "D", engine: str = "table") -> CoxeterReport:
    """Check every defining relation as an exact matrix identity on every graded piece."""
    check_mk(m, k)
    if family == "D" and m < 4:
        raise DiagramError("type D relations are checked for m >= 4")
    if family == "C" and m < 3:
        raise DiagramError("type C relations are checked for m >= 3")
    n = m if family == "D" else m - 1
    rep = CoxeterReport(m, k, family)
    for l in range(k // 2 + 1):
        basis = graded_basis(m, k, l)
        if not basis:
            continue
        mats = [generator_matrix(m, k, Generator(family, i), l, engine) for i in range(n)]
        for s in range(n):
            for t in range(s, n):
                o = coxeter_order(family, n, s, t)
                P = mats[s] @ mats[s] if s == t else (mats[s] @ mats[t]).power(o)
                rep.checks.append(RelationCheck(family, s, t, 2 if s == t else o, 2 * l, P.is_identity()))
    return rep


# --- isotypic components ---------------------------------------------------------------------


@dataclass
class IsotypicBases:
    r1: list[CupDiagram]
    r2: list[CupDiagram]
    plus: list[FormalSum]
    minus: list[FormalSum]


def isotypic_bases(m: int, k: int, l: int) -> IsotypicBases:
    check_mk(m, k)
    if not component_group_nontrivial(m, k):
        raise DiagramError("the component group is trivial for m = k even")
    basis = graded_basis(m, k, l)
    r1 = [a for a in basis if isinstance(a.component_at(1), Ray)]
    r2 = []
    for a in basis:
        if a in r1:
            continue
        b = component_act(a)
        if a.sort_key() < b.sort_key():
            r2.append(a)
    plus = [FormalSum.basis(a) for a in r1] + [FormalSum({a: 1, component_act(a): 1}) for a in r2]
    minus = [FormalSum({a: 1, component_act(a): -1}) for a in r2]
    return IsotypicBases(r1, r2, plus, minus)
