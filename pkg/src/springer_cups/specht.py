"""One-row Specht modules of type C: bitabloids, bipolytabloids, and the
identifications with line-diagram and cup-diagram homology."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core_algebra import FormalSum
from .diagrams import CupDiagram, DiagramError
from .homology import LineDiagram, gamma, gamma_class, lambda_exponent


@dataclass(frozen=True)
class Bipartition:
    lam: int
    mu: int

    def __post_init__(self):
        if self.lam < 0 or self.mu < 0:
            raise DiagramError("parts must be non-negative")

    @property
    def m(self) -> int:
        return self.lam + self.mu


@dataclass(frozen=True)
class Bitabloid:
    """Row class of a signed one-row bitableau.

    Signs in the first tableau are absorbed by row permutations, so `first`
    is an unsigned set; `second` holds signed entries sorted by absolute value.
    """

    m: int
    first: frozenset
    second: tuple[int, ...]

    @classmethod
    def make(cls, m: int, first: Iterable[int], second: Iterable[int]) -> "Bitabloid":
        f = frozenset(abs(x) for x in first)
        s = tuple(sorted(second, key=abs))
        if sorted(f | {abs(x) for x in s}) != list(range(1, m + 1)) or len(f) + len(s) != m:
            raise DiagramError("entries must be 1..m, each exactly once")
        return cls(m, f, s)

    @property
    def shape(self) -> Bipartition:
        return Bipartition(len(self.first), len(self.second))

    def sort_key(self) -> tuple:
        return (self.m, len(self.second), tuple(abs(x) for x in self.second), tuple(x < 0 for x in self.second))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.second)

    def to_json(self) -> dict:
        return {"first": sorted(self.first), "second": list(self.second)}

    def __repr__(self):
        return f"[{sorted(self.first)}|{list(self.second)}]"


def tableau_of(m: int, second: Iterable[int]) -> Bitabloid:
    """The standard bitabloid whose second row holds `second`."""
    s = sorted(set(second))
    return Bitabloid.make(m, [v for v in range(1, m + 1) if v not in s], s)


def standard_bitableaux(lam: int, mu: int) -> list[Bitabloid]:
    m = lam + mu
    return [tableau_of(m, c) for c in combinations(range(1, m + 1), mu)]


def act_bitabloid(t: Bitabloid, i: int) -> tuple[int, Bitabloid]:
    """[T].s_i for the type C_m generator s_i; returns (sign, bitabloid)."""
    if not 0 <= i < t.m:
        raise DiagramError(f"generator s{i} out of range for m={t.m}")
    if i == 0:
        if 1 in t.first:
            return 1, t
        sec = tuple(-x if abs(x) == 1 else x for x in t.second)
        return -1, Bitabloid(t.m, t.first, sec)

    def sw(x: int) -> int:
        a = abs(x)
        b = i + 1 if a == i else (i if a == i + 1 else a)
        return b if x > 0 else -b

    return 1, Bitabloid.make(t.m, [sw(x) for x in t.first], [sw(x) for x in t.second])


def act_vector(v: FormalSum, i: int) -> FormalSum:
    def one(t: Bitabloid) -> FormalSum:
        s, u = act_bitabloid(t, i)
        return FormalSum.basis(u, s)

    return v.linear_map(one)


def act_vector_word(v: FormalSum, word: Sequence[int]) -> FormalSum:
    for i in word:
        v = act_vector(v, i)
    return v


def sign_flip_word(x: int) -> list[int]:
    """A word for the element negating the letter x: s_{x-1} ... s_1 s_0 s_1 ... s_{x-1}."""
    down = list(range(x - 1, 0, -1))
    return down + [0] + down[::-1]


def polytabloid(T: Bitabloid) -> FormalSum:
    """e_T = [T].kappa_T, computed through the module action.

    For a one-row shape the column stabilizer consists of sign changes on
    the second-row entries.  Each such element w_S (negating the entries in
    S) has permutation sign +1 and f(w_S) = |S|, so kappa_T is the sum of
    (-1)^{|S|} w_S, and [T].w_S is evaluated with act_bitabloid.
    """
    base = FormalSum.basis(T)
    out = FormalSum()
    entries = [abs(x) for x in T.second]
    for n in range(len(entries) + 1):
        for S in combinations(entries, n):
            word = [g for x in S for g in sign_flip_word(x)]
            out = out + act_vector_word(base, word).scale((-1) ** n)
    return out


def specht_basis(lam: int, mu: int) -> list[FormalSum]:
    return [polytabloid(T) for T in standard_bitableaux(lam, mu)]


def specht_coordinates(v: FormalSum, lam: int, mu: int) -> dict[Bitabloid, int] | None:
    """Coordinates of v in the polytabloid basis, or None if v lies outside the span.

    Each standard e_T contains its own all-positive bitabloid and no other
    all-positive one, which reads off the coordinates directly.
    """
    coords = {T: v.coeff(T) for T in standard_bitableaux(lam, mu)}
    recon = FormalSum()
    for T, c in coords.items():
        if c:
            recon = recon + polytabloid(T).scale(c)
    return coords if recon == v else None


def homology_to_specht(x: FormalSum) -> FormalSum:
    """Linear map l_U -> e_{T_U} on line sums."""
    return x.linear_map(lambda L: polytabloid(tableau_of(L.m, L.undotted)))


def explicit_iso_D(a: CupDiagram) -> FormalSum:
    """a -> sum over U of (-1)^Lambda e_{T_U}."""
    data = [(c.left, c.right, c.marked, False) for c in a.cups]
    out = FormalSum()
    for L, _ in gamma(a).items():
        out = out + polytabloid(tableau_of(a.m, L.undotted)).scale((-1) ** lambda_exponent(data, L.undotted))
    return out


def d_word_in_c(i: int) -> list[int]:
    """Type D_m generator s_i written in the type C_m generators."""
    return [0, 1, 0] if i == 0 else [i]


def _shift_down(U: Iterable[int]) -> list[int]:
    return [u - 1 for u in U]


def explicit_iso_C_plus(x: FormalSum) -> FormalSum:
    """Plus-isotypic class -> Specht module on m-1 letters via l_U -> e_{T_{U-1}} (1 not in U)."""
    L = gamma_class(x)
    out = FormalSum()
    for key, c in L.items():
        if 1 in key.undotted:
            raise DiagramError("class is not in the plus-isotypic component")
        out = out + polytabloid(tableau_of(key.m - 1, _shift_down(key.undotted))).scale(c)
    return out


def explicit_iso_C_minus(x: FormalSum) -> FormalSum:
    """Minus-isotypic class -> Specht module on m-1 letters via l_U -> e_{T_{(M minus U)-1}} (1 in U)."""
    L = gamma_class(x)
    out = FormalSum()
    for key, c in L.items():
        if 1 not in key.undotted:
            raise DiagramError("class is not in the minus-isotypic component")
        comp = [v for v in range(1, key.m + 1) if v not in key.undotted]
        out = out + polytabloid(tableau_of(key.m - 1, _shift_down(comp))).scale(c)
    return out


def explicit_iso_C_formula(a: CupDiagram, kind: str) -> FormalSum:
    """Closed formulas on basis elements: kind 'r1' for a with a ray at vertex 1,
    'plus' for a + a^-, 'minus' for a - a^-."""
    data = [(c.left, c.right, c.marked, False) for c in a.cups]
    out = FormalSum()
    for L, _ in gamma(a).items():
        U = L.undotted
        s = (-1) ** lambda_exponent(data, U)
        if kind == "r1":
            T = tableau_of(a.m - 1, _shift_down(U))
        elif kind == "plus":
            if 1 in U:
                continue
            T, s = tableau_of(a.m - 1, _shift_down(U)), 2 * s
        elif kind == "minus":
            if 1 not in U:
                continue
            comp = [v for v in range(1, a.m + 1) if v not in U]
            T, s = tableau_of(a.m - 1, _shift_down(comp)), 2 * s
        else:
            raise ValueError(kind)
        out = out + polytabloid(T).scale(s)
    return out


def explicit_iso_C_even_top(a: CupDiagram) -> FormalSum:
    """For m = k even in top degree: a -> sum over U with 1 not in U of (-1)^Lambda e_{T_{U-1}}."""
    data = [(c.left, c.right, c.marked, False) for c in a.cups]
    out = FormalSum()
    for L, _ in gamma(a).items():
        if 1 in L.undotted:
            continue
        s = (-1) ** lambda_exponent(data, L.undotted)
        out = out + polytabloid(tableau_of(a.m - 1, _shift_down(L.undotted))).scale(s)
    return out


@dataclass
class PlusMinusBases:
    reps: list[frozenset]
    plus: list[FormalSum]
    minus: list[FormalSum]


def v_plus_minus_bases(m: int) -> PlusMinusBases:
    """Bases l_U + l_{M minus U} and l_U - l_{M minus U} of the degree-m line sums."""
    if m % 2:
        raise DiagramError("m must be even")
    reps = [frozenset(c) for c in combinations(range(1, m + 1), m // 2) if 1 in c]
    M = frozenset(range(1, m + 1))
    plus = [FormalSum({LineDiagram(m, U): 1, LineDiagram(m, M - U): 1}) for U in reps]
    minus = [FormalSum({LineDiagram(m, U): 1, LineDiagram(m, M - U): -1}) for U in reps]
    return PlusMinusBases(reps, plus, minus)


def in_plus_span(x: FormalSum) -> bool:
    """True iff the coefficients of l_U and l_{M minus U} agree for every U."""
    for key, c in x.items():
        comp = LineDiagram(key.m, frozenset(range(1, key.m + 1)) - key.undotted)
        if x.coeff(comp) != c:
            return False
    return True


def in_plus_span_specht(v: FormalSum, m: int) -> bool:
    """V^+ membership for a vector of V_{((m/2),(m/2))}: coordinates of e_{T_U} and e_{T_{M minus U}} agree."""
    coords = specht_coordinates(v, m // 2, m // 2)
    if coords is None:
        return False
    M = frozenset(range(1, m + 1))
    return all(c == coords[tableau_of(m, M - frozenset(T.second))] for T, c in coords.items())
