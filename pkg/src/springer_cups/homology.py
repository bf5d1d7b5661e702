"""Homology models: cup-diagram classes and line-diagram sums, with the
embedding gamma of the former into the latter."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Iterable

from .core_algebra import ExactMatrix, FormalSum, matrix_rank
from .diagrams import CupDiagram, DiagramError, EnrichedCupDiagram, check_mk, enumerate_at_most, enumerate_ckl

MIXED = "mixed"


@dataclass(frozen=True)
class LineDiagram:
    """m vertical lines; those in `undotted` carry no dot."""

    m: int
    undotted: frozenset = frozenset()

    def __post_init__(self):
        u = frozenset(self.undotted)
        if not all(1 <= v <= self.m for v in u):
            raise DiagramError(f"undotted set {sorted(u)} out of range 1..{self.m}")
        object.__setattr__(self, "undotted", u)

    @property
    def degree(self) -> int:
        return 2 * len(self.undotted)

    def sort_key(self) -> tuple:
        return (self.m, len(self.undotted), tuple(sorted(self.undotted)))

    def __repr__(self):
        return f"l{sorted(self.undotted)}"


def line(m: int, *undotted: int) -> LineDiagram:
    return LineDiagram(m, frozenset(undotted))


def line_basis(m: int, size: int) -> list[LineDiagram]:
    return [LineDiagram(m, frozenset(c)) for c in combinations(range(1, m + 1), size)]


# (left, right, marked, dotted)
CupData = tuple[int, int, bool, bool]


def lambda_exponent(cups: Iterable[CupData], U: frozenset | set) -> int:
    """Sign exponent for the term l_U.

    Each undotted marked cup counts once (exactly one of its endpoints lies in
    U), and each undotted unmarked cup counts when its right endpoint is in U.
    """
    n = 0
    for left, right, marked, dotted in cups:
        if dotted:
            continue
        if marked:
            n += 1
        elif right in U:
            n += 1
    return n


def _cup_data(M: EnrichedCupDiagram) -> list[CupData]:
    return [(c.left, c.right, c.marked, M.is_dotted(c)) for c in M.base.cups]


def line_sum_enriched(M: EnrichedCupDiagram) -> FormalSum:
    """Sum over one chosen endpoint per undotted cup, signed by lambda_exponent."""
    data = _cup_data(M)
    free = [(l, r) for l, r, _, d in data if not d]
    out = {}
    for choice in product(*free):
        U = frozenset(choice)
        out[LineDiagram(M.m, U)] = (-1) ** lambda_exponent(data, U)
    return FormalSum(out)


def gamma(a: CupDiagram) -> FormalSum:
    return line_sum_enriched(EnrichedCupDiagram(a, frozenset()))


def gamma_brute(a: CupDiagram) -> FormalSum:
    """Independent expansion: multiply out one binomial factor per cup.

    An unmarked cup (i,j) contributes l_i - l_j and a marked one -l_i - l_j;
    the factors are multiplied as disjoint unions of undotted sets.
    """
    terms: dict[frozenset, int] = {frozenset(): 1}
    for c in a.cups:
        f = ((c.left, -1), (c.right, -1)) if c.marked else ((c.left, 1), (c.right, -1))
        new: dict[frozenset, int] = {}
        for U, coef in terms.items():
            for v, s in f:
                W = U | {v}
                new[W] = new.get(W, 0) + coef * s
        terms = new
    return FormalSum({LineDiagram(a.m, U): c for U, c in terms.items()})


def gamma_class(x: FormalSum) -> FormalSum:
    return x.linear_map(gamma)


def grade(x: FormalSum) -> int | str | None:
    """2 * cup count if homogeneous, MIXED otherwise, None for zero."""
    degrees = {2 * (k.ncups if isinstance(k, CupDiagram) else len(k.undotted)) for k, _ in x.items()}
    if not degrees:
        return None
    return degrees.pop() if len(degrees) == 1 else MIXED


@dataclass
class GammaMatrix:
    rows: list[CupDiagram]
    cols: list[LineDiagram]
    matrix: ExactMatrix
    rank: int


def gamma_matrix(m: int, k: int) -> GammaMatrix:
    check_mk(m, k)
    rows = enumerate_at_most(m, k)
    cols = [L for s in range(k // 2 + 1) for L in line_basis(m, s)]
    M = ExactMatrix.from_vectors([gamma(a) for a in rows], cols)
    return GammaMatrix(rows, cols, M, matrix_rank(M))


class _DegreeSolver:
    """Inverts gamma on the span of the l-cup diagrams of C_KL(m)."""

    def __init__(self, m: int, l: int):
        self.basis = [a for a in enumerate_ckl(m) if a.ncups == l]
        images = [gamma(a) for a in self.basis]
        cols = line_basis(m, l)
        n = len(self.basis)
        # choose n pivot columns making the square block invertible
        rows = [[Fraction(v.coeff(c)) for c in cols] for v in images]
        pivots: list[int] = []
        work = [r[:] for r in rows]
        r = 0
        for j in range(len(cols)):
            piv = next((i for i in range(r, n) if work[i][j] != 0), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            for i in range(n):
                if i != r and work[i][j] != 0:
                    f = work[i][j] / work[r][j]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
            pivots.append(j)
            r += 1
            if r == n:
                break
        if r != n:
            raise ArithmeticError("gamma is not injective in this degree")
        self.pivot_cols = [cols[j] for j in pivots]
        # inverse of the n x n block B[i][p] = coeff of pivot column p in image i
        B = [[rows[i][j] for j in pivots] for i in range(n)]
        self.inv = _invert(B)

    def solve(self, target: FormalSum) -> FormalSum:
        t = [Fraction(target.coeff(c)) for c in self.pivot_cols]
        # x . B = t  =>  x = t . B^{-1}
        n = len(self.basis)
        x = [sum((t[p] * self.inv[p][i] for p in range(n)), Fraction(0)) for i in range(n)]
        out = FormalSum({self.basis[i]: _as_int(x[i]) for i in range(n)})
        return out


def _as_int(v: Fraction) -> Any:
    return int(v) if v.denominator == 1 else v


def _invert(B: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(B)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(B)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _solver(m: int, l: int) -> _DegreeSolver:
    return _DegreeSolver(m, l)


def gamma_inverse(L: FormalSum, m: int) -> FormalSum:
    """The cup-diagram class whose gamma image is L; raises if L is outside the image."""
    by_deg: dict[int, dict] = {}
    for key, c in L.items():
        by_deg.setdefault(len(key.undotted), {})[key] = c
    out = FormalSum()
    for l, part in by_deg.items():
        sol = _solver(m, l).solve(FormalSum(part))
        if gamma_class(sol) != FormalSum(part):
            raise ValueError("line sum is not in the image of gamma")
        out = out + sol
    return out


def line_sum_to_json(x: FormalSum) -> list[dict]:
    return [{"coefficient": str(c), "m": k.m, "undotted": sorted(k.undotted)} for k, c in x.items()]


def homology_class_to_json(x: FormalSum) -> list[dict]:
    from .diagrams import diagram_to_obj

    return [{"coefficient": str(c), "diagram": diagram_to_obj(k)} for k, c in x.items()]
