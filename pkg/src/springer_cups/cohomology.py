"""Betti numbers four ways: the truncated polynomial quotient, the binomial
sum, cell counting over Gamma forests, and the cup-diagram basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .diagrams import (
    FOUR_VERTEX_MOVES,
    THREE_VERTEX_MOVES,
    Cup,
    CupDiagram,
    DiagramError,
    check_mk,
    enumerate_at_most,
    enumerate_basis,
    predecessors,
)


# --- the quotient ring ------------------------------------------------------------


def _cutoff(k: int) -> int:
    return (k - 1) // 2


def surviving_monomials(m: int, k: int) -> list[frozenset]:
    """Squarefree monomials X_S not divisible by any X_I with |I| = (k-1)/2 + 1."""
    check_mk(m, k)
    cut = _cutoff(k)
    out = []
    for bits in range(2**m):
        S = frozenset(v + 1 for v in range(m) if bits >> v & 1)
        if not any(True for _ in combinations(sorted(S), cut + 1)):
            out.append(S)
    return sorted(out, key=lambda S: (len(S), sorted(S)))


def monomial_product(S: frozenset, T: frozenset, k: int) -> frozenset | None:
    """Product of two surviving monomials, None when it vanishes (X_i^2 = 0 or too many factors)."""
    if S & T:
        return None
    U = S | T
    return U if len(U) <= _cutoff(k) else None


def quotient_graded_dims(m: int, k: int) -> list[int]:
    """Dimension in cohomological degree 2i at index i."""
    check_mk(m, k)
    if m == k:
        raise DiagramError("the quotient presentation assumes m != k")
    mons = surviving_monomials(m, k)
    top = max(len(S) for S in mons)
    return [sum(1 for S in mons if len(S) == i) for i in range(top + 1)]


def dim_formula(m: int, k: int) -> int:
    check_mk(m, k)
    if m == k:
        return 2 ** (m - 1)
    return sum(comb(m, i) for i in range(_cutoff(k) + 1))


# --- Gamma forests ------------------------------------------------------------------


def outer_cups(a: CupDiagram, reading: str = "right") -> list[Cup]:
    """Cups nested in no other cup and with no marked cup to their right.

    reading='right' looks for marked cups anywhere to the right;
    reading='inside' only inside the cup, which never happens for a valid
    diagram since marked cups are not nested.
    """
    out = []
    for c in a.cups:
        if a.is_nested(c):
            continue
        if reading == "right":
            blocked = any(o.marked and o.left > c.right for o in a.cups)
        elif reading == "inside":
            blocked = any(o.marked and c.left < o.left and o.right < c.right for o in a.cups)
        else:
            raise ValueError(reading)
        if not blocked:
            out.append(c)
    return out


@dataclass
class GammaForest:
    vertices: list[Cup]
    edges: set[frozenset] = field(default_factory=set)
    roots: list[Cup] = field(default_factory=list)

    def components(self) -> list[set[Cup]]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            x, y = tuple(e)
            parent[find(x)] = find(y)
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), set()).add(v)
        return list(groups.values())

    def is_forest(self) -> bool:
        return len(self.edges) == len(self.vertices) - len(self.components())

    def one_root_per_tree(self) -> bool:
        return all(len(comp & set(self.roots)) == 1 for comp in self.components())


def gamma_forest(a: CupDiagram, reading: str = "right") -> GammaForest:
    edges = set()
    for w in predecessors(a, FOUR_VERTEX_MOVES):
        changed = w.changed_cups_in_a()
        if len(changed) == 2:
            edges.add(frozenset(changed))
    return GammaForest(list(a.cups), edges, outer_cups(a, reading))


def special_cups(a: CupDiagram) -> list[Cup]:
    """Cups of a that are the changed cup of some 3-vertex move b -> a."""
    out = set()
    for w in predecessors(a, THREE_VERTEX_MOVES):
        out.update(w.changed_cups_in_a())
    return sorted(out)


def special_cups_by_rule(a: CupDiagram, reading: str = "right") -> list[Cup]:
    """Characterization by the leftmost ray: all outer cups if it is marked,
    otherwise only the outer cups to its right."""
    r = a.leftmost_ray()
    if r is None:
        return []
    outs = outer_cups(a, reading)
    return sorted(outs if r.marked else [c for c in outs if c.left > r.at])


def cells_of(a: CupDiagram, reading: str = "right") -> int:
    roots = set(outer_cups(a, reading))
    return 2 ** len(roots - set(special_cups(a)))


def cell_count_total(m: int, k: int, reading: str = "right") -> int:
    check_mk(m, k)
    return sum(cells_of(a, reading) for a in enumerate_basis(m, k))


# --- reconciliation ------------------------------------------------------------------


@dataclass
class DimReport:
    m: int
    k: int
    quotient_total: int
    quotient_source: str
    formula: int
    cells: int
    basis: int
    gamma_rank: int
    quotient_by_degree: list[int] | None
    cups_by_degree: list[int]

    @property
    def totals_agree(self) -> bool:
        return len({self.quotient_total, self.formula, self.cells, self.basis, self.gamma_rank}) == 1

    @property
    def degrees_agree(self) -> bool:
        return self.quotient_by_degree is None or self.quotient_by_degree == self.cups_by_degree

    @property
    def ok(self) -> bool:
        return self.totals_agree and self.degrees_agree

    def to_json(self) -> dict:
        return {
            "m": self.m, "k": self.k,
            "quotient": {"total": self.quotient_total, "source": self.quotient_source,
                         "by_degree": self.quotient_by_degree},
            "formula": self.formula, "cells": self.cells, "basis": self.basis,
            "gamma_rank": self.gamma_rank, "cups_by_degree": self.cups_by_degree, "ok": self.ok,
        }


def reconcile(m: int, k: int, with_rank: bool = True) -> DimReport:
    from .homology import gamma_matrix

    check_mk(m, k)
    basis = enumerate_at_most(m, k)
    cups_by_degree = [sum(1 for a in basis if a.ncups == l) for l in range(k // 2 + 1)]
    while len(cups_by_degree) > 1 and cups_by_degree[-1] == 0:
        cups_by_degree.pop()
    if m != k:
        qd = quotient_graded_dims(m, k)
        qtot, src = sum(qd), "quotient"
    else:
        qd, qtot, src = None, 2 ** (m - 1), "equal-block total"
    rank = gamma_matrix(m, k).rank if with_rank else len(basis)
    return DimReport(m, k, qtot, src, dim_formula(m, k), cell_count_total(m, k), len(basis), rank,
                     qd, cups_by_degree)
