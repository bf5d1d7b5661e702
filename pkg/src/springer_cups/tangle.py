"""Open tangles stacked on cup diagrams.

A generator picture is a crossingless matching of m top points and m bottom
points whose strands carry marker parities.  Stacking it on a cup diagram
and tracing strands yields a new diagram plus loose pieces: closed circles
and strands with both ends at the bottom.  The skein calculus and the Hecke
module evaluate those pieces with different scalars.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .diagrams import Cup, CupDiagram, DiagramError, Ray

if os.environ.get("SPRINGER_CUPS_PURE") == "1":
    from ._tangle_py import trace as _trace

    BACKEND = "python"
else:
    try:
        from ._tangle_kernel import trace as _trace

        BACKEND = "compiled"
    except ImportError:
        from ._tangle_py import trace as _trace

        BACKEND = "python"

MAX_COMPILED_M = 32  # the kernel uses fixed int[64] point arrays


@dataclass(frozen=True)
class Tangle:
    """Points 0..m-1 on top, m..2m-1 on the bottom; partner is an involution."""

    m: int
    partner: tuple[int, ...]
    marks: tuple[int, ...]

    @classmethod
    def identity(cls, m: int) -> "Tangle":
        partner = tuple(list(range(m, 2 * m)) + list(range(m)))
        return cls(m, partner, (0,) * (2 * m))

    @classmethod
    def cup_cap(cls, m: int, i: int, marked: bool = False) -> "Tangle":
        """Cap joining top i,i+1 over a cup joining bottom i,i+1 (1-based i); other strands vertical."""
        if not 1 <= i < m:
            raise DiagramError(f"cup-cap position {i} out of range for m={m}")
        p = list(cls.identity(m).partner)
        t1, t2 = i - 1, i
        p[t1], p[t2] = t2, t1
        p[m + t1], p[m + t2] = m + t2, m + t1
        mk = [0] * (2 * m)
        if marked:
            mk[t1] = mk[t2] = mk[m + t1] = mk[m + t2] = 1
        return cls(m, tuple(p), tuple(mk))


def diagram_arrays(d: CupDiagram) -> tuple[list[int], list[int]]:
    """0-based partner array (-1 for rays) and per-vertex component marks."""
    partner = [-1] * d.m
    marks = [0] * d.m
    for c in d.cups:
        partner[c.left - 1], partner[c.right - 1] = c.right - 1, c.left - 1
        marks[c.left - 1] = marks[c.right - 1] = int(c.marked)
    for r in d.rays:
        marks[r.at - 1] = int(r.marked)
    return partner, marks


def arrays_diagram(m: int, partner: list[int], marks: list[int]) -> CupDiagram:
    cups, rays = [], []
    for v in range(m):
        p = partner[v]
        if p < 0:
            rays.append(Ray(v + 1, bool(marks[v])))
        elif v < p:
            cups.append(Cup(v + 1, p + 1, bool(marks[v])))
    return CupDiagram(m, tuple(cups), tuple(rays))


@dataclass(frozen=True)
class StackResult:
    diagram: CupDiagram
    bottom: tuple[int, ...]  # parities of bottom-to-bottom strands
    circles: tuple[int, ...]  # parities of closed circles


def stack(t: Tangle, a: CupDiagram) -> StackResult:
    if t.m != a.m:
        raise DiagramError("tangle and diagram sizes differ")
    if a.m > MAX_COMPILED_M:
        return stack_py(t, a)
    ap, am = diagram_arrays(a)
    rp, rm, bottom, circles = _trace(a.m, ap, am, list(t.partner), list(t.marks))
    return StackResult(arrays_diagram(a.m, rp, rm), tuple(bottom), tuple(circles))


def stack_py(t: Tangle, a: CupDiagram) -> StackResult:
    """Same as stack() but always on the pure-Python tracer."""
    from ._tangle_py import trace

    ap, am = diagram_arrays(a)
    rp, rm, bottom, circles = trace(a.m, ap, am, list(t.partner), list(t.marks))
    return StackResult(arrays_diagram(a.m, rp, rm), tuple(bottom), tuple(circles))
