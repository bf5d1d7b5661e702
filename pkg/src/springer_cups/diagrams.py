"""Cup diagrams with markers, enriched diagrams with dots, weight sequences,
enumeration, gluing and cutting, extension, and the local-move order.

Vertices are 1-based throughout.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Iterator, Sequence

DOWN = "v"  # the symbol ∨
UP = "^"  # the symbol ∧


class DiagramError(ValueError):
    """Raised for invalid diagrams or parameters."""


class DiagramParseError(DiagramError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None, pos: int | None = None):
        where = f" (line {line}, column {col}, char {pos})" if line is not None else ""
        super().__init__(msg + where)
        self.line, self.col, self.pos = line, col, pos


@dataclass(frozen=True, order=True)
class Cup:
    left: int
    right: int
    marked: bool = False


@dataclass(frozen=True, order=True)
class Ray:
    at: int
    marked: bool = False


@dataclass(frozen=True)
class CupDiagram:
    m: int
    cups: tuple[Cup, ...] = ()
    rays: tuple[Ray, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cups", tuple(sorted(self.cups)))
        object.__setattr__(self, "rays", tuple(sorted(self.rays)))

    # convenience constructors -------------------------------------------------
    @classmethod
    def build(cls, m: int, cups: Iterable = (), rays: Iterable = ()) -> "CupDiagram":
        """Build from plain tuples: cups as (l, r[, marked]), rays as v or (v, marked)."""
        cs = [Cup(*c) for c in cups]
        rs = [Ray(r) if isinstance(r, int) else Ray(*r) for r in rays]
        return cls(m, tuple(cs), tuple(rs))

    @classmethod
    def all_rays(cls, m: int) -> "CupDiagram":
        return cls(m, (), tuple(Ray(v) for v in range(1, m + 1)))

    # structure ---------------------------------------------------------------
    @property
    def ncups(self) -> int:
        return len(self.cups)

    def partner(self) -> list[int]:
        """partner[v] for v in 1..m: the other cup endpoint, or 0 for a ray (index 0 unused)."""
        p = [0] * (self.m + 1)
        for c in self.cups:
            p[c.left], p[c.right] = c.right, c.left
        return p

    def component_at(self, v: int) -> Cup | Ray | None:
        for c in self.cups:
            if v in (c.left, c.right):
                return c
        for r in self.rays:
            if r.at == v:
                return r
        return None

    def leftmost_ray(self) -> Ray | None:
        return self.rays[0] if self.rays else None

    def is_nested(self, c: Cup) -> bool:
        return any(o.left < c.left and c.right < o.right for o in self.cups)

    def parity_count(self) -> int:
        return sum(r.marked for r in self.rays) + sum(not c.marked for c in self.cups)

    def in_ckl(self) -> bool:
        return validate(self).ok and self.parity_count() % 2 == 0

    def replace(self, remove: Iterable, add: Iterable) -> "CupDiagram":
        rm = set(remove)
        cups = [c for c in self.cups if c not in rm]
        rays = [r for r in self.rays if r not in rm]
        for x in add:
            (cups if isinstance(x, Cup) else rays).append(x)
        return CupDiagram(self.m, tuple(cups), tuple(rays))

    def sequence(self) -> str:
        return diagram_to_seq(self)

    def sort_key(self) -> tuple:
        return (self.m, tuple(0 if s == DOWN else 1 for s in diagram_to_seq(self)))

    def __lt__(self, other: "CupDiagram") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        parts = [f"{'*' if c.marked else ''}({c.left},{c.right})" for c in self.cups]
        parts += [f"{'*' if r.marked else ''}|{r.at}" for r in self.rays]
        return f"CupDiagram(m={self.m}: {' '.join(parts)})"


@dataclass
class ValidityReport:
    violations: list[str] = field(default_factory=list)
    parity_even: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def in_ckl(self) -> bool:
        return self.ok and self.parity_even

    def all_messages(self) -> list[str]:
        out = list(self.violations)
        if not self.parity_even:
            out.append("parity: #marked rays + #unmarked cups is odd")
        return out


def validate(d: CupDiagram) -> ValidityReport:
    """Check every structural invariant; parity is reported separately."""
    rep = ValidityReport()
    if d.m < 0:
        rep.violations.append("coverage: negative vertex count")
        return rep
    seen: dict[int, int] = {}
    for c in d.cups:
        if not c.left < c.right:
            rep.violations.append(f"coverage: cup ({c.left},{c.right}) has left >= right")
        for v in (c.left, c.right):
            seen[v] = seen.get(v, 0) + 1
    for r in d.rays:
        seen[r.at] = seen.get(r.at, 0) + 1
    for v in range(1, d.m + 1):
        if seen.get(v, 0) != 1:
            rep.violations.append(f"coverage: vertex {v} is an endpoint {seen.get(v, 0)} times")
    extra = sorted(v for v in seen if not 1 <= v <= d.m)
    if extra:
        rep.violations.append(f"coverage: vertices {extra} out of range 1..{d.m}")
    for a, b in combinations(d.cups, 2):
        if a.left > b.left:
            a, b = b, a
        if a.left < b.left < a.right < b.right:
            rep.violations.append(f"crossing: cups ({a.left},{a.right}) and ({b.left},{b.right})")
    for r in d.rays:
        for c in d.cups:
            if c.left < r.at < c.right:
                rep.violations.append(f"crossing: ray {r.at} inside cup ({c.left},{c.right})")
    for i, r in enumerate(d.rays):
        if r.marked and i != 0:
            rep.violations.append(f"marker: marked ray {r.at} is not the leftmost ray")
    for c in d.cups:
        if not c.marked:
            continue
        if d.is_nested(c):
            rep.violations.append(f"marker: marked cup ({c.left},{c.right}) is nested")
        if any(r.at < c.left for r in d.rays):
            rep.violations.append(f"marker: marked cup ({c.left},{c.right}) has a ray to its left")
    rep.parity_even = d.parity_count() % 2 == 0
    return rep


# --- crossingless shapes and brute-force enumeration ------------------------------


def _shapes(lo: int, hi: int, rays_ok: bool) -> Iterator[tuple[list[tuple[int, int]], list[int]]]:
    """Crossingless matchings of lo..hi with rays (rays never inside a cup)."""
    if lo > hi:
        yield [], []
        return
    if rays_ok:
        for cups, rays in _shapes(lo + 1, hi, True):
            yield cups, [lo] + rays
    for j in range(lo + 1, hi + 1, 2):
        for inner_c, inner_r in _shapes(lo + 1, j - 1, False):
            for rest_c, rest_r in _shapes(j + 1, hi, rays_ok):
                yield [(lo, j)] + inner_c + rest_c, inner_r + rest_r


def enumerate_valid(m: int, all_markings: bool = False) -> list[CupDiagram]:
    """Brute-force listing of all valid diagrams (any parity) on m vertices.

    Every crossingless shape is decorated with markers and filtered by
    validate().  With all_markings=True every subset of components is tried,
    otherwise only components that could possibly carry a marker.
    """
    out = []
    for cups, rays in _shapes(1, m, True):
        comps: list[Any] = [("c", c) for c in cups] + [("r", r) for r in rays]
        if not all_markings:
            first_ray = min(rays) if rays else m + 1
            comps_m = [x for x in comps if (x[0] == "r" and x[1] == first_ray)
                       or (x[0] == "c" and x[1][1] < first_ray
                           and not any(o[0] < x[1][0] and x[1][1] < o[1] for o in cups))]
        else:
            comps_m = comps
        for n in range(len(comps_m) + 1):
            for marked in combinations(comps_m, n):
                ms = set(marked)
                d = CupDiagram(
                    m,
                    tuple(Cup(l, r, ("c", (l, r)) in ms) for l, r in cups),
                    tuple(Ray(v, ("r", v) in ms) for v in rays),
                )
                if validate(d).ok:
                    out.append(d)
    return sorted(out, key=CupDiagram.sort_key)


# --- weight sequences --------------------------------------------------------------


@dataclass(frozen=True)
class LambdaSeq:
    symbols: str

    def __post_init__(self):
        s = self.symbols.replace("∨", DOWN).replace("∧", UP)
        if any(ch not in (DOWN, UP) for ch in s):
            raise DiagramError(f"sequence {self.symbols!r} must use only 'v' and '^'")
        object.__setattr__(self, "symbols", s)

    @property
    def m(self) -> int:
        return len(self.symbols)

    @property
    def ups(self) -> int:
        return self.symbols.count(UP)

    def is_even(self) -> bool:
        return self.ups % 2 == 0

    def __str__(self):
        return self.symbols


def all_sequences(m: int, even: bool | None = None) -> list[LambdaSeq]:
    out = []
    for bits in range(2**m):
        s = "".join(UP if bits >> (m - 1 - i) & 1 else DOWN for i in range(m))
        w = LambdaSeq(s)
        if even is None or w.is_even() == even:
            out.append(w)
    return out


def seq_to_diagram(w: LambdaSeq | str) -> CupDiagram:
    if not isinstance(w, LambdaSeq):
        w = LambdaSeq(w)
    if not w.is_even():
        raise DiagramError(f"sequence {w} has an odd number of '^'")
    s = w.symbols
    m = len(s)
    cups: list[Cup] = []
    stack: list[int] = []
    leftover: list[int] = []  # unmatched ∧ positions
    for i, ch in enumerate(s, start=1):
        if ch == DOWN:
            stack.append(i)
        elif stack:
            cups.append(Cup(stack.pop(), i, False))
        else:
            leftover.append(i)
    # unmatched ∨ are to the right of every unmatched ∧
    rays = [Ray(v, False) for v in stack]
    while len(leftover) >= 2:
        l, r = leftover.pop(0), leftover.pop(0)
        cups.append(Cup(l, r, True))
    if leftover:
        rays.append(Ray(leftover[0], True))
    return CupDiagram(m, tuple(cups), tuple(rays))


def diagram_to_seq(d: CupDiagram) -> str:
    s = [DOWN] * d.m
    for c in d.cups:
        if c.marked:
            s[c.left - 1] = s[c.right - 1] = UP
        else:
            s[c.left - 1], s[c.right - 1] = DOWN, UP
    for r in d.rays:
        s[r.at - 1] = UP if r.marked else DOWN
    return "".join(s)


def dagger(w: LambdaSeq | str) -> LambdaSeq:
    if not isinstance(w, LambdaSeq):
        w = LambdaSeq(w)
    return LambdaSeq((DOWN if w.is_even() else UP) + w.symbols)


# --- bases ----------------------------------------------------------------------------


def check_mk(m: int, k: int) -> None:
    if not (isinstance(m, int) and isinstance(k, int)) or not 1 <= k <= m:
        raise DiagramError(f"need 1 <= k <= m, got m={m}, k={k}")
    if k % 2 == 0 and k != m:
        raise DiagramError(f"k must be odd or equal to m (got m={m}, k={k})")


def valid_mk(max_m: int, min_m: int = 1) -> list[tuple[int, int]]:
    return [(m, k) for m in range(min_m, max_m + 1) for k in range(1, m + 1) if k % 2 == 1 or k == m]


def enumerate_ckl(m: int) -> list[CupDiagram]:
    """All of C_KL(m) in canonical order."""
    if m < 1:
        raise DiagramError("m must be at least 1")
    return [seq_to_diagram(w) for w in all_sequences(m, even=True)]


def enumerate_basis(m: int, k: int, at_most: bool = False) -> list[CupDiagram]:
    """Diagrams of C_KL(m) with exactly (or at most) floor(k/2) cups."""
    check_mk(m, k)
    l = k // 2
    return [d for d in enumerate_ckl(m) if (d.ncups <= l if at_most else d.ncups == l)]


def enumerate_at_most(m: int, k: int) -> list[CupDiagram]:
    return enumerate_basis(m, k, at_most=True)


# --- enriched diagrams ----------------------------------------------------------------


@dataclass(frozen=True)
class EnrichedCupDiagram:
    """A cup diagram whose cups listed in `dotted` (by left endpoint) carry a dot.

    All rays are dotted.
    """

    base: CupDiagram
    dotted: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "dotted", frozenset(self.dotted))
        lefts = {c.left for c in self.base.cups}
        if not self.dotted <= lefts:
            raise DiagramError(f"dotted ids {sorted(self.dotted - lefts)} are not cup left endpoints")

    @property
    def m(self) -> int:
        return self.base.m

    def is_dotted(self, c: Cup) -> bool:
        return c.left in self.dotted

    def undotted_cups(self) -> list[Cup]:
        return [c for c in self.base.cups if c.left not in self.dotted]

    def dotted_cups(self) -> list[Cup]:
        return [c for c in self.base.cups if c.left in self.dotted]

    def degree(self) -> int:
        return 2 * len(self.undotted_cups())

    def sort_key(self) -> tuple:
        return (self.base.sort_key(), tuple(sorted(self.dotted)))


def undotted(a: CupDiagram) -> EnrichedCupDiagram:
    return EnrichedCupDiagram(a, frozenset())


def glue(a: CupDiagram, target_cups: int) -> EnrichedCupDiagram:
    """Join the two rightmost rays into a dotted cup until target_cups cups exist."""
    if target_cups < a.ncups:
        raise DiagramError(f"diagram already has {a.ncups} > {target_cups} cups")
    if len(a.rays) < 2 * (target_cups - a.ncups):
        raise DiagramError("not enough rays to reach the target cup count")
    cups = list(a.cups)
    rays = list(a.rays)
    dotted = []
    for _ in range(target_cups - a.ncups):
        r1, r2 = rays[-2], rays[-1]
        rays = rays[:-2]
        c = Cup(r1.at, r2.at, r1.marked or r2.marked)
        cups.append(c)
        dotted.append(c)
    d = CupDiagram(a.m, tuple(cups), tuple(rays))
    if d.parity_count() % 2:
        if rays:
            r = rays[0]
            d = d.replace([r], [Ray(r.at, not r.marked)])
        else:
            c = dotted[-1]
            d = d.replace([c], [Cup(c.left, c.right, not c.marked)])
            dotted[-1] = Cup(c.left, c.right, not c.marked)
    return EnrichedCupDiagram(d, frozenset(c.left for c in dotted))


def _cut_raw(M: EnrichedCupDiagram) -> CupDiagram:
    b = M.base
    dotted = M.dotted_cups()
    new_rays = [Ray(v, False) for c in dotted for v in (c.left, c.right)]
    d = b.replace(dotted, new_rays)
    if d.parity_count() % 2:
        r = d.rays[0]
        d = d.replace([r], [Ray(r.at, not r.marked)])
    return d


def is_standard_structural(M: EnrichedCupDiagram) -> bool:
    """Direct test: dotted cups are outermost with no ray and no marked cup to their right."""
    b = M.base
    if not b.in_ckl():
        return False
    for c in M.dotted_cups():
        if b.is_nested(c):
            return False
        if any(r.at > c.right for r in b.rays):
            return False
        if any(o.marked and o.left > c.right for o in b.cups):
            return False
    return True


def is_standard(M: EnrichedCupDiagram) -> bool:
    """Membership in the image of glue."""
    if not is_standard_structural(M):
        return False
    try:
        return glue(_cut_raw(M), M.base.ncups) == M
    except (DiagramError, IndexError):
        return False


def cut(M: EnrichedCupDiagram) -> CupDiagram:
    """Replace each dotted cup by two unmarked rays, then repair parity on the leftmost ray."""
    if not is_standard(M):
        raise DiagramError("cut is only defined on standard enriched diagrams")
    return _cut_raw(M)


def enumerate_standard(m: int, k: int) -> list[EnrichedCupDiagram]:
    check_mk(m, k)
    return [glue(a, k // 2) for a in enumerate_at_most(m, k)]


def enumerate_enriched(m: int, k: int) -> list[EnrichedCupDiagram]:
    """Every enrichment (any dotted subset of cups) of the diagrams with floor(k/2) cups."""
    out = []
    for b in enumerate_basis(m, k):
        lefts = [c.left for c in b.cups]
        for n in range(len(lefts) + 1):
            for sub in combinations(lefts, n):
                out.append(EnrichedCupDiagram(b, frozenset(sub)))
    return out


# --- extension --------------------------------------------------------------------------


def extend(a: CupDiagram, m: int, k: int) -> CupDiagram:
    """Close the m-k rightmost rays with unmarked cups to new vertices m+1, m+2, ...

    The rightmost ray goes to m+1, the next one to m+2, and so on.  No parity
    repair is applied.
    """
    check_mk(m, k)
    if a.m != m:
        raise DiagramError("vertex count mismatch")
    t = m - k
    if t == 0:
        return a
    if len(a.rays) < t:
        raise DiagramError("not enough rays to extend")
    chosen = a.rays[-t:]
    new_cups = [Cup(r.at, m + 1 + i, False) for i, r in enumerate(reversed(chosen))]
    return CupDiagram(m + t, a.cups + tuple(new_cups), a.rays[:-t])


# --- local moves ----------------------------------------------------------------------

# Patterns use positions 0..3 for alpha<beta<gamma<delta.  Cups ("c", i, j, marked),
# rays ("r", i, marked).  Each move maps the b-pattern to the a-pattern.
MOVES: dict[str, tuple[tuple, tuple]] = {
    "I": ((("c", 0, 1, False), ("c", 2, 3, False)), (("c", 0, 3, False), ("c", 1, 2, False))),
    "II": ((("c", 0, 3, False), ("c", 1, 2, False)), (("c", 0, 1, True), ("c", 2, 3, True))),
    "III": ((("c", 0, 1, True), ("c", 2, 3, False)), (("c", 0, 3, True), ("c", 1, 2, False))),
    "IV": ((("c", 0, 3, True), ("c", 1, 2, False)), (("c", 0, 1, False), ("c", 2, 3, True))),
    "I'": ((("c", 0, 1, False), ("r", 2, False)), (("r", 0, False), ("c", 1, 2, False))),
    "II'": ((("r", 0, False), ("c", 1, 2, False)), (("c", 0, 1, True), ("r", 2, True))),
    "III'": ((("c", 0, 1, True), ("r", 2, False)), (("r", 0, True), ("c", 1, 2, False))),
    "IV'": ((("r", 0, True), ("c", 1, 2, False)), (("c", 0, 1, False), ("r", 2, True))),
}
FOUR_VERTEX_MOVES = ("I", "II", "III", "IV")
THREE_VERTEX_MOVES = ("I'", "II'", "III'", "IV'")


@dataclass(frozen=True)
class MoveWitness:
    move: str
    vertices: tuple[int, ...]
    b: CupDiagram
    a: CupDiagram

    def changed_cups_in_a(self) -> list[Cup]:
        return [c for c in self.a.cups if c not in set(self.b.cups)]


def _instantiate(pattern: tuple, verts: Sequence[int]) -> list:
    out = []
    for p in pattern:
        if p[0] == "c":
            out.append(Cup(verts[p[1]], verts[p[2]], p[3]))
        else:
            out.append(Ray(verts[p[1]], p[2]))
    return out


def _component_verts(x: Cup | Ray) -> tuple[int, ...]:
    return (x.left, x.right) if isinstance(x, Cup) else (x.at,)


def _apply_moves(d: CupDiagram, forward: bool, moves: Iterable[str]) -> Iterator[MoveWitness]:
    comps: list[Cup | Ray] = list(d.cups) + list(d.rays)
    for name in moves:
        src, dst = MOVES[name] if forward else MOVES[name][::-1]
        nverts = 4 if name in FOUR_VERTEX_MOVES else 3
        for x, y in combinations(comps, 2):
            verts = tuple(sorted(_component_verts(x) + _component_verts(y)))
            if len(verts) != nverts:
                continue
            if set(_instantiate(src, verts)) != {x, y}:
                continue
            e = d.replace([x, y], _instantiate(dst, verts))
            # every move preserves parity, so only the marker rules need checking;
            # this keeps the relation usable on extended diagrams of odd parity
            if not validate(e).ok:
                continue
            b, a = (d, e) if forward else (e, d)
            yield MoveWitness(name, verts, b, a)


def successors(b: CupDiagram, moves: Iterable[str] = tuple(MOVES)) -> list[MoveWitness]:
    return list(_apply_moves(b, True, moves))


def predecessors(a: CupDiagram, moves: Iterable[str] = tuple(MOVES)) -> list[MoveWitness]:
    return list(_apply_moves(a, False, moves))


def arrow(b: CupDiagram, a: CupDiagram) -> MoveWitness | None:
    """The local move taking b to a, or None when b -> a does not hold."""
    if b.m != a.m or b == a:
        return None
    for w in predecessors(a):
        if w.b == b:
            return w
    return None


def arrow_closure(diagrams: Sequence[CupDiagram]) -> dict[CupDiagram, set[CupDiagram]]:
    """For each diagram x, the set of y with x -> ... -> y (reflexive)."""
    idx = set(diagrams)
    succ = {d: {w.a for w in successors(d) if w.a in idx} for d in diagrams}
    out: dict[CupDiagram, set[CupDiagram]] = {}
    for d in diagrams:
        seen = {d}
        stack = [d]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out[d] = seen
    return out


def is_antisymmetric(closure: dict[CupDiagram, set[CupDiagram]]) -> bool:
    return all(not (x != y and x in closure[y]) for x, ys in closure.items() for y in ys)


def linear_extension(diagrams: Sequence[CupDiagram]) -> list[CupDiagram]:
    """Topological order of the arrow relation, ties broken by canonical order."""
    idx = set(diagrams)
    succ = {d: {w.a for w in successors(d) if w.a in idx} for d in diagrams}
    indeg = {d: 0 for d in diagrams}
    for d in diagrams:
        for y in succ[d]:
            indeg[y] += 1
    heap = [(d.sort_key(), d) for d in diagrams if indeg[d] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, d = heapq.heappop(heap)
        out.append(d)
        for y in succ[d]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, (y.sort_key(), y))
    if len(out) != len(diagrams):
        raise DiagramError("the arrow relation has a cycle")
    return out


# --- rendering --------------------------------------------------------------------------

MARK = "■"
DOT = "○"


def render_ascii(d: CupDiagram | EnrichedCupDiagram) -> str:
    """Box-drawing picture: vertex labels on top, cups hanging down, rays to the bottom."""
    if isinstance(d, EnrichedCupDiagram):
        base, dotted = d.base, d.dotted
        rays_dotted = True
    else:
        base, dotted, rays_dotted = d, frozenset(), False
    m = base.m
    height: dict[Cup, int] = {}
    for c in sorted(base.cups, key=lambda c: c.right - c.left):
        inner = [height[o] for o in base.cups if c.left < o.left and o.right < c.right]
        height[c] = 1 + max(inner, default=0)
    H = max(height.values(), default=0)
    nrows = H + 2
    width = 4 * (m - 1) + 1 if m else 0
    grid = [[" "] * width for _ in range(nrows)]
    col = lambda v: 4 * (v - 1)
    for c, h in height.items():
        for row in range(h - 1):
            grid[row][col(c.left)] = grid[row][col(c.right)] = "│"
        row = h - 1
        grid[row][col(c.left)] = "└"
        grid[row][col(c.right)] = "┘"
        for x in range(col(c.left) + 1, col(c.right)):
            grid[row][x] = "─"
        mid = (col(c.left) + col(c.right)) // 2
        if c.marked:
            grid[row][mid] = MARK
        if c.left in dotted:
            grid[row][mid + 1 if c.marked else mid] = DOT
    for r in base.rays:
        for row in range(nrows):
            grid[row][col(r.at)] = "│"
        if r.marked:
            grid[nrows - 2][col(r.at)] = MARK
        if rays_dotted:
            grid[nrows - 1][col(r.at)] = DOT
    header = "".join(str(v).ljust(4) for v in range(1, m + 1)).rstrip()
    lines = [header] + ["".join(row).rstrip() for row in grid]
    while len(lines) > 1 and not lines[-1]:
        lines.pop()
    return "\n".join(lines)


# --- JSON -------------------------------------------------------------------------------


def diagram_to_obj(d: CupDiagram | EnrichedCupDiagram) -> dict:
    base = d.base if isinstance(d, EnrichedCupDiagram) else d
    obj: dict[str, Any] = {
        "m": base.m,
        "cups": [{"left": c.left, "right": c.right, "marked": c.marked} for c in base.cups],
        "rays": [{"at": r.at, "marked": r.marked} for r in base.rays],
    }
    if isinstance(d, EnrichedCupDiagram):
        obj["dotted"] = sorted(d.dotted)
    return obj


def emit_json(d: CupDiagram | EnrichedCupDiagram) -> str:
    return json.dumps(diagram_to_obj(d), separators=(",", ":"))


def _need(obj: dict, key: str, typ: type, where: str) -> Any:
    if key not in obj:
        raise DiagramParseError(f"{where}: missing key {key!r}")
    v = obj[key]
    if typ is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise DiagramParseError(f"{where}: {key!r} must be an integer")
    if typ is not int and not isinstance(v, typ):
        raise DiagramParseError(f"{where}: {key!r} must be {typ.__name__}")
    return v


def diagram_from_obj(obj: Any, check: bool = True) -> CupDiagram | EnrichedCupDiagram:
    if not isinstance(obj, dict):
        raise DiagramParseError("diagram must be a JSON object")
    m = _need(obj, "m", int, "diagram")
    cups = []
    for i, c in enumerate(_need(obj, "cups", list, "diagram")):
        if not isinstance(c, dict):
            raise DiagramParseError(f"cups[{i}] must be an object")
        cups.append(Cup(_need(c, "left", int, f"cups[{i}]"), _need(c, "right", int, f"cups[{i}]"),
                        bool(c.get("marked", False))))
    rays = []
    for i, r in enumerate(_need(obj, "rays", list, "diagram")):
        if not isinstance(r, dict):
            raise DiagramParseError(f"rays[{i}] must be an object")
        rays.append(Ray(_need(r, "at", int, f"rays[{i}]"), bool(r.get("marked", False))))
    d = CupDiagram(m, tuple(cups), tuple(rays))
    if check:
        rep = validate(d)
        if not rep.ok:
            raise DiagramError("invalid diagram: " + "; ".join(rep.violations))
    if "dotted" in obj:
        return EnrichedCupDiagram(d, frozenset(obj["dotted"]))
    return d


def parse_json(text: str, check: bool = True) -> CupDiagram | EnrichedCupDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramParseError(f"malformed JSON: {e.msg}", e.lineno, e.colno, e.pos) from None
    return diagram_from_obj(obj, check=check)


def parse_diagram(text: str) -> CupDiagram:
    """Accept either JSON or a weight sequence over 'v' and '^'."""
    t = text.strip()
    if t.startswith("{"):
        d = parse_json(t)
        if isinstance(d, EnrichedCupDiagram):
            d = d.base
        if not d.in_ckl():
            raise DiagramError("diagram is not in C_KL: #marked rays + #unmarked cups is odd")
        return d
    return seq_to_diagram(t)
