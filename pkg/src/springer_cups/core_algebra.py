"""Exact arithmetic: Laurent polynomials in q, formal sums, rational matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class LaurentPoly:
    """Laurent polynomial in one variable q with integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        if coeffs:
            for e, v in coeffs.items():
                if not isinstance(e, int) or not isinstance(v, int):
                    raise TypeError("exponents and coefficients must be integers")
                if v:
                    c[e] = c.get(e, 0) + v
                    if c[e] == 0:
                        del c[e]
        self._c = c
        self._hash = None

    @classmethod
    def const(cls, v: int) -> "LaurentPoly":
        return cls({0: v})

    @classmethod
    def q(cls, power: int = 1) -> "LaurentPoly":
        return cls({power: 1})

    @staticmethod
    def _coerce(other: Any) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = dict(self._c)
        for e, v in o._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def degree_range(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        return min(self._c), max(self._c)

    def specialize(self, v: Scalar) -> Fraction:
        return laurent_specialize(self, v)

    def to_json(self) -> dict[str, str]:
        return {str(e): str(self._c[e]) for e in sorted(self._c)}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "LaurentPoly":
        return cls({int(e): int(v) for e, v in data.items()})

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            if e == 0:
                mono = str(v)
            else:
                var = "q" if e == 1 else f"q^{e}"
                mono = var if v == 1 else ("-" + var if v == -1 else f"{v}*{var}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


def laurent_specialize(p: LaurentPoly, v: Scalar) -> Fraction:
    """Evaluate p at q = v exactly."""
    v = Fraction(v)
    if v == 0:
        raise ValueError("cannot specialize a Laurent polynomial at 0")
    return sum((Fraction(c) * v**e for e, c in p.coeffs.items()), Fraction(0))


QUANTUM_TWO = LaurentPoly({1: 1, -1: 1})  # q + q^{-1}


def default_sort_key(key: Any) -> Any:
    sk = getattr(key, "sort_key", None)
    return sk() if callable(sk) else key


class FormalSum:
    """Finite linear combination of hashable basis keys.

    Coefficients are integers, Fractions or LaurentPoly values. Zero terms
    are never stored. Iteration follows the canonical order of the keys.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Any, Any] | Iterable[tuple[Any, Any]] | None = None):
        t: dict[Any, Any] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                s = t.get(k, 0) + c
                if s == 0:
                    t.pop(k, None)
                else:
                    t[k] = s
        self._t = t

    @classmethod
    def basis(cls, key: Any, coeff: Any = 1) -> "FormalSum":
        return cls({key: coeff})

    def items(self) -> list[tuple[Any, Any]]:
        return sorted(self._t.items(), key=lambda kv: default_sort_key(kv[0]))

    def keys(self) -> list[Any]:
        return [k for k, _ in self.items()]

    def coeff(self, key: Any) -> Any:
        return self._t.get(key, 0)

    def __iter__(self) -> Iterator[tuple[Any, Any]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __contains__(self, key: Any) -> bool:
        return key in self._t

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = FormalSum(self._t)
        for k, c in other._t.items():
            s = out._t.get(k, 0) + c
            if s == 0:
                out._t.pop(k, None)
            else:
                out._t[k] = s
        return out

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -c for k, c in self._t.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Any) -> "FormalSum":
        return FormalSum({k: c * v for k, v in self._t.items()})

    def __mul__(self, c: Any) -> "FormalSum":
        return self.scale(c)

    __rmul__ = __mul__

    def map_keys(self, f: Callable[[Any], Any]) -> "FormalSum":
        return FormalSum((f(k), c) for k, c in self._t.items())

    def map_coeffs(self, f: Callable[[Any], Any]) -> "FormalSum":
        return FormalSum((k, f(c)) for k, c in self._t.items())

    def linear_map(self, f: Callable[[Any], "FormalSum"]) -> "FormalSum":
        """Extend f (key -> FormalSum) linearly."""
        acc: dict[Any, Any] = {}
        for k, c in self._t.items():
            for k2, c2 in f(k)._t.items():
                s = acc.get(k2, 0) + c * c2
                if s == 0:
                    acc.pop(k2, None)
                else:
                    acc[k2] = s
        out = FormalSum()
        out._t = acc
        return out

    def filter(self, pred: Callable[[Any], bool]) -> "FormalSum":
        return FormalSum((k, c) for k, c in self._t.items() if pred(k))

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        if not self._t:
            return "0"
        return " + ".join(f"({c})*{k!r}" for k, c in self.items())


def sum_formal(parts: Iterable[FormalSum]) -> FormalSum:
    acc = FormalSum()
    for p in parts:
        acc = acc + p
    return acc


class ExactMatrix:
    """Dense matrix with exact entries (int, Fraction or LaurentPoly)."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Sequence[Sequence[Any]], ncols: int | None = None):
        self.rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @classmethod
    def zeros(cls, n: int, k: int) -> "ExactMatrix":
        return cls([[0] * k for _ in range(n)], k)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_vectors(cls, vectors: Sequence[FormalSum], basis: Sequence[Any]) -> "ExactMatrix":
        """One row per vector, columns indexed by basis."""
        index = {b: i for i, b in enumerate(basis)}
        rows = []
        for v in vectors:
            row = [0] * len(basis)
            for k, c in v.items():
                if k not in index:
                    raise KeyError(f"{k!r} is not in the column basis")
                row[index[k]] = c
            rows.append(row)
        return cls(rows, len(basis))

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(j, x) for j, x in enumerate(r) if x != 0]
            row = []
            for c in cols:
                s = 0
                for j, x in nz:
                    y = c[j]
                    if y != 0:
                        s = s + x * y
                row.append(s)
            out.append(row)
        return ExactMatrix(out, other.ncols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c: Any) -> "ExactMatrix":
        return ExactMatrix([[c * x for x in r] for r in self.rows], self.ncols)

    def power(self, n: int) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        out = ExactMatrix.identity(self.nrows)
        for _ in range(n):
            out = out @ self
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)], self.nrows) if self.rows else ExactMatrix([], 0)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2)
        )

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.nrows)

    def rank(self) -> int:
        return matrix_rank(self)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"ExactMatrix({self.rows!r})"


def matrix_rank(M: ExactMatrix | Sequence[Sequence[Scalar]]) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    rows = M.rows if isinstance(M, ExactMatrix) else [list(r) for r in M]
    work = []
    for r in rows:
        if any(isinstance(x, LaurentPoly) for x in r):
            raise TypeError("rank is only defined here for rational entries")
        work.append([Fraction(x) for x in r])
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        p = work[rank]
        for i in range(rank + 1, len(work)):
            f = work[i][col]
            if f:
                f = f / p[col]
                work[i] = [a - f * b for a, b in zip(work[i], p)]
        rank += 1
    return rank


def solve_in_span(vectors: Sequence[FormalSum], target: FormalSum) -> list[Fraction] | None:
    """Coefficients c with sum c_i vectors_i == target, or None if target is outside the span.

    The vectors are assumed linearly independent.
    """
    keys: dict[Any, int] = {}
    for v in list(vectors) + [target]:
        for k, _ in v.items():
            keys.setdefault(k, len(keys))
    n = len(vectors)
    # augmented system: one equation per key
    eqs = [[Fraction(0)] * (n + 1) for _ in keys]
    for j, v in enumerate(vectors):
        for k, c in v.items():
            eqs[keys[k]][j] = Fraction(c)
    for k, c in target.items():
        eqs[keys[k]][n] = Fraction(c)
    row = 0
    pivots = []
    for col in range(n):
        piv = next((i for i in range(row, len(eqs)) if eqs[i][col] != 0), None)
        if piv is None:
            continue
        eqs[row], eqs[piv] = eqs[piv], eqs[row]
        p = eqs[row]
        inv = 1 / p[col]
        eqs[row] = p = [x * inv for x in p]
        for i in range(len(eqs)):
            if i != row and eqs[i][col] != 0:
                f = eqs[i][col]
                eqs[i] = [a - f * b for a, b in zip(eqs[i], p)]
        pivots.append(col)
        row += 1
    if any(r[n] != 0 for r in eqs[row:]):
        return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = eqs[i][n]
    return sol
