"""Shoji's algorithm for the stable pair (d, eps) attached to a bipartition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

MAX_STEPS = 10_000


class ShojiError(RuntimeError):
    pass


@dataclass(frozen=True)
class StablePair:
    d: tuple[int, ...]
    eps: tuple[int, ...]

    def trimmed(self) -> "StablePair":
        """Drop trailing zero parts (their eps is always 1)."""
        n = len(self.d)
        while n and self.d[n - 1] == 0:
            n -= 1
        return StablePair(self.d[:n], self.eps[:n])

    def to_json(self) -> dict:
        t = self.trimmed()
        return {"d": list(t.d), "eps": list(t.eps),
                "character": {str(k): v for k, v in sorted(character_label(self).items())}}


def _parts(p: int | Sequence[int]) -> list[int]:
    return [p] if isinstance(p, int) else list(p)


def shoji_init(lam: int | Sequence[int], mu: int | Sequence[int]) -> StablePair:
    """d_{2i-1} = 2 lam_i, d_{2i} = 2 mu_i, all eps = 1, padded with a trailing zero pair."""
    lam, mu = _parts(lam), _parts(mu)
    n = max(len(lam), len(mu)) + 1
    lam += [0] * (n - len(lam))
    mu += [0] * (n - len(mu))
    d = []
    for a, b in zip(lam, mu):
        d += [2 * a, 2 * b]
    return StablePair(tuple(d), (1,) * len(d))


def shoji_step(sp: StablePair) -> StablePair:
    """One left-to-right pass over adjacent pairs, each rewrite applied immediately."""
    d, eps = list(sp.d), list(sp.eps)
    for i in range(len(d) - 1):
        if d[i + 1] == d[i] + 2:
            d[i] = d[i + 1] = d[i] + 1
        elif d[i + 1] > d[i] + 2:
            d[i], d[i + 1] = d[i + 1] - 2, d[i] + 2
            eps[i], eps[i + 1] = -eps[i], -eps[i + 1]
    return StablePair(tuple(d), tuple(eps))


def shoji_stable(lam: int | Sequence[int], mu: int | Sequence[int], max_steps: int = MAX_STEPS) -> StablePair:
    sp = shoji_init(lam, mu)
    for _ in range(max_steps):
        nxt = shoji_step(sp)
        if nxt == sp:
            return sp
        sp = nxt
    raise ShojiError(f"no fixed point after {max_steps} steps for ({lam}, {mu})")


def character_label(sp: StablePair) -> dict[int, int]:
    """Map each distinct even nonzero part to its eps; equal parts must carry equal signs."""
    out: dict[int, int] = {}
    for d, e in zip(sp.d, sp.eps):
        if d == 0 or d % 2:
            continue
        if out.setdefault(d, e) != e:
            raise ShojiError(f"part {d} carries both signs")
    return out


def one_row_closed_form(lam: int, mu: int) -> StablePair:
    """Expected stable pair for one-row parts, trimmed of zeros."""
    if mu == lam + 1:
        d, eps = (2 * lam + 1, 2 * lam + 1), (1, 1)
    elif mu > lam + 1:
        d, eps = (2 * mu - 2, 2 * lam + 2), (-1, -1)
    else:
        d, eps = (2 * lam, 2 * mu), (1, 1)
    return StablePair(d, eps).trimmed()


@dataclass
class SpringerCase:
    m: int
    k: int
    label: str
    lam: int
    mu: int
    expected_d: tuple[int, int]
    expected_eps: tuple[int, int]
    ok: bool


def springer_consistency(m: int, k: int) -> list[SpringerCase]:
    """Top-degree bipartitions of the type C identification reproduce the Jordan type
    (2m-k-1, k-1), with sign (1, 1) on the plus part and (-1, -1) on the minus part."""
    cases = []
    jt = (2 * m - k - 1, k - 1)
    l = k // 2
    if m == k and m % 2 == 0:
        named = [("top", m // 2 - 1, m // 2, (1, 1))]
    else:
        named = [("plus", m - 1 - l, l, (1, 1))]
        if l >= 1:
            named.append(("minus", l - 1, m - l, (-1, -1)))
    for label, lam, mu, eps in named:
        sp = shoji_stable(lam, mu)
        got = tuple(sp.d[:2])
        got_eps = tuple(sp.eps[:2])
        rest_zero = all(x == 0 for x in sp.d[2:])
        # eps is only meaningful on even parts
        eps_ok = all(e == x for d, e, x in zip(got, got_eps, eps) if d % 2 == 0 and d)
        cases.append(SpringerCase(m, k, label, lam, mu, jt, eps, got == jt and rest_zero and eps_ok))
    return cases
