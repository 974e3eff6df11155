"""Geodesic distance on the cycle graph ``C_n`` and its partial isometries."""

from __future__ import annotations

from dataclasses import dataclass

from .ptrans import PTrans, compose, reflection, rotation


@dataclass(frozen=True)
class CycleMetric:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"cycle graph needs n >= 3, got {self.n}")

    def __call__(self, x: int, y: int) -> int:
        return distance(self, x, y)


def distance(m: CycleMetric | int, x: int, y: int) -> int:
    n = m.n if isinstance(m, CycleMetric) else CycleMetric(m).n
    if not (1 <= x <= n and 1 <= y <= n):
        raise ValueError(f"points must lie in 1..{n}, got {x}, {y}")
    d = abs(x - y)
    return min(d, n - d)


def _dist(n: int, x: int, y: int) -> int:
    d = abs(x - y)
    return min(d, n - d)


def is_partial_isometry(alpha: PTrans) -> bool:
    """True iff ``alpha`` preserves cycle distance between every pair of domain points."""
    n = alpha.n
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    pairs = alpha.pairs
    for i, (x1, y1) in enumerate(pairs):
        for x2, y2 in pairs[i + 1:]:
            if _dist(n, x1, x2) != _dist(n, y1, y2):
                return False
    return True


def normalize_fix1(alpha: PTrans) -> PTrans:
    """``g^(i1-1) alpha g^(n-j1+1)`` where ``i1`` is the least domain point and ``j1 = i1 alpha``.

    The result sends 1 to 1.
    """
    dom = alpha.domain
    if not dom:
        raise ValueError("empty transformation has no least domain point")
    n = alpha.n
    i1 = dom[0]
    j1 = alpha.vec[i1 - 1]
    return compose(compose(rotation(n, i1 - 1), alpha), rotation(n, n - j1 + 1))


def reflect_normalize(alpha: PTrans) -> PTrans:
    """``alpha h g``; an involution on PT_n."""
    n = alpha.n
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    return compose(compose(alpha, reflection(n)), rotation(n, 1))
