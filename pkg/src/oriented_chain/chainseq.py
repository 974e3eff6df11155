"""Cyclic, anti-cyclic and oriented sequences over a finite chain.

A sequence ``(a_1, ..., a_t)`` is *cyclic* when it has at most one cyclic
descent (``a_i > a_{i+1}`` with ``a_{t+1} = a_1``) and *anti-cyclic* when it
has at most one cyclic ascent.  The dihedral group ``D_2t`` acts on the
positions of a length-``t`` sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class ChainSeq:
    """A finite sequence of points of the chain ``{1 < ... < n}``."""

    n: int
    values: tuple[int, ...]

    def __init__(self, n: int, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if n < 1:
            raise ValueError(f"chain size must be positive, got {n}")
        for v in values:
            if not 1 <= v <= n:
                raise ValueError(f"value {v} outside chain 1..{n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"

    def reversed(self) -> "ChainSeq":
        return ChainSeq(self.n, self.values[::-1])

    @classmethod
    def parse(cls, text: str, n: int) -> "ChainSeq":
        m = re.fullmatch(r"\s*\(\s*([0-9,\s]*)\)\s*", text)
        if m is None:
            raise ValueError(f"not a sequence: {text!r}")
        body = m.group(1).strip()
        values = [int(tok) for tok in body.split(",")] if body else []
        return cls(n, values)


def _values(s) -> Sequence[int]:
    return s.values if isinstance(s, ChainSeq) else s


def descent_count(s) -> int:
    """Number of cyclic descents; 0 for sequences of length at most 1."""
    a = _values(s)
    t = len(a)
    if t <= 1:
        return 0
    return sum(1 for i in range(t) if a[i] > a[(i + 1) % t])


def ascent_count(s) -> int:
    a = _values(s)
    t = len(a)
    if t <= 1:
        return 0
    return sum(1 for i in range(t) if a[i] < a[(i + 1) % t])


def is_cyclic(s) -> bool:
    return descent_count(s) <= 1


def is_anticyclic(s) -> bool:
    return ascent_count(s) <= 1


def is_oriented(s) -> bool:
    return is_cyclic(s) or is_anticyclic(s)


@dataclass(frozen=True)
class DihedralElement:
    """Element of ``D_2t`` acting on positions ``1..t``.

    Unreflected elements are the rotations ``g^k`` (``i -> i + k`` mod t).
    Reflected elements are written ``h g^k``: reverse the positions first,
    then rotate by ``k``.  Composition is left to right, like the maps
    themselves: ``i (s * r) = (i s) r``.
    """

    t: int
    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"degree must be positive, got {self.t}")
        if not 0 <= self.rotation < self.t:
            raise ValueError(f"rotation {self.rotation} outside 0..{self.t - 1}")

    @classmethod
    def identity(cls, t: int) -> "DihedralElement":
        return cls(t, 0, False)

    def __call__(self, i: int) -> int:
        """Image of position ``i`` (1-based)."""
        x = i - 1
        if self.reflected:
            x = self.t - 1 - x
        return (x + self.rotation) % self.t + 1

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if other.t != self.t:
            raise ValueError("degree mismatch")
        t = self.t
        # 0-based: x -> e*x + c with e = -1, c = t-1+k for h g^k; e = 1, c = k otherwise
        e1, c1 = self._affine()
        e2, c2 = other._affine()
        e = e1 * e2
        c = e2 * c1 + c2
        reflected = e == -1
        rot = (c - (t - 1)) % t if reflected else c % t
        return DihedralElement(t, rot, reflected)

    def _affine(self):
        if self.reflected:
            return -1, self.t - 1 + self.rotation
        return 1, self.rotation

    def inverse(self) -> "DihedralElement":
        if self.reflected:
            return self
        return DihedralElement(self.t, (-self.rotation) % self.t, False)

    @staticmethod
    def all(t: int, reflections: bool = True):
        """The listed elements ``1, g, ..., g^{t-1}`` then ``h, hg, ..., hg^{t-1}``."""
        for k in range(t):
            yield DihedralElement(t, k, False)
        if reflections:
            for k in range(t):
                yield DihedralElement(t, k, True)


def act(sigma: DihedralElement, s: ChainSeq) -> ChainSeq:
    """Return ``(a_{1 sigma}, ..., a_{t sigma})``."""
    if sigma.t != len(s):
        raise ValueError(f"degree {sigma.t} does not match sequence length {len(s)}")
    a = s.values
    return ChainSeq(s.n, (a[sigma(i) - 1] for i in range(1, sigma.t + 1)))


def _nondecreasing(a: Sequence[int]) -> bool:
    return all(a[i] <= a[i + 1] for i in range(len(a) - 1))


def find_sorting_symmetry(s: ChainSeq) -> Optional[DihedralElement]:
    """Some ``sigma`` in ``D_2t`` making ``act(sigma, s)`` non-decreasing.

    Rotations are tried before reflections, each in increasing rotation
    amount, so the answer is the least unreflected one whenever it exists.
    """
    t = len(s)
    if t < 1:
        raise ValueError("sequence must be non-empty")
    for sigma in DihedralElement.all(t):
        if _nondecreasing(act(sigma, s).values):
            return sigma
    return None
