"""Partial transformations on the chain ``{1, ..., n}``.

Maps act on the right and compose left to right: ``x (alpha beta) =
(x alpha) beta``.  Points are 1-based throughout.

Text form::

    n=4; [1,2,1,2]        full map, i -> y_i
    n=4; {1:3, 3:2}       partial map, domain strictly increasing
    n=4; {}               the empty map
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class MonoidLabel(str, enum.Enum):
    PT = "PT"
    T = "T"
    I = "I"  # noqa: E741
    S = "S"
    OP = "OP"
    OR = "OR"
    POP = "POP"
    POR = "POR"
    POPI = "POPI"
    PORI = "PORI"
    DPC = "DPC"
    C = "C"
    D = "D"

    def __str__(self) -> str:
        return self.value


class ParseError(ValueError):
    """Malformed transformation text; ``token`` is the offending piece."""

    def __init__(self, message: str, token: str):
        super().__init__(f"{message}: {token!r}")
        self.token = token


@dataclass(frozen=True)
class PTrans:
    """A partial transformation.

    Stored as the image vector ``vec`` of length ``n`` with ``0`` marking
    points outside the domain.  Use :func:`make` or :meth:`from_pairs` to
    build one from ``(x, y)`` pairs.
    """

    n: int
    vec: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"chain size must be positive, got {self.n}")
        if len(self.vec) != self.n:
            raise ValueError(f"image vector has length {len(self.vec)}, expected {self.n}")
        for y in self.vec:
            if not 0 <= y <= self.n:
                raise ValueError(f"image {y} outside chain 1..{self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PTrans":
        vec = [0] * n
        for x, y in pairs:
            if not 1 <= x <= n:
                raise ValueError(f"domain point {x} outside chain 1..{n}")
            if not 1 <= y <= n:
                raise ValueError(f"image {y} outside chain 1..{n}")
            if vec[x - 1]:
                raise ValueError(f"duplicate domain element {x}")
            vec[x - 1] = y
        return cls(n, tuple(vec))

    @classmethod
    def full(cls, images: Iterable[int]) -> "PTrans":
        images = tuple(images)
        if 0 in images:
            raise ValueError("full map cannot leave a point undefined")
        return cls(len(images), images)

    @classmethod
    def identity(cls, n: int) -> "PTrans":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> "PTrans":
        return cls(n, (0,) * n)

    # structure

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, y in enumerate(self.vec) if y)

    @property
    def values(self) -> tuple[int, ...]:
        """Images listed over the sorted domain."""
        return tuple(y for y in self.vec if y)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i + 1, y) for i, y in enumerate(self.vec) if y)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.values)

    @property
    def width(self) -> int:
        return sum(1 for y in self.vec if y)

    @property
    def rank(self) -> int:
        return len(self.image)

    @property
    def is_full(self) -> bool:
        return 0 not in self.vec

    @property
    def is_injective(self) -> bool:
        v = self.values
        return len(set(v)) == len(v)

    @property
    def is_permutation(self) -> bool:
        return self.is_full and self.is_injective

    def __call__(self, x: int) -> int | None:
        y = self.vec[x - 1]
        return y or None

    def __mul__(self, other: "PTrans") -> "PTrans":
        return compose(self, other)

    def inverse(self) -> "PTrans":
        """Inverse partial map; only defined for injective maps."""
        if not self.is_injective:
            raise ValueError("only injective maps have an inverse")
        return PTrans.from_pairs(self.n, ((y, x) for x, y in self.pairs))

    def kernel_classes(self) -> list[tuple[int, ...]]:
        """Domain points grouped by image, ordered by least element."""
        classes: dict[int, list[int]] = {}
        for x, y in self.pairs:
            classes.setdefault(y, []).append(x)
        return sorted(tuple(c) for c in classes.values())

    def __str__(self) -> str:
        return format_ptrans(self)


def make(n: int, pairs: Iterable[tuple[int, int]]) -> PTrans:
    return PTrans.from_pairs(n, pairs)


def compose(alpha: PTrans, beta: PTrans) -> PTrans:
    """``alpha`` then ``beta``; the domain is ``{x : x alpha in Dom(beta)}``."""
    if alpha.n != beta.n:
        raise ValueError(f"chain size mismatch: {alpha.n} vs {beta.n}")
    b = beta.vec
    return PTrans(alpha.n, tuple(b[y - 1] if y else 0 for y in alpha.vec))


def power(alpha: PTrans, k: int) -> PTrans:
    result = PTrans.identity(alpha.n)
    for _ in range(k):
        result = compose(result, alpha)
    return result


def restrict(alpha: PTrans, points: Iterable[int]) -> PTrans:
    keep = set(points)
    return PTrans(alpha.n, tuple(y if i + 1 in keep else 0 for i, y in enumerate(alpha.vec)))


def restrictions_of_width(alpha: PTrans, w: int) -> Iterator[PTrans]:
    """Restrictions to every ``w``-subset of the domain, lexicographically."""
    for subset in combinations(alpha.domain, w):
        yield restrict(alpha, subset)


def rotation(n: int, k: int = 1) -> PTrans:
    """``g^k``: ``i -> ((i + k - 1) mod n) + 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    return PTrans(n, tuple((i + k - 1) % n + 1 for i in range(1, n + 1)))


def reflection(n: int) -> PTrans:
    """``h``: ``i -> n + 1 - i``."""
    if n < 1:
        raise ValueError("n must be positive")
    return PTrans(n, tuple(n + 1 - i for i in range(1, n + 1)))


def cyclic_elements(n: int) -> Iterator[PTrans]:
    for k in range(n):
        yield rotation(n, k)


def dihedral_elements(n: int) -> Iterator[PTrans]:
    """``1, g, ..., g^{n-1}, h, hg, ..., hg^{n-1}``; only the rotations when n < 3."""
    yield from cyclic_elements(n)
    if n >= 3:
        h = reflection(n)
        for k in range(n):
            yield compose(h, rotation(n, k))


# text form

def format_ptrans(alpha: PTrans, with_size: bool = True) -> str:
    if alpha.is_full:
        body = "[" + ",".join(map(str, alpha.vec)) + "]"
    else:
        body = "{" + ", ".join(f"{x}:{y}" for x, y in alpha.pairs) + "}"
    return f"n={alpha.n}; {body}" if with_size else body


_HEADER = re.compile(r"\s*n\s*=\s*([^;]*);(.*)\Z", re.S)


def _int_token(tok: str) -> int:
    tok = tok.strip()
    if not re.fullmatch(r"[0-9]+", tok):
        raise ParseError("expected an integer", tok)
    return int(tok)


def parse_ptrans(text: str, n: int | None = None) -> PTrans:
    """Parse the text form; ``n`` is needed only when the ``n=`` prefix is absent."""
    m = _HEADER.match(text)
    if m:
        n = _int_token(m.group(1))
        body = m.group(2).strip()
    else:
        body = text.strip()
        if n is None:
            raise ParseError("missing chain size prefix 'n=<int>;'", text.strip()[:16])
    if body.startswith("[") and body.endswith("]"):
        inner = body[1:-1].strip()
        images = [_int_token(t) for t in inner.split(",")] if inner else []
        if len(images) != n:
            raise ParseError(f"full map needs {n} images", body)
        for y in images:
            if not 1 <= y <= n:
                raise ParseError(f"image outside 1..{n}", str(y))
        return PTrans(n, tuple(images))
    if body.startswith("{") and body.endswith("}"):
        inner = body[1:-1].strip()
        pairs = []
        if inner:
            for item in inner.split(","):
                if item.count(":") != 1:
                    raise ParseError("expected 'x:y'", item.strip())
                xs, ys = item.split(":")
                pairs.append((_int_token(xs), _int_token(ys)))
        xs = [x for x, _ in pairs]
        for a, b in zip(xs, xs[1:]):
            if b <= a:
                raise ParseError("domain must be strictly increasing", f"{b}")
        for x, y in pairs:
            if not 1 <= x <= n:
                raise ParseError(f"domain point outside 1..{n}", str(x))
            if not 1 <= y <= n:
                raise ParseError(f"image outside 1..{n}", str(y))
        return PTrans.from_pairs(n, pairs)
    raise ParseError("expected '[...]' or '{...}'", body)
