"""Membership in the oriented monoids.

:func:`classify` (one descent/ascent scan of the image sequence) is the
ground truth.  The local tests below decide the same memberships from
triples, quadruples or narrow restrictions, and are kept independent of
:func:`classify` so that their agreement can be checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .chainseq import ChainSeq, ascent_count, descent_count
from .ptrans import MonoidLabel, PTrans, restrictions_of_width


@dataclass(frozen=True)
class OrientationClass:
    cyclic: bool
    anticyclic: bool

    @property
    def oriented(self) -> bool:
        return self.cyclic or self.anticyclic


def image_sequence(alpha: PTrans) -> ChainSeq:
    return ChainSeq(alpha.n, alpha.values)


@lru_cache(maxsize=None)
def _flags(values: tuple[int, ...]) -> tuple[bool, bool]:
    return descent_count(values) <= 1, ascent_count(values) <= 1


def classify(alpha: PTrans) -> OrientationClass:
    return OrientationClass(*_flags(alpha.values))


def is_pop(alpha: PTrans) -> bool:
    return _flags(alpha.values)[0]


def is_por(alpha: PTrans) -> bool:
    c, a = _flags(alpha.values)
    return c or a


def _in_cyclic_group(alpha: PTrans) -> bool:
    n, v = alpha.n, alpha.vec
    if not alpha.is_permutation:
        return False
    k = v[0] - 1
    return all(v[i] == (i + k) % n + 1 for i in range(n))


def _in_dihedral_group(alpha: PTrans) -> bool:
    if _in_cyclic_group(alpha):
        return True
    n, v = alpha.n, alpha.vec
    if n < 3 or not alpha.is_permutation:
        return False
    # h g^k sends i to ((n - i + k) mod n) + 1
    k = v[0] % n
    return all(v[i - 1] == (n - i + k) % n + 1 for i in range(1, n + 1))


def is_member(alpha: PTrans, label: MonoidLabel | str) -> bool:
    """Definitional membership of ``alpha`` in the monoid named by ``label``."""
    label = MonoidLabel(label)
    if label is MonoidLabel.PT:
        return True
    if label is MonoidLabel.T:
        return alpha.is_full
    if label is MonoidLabel.I:
        return alpha.is_injective
    if label is MonoidLabel.S:
        return alpha.is_permutation
    if label is MonoidLabel.POP:
        return is_pop(alpha)
    if label is MonoidLabel.POR:
        return is_por(alpha)
    if label is MonoidLabel.OP:
        return alpha.is_full and is_pop(alpha)
    if label is MonoidLabel.OR:
        return alpha.is_full and is_por(alpha)
    if label is MonoidLabel.POPI:
        return alpha.is_injective and is_pop(alpha)
    if label is MonoidLabel.PORI:
        return alpha.is_injective and is_por(alpha)
    if label is MonoidLabel.C:
        return _in_cyclic_group(alpha)
    if label is MonoidLabel.D:
        return _in_dihedral_group(alpha)
    if label is MonoidLabel.DPC:
        from .cyclegraph import is_partial_isometry

        return is_partial_isometry(alpha)
    raise ValueError(f"unknown label {label}")


# Higgins-Vernitski style tests on full maps.  Tuples are ordered and may
# repeat points.

def _require_full(alpha: PTrans):
    if not alpha.is_full:
        raise ValueError("test is defined for full transformations only")


@lru_cache(maxsize=None)
def _tuples(n: int, w: int) -> tuple[tuple[tuple[int, ...], bool, bool], ...]:
    return tuple((t, *_flags(t)) for t in product(range(1, n + 1), repeat=w))


@lru_cache(maxsize=None)
def _nondecreasing_tuples(n: int, w: int) -> tuple[tuple[int, ...], ...]:
    return tuple(t for t, _, _ in _tuples(n, w) if all(a <= b for a, b in zip(t, t[1:])))


def _image(v, t):
    return tuple(v[a - 1] for a in t)


def hv_triple_test(alpha: PTrans) -> bool:
    """Every triple and its image are both cyclic or both anti-cyclic."""
    _require_full(alpha)
    v = alpha.vec
    for t, cyc, anti in _tuples(alpha.n, 3):
        icyc, ianti = _flags(_image(v, t))
        if not ((cyc and icyc) or (anti and ianti)):
            return False
    return True


def hv_quadruple_test(alpha: PTrans) -> bool:
    """Every oriented quadruple maps to an oriented quadruple."""
    _require_full(alpha)
    v = alpha.vec
    for t, cyc, anti in _tuples(alpha.n, 4):
        if cyc or anti:
            icyc, ianti = _flags(_image(v, t))
            if not (icyc or ianti):
                return False
    return True


def cyclic_triple_test(alpha: PTrans) -> bool:
    """Every cyclic triple maps to a cyclic triple."""
    _require_full(alpha)
    v = alpha.vec
    for t, cyc, _ in _tuples(alpha.n, 3):
        if cyc and not _flags(_image(v, t))[0]:
            return False
    return True


def nondecreasing_tuple_test(alpha: PTrans, w: int) -> bool:
    """Non-decreasing triples map to cyclic triples (w=3), quadruples to oriented ones (w=4)."""
    if w not in (3, 4):
        raise ValueError(f"w must be 3 or 4, got {w}")
    _require_full(alpha)
    v = alpha.vec
    for t in _nondecreasing_tuples(alpha.n, w):
        cyc, anti = _flags(_image(v, t))
        if not (cyc if w == 3 else cyc or anti):
            return False
    return True


def local_width_test(alpha: PTrans, w: int) -> bool:
    """Every width-``w`` restriction is in POP (w=3) or POR (w=4).

    Vacuously true when ``alpha`` is narrower than ``w``.
    """
    if w not in (3, 4):
        raise ValueError(f"w must be 3 or 4, got {w}")
    member = is_pop if w == 3 else is_por
    return all(member(r) for r in restrictions_of_width(alpha, w))


def rank2_pop_test(alpha: PTrans) -> bool:
    """Rank-2 POP test: some kernel class is a contiguous run of the sorted domain."""
    if alpha.rank != 2:
        raise ValueError(f"rank must be 2, got {alpha.rank}")
    dom = alpha.domain
    index = {x: i for i, x in enumerate(dom)}
    for cls in alpha.kernel_classes():
        pos = [index[x] for x in cls]
        if pos[-1] - pos[0] + 1 == len(pos):
            return True
    return False


def decide_pop_local(alpha: PTrans) -> bool:
    r = alpha.rank
    if r <= 1:
        return True
    if r == 2:
        return rank2_pop_test(alpha)
    return local_width_test(alpha, 3)


def decide_por_local(alpha: PTrans) -> bool:
    return local_width_test(alpha, 4)


def bar_extend(alpha: PTrans) -> PTrans:
    """Full map agreeing with ``alpha`` on its domain, constant on each gap.

    A point takes the image of the nearest domain point at or below it;
    points below the least domain point take that point's image.
    """
    dom = alpha.domain
    if len(dom) < 3:
        raise ValueError(f"width must be at least 3, got {len(dom)}")
    v = alpha.vec
    out = []
    current = v[dom[0] - 1]
    for i in range(1, alpha.n + 1):
        if v[i - 1]:
            current = v[i - 1]
        out.append(current)
    return PTrans(alpha.n, tuple(out))
