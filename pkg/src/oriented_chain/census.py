"""Exhaustive enumeration, membership censuses and theorem verification.

Enumeration orders are fixed so that witness lists and golden files are
reproducible:

* ``T``  -- image vectors in lexicographic order;
* ``PT`` -- image vectors in lexicographic order, ``0`` meaning undefined;
* ``I``  -- domains by size then lexicographically, then injections by
  lexicographic image sequence.

Every stream can be cut into shards by the image of the point 1 (or the
first entry of a sequence); shards are verified independently and merged.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import orientation as ori
from .chainseq import (
    ChainSeq,
    DihedralElement,
    act,
    find_sorting_symmetry,
    is_anticyclic,
    is_cyclic,
    is_oriented,
)
from .cyclegraph import is_partial_isometry
from .ptrans import MonoidLabel, PTrans, format_ptrans

ENV_MAX_N = "ORIENTED_CHAIN_MAX_N"
DEFAULT_WITNESS_CAP = 10
SCHEMA_VERSION = 1


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Bounds:
    """Largest ``n`` each enumeration is allowed to reach."""

    T: int = 8
    I: int = 8  # noqa: E741
    DPC: int = 8
    PT: int = 6
    tuples: int = 5

    @classmethod
    def from_env(cls, max_n: Optional[int] = None) -> "Bounds":
        """Defaults, overridden wholesale by ``max_n`` or ``$ORIENTED_CHAIN_MAX_N``."""
        if max_n is None and os.environ.get(ENV_MAX_N):
            max_n = int(os.environ[ENV_MAX_N])
        if max_n is None:
            return cls()
        return cls(max_n, max_n, max_n, max_n, max_n)

    def check(self, kind: str, n: int):
        limit = getattr(self, kind)
        if n > limit:
            raise BoundExceeded(f"n={n} exceeds the {kind} bound {limit}")
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")


# enumeration

UNIVERSES = ("PT", "T", "I")


def _injections(n: int, first: Optional[int]) -> Iterator[PTrans]:
    for k in range(n + 1):
        for dom in combinations(range(1, n + 1), k):
            has1 = bool(dom) and dom[0] == 1
            if first is not None and has1 != (first != 0):
                continue
            for imgs in permutations(range(1, n + 1), k):
                if first and imgs[0] != first:
                    continue
                vec = [0] * n
                for x, y in zip(dom, imgs):
                    vec[x - 1] = y
                yield PTrans(n, tuple(vec))


def enumerate_universe(n: int, universe: str, first: Optional[int] = None,
                       bounds: Optional[Bounds] = None) -> Iterator[PTrans]:
    """Every element of ``PT_n``, ``T_n`` or ``I_n`` exactly once.

    ``first`` keeps only the elements sending 1 to ``first`` (0 = undefined).
    """
    if universe not in UNIVERSES:
        raise ValueError(f"unknown universe {universe!r}; expected one of {UNIVERSES}")
    (bounds or Bounds.from_env()).check(universe, n)
    if universe == "I":
        yield from _injections(n, first)
        return
    lo = 0 if universe == "PT" else 1
    symbols = range(lo, n + 1)
    heads = symbols if first is None else [first]
    for head in heads:
        for rest in product(symbols, repeat=n - 1):
            yield PTrans(n, (head, *rest))


enumerate = enumerate_universe  # noqa: A001


def permutations_of(n: int, first: Optional[int] = None) -> Iterator[PTrans]:
    for p in permutations(range(1, n + 1)):
        if first is None or p[0] == first:
            yield PTrans(n, p)


def enumerate_dpc(n: int, first: Optional[int] = None,
                  bounds: Optional[Bounds] = None) -> Iterator[PTrans]:
    """Partial isometries of ``C_n`` in ``I_n`` enumeration order.

    For each domain, images are chosen point by point and a branch is cut
    as soon as a distance fails to match.
    """
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    (bounds or Bounds.from_env()).check("DPC", n)

    def dist(x, y):
        d = abs(x - y)
        return min(d, n - d)

    for k in range(n + 1):
        for dom in combinations(range(1, n + 1), k):
            has1 = bool(dom) and dom[0] == 1
            if first is not None and has1 != (first != 0):
                continue
            imgs: list[int] = []

            def extend(pos):
                if pos == k:
                    vec = [0] * n
                    for x, y in zip(dom, imgs):
                        vec[x - 1] = y
                    yield PTrans(n, tuple(vec))
                    return
                x = dom[pos]
                choices = [first] if (pos == 0 and first) else range(1, n + 1)
                for y in choices:
                    if y in imgs:
                        continue
                    if all(dist(dom[q], x) == dist(imgs[q], y) for q in range(pos)):
                        imgs.append(y)
                        yield from extend(pos + 1)
                        imgs.pop()

            yield from extend(0)


def dpc_by_filter(n: int, bounds: Optional[Bounds] = None) -> Iterator[PTrans]:
    """Same stream as :func:`enumerate_dpc`, by filtering all of ``I_n``."""
    return (a for a in enumerate_universe(n, "I", bounds=bounds) if is_partial_isometry(a))


def cardinality(n: int, universe: str) -> int:
    if universe == "T":
        return n ** n
    if universe == "PT":
        return (n + 1) ** n
    if universe == "I":
        return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
    raise ValueError(universe)


def _i_key(alpha: PTrans):
    return alpha.width, alpha.domain, alpha.values


def _vec_key(alpha: PTrans):
    return alpha.vec


# census

@dataclass(frozen=True)
class CensusRecord:
    n: int
    label: MonoidLabel
    count: int

    def csv_row(self) -> str:
        return f"{self.n},{self.label},{self.count}"


LABEL_ORDER = tuple(MonoidLabel)

_LABEL_UNIVERSE = {
    MonoidLabel.PT: "PT", MonoidLabel.POP: "PT", MonoidLabel.POR: "PT",
    MonoidLabel.T: "T", MonoidLabel.OP: "T", MonoidLabel.OR: "T",
    MonoidLabel.I: "I", MonoidLabel.POPI: "I", MonoidLabel.PORI: "I",
    MonoidLabel.S: "S", MonoidLabel.C: "S", MonoidLabel.D: "S",
    MonoidLabel.DPC: "DPC",
}


def _stream(universe: str, n: int, first: Optional[int], bounds: Bounds) -> Iterator:
    if universe == "S":
        bounds.check("T", n)
        return permutations_of(n, first)
    if universe == "DPC":
        return enumerate_dpc(n, first, bounds)
    if universe == "SEQ":
        bounds.check("T", n)
        return _sequences(n, first)
    return enumerate_universe(n, universe, first, bounds)


def _shards(universe: str, n: int) -> list[int]:
    if universe in ("PT", "I", "DPC"):
        return list(range(0, n + 1))
    return list(range(1, n + 1))


def _count_shard(args) -> int:
    n, label, first, bounds = args
    universe = _LABEL_UNIVERSE[label]
    return sum(1 for a in _stream(universe, n, first, bounds) if ori.is_member(a, label))


def count(n: int, label: MonoidLabel | str, jobs: int = 1,
          bounds: Optional[Bounds] = None) -> CensusRecord:
    """Number of members of ``label`` among ``n``-point maps."""
    label = MonoidLabel(label)
    bounds = bounds or Bounds.from_env()
    universe = _LABEL_UNIVERSE[label]
    if universe == "DPC":
        # the isometry stream already yields exactly the members
        total = sum(1 for _ in enumerate_dpc(n, None, bounds))
        return CensusRecord(n, label, total)
    # validate bounds in the parent so workers never raise
    bounds.check("T" if universe == "S" else universe, n)
    tasks = [(n, label, f, bounds) for f in _shards(universe, n)]
    return CensusRecord(n, label, sum(_map(_count_shard, tasks, jobs)))


def census(ns: Iterable[int], labels: Iterable[MonoidLabel | str] = LABEL_ORDER,
           jobs: int = 1, bounds: Optional[Bounds] = None) -> list[CensusRecord]:
    """Records ordered by ``n`` then catalog order of labels; DPC is skipped for n < 3."""
    labels = sorted({MonoidLabel(x) for x in labels}, key=LABEL_ORDER.index)
    out = []
    for n in sorted(set(ns)):
        for label in labels:
            if label is MonoidLabel.DPC and n < 3:
                continue
            out.append(count(n, label, jobs, bounds))
    return out


def census_csv(records: Sequence[CensusRecord]) -> str:
    return "n,label,count\n" + "".join(r.csv_row() + "\n" for r in records)


def unit_group(n: int, label: MonoidLabel | str) -> set[PTrans]:
    """Invertible elements of the monoid: permutations whose inverse is also a member."""
    label = MonoidLabel(label)
    return {p for p in permutations_of(n)
            if ori.is_member(p, label) and ori.is_member(p.inverse(), label)}


# theorem verification

@dataclass
class VerificationReport:
    theorem_id: str
    n: int
    instances_checked: int = 0
    mismatches: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.mismatches == 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "theorem_id": self.theorem_id,
            "n": self.n,
            "instances_checked": self.instances_checked,
            "mismatches": self.mismatches,
            "witnesses": [witness_text(w) for w in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def witness_text(w) -> str:
    if isinstance(w, PTrans):
        return format_ptrans(w)
    return f"n={w.n}; {w}"


def _sequences(n: int, first: Optional[int]) -> Iterator[ChainSeq]:
    for t in range(3, 6):
        heads = range(1, n + 1) if first is None else [first]
        for head in heads:
            for rest in product(range(1, n + 1), repeat=t - 1):
                yield ChainSeq(n, (head, *rest))


def _seq_action_holds(s: ChainSeq) -> bool:
    cyc, anti = is_cyclic(s), is_anticyclic(s)
    t = len(s)
    sorters = {False: False, True: False}
    for sigma in DihedralElement.all(t):
        image = act(sigma, s)
        c, a = is_cyclic(image), is_anticyclic(image)
        if sigma.reflected:
            if (c, a) != (anti, cyc):
                return False
        elif (c, a) != (cyc, anti):
            return False
        if is_oriented(image) != is_oriented(s):
            return False
        if all(x <= y for x, y in zip(image, image.values[1:])):
            sorters[sigma.reflected] = True
    if cyc != sorters[False] or anti != sorters[True]:
        return False
    return is_oriented(s) == (find_sorting_symmetry(s) is not None)


_UNIT_FAMILIES = (
    (MonoidLabel.OP, MonoidLabel.C), (MonoidLabel.POP, MonoidLabel.C),
    (MonoidLabel.POPI, MonoidLabel.C), (MonoidLabel.OR, MonoidLabel.D),
    (MonoidLabel.POR, MonoidLabel.D), (MonoidLabel.PORI, MonoidLabel.D),
)


def _units_hold(p: PTrans) -> bool:
    inv = p.inverse()
    for monoid, group in _UNIT_FAMILIES:
        unit = ori.is_member(p, monoid) and ori.is_member(inv, monoid)
        if unit != ori.is_member(p, group):
            return False
    return True


def _bar_holds(a: PTrans) -> bool:
    b = ori.bar_extend(a)
    return (ori.is_pop(a) == ori.is_member(b, "OP")
            and ori.is_por(a) == ori.is_member(b, "OR"))


@dataclass(frozen=True)
class Theorem:
    """One exhaustive check: ``holds`` over the instances of ``universe`` passing ``where``."""

    id: str
    universe: str
    holds: Callable
    where: Optional[Callable] = None
    bound: Optional[str] = None
    min_n: int = 1
    corrected: bool = True

    def key(self, item):
        if self.universe in ("I", "DPC"):
            return _i_key(item)
        if self.universe == "SEQ":
            return len(item), item.values
        return _vec_key(item)


def _rank_not_2(a):
    return a.rank != 2


CATALOG: dict[str, Theorem] = {t.id: t for t in [
    Theorem("T-HV-OP", "T", lambda a: ori.hv_triple_test(a) == ori.is_member(a, "OP"),
            _rank_not_2, bound="tuples"),
    Theorem("T-HV-OR", "T", lambda a: ori.hv_quadruple_test(a) == ori.is_member(a, "OR"),
            bound="tuples"),
    Theorem("T-W3-OP", "T", lambda a: ori.local_width_test(a, 3) == ori.is_member(a, "OP"),
            _rank_not_2),
    Theorem("T-W4-OR", "T", lambda a: ori.local_width_test(a, 4) == ori.is_member(a, "OR")),
    Theorem("T-W3-POP", "PT", lambda a: ori.decide_pop_local(a) == ori.is_pop(a)),
    Theorem("T-W4-POR", "PT", lambda a: ori.decide_por_local(a) == ori.is_por(a)),
    Theorem("T-W3-POPI", "I", lambda a: ori.local_width_test(a, 3) == ori.is_member(a, "POPI")),
    Theorem("T-W4-PORI", "I", lambda a: ori.local_width_test(a, 4) == ori.is_member(a, "PORI")),
    Theorem("T-BAR", "PT", _bar_holds, lambda a: a.width >= 3),
    Theorem("T-RANK2", "PT", lambda a: ori.rank2_pop_test(a) == ori.is_pop(a),
            lambda a: a.rank == 2),
    Theorem("T-DPC", "DPC", lambda a: ori.is_member(a, "PORI"), min_n=3),
    Theorem("T-UNITS", "S", _units_hold),
    Theorem("T-SEQ-ACT", "SEQ", _seq_action_holds),
    # statements as printed before the rank-2 correction; expected to fail
    Theorem("T-HV-OP-UNCORRECTED", "T",
            lambda a: ori.hv_triple_test(a) == ori.is_member(a, "OP"),
            bound="tuples", corrected=False),
    Theorem("T-W3-OP-UNCORRECTED", "T",
            lambda a: ori.local_width_test(a, 3) == ori.is_member(a, "OP"), corrected=False),
    Theorem("T-W3-POP-UNCORRECTED", "PT",
            lambda a: ori.local_width_test(a, 3) == ori.is_pop(a), corrected=False),
]}

CORRECTED_IDS = tuple(k for k, t in CATALOG.items() if t.corrected)


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return CATALOG[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(CATALOG)}") from None


def _bound_kind(th: Theorem) -> str:
    if th.bound:
        return th.bound
    return {"S": "T", "SEQ": "T"}.get(th.universe, th.universe)


def _verify_shard(args) -> VerificationReport:
    theorem_id, n, first, cap, bounds = args
    th = CATALOG[theorem_id]
    report = VerificationReport(theorem_id, n)
    for item in _stream(th.universe, n, first, bounds):
        if th.where is not None and not th.where(item):
            continue
        report.instances_checked += 1
        if not th.holds(item):
            report.mismatches += 1
            if len(report.witnesses) < cap:
                report.witnesses.append(item)
    return report


def _map(fn, tasks, jobs):
    if jobs and jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def verify_theorem(theorem_id: str, n: int, witness_cap: int = DEFAULT_WITNESS_CAP,
                   jobs: int = 1, bounds: Optional[Bounds] = None) -> VerificationReport:
    """Exhaustively check one catalog entry at one ``n``.

    With ``jobs > 1`` the stream is sharded over worker processes; the merged
    report is identical to a sequential run.
    """
    th = get_theorem(theorem_id)
    bounds = bounds or Bounds.from_env()
    if n < th.min_n:
        raise ValueError(f"{theorem_id} needs n >= {th.min_n}")
    bounds.check(_bound_kind(th), n)
    if jobs <= 1:
        return _verify_shard((theorem_id, n, None, witness_cap, bounds))
    tasks = [(theorem_id, n, f, witness_cap, bounds) for f in _shards(th.universe, n)]
    parts = _map(_verify_shard, tasks, jobs)
    witnesses = sorted((w for p in parts for w in p.witnesses), key=th.key)[:witness_cap]
    return VerificationReport(
        theorem_id, n,
        instances_checked=sum(p.instances_checked for p in parts),
        mismatches=sum(p.mismatches for p in parts),
        witnesses=witnesses,
    )


def find_counterexamples(theorem_id: str, n: int, max_witnesses: int = DEFAULT_WITNESS_CAP,
                         jobs: int = 1, bounds: Optional[Bounds] = None) -> list:
    """Instances (in enumeration order, at most ``max_witnesses``) where the statement fails."""
    return verify_theorem(theorem_id, n, max_witnesses, jobs, bounds).witnesses
