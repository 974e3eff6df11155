import random
from itertools import product

import pytest

from oriented_chain import orientation as ori
from oriented_chain.chainseq import ChainSeq
from oriented_chain.ptrans import (
    MonoidLabel,
    PTrans,
    compose,
    cyclic_elements,
    dihedral_elements,
    make,
    reflection,
    rotation,
)

CORRIGENDUM = PTrans.full([1, 2, 1, 2])


def rotates_sorted(values):
    t = len(values)
    return t == 0 or any(
        all(a <= b for a, b in zip(r, r[1:])) for r in (values[i:] + values[:i] for i in range(t)))


def oracle_pop(a):
    return rotates_sorted(a.values)


def oracle_por(a):
    return oracle_pop(a) or rotates_sorted(a.values[::-1])


def all_t(n):
    return [PTrans(n, v) for v in product(range(1, n + 1), repeat=n)]


def all_pt(n):
    return [PTrans(n, v) for v in product(range(n + 1), repeat=n)]


def all_i(n):
    return [a for a in all_pt(n) if a.is_injective]


def test_image_sequence():
    assert ori.image_sequence(CORRIGENDUM) == ChainSeq(4, (1, 2, 1, 2))
    assert ori.image_sequence(PTrans.empty(3)) == ChainSeq(3, ())
    assert ori.image_sequence(rotation(4, 1)).values == (2, 3, 4, 1)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_classify_generators(n):
    g, h = ori.classify(rotation(n, 1)), ori.classify(reflection(n))
    assert g.cyclic and not g.anticyclic
    assert h.anticyclic and not h.cyclic
    assert g.oriented and h.oriented


def test_classify_corrigendum():
    c = ori.classify(CORRIGENDUM)
    assert not c.cyclic and not c.anticyclic and not c.oriented


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classify_matches_rotation_oracle(n):
    for a in all_pt(n):
        c = ori.classify(a)
        assert c.cyclic == oracle_pop(a)
        assert c.oriented == oracle_por(a)
        if a.width <= 2:
            assert c.cyclic and c.anticyclic


def test_is_member_examples():
    for n in (3, 4, 5):
        g, h = rotation(n, 1), reflection(n)
        assert ori.is_member(g, MonoidLabel.OP)
        assert not ori.is_member(h, "OP")
        assert ori.is_member(h, "OR")
        assert ori.is_member(g, "C") and not ori.is_member(h, "C")
        assert ori.is_member(h, "D")
    assert not ori.is_member(CORRIGENDUM, "POP")
    assert ori.is_member(CORRIGENDUM, "T")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_membership_lattice(n):
    for a in all_pt(n):
        m = {lab: ori.is_member(a, lab) for lab in MonoidLabel if not (lab == "DPC" and n < 3)}
        assert m["OP"] == (m["POP"] and m["T"])
        assert m["OR"] == (m["POR"] and m["T"])
        assert m["POPI"] == (m["POP"] and m["I"])
        assert m["PORI"] == (m["POR"] and m["I"])
        assert m["S"] == (m["T"] and m["I"])
        assert m["C"] == (a in set(cyclic_elements(n)))
        assert m["D"] == (a in set(dihedral_elements(n)))


# Higgins-Vernitski tests

def test_hv_triple_examples():
    assert ori.hv_triple_test(rotation(4, 1))
    assert ori.hv_triple_test(CORRIGENDUM)
    assert not ori.is_member(CORRIGENDUM, "OP")
    for n in (3, 4, 5):
        assert not ori.hv_triple_test(reflection(n))
    with pytest.raises(ValueError):
        ori.hv_triple_test(make(4, [(1, 1)]))


def test_hv_quadruple_examples():
    assert ori.hv_quadruple_test(reflection(4))
    assert ori.hv_quadruple_test(reflection(5))
    for a in all_t(4):
        if ori.is_member(a, "OR"):
            assert ori.hv_quadruple_test(a)
    rank3_outside = [a for a in all_t(4) if a.rank == 3 and not ori.is_member(a, "OR")]
    assert rank3_outside
    assert not any(ori.hv_quadruple_test(a) for a in rank3_outside)
    with pytest.raises(ValueError):
        ori.hv_quadruple_test(PTrans.empty(4))


def test_cyclic_and_nondecreasing_examples():
    assert ori.cyclic_triple_test(rotation(4, 1))
    assert ori.cyclic_triple_test(CORRIGENDUM)
    assert ori.nondecreasing_tuple_test(rotation(5, 1), 3)
    assert ori.nondecreasing_tuple_test(reflection(5), 4)
    with pytest.raises(ValueError):
        ori.nondecreasing_tuple_test(rotation(4, 1), 5)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_triple_tests_agree_on_all_full_maps(n):
    for a in all_t(n):
        hv = ori.hv_triple_test(a)
        assert ori.cyclic_triple_test(a) == hv
        assert ori.nondecreasing_tuple_test(a, 3) == hv
        assert ori.nondecreasing_tuple_test(a, 4) == ori.hv_quadruple_test(a)


@pytest.mark.parametrize("n", [4, 5])
def test_triple_tests_vs_op(n):
    rank2_gap = []
    for a in all_t(n):
        op = ori.is_member(a, "OP")
        tests = (ori.hv_triple_test(a), ori.cyclic_triple_test(a),
                 ori.nondecreasing_tuple_test(a, 3))
        if a.rank != 2:
            assert tests == (op, op, op)
        else:
            # weaker than OP on rank 2: every rank-2 map passes
            assert all(tests)
            if not op:
                rank2_gap.append(a)
    assert CORRIGENDUM in rank2_gap or n != 4
    assert rank2_gap


# local tests

def test_local_width_examples():
    assert ori.local_width_test(CORRIGENDUM, 3)
    assert not ori.local_width_test(CORRIGENDUM, 4)
    assert ori.local_width_test(make(5, [(1, 5), (2, 1)]), 3)
    with pytest.raises(ValueError):
        ori.local_width_test(CORRIGENDUM, 2)


def test_rank2_examples():
    assert not ori.rank2_pop_test(CORRIGENDUM)
    a = PTrans.full([1, 3, 3, 1])
    assert a.kernel_classes() == [(1, 4), (2, 3)]
    assert ori.rank2_pop_test(a)
    for b in all_i(4):
        if b.rank == 2:
            assert ori.rank2_pop_test(b)
    with pytest.raises(ValueError):
        ori.rank2_pop_test(rotation(4, 1))


def test_decide_examples():
    assert not ori.decide_pop_local(CORRIGENDUM)
    assert ori.decide_pop_local(PTrans.empty(4))
    assert not ori.decide_por_local(CORRIGENDUM)
    assert ori.decide_por_local(reflection(5))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_decide_local_matches_oracle_on_pt(n):
    for a in all_pt(n):
        assert ori.decide_pop_local(a) == oracle_pop(a)
        assert ori.decide_por_local(a) == oracle_por(a)
        if a.rank == 2:
            assert ori.rank2_pop_test(a) == oracle_pop(a)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_local_width_theorems_on_full_maps(n):
    for a in all_t(n):
        if a.rank != 2:
            assert ori.local_width_test(a, 3) == ori.is_member(a, "OP")
        assert ori.local_width_test(a, 4) == ori.is_member(a, "OR")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_local_width_on_injective_needs_no_rank_carveout(n):
    for a in all_i(n):
        assert ori.local_width_test(a, 3) == ori.is_member(a, "POPI")
        assert ori.local_width_test(a, 4) == ori.is_member(a, "PORI")


# bar extension

def test_bar_extend_examples():
    assert ori.bar_extend(make(5, [(1, 2), (3, 5), (4, 1)])) == PTrans.full([2, 2, 5, 1, 1])
    for a in all_t(3):
        assert ori.bar_extend(a) == a
    assert ori.bar_extend(make(6, [(2, 4), (3, 1), (5, 6)])) == PTrans.full([4, 4, 1, 1, 6, 6])
    with pytest.raises(ValueError):
        ori.bar_extend(make(5, [(1, 1), (2, 2)]))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_bar_extension_lemma(n):
    for a in all_pt(n):
        if a.width < 3:
            continue
        b = ori.bar_extend(a)
        assert b.is_full
        assert all(b(x) == y for x, y in a.pairs)
        assert oracle_pop(a) == ori.is_member(b, "OP")
        assert oracle_por(a) == ori.is_member(b, "OR")


# algebraic structure

def test_closure_pt3_exhaustive():
    elems = all_pt(3)
    pop = [a for a in elems if ori.is_member(a, "POP")]
    por = [a for a in elems if ori.is_member(a, "POR")]
    for a in pop:
        for b in pop:
            assert ori.is_member(compose(a, b), "POP")
    for a in por:
        for b in por:
            assert ori.is_member(compose(a, b), "POR")


@pytest.mark.parametrize("n", [4, 5])
def test_closure_sampled(n):
    rng = random.Random(20231016 + n)
    elems = all_pt(n)
    pop = [a for a in elems if ori.is_member(a, "POP")]
    por = [a for a in elems if ori.is_member(a, "POR")]
    for _ in range(5000):
        assert ori.is_member(compose(rng.choice(pop), rng.choice(pop)), "POP")
        assert ori.is_member(compose(rng.choice(por), rng.choice(por)), "POR")
