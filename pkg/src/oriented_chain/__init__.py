"""Oriented full, partial and injective partial transformations on a finite chain."""

from .chainseq import (
    ChainSeq,
    DihedralElement,
    act,
    ascent_count,
    descent_count,
    find_sorting_symmetry,
    is_anticyclic,
    is_cyclic,
    is_oriented,
)
from .ptrans import (
    MonoidLabel,
    ParseError,
    PTrans,
    compose,
    dihedral_elements,
    format_ptrans,
    make,
    parse_ptrans,
    reflection,
    restrict,
    restrictions_of_width,
    rotation,
)
from .orientation import (
    OrientationClass,
    bar_extend,
    classify,
    cyclic_triple_test,
    decide_pop_local,
    decide_por_local,
    hv_quadruple_test,
    hv_triple_test,
    image_sequence,
    is_member,
    local_width_test,
    nondecreasing_tuple_test,
    rank2_pop_test,
)
from .cyclegraph import CycleMetric, distance, is_partial_isometry, normalize_fix1, reflect_normalize
from .census import (
    CATALOG,
    Bounds,
    BoundExceeded,
    CensusRecord,
    VerificationReport,
    count,
    enumerate_dpc,
    enumerate_universe,
    find_counterexamples,
    verify_theorem,
)

__version__ = "0.1.0"
