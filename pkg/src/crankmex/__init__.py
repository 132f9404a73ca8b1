"""Refined crank / mex / fixed-point partition identities: statistics, bijections, exact q-series checks."""

from .bijections import (
    BijectionTrace,
    DomainError,
    InternalError,
    even_mex_to_fixed_point,
    fixed_point_to_fixed_point_inverse,
    fixed_to_negcrank,
    g1_insert,
    konan_reduce,
    neg_to_pos_crank,
    negcrank_to_fixed,
    pos_to_neg_crank,
    trace_chain,
)
from .partitions import (
    ClassTag,
    CountTable,
    Partition,
    PartitionClassId,
    PartitionError,
    beta,
    count_classes,
    crank,
    durfee,
    enumerate_partitions,
    fixed_point,
    has_j_fixed_point,
    make_partition,
    member,
    mex,
    mu,
    omega,
)

__version__ = "0.1.0"
