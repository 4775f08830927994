"""Exact Donaldson invariants of CP^2 and Darboux-configuration counts,
computed by torus localization on Hilbert schemes of points, plus an
independent determinantal-curve witness over exact rationals."""

from .engine import IntegrandSpec, IntegralResult, integrate
from .invariants import (
    DarbouxCount,
    DonaldsonResult,
    OutOfRange,
    darboux_count,
    donaldson_q,
    invariant_table,
)
from .partitions import FixedPoint, Partition, enumerate_fixed_points, enumerate_partitions

__all__ = [
    "IntegrandSpec",
    "IntegralResult",
    "integrate",
    "DarbouxCount",
    "DonaldsonResult",
    "OutOfRange",
    "darboux_count",
    "donaldson_q",
    "invariant_table",
    "FixedPoint",
    "Partition",
    "enumerate_fixed_points",
    "enumerate_partitions",
]
