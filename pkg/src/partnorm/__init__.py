"""Exact arithmetic for the norm (product of parts) of integer partitions."""

from .partitions import (
    ALL,
    DISTINCT,
    EMPTY,
    EVEN_PARTS,
    GOLLNITZ_GORDON,
    NUCLEAR,
    ODD_PARTS,
    PRIME_PARTS,
    ROGERS_RAMANUJAN,
    SCHUR,
    Partition,
    PartitionClass,
    allowed_parts,
    class_from_name,
    enumerate_partitions,
    from_parts,
)
from .report import Status, VerifyReport
from .series import Series, euler_partition_series, pentagonal_p
from .stats import lehmer_sum, lehmer_sum_distinct, max_norm, min_size_for_norm
from .zeta import EvalResult, PartSetSpec, PiValue, partition_zeta_product, riemann_zeta

__version__ = "0.1.0"

__all__ = [
    "ALL", "DISTINCT", "EMPTY", "EVEN_PARTS", "GOLLNITZ_GORDON", "NUCLEAR", "ODD_PARTS", "PRIME_PARTS",
    "ROGERS_RAMANUJAN", "SCHUR", "Partition", "PartitionClass", "allowed_parts", "class_from_name",
    "enumerate_partitions", "from_parts", "Status", "VerifyReport", "Series", "euler_partition_series",
    "pentagonal_p", "lehmer_sum", "lehmer_sum_distinct", "max_norm", "min_size_for_norm", "EvalResult",
    "PartSetSpec", "PiValue", "partition_zeta_product", "riemann_zeta",
]
