"""Exact quantum Schubert calculus for Grassmannians Gr(l, n)."""

from .classical import classical_pieri, classical_product_in_frame, lr_coefficient, schur_product
from .partitions import (
    EMPTY,
    GrassmannFrame,
    Partition,
    conjugate,
    dual_in_frame,
    enumerate_partitions_in_frame,
    fits_in_frame,
    normalize,
    parse_partition,
)
from .quantum import (
    QElement,
    extended_sigma,
    giambelli_det,
    gw_invariant,
    qproduct,
    qproduct_pieri,
    qproduct_rimhook,
    quantum_pieri,
    reduce_to_basis,
    straighten,
)

__all__ = [
    "EMPTY",
    "GrassmannFrame",
    "Partition",
    "QElement",
    "classical_pieri",
    "classical_product_in_frame",
    "conjugate",
    "dual_in_frame",
    "enumerate_partitions_in_frame",
    "extended_sigma",
    "fits_in_frame",
    "giambelli_det",
    "gw_invariant",
    "lr_coefficient",
    "normalize",
    "parse_partition",
    "qproduct",
    "qproduct_pieri",
    "qproduct_rimhook",
    "quantum_pieri",
    "reduce_to_basis",
    "schur_product",
    "straighten",
]
