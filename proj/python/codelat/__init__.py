"""Lattices L_A(C) and L_B(C) built from self-orthogonal codes over F_p."""

from ._codelat import (
    Code,
    Lattice,
    SignedPermutation,
    bridge_ok,
    construction_A,
    construction_A_preimage,
    construction_B,
    enumerate_self_orthogonal,
    equivalent,
    frame_count,
    is_isometric,
    min_norms,
    norm_layers,
    recover_code,
    root_system_type,
    roots,
    suite_names,
    theorem_matrix,
    verify_suite,
)

__all__ = [
    "Code",
    "Lattice",
    "SignedPermutation",
    "bridge_ok",
    "construction_A",
    "construction_A_preimage",
    "construction_B",
    "enumerate_self_orthogonal",
    "equivalent",
    "frame_count",
    "is_isometric",
    "min_norms",
    "norm_layers",
    "recover_code",
    "root_system_type",
    "roots",
    "suite_names",
    "theorem_matrix",
    "verify_suite",
]
