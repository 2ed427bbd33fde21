"""Exact scalars, super vector spaces, pairings and sparse linear algebra."""
from .field import FieldError, FieldSpec, QQ, UnsupportedCharacteristic
from .linalg import (
    Subspace,
    columns_to_rows,
    dense_rank,
    determinant,
    inverse,
    kernel,
    kernel_of_map,
    matmul,
    rank,
    rref,
    solve,
    vadd,
    vaxpy,
    vprune,
    vscale,
    vsum,
)
from .spaces import (
    PairingData,
    SuperSpace,
    SuperVector,
    annihilator,
    compose_maps,
    koszul_swap,
    tensor_pairing,
)


def solve_kernel(matrix, field: FieldSpec) -> list[list]:
    """Null space of a dense matrix (list of rows) as dense vectors, canonical form."""
    ncols = len(matrix[0]) if matrix else 0
    rows = [{j: field(x) for j, x in enumerate(r) if x != 0} for r in matrix]
    ker = kernel(rows, range(ncols), field)
    return [[v.get(j, field.zero) for j in range(ncols)] for v in ker]


__all__ = [
    "FieldError",
    "FieldSpec",
    "PairingData",
    "QQ",
    "Subspace",
    "SuperSpace",
    "SuperVector",
    "UnsupportedCharacteristic",
    "annihilator",
    "columns_to_rows",
    "compose_maps",
    "dense_rank",
    "determinant",
    "inverse",
    "kernel",
    "kernel_of_map",
    "koszul_swap",
    "matmul",
    "rank",
    "rref",
    "solve",
    "solve_kernel",
    "tensor_pairing",
    "vadd",
    "vaxpy",
    "vprune",
    "vscale",
    "vsum",
]
