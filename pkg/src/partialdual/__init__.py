"""Exact-arithmetic engine for partially admissible mapping systems and
partial dualization of finite-dimensional Hopf algebras over Q or F_p."""

from partialdual.linalg import (
    QQ,
    FieldMismatchError,
    Matrix,
    ModInt,
    PrimeField,
    Tensor3,
    Vector,
    contract,
    field_from_descriptor,
    nullspace,
    rref,
    solve,
    subspace_basis,
)

__version__ = "0.1.0"
