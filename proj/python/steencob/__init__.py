"""Steenrod squares, Stiefel-Whitney numbers and unoriented cobordism."""

from ._core import (
    Error,
    InvalidArgument,
    InvariantViolation,
    Manifold,
    ParseError,
    PreconditionError,
    UnsupportedDimension,
    __version__,
    adem_expand,
    adem_reduce,
    adem_reduce_terms,
    admissible_basis,
    are_cobordant,
    binom_mod_p,
    bordism_of_space_dim,
    dold_generator,
    multiply,
    nondyadic_partitions,
    omega_dim,
    run_cli,
    weak_integral_bordism_dim,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "InvariantViolation",
    "Manifold",
    "ParseError",
    "PreconditionError",
    "UnsupportedDimension",
    "__version__",
    "adem_expand",
    "adem_reduce",
    "adem_reduce_terms",
    "admissible_basis",
    "are_cobordant",
    "binom_mod_p",
    "bordism_of_space_dim",
    "dold_generator",
    "multiply",
    "nondyadic_partitions",
    "omega_dim",
    "run_cli",
    "weak_integral_bordism_dim",
]
