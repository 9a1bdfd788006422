"""ngoneq: exact matrix solutions of polygon equations, constructed and verified.

For any n >= 5 the package derives the two flip-move sequences of the polygon
equation, attaches an exact rational matrix to every move, extends the
matrices over the ambient triangulations, multiplies out both sides and checks
entrywise equality, all in exact arithmetic.
"""

from .errors import InternalError, InvalidInputError, MoveNotApplicableError
from .exactfield import (
    DenseMatrix,
    Rat,
    ZetaAssignment,
    mat_eq,
    mat_mul,
    mat_rank,
    rat_from_string,
    rat_to_string,
    vandermonde,
)
from .fvectors import (
    FVector,
    check_move_action,
    check_orthogonality,
    f_value,
    f_vector,
    g_value,
    stack_f_matrix,
)
from .pmatrix import (
    ActiveIndexMap,
    InterleavedFrame,
    build_p_matrix,
    extend_matrix,
    extended_matrices,
    p_entry_vandermonde,
    product_for_side,
)
from .simplicial import (
    MoveSequence,
    PachnerMove,
    Pair,
    Triangulation,
    apply_move,
    derive_move,
    equation_sequences,
    final_triangulation,
    initial_triangulation,
    pair_to_simplex,
    simplex_to_pair,
    triangulation_path,
)
from .verifier import (
    PropertyResult,
    VerificationReport,
    max_stack_rank,
    run_property_suite,
    verify_equation,
    verify_with_properties,
)
from .version import __version__

__all__ = [
    "ActiveIndexMap",
    "DenseMatrix",
    "FVector",
    "InterleavedFrame",
    "InternalError",
    "InvalidInputError",
    "MoveNotApplicableError",
    "MoveSequence",
    "PachnerMove",
    "Pair",
    "PropertyResult",
    "Rat",
    "Triangulation",
    "VerificationReport",
    "ZetaAssignment",
    "__version__",
    "apply_move",
    "build_p_matrix",
    "check_move_action",
    "check_orthogonality",
    "derive_move",
    "equation_sequences",
    "extend_matrix",
    "extended_matrices",
    "f_value",
    "f_vector",
    "final_triangulation",
    "g_value",
    "initial_triangulation",
    "mat_eq",
    "mat_mul",
    "mat_rank",
    "max_stack_rank",
    "p_entry_vandermonde",
    "pair_to_simplex",
    "product_for_side",
    "rat_from_string",
    "rat_to_string",
    "run_property_suite",
    "simplex_to_pair",
    "stack_f_matrix",
    "triangulation_path",
    "vandermonde",
    "verify_equation",
    "verify_with_properties",
]
