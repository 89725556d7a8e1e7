"""Modular classes of finite groupoid representations, exactly.

The pipeline: a finite groupoid acts on per-object chain complexes by
chain maps, functorially up to homotopy; invertible replacement makes
the Berezinian of each arrow well defined; the resulting scalar cocycle
is strictly functorial and its cohomology class (trivial or not, with a
witness or obstructions) is the modular class.
"""

from fractions import Fraction

from .linalg import (
    Matrix,
    Rational,
    det,
    det_and_inverse,
    extend_to_basis,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    rref,
    solve,
)
from .complexes import (
    BlockForm,
    ChainMap,
    ComplexFiber,
    Decomposition,
    GradedDimensionMismatch,
    Homotopy,
    NotHomotopyEquivalence,
    ValidationReport,
    are_homotopic,
    berezinian,
    berezinian_class,
    block_form,
    cohomology_dims,
    decompose,
    invertible_replacement,
    is_homotopy_equivalence,
    null_homotopy,
    verify_chain_map,
    verify_complex,
)
from .groupoid import (
    ClassReport,
    Cochain,
    FiniteGroupoid,
    GroupTable,
    action_groupoid,
    class_equal,
    coboundary,
    coboundary_solve_1,
    composable_tuples,
    connected_groupoid,
    cyclic_groupoid,
    disjoint_union,
    is_cocycle_1,
    pair_groupoid,
    validate,
)
from .reps import (
    LineRep,
    RepUpToWeakHomotopy,
    Trivialization,
    VectorRep,
    abs_plus_function,
    characteristic_function,
    cohomology_representation,
    det_representation,
    induced_ber_rep,
    modular_class_ruth,
    modular_class_vector,
    regular_factorization_check,
    strict_as_homotopy,
    tensor,
    verify_line_rep,
    verify_ruth,
    verify_vector_rep,
)
from .schema import InputDocument, SchemaError, parse, parse_data, serialize

__version__ = "0.1.0"
