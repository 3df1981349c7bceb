"""Exact computations with twisted enveloping algebras of color Lie algebras."""

from .scalars import Cyc, CycField, ScalarParseError, format_scalar, parse_scalar
from .grading import Bicharacter, GroupSpec, Violation
from .colorlie import (
    ColorLieAlgebra,
    Cocycle2,
    central_extension,
    coboundary,
    h2_scalar,
    is_cohomologous,
    validate_algebra,
    validate_cocycle,
)
from .enveloping import (
    EnvelopingAlgebra,
    UntrustedAlgebra,
    bracket_in_U,
    check_overlaps,
    dims,
    filtered_iso,
    multiply,
    normal_form,
)
from .repmodule import GradedModule, adjoint_truncated, induce_action, trivial_module, validate_module
from .cohomology import (
    coboundary_matrix,
    cohomology_dims,
    hochschild_truncated,
    resolution_d,
    verify_complex,
    verify_resolution,
    wedge_basis,
)
from .hopf import antipode, braided_mul, check_hopf_axioms, coproduct, counit, hopf_ideal_check

__version__ = "0.1.0"

__all__ = [
    "Cyc",
    "CycField",
    "ScalarParseError",
    "format_scalar",
    "parse_scalar",
    "Bicharacter",
    "GroupSpec",
    "Violation",
    "ColorLieAlgebra",
    "Cocycle2",
    "central_extension",
    "coboundary",
    "h2_scalar",
    "is_cohomologous",
    "validate_algebra",
    "validate_cocycle",
    "EnvelopingAlgebra",
    "UntrustedAlgebra",
    "bracket_in_U",
    "check_overlaps",
    "dims",
    "filtered_iso",
    "multiply",
    "normal_form",
    "GradedModule",
    "adjoint_truncated",
    "induce_action",
    "trivial_module",
    "validate_module",
    "coboundary_matrix",
    "cohomology_dims",
    "hochschild_truncated",
    "resolution_d",
    "verify_complex",
    "verify_resolution",
    "wedge_basis",
    "antipode",
    "braided_mul",
    "check_hopf_axioms",
    "coproduct",
    "counit",
    "hopf_ideal_check",
]
