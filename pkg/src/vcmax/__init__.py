"""Concept classes in the binary n-cube: VC analysis, maximum classes, lifting
and shifting, and embeddings of classes into maximum classes."""

from .cube import (
    ConceptClass,
    CubeCollection,
    CubeSymmetry,
    Subcube,
    apply_symmetry,
    canonical_form,
    closed_below,
    complement,
    enumerate_k_cubes,
)
from .embedding import (
    embed_by_deficiency,
    embed_over_maximum_projection,
    find_deficiency_reducing_coordinate,
    maximum_embeddings,
    maximum_superclasses,
)
from .errors import (
    BudgetExceeded,
    InvariantViolation,
    NotMaximumError,
    ParseError,
    PreconditionError,
    StructuralError,
)
from .formats import format_cc, format_cubes, parse_cc, parse_cubes
from .liftshift import (
    closed_below_maximum,
    enumerate_maximum_classes,
    lift_plan,
    shift_down,
    shift_to_closed_below,
    split_components,
)
from .reductions import (
    face_graph,
    is_maximum_via_trees,
    iterated_reduction,
    project_drop,
    reduction,
    unique_complete_collection,
)
from .vc import (
    deficiency,
    is_maximal,
    is_maximum,
    phi,
    sauer_bound,
    vc_dimension,
)

__all__ = [
    "BudgetExceeded",
    "ConceptClass",
    "CubeCollection",
    "CubeSymmetry",
    "InvariantViolation",
    "NotMaximumError",
    "ParseError",
    "PreconditionError",
    "StructuralError",
    "Subcube",
    "apply_symmetry",
    "canonical_form",
    "closed_below",
    "closed_below_maximum",
    "complement",
    "deficiency",
    "embed_by_deficiency",
    "embed_over_maximum_projection",
    "enumerate_k_cubes",
    "enumerate_maximum_classes",
    "face_graph",
    "find_deficiency_reducing_coordinate",
    "format_cc",
    "format_cubes",
    "is_maximal",
    "is_maximum",
    "is_maximum_via_trees",
    "iterated_reduction",
    "lift_plan",
    "maximum_embeddings",
    "maximum_superclasses",
    "parse_cc",
    "parse_cubes",
    "phi",
    "project_drop",
    "reduction",
    "sauer_bound",
    "shift_down",
    "shift_to_closed_below",
    "split_components",
    "unique_complete_collection",
    "vc_dimension",
]
