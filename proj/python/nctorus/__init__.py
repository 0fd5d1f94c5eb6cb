from ._core import (
    HypothesisError,
    InconclusiveError,
    InputError,
    Scalar,
    StructuralError,
    TorusElement,
    apply_generator,
    diagram,
    equation_diagram,
    reduce,
    sector,
    table,
    twisted_b1,
    twisted_b2,
)

__all__ = [
    "HypothesisError",
    "InconclusiveError",
    "InputError",
    "Scalar",
    "StructuralError",
    "TorusElement",
    "apply_generator",
    "diagram",
    "equation_diagram",
    "reduce",
    "sector",
    "table",
    "twisted_b1",
    "twisted_b2",
]
