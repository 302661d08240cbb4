"""Exact stream calculus over Q or GF(p).

Rational streams and constructive conversions between their four finite
faces: closed-form quotients of polynomials, finite-dimensional linear
systems, canonical stream circuits, and weighted stream automata; plus a
Hankel-rank prober for evidence of non-rationality.
"""

from .analysis import (
    AutomatonState,
    RankReport,
    equivalent,
    first_difference,
    fit_recurrence,
    hankel_rank,
    nonrationality_probe,
    to_rational,
)
from .automaton import WeightedAutomaton, format_automaton, parse_automaton
from .circuit import (
    Adder,
    CanonicalCircuit,
    Copier,
    Multiplier,
    Netlist,
    Register,
    format_canonical,
    format_netlist,
    parse_canonical,
    parse_circuit_file,
    parse_netlist,
)
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    FormatError,
    IllFormedCircuit,
    InsufficientPrefix,
    NotInvertibleAtZero,
    ParseError,
    ShapeMismatch,
    SingularMatrix,
    StreamCalcError,
    UnsupportedInitialVector,
    ZeroInitialValue,
)
from .expr import evaluate, evaluate_text, parse, to_text
from .fields import QQ, Field, PrimeField, field_from_spec, is_prime
from .linear_system import (
    LinearSystem,
    PointedLinearSystem,
    change_basis,
    format_system,
    minimize,
    observability_matrix,
    parse_system,
    realize,
    standardize_initial_state,
    states_equivalent,
)
from .matrix import (
    Matrix,
    format_matrix,
    inverse,
    kernel_basis,
    parse_matrix,
    rank,
    resolvent,
    resolvent_streams,
    rref,
    solve,
)
from .poly import FractionField, Polynomial, RationalFunction
from .prefix import StreamPrefix
from .ratstream import RationalStream, valuation

__all__ = [
    "QQ",
    "Field",
    "PrimeField",
    "field_from_spec",
    "is_prime",
    "Polynomial",
    "RationalFunction",
    "FractionField",
    "RationalStream",
    "valuation",
    "StreamPrefix",
    "Matrix",
    "rref",
    "rank",
    "kernel_basis",
    "inverse",
    "solve",
    "resolvent",
    "resolvent_streams",
    "format_matrix",
    "parse_matrix",
    "LinearSystem",
    "PointedLinearSystem",
    "realize",
    "minimize",
    "observability_matrix",
    "states_equivalent",
    "change_basis",
    "standardize_initial_state",
    "format_system",
    "parse_system",
    "CanonicalCircuit",
    "Netlist",
    "Multiplier",
    "Register",
    "Adder",
    "Copier",
    "format_netlist",
    "parse_netlist",
    "format_canonical",
    "parse_canonical",
    "parse_circuit_file",
    "WeightedAutomaton",
    "format_automaton",
    "parse_automaton",
    "AutomatonState",
    "RankReport",
    "to_rational",
    "equivalent",
    "first_difference",
    "hankel_rank",
    "nonrationality_probe",
    "fit_recurrence",
    "parse",
    "to_text",
    "evaluate",
    "evaluate_text",
    "StreamCalcError",
    "FieldMismatch",
    "NotInvertibleAtZero",
    "ZeroInitialValue",
    "ShapeMismatch",
    "SingularMatrix",
    "DimensionMismatch",
    "UnsupportedInitialVector",
    "IllFormedCircuit",
    "InsufficientPrefix",
    "ParseError",
    "FormatError",
]
