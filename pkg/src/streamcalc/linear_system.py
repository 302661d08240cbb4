"""Finite-dimensional linear systems with outputs, and their stream behaviour.

A system is a state space k^n with an n x n transition matrix and an m x n
output matrix.  Its behaviour at a state is the vector of rational streams
obtained by iterating the dynamics and observing outputs; symbolically that is
the output matrix times the transition's resolvent.  This module also builds
the minimal realization of a vector of rational streams out of its derivative
chain, and minimizes a given system through its observability matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .errors import (
    FieldMismatch,
    FormatError,
    ShapeMismatch,
    UnsupportedInitialVector,
)
from .fields import Field, field_from_spec
from .matrix import (
    Matrix,
    format_matrix,
    format_vector,
    inverse,
    parse_matrix,
    parse_vector,
    rank,
    resolvent_streams,
    rref,
    vstack,
)
from .ratstream import RationalStream


@dataclass(frozen=True)
class LinearSystem:
    """State space k^n with dynamics (n x n) and output map (m x n)."""

    dynamics: Matrix
    output: Matrix

    def __post_init__(self):
        if self.dynamics.rows != self.dynamics.cols:
            raise ShapeMismatch("dynamics matrix must be square")
        if self.output.cols != self.dynamics.rows:
            raise ShapeMismatch("output matrix width must match the dimension")
        if self.output.rows < 1:
            raise ShapeMismatch("at least one output row is required")
        if self.output.domain != self.dynamics.domain:
            raise FieldMismatch("dynamics and output over different fields")

    @property
    def field(self) -> Field:
        return self.dynamics.domain

    @property
    def dim(self) -> int:
        return self.dynamics.rows

    @property
    def num_outputs(self) -> int:
        return self.output.rows

    def behaviour(self, state: Sequence) -> Tuple[RationalStream, ...]:
        """The stream vector emitted from ``state``: output o resolvent o state."""
        inner = resolvent_streams(self.dynamics, state)
        out = []
        for i in range(self.num_outputs):
            acc = RationalStream.zero(self.field)
            for j in range(self.dim):
                acc = acc + inner[j].scale(self.output.entries[i][j])
            out.append(acc)
        return tuple(out)

    def step_outputs(self, state: Sequence, steps: int) -> List[Tuple]:
        """First ``steps`` output vectors by iterated matrix-vector products."""
        current = tuple(self.field.coerce(v) for v in state)
        outputs = []
        for _ in range(steps):
            outputs.append(self.output.apply(current))
            current = self.dynamics.apply(current)
        return outputs


@dataclass(frozen=True)
class PointedLinearSystem:
    """A linear system with a designated initial state."""

    system: LinearSystem
    initial: Tuple

    def __post_init__(self):
        coerced = tuple(self.system.field.coerce(v) for v in self.initial)
        if len(coerced) != self.system.dim:
            raise ShapeMismatch("initial state length must equal the dimension")
        object.__setattr__(self, "initial", coerced)

    @property
    def field(self) -> Field:
        return self.system.field

    @property
    def dim(self) -> int:
        return self.system.dim

    def behaviour(self) -> Tuple[RationalStream, ...]:
        return self.system.behaviour(self.initial)

    def step_outputs(self, steps: int) -> List[Tuple]:
        return self.system.step_outputs(self.initial, steps)


def _embedding_widths(streams: Sequence[RationalStream]) -> List[int]:
    # Differentiation keeps each (reduced) denominator fixed, and no iterated
    # numerator exceeds max(deg num, deg den) in degree, so every derivative
    # vector embeds into a fixed product of coefficient spaces.
    return [max(s.num.degree, s.den.degree) + 1 for s in streams]


def realize(streams: Sequence[RationalStream]) -> PointedLinearSystem:
    """Minimal linear representation of a vector of rational streams.

    Iterates the componentwise stream derivative, embedding each derivative
    vector as numerator coefficients over the fixed denominators, and runs an
    incremental Gaussian elimination that tracks how each reduced row combines
    the chain.  The first dependent derivative yields the companion-form
    transition matrix (subdiagonal 1s, dependence coefficients in the last
    column); the output matrix collects initial values columnwise; the initial
    state is the first standard basis vector.
    """
    streams = tuple(streams)
    if not streams:
        raise ShapeMismatch("realize needs at least one stream")
    field = streams[0].field
    for s in streams:
        if s.field != field:
            raise FieldMismatch("streams over different fields")
    widths = _embedding_widths(streams)
    total = sum(widths)
    zero = field.zero()

    def embed(vector: Tuple[RationalStream, ...]) -> List:
        coords: List = []
        for s, width in zip(vector, widths):
            assert s.num.degree < width, "derivative numerator outgrew its space"
            coords.extend(s.num.coefficient(i) for i in range(width))
        return coords

    chain: List[Tuple[RationalStream, ...]] = []
    # rows: (reduced coordinates with unit pivot, pivot index,
    #        combination of chain elements producing those coordinates)
    rows: List[Tuple[List, int, List]] = []
    current = streams
    dependence: List = []
    while True:
        residual = embed(current)
        used = [zero] * len(chain)
        for row, pivot, combo in rows:
            factor = residual[pivot]
            if factor == zero:
                continue
            residual = [a - factor * b for a, b in zip(residual, row)]
            for j, c in enumerate(combo):
                used[j] = used[j] + factor * c
        pivot = next((i for i, v in enumerate(residual) if v != zero), None)
        if pivot is None:
            dependence = used
            break
        assert len(chain) < total, "derivative chain exceeded its dimension bound"
        inv = field.inv(residual[pivot])
        row = [inv * v for v in residual]
        combo = [-inv * u for u in used] + [inv]
        chain.append(current)
        rows.append((row, pivot, combo))
        current = tuple(s.derivative() for s in current)

    n = len(chain)
    one = field.one()
    transition_rows = []
    for i in range(n):
        row = [zero] * n
        if i >= 1:
            row[i - 1] = one  # derivative sends basis element i-1 to i
        row[n - 1] = dependence[i]  # last column: the dependence coefficients
        transition_rows.append(row)
    transition = Matrix(field, transition_rows, cols=n)
    output = Matrix(
        field,
        (
            (chain[j][i].initial_value() for j in range(n))
            for i in range(len(streams))
        ),
        cols=n,
    )
    initial = tuple(one if i == 0 else zero for i in range(n))
    return PointedLinearSystem(LinearSystem(transition, output), initial)


def observability_matrix(system: LinearSystem) -> Matrix:
    """Stack of output * dynamics^i for i < dim; its kernel is unobservability."""
    blocks = []
    block = system.output
    for _ in range(system.dim):
        blocks.append(block)
        block = block * system.dynamics
    if not blocks:
        return Matrix.zero(system.field, 0, 0)
    return vstack(*blocks)


def states_equivalent(system: LinearSystem, first: Sequence, second: Sequence) -> bool:
    """Whether two states have the same behaviour (difference in the kernel)."""
    obs = observability_matrix(system)
    a = tuple(system.field.coerce(v) for v in first)
    b = tuple(system.field.coerce(v) for v in second)
    if len(a) != system.dim or len(b) != system.dim:
        raise ShapeMismatch("state vectors must match the dimension")
    diff = tuple(x - y for x, y in zip(a, b))
    zero = system.field.zero()
    return all(v == zero for v in obs.apply(diff))


def minimize(pointed: PointedLinearSystem) -> PointedLinearSystem:
    """Quotient by unobservable states; behaviour at the mapped point is kept.

    The reduced state space is the row space of the observability matrix.  A
    matrix whose rows are the nonzero rows of its reduced echelon form
    projects states onto it, and because the rows are in echelon form the
    reduced dynamics and output are read off at the pivot columns.
    """
    system = pointed.system
    if system.dim == 0:
        return pointed
    reduced, pivots = rref(observability_matrix(system))
    r = len(pivots)
    if r == system.dim:
        return pointed
    field = system.field
    projection = Matrix(field, (reduced.entries[i] for i in range(r)), cols=system.dim)
    projected_dynamics = projection * system.dynamics
    new_dynamics = Matrix(
        field,
        ((projected_dynamics.entries[i][p] for p in pivots) for i in range(r)),
        cols=r,
    )
    new_output = Matrix(
        field,
        ((system.output.entries[i][p] for p in pivots) for i in range(system.num_outputs)),
        cols=r,
    )
    new_initial = projection.apply(pointed.initial)
    return PointedLinearSystem(LinearSystem(new_dynamics, new_output), new_initial)


def change_basis(pointed: PointedLinearSystem, transform: Matrix) -> PointedLinearSystem:
    """Conjugate the system by an invertible matrix T: states map as T*state."""
    system = pointed.system
    if transform.rows != system.dim or transform.cols != system.dim:
        raise ShapeMismatch("basis change must be square of the system dimension")
    inv = inverse(transform)
    new_dynamics = transform * system.dynamics * inv
    new_output = system.output * inv
    return PointedLinearSystem(
        LinearSystem(new_dynamics, new_output), transform.apply(pointed.initial)
    )


def is_first_basis_vector(field: Field, vector: Sequence) -> bool:
    vec = tuple(field.coerce(v) for v in vector)
    if not vec:
        return False
    if vec[0] != field.one():
        return False
    zero = field.zero()
    return all(v == zero for v in vec[1:])


def standardize_initial_state(pointed: PointedLinearSystem) -> PointedLinearSystem:
    """Change basis so the initial state becomes (1, 0, ..., 0)."""
    field = pointed.field
    if is_first_basis_vector(field, pointed.initial):
        return pointed
    zero = field.zero()
    if all(v == zero for v in pointed.initial):
        raise UnsupportedInitialVector("zero initial state spans no direction")
    n = pointed.dim
    # complete the initial state to a basis, greedily adding standard vectors
    columns: List[Tuple] = [pointed.initial]
    for i in range(n):
        if len(columns) == n:
            break
        candidate = tuple(
            field.one() if j == i else zero for j in range(n)
        )
        trial = Matrix(field, zip(*(columns + [candidate])), cols=len(columns) + 1)
        if rank(trial) == len(columns) + 1:
            columns.append(candidate)
    basis = Matrix(field, zip(*columns), cols=n)
    return change_basis(pointed, inverse(basis))


SystemLike = Union[LinearSystem, PointedLinearSystem]


def format_system(obj: SystemLike) -> str:
    """System file format: field / n / m / F / H / optional v0 lines."""
    pointed = obj if isinstance(obj, PointedLinearSystem) else None
    system = pointed.system if pointed else obj
    field = system.field
    lines = [
        f"field {field.spec()}",
        f"n {system.dim}",
        f"m {system.num_outputs}",
    ]
    if system.dim > 0:
        lines.append(f"F {format_matrix(system.dynamics)}")
        lines.append(f"H {format_matrix(system.output)}")
    if pointed is not None:
        rendered = format_vector(field, pointed.initial)
        lines.append(f"v0 {rendered}" if rendered else "v0")
    return "\n".join(lines) + "\n"


def parse_system(text: str) -> SystemLike:
    entries = {}
    order = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" ")
        if key in entries:
            raise FormatError(f"duplicate key in system file: {key}")
        entries[key] = value.strip()
        order.append(key)
    for needed in ("field", "n", "m"):
        if needed not in entries:
            raise FormatError(f"system file missing key: {needed}")
    field = field_from_spec(entries["field"])
    try:
        n = int(entries["n"])
        m = int(entries["m"])
    except ValueError as exc:
        raise FormatError(f"bad dimension in system file: {exc}") from None
    if n < 0 or m < 1:
        raise FormatError("system file needs n >= 0 and m >= 1")
    if n == 0:
        dynamics = Matrix.zero(field, 0, 0)
        output = Matrix.zero(field, m, 0)
    else:
        if "F" not in entries or "H" not in entries:
            raise FormatError("system file missing F or H")
        dynamics = parse_matrix(field, entries["F"])
        output = parse_matrix(field, entries["H"])
        if dynamics.rows != n or dynamics.cols != n:
            raise FormatError("F dimensions disagree with n")
        if output.rows != m or output.cols != n:
            raise FormatError("H dimensions disagree with n, m")
    system = LinearSystem(dynamics, output)
    if "v0" not in entries:
        return system
    value = entries["v0"]
    initial = parse_vector(field, value) if value else ()
    if len(initial) != n:
        raise FormatError("v0 length disagrees with n")
    return PointedLinearSystem(system, initial)
