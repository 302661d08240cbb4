"""Cross-representation equivalence and the Hankel-rank rationality prober.

Every finite representation (closed form, pointed linear system, canonical
circuit, automaton state) denotes exactly one rational stream, so equivalence
reduces to equality of closed forms.  For raw coefficient prefixes, the rank
of the Hankel matrix H[i][j] = prefix[i+j] lower-bounds the dimension of the
derivative-generated subspace; a rank exceeding d rules out every rational
representation p/q with max(deg p, deg q) <= d.  Finite data never proves
non-rationality outright, so the prober reports a bounded verdict only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .circuit import CanonicalCircuit
from .errors import DimensionMismatch, FieldMismatch, InsufficientPrefix
from .fields import field_of
from .linear_system import PointedLinearSystem
from .matrix import Matrix, rank, solve
from .automaton import WeightedAutomaton
from .ratstream import RationalStream, valuation


@dataclass(frozen=True)
class AutomatonState:
    """A weighted automaton together with the state denoting the stream."""

    automaton: WeightedAutomaton
    state: int


Representation = Union[
    RationalStream, PointedLinearSystem, CanonicalCircuit, AutomatonState
]


def to_rational(representation: Representation) -> RationalStream:
    """The unique rational stream a representation denotes."""
    if isinstance(representation, RationalStream):
        return representation
    if isinstance(representation, PointedLinearSystem):
        if representation.system.num_outputs != 1:
            raise DimensionMismatch(
                "a stream representation needs a single-output system"
            )
        return representation.behaviour()[0]
    if isinstance(representation, CanonicalCircuit):
        return representation.behaviour()
    if isinstance(representation, AutomatonState):
        return representation.automaton.behaviour()[representation.state]
    raise TypeError(f"not a stream representation: {representation!r}")


def equivalent(first: Representation, second: Representation) -> bool:
    a, b = to_rational(first), to_rational(second)
    if a.field != b.field:
        raise FieldMismatch("representations over different fields")
    return a == b


def first_difference(first: Representation, second: Representation) -> Optional[int]:
    """Index of the first differing coefficient, or None when equal."""
    a, b = to_rational(first), to_rational(second)
    if a.field != b.field:
        raise FieldMismatch("representations over different fields")
    index = valuation(a - b)
    return None if index < 0 else index


@dataclass(frozen=True)
class RankReport:
    prefix_len: int
    hankel_size: int
    rank: int
    verdict: Optional[str] = None

    def render(self) -> str:
        lines = [
            f"prefix_len: {self.prefix_len}",
            f"hankel_size: {self.hankel_size}",
            f"rank: {self.rank}",
        ]
        if self.verdict is not None:
            lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def hankel_rank(prefix: Sequence, size: int) -> int:
    """Exact rank of the size x size Hankel matrix of the prefix.

    This lower-bounds the dimension of the smallest derivative-closed
    subspace containing the stream, and equals it for rational streams once
    the size is large enough.
    """
    if size < 0:
        raise ValueError("hankel size must be nonnegative")
    if size == 0:
        return 0
    if len(prefix) < 2 * size - 1:
        raise InsufficientPrefix(
            f"hankel size {size} needs at least {2 * size - 1} coefficients, "
            f"got {len(prefix)}"
        )
    field = field_of(prefix[0])
    rows = [[prefix[i + j] for j in range(size)] for i in range(size)]
    return rank(Matrix(field, rows, cols=size))


def nonrationality_probe(prefix: Sequence, bound: int) -> RankReport:
    """Check whether the prefix is consistent with rationality of degree <= bound.

    The verdict ``NotRationalBelowBound(d)`` means no rational stream p/q with
    max(deg p, deg q) <= d produces this prefix; it is finite evidence, never
    a full non-rationality proof.
    """
    if bound < 0:
        raise ValueError("claimed bound must be nonnegative")
    if len(prefix) < 2 * bound + 1:
        raise InsufficientPrefix(
            f"probing bound {bound} needs at least {2 * bound + 1} coefficients, "
            f"got {len(prefix)}"
        )
    observed = hankel_rank(prefix, bound + 1)
    if observed > bound:
        verdict = f"NotRationalBelowBound({bound})"
    else:
        verdict = "RationalWitnessConsistent"
    return RankReport(len(prefix), bound + 1, observed, verdict)


def fit_recurrence(prefix: Sequence, max_order: int) -> Optional[Tuple]:
    """Minimal linear recurrence satisfied by the whole prefix, if any.

    Returns coefficients (c_0, ..., c_{n-1}) with
    prefix[t+n] = sum_i c_i * prefix[t+i] for every window, scanning orders
    0..max_order and solving the windowed linear system exactly.  Meaningful
    as an oracle when the prefix has length >= 2 * max_order.  Independent of
    the symbolic derivative chain by design.
    """
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    if not prefix:
        return ()
    field = field_of(prefix[0])
    zero = field.zero()
    for order in range(0, max_order + 1):
        if order == 0:
            if all(c == zero for c in prefix):
                return ()
            continue
        window_count = len(prefix) - order
        if window_count < 1:
            return None
        rows = [[prefix[t + i] for i in range(order)] for t in range(window_count)]
        rhs = [prefix[t + order] for t in range(window_count)]
        solution = solve(Matrix(field, rows, cols=order), rhs)
        if solution is not None:
            return solution
    return None
