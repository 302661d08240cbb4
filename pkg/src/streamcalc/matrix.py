"""Exact dense matrices over a scalar field or over the fraction field k(X).

One :class:`Matrix` class serves both: the ``domain`` attribute (a field
descriptor or a :class:`~streamcalc.poly.FractionField`) supplies identities
and coercion, and every entry operation is exact, so Gaussian elimination,
rank, kernel and inversion work uniformly.  Entries of k(X) matrices are kept
reduced after every step because :class:`RationalFunction` normalizes on
construction.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import FieldMismatch, FormatError, ShapeMismatch, SingularMatrix
from .fields import Field
from .poly import FractionField, Polynomial, RationalFunction
from .ratstream import RationalStream


class Matrix:
    __slots__ = ("domain", "rows", "cols", "entries")

    def __init__(self, domain, rows_of_entries: Iterable[Iterable], cols: Optional[int] = None):
        table = tuple(tuple(domain.coerce(e) for e in row) for row in rows_of_entries)
        if table:
            widths = {len(row) for row in table}
            if len(widths) != 1:
                raise ShapeMismatch("ragged matrix rows")
            cols_found = widths.pop()
            if cols is not None and cols != cols_found:
                raise ShapeMismatch("explicit column count disagrees with rows")
            cols = cols_found
        elif cols is None:
            cols = 0
        self.domain = domain
        self.rows = len(table)
        self.cols = cols
        self.entries = table

    @classmethod
    def zero(cls, domain, rows: int, cols: int):
        z = domain.zero()
        return cls(domain, ((z,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def identity(cls, domain, n: int):
        z, o = domain.zero(), domain.one()
        return cls(
            domain,
            ((o if i == j else z for j in range(n)) for i in range(n)),
            cols=n,
        )

    @classmethod
    def column(cls, domain, vector: Sequence):
        return cls(domain, ((v,) for v in vector), cols=1)

    @classmethod
    def row_vector(cls, domain, vector: Sequence):
        return cls(domain, (tuple(vector),), cols=len(tuple(vector)))

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple:
        return self.entries[i]

    def column_tuple(self, j: int) -> Tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def _check(self, other: "Matrix"):
        if other.domain != self.domain:
            raise FieldMismatch("matrices over different domains")

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        return Matrix(
            self.domain,
            (
                (a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            cols=self.cols,
        )

    def __sub__(self, other):
        return self + other.scale(-self.domain.one())

    def __mul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = self.domain.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.domain, out, cols=other.cols)

    def scale(self, c):
        c = self.domain.coerce(c)
        return Matrix(
            self.domain, ((c * e for e in row) for row in self.entries), cols=self.cols
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.domain,
            ((self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
            cols=self.rows,
        )

    def apply(self, vector: Sequence) -> Tuple:
        """Matrix-vector product, on plain tuples."""
        vec = tuple(self.domain.coerce(v) for v in vector)
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vec)} for {self.cols} columns")
        zero = self.domain.zero()
        out = []
        for i in range(self.rows):
            acc = zero
            for j in range(self.cols):
                acc = acc + self.entries[i][j] * vec[j]
            out.append(acc)
        return tuple(out)

    def map_to(self, domain) -> "Matrix":
        """Re-coerce every entry into another domain (e.g. k into k(X))."""
        return Matrix(domain, self.entries, cols=self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.domain, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.domain!r}, {[list(r) for r in self.entries]!r}, cols={self.cols})"

    def __str__(self):
        return format_matrix(self)


def vstack(top: Matrix, *rest: Matrix) -> Matrix:
    rows = list(top.entries)
    for m in rest:
        top._check(m)
        if m.cols != top.cols:
            raise ShapeMismatch("stacked matrices must share a column count")
        rows.extend(m.entries)
    return Matrix(top.domain, rows, cols=top.cols)


def _eliminate(matrix: Matrix):
    """Reduced row echelon form; returns (rows as lists, pivot columns)."""
    zero = matrix.domain.zero()
    rows = [list(r) for r in matrix.entries]
    pivots: List[int] = []
    pivot_row = 0
    for col in range(matrix.cols):
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != zero:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        inv = rows[pivot_row][col]
        rows[pivot_row] = [e / inv for e in rows[pivot_row]]
        for r in range(len(rows)):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor == zero:
                continue
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows, pivots


def rref(matrix: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    rows, pivots = _eliminate(matrix)
    return Matrix(matrix.domain, rows, cols=matrix.cols), tuple(pivots)


def rank(matrix: Matrix) -> int:
    return len(_eliminate(matrix)[1])


def kernel_basis(matrix: Matrix) -> List[Tuple]:
    """Basis of the null space in reduced echelon parametrization."""
    rows, pivots = _eliminate(matrix)
    zero, one = matrix.domain.zero(), matrix.domain.one()
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vec = [zero] * matrix.cols
        vec[free] = one
        for row_index, pivot_col in enumerate(pivots):
            vec[pivot_col] = -rows[row_index][free]
        basis.append(tuple(vec))
    return basis


def inverse(matrix: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination on the augmented matrix."""
    if matrix.rows != matrix.cols:
        raise ShapeMismatch("only square matrices can be inverted")
    n = matrix.rows
    ident = Matrix.identity(matrix.domain, n)
    augmented = Matrix(
        matrix.domain,
        (tuple(matrix.entries[i]) + tuple(ident.entries[i]) for i in range(n)),
        cols=2 * n,
    )
    rows, pivots = _eliminate(augmented)
    if list(pivots) != list(range(n)):
        raise SingularMatrix("matrix has zero determinant")
    return Matrix(matrix.domain, (row[n:] for row in rows), cols=n)


def solve(matrix: Matrix, rhs: Sequence) -> Optional[Tuple]:
    """One exact solution of M x = rhs (free variables set to 0), or None."""
    vec = tuple(matrix.domain.coerce(v) for v in rhs)
    if len(vec) != matrix.rows:
        raise ShapeMismatch("right-hand side length does not match row count")
    augmented = Matrix(
        matrix.domain,
        (tuple(matrix.entries[i]) + (vec[i],) for i in range(matrix.rows)),
        cols=matrix.cols + 1,
    )
    rows, pivots = _eliminate(augmented)
    if matrix.cols in pivots:
        return None  # inconsistent
    zero = matrix.domain.zero()
    solution = [zero] * matrix.cols
    for row_index, pivot_col in enumerate(pivots):
        solution[pivot_col] = rows[row_index][matrix.cols]
    return tuple(solution)


def _shifted_complement(transition: Matrix) -> Matrix:
    """I - X*F over k(X) for a square matrix F over the field k."""
    if transition.rows != transition.cols:
        raise ShapeMismatch("resolvent needs a square matrix")
    field = transition.domain
    if isinstance(field, FractionField):
        raise FieldMismatch("resolvent expects a matrix over the scalar field")
    kx = FractionField(field)
    n = transition.rows
    one = Polynomial.one(field)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            diag = one if i == j else Polynomial.zero(field)
            shifted = Polynomial.monomial(field, transition.entries[i][j], 1)
            row.append(RationalFunction.from_polynomial(diag - shifted))
        entries.append(row)
    return Matrix(kx, entries, cols=n)


def resolvent(transition: Matrix) -> Matrix:
    """(I - X*F)^-1 over k(X) for a square matrix F over the field k.

    Always invertible: det(I - X*F) has constant term 1.  Every entry has a
    denominator that is nonzero at 0, so entries reinterpret as rational
    streams; by construction the expansion of entry (i, j) enumerates the
    powers (F^t)_{ij}.
    """
    return inverse(_shifted_complement(transition))


def resolvent_streams(transition: Matrix, vector: Sequence) -> Tuple[RationalStream, ...]:
    """(I - X*F)^-1 applied to a constant vector, as rational streams.

    Solves the single linear system instead of inverting the whole matrix.
    """
    system = _shifted_complement(transition)
    kx = system.domain
    solution = solve(system, [kx.coerce(v) for v in vector])
    assert solution is not None  # I - X*F is invertible over k(X)
    return tuple(RationalStream.from_fraction(entry) for entry in solution)


def format_matrix(matrix: Matrix) -> str:
    """Matrix text format: rows joined by ';', entries by ','."""
    return ";".join(
        ",".join(matrix.domain.format(e) for e in row) for row in matrix.entries
    )


def parse_matrix(field: Field, text: str) -> Matrix:
    """Parse the matrix text format over a scalar field."""
    rows = []
    for row_text in text.strip().split(";"):
        cells = row_text.split(",")
        if cells == [""]:
            raise FormatError("empty matrix row")
        rows.append([field.parse(cell) for cell in cells])
    return Matrix(field, rows)


def parse_vector(field: Field, text: str) -> Tuple:
    return tuple(field.parse(cell) for cell in text.strip().split(","))


def format_vector(field: Field, vector: Sequence) -> str:
    return ",".join(field.format(v) for v in vector)
