"""Exact rational linear algebra.

Entries are :class:`fractions.Fraction`, which are always stored in lowest
terms with a positive denominator. Matrices are immutable and row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/7"`` to a Fraction.

    Floats are refused: they would smuggle rounding into an exact pipeline.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction or 'p/q' string")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} matrix, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
        """Build from nested sequences. ``cols`` is needed only when there are no rows."""
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if cols is not None and cols != width:
            raise ValueError(f"rows have {width} columns, expected {cols}")
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def identity(cls, size: int) -> RatMatrix:
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], cols=size)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RatMatrix:
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def select_columns(self, columns: Iterable[int]) -> RatMatrix:
        columns = list(columns)
        return RatMatrix.from_rows([[r[c] for c in columns] for r in self.to_rows()], cols=len(columns))


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination. Mutates ``rows``."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def row_space_basis(m: RatMatrix) -> RatMatrix:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    basis, _ = _rref(m.to_rows(), m.cols)
    return RatMatrix.from_rows(basis, cols=m.cols)


def pivot_columns(m: RatMatrix) -> list[int]:
    return _rref(m.to_rows(), m.cols)[1]


def rank(m: RatMatrix) -> int:
    return len(pivot_columns(m))


def is_rref(m: RatMatrix) -> bool:
    last = -1
    for i in range(m.rows):
        row = m.row(i)
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None or lead <= last or row[lead] != 1:
            return False
        if any(m.row(k)[lead] != 0 for k in range(m.rows) if k != i):
            return False
        last = lead
    return True


def in_row_space(vector: Sequence, span: RatMatrix) -> bool:
    if len(vector) != span.cols:
        raise ValueError(f"vector has length {len(vector)}, span has {span.cols} columns")
    stacked = RatMatrix.from_rows(span.to_rows() + [list(vector)], cols=span.cols)
    return rank(stacked) == rank(span)


def quotient_dimension(ambient_dim: int, span: RatMatrix) -> int:
    """Dimension of ``Q^ambient_dim`` modulo the row space of ``span``."""
    if span.cols != ambient_dim:
        raise ValueError(f"span has {span.cols} columns but the ambient space has dimension {ambient_dim}")
    return ambient_dim - rank(span)
