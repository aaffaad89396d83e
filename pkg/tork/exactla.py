"""
`tork.exactla` implements exact sparse linear algebra over the rationals.

Everything here runs on `fractions.Fraction`, there is no floating point anywhere.

Main parts:
- `SparseRationalMatrix`: immutable row-dictionary matrix
- `rank`, `nullity`, `compose`: the operations every homology computation needs
"""

from fractions import Fraction
from functools import cached_property
from typing import Iterable,Iterator

from .exceptions import RejectedInputError


Rational = Fraction

__all__ = (
    "Rational",
    "SparseRationalMatrix",
    "rank",
    "nullity",
    "compose",
    "parse_rational",
    "format_rational",
)



def parse_rational(value:int|str|Fraction) -> Fraction:
    """Parses `"p/q"`, `"p"` or an integer into a `Fraction` in lowest terms."""
    if isinstance(value, bool) or not isinstance(value, (int,str,Fraction)):
        raise RejectedInputError(f"`{value!r}` is not a rational number")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise RejectedInputError(f"`{value}` is not a rational number ({e})") from None


def format_rational(value:Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"



class SparseRationalMatrix:
    """
    Exact rational matrix storing only its nonzero entries, row by row.

    Instances are immutable: constructors copy their input, and every operation
    returns a new matrix. `rank` eliminates on a private copy.

    Example:
    --------
    ```python
    >>> A = SparseRationalMatrix.from_dense([[1, 2], [2, 4]])
    >>> A.rank()
    1
    >>> A.nullity()
    1
    ```
    """
    def __init__(self, rows:int, cols:int, entries:Iterable[tuple[int,int,int|str|Fraction]]=()):
        if rows < 0 or cols < 0:
            raise RejectedInputError(f"matrix shape must be non-negative, got {rows}x{cols}")
        self._rows_count = rows
        self._cols_count = cols
        data : dict[int, dict[int, Fraction]] = {}
        for r,c,value in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise RejectedInputError(f"entry ({r}, {c}) out of range for a {rows}x{cols} matrix")
            row = data.setdefault(r, {})
            if c in row:
                raise RejectedInputError(f"duplicate entry at ({r}, {c})")
            value = parse_rational(value)
            if value:
                row[c] = value
        self._rows = {r:row for r,row in data.items() if row}

    @classmethod
    def _from_rows(cls, rows:int, cols:int, data:dict[int, dict[int, Fraction]]) -> "SparseRationalMatrix":
        # trusted internal constructor, `data` must already be clean and owned
        matrix = cls.__new__(cls)
        matrix._rows_count = rows
        matrix._cols_count = cols
        matrix._rows = data
        return matrix

    @classmethod
    def zero(cls, rows:int, cols:int) -> "SparseRationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n:int) -> "SparseRationalMatrix":
        return cls._from_rows(n, n, {i:{i:Fraction(1)} for i in range(n)})

    @classmethod
    def from_dense(cls, dense:list[list[int|str|Fraction]], cols:int|None=None) -> "SparseRationalMatrix":
        """Builds a matrix from a list of rows.

        Args:
            dense (list[list]): rows of the matrix
            cols (int, optional): column count, only needed when `dense` has no rows
        """
        if cols is None:
            cols = len(dense[0]) if dense else 0
        for row in dense:
            if len(row) != cols:
                raise RejectedInputError("all rows of a dense matrix must have the same length")
        entries = ((r,c,value) for r,row in enumerate(dense) for c,value in enumerate(row))
        return cls(len(dense), cols, entries)


    @property
    def rows(self) -> int:
        return self._rows_count

    @property
    def cols(self) -> int:
        return self._cols_count

    @property
    def shape(self) -> tuple[int,int]:
        return (self._rows_count, self._cols_count)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def entries(self) -> Iterator[tuple[int,int,Fraction]]:
        """Yields `(row, col, value)` for every nonzero entry in row-major order."""
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def __getitem__(self, position:tuple[int,int]) -> Fraction:
        r,c = position
        if not (0 <= r < self._rows_count and 0 <= c < self._cols_count):
            raise IndexError(f"({r}, {c}) out of range for a {self._rows_count}x{self._cols_count} matrix")
        return self._rows.get(r, {}).get(c, Fraction(0))

    @cached_property
    def _columns(self) -> dict[int, tuple[tuple[int,Fraction], ...]]:
        columns : dict[int, list[tuple[int,Fraction]]] = {}
        for r,c,value in self.entries():
            columns.setdefault(c, []).append((r, value))
        return {c:tuple(col) for c,col in columns.items()}

    def column(self, c:int) -> tuple[tuple[int,Fraction], ...]:
        """Nonzero entries of column `c` as `(row, value)` pairs, by increasing row."""
        return self._columns.get(c, ())

    def to_dense(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)]*self._cols_count for _ in range(self._rows_count)]
        for r,c,value in self.entries():
            dense[r][c] = value
        return dense


    def transpose(self) -> "SparseRationalMatrix":
        data : dict[int, dict[int, Fraction]] = {}
        for r,row in self._rows.items():
            for c,value in row.items():
                data.setdefault(c, {})[r] = value
        return self._from_rows(self._cols_count, self._rows_count, data)

    @property
    def T(self) -> "SparseRationalMatrix":
        return self.transpose()

    def compose(self, other:"SparseRationalMatrix") -> "SparseRationalMatrix":
        """Exact product `self · other`."""
        if self._cols_count != other._rows_count:
            raise RejectedInputError(
                f"cannot compose a {self._rows_count}x{self._cols_count} matrix "
                f"with a {other._rows_count}x{other._cols_count} matrix"
            )
        data : dict[int, dict[int, Fraction]] = {}
        for r,row in self._rows.items():
            acc : dict[int, Fraction] = {}
            for k,a in row.items():
                for c,b in other._rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + a*b
            acc = {c:value for c,value in acc.items() if value}
            if acc:
                data[r] = acc
        return self._from_rows(self._rows_count, other._cols_count, data)

    __matmul__ = compose

    def rank(self) -> int:
        """Rank over Q by sparse Gaussian elimination on a private copy.

        Rows are fed sparsest first; each one is reduced against the pivot rows
        of its leading column until it either vanishes or opens a new pivot.
        Pivot rows are normalized to a leading 1.
        """
        pivots : dict[int, dict[int, Fraction]] = {}
        for source in sorted(self._rows.values(), key=len):
            row = dict(source)
            while row:
                lead = min(row)
                pivot = pivots.get(lead)
                if pivot is None:
                    scale = row[lead]
                    if scale != 1:
                        row = {c:value/scale for c,value in row.items()}
                    pivots[lead] = row
                    break
                factor = row[lead]
                for c,value in pivot.items():
                    new = row.get(c, 0) - factor*value
                    if new:
                        row[c] = new
                    else:
                        row.pop(c, None)
        return len(pivots)

    def nullity(self) -> int:
        return self._cols_count - self.rank()


    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseRationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, tuple(self.entries())))

    def __repr__(self) -> str:
        return f"SparseRationalMatrix({self._rows_count}x{self._cols_count}, nnz={self.nnz})"



def rank(A:SparseRationalMatrix) -> int:
    return A.rank()


def nullity(A:SparseRationalMatrix) -> int:
    return A.nullity()


def compose(A:SparseRationalMatrix, B:SparseRationalMatrix) -> SparseRationalMatrix:
    return A.compose(B)
