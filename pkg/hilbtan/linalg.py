#
# Exact linear algebra over the rationals
#
import heapq
from fractions import Fraction

import numpy as np


Rational = Fraction


def _as_rational(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class RationalMatrix:
    """
    Dense matrix of exact rationals backed by a numpy object array

    Args:
        data (list of lists or numpy.ndarray):
            Row-major entries. Anything accepted by ``fractions.Fraction`` can
            be used as an entry, including strings such as "3/4".
        cols (int):
            Number of columns, only needed for matrices with no rows.

    """

    def __init__(self, data, cols=None):
        if isinstance(data, RationalMatrix):
            data = data.array
        rows = [[_as_rational(x) for x in row] for row in data]
        if len(rows) == 0:
            ncols = 0 if cols is None else cols
            self.array = np.empty((0, ncols), dtype=object)
        else:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("All rows of a RationalMatrix must have equal length")
            self.array = np.empty((len(rows), ncols), dtype=object)
            for i, row in enumerate(rows):
                for j, x in enumerate(row):
                    self.array[i, j] = x

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns, rows):
        """Build a matrix whose j-th column is ``columns[j]``."""
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(data, cols=len(columns))

    @property
    def rows(self):
        return self.array.shape[0]

    @property
    def cols(self):
        return self.array.shape[1]

    @property
    def shape(self):
        return self.array.shape

    @property
    def entries(self):
        """Row-major tuple of all entries."""
        return tuple(self.array.flatten().tolist())

    def __getitem__(self, index):
        return self.array[index]

    def to_list(self):
        return [list(row) for row in self.array.tolist()]

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError(f"Shape mismatch {self.shape} @ {other.shape}")
            result = RationalMatrix.zeros(self.rows, other.cols)
            if self.cols > 0:
                result.array = np.dot(self.array, other.array)
            return result
        return self.apply(other)

    def apply(self, vector):
        """Return the product of the matrix with a column vector as a tuple."""
        if len(vector) != self.cols:
            raise ValueError("Vector length does not match the number of columns")
        return tuple(
            sum((self.array[i, j] * vector[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def __add__(self, other):
        out = RationalMatrix.zeros(self.rows, self.cols)
        out.array = self.array + other.array
        return out

    def __sub__(self, other):
        out = RationalMatrix.zeros(self.rows, self.cols)
        out.array = self.array - other.array
        return out

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        factor = _as_rational(factor)
        out = RationalMatrix.zeros(self.rows, self.cols)
        out.array = self.array * factor
        return out

    def transpose(self):
        out = RationalMatrix.zeros(self.cols, self.rows)
        out.array = self.array.T.copy()
        return out

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        return sum((self.array[i, i] for i in range(min(self.shape))), Fraction(0))

    def is_zero(self):
        return all(x == 0 for x in self.array.flatten())

    def sparse_rows(self):
        """Rows as ``{column: value}`` dictionaries without zero entries."""
        return [
            {j: x for j, x in enumerate(row) if x != 0} for row in self.array.tolist()
        ]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.to_list())
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


class EchelonForm:
    """
    Incrementally maintained reduced row echelon form of sparse rational rows

    Rows are dictionaries mapping a column index to a nonzero Fraction. The
    pivot of every stored row is its leftmost nonzero column, pivots are
    normalised to 1 and every pivot column is zero in all other stored rows,
    so the stored rows are the unique RREF of the row space seen so far.

    Args:
        ncols (int):
            Number of columns.

    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivot_rows = {}

    @property
    def rank(self):
        return len(self.pivot_rows)

    @property
    def pivots(self):
        return sorted(self.pivot_rows)

    def reduce(self, row):
        """
        Reduce a row against the stored pivots

        Args:
            row (dict):
                Sparse row ``{column: value}``.

        Returns:
            dict:
                The remainder, which has no entry in any pivot column.

        """
        row = {c: _as_rational(v) for c, v in row.items() if v != 0}
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            factor = row.get(c)
            if factor is None or c not in self.pivot_rows:
                continue
            for cc, v in self.pivot_rows[c].items():
                new = row.get(cc, 0) - factor * v
                if new == 0:
                    row.pop(cc, None)
                else:
                    if cc not in row:
                        heapq.heappush(heap, cc)
                    row[cc] = new
        return row

    def add_row(self, row):
        """
        Add a row to the echelon form

        Args:
            row (dict):
                Sparse row ``{column: value}``.

        Returns:
            bool:
                True if the row was independent of the stored rows.

        """
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for q, other in self.pivot_rows.items():
            factor = other.get(p)
            if factor is None:
                continue
            for c, v in row.items():
                new = other.get(c, 0) - factor * v
                if new == 0:
                    other.pop(c, None)
                else:
                    other[c] = new
        self.pivot_rows[p] = row
        return True

    def contains(self, row):
        return not self.reduce(row)

    def kernel(self):
        """
        Basis of the right kernel of the stored rows

        For every free (non pivot) column f, in increasing order, the basis
        vector has a 1 at f, 0 at every other free column and minus the RREF
        entries at the pivot columns.

        Returns:
            list:
                Tuples of Fractions of length ``ncols``.

        """
        basis = []
        for f in range(self.ncols):
            if f in self.pivot_rows:
                continue
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, row in self.pivot_rows.items():
                x = row.get(f)
                if x is not None:
                    v[p] = -x
            basis.append(tuple(v))
        return basis


def echelon(rows, ncols):
    """Return the EchelonForm of a list of sparse rows."""
    form = EchelonForm(ncols)
    for row in rows:
        form.add_row(row)
    return form


def rank(m):
    """
    Exact rank of a matrix over the rationals

    Args:
        m (RationalMatrix):
            The matrix.

    Returns:
        int:
            The rank, between 0 and min(rows, cols).

    """
    return echelon(m.sparse_rows(), m.cols).rank


def kernel_basis(m):
    """
    Basis of {v : m v = 0}

    Args:
        m (RationalMatrix):
            The matrix.

    Returns:
        list:
            ``cols - rank`` tuples of Fractions in echelon normal form: the
            vector attached to the free column f is 1 at f and 0 at every
            other free column.

    """
    return echelon(m.sparse_rows(), m.cols).kernel()


def _augmented(rows, rhs, ncols):
    form = EchelonForm(ncols + 1)
    for row, b in zip(rows, rhs):
        augmented = dict(row)
        if b != 0:
            augmented[ncols] = _as_rational(b)
        form.add_row(augmented)
    return form


def is_consistent(rows, rhs, ncols):
    """
    Whether the sparse system ``rows . x = rhs`` has a solution

    Args:
        rows (list of dict):
            Sparse coefficient rows.
        rhs (list):
            Right hand side, one value per row.
        ncols (int):
            Number of unknowns.

    Returns:
        bool

    """
    return ncols not in _augmented(rows, rhs, ncols).pivot_rows


def solve_particular(rows, rhs, ncols):
    """
    One solution of the sparse system ``rows . x = rhs``

    Free unknowns are set to zero.

    Returns:
        tuple or None:
            Fractions of length ``ncols``, or None if the system is
            inconsistent.

    """
    form = _augmented(rows, rhs, ncols)
    if ncols in form.pivot_rows:
        return None
    x = [Fraction(0)] * ncols
    for p, row in form.pivot_rows.items():
        x[p] = row.get(ncols, Fraction(0))
    return tuple(x)
