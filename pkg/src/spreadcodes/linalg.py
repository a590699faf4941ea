"""Dense exact linear algebra over the fields in :mod:`spreadcodes.gf`.

A single :class:`Matrix` type serves both F_q and F_{q^k}; entries are
whatever values the field object operates on.  Matrices are immutable
and every operation returns a fresh matrix, so they can be shared
freely between threads.

Row and column tuples for minors are 1-based and order-sensitive: the
minor of rows (2, 1) is the negative of the minor of rows (1, 2), and a
repeated index makes the minor vanish.  The empty minor is 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gf import PrimeField


class Matrix:
    """Immutable dense matrix over a PrimeField or ExtField."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field, rows):
        data = tuple(tuple(row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
        else:
            width = 0
        self.field = field
        self.nrows = len(data)
        self.ncols = width
        self.data = data

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)]
                           for i in range(n)])

    @classmethod
    def diagonal(cls, field, values) -> "Matrix":
        values = list(values)
        z = field.zero
        n = len(values)
        return cls(field, [[values[i] if i == j else z for j in range(n)]
                           for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field == self.field
                and other.data == self.data)

    def __hash__(self):
        return hash((self.field, self.data))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        f = self.field
        z = f.zero
        bt = tuple(zip(*other.data)) if other.data else ()
        out = []
        for arow in self.data:
            orow = []
            for bcol in bt:
                acc = z
                for a, b in zip(arow, bcol):
                    if a != z and b != z:
                        acc = f.add(acc, f.mul(a, b))
                orow.append(acc)
            out.append(orow)
        return Matrix(f, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.neg(a) for a in row] for row in self.data])

    def _same_shape(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def scale(self, value) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.mul(value, a) for a in row] for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.data)) if self.data else [])

    def submatrix(self, rows, cols) -> "Matrix":
        """Submatrix at 0-based index sequences, kept in the given order."""
        return Matrix(self.field,
                      [[self.data[i][j] for j in cols] for i in rows])

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def columns_slice(self, start: int, stop: int) -> "Matrix":
        return Matrix(self.field, [row[start:stop] for row in self.data])

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(a == z for row in self.data for a in row)

    def is_diagonal(self) -> bool:
        z = self.field.zero
        return all(a == z for i, row in enumerate(self.data)
                   for j, a in enumerate(row) if i != j)

    def lift(self, ext) -> "Matrix":
        """Reinterpret a base-field matrix over the extension field."""
        if ext.base != self.field:
            raise ValueError("extension field does not extend this field")
        return Matrix(ext, [[ext.embed(a) for a in row] for row in self.data])


def vstack(*mats: Matrix) -> Matrix:
    field = mats[0].field
    ncols = mats[0].ncols
    rows = []
    for m in mats:
        if m.field != field or m.ncols != ncols:
            raise ValueError("vstack needs matching fields and widths")
        rows.extend(m.data)
    return Matrix(field, rows)


def hstack(*mats: Matrix) -> Matrix:
    field = mats[0].field
    nrows = mats[0].nrows
    for m in mats:
        if m.field != field or m.nrows != nrows:
            raise ValueError("hstack needs matching fields and heights")
    rows = []
    for i in range(nrows):
        row = []
        for m in mats:
            row.extend(m.data[i])
        rows.append(row)
    return Matrix(field, rows)


@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form R with a recorded transform T, T @ M = R."""
    matrix: Matrix
    transform: Matrix
    rank: int
    pivot_cols: tuple[int, ...]  # 1-based, ascending


def rref(M: Matrix) -> RrefResult:
    f = M.field
    z = f.zero
    R = [list(row) for row in M.data]
    T = [[f.one if i == j else z for j in range(M.nrows)]
         for i in range(M.nrows)]
    pivots = []
    pr = 0
    for col in range(M.ncols):
        pivot_row = next((r for r in range(pr, M.nrows) if R[r][col] != z), None)
        if pivot_row is None:
            continue
        if pivot_row != pr:
            R[pr], R[pivot_row] = R[pivot_row], R[pr]
            T[pr], T[pivot_row] = T[pivot_row], T[pr]
        if R[pr][col] != f.one:
            inv = f.inv(R[pr][col])
            R[pr] = [f.mul(inv, a) for a in R[pr]]
            T[pr] = [f.mul(inv, a) for a in T[pr]]
        for r in range(M.nrows):
            if r != pr and R[r][col] != z:
                g = R[r][col]
                R[r] = [f.sub(a, f.mul(g, b)) for a, b in zip(R[r], R[pr])]
                T[r] = [f.sub(a, f.mul(g, b)) for a, b in zip(T[r], T[pr])]
        pivots.append(col + 1)
        pr += 1
        if pr == M.nrows:
            break
    return RrefResult(Matrix(f, R), Matrix(f, T), pr, tuple(pivots))


def _rank_gf2(M: Matrix) -> int:
    rows = []
    for row in M.data:
        bits = 0
        for j, a in enumerate(row):
            if a:
                bits |= 1 << j
        if bits:
            rows.append(bits)
    r = 0
    while rows:
        piv = rows.pop()
        if piv == 0:
            continue
        r += 1
        low = piv & -piv
        rows = [x ^ piv if x & low else x for x in rows]
    return r


def rank(M: Matrix) -> int:
    f = M.field
    if isinstance(f, PrimeField) and f.q == 2:
        return _rank_gf2(M)
    z = f.zero
    R = [list(row) for row in M.data]
    r = 0
    for col in range(M.ncols):
        pivot_row = next((i for i in range(r, M.nrows) if R[i][col] != z), None)
        if pivot_row is None:
            continue
        R[r], R[pivot_row] = R[pivot_row], R[r]
        inv = None
        for i in range(r + 1, M.nrows):
            if R[i][col] != z:
                if inv is None:
                    piv = R[r][col]
                    inv = f.inv(piv) if piv != f.one else f.one
                g = f.mul(R[i][col], inv)
                R[i] = [f.sub(a, f.mul(g, b)) for a, b in zip(R[i], R[r])]
        r += 1
        if r == M.nrows:
            break
    return r


def det(M: Matrix):
    if M.nrows != M.ncols:
        raise ValueError("determinant needs a square matrix")
    f = M.field
    z = f.zero
    n = M.nrows
    if n == 0:
        return f.one
    R = [list(row) for row in M.data]
    sign_flip = False
    acc = f.one
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if R[i][col] != z), None)
        if pivot_row is None:
            return z
        if pivot_row != col:
            R[col], R[pivot_row] = R[pivot_row], R[col]
            sign_flip = not sign_flip
        piv = R[col][col]
        acc = f.mul(acc, piv)
        inv = None
        for i in range(col + 1, n):
            if R[i][col] != z:
                if inv is None:
                    inv = f.inv(piv) if piv != f.one else f.one
                g = f.mul(R[i][col], inv)
                R[i] = [f.sub(a, f.mul(g, b)) for a, b in zip(R[i], R[col])]
    return f.neg(acc) if sign_flip else acc


def inverse(M: Matrix) -> Matrix:
    if M.nrows != M.ncols:
        raise ValueError("inverse needs a square matrix")
    res = rref(M)
    if res.rank != M.nrows:
        raise ZeroDivisionError("matrix is singular")
    return res.transform


def minor(M: Matrix, rows: tuple, cols: tuple):
    """Determinant of the submatrix at 1-based row/column tuples, taken
    in tuple order.  Empty tuples give 1; repeated indices give 0."""
    if len(rows) != len(cols):
        raise ValueError("row and column tuples must have equal length")
    if not rows:
        return M.field.one
    if any(i < 1 or i > M.nrows for i in rows):
        raise IndexError("row index out of range")
    if any(j < 1 or j > M.ncols for j in cols):
        raise IndexError("column index out of range")
    return det(M.submatrix([i - 1 for i in rows], [j - 1 for j in cols]))


def nondiagonal_rank(M: Matrix) -> int:
    """One less than the smallest minor size t for which every t-by-t
    minor on disjoint row/column tuples vanishes.

    Exhaustive enumeration; exponential in k and only meant as a test
    oracle at small sizes.
    """
    if M.nrows != M.ncols:
        raise ValueError("square matrix required")
    k = M.nrows
    z = M.field.zero
    indices = range(1, k + 1)
    for t in range(1, k // 2 + 1):
        all_zero = True
        for J in itertools.combinations(indices, t):
            rest = [i for i in indices if i not in J]
            for L in itertools.combinations(rest, t):
                if minor(M, J, L) != z:
                    all_zero = False
                    break
            if not all_zero:
                break
        if all_zero:
            return t - 1
    return k // 2


def disjoint_pivot_tuples(M: Matrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row-operation search for disjoint 1-based tuples J, L with a
    nonzero minor [J;L] that cannot be extended: every minor on
    J+(j), L+(l) with distinct j, l outside J and L vanishes.

    Runs in O(k^3) field operations.  The input must be square and
    must have a nonzero off-diagonal entry.
    """
    if M.nrows != M.ncols:
        raise ValueError("square matrix required")
    if M.is_diagonal():
        raise ValueError("matrix is diagonal")
    f = M.field
    z = f.zero
    k = M.nrows
    N = [list(row) for row in M.data]
    J: list[int] = []
    L: list[int] = []
    # Pivot rows are consumed in ascending order; a row with no usable
    # entry leaves the pivot pool but its column stays scannable, so
    # support below exhausted rows is still found.
    pivot_rows = list(range(1, k + 1))
    columns = list(range(1, k + 1))
    while pivot_rows:
        j = pivot_rows[0]
        hit = next((l for l in columns if l != j and N[j - 1][l - 1] != z),
                   None)
        if hit is None:
            pivot_rows.remove(j)
            continue
        J.append(j)
        L.append(hit)
        pivot_rows = [x for x in pivot_rows if x != j and x != hit]
        columns = [x for x in columns if x != j and x != hit]
        pivot_inv = f.inv(N[j - 1][hit - 1])
        base = N[j - 1]
        for i in range(j, k):  # rows strictly below the pivot row
            a = N[i][hit - 1]
            if a != z:
                g = f.mul(a, pivot_inv)
                N[i] = [f.sub(x, f.mul(g, y)) for x, y in zip(N[i], base)]
    return tuple(J), tuple(L)


# ---------------------------------------------------------------------------
# Text format: first line "rows cols", then one line per row of
# space-separated element serializations in the field's digit format.

def format_matrix(M: Matrix) -> str:
    lines = [f"{M.nrows} {M.ncols}"]
    for row in M.data:
        lines.append(" ".join(M.field.to_str(a) for a in row))
    return "\n".join(lines) + "\n"


def parse_matrix(field, text: str) -> Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        nrows, ncols = map(int, lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad size line {lines[0]!r}") from exc
    width = getattr(field, "k", 1)
    if len(lines) != nrows + 1:
        raise ValueError(f"expected {nrows} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        digits = ln.split()
        if len(digits) != ncols * width:
            raise ValueError(f"expected {ncols * width} digits per row, "
                             f"got {len(digits)}")
        row = []
        for c in range(ncols):
            chunk = " ".join(digits[c * width:(c + 1) * width])
            row.append(field.from_str(chunk))
        rows.append(row)
    return Matrix(field, rows)
