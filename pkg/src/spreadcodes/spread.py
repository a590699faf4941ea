"""Spread-code construction and subspace geometry.

A spread code over F_q with block size k and r blocks is the set of
k-dimensional subspaces of F_q^(rk) spanned by rows of block matrices
(A_1 ... A_r) whose blocks all come from the matrix field F_q[P], where
P is the companion matrix of a monic irreducible polynomial of degree k.
Distinct codewords intersect trivially, the codewords cover the whole
ambient space, the minimum subspace distance is the maximum possible 2k,
and the code size (q^n - 1)/(q^k - 1) meets the anticode bound for that
distance.

Codewords correspond to points of the projective space P^(r-1)(F_{q^k}):
the point [v_1 : ... : v_r] maps to the row space of (M(v_1) ... M(v_r))
where M is the coefficient-wise isomorphism onto F_q[P].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .gf import ExtField, PrimeField, find_irreducible
from .linalg import Matrix, hstack, inverse, rank, rref, vstack


class Subspace:
    """Row space of a full-row-rank RREF matrix over F_q."""

    __slots__ = ("basis",)

    def __init__(self, basis: Matrix):
        self.basis = basis

    @classmethod
    def from_generators(cls, M: Matrix) -> "Subspace":
        """Canonicalize an arbitrary generator matrix: reduce to RREF and
        drop zero rows."""
        res = rref(M)
        return cls(res.matrix.submatrix(range(res.rank), range(M.ncols)))

    @property
    def field(self):
        return self.basis.field

    @property
    def ambient(self) -> int:
        return self.basis.ncols

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def contains(self, vector) -> bool:
        row = Matrix(self.field, [list(vector)])
        return rank(vstack(self.basis, row)) == self.dim

    def __eq__(self, other):
        return isinstance(other, Subspace) and other.basis == self.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def subspace_distance(U: Subspace, V: Subspace) -> int:
    """Subspace metric dim(U+V) - dim(U∩V), computed from the rank of
    the stacked bases."""
    if U.ambient != V.ambient or U.field != V.field:
        raise ValueError("subspaces live in different ambient spaces")
    return 2 * rank(vstack(U.basis, V.basis)) - U.dim - V.dim


@dataclass(frozen=True)
class Codeword:
    """A spread codeword: a normalized projective point over F_{q^k}
    together with the subspace it encodes."""
    point: tuple
    subspace: Subspace

    def __eq__(self, other):
        return isinstance(other, Codeword) and other.point == self.point

    def __hash__(self):
        return hash(self.point)


def companion_matrix(field: PrimeField, modulus) -> Matrix:
    """Companion matrix of a monic polynomial: ones on the first upper
    off-diagonal, negated low coefficients in the last row."""
    modulus = tuple(c % field.q for c in modulus)
    k = len(modulus) - 1
    if k < 1 or modulus[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    z, o = field.zero, field.one
    rows = [[o if j == i + 1 else z for j in range(k)] for i in range(k - 1)]
    rows.append([field.neg(modulus[j]) for j in range(k)])
    return Matrix(field, rows)


class SpreadCode:
    """A spread code instance with everything fixed per code: the base
    and extension fields, the companion matrix P, and the matrix of
    Frobenius-conjugate eigenvectors of P used by the decoder.

    Immutable after construction; safe to share across threads.
    """

    def __init__(self, q: int, k: int, r: int, modulus=None):
        if r < 2:
            raise ValueError("need at least two blocks")
        self.base = PrimeField(q)
        if modulus is None:
            full = find_irreducible(q, k)
        else:
            modulus = tuple(c % q for c in modulus)
            if len(modulus) == k:
                full = modulus + (1,)
            elif len(modulus) == k + 1:
                full = modulus
            else:
                raise ValueError(f"modulus must have degree {k}")
        self.ext = ExtField(self.base, full)
        self.q = q
        self.k = k
        self.r = r
        self.n = r * k
        self.modulus = full
        self.P = companion_matrix(self.base, full)
        self.alpha = self.ext.gen()
        self._powers_of_P = [Matrix.identity(self.base, k)]
        for _ in range(k - 1):
            self._powers_of_P.append(self._powers_of_P[-1] @ self.P)
        self.diagonalizer, self.diagonalizer_inv = self._build_diagonalizer()

    def _build_diagonalizer(self):
        ext, k = self.ext, self.k
        col = [ext.one]
        for _ in range(k - 1):
            col.append(ext._mul_raw(col[-1], self.alpha))
        cols = [col]
        for _ in range(k - 1):
            cols.append([ext.frobenius(v, 1) for v in cols[-1]])
        S = Matrix(ext, list(zip(*cols)))
        S_inv = inverse(S)
        P_ext = self.P.lift(ext)
        if (S_inv @ P_ext) @ S != self.frobenius_diag(self.alpha):
            raise ValueError("companion matrix failed to diagonalize; "
                             "the modulus is not irreducible")
        for i in range(k - 1):
            lower = tuple(ext.frobenius(v, 1) for v in S_inv.row(i))
            if lower != S_inv.row(i + 1):
                raise AssertionError("conjugate row structure violated")
        return S, S_inv

    # -- code parameters ----------------------------------------------------

    def pairwise(self) -> "SpreadCode":
        """The two-block code with the same fields and companion matrix,
        used for pairwise decoding instances."""
        if self.r == 2:
            return self
        return self._pairwise_cache

    @cached_property
    def _pairwise_cache(self) -> "SpreadCode":
        return SpreadCode(self.q, self.k, 2, self.modulus)

    @property
    def size(self) -> int:
        return (self.q ** self.n - 1) // (self.q ** self.k - 1)

    @property
    def min_distance(self) -> int:
        return 2 * self.k

    def header(self) -> str:
        return " ".join(str(x) for x in
                        (self.q, self.k, self.r) + self.modulus[:self.k])

    @classmethod
    def from_header(cls, line: str) -> "SpreadCode":
        parts = [int(x) for x in line.split()]
        if len(parts) < 4:
            raise ValueError(f"bad code header {line!r}")
        q, k, r = parts[:3]
        modulus = tuple(parts[3:])
        if len(modulus) != k:
            raise ValueError(f"header lists {len(modulus)} coefficients, "
                             f"expected {k}")
        return cls(q, k, r, modulus)

    # -- the matrix field F_q[P] --------------------------------------------

    def matrix_rep(self, a) -> Matrix:
        """The matrix in F_q[P] whose coefficient vector is a: the sum of
        a_i P^i.  A ring isomorphism from F_{q^k}; its first row equals
        the coefficient vector, which :meth:`element_of` reads back."""
        f = self.base
        a = self.ext.element(a)
        rows = [[f.zero] * self.k for _ in range(self.k)]
        for i, ai in enumerate(a):
            if ai:
                Pi = self._powers_of_P[i]
                for rr in range(self.k):
                    prow = Pi.data[rr]
                    row = rows[rr]
                    for cc in range(self.k):
                        if prow[cc] != f.zero:
                            row[cc] = f.add(row[cc], f.mul(ai, prow[cc]))
        return Matrix(f, rows)

    def element_of(self, A: Matrix) -> tuple:
        """Coefficient vector of a matrix in F_q[P] (its first row)."""
        return tuple(A.row(0))

    def commutes_with_companion(self, A: Matrix) -> bool:
        return A @ self.P == self.P @ A

    def frobenius_diag(self, mu) -> Matrix:
        """diag(mu, mu^q, ..., mu^(q^(k-1))) over the extension field."""
        ext = self.ext
        vals = [ext.element(mu)]
        for _ in range(self.k - 1):
            vals.append(ext.frobenius(vals[-1], 1))
        return Matrix.diagonal(ext, vals)

    def conjugate(self, M: Matrix) -> Matrix:
        """Change a base-field k-by-k matrix to the eigenbasis of P."""
        return (self.diagonalizer_inv @ M.lift(self.ext)) @ self.diagonalizer

    # -- encoding and enumeration -------------------------------------------

    def normalize_point(self, point) -> tuple:
        ext = self.ext
        coords = [ext.element(v) for v in point]
        if len(coords) != self.r:
            raise ValueError(f"point needs {self.r} coordinates")
        lead = next((i for i, v in enumerate(coords) if v != ext.zero), None)
        if lead is None:
            raise ValueError("the zero tuple is not a projective point")
        if coords[lead] != ext.one:
            scale = ext.inv(coords[lead])
            coords = [ext.mul(scale, v) for v in coords]
        return tuple(coords)

    def encode(self, point) -> Codeword:
        """Codeword of a projective point: the row space of the block
        matrix whose i-th block is matrix_rep(v_i), canonicalized."""
        coords = self.normalize_point(point)
        blocks = [self.matrix_rep(v) for v in coords]
        sub = Subspace.from_generators(hstack(*blocks))
        return Codeword(coords, sub)

    def codewords(self):
        """All (q^n - 1)/(q^k - 1) codewords, one per projective point."""
        ext = self.ext
        for lead in range(self.r):
            tail = self.r - lead - 1
            for rest in _tuples(ext, tail):
                point = (ext.zero,) * lead + (ext.one,) + rest
                yield self.encode(point)

    @cached_property
    def _codeword_cache(self):
        if self.size > 10 ** 6:
            raise ValueError(f"code too large to enumerate ({self.size})")
        return tuple(self.codewords())

    def codeword_list(self) -> tuple:
        """Materialized codeword tuple, cached; guarded against large codes."""
        return self._codeword_cache

    # -- membership ----------------------------------------------------------

    def split_blocks(self, M: Matrix) -> list[Matrix]:
        if M.ncols != self.n:
            raise ValueError(f"expected {self.n} columns, got {M.ncols}")
        return [M.columns_slice(i * self.k, (i + 1) * self.k)
                for i in range(self.r)]

    def is_codeword(self, W: Subspace) -> bool:
        """Exact membership test working entirely over F_q: the first
        full-rank block must be preceded by zero blocks, and every later
        block B must satisfy commutation of R_j^(-1) B with P and be
        invertible or zero."""
        if W.dim != self.k or W.ambient != self.n:
            return False
        blocks = self.split_blocks(W.basis)
        ranks = [rank(b) for b in blocks]
        j = next((i for i, t in enumerate(ranks) if t == self.k), None)
        if j is None:
            return False
        if any(not blocks[i].is_zero() for i in range(j)):
            return False
        Rj_inv = inverse(blocks[j])
        for i in range(j + 1, self.r):
            A = Rj_inv @ blocks[i]
            if A.is_zero():
                continue
            if ranks[i] != self.k:
                return False
            if not self.commutes_with_companion(A):
                return False
        return True


def _tuples(ext: ExtField, length: int):
    if length == 0:
        yield ()
        return
    for rest in _tuples(ext, length - 1):
        for v in ext.elements():
            yield (v,) + rest


# ---------------------------------------------------------------------------
# Subspace file format: the code header line, then the basis matrix in
# the linalg text format over F_q.

def format_subspace(code: SpreadCode, sub: Subspace) -> str:
    from .linalg import format_matrix
    return code.header() + "\n" + format_matrix(sub.basis)


def parse_subspace(text: str, code: SpreadCode | None = None):
    from .linalg import parse_matrix
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty subspace file")
    file_code = SpreadCode.from_header(lines[0])
    if code is not None and file_code.header() != code.header():
        raise ValueError("file header does not match the requested code")
    code = code or file_code
    M = parse_matrix(code.base, "\n".join(lines[1:]))
    return code, Subspace.from_generators(M)
