"""Minimum-distance decoding of spread codes.

The received space is a subspace of F_q^(rk) of dimension at most k,
kept as the blocks R_1 ... R_r of its RREF basis.  Decoding reduces to
pairwise instances on two blocks (:func:`decode`), each solved by
:func:`decode_pair`:

* exact membership is accepted immediately,
* a block of rank at most (dim-1)/2 pins the corresponding codeword
  block to zero,
* otherwise the pair is moved to the eigenbasis of the companion matrix,
  where the codeword parameter mu appears as the unknown of an affine
  matrix pencil R(x) whose columns carry successive Frobenius powers of
  x.  A row-operation search picks disjoint row/column tuples spanning
  the non-diagonal part of R(0); appending one free diagonal index to
  both tuples yields a minor that is linear in a single Frobenius power,
  so each free index contributes one closed-form candidate root.  The
  candidate that drops the pencil rank below half the received dimension
  is the decoded parameter; with an invertible first block the pivot
  structure is the identity and :func:`decode_pair_nonsingular` reads a
  single candidate straight from one minor ratio.

Every decoded answer is re-verified against the subspace distance, so
out-of-contract inputs surface as failures rather than miscorrections.
All functions are pure; concurrent calls are safe and their operation
counts (see :class:`spreadcodes.gf.OpCount`) tally independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, hstack, inverse, minor, rank, rref
from .linalg import disjoint_pivot_tuples
from .spread import Codeword, SpreadCode, Subspace, subspace_distance

REASON_NO_CODEWORD = "no codeword within distance"
REASON_AMBIGUOUS = "multiple candidates passed the rank test"
REASON_DIMENSION = "received dimension exceeds the codeword dimension"


@dataclass(frozen=True)
class ReceivedSpace:
    """A received subspace split into r blocks of k columns each."""
    subspace: Subspace
    k: int

    def __post_init__(self):
        if self.subspace.dim < 1:
            raise ValueError("received space must have dimension at least 1")
        if self.subspace.ambient % self.k:
            raise ValueError("ambient dimension is not a multiple of k")

    @property
    def r(self) -> int:
        return self.subspace.ambient // self.k

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def blocks(self) -> list[Matrix]:
        basis = self.subspace.basis
        return [basis.columns_slice(i * self.k, (i + 1) * self.k)
                for i in range(self.r)]


@dataclass(frozen=True)
class DecodeResult:
    codeword: Codeword | None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.codeword is not None


def _fail(reason: str) -> DecodeResult:
    return DecodeResult(None, reason)


@dataclass(frozen=True)
class AffinePencil:
    """The matrix pencil R(x) = coeff * diag(x, x^q, ...) - offset over
    F_{q^k}; entry (i, j) is coeff[i,j] * x^(q^j) - offset[i,j]."""
    coeff: Matrix
    offset: Matrix

    def __post_init__(self):
        if (self.coeff.field != self.offset.field
                or self.coeff.nrows != self.offset.nrows
                or self.coeff.ncols != self.offset.ncols):
            raise ValueError("pencil parts must match in field and shape")

    @property
    def field(self):
        return self.coeff.field

    def at_zero(self) -> Matrix:
        return -self.offset

    def at(self, mu) -> Matrix:
        ext = self.field
        pows = [ext.element(mu)]
        for _ in range(self.coeff.ncols - 1):
            pows.append(ext.frobenius(pows[-1], 1))
        rows = []
        for arow, brow in zip(self.coeff.data, self.offset.data):
            rows.append([ext.sub(ext.mul(a, pows[j]), b)
                         for j, (a, b) in enumerate(zip(arow, brow))])
        return Matrix(ext, rows)


@dataclass(frozen=True)
class PairSupport:
    """Support data for the general pairwise step: the pencil in RREF
    coordinates plus the tuple selection feeding the candidate roots.
    All indices are 1-based columns/rows of the pencil."""
    pencil: AffinePencil
    rows: tuple[int, ...]      # disjoint row tuple with nonzero minor
    cols: tuple[int, ...]      # matching column tuple
    free: tuple[int, ...]      # diagonal indices appended one at a time

    @property
    def minor_rows(self) -> tuple[int, ...]:
        return self.rows + self.free

    @property
    def minor_cols(self) -> tuple[int, ...]:
        return self.cols + self.free


def candidate_roots(pencil: AffinePencil, rows, cols, free) -> list[tuple]:
    """Closed-form roots of the pencil minor on rows+free, cols+free.

    For each index c in ``free`` the minor picks up the factor
    x^(q^(c-1)) + m1/m0 with m0 the minor of R(0) on (rows, cols) and m1
    the minor on (rows+(c,), cols+(c,)); undoing the Frobenius power
    gives the candidate mu_c = (-m1/m0)^(q^(k-c+1)).  Returns (c, mu_c)
    pairs in the order of ``free``.
    """
    if not free:
        raise ValueError("no free indices to build candidates from")
    ext = pencil.field
    R0 = pencil.at_zero()
    den = minor(R0, tuple(rows), tuple(cols))
    if den == ext.zero:
        raise ArithmeticError("support minor vanished; tuple selection is "
                              "out of contract")
    den_inv = ext.inv(den)
    out = []
    for c in free:
        num = minor(R0, tuple(rows) + (c,), tuple(cols) + (c,))
        ratio = ext.mul(num, den_inv)
        mu = ext.frobenius(ext.neg(ratio), (ext.k - (c - 1)) % ext.k)
        out.append((c, mu))
    return out


def pair_support(R1: Matrix, R2: Matrix, code: SpreadCode) -> PairSupport | None:
    """Build the pencil and tuple selection for the general pairwise
    step, assuming rank(R1) >= rank(R2) > (dim-1)/2.

    Returns None when the selection cannot produce any candidate, which
    certifies that no codeword lies within distance k of the input.
    """
    ktil = R1.nrows
    k = code.k
    ext = code.ext
    S = code.diagonalizer
    r1 = rank(R1)
    W = hstack(R1.lift(ext) @ S, R2.lift(ext) @ S)
    res = rref(W)
    piv1 = [c for c in res.pivot_cols if c <= k]
    piv2 = [c - k for c in res.pivot_cols if c > k]
    if piv1 != list(range(1, r1 + 1)):
        raise AssertionError("pivots escaped the leading columns")
    coeff = res.matrix.columns_slice(0, k)
    offset = res.matrix.columns_slice(k, 2 * k)
    pencil = AffinePencil(coeff, offset)
    excluded = set(piv2)
    eligible = [i for i in range(1, r1 + 1) if i not in excluded]
    R0 = pencil.at_zero()
    sub0 = R0.submatrix([i - 1 for i in eligible], [i - 1 for i in eligible])
    if sub0.is_diagonal():
        rows: tuple[int, ...] = ()
        cols: tuple[int, ...] = ()
    else:
        loc_rows, loc_cols = disjoint_pivot_tuples(sub0)
        rows = tuple(eligible[i - 1] for i in loc_rows)
        cols = tuple(eligible[i - 1] for i in loc_cols)
    s = len(rows)
    n_free = (ktil + 1) // 2 - (ktil - r1) - s
    avail = [i for i in eligible if i not in rows and i not in cols]
    if n_free < 1 or n_free > len(avail):
        return None
    return PairSupport(pencil, rows, cols, tuple(avail[:n_free]))


def _checked(code: SpreadCode, received: Subspace, cw: Codeword) -> DecodeResult:
    if subspace_distance(received, cw.subspace) >= code.k:
        return _fail(REASON_NO_CODEWORD)
    return DecodeResult(cw)


def _membership_point(code: SpreadCode, R1: Matrix, R2: Matrix,
                      r1: int, r2: int):
    """Step-1 acceptance: the input itself is a codeword.  Detected over
    F_q through commutation with the companion matrix."""
    if r1 == code.k:
        A = inverse(R1) @ R2
        if code.commutes_with_companion(A):
            return (code.ext.one, code.element_of(A))
    elif r1 == 0 and r2 == code.k:
        return (code.ext.zero, code.ext.one)
    return None


def _decode_pair_ordered(R1: Matrix, R2: Matrix, code: SpreadCode,
                         received: Subspace, use_fast: bool) -> DecodeResult:
    """Pairwise decoding with rank(R1) >= rank(R2) already arranged."""
    ktil = R1.nrows
    k = code.k
    ext = code.ext
    r1, r2 = rank(R1), rank(R2)

    if ktil == k:
        point = _membership_point(code, R1, R2, r1, r2)
        if point is not None:
            return _checked(code, received, code.encode(point))

    small1 = 2 * r1 <= ktil - 1
    small2 = 2 * r2 <= ktil - 1
    if small1 and small2:
        return _fail(REASON_NO_CODEWORD)
    if small1:
        return _checked(code, received, code.encode((ext.zero, ext.one)))
    if small2:
        return _checked(code, received, code.encode((ext.one, ext.zero)))

    if use_fast and ktil == k and r1 == k:
        return _nonsingular_core(R1, R2, code, received)

    support = pair_support(R1, R2, code)
    if support is None:
        return _fail(REASON_NO_CODEWORD)
    passing = []
    for _, mu in candidate_roots(support.pencil, support.rows,
                                 support.cols, support.free):
        if mu in passing:
            continue
        if 2 * rank(support.pencil.at(mu)) <= ktil - 1:
            passing.append(mu)
    if not passing:
        return _fail(REASON_NO_CODEWORD)
    if len(passing) > 1:
        return _fail(REASON_AMBIGUOUS)
    return _checked(code, received,
                    code.encode((ext.one, passing[0])))


def _nonsingular_core(R1: Matrix, R2: Matrix, code: SpreadCode,
                      received: Subspace) -> DecodeResult:
    k = code.k
    ext = code.ext
    D = code.conjugate(inverse(R1) @ R2)
    if D.is_diagonal():
        return _checked(code, received, code.encode((ext.one, D[0, 0])))
    R0 = -D
    c = (k - 1) // 2
    corner = R0.submatrix(range(c), range(k - c, k))
    s = rank(corner)
    rows = tuple(range(2, s + 2))
    cols = tuple(range(k - s + 1, k + 1))
    den = minor(R0, rows, cols)
    if den == ext.zero:
        return _fail(REASON_NO_CODEWORD)
    num = minor(R0, (1,) + rows, (1,) + cols)
    mu = ext.neg(ext.mul(num, ext.inv(den)))
    if 2 * rank(code.frobenius_diag(mu) - D) <= k - 1:
        return _checked(code, received, code.encode((ext.one, mu)))
    return _fail(REASON_NO_CODEWORD)


def _swap_point(code: SpreadCode, result: DecodeResult,
                received: Subspace) -> DecodeResult:
    if not result.ok:
        return result
    a, b = result.codeword.point
    return _checked(code, received, code.encode((b, a)))


def decode_pair(R1: Matrix, R2: Matrix, code: SpreadCode,
                use_fast: bool = True) -> DecodeResult:
    """Decode a two-block received space given as its basis blocks.

    The stacked matrix (R1 R2) must have full row rank.  When
    ``use_fast`` is false the closed-form path for an invertible first
    block is skipped and the general pencil machinery runs instead; the
    two are equivalent and tested as such.
    """
    code = code.pairwise()
    stacked = hstack(R1, R2)
    ktil = R1.nrows
    if ktil < 1 or rank(stacked) != ktil:
        raise ValueError("pair blocks must stack to a full-row-rank basis")
    if ktil > code.k:
        return _fail(REASON_DIMENSION)
    received = Subspace.from_generators(stacked)
    if rank(R1) >= rank(R2):
        return _decode_pair_ordered(R1, R2, code, received, use_fast)
    swapped = Subspace.from_generators(hstack(R2, R1))
    result = _decode_pair_ordered(R2, R1, code, swapped, use_fast)
    return _swap_point(code, result, received)


def decode_pair_nonsingular(R1: Matrix, R2: Matrix,
                            code: SpreadCode) -> DecodeResult:
    """Closed-form pairwise decoding for an invertible first block.

    Requires square full-rank R1 and rank(R2) above (k-1)/2; one minor
    ratio of the zero-evaluated pencil yields the only possible
    codeword parameter, then a single rank test accepts or rejects it.
    """
    code = code.pairwise()
    k = code.k
    if R1.nrows != k or rank(R1) != k:
        raise ValueError("first block must be square and invertible")
    if 2 * rank(R2) <= k - 1:
        raise ValueError("second block rank too small for this path")
    received = Subspace.from_generators(hstack(R1, R2))
    r2 = rank(R2)
    point = _membership_point(code, R1, R2, k, r2)
    if point is not None:
        return _checked(code, received, code.encode(point))
    return _nonsingular_core(R1, R2, code, received)


def decode(received: ReceivedSpace, code: SpreadCode) -> DecodeResult:
    """Minimum-distance decoding of an r-block received space.

    Block ranks below half the received dimension pin the matching
    codeword blocks to zero; the first block above that threshold is the
    identity position, and each remaining high-rank block is recovered
    by a pairwise decode against it.  Any pairwise failure, and any
    assembled answer at distance k or more, is a failure.
    """
    ktil = received.dim
    k, r = code.k, code.r
    if received.r != r or received.subspace.ambient != code.n:
        raise ValueError("received space does not match the code layout")
    if ktil > k:
        return _fail(REASON_DIMENSION)
    blocks = received.blocks
    ranks = [rank(b) for b in blocks]
    high = [i for i, t in enumerate(ranks) if 2 * t > ktil - 1]
    if not high:
        return _fail(REASON_NO_CODEWORD)
    j = high[0]
    ext = code.ext
    point = [ext.zero] * r
    point[j] = ext.one
    for i in range(j + 1, r):
        if 2 * ranks[i] <= ktil - 1:
            continue
        pair = Subspace.from_generators(hstack(blocks[j], blocks[i]))
        p1 = pair.basis.columns_slice(0, k)
        p2 = pair.basis.columns_slice(k, 2 * k)
        res = decode_pair(p1, p2, code)
        if not res.ok:
            return _fail(res.reason)
        lead, tail = res.codeword.point
        if lead != ext.one:
            return _fail(REASON_NO_CODEWORD)
        point[i] = tail
    return _checked(code, received.subspace, code.encode(point))
