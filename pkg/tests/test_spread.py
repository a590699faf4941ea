import itertools
import random

import pytest

from spreadcodes.gf import PrimeField, find_irreducible
from spreadcodes.linalg import Matrix, hstack, minor, rank
from spreadcodes.spread import (SpreadCode, Subspace, companion_matrix,
                                format_subspace, parse_subspace,
                                subspace_distance)

from props import ndrank_conjugation_trials, random_matrix


@pytest.fixture(scope="module")
def code22():
    return SpreadCode(2, 2, 2)


@pytest.fixture(scope="module")
def code32():
    return SpreadCode(2, 3, 2)


class TestCompanionMatrix:
    def test_quadratic_over_f2(self):
        P = companion_matrix(PrimeField(2), (1, 1, 1))
        assert P.data == ((0, 1), (1, 1))

    def test_cubic_over_f2(self):
        P = companion_matrix(PrimeField(2), (1, 1, 0, 1))
        assert P.data == ((0, 1, 0), (0, 0, 1), (1, 1, 0))

    def test_negated_coefficients_over_f3(self):
        P = companion_matrix(PrimeField(3), (1, 0, 1))
        assert P.data == ((0, 1), (2, 0))

    @pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2)])
    def test_modulus_annihilates_companion(self, q, k):
        f = PrimeField(q)
        p = find_irreducible(q, k)
        P = companion_matrix(f, p)
        acc = Matrix.zeros(f, k, k)
        Pi = Matrix.identity(f, k)
        for c in p:
            acc = acc + Pi.scale(c)
            Pi = Pi @ P
        assert acc.is_zero()


class TestMatrixRep:
    def test_zero_and_one(self, code22):
        assert code22.matrix_rep(code22.ext.zero).is_zero()
        assert code22.matrix_rep(code22.ext.one) == Matrix.identity(
            code22.base, 2)

    def test_generator_maps_to_companion(self, code22):
        assert code22.matrix_rep(code22.alpha) == code22.P

    @pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (3, 2)])
    def test_ring_isomorphism_sampled(self, q, k):
        code = SpreadCode(q, k, 2)
        ext = code.ext
        rnd = random.Random(q * k)
        seen = set()
        for _ in range(1000):
            a = tuple(rnd.randrange(q) for _ in range(k))
            b = tuple(rnd.randrange(q) for _ in range(k))
            A, B = code.matrix_rep(a), code.matrix_rep(b)
            assert code.matrix_rep(ext.add(a, b)) == A + B
            assert code.matrix_rep(ext.mul(a, b)) == A @ B
            seen.add((a, A.data))
        reps = {a: d for a, d in seen}
        assert len(reps) == len({d for _, d in seen})  # injective on sample

    def test_first_row_reads_back(self, code32):
        rnd = random.Random(1)
        for _ in range(50):
            a = tuple(rnd.randrange(2) for _ in range(3))
            assert code32.element_of(code32.matrix_rep(a)) == a


class TestDiagonalizer:
    def test_small_instance_structure(self, code22):
        lam = code22.alpha
        S = code22.diagonalizer
        assert S.data[0] == (code22.ext.one, code22.ext.one)
        assert S.data[1] == (lam, code22.ext.frobenius(lam, 1))
        assert code22.ext.frobenius(lam, 1) == (1, 1)  # lam^2 = lam + 1

    @pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 5)])
    def test_diagonalizes_companion(self, q, k):
        code = SpreadCode(q, k, 2)
        S, S_inv = code.diagonalizer, code.diagonalizer_inv
        assert S @ S_inv == Matrix.identity(code.ext, k)
        lhs = (S_inv @ code.P.lift(code.ext)) @ S
        assert lhs == code.frobenius_diag(code.alpha)

    def test_first_inverse_row_is_dual_basis(self, code22):
        # oracle: solve the 2x2 trace system Tr(lam^i g_j) = delta_ij
        ext = code22.ext
        lam = code22.alpha
        duals = []
        for j in range(2):
            hits = [g for g in ext.elements()
                    if ext.trace(ext.mul(ext.pow(lam, 0), g)) == (1 if j == 0 else 0)
                    and ext.trace(ext.mul(lam, g)) == (1 if j == 1 else 0)]
            assert len(hits) == 1
            duals.append(hits[0])
        assert code22.diagonalizer_inv.data[0] == tuple(duals)

    @pytest.mark.parametrize("q,k", [(2, 3), (3, 2), (2, 4)])
    def test_dual_basis_rows_general(self, q, k):
        code = SpreadCode(q, k, 2)
        ext = code.ext
        gamma = code.diagonalizer_inv.data[0]
        for i in range(k):
            for j in range(k):
                want = 1 if i == j else 0
                assert ext.trace(ext.mul(ext.pow(code.alpha, i),
                                         gamma[j])) == want


class TestEncode:
    def test_unit_points(self, code22):
        I = Matrix.identity(code22.base, 2)
        Z = Matrix.zeros(code22.base, 2, 2)
        cw = code22.encode((1, 0))
        assert cw.subspace.basis == hstack(I, Z)
        cw = code22.encode((0, 1))
        assert cw.subspace.basis == hstack(Z, I)

    def test_generator_point(self, code22):
        cw = code22.encode((code22.ext.one, code22.alpha))
        assert cw.subspace.basis == hstack(Matrix.identity(code22.base, 2),
                                           code22.P)

    def test_normalization(self, code32):
        ext = code32.ext
        a = (1, 1, 0)
        point = (ext.element(a), ext.mul(ext.element(a), code32.alpha))
        cw = code32.encode(point)
        assert cw.point[0] == ext.one
        assert cw == code32.encode((ext.one, code32.alpha))

    def test_rejects_zero_point(self, code22):
        with pytest.raises(ValueError):
            code22.encode((0, 0))


class TestEnumeration:
    @pytest.mark.parametrize("q,k,r,expected", [(2, 2, 2, 5), (2, 3, 2, 9),
                                                (3, 2, 2, 10), (2, 2, 3, 21)])
    def test_cardinality(self, q, k, r, expected):
        code = SpreadCode(q, k, r)
        assert code.size == expected
        cws = code.codeword_list()
        assert len(cws) == expected
        assert len({cw.subspace for cw in cws}) == expected

    def test_all_enumerated_are_members(self, code32):
        for cw in code32.codeword_list():
            assert code32.is_codeword(cw.subspace)

    def test_pairwise_distances(self, code22):
        cws = code22.codeword_list()
        for a, b in itertools.combinations(cws, 2):
            assert subspace_distance(a.subspace, b.subspace) == 4

    @pytest.mark.parametrize("q,k,r", [(2, 2, 2), (2, 3, 2)])
    def test_spread_partition(self, q, k, r):
        code = SpreadCode(q, k, r)
        cws = code.codeword_list()
        for v in itertools.product(range(q), repeat=code.n):
            if not any(v):
                continue
            owners = sum(cw.subspace.contains(v) for cw in cws)
            assert owners == 1


class TestSubspaceDistance:
    def test_self_distance(self, code22):
        cw = code22.encode((1, 0))
        assert subspace_distance(cw.subspace, cw.subspace) == 0

    def test_complementary_blocks(self, code22):
        a = code22.encode((1, 0)).subspace
        b = code22.encode((0, 1)).subspace
        assert subspace_distance(a, b) == 2 * code22.k

    def test_ambient_mismatch(self, code22):
        a = code22.encode((1, 0)).subspace
        b = SpreadCode(2, 3, 2).encode((1, 0)).subspace
        with pytest.raises(ValueError):
            subspace_distance(a, b)


class TestMembership:
    def test_power_of_companion(self, code32):
        P3 = (code32.P @ code32.P) @ code32.P
        W = Subspace.from_generators(
            hstack(Matrix.identity(code32.base, 3), P3))
        assert code32.is_codeword(W)

    def test_noncommuting_block_rejected(self, code32):
        N = Matrix(code32.base, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        assert N @ code32.P != code32.P @ N
        W = Subspace.from_generators(
            hstack(Matrix.identity(code32.base, 3), N))
        assert not code32.is_codeword(W)

    def test_wrong_dimension_rejected(self, code22):
        W = Subspace.from_generators(Matrix(code22.base, [[1, 0, 0, 0]]))
        assert not code22.is_codeword(W)

    def test_singular_nonzero_block_rejected(self, code22):
        B = Matrix(code22.base, [[1, 0], [0, 0]])
        W = Subspace.from_generators(
            hstack(Matrix.identity(code22.base, 2), B))
        assert not code22.is_codeword(W)


class TestEigenbasisFacts:
    @pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (3, 3), (2, 5), (3, 5)])
    def test_full_rank_times_conjugate_columns(self, q, k):
        # random full-rank t-by-k over F_q times the first t columns of
        # the eigenvector matrix stays invertible
        code = SpreadCode(q, k, 2)
        rnd = random.Random(q + 10 * k)
        ext = code.ext
        trials = 0
        while trials < 200:
            t = rnd.randrange(1, k + 1)
            N = random_matrix(rnd, code.base, t, k)
            if rank(N) < t:
                continue
            cols = code.diagonalizer.submatrix(range(k), range(t))
            prod = N.lift(ext) @ cols
            assert rank(prod) == t
            trials += 1

    @pytest.mark.parametrize("q,k", [(2, 3), (3, 3), (2, 5)])
    def test_consecutive_minors_nonzero(self, q, k):
        code = SpreadCode(q, k, 2)
        rnd = random.Random(3 * q + k)
        ext = code.ext
        for _ in range(100):
            t = rnd.randrange(1, k + 1)
            N = (random_matrix(rnd, code.base, k, t)
                 @ random_matrix(rnd, code.base, t, k))
            tr = rank(N)
            conj = code.conjugate(N)
            for a in range(1, k - tr + 2):
                for b in range(1, k - tr + 2):
                    J = tuple(range(a, a + tr))
                    L = tuple(range(b, b + tr))
                    assert minor(conj, J, L) != ext.zero

    @pytest.mark.parametrize("q,k", [(2, 3), (2, 5), (3, 5)])
    def test_nondiagonal_rank_equals_rank(self, q, k):
        code = SpreadCode(q, k, 2)
        checked, bad = ndrank_conjugation_trials(code, 40, q * k)
        assert checked == 40 and bad == 0


class TestHeadersAndFiles:
    def test_header_roundtrip(self, code32):
        assert code32.header() == "2 3 2 1 1 0"
        again = SpreadCode.from_header(code32.header())
        assert again.header() == code32.header()

    def test_subspace_file_roundtrip(self, code32):
        cw = code32.encode((code32.ext.one, code32.alpha))
        text = format_subspace(code32, cw.subspace)
        parsed_code, sub = parse_subspace(text, code32)
        assert sub == cw.subspace

    def test_mismatched_header_rejected(self, code32):
        text = format_subspace(code32, code32.encode((1, 0)).subspace)
        with pytest.raises(ValueError):
            parse_subspace(text, SpreadCode(2, 2, 2))

    def test_construction_validation(self):
        with pytest.raises(ValueError):
            SpreadCode(2, 2, 1)
        with pytest.raises(ValueError):
            SpreadCode(2, 2, 2, (1, 0))  # x^2 + 1 reducible over F_2
        with pytest.raises(ValueError):
            SpreadCode(4, 2, 2)
