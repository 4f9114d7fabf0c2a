import itertools

import numpy as np
import pytest

from mpcode.conf import Conf
from mpcode.core.const import Metric, Relation
from mpcode.modules import CodeSpec, ErrorMsg, LinearConstraint, MpCodeError
from mpcode.services import codes, mpcore, polytope

DERANGEMENTS_222 = {
    (3, 3, 1, 1, 2, 2), (2, 2, 3, 3, 1, 1), (2, 3, 1, 3, 2, 1),
    (2, 3, 1, 3, 1, 2), (2, 3, 3, 1, 2, 1), (2, 3, 3, 1, 1, 2),
    (3, 2, 1, 3, 2, 1), (3, 2, 1, 3, 1, 2), (3, 2, 3, 1, 2, 1),
    (3, 2, 3, 1, 1, 2),
}


def words(book):
    return [X.symbols for X in book]


class TestConstraint:
    def test_empty_rejected(self):
        with pytest.raises(MpCodeError) as e:
            LinearConstraint({(0, 0): 0}, Relation.LE, 1)
        assert e.value.code == ErrorMsg.ConstraintEmpty["code"]

    def test_out_of_range(self):
        row = LinearConstraint({(2, 0): 1}, Relation.EQ, 0)
        with pytest.raises(MpCodeError) as e:
            CodeSpec((1, 1), (1, 2), [row])
        assert e.value.code == ErrorMsg.ConstraintOutOfRange["code"]

    def test_one_based_terms(self):
        row = LinearConstraint.from_terms([[1, 2, 3]], Relation.LE, 4)
        assert row.coefficients == {(0, 1): 3}
        assert row.dump_json(flag=False) == {"terms": [[1, 2, 3]], "rel": "le", "rhs": 4}


class TestSatisfies:
    def test_no_constraints(self, full_22):
        for word in mpcore.all_multipermutations((2, 2)):
            assert codes.satisfies(mpcore.matrix_from_multipermutation(word, (2, 2)), full_22)

    def test_derangement_rejects_sorted(self):
        spec = codes.derangement_spec((2, 2, 2), (1, 2, 3))
        assert not codes.satisfies(polytope.canonical_sorted_matrix((2, 2, 2)), spec)

    def test_shieh_member(self, shieh_263):
        X = mpcore.matrix_from_multipermutation((1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6), (2,) * 6)
        assert codes.satisfies(X, shieh_263)

    def test_shape_mismatch(self, full_22):
        X = mpcore.matrix_from_multipermutation((1, 2), (1, 1))
        with pytest.raises(MpCodeError):
            codes.satisfies(X, full_22)


class TestBuilders:
    def test_derangement_listing(self):
        book = codes.enumerate_codebook(codes.derangement_spec((2, 2, 2), (1, 2, 3)))
        assert len(book) == 10
        assert set(words(book)) == DERANGEMENTS_222

    def test_derangement_two_symbols(self):
        assert words(codes.enumerate_codebook(codes.derangement_spec((1, 1)))) == [(2, 1)]

    def test_derangement_single_symbol(self):
        assert len(codes.enumerate_codebook(codes.derangement_spec((3,)))) == 0

    def test_shieh_constraints(self, shieh_263):
        assert len(shieh_263.constraints) == 48
        cells = {next(iter(row.coefficients)) for row in shieh_263.constraints}
        # column 1 pins rows 2, 3, 5, 6; column 12 pins rows 1, 2, 4, 5
        assert {(1, 0), (2, 0), (4, 0), (5, 0)} <= cells
        assert {(0, 11), (1, 11), (3, 11), (4, 11)} <= cells
        assert (0, 0) not in cells and (3, 0) not in cells

    def test_shieh_d1_is_everything(self):
        spec = codes.shieh_spec(1, 3, 1)
        assert spec.constraints == []
        assert len(codes.enumerate_codebook(spec)) == 6

    def test_shieh_forced(self):
        assert words(codes.enumerate_codebook(codes.shieh_spec(1, 2, 2))) == [(1, 2)]

    def test_shieh_divisor(self):
        with pytest.raises(MpCodeError) as e:
            codes.shieh_spec(2, 6, 4)
        assert e.value.code == ErrorMsg.DivisorInvalid["code"]
        with pytest.raises(MpCodeError):
            codes.shieh_cardinality(2, 5, 2)

    @pytest.mark.parametrize("r,m,d,size", [(2, 6, 3, 216), (3, 3, 3, 1), (1, 2, 1, 2), (2, 4, 2, 36)])
    def test_shieh_cardinality(self, r, m, d, size):
        assert codes.shieh_cardinality(r, m, d) == size

    @pytest.mark.parametrize("r,m,d", [(2, 6, 3), (2, 4, 2), (1, 6, 2), (3, 4, 2), (2, 3, 3), (4, 2, 1)])
    def test_shieh_cardinality_matches_enumeration(self, r, m, d):
        book = codes.enumerate_codebook(codes.shieh_spec(r, m, d))
        assert len(book) == codes.shieh_cardinality(r, m, d)


class TestExclusion:
    def test_violated_only_by_itself(self):
        r = (2, 2)
        Y = mpcore.matrix_from_multipermutation((1, 2, 1, 2), r)
        row = codes.exclusion_constraint(Y)
        for word in mpcore.all_multipermutations(r):
            X = mpcore.matrix_from_multipermutation(word, r)
            assert row.holds(X) == (X != Y)

    def test_one_exclusion(self, full_22):
        Y = mpcore.matrix_from_multipermutation((2, 1, 1, 2), (2, 2))
        book = codes.enumerate_codebook(full_22.with_constraints([codes.exclusion_constraint(Y)]))
        assert len(book) == 5
        assert Y not in book

    @pytest.mark.parametrize("r", [(2, 2), (1, 2, 1)])
    def test_arbitrary_codebook(self, r, rng):
        everything = list(mpcore.all_multipermutations(r))
        for _ in range(5):
            size = int(rng.integers(1, len(everything)))
            picks = rng.choice(len(everything), size=size, replace=False)
            target = {everything[k] for k in picks}
            spec = codes.codebook_spec(r, range(1, len(r) + 1), target)
            assert set(words(codes.enumerate_codebook(spec))) == target


class TestPermutationSpec:
    def check_equivalent(self, spec):
        book = codes.enumerate_codebook(spec)
        pspec = codes.to_permutation_spec(spec)
        vectors = codes.enumerate_permutation_code(pspec)
        mine = sorted(tuple(float(v) for v in row) for row in book.vectors())
        assert vectors == mine

    def test_unconstrained(self, full_22):
        pspec = codes.to_permutation_spec(full_22)
        assert pspec.s == (1.0, 1.0, 2.0, 2.0)
        assert len(codes.enumerate_permutation_code(pspec)) == 6

    def test_classical_derangements(self):
        pspec = codes.to_permutation_spec(codes.derangement_spec((1, 1, 1)))
        assert codes.enumerate_permutation_code(pspec) == [(2.0, 3.0, 1.0), (3.0, 1.0, 2.0)]

    def test_derangement(self):
        self.check_equivalent(codes.derangement_spec((1, 1, 1)))
        self.check_equivalent(codes.derangement_spec((2, 2, 2), (1, 2, 3)))

    def test_shieh(self):
        self.check_equivalent(codes.shieh_spec(2, 2, 2))

    def test_random_spec(self, rng):
        r = (2, 1, 2, 1)
        rows = []
        for _ in range(3):
            cells = {(int(rng.integers(4)), int(rng.integers(6))): int(rng.integers(1, 3)) for _ in range(3)}
            rows.append(LinearConstraint(cells, Relation.LE, 2))
        self.check_equivalent(CodeSpec(r, (0.5, 1.0, 2.5, 4.0), rows))

    def test_limit(self):
        pspec = codes.to_permutation_spec(CodeSpec((1,) * 10, range(10)))
        with pytest.raises(MpCodeError) as e:
            codes.enumerate_permutation_code(pspec)
        assert e.value.code == ErrorMsg.EnumerationTooLarge["code"]


class TestEnumerate:
    def test_unconstrained(self, full_22_book):
        assert words(full_22_book) == list(mpcore.all_multipermutations((2, 2)))

    def test_shieh(self, shieh_263_book):
        assert len(shieh_263_book) == 216
        assert words(shieh_263_book) == sorted(words(shieh_263_book))

    def test_exhaustive_membership(self):
        spec = codes.derangement_spec((2, 1, 2))
        found = set(words(codes.enumerate_codebook(spec)))
        for word in mpcore.all_multipermutations((2, 1, 2)):
            X = mpcore.matrix_from_multipermutation(word, (2, 1, 2))
            assert codes.satisfies(X, spec) == (word in found)

    def test_too_large(self, restore_conf):
        Conf.ENUM_LIMIT = 5
        with pytest.raises(MpCodeError) as e:
            codes.enumerate_codebook(CodeSpec((2, 2), (1, 2)))
        assert e.value.code == ErrorMsg.EnumerationTooLarge["code"]

    def test_explicit_limit(self):
        with pytest.raises(MpCodeError):
            codes.enumerate_codebook(CodeSpec((2, 2), (1, 2)), limit=5)


class TestDistance:
    def test_shieh_chebyshev(self, shieh_263_book):
        assert codes.min_distance(shieh_263_book, Metric.CHEBYSHEV) == 3

    def test_full_hamming(self, full_22_book):
        assert codes.min_distance(full_22_book, Metric.HAMMING) == 2

    def test_euclidean(self, full_22_book):
        assert codes.min_distance(full_22_book, Metric.EUCLIDEAN) == pytest.approx(np.sqrt(2))

    def test_singleton(self):
        book = codes.enumerate_codebook(codes.shieh_spec(1, 2, 2))
        with pytest.raises(MpCodeError) as e:
            codes.min_distance(book, Metric.CHEBYSHEV)
        assert e.value.code == ErrorMsg.CodebookTooSmall["code"]

    def test_brute_force(self):
        book = codes.enumerate_codebook(codes.derangement_spec((2, 2, 2)))
        best = min(mpcore.hamming_distance_vectors(a.symbols, b.symbols)
                   for a, b in itertools.combinations(book, 2))
        assert codes.min_distance(book, Metric.HAMMING) == best


class TestIndexing:
    def test_first(self, shieh_263_book):
        assert codes.codeword_by_index(shieh_263_book, 0).symbols == (1, 2, 3, 1, 2, 3, 4, 5, 6, 4, 5, 6)

    def test_out_of_range(self, shieh_263_book):
        with pytest.raises(MpCodeError) as e:
            codes.codeword_by_index(shieh_263_book, len(shieh_263_book))
        assert e.value.code == ErrorMsg.IndexOutOfRange["code"]

    def test_round_trip(self, shieh_242_book):
        assert len(shieh_242_book) == 36
        for k in range(len(shieh_242_book)):
            assert codes.index_of(shieh_242_book, codes.codeword_by_index(shieh_242_book, k)) == k

    def test_not_in_book(self, shieh_242_book):
        with pytest.raises(MpCodeError) as e:
            codes.index_of(shieh_242_book, (1, 1, 2, 2, 3, 3, 4, 4))
        assert e.value.code == ErrorMsg.CodewordNotInBook["code"]
