import random

import pytest

from z2z4cyclic.algebra import gen_poly_binary_cyclic
from z2z4cyclic.codes import (
    AdditiveCode, cyclic_closure, enumerate_code, equals, is_cyclic, kernel_code, puncture_x,
    puncture_y, residue, torsion,
)
from z2z4cyclic.errors import DimensionMismatch, TooLarge
from z2z4cyclic.linalg import MixedMatrix, MixedWord as W
from z2z4cyclic.oracle import brute_force_span

from conftest import binary_span, cyclic_matrix, quaternary_span, random_matrix

SHIFTS_220 = [(2, 2, 0), (0, 2, 2), (2, 0, 2)]


def torsion_by_definition(D, beta):
    span = quaternary_span(D, beta)
    return {v for v in binary_span([tuple(int(i == j) for i in range(beta)) for j in range(beta)],
                                   beta)
            if tuple(2 * c for c in v) in span}


class TestCyclic:
    def test_zero_code(self):
        assert is_cyclic(AdditiveCode.zero(3, 5))

    def test_not_cyclic(self):
        assert not is_cyclic(AdditiveCode.from_rows(2, 0, [W((1, 0), ())]))

    @pytest.mark.parametrize("seed", range(10))
    def test_shift_closure(self, seed):
        rng = random.Random(seed)
        C = AdditiveCode(cyclic_matrix(rng, rng.randrange(5), rng.randrange(1, 6)))
        assert is_cyclic(C)

    @pytest.mark.parametrize("seed", range(10))
    def test_cyclic_closure(self, seed):
        rng = random.Random(seed)
        C = AdditiveCode(random_matrix(rng, rng.randrange(1, 4), rng.randrange(1, 4), 2))
        D = cyclic_closure(C)
        assert is_cyclic(D)
        assert all(g in D for g in C.gens)

    def test_against_brute_force(self):
        rng = random.Random(3)
        for _ in range(40):
            C = AdditiveCode(random_matrix(rng, rng.randrange(3), rng.randrange(4), rng.randrange(3)))
            span = brute_force_span(C.gens)
            assert is_cyclic(C) == all(w.shift() in span for w in span)


class TestPuncture:
    def test_parts(self):
        C = AdditiveCode.from_rows(1, 1, [W((1,), (2,))])
        assert puncture_x(C) == [(1,)] and puncture_y(C) == [(2,)]
        assert puncture_x(AdditiveCode.zero(2, 2)) == []

    def test_cy_multiples(self):
        C = AdditiveCode.from_rows(2, 2, [W((1, 1), (1, 3))])
        assert quaternary_span(puncture_y(C), 2) == {(0, 0), (1, 3), (2, 2), (3, 1)}

    @pytest.mark.parametrize("seed", range(15))
    def test_projection_of_span(self, seed):
        rng = random.Random(seed)
        C = AdditiveCode(random_matrix(rng, 3, 3, rng.randrange(4)))
        span = brute_force_span(C.gens)
        assert quaternary_span(puncture_y(C), 3) == {w.y for w in span}
        assert binary_span(puncture_x(C), 3) == {w.x for w in span}


class TestTorsionResidue:
    def test_torsion_examples(self):
        assert binary_span(torsion(SHIFTS_220, 3), 3) == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}
        assert torsion([], 3) == []
        assert torsion([(1,)], 1) == [(1,)]

    def test_torsion_sum_of_two_pivot_rows(self):
        # (2,0,1) + (0,2,1) = (2,2,2), so 111 is in the torsion code even
        # though neither generator is even
        D = [(2, 0, 1), (0, 2, 1)]
        assert (1, 1, 1) in binary_span(torsion(D, 3), 3)
        assert binary_span(torsion(D, 3), 3) == torsion_by_definition(D, 3)

    def test_residue_examples(self):
        assert residue(SHIFTS_220, 3) == []
        assert residue([(1,)], 1) == [(1,)]
        assert binary_span(residue([(1, 1, 1), (0, 2, 2)], 3), 3) == {(0, 0, 0), (1, 1, 1)}

    @pytest.mark.parametrize("seed", range(40))
    def test_against_definitions(self, seed):
        rng = random.Random(seed)
        beta = rng.randrange(1, 5)
        D = [tuple(rng.choice((0, 1, 2, 3, 2, 0)) for _ in range(beta))
             for _ in range(rng.randrange(4))]
        tor = binary_span(torsion(D, beta), beta)
        assert tor == torsion_by_definition(D, beta)
        res = binary_span(residue(D, beta), beta)
        assert res == {tuple(c % 2 for c in v) for v in quaternary_span(D, beta)}
        assert res <= tor

    @pytest.mark.parametrize("seed", range(20))
    def test_cyclic_divisibility(self, seed):
        rng = random.Random(seed)
        beta = rng.choice((3, 5, 7))
        C = AdditiveCode(cyclic_matrix(rng, 0, beta, nwords=rng.randrange(1, 3)))
        D = puncture_y(C)
        ft = gen_poly_binary_cyclic(torsion(D, beta), beta)
        fr = gen_poly_binary_cyclic(residue(D, beta), beta)
        assert not fr % ft


class TestEquality:
    def test_examples(self):
        C = AdditiveCode.from_rows(2, 1, [W((1, 0), (1,)), W((0, 1), (2,))])
        D = AdditiveCode.from_rows(2, 1, [W((0, 1), (2,)), W((1, 0), (1,))])
        assert equals(C, C) and equals(C, D)
        assert not equals(AdditiveCode.from_rows(1, 1, [W((1,), (2,))]),
                          AdditiveCode.from_rows(1, 1, [W((1,), (1,))]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            equals(AdditiveCode.zero(1, 1), AdditiveCode.zero(1, 3))

    def test_equivalence_relation(self):
        rng = random.Random(11)
        codes = [AdditiveCode(random_matrix(rng, 1, 2, rng.randrange(3))) for _ in range(25)]
        for a in codes:
            assert equals(a, a)
            for b in codes:
                assert equals(a, b) == equals(b, a)
                assert equals(a, b) == (brute_force_span(a.gens) == brute_force_span(b.gens))
                for c in codes[:8]:
                    if equals(a, b) and equals(b, c):
                        assert equals(a, c)


class TestEnumerate:
    def test_examples(self):
        assert enumerate_code(AdditiveCode.from_rows(1, 1, [W((1,), (2,))])) == \
            {W((0,), (0,)), W((1,), (2,))}
        assert enumerate_code(AdditiveCode.zero(2, 2)) == {W((0, 0), (0, 0))}
        assert enumerate_code(AdditiveCode.full(0, 1)) == {W((), (v,)) for v in range(4)}

    def test_too_large(self):
        with pytest.raises(TooLarge):
            enumerate_code(AdditiveCode.full(3, 9))

    @pytest.mark.parametrize("seed", range(20))
    def test_cardinality(self, seed):
        rng = random.Random(seed)
        C = AdditiveCode(random_matrix(rng, rng.randrange(4), rng.randrange(4), rng.randrange(5)))
        words = enumerate_code(C)
        assert len(words) == C.size == len(brute_force_span(C.gens))


def test_kernel_code_matches_definition():
    rng = random.Random(5)
    for _ in range(20):
        C = AdditiveCode(cyclic_matrix(rng, 4, 3))
        expected = {w.x for w in brute_force_span(MixedMatrix(4, 3, C.reduced().gens.rows))
                    if not any(w.y)}
        assert binary_span(kernel_code(C), 4) == expected
