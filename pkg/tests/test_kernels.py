import random

import pytest

from z2z4cyclic import _kernel_py, kernels
from z2z4cyclic.words import ymask

from conftest import BACKENDS, _ckernel, random_matrix


def test_selected_backend_is_one_of_the_two():
    assert kernels.BACKEND in ("python", "cython")
    assert kernels.echelon in (_kernel_py.echelon, getattr(_ckernel, "echelon", None))


def test_z4_lane_arithmetic():
    ym = ymask(1, 4)  # one binary coordinate then four quaternary ones
    # x-part: 1, y-part: 0 1 2 3
    lo, hi = 0b1 | (0b1010 << 1), 0b1100 << 1
    assert [kernels.entry(lo, hi, c) for c in range(5)] == [1, 0, 1, 2, 3]
    dlo, dhi = kernels.scale(lo, hi, 2, ym)
    assert [kernels.entry(dlo, dhi, c) for c in range(5)] == [0, 0, 2, 0, 2]
    slo, shi = kernels.add(lo, hi, lo, hi, ym)
    assert (slo, shi) == (dlo, dhi)
    nlo, nhi = kernels.scale(lo, hi, 3, ym)
    assert [kernels.entry(nlo, nhi, c) for c in range(5)] == [1, 0, 3, 2, 1]


@pytest.mark.skipif(_ckernel is None, reason="compiled kernel not built")
@pytest.mark.parametrize("seed", range(40))
def test_backends_agree(seed):
    rng = random.Random(seed)
    alpha, beta = rng.randrange(0, 7), rng.randrange(0, 9)
    M = random_matrix(rng, alpha, beta, rng.randrange(0, 10))
    ym = M.ymask
    cols = list(range(alpha + beta))
    rng.shuffle(cols)
    for unit_only in (False, True):
        ccols = [c for c in cols if c >= alpha] if unit_only else cols
        assert _ckernel.echelon(M.bits, ym, ccols, unit_only) == \
            _kernel_py.echelon(M.bits, ym, ccols, unit_only)
    piv, _ = _kernel_py.echelon(M.bits, ym, cols)
    for lo, hi in M.bits:
        assert _ckernel.reduce_word(piv, lo, hi, ym) == _kernel_py.reduce_word(piv, lo, hi, ym)
    vecs = [lo for lo, _ in M.bits]
    assert _ckernel.binary_echelon(vecs, cols) == _kernel_py.binary_echelon(vecs, cols)
    basis = [(lo, hi, rng.choice((2, 4))) for lo, hi in M.bits[:5]]
    assert _ckernel.span_words(basis, ym) == _kernel_py.span_words(basis, ym)


@pytest.mark.skipif(_ckernel is None, reason="compiled kernel not built")
def test_wide_words_fall_back_to_python():
    rng = random.Random(7)
    M = random_matrix(rng, 30, 50, 6)
    cols = list(range(80))
    assert _ckernel.echelon(M.bits, M.ymask, cols) == _kernel_py.echelon(M.bits, M.ymask, cols)


def test_howell_mode_counts_span(kernel, rng):
    from z2z4cyclic.oracle import brute_force_span

    for _ in range(30):
        M = random_matrix(rng, rng.randrange(4), rng.randrange(4), rng.randrange(5))
        piv, rest = kernel.echelon(M.bits, M.ymask, range(M.alpha + M.beta))
        assert not rest
        size = 1
        for _, k, _, _ in piv:
            size *= 4 if k == kernel.KIND_UNIT else 2
        assert size == len(brute_force_span(M))


def test_pivot_rows_are_reduced(kernel, rng):
    for _ in range(30):
        M = random_matrix(rng, 3, 4, 6)
        piv, _ = kernel.echelon(M.bits, M.ymask, range(7))
        for i, (c, k, _, _) in enumerate(piv):
            for j, (_, _, lo, hi) in enumerate(piv):
                e = kernel.entry(lo, hi, c)
                if i == j:
                    assert e == (2 if k == kernel.KIND_TWO else 1)
                elif k == kernel.KIND_TWO:
                    assert e in (0, 1)
                else:
                    assert e == 0
