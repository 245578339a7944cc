"""Brute-force ground truth and a seeded sampler of valid generator tuples.

Nothing here touches the row-reduction kernels, so these routines can act
as independent checks on them.
"""
from __future__ import annotations

import random

import numpy as np

from .algebra import BinaryPolynomial, bp_gcd, exact_quotient, hensel_lift
from .cyclicgen import CyclicGenerators
from .errors import EvenLength, TooLarge, TooManyRows
from .linalg import MixedMatrix
from .words import MixedWord

MAX_ROWS = 12
_CHUNK = 1 << 16


def brute_force_span(M: MixedMatrix) -> set[MixedWord]:
    """All ``sum(c_i * row_i)`` for every coefficient vector in Z4^rows."""
    n = len(M.rows)
    if n > MAX_ROWS:
        raise TooManyRows(f"{n} rows exceeds the brute-force limit of {MAX_ROWS}")
    a, b = M.alpha, M.beta
    if a + b >= 32:
        raise TooLarge(f"length {a + b} too long for the brute-force sweep")
    if n == 0:
        return {MixedWord.zero(a, b)}
    G = np.array([r.x + r.y for r in M.rows], dtype=np.int64).reshape(n, a + b)
    mods = np.array([2] * a + [4] * b, dtype=np.int64)
    shifts = 2 * np.arange(n, dtype=np.int64)
    # one base-4 digit per coordinate; requires a + b < 32
    place = np.int64(4) ** np.arange(a + b, dtype=np.int64)
    seen = []
    for start in range(0, 4 ** n, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, 4 ** n), dtype=np.int64)
        coeffs = (idx[:, None] >> shifts) & 3  # every vector in Z4^n
        seen.append(np.unique(((coeffs @ G) % mods) @ place))
    keys = np.unique(np.concatenate(seen))
    digits = (keys[:, None] // place) % 4
    return {MixedWord(w[:a], w[a:]) for w in digits.tolist()}


def words_with_y(M: MixedMatrix, t) -> list[MixedWord]:
    """Every codeword of span(M) whose quaternary part equals ``t``."""
    t = tuple(t)
    return sorted((w for w in brute_force_span(M) if w.y == t), key=repr)


def _random_poly(rng: random.Random, nbits: int) -> BinaryPolynomial:
    return BinaryPolynomial((rng.getrandbits(1) for _ in range(nbits)))


def sample_valid_generators(alpha: int, beta: int, seed: int) -> CyclicGenerators:
    """A tuple satisfying all four conditions, deterministic in ``seed``.

    Draws use :class:`random.Random` seeded with ``seed``; each random
    polynomial takes one ``getrandbits(1)`` call per coefficient.
    """
    if beta % 2 == 0 or beta < 1:
        raise EvenLength(f"beta = {beta} must be odd and positive")
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    rng = random.Random(seed)
    xb = BinaryPolynomial.x_n_minus_1(beta)

    d = bp_gcd(xb, _random_poly(rng, beta))
    fbar = bp_gcd(d, _random_poly(rng, beta))
    hbar = exact_quotient(d, fbar)
    f, h = hensel_lift(fbar, beta), hensel_lift(hbar, beta)

    if alpha == 0:
        return CyclicGenerators(0, beta, BinaryPolynomial.one(), BinaryPolynomial(), f, h)
    b = bp_gcd(BinaryPolynomial.x_n_minus_1(alpha), _random_poly(rng, alpha))
    d2 = bp_gcd(b, exact_quotient(xb, fbar))
    l = (exact_quotient(b, d2) * _random_poly(rng, alpha)) % b  # noqa: E741
    return CyclicGenerators(alpha, beta, b, l, f, h)
