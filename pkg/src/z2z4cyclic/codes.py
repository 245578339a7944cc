"""Z2Z4-additive codes: cyclicity, puncturing, torsion and residue codes."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import DimensionMismatch, TooLarge
from .linalg import (
    CodeType, MixedMatrix, StandardForm, kernel_x, member, order_two_split, standard_form,
)
from .words import MixedWord

MAX_ENUMERATION_LOG2 = 20


def shift_period(alpha: int, beta: int) -> int:
    """Number of shifts after which every word of Z2^alpha x Z4^beta returns."""
    return math.lcm(max(alpha, 1), max(beta, 1))


@dataclass(frozen=True)
class AdditiveCode:
    """The Z4-span of ``gens`` inside Z2^alpha x Z4^beta."""

    gens: MixedMatrix

    @classmethod
    def from_rows(cls, alpha: int, beta: int, rows: Iterable = ()) -> AdditiveCode:
        return cls(MixedMatrix(alpha, beta, rows))

    @classmethod
    def zero(cls, alpha: int, beta: int) -> AdditiveCode:
        return cls(MixedMatrix(alpha, beta))

    @classmethod
    def full(cls, alpha: int, beta: int) -> AdditiveCode:
        rows = [MixedWord([int(i == j) for i in range(alpha)], [0] * beta) for j in range(alpha)]
        rows += [MixedWord([0] * alpha, [int(i == j) for i in range(beta)]) for j in range(beta)]
        return cls(MixedMatrix(alpha, beta, rows))

    @property
    def alpha(self) -> int:
        return self.gens.alpha

    @property
    def beta(self) -> int:
        return self.gens.beta

    @cached_property
    def standard_form(self) -> StandardForm:
        return standard_form(self.gens)

    @property
    def type(self) -> CodeType:
        return self.standard_form.code_type

    @property
    def size(self) -> int:
        return self.type.size

    def __contains__(self, w: MixedWord) -> bool:
        return member(self.gens, w)

    def reduced(self) -> AdditiveCode:
        """Same code, generated by its gamma + delta standard-form rows."""
        return AdditiveCode(self.standard_form.original)

    def codewords(self) -> set[MixedWord]:
        return enumerate_code(self)

    def __len__(self):
        return self.size


def is_cyclic(C: AdditiveCode) -> bool:
    return all(member(C.gens, g.shift()) for g in C.gens)


def cyclic_closure(C: AdditiveCode) -> AdditiveCode:
    """Smallest cyclic code containing ``C``."""
    period = shift_period(C.alpha, C.beta)
    rows = [g.shift(i) for g in C.gens for i in range(period)]
    return AdditiveCode(MixedMatrix(C.alpha, C.beta, rows)).reduced()


def puncture_x(C: AdditiveCode) -> list[tuple[int, ...]]:
    return [g.x for g in C.gens]


def puncture_y(C: AdditiveCode) -> list[tuple[int, ...]]:
    return [g.y for g in C.gens]


def _vec(bits: int, n: int) -> tuple[int, ...]:
    return tuple((bits >> i) & 1 for i in range(n))


def _binary_basis(vecs: Iterable[int], n: int) -> list[tuple[int, ...]]:
    return [_vec(v, n) for _, v in kernels.binary_echelon(vecs, range(n))]


def _quaternary(D: Sequence[Sequence[int]], beta: int) -> MixedMatrix:
    return MixedMatrix(0, beta, (MixedWord((), d) for d in D))


def torsion(D: Sequence[Sequence[int]], beta: int) -> list[tuple[int, ...]]:
    """Generators of ``{v in {0,1}^beta : 2v in span(D)}``.

    ``2v`` lies in the span exactly when it is in the order-two subcode, so
    the torsion code is the halving of that subcode: the residues of the
    unit-pivot rows plus the halves of the all-even leftover rows.
    """
    M = _quaternary(D, beta)
    units, vecs = order_two_split(M)
    vecs += [lo & M.ymask for _, _, lo, _ in units]
    return _binary_basis(vecs, beta)


def residue(D: Sequence[Sequence[int]], beta: int) -> list[tuple[int, ...]]:
    """Generators of the mod-2 reductions of span(D)."""
    M = _quaternary(D, beta)
    return _binary_basis((lo for lo, _ in M.bits), beta)


def kernel_code(C: AdditiveCode) -> list[tuple[int, ...]]:
    """Generators of ``C_0 = {w : (w | 0) in C}``."""
    return kernel_x(C.gens)


def equals(C1: AdditiveCode, C2: AdditiveCode) -> bool:
    if (C1.alpha, C1.beta) != (C2.alpha, C2.beta):
        raise DimensionMismatch(
            f"codes of shapes ({C1.alpha}, {C1.beta}) and ({C2.alpha}, {C2.beta})")
    return (C1.type.log2_size == C2.type.log2_size
            and all(member(C2.gens, g) for g in C1.gens)
            and all(member(C1.gens, g) for g in C2.gens))


def enumerate_code(C: AdditiveCode) -> set[MixedWord]:
    """Every codeword, by sweeping coefficients over the standard-form rows."""
    sf = C.standard_form
    if sf.code_type.log2_size > MAX_ENUMERATION_LOG2:
        raise TooLarge(f"code has 2^{sf.code_type.log2_size} codewords")
    M = sf.original
    basis = [(lo, hi, 2 if i < sf.gamma else 4) for i, (lo, hi) in enumerate(M.bits)]
    return {M.word(lo, hi) for lo, hi in kernels.span_words(basis, M.ymask)}
