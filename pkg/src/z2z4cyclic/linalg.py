"""Exact linear algebra over the mixed alphabet Z2^alpha x Z4^beta.

Spans are always Z4-linear combinations of rows, with a Z4 coefficient
acting on binary coordinates through its reduction mod 2.  Every routine
here works in the original column order; the only place columns are
permuted is the :class:`StandardForm`, which records the permutation
explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import DimensionMismatch, NoSolution
from .words import MixedWord, ymask as _ymask

__all__ = [
    "MixedWord", "MixedMatrix", "StandardForm", "CodeType",
    "standard_form", "code_type", "member", "find_preimage_with_y", "kernel_x",
]


@dataclass(frozen=True, init=False)
class MixedMatrix:
    """A list of rows of Z2^alpha x Z4^beta (no row-reduction implied)."""

    alpha: int
    beta: int
    rows: tuple[MixedWord, ...]

    def __init__(self, alpha: int, beta: int, rows: Iterable[MixedWord | tuple] = ()):
        if alpha < 0 or beta < 0:
            raise ValueError("alpha and beta must be non-negative")
        out = []
        for r in rows:
            if not isinstance(r, MixedWord):
                r = MixedWord(*r)
            if r.shape != (alpha, beta):
                raise DimensionMismatch(f"row {r!r} does not have shape ({alpha}, {beta})")
            out.append(r)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "rows", tuple(out))

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def ymask(self) -> int:
        return _ymask(self.alpha, self.beta)

    @property
    def xmask(self) -> int:
        return (1 << self.alpha) - 1

    @property
    def x_cols(self) -> range:
        return range(self.alpha)

    @property
    def y_cols(self) -> range:
        return range(self.alpha, self.alpha + self.beta)

    @cached_property
    def bits(self) -> list[tuple[int, int]]:
        return [r.to_bits() for r in self.rows]

    def word(self, lo: int, hi: int) -> MixedWord:
        return MixedWord.from_bits(lo, hi, self.alpha, self.beta)

    @cached_property
    def howell(self) -> list:
        """Howell-mode pivots, quaternary columns first, then binary ones."""
        cols = list(self.y_cols) + list(self.x_cols)
        pivots, rest = kernels.echelon(self.bits, self.ymask, cols)
        assert not rest
        return pivots

    @cached_property
    def y_pivots(self) -> list:
        pivots, _ = kernels.echelon(self.bits, self.ymask, self.y_cols)
        return pivots

    def check_word(self, w: MixedWord) -> None:
        if w.shape != (self.alpha, self.beta):
            raise DimensionMismatch(
                f"word of shape {w.shape} against matrix of shape ({self.alpha}, {self.beta})")


@dataclass(frozen=True)
class CodeType:
    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int

    @property
    def log2_size(self) -> int:
        return self.gamma + 2 * self.delta

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    def __str__(self):
        return f"({self.alpha}, {self.beta}; {self.gamma}, {self.delta}; {self.kappa})"


@dataclass(frozen=True)
class StandardForm:
    """Generator matrix in the block shape

        [ I_k  T_b | 2T_2  0      0   ]
        [ 0    0   | 2T_1  2I_g-k 0   ]
        [ 0    S_b | S_q   R      I_d ]

    ``matrix`` is expressed in permuted coordinates: its binary column ``i``
    is original binary column ``perm_x[i]``, likewise for ``perm_y``.
    ``original`` holds the same rows in the original coordinates.
    """

    matrix: MixedMatrix
    original: MixedMatrix
    perm_x: tuple[int, ...]
    perm_y: tuple[int, ...]
    gamma: int
    delta: int
    kappa: int

    def permute(self, w: MixedWord) -> MixedWord:
        return _permute(w, self.perm_x, self.perm_y)

    def unpermute(self, w: MixedWord) -> MixedWord:
        x = [0] * len(self.perm_x)
        y = [0] * len(self.perm_y)
        for i, j in enumerate(self.perm_x):
            x[j] = w.x[i]
        for i, j in enumerate(self.perm_y):
            y[j] = w.y[i]
        return MixedWord(x, y)

    def _block(self, r0, r1, part, c0, c1, halve=False):
        rows = self.matrix.rows[r0:r1]
        return tuple(tuple((v // 2 if halve else v) for v in getattr(r, part)[c0:c1])
                     for r in rows)

    @property
    def _m(self) -> int:
        return self.matrix.beta - (self.gamma - self.kappa) - self.delta

    @property
    def T_b(self):
        return self._block(0, self.kappa, "x", self.kappa, self.matrix.alpha)

    @property
    def T_2(self):
        return self._block(0, self.kappa, "y", 0, self._m, halve=True)

    @property
    def T_1(self):
        return self._block(self.kappa, self.gamma, "y", 0, self._m, halve=True)

    @property
    def S_b(self):
        return self._block(self.gamma, self.gamma + self.delta, "x", self.kappa, self.matrix.alpha)

    @property
    def S_q(self):
        return self._block(self.gamma, self.gamma + self.delta, "y", 0, self._m)

    @property
    def R(self):
        m = self._m
        return self._block(self.gamma, self.gamma + self.delta, "y", m,
                           m + self.gamma - self.kappa)

    @property
    def code_type(self) -> CodeType:
        return CodeType(self.matrix.alpha, self.matrix.beta, self.gamma, self.delta, self.kappa)


def _permute(w: MixedWord, perm_x, perm_y) -> MixedWord:
    return MixedWord((w.x[i] for i in perm_x), (w.y[i] for i in perm_y))


def order_two_split(M: MixedMatrix):
    """Split the span into unit-pivot rows and the order-two subcode.

    Returns ``(units, vecs)``: ``units`` are unit-pivot records on
    quaternary columns (fully reduced against each other), and ``vecs``
    are binary bitmasks, one per remaining row, of the halved order-two
    generators.  The order-two subcode is spanned by ``vecs`` together with
    the doubles of the unit rows.
    """
    units, rest = kernels.echelon(M.bits, M.ymask, M.y_cols, unit_only=True)
    xm, ym = M.xmask, M.ymask
    return units, [(lo & xm) | (hi & ym) for lo, hi in rest]


def standard_form(M: MixedMatrix) -> StandardForm:
    a, b = M.alpha, M.beta
    xm, ym = M.xmask, M.ymask
    units, vecs = order_two_split(M)
    unit_cols = [c for c, _, _, _ in units]

    for c, _, plo, _ in units:
        dv = plo & ym
        vecs = [v ^ dv if (v >> c) & 1 else v for v in vecs]
    order = list(range(a)) + [c for c in M.y_cols if c not in unit_cols]
    twos = kernels.binary_echelon(vecs, order)
    xpiv = [(c, v) for c, v in twos if c < a]
    ypiv = [(c, v) for c, v in twos if c >= a]

    unit_rows = []
    for _, _, lo, hi in units:
        for c, v in xpiv:
            if (lo >> c) & 1:
                lo, hi = kernels.add(lo, hi, v & xm, v & ym, ym)
        for c, v in ypiv:
            if (hi >> c) & 1:
                lo, hi = kernels.add(lo, hi, 0, v & ym, ym)
        unit_rows.append((lo, hi))

    rows = [(v & xm, v & ym) for _, v in twos] + unit_rows
    original = MixedMatrix(a, b, (M.word(lo, hi) for lo, hi in rows))

    xp = [c for c, _ in xpiv]
    perm_x = tuple(xp + [c for c in range(a) if c not in xp])
    yp = [c - a for c, _ in ypiv]
    up = [c - a for c in unit_cols]
    perm_y = tuple([c for c in range(b) if c not in yp and c not in up] + yp + up)

    permuted = MixedMatrix(a, b, (_permute(r, perm_x, perm_y) for r in original.rows))
    return StandardForm(permuted, original, perm_x, perm_y,
                        gamma=len(twos), delta=len(units), kappa=len(xpiv))


def code_type(M: MixedMatrix) -> CodeType:
    return standard_form(M).code_type


def member(M: MixedMatrix, w: MixedWord) -> bool:
    """Whether ``w`` is a Z4-linear combination of the rows of ``M``."""
    M.check_word(w)
    lo, hi = kernels.reduce_word(M.howell, *w.to_bits(), M.ymask)
    return not (lo or hi)


def find_preimage_with_y(M: MixedMatrix, t: Sequence[int]) -> MixedWord:
    """A codeword of span(M) whose quaternary part is exactly ``t``.

    Elimination runs on the quaternary columns only, in the original
    column order; free choices are left at zero.
    """
    t = tuple(int(v) % 4 for v in t)
    if len(t) != M.beta:
        raise DimensionMismatch(f"target has length {len(t)}, expected {M.beta}")
    target = MixedWord((0,) * M.alpha, t)
    lo, hi = kernels.reduce_word(M.y_pivots, *target.to_bits(), M.ymask)
    if (lo | hi) & M.ymask:
        raise NoSolution(f"{list(t)} is not in the punctured quaternary code")
    # residual = target - c with zero quaternary part, so c.x = residual.x
    return MixedWord(M.word(lo, 0).x, t)


def kernel_x(M: MixedMatrix) -> list[tuple[int, ...]]:
    """Generators over Z2 of ``{w : (w | 0) in span(M)}``."""
    out = []
    for c, kind, lo, hi in M.howell:
        if kind == kernels.KIND_X:
            assert not (hi or lo & M.ymask)
            out.append(M.word(lo, 0).x)
    return out
