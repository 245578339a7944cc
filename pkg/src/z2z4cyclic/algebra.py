"""Polynomial arithmetic over Z2 and Z4.

Polynomials are immutable and stored as trimmed ascending coefficient
tuples, so ``QuaternaryPolynomial([3, 1])`` is ``x + 3``.  The zero
polynomial has degree ``ZERO_DEGREE`` (negative infinity), which compares
below every integer degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import ClassVar, Iterable, Sequence

from .errors import DivisionByZero, EvenLength, NonUnitLeadingCoefficient, NotADivisor
from .words import MixedWord

ZERO_DEGREE = -math.inf


@dataclass(frozen=True, init=False)
class _Polynomial:
    coeffs: tuple[int, ...]

    MOD: ClassVar[int] = 0

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) % self.MOD for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction helpers

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, n: int, c: int = 1):
        return cls([0] * n + [c])

    @classmethod
    def x_n_minus_1(cls, n: int):
        """``x^n - 1``; for ``n = 0`` this is the zero polynomial."""
        return cls.monomial(n) - cls.one()

    @classmethod
    def from_word(cls, word: Sequence[int]):
        """The coordinate-to-polynomial map: ``(v0, .., vn-1) -> sum vi x^i``."""
        return cls(word)

    @classmethod
    def parse(cls, text: str):
        """Parse ascending space-separated coefficients, e.g. ``"3 1 0 1"``."""
        tokens = text.split()
        for t in tokens:
            if not t.lstrip("-").isdigit():
                raise ValueError(f"bad coefficient {t!r}")
            if not 0 <= int(t) < cls.MOD:
                raise ValueError(f"coefficient {t} out of range for Z{cls.MOD}")
        return cls(int(t) for t in tokens)

    # basic properties

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # ring operations

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} and {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        n = max(len(self), len(other))
        return type(self)(self[i] + other[i] for i in range(n))

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)(c * other for c in self.coeffs)
        self._check(other)
        if not self or not other:
            return type(self)()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return type(self)(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def monic(self):
        """Scale by the inverse of the leading coefficient (which must be a unit)."""
        if not self:
            return self
        lc = self.leading
        if lc % 2 == 0:
            raise NonUnitLeadingCoefficient(f"leading coefficient {lc} is not a unit")
        return self * lc  # units of Z2 and Z4 are self-inverse

    def divides(self, other) -> bool:
        return not (other % self)

    def to_word(self, n: int) -> tuple[int, ...]:
        """Coefficients of ``self mod (x^n - 1)`` as a length-``n`` word."""
        out = [0] * n
        if n:
            for i, c in enumerate(self.coeffs):
                out[i % n] += c
        return tuple(c % self.MOD for c in out)

    def reduce_cyclic(self, n: int):
        """Reduce modulo ``x^n - 1`` by folding exponents."""
        return type(self)(self.to_word(n))

    # text forms

    def __str__(self):
        return " ".join(map(str, self.coeffs)) if self.coeffs else "0"

    def pretty(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)})"


class BinaryPolynomial(_Polynomial):
    """Polynomial with coefficients in Z2."""

    MOD = 2

    def lift(self) -> QuaternaryPolynomial:
        """The same 0/1 coefficients read in Z4."""
        return QuaternaryPolynomial(self.coeffs)


class QuaternaryPolynomial(_Polynomial):
    """Polynomial with coefficients in Z4."""

    MOD = 4

    def mod2(self) -> BinaryPolynomial:
        return BinaryPolynomial(self.coeffs)


def poly_divmod(a: _Polynomial, d: _Polynomial):
    """Division with remainder, ``a = q*d + r`` with ``deg r < deg d``.

    Over Z4 the divisor's leading coefficient must be 1 or 3.
    """
    a._check(d)
    if not d:
        raise DivisionByZero("polynomial division by zero")
    mod = a.MOD
    lc = d.leading
    if lc % 2 == 0:
        raise NonUnitLeadingCoefficient(f"divisor has non-unit leading coefficient {lc}")
    inv = lc  # 1 and 3 are their own inverses mod 4; 1 mod 2
    r = list(a.coeffs)
    dd = len(d.coeffs) - 1
    q = [0] * max(len(r) - dd, 0)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] % mod
        if not c:
            continue
        t = (c * inv) % mod
        q[i - dd] = t
        for j, dc in enumerate(d.coeffs):
            r[i - dd + j] = (r[i - dd + j] - t * dc) % mod
    cls = type(a)
    return cls(q), cls(r[:dd])


def bp_gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Monic gcd over Z2; ``gcd(0, 0) = 0``."""
    while b:
        a, b = b, a % b
    return a


def exact_quotient(a: _Polynomial, d: _Polynomial) -> _Polynomial:
    q, r = poly_divmod(a, d)
    if r:
        raise NotADivisor(f"{d.pretty()} does not divide {a.pretty()}")
    return q


def hensel_lift(fbar: BinaryPolynomial, beta: int) -> QuaternaryPolynomial:
    """Monic lift to Z4 of a divisor of ``x^beta - 1`` over Z2 (Graeffe method).

    Writing ``fbar = e(x) + o(x)`` with ``e`` the even-exponent terms and
    ``o`` the odd ones, ``e(x)^2 - o(x)^2`` computed over Z4 equals
    ``+-f(x^2)``; the sign is fixed by requiring ``f`` monic.
    """
    if beta % 2 == 0:
        raise EvenLength(f"beta = {beta} is even")
    if not fbar or bp_gcd(fbar, BinaryPolynomial.x_n_minus_1(beta)) != fbar:
        raise NotADivisor(f"{fbar.pretty()} does not divide x^{beta} - 1 over Z2")
    lifted = fbar.lift().coeffs
    even = QuaternaryPolynomial(c if i % 2 == 0 else 0 for i, c in enumerate(lifted))
    odd = QuaternaryPolynomial(c if i % 2 else 0 for i, c in enumerate(lifted))
    g = even * even - odd * odd
    if g.leading == 3:
        g = -g
    if any(g.coeffs[1::2]):
        raise AssertionError("Graeffe square has odd-exponent terms")
    return QuaternaryPolynomial(g.coeffs[::2])


def gen_poly_binary_cyclic(words: Iterable[Sequence[int]], n: int) -> BinaryPolynomial:
    """Generator polynomial of the binary cyclic code spanned by ``words``.

    This is ``gcd(x^n - 1, theta(w) for w in words)``; the zero code gets
    ``x^n - 1``.  For ``n = 0`` the only code is the trivial one and the
    result is ``1``.
    """
    if n == 0:
        return BinaryPolynomial.one()
    polys = [BinaryPolynomial(w) for w in words]
    assert _binary_span_is_cyclic([p.to_word(n) for p in polys], n), \
        "words do not span a cyclic code"
    return reduce(bp_gcd, polys, BinaryPolynomial.x_n_minus_1(n))


def _binary_span_is_cyclic(words, n) -> bool:
    from . import kernels

    vecs = [sum(b << i for i, b in enumerate(w)) for w in words]
    pivots = kernels.binary_echelon(vecs, range(n))

    def reduce_vec(v):
        for c, p in pivots:
            if v >> c & 1:
                v ^= p
        return v

    mask = (1 << n) - 1
    return all(not reduce_vec(((v << 1) | (v >> (n - 1))) & mask) for _, v in pivots)


def shift(w: MixedWord, i: int = 1) -> MixedWord:
    """The cyclic ``i``-th shift, i.e. ``theta^-1(x^i * theta(w))``."""
    return w.shift(i)
