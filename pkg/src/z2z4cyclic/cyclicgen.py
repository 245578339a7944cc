"""Generator polynomials ``(b, l, f, h)`` of Z2Z4-additive cyclic codes.

A cyclic code with odd ``beta`` is ``<(b | 0), (l | f*h + 2f)>`` inside
Z2[x]/(x^alpha - 1) x Z4[x]/(x^beta - 1).  :func:`compute_generators`
recovers the four polynomials from any generator matrix and
:func:`reconstruct` goes back.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    BinaryPolynomial, QuaternaryPolynomial, bp_gcd, exact_quotient, gen_poly_binary_cyclic,
    hensel_lift, poly_divmod,
)
from .codes import AdditiveCode, is_cyclic, kernel_code, puncture_y, residue, shift_period, torsion
from .errors import (
    EvenLength, InternalInconsistency, InvalidGenerators, NoSolution, NonUnitLeadingCoefficient,
    NotADivisor, NotCyclic,
)
from .linalg import MixedMatrix, find_preimage_with_y
from .words import MixedWord


@dataclass(frozen=True)
class CyclicGenerators:
    alpha: int
    beta: int
    b: BinaryPolynomial
    l: BinaryPolynomial  # noqa: E741
    f: QuaternaryPolynomial
    h: QuaternaryPolynomial

    @property
    def mixed_poly(self) -> QuaternaryPolynomial:
        """``f*h + 2f`` reduced modulo ``x^beta - 1``."""
        return (self.f * self.h + self.f * 2).reduce_cyclic(self.beta)

    def lines(self, pretty: bool = False) -> list[str]:
        fmt = (lambda p: p.pretty()) if pretty else str
        return [f"b: {fmt(self.b)}", f"l: {fmt(self.l)}", f"f: {fmt(self.f)}", f"h: {fmt(self.h)}"]

    def __str__(self):
        return "\n".join(self.lines())


def _check_beta(beta: int) -> None:
    if beta % 2 == 0:
        raise EvenLength(f"beta = {beta} is even; it must be odd")


def compute_generators(C: AdditiveCode, check_cyclic: bool = True) -> CyclicGenerators:
    """Run the six steps and return ``(b, l, f, h)``.

    For ``alpha = 0`` the binary part is the trivial ring and ``b = 1``,
    ``l = 0``.
    """
    alpha, beta = C.alpha, C.beta
    _check_beta(beta)
    if check_cyclic and not is_cyclic(C):
        raise NotCyclic("code is not cyclic")

    # Steps 1-2: torsion and residue of the quaternary projection
    cy = puncture_y(C)
    fbar = gen_poly_binary_cyclic(torsion(cy, beta), beta)
    fhbar = gen_poly_binary_cyclic(residue(cy, beta), beta)
    try:
        hbar = exact_quotient(fhbar, fbar)
    except NotADivisor as exc:
        raise InternalInconsistency(f"torsion generator does not divide residue generator: {exc}")

    # Step 3
    f = hensel_lift(fbar, beta)
    h = hensel_lift(hbar, beta)

    # Step 4
    b = gen_poly_binary_cyclic(kernel_code(C), alpha)

    # Step 5: any preimage works, two differ by an element of C_0 = <b>
    target = (f * h + f * 2).to_word(beta)
    try:
        c = find_preimage_with_y(C.gens, target)
    except NoSolution as exc:
        raise InternalInconsistency(f"no codeword has quaternary part f*h + 2f: {exc}")

    # Step 6
    l = BinaryPolynomial.from_word(c.x) % b  # noqa: E741
    return CyclicGenerators(alpha, beta, b, l, f, h)


@dataclass
class Condition:
    name: str
    passed: bool
    detail: str


@dataclass
class ConditionReport:
    conditions: list[Condition] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def __getitem__(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self):
        return "\n".join(f"{c.name}: {'pass' if c.passed else 'FAIL'} ({c.detail})"
                         for c in self.conditions)


def _remainder(a, d):
    """Remainder of ``a`` by ``d``, or ``None`` when ``d`` is not a valid divisor."""
    try:
        return poly_divmod(a, d)[1]
    except (NonUnitLeadingCoefficient, ZeroDivisionError):
        return None


def verify_conditions(g: CyclicGenerators) -> ConditionReport:
    """Check each of the four conditions independently."""
    report = ConditionReport()
    xb = QuaternaryPolynomial.x_n_minus_1(g.beta)
    xa = BinaryPolynomial.x_n_minus_1(g.alpha)
    fbar, hbar = g.f.mod2(), g.h.mod2()

    # C1: f and h coprime divisors of x^beta - 1
    gcd = bp_gcd(fbar, hbar)
    rem_f, rem_h, rem_fh = _remainder(xb, g.f), _remainder(xb, g.h), _remainder(xb, g.f * g.h)
    ok = (g.beta % 2 == 1 and gcd == BinaryPolynomial.one()
          and rem_f is not None and rem_h is not None and rem_fh is not None
          and not rem_f and not rem_h and not rem_fh)
    report.conditions.append(Condition(
        "C1", ok, f"gcd(f mod 2, h mod 2) = {gcd}; (x^{g.beta}-1) mod f*h = {rem_fh}"))

    # C2: b divides x^alpha - 1
    rem_b = _remainder(xa, g.b)
    report.conditions.append(Condition(
        "C2", rem_b is not None and not rem_b, f"(x^{g.alpha}-1) mod b = {rem_b}"))

    # C3: deg l < deg b
    report.conditions.append(Condition(
        "C3", g.l.degree < g.b.degree, f"deg l = {g.l.degree}, deg b = {g.b.degree}"))

    # C4: b divides (x^beta - 1)/fbar * l over Z2
    rem4 = None
    q, r = (None, None) if not fbar else poly_divmod(BinaryPolynomial.x_n_minus_1(g.beta), fbar)
    if q is not None and not r:
        rem4 = _remainder(q * g.l, g.b)
    report.conditions.append(Condition(
        "C4", rem4 is not None and not rem4,
        f"((x^{g.beta}-1)/fbar * l) mod b = {rem4}" if rem4 is not None
        else "f mod 2 does not divide x^beta - 1"))
    return report


def reconstruct(g: CyclicGenerators, check: bool = True) -> AdditiveCode:
    """The code ``<(b | 0), (l | f*h + 2f)>`` as a reduced generator matrix.

    The mixed generator only returns to itself after ``lcm(alpha, beta)``
    shifts, so that many shifts are spanned.
    """
    _check_beta(g.beta)
    if check:
        report = verify_conditions(g)
        if not report.ok:
            failed = ", ".join(c.name for c in report.conditions if not c.passed)
            raise InvalidGenerators(f"conditions fail: {failed}")
    alpha, beta = g.alpha, g.beta
    bw = MixedWord(g.b.to_word(alpha), (0,) * beta)
    mw = MixedWord(g.l.to_word(alpha), g.mixed_poly.to_word(beta))
    rows = [bw.shift(i) for i in range(alpha)]
    rows += [mw.shift(j) for j in range(shift_period(alpha, beta))]
    return AdditiveCode(MixedMatrix(alpha, beta, rows)).reduced()
