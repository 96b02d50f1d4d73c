"""Theta constants with rational characteristics and Dedekind eta, as exact q-series.

A characteristic is a pair (eps, eps') of rationals.  The theta constant and
its first three z-derivative coefficients at z = 0 are Fourier series

    theta[eps, eps']^(m) = sum_n (2*pi*i*(n + eps/2))^m
        * e((n + eps/2) * eps'/2) * q^((n + eps/2)^2 / 2)

whose n-independent parts (the phase e(eps*eps'/4) and the q-power eps^2/8)
are extracted into the series prefactor, leaving tail coefficients
(n + eps/2)^m * e(n*eps'/2) in Q(zeta_5) whenever the denominator of eps'
divides 5.  The Jacobi triple product provides an independent product-form
construction of the same constants, used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .cyclo import CycloQ5, Phase, Rat
from .series import FracSeries


@dataclass(frozen=True)
class ThetaChar:
    """A characteristic pair (eps, eps'); denominators divide 5 for catalog use."""
    eps: Fraction
    eps_prime: Fraction

    def __init__(self, eps: Rat, eps_prime: Rat):
        object.__setattr__(self, "eps", Fraction(eps))
        object.__setattr__(self, "eps_prime", Fraction(eps_prime))

    def negated(self) -> "ThetaChar":
        return ThetaChar(-self.eps, -self.eps_prime)

    def __str__(self) -> str:
        return f"[{self.eps}, {self.eps_prime}]"


def char(eps: Rat, eps_prime: Rat) -> ThetaChar:
    return ThetaChar(eps, eps_prime)


#: The twelve characteristics appearing in the level-five catalog.
CATALOG_CHARS: tuple[ThetaChar, ...] = tuple(
    char(*pair) for pair in [
        (1, Fraction(1, 5)), (1, Fraction(3, 5)),
        (Fraction(1, 5), 1), (Fraction(3, 5), 1),
        (Fraction(1, 5), Fraction(1, 5)), (Fraction(3, 5), Fraction(3, 5)),
        (Fraction(1, 5), Fraction(3, 5)), (Fraction(3, 5), Fraction(9, 5)),
        (Fraction(1, 5), Fraction(7, 5)), (Fraction(3, 5), Fraction(1, 5)),
        (Fraction(1, 5), Fraction(9, 5)), (Fraction(3, 5), Fraction(7, 5)),
    ]
)


def theta_const(ch: ThetaChar, deriv_order: int = 0, order: Rat = 20) -> FracSeries:
    """The theta constant (deriv_order = 0) or its z-derivative coefficient.

    The result has cpow = deriv_order and is exact for relative q-exponents
    strictly below ``order``.  Characteristics are not reduced here; the
    shift rules are exposed separately so they can be tested as identities.
    """
    if deriv_order < 0 or deriv_order > 3:
        raise ValueError("derivative order must be between 0 and 3")
    order = Fraction(order)
    if order <= 0:
        raise ValueError("order must be positive")
    e, ep = ch.eps, ch.eps_prime
    terms: list[tuple[Fraction, CycloQ5]] = []
    center = round(-e / 2)

    def emit(n: int) -> bool:
        r = Fraction(n) * (Fraction(n) + e) / 2
        if r >= order:
            return False
        a = Fraction(n) + e / 2
        c = CycloQ5(a ** deriv_order) * Phase(n * ep / 2).to_cyclo()
        terms.append((r, c))
        return True

    n = center
    while emit(n):
        n += 1
    n = center - 1
    while emit(n):
        n -= 1
    return FracSeries.from_terms(terms, order=order, cpow=deriv_order,
                                 phase=Phase(e * ep / 4), qpow=e * e / 8)


def theta_const_product(ch: ThetaChar, order: Rat = 20) -> FracSeries:
    """The same theta constant via the triple product

        e(eps*eps'/4) x^(eps^2/4) prod_n (1-x^(2n)) (1+e(eps'/2) x^(2n-1+eps))
                                         (1+e(-eps'/2) x^(2n-1-eps))

    with x = q^(1/2).  Requires |eps| <= 1 so all factor exponents are
    nonnegative; this covers every catalog characteristic.
    """
    order = Fraction(order)
    if order <= 0:
        raise ValueError("order must be positive")
    e, ep = ch.eps, ch.eps_prime
    if abs(e) > 1:
        raise ValueError("product form requires |eps| <= 1")
    w = Phase(ep / 2).to_cyclo()
    wbar = Phase(-ep / 2).to_cyclo()
    acc = FracSeries.from_terms([(0, 1)], order=order)
    n = 1
    while True:
        done = True
        for coeff, expo in ((CycloQ5(-1), Fraction(n)),
                            (w, Fraction(2 * n - 1) / 2 + e / 2),
                            (wbar, Fraction(2 * n - 1) / 2 - e / 2)):
            if expo < order:
                done = False
                acc = acc * FracSeries.from_terms([(0, 1), (expo, coeff)])
        if done:
            break
        n += 1
    return acc.phase_mul(Phase(e * ep / 4)).qpow_shift(e * e / 8)


def eta_q(mult: Rat, order: Rat = 20, offset: Rat = 0) -> FracSeries:
    """Dedekind eta at mult*tau + offset:  e(offset/24) q^(mult/24) prod (1 - e(n*offset) q^(n*mult)).

    ``offset`` must make every e(n*offset) land in Q(zeta_5) (denominator
    of offset dividing 5, or an integer); offset 1/5 realizes the
    (tau+1)/5 arguments needed by the catalog.
    """
    mult = Fraction(mult)
    offset = Fraction(offset)
    order = Fraction(order)
    if mult <= 0:
        raise ValueError("mult must be positive")
    if order <= 0:
        raise ValueError("order must be positive")
    acc = FracSeries.from_terms([(0, 1)], order=order)
    n = 1
    while n * mult < order:
        c = -Phase(n * offset).to_cyclo()
        acc = acc * FracSeries.from_terms([(0, 1), (n * mult, c)])
        n += 1
    return acc.phase_mul(Phase(offset / 24)).qpow_shift(mult / 24)


EtaQuotientSpec = Iterable[tuple[Rat, int]]


def eta_quotient(spec: EtaQuotientSpec, order: Rat = 20) -> FracSeries:
    """prod_i eta(m_i * tau)^(e_i) for a nonempty list of (m_i, e_i), m_i distinct."""
    entries = [(Fraction(m), int(e)) for m, e in spec]
    if not entries:
        raise ValueError("eta quotient spec must be nonempty")
    if len({m for m, _ in entries}) != len(entries):
        raise ValueError("eta quotient multipliers must be distinct")
    order = Fraction(order)
    num = FracSeries.one()
    den = FracSeries.one()
    any_neg = False
    for m, e in entries:
        if e > 0:
            num = num * eta_q(m, order) ** e
        elif e < 0:
            any_neg = True
            den = den * eta_q(m, order) ** (-e)
    if not any_neg:
        return num._clip_abs(num.abs_order())
    return num * den.inverse()


def char_shift_phase(ch: ThetaChar, m: int, n: int) -> tuple[Phase, ThetaChar]:
    """The 2-shift rule: theta[eps+2m, eps'+2n] = e(eps*n/2) * theta[eps, eps'].

    Returns the multiplier phase and the shifted characteristic
    (eps + 2m, eps' + 2n); the multiplier does not depend on m.
    """
    shifted = ThetaChar(ch.eps + 2 * m, ch.eps_prime + 2 * n)
    return Phase(ch.eps * n / 2), shifted


def reduce_char(ch: ThetaChar) -> tuple[Phase, ThetaChar]:
    """Reduce eps' into (-1, 1] by 2-shifts; returns (p, base) with theta[ch] = p * theta[base]."""
    n = 0
    ep = ch.eps_prime
    while ep > 1:
        ep -= 2
        n += 1
    while ep <= -1:
        ep += 2
        n -= 1
    base = ThetaChar(ch.eps, ep)
    phase, back = char_shift_phase(base, 0, n)
    assert back == ch
    return phase, base
