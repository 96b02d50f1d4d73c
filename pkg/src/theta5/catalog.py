"""The level-five identity catalog: builders producing exact left/right series pairs,
plus the verification drivers and report serialization.

Every entry is verified in cross-multiplied polynomial form, so no theta
series is ever inverted; both sides of a pair always carry the same power
of (2*pi*i).  Entries whose printed source carries a misprint ship two
variants: "as-stated" (the printed form, which fails and is reported as
failing) and "corrected" (the repaired form, which passes).  The default
suite runs as-stated variants and reports; it never silently corrects.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from . import arith
from .cyclo import CycloQ5, Phase, Rat, render_rational, sqrt5
from .series import FracSeries, series_equal
from .theta import (CATALOG_CHARS, ThetaChar, char, char_shift_phase, eta_q,
                    eta_quotient, theta_const, theta_const_product)

AS_STATED = "as-stated"
CORRECTED = "corrected"

#: (label, lhs, rhs) triples produced by a builder.
Pairs = list[tuple[str, FracSeries, FracSeries]]


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    title: str
    location: str
    min_meaningful_order: int
    margin: int
    build: Callable[[Fraction, str], Pairs]
    variants: tuple[str, ...] = (AS_STATED,)


@dataclass
class IdentityReport:
    id: str
    variant: str
    order_checked: Optional[Fraction]
    passed: bool
    first_mismatch_exponent: Optional[Fraction] = None
    lhs_coeff: Optional[CycloQ5] = None
    rhs_coeff: Optional[CycloQ5] = None
    label: Optional[str] = None
    reason: str = ""
    elapsed: float = 0.0
    location: str = ""


# ---------------------------------------------------------------------------
# cached primitives
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _th(e: Fraction, ep: Fraction, m: int, order: Fraction) -> FracSeries:
    return theta_const(char(e, ep), m, order)


@lru_cache(maxsize=None)
def _th5(e: Fraction, ep: Fraction, order: Fraction) -> FracSeries:
    return _th(e, ep, 0, order) ** 5


@lru_cache(maxsize=None)
def _eta(mult: Fraction, order: Fraction, offset: Fraction = Fraction(0)) -> FracSeries:
    return eta_q(mult, order, offset)


@lru_cache(maxsize=None)
def _eta_quot(spec: tuple[tuple[Fraction, int], ...], order: Fraction) -> FracSeries:
    return eta_quotient(spec, order)


def _z(k: int) -> CycloQ5:
    return CycloQ5.zeta(k)


def _f(num: Rat, den: int = 1) -> Fraction:
    return Fraction(num, den)


def _kernel_series(kernel: str, order: Fraction, scale5: int = 1,
                   constant: Rat = 0, factor: Rat = 1) -> FracSeries:
    """constant + factor * sum_{n>=1} kernel(n) q^n, an oracle-built series."""
    n_max = -(-order.numerator // order.denominator)  # ceil
    terms: list[tuple[Rat, CycloQ5]] = []
    if constant:
        terms.append((0, CycloQ5(constant)))
    fac = CycloQ5(factor) if not isinstance(factor, CycloQ5) else factor
    for n in range(1, n_max + 1):
        if Fraction(n) < order:
            terms.append((n, fac * arith.divisor_sum(kernel, n)))
    return FracSeries.from_terms(terms, order=order)


def _unit_product(order: Fraction, factors) -> FracSeries:
    """prod of (1 + c q^e) factors with e > 0, truncated below order."""
    acc = FracSeries.from_terms([(0, 1)], order=order)
    for e, c in factors:
        if Fraction(e) < order:
            acc = acc * FracSeries.from_terms([(0, 1), (e, c)])
    return acc


def _check_unit_denominator(series: FracSeries, what: str) -> None:
    if series.is_zero_tail():
        raise ArithmeticError(f"{what}: cross-multiplied denominator has zero tail")


def _homogeneous(pairs: Pairs) -> Pairs:
    for label, lhs, rhs in pairs:
        if not lhs.is_zero_tail() and not rhs.is_zero_tail() and lhs.cpow != rhs.cpow:
            raise ArithmeticError(
                f"builder bug in {label!r}: sides have constant powers {lhs.cpow} vs {rhs.cpow}")
    return pairs


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _build_e1(N: Fraction, variant: str) -> Pairs:
    lhs = _eta_quot(((_f(1), 5), (_f(5), -1)), N)
    rhs = _kernel_series("A", N, constant=1, factor=-5)
    return [("eta^5(t)/eta(5t) = 1 - 5*sum A(n) q^n", lhs, rhs)]


def _build_e2(N: Fraction, variant: str) -> Pairs:
    lhs = _eta_quot(((_f(5), 5), (_f(1), -1)), N)
    rhs = _kernel_series("B", N)
    return [("eta^5(5t)/eta(t) = sum B(n) q^n", lhs, rhs)]


def _build_e3(N: Fraction, variant: str) -> Pairs:
    n_max = -(-N.numerator // N.denominator)
    lhs = FracSeries.from_terms(
        [(n, arith.partition_p(5 * n + 4)) for n in range(n_max + 1) if Fraction(n) < N],
        order=N)
    num = _unit_product(N, ((5 * n, CycloQ5(-1)) for n in range(1, n_max + 1))) ** 5
    den = _unit_product(N, ((n, CycloQ5(-1)) for n in range(1, n_max + 1))) ** 6
    rhs = (num * den.inverse()).scalar_mul(5)
    return [("sum p(5n+4) q^n = 5 prod (1-q^(5n))^5/(1-q^n)^6", lhs, rhs)]


def _build_e4(N: Fraction, variant: str) -> Pairs:
    lhs = _th(_f(1), _f(1), 1, N)
    rhs = (_eta(_f(1), N) ** 3).cpow_shift(1).phase_mul(Phase(Fraction(1, 4)))
    return [("theta'[1,1] = (2*pi*i) e(1/4) eta^3", lhs, rhs)]


# Thm 1.1 entries: theta'[1,1]^4 * (P^2 + cPQ*PQ + cQ2*Q^2) = (2*pi*i)^4 w * th_A th_B (PQ)^2
_T1_DATA = {
    "T1a": ((1, _f(1, 5)), (1, _f(3, 5)),
            {AS_STATED: (CycloQ5(-11), CycloQ5(-1), CycloQ5(1))}),
    "T1b": ((_f(3, 5), 1), (_f(1, 5), 1),
            {AS_STATED: (CycloQ5(-11), CycloQ5(-1), _z(4))}),
    "T1c": ((_f(1, 5), _f(1, 5)), (_f(3, 5), _f(3, 5)),
            {AS_STATED: (_z(4) * -11, -_z(3), CycloQ5(1))}),
    "T1d": ((_f(1, 5), _f(3, 5)), (_f(3, 5), _f(9, 5)),
            {AS_STATED: (_z(1) * 11, -_z(2), CycloQ5(1)),
             CORRECTED: (_z(2) * -11, -_z(4), CycloQ5(1))}),
    "T1e": ((_f(1, 5), _f(7, 5)), (_f(3, 5), _f(1, 5)),
            {AS_STATED: (_z(3) * -11, -_z(1), _z(3))}),
    "T1f": ((_f(1, 5), _f(9, 5)), (_f(3, 5), _f(7, 5)),
            {AS_STATED: (_z(1) * -11, -_z(2), _z(3))}),
}


def _build_t1(entry_id: str) -> Callable[[Fraction, str], Pairs]:
    (ea, epa), (eb, epb), table = _T1_DATA[entry_id]

    def build(N: Fraction, variant: str) -> Pairs:
        cpq, cq2, w = table.get(variant, table[AS_STATED])
        ta = _th(_f(ea), _f(epa), 0, N)
        tb = _th(_f(eb), _f(epb), 0, N)
        P = _th5(_f(ea), _f(epa), N)
        Q = _th5(_f(eb), _f(epb), N)
        PQ = P * Q
        den = P * P + PQ.scalar_mul(cpq) + (Q * Q).scalar_mul(cq2)
        _check_unit_denominator(den, entry_id)
        tp4 = _th(_f(1), _f(1), 1, N) ** 4
        lhs = tp4 * den
        rhs = ((PQ * PQ) * (ta * tb)).scalar_mul(w).cpow_shift(4)
        return [(f"{entry_id} cross-multiplied", lhs, rhs)]

    return build


# §4 derivative formulas: theta'_X * 10 th_A^3 th_B^3 = s * theta_X * theta'[1,1] * (cP*P + cQ*Q)
_D_DATA = {
    "D1": ((_f(1, 5), _f(1, 5)), (_f(3, 5), _f(3, 5)), "A",
           {AS_STATED: (CycloQ5(1), CycloQ5(1), _z(4) * -3)}),
    "D2": ((_f(1, 5), _f(1, 5)), (_f(3, 5), _f(3, 5)), "B",
           {AS_STATED: (CycloQ5(1), CycloQ5(3), _z(4))}),
    "D3": ((_f(1, 5), _f(3, 5)), (_f(3, 5), _f(9, 5)), "A",
           {AS_STATED: (CycloQ5(-1), CycloQ5(1), _z(1) * 3),
            CORRECTED: (CycloQ5(-1), CycloQ5(1), _z(2) * -3)}),
    "D4": ((_f(1, 5), _f(3, 5)), (_f(3, 5), _f(9, 5)), "B",
           {AS_STATED: (CycloQ5(-1), CycloQ5(3), -_z(1)),
            CORRECTED: (CycloQ5(-1), CycloQ5(3), _z(2))}),
    "D5": ((_f(1, 5), _f(1)), (_f(3, 5), _f(1)), "A",
           {AS_STATED: (-_z(3), CycloQ5(1), CycloQ5(3))}),
    "D6": ((_f(1, 5), _f(1)), (_f(3, 5), _f(1)), "B",
           {AS_STATED: (-_z(3), CycloQ5(3), CycloQ5(-1))}),
    "D7": ((_f(1, 5), _f(7, 5)), (_f(3, 5), _f(1, 5)), "A",
           {AS_STATED: (-_z(1), CycloQ5(1), _z(3) * -3)}),
    "D8": ((_f(1, 5), _f(7, 5)), (_f(3, 5), _f(1, 5)), "B",
           {AS_STATED: (-_z(1), CycloQ5(3), _z(3))}),
    "D9": ((_f(1, 5), _f(9, 5)), (_f(3, 5), _f(7, 5)), "A",
           {AS_STATED: (_z(1), CycloQ5(1), _z(1) * -3)}),
    "D10": ((_f(1, 5), _f(9, 5)), (_f(3, 5), _f(7, 5)), "B",
            {AS_STATED: (_z(1), CycloQ5(3), _z(1))}),
    "D11": ((_f(1), _f(1, 5)), (_f(1), _f(3, 5)), "A",
            {AS_STATED: (CycloQ5(1), CycloQ5(1), CycloQ5(-3))}),
    "D12": ((_f(1), _f(1, 5)), (_f(1), _f(3, 5)), "B",
            {AS_STATED: (CycloQ5(1), CycloQ5(3), CycloQ5(1))}),
}


def _build_d(entry_id: str) -> Callable[[Fraction, str], Pairs]:
    A, B, side, table = _D_DATA[entry_id]

    def build(N: Fraction, variant: str) -> Pairs:
        s, cp, cq = table.get(variant, table[AS_STATED])
        ta = _th(A[0], A[1], 0, N)
        tb = _th(B[0], B[1], 0, N)
        which = A if side == "A" else B
        X = ta if side == "A" else tb
        dX = _th(which[0], which[1], 1, N)
        den = ((ta ** 3) * (tb ** 3)).scalar_mul(10)
        _check_unit_denominator(den, entry_id)
        P = _th5(A[0], A[1], N)
        Q = _th5(B[0], B[1], N)
        tp = _th(_f(1), _f(1), 1, N)
        lhs = dX * den
        rhs = (X * tp * (P.scalar_mul(cp) + Q.scalar_mul(cq))).scalar_mul(s)
        return [(f"{entry_id} cross-multiplied", lhs, rhs)]

    return build


def _residue_relation_pairs(A: ThetaChar, B: ThetaChar, N: Fraction,
                            label_prefix: str) -> Pairs:
    """The two vanishing combinations forced by Res(phi,0) = Res(psi,0) = 0,
    cross-multiplied by theta_A^2 theta_B^2 theta'[1,1]."""
    ta = _th(A.eps, A.eps_prime, 0, N)
    tb = _th(B.eps, B.eps_prime, 0, N)
    da = _th(A.eps, A.eps_prime, 1, N)
    db = _th(B.eps, B.eps_prime, 1, N)
    d2a = _th(A.eps, A.eps_prime, 2, N)
    d2b = _th(B.eps, B.eps_prime, 2, N)
    tp = _th(_f(1), _f(1), 1, N)
    t3p = _th(_f(1), _f(1), 3, N)
    ta2, tb2 = ta * ta, tb * tb
    common = t3p * (ta2 * tb2)
    first = ((d2a * ta * tb2).scalar_mul(2) + d2b * ta2 * tb
             + (da * db * ta * tb).scalar_mul(4) + (da * da * tb2).scalar_mul(2)) * tp - common
    second = (d2a * ta * tb2 + (d2b * ta2 * tb).scalar_mul(2)
              - (da * db * ta * tb).scalar_mul(4) + (db * db * ta2).scalar_mul(2)) * tp - common
    zero = FracSeries.zero()
    return [(f"{label_prefix} first combination", first, zero),
            (f"{label_prefix} second combination", second, zero)]


def _build_r1(N: Fraction, variant: str) -> Pairs:
    return [_residue_relation_pairs(char(1, _f(1, 5)), char(1, _f(3, 5)), N, "R1")[0]]


def _build_r2(N: Fraction, variant: str) -> Pairs:
    return [_residue_relation_pairs(char(1, _f(1, 5)), char(1, _f(3, 5)), N, "R2")[1]]


def _build_r4(N: Fraction, variant: str) -> Pairs:
    return [_residue_relation_pairs(char(_f(1, 5), 1), char(_f(3, 5), 1), N, "R4")[0]]


def _build_r5(N: Fraction, variant: str) -> Pairs:
    return [_residue_relation_pairs(char(_f(1, 5), 1), char(_f(3, 5), 1), N, "R5")[1]]


def _second_derivative_bracket(A: ThetaChar, B: ThetaChar, N: Fraction,
                               swap: bool, bracket: tuple[CycloQ5, CycloQ5, CycloQ5],
                               scalar: CycloQ5) -> tuple[FracSeries, FracSeries]:
    """50*(th''_X th_X^5 th_Y^6 - th''_Y th_Y^5 th_X^6) = scalar * theta'[1,1]^2 * bracket(P,Q)."""
    ta = _th(A.eps, A.eps_prime, 0, N)
    tb = _th(B.eps, B.eps_prime, 0, N)
    d2a = _th(A.eps, A.eps_prime, 2, N)
    d2b = _th(B.eps, B.eps_prime, 2, N)
    P = _th5(A.eps, A.eps_prime, N)
    Q = _th5(B.eps, B.eps_prime, N)
    ta6 = P * ta
    tb6 = Q * tb
    diff = d2a * P * tb6 - d2b * Q * ta6
    if swap:
        diff = -diff
    lhs = diff.scalar_mul(50)
    c2, c1, c0 = bracket
    tp2 = _th(_f(1), _f(1), 1, N) ** 2
    rhs = (tp2 * ((P * P).scalar_mul(c2) + (P * Q).scalar_mul(c1)
                  + (Q * Q).scalar_mul(c0))).scalar_mul(scalar)
    return lhs, rhs


def _eta_chain_pairs(A: ThetaChar, B: ThetaChar, N: Fraction, label: str,
                     eta_top: FracSeries, eta_bottom: FracSeries,
                     theta_form_sign: int) -> Pairs:
    """The heat-equation chain shared by R3/R6/R7a:

    25 [Theta(th_B) th_A - Theta(th_A) th_B] * eta_bottom = eta_top^5 * th_A th_B
    eta_top^5 * theta'[1,1]^2 = sign * (2*pi*i)^2 * th_A^5 th_B^5 * eta_bottom
    """
    ta = _th(A.eps, A.eps_prime, 0, N)
    tb = _th(B.eps, B.eps_prime, 0, N)
    top5 = eta_top ** 5
    chain_lhs = ((tb.theta_op() * ta - ta.theta_op() * tb) * eta_bottom).scalar_mul(25)
    chain_rhs = top5 * (ta * tb)
    tp2 = _th(_f(1), _f(1), 1, N) ** 2
    P = _th5(A.eps, A.eps_prime, N)
    Q = _th5(B.eps, B.eps_prime, N)
    tf_lhs = top5 * tp2
    tf_rhs = ((P * Q) * eta_bottom).scalar_mul(theta_form_sign).cpow_shift(2)
    return [(f"{label} eta-chain", chain_lhs, chain_rhs),
            (f"{label} theta-form", tf_lhs, tf_rhs)]


def _build_r3(N: Fraction, variant: str) -> Pairs:
    A, B = char(1, _f(1, 5)), char(1, _f(3, 5))
    lhs, rhs = _second_derivative_bracket(
        A, B, N, swap=False,
        bracket=(CycloQ5(-4), CycloQ5(44), CycloQ5(4)), scalar=CycloQ5(1))
    pairs = [("R3 bracket", lhs, rhs)]
    # the chain runs through Theta log(th_A/th_B) = sqrt(5) eta^5(5t)/eta(t)
    ta = _th(A.eps, A.eps_prime, 0, N)
    tb = _th(B.eps, B.eps_prime, 0, N)
    eta1 = _eta(_f(1), N)
    eta5t = _eta(_f(5), N)
    chain_lhs = (ta.theta_op() * tb - tb.theta_op() * ta) * eta1
    chain_rhs = ((eta5t ** 5) * (ta * tb)).scalar_mul(sqrt5())
    pairs.append(("R3 eta-chain", chain_lhs, chain_rhs))
    tp2 = _th(_f(1), _f(1), 1, N) ** 2
    P = _th5(A.eps, A.eps_prime, N)
    Q = _th5(B.eps, B.eps_prime, N)
    tf_lhs = ((eta5t ** 5) * tp2).scalar_mul(sqrt5() * 25)
    tf_rhs = ((P * Q) * eta1).scalar_mul(-1).cpow_shift(2)
    pairs.append(("R3 theta-form", tf_lhs, tf_rhs))
    return pairs


def _build_r6(N: Fraction, variant: str) -> Pairs:
    A, B = char(_f(1, 5), 1), char(_f(3, 5), 1)
    lhs, rhs = _second_derivative_bracket(
        A, B, N, swap=True,
        bracket=(CycloQ5(4), CycloQ5(44), CycloQ5(-4)), scalar=_z(1))
    pairs = [("R6 bracket", lhs, rhs)]
    pairs += _eta_chain_pairs(A, B, N, "R6",
                              eta_top=_eta(_f(1, 5), N),
                              eta_bottom=_eta(_f(1), N),
                              theta_form_sign=-1)
    return pairs


def _build_r7a(N: Fraction, variant: str) -> Pairs:
    A, B = char(_f(1, 5), _f(1, 5)), char(_f(3, 5), _f(3, 5))
    lhs, rhs = _second_derivative_bracket(
        A, B, N, swap=True,
        bracket=(CycloQ5(4), _z(4) * -44, _z(3) * -4), scalar=CycloQ5(1))
    pairs = [("R7a bracket", lhs, rhs)]
    pairs += _eta_chain_pairs(A, B, N, "R7a",
                              eta_top=_eta(_f(1, 5), N, _f(1, 5)),
                              eta_bottom=_eta(_f(1), N, _f(1)),
                              theta_form_sign=+1)
    return pairs


def _farkas_kra_pairs(A: ThetaChar, B: ThetaChar, N: Fraction, label: str,
                      eta_top: FracSeries) -> Pairs:
    """3 (2*pi*i)^2 [Theta(eta_top) eta - Theta(eta) eta_top] th_A^2 th_B^2
       + eta_top eta [th'_A^2 th_B^2 + th'_B^2 th_A^2] = 0."""
    eta1 = _eta(_f(1), N)
    ta = _th(A.eps, A.eps_prime, 0, N)
    tb = _th(B.eps, B.eps_prime, 0, N)
    da = _th(A.eps, A.eps_prime, 1, N)
    db = _th(B.eps, B.eps_prime, 1, N)
    ta2, tb2 = ta * ta, tb * tb
    log_part = ((eta_top.theta_op() * eta1 - eta1.theta_op() * eta_top)
                * (ta2 * tb2)).scalar_mul(3).cpow_shift(2)
    sq_part = (eta_top * eta1) * (da * da * tb2 + db * db * ta2)
    return [(label, log_part + sq_part, FracSeries.zero())]


def _build_fk5(N: Fraction, variant: str) -> Pairs:
    return _farkas_kra_pairs(char(1, _f(1, 5)), char(1, _f(3, 5)), N,
                             "FK5 log-derivative relation", _eta(_f(5), N))


def _build_fk6(N: Fraction, variant: str) -> Pairs:
    return _farkas_kra_pairs(char(_f(1, 5), 1), char(_f(3, 5), 1), N,
                             "FK6 log-derivative relation", _eta(_f(1, 5), N))


@lru_cache(maxsize=None)
def _g_product(sign: int, N: Fraction) -> FracSeries:
    """prod (1-q^n)^5 (1 + (1 +- sqrt5)/2 q^n + q^(2n))^5 / (1-q^(5n))^3."""
    phi = (CycloQ5(1) + (sqrt5() if sign > 0 else -sqrt5())) * Fraction(1, 2)
    n_max = -(-N.numerator // N.denominator)
    acc = FracSeries.from_terms([(0, 1)], order=N)
    den = FracSeries.from_terms([(0, 1)], order=N)
    for n in range(1, n_max + 1):
        if Fraction(n) < N:
            acc = acc * FracSeries.from_terms([(0, 1), (n, -1)]) ** 5
            acc = acc * FracSeries.from_terms([(0, 1), (n, phi), (2 * n, 1)]) ** 5
        if Fraction(5 * n) < N:
            den = den * FracSeries.from_terms([(0, 1), (5 * n, -1)]) ** 3
    return acc * den.inverse()


@lru_cache(maxsize=None)
def _h_product(which: int, N: Fraction) -> FracSeries:
    """H1 = prod (1-q^n)^2 / ((1-q^(5n-1))(1-q^(5n-4)))^5,
       H2 = q * prod (1-q^n)^2 / ((1-q^(5n-2))(1-q^(5n-3)))^5."""
    n_max = -(-N.numerator // N.denominator)
    num = FracSeries.from_terms([(0, 1)], order=N)
    den = FracSeries.from_terms([(0, 1)], order=N)
    res_pair = (1, 4) if which == 1 else (2, 3)
    for n in range(1, n_max + 1):
        if Fraction(n) < N:
            num = num * FracSeries.from_terms([(0, 1), (n, -1)]) ** 2
        for r in res_pair:
            e = 5 * n - r
            if e >= 1 and Fraction(e) < N:
                den = den * FracSeries.from_terms([(0, 1), (e, -1)]) ** 5
    out = num * den.inverse()
    return out.qpow_shift(1) if which == 2 else out


def _c_plus_minus() -> tuple[CycloQ5, CycloQ5]:
    s5 = sqrt5()
    cp = (CycloQ5(25) + s5 * 11) * Fraction(1, 50)
    cm = (CycloQ5(25) - s5 * 11) * Fraction(1, 50)
    return cp, cm


def _build_c511(N: Fraction, variant: str) -> Pairs:
    s5 = sqrt5()
    lhs = (_eta_quot(((_f(1), 5), (_f(5), -1)), N).scalar_mul(s5 * Fraction(22, 50))
           + _eta_quot(((_f(5), 5), (_f(1), -1)), N).scalar_mul(s5 * 5))
    cp, cm = _c_plus_minus()
    gp, gm = _g_product(+1, N), _g_product(-1, N)
    rhs = (gp * gp).scalar_mul(cp) - (gm * gm).scalar_mul(cm)
    return [("22*sqrt5/50 Z1 + 5*sqrt5 Z2 = c+ G+^2 - c- G-^2", lhs, rhs)]


def _build_c521(N: Fraction, variant: str) -> Pairs:
    lhs = _kernel_series("S", N, constant=1, factor=6)
    cp, cm = _c_plus_minus()
    gp, gm = _g_product(+1, N), _g_product(-1, N)
    rhs = (gp * gp).scalar_mul(cp) + (gm * gm).scalar_mul(cm)
    return [("1 + 6 sum (sigma(n)-5 sigma(n/5)) q^n = c+ G+^2 + c- G-^2", lhs, rhs)]


def _build_ps1(sign: int) -> Callable[[Fraction, str], Pairs]:
    def build(N: Fraction, variant: str) -> Pairs:
        g = _g_product(sign, N)
        lhs = g * g
        s5 = sqrt5()
        outer = (CycloQ5(25) - s5 * 11 if sign > 0 else CycloQ5(25) + s5 * 11) * Fraction(1, 4)
        inner_sign = s5 if sign > 0 else -s5
        n_max = -(-N.numerator // N.denominator)
        terms: list[tuple[Rat, CycloQ5]] = [(0, CycloQ5(1))]
        for n in range(1, n_max + 1):
            if Fraction(n) < N:
                val = (CycloQ5(30 * arith.divisor_sum("C", n))
                       + inner_sign * arith.divisor_sum("D25", n))
                terms.append((n, outer * val))
        rhs = FracSeries.from_terms(terms, order=N)
        name = "+" if sign > 0 else "-"
        return [(f"G{name}^2 divisor-sum expansion", lhs, rhs)]

    return build


def _build_c611(N: Fraction, variant: str) -> Pairs:
    h1, h2 = _h_product(1, N), _h_product(2, N)
    lhs = h1 * h1 - h2 * h2
    rhs = (_eta_quot(((_f(5), 5), (_f(1), -1)), N).scalar_mul(11)
           + _eta_quot(((_f(1), 5), (_f(5), -1)), N))
    return [("H1^2 - H2^2 = 11 Z2 + Z1", lhs, rhs)]


def _build_c621(N: Fraction, variant: str) -> Pairs:
    h1, h2 = _h_product(1, N), _h_product(2, N)
    lhs = h1 * h1 + h2 * h2
    rhs = _kernel_series("S", N, constant=1, factor=6)
    return [("H1^2 + H2^2 = 1 + 6 sum S(n) q^n", lhs, rhs)]


def _build_ps2(which: int) -> Callable[[Fraction, str], Pairs]:
    def build(N: Fraction, variant: str) -> Pairs:
        h = _h_product(which, N)
        lhs = h * h
        n_max = -(-N.numerator // N.denominator)
        terms: list[tuple[Rat, CycloQ5]] = [(0, CycloQ5(1))] if which == 1 else []
        for n in range(1, n_max + 1):
            if Fraction(n) < N:
                c = 3 * arith.divisor_sum("C", n)
                e = arith.divisor_sum("E11", n) / 2
                terms.append((n, CycloQ5(c + e if which == 1 else c - e)))
        rhs = FracSeries.from_terms(terms, order=N)
        return [(f"H{which}^2 divisor-sum expansion", lhs, rhs)]

    return build


def _xyz_level5(N: Fraction) -> tuple[FracSeries, FracSeries, FracSeries]:
    X = _th5(_f(1), _f(1, 5), N)
    Y = _th5(_f(1), _f(3, 5), N)
    Z = _eta_quot(((_f(1), 5), (_f(5), -1)), N)
    return X, Y, Z


def _xyz_level5_shifted(N: Fraction) -> tuple[FracSeries, FracSeries, FracSeries]:
    Npre = Fraction(-(-N.numerator // (5 * N.denominator)) + 2)
    X = _th5(_f(1, 5), _f(1), Npre).rescale_exponent(5)
    Y = _th5(_f(3, 5), _f(1), Npre).rescale_exponent(5)
    Z = _eta_quot(((_f(5), 5), (_f(1), -1)), N)
    return X, Y, Z


def _build_me5(N: Fraction, variant: str) -> Pairs:
    X, Y, Z = _xyz_level5(N)
    XY = X * Y
    F = X * X - (XY).scalar_mul(11) - Y * Y
    lhs = (XY ** 9).scalar_mul(5 ** 5)
    rhs = (Z ** 10) * (F ** 5)
    return [("5^5 X^9 Y^9 = Z^10 (X^2-11XY-Y^2)^5", lhs, rhs)]


def _build_ode5(N: Fraction, variant: str) -> Pairs:
    X, Y, Z = _xyz_level5(N)
    F = X * X - (X * Y).scalar_mul(11) - Y * Y
    lhs = X.tau_derivative() * Y - X * Y.tau_derivative()
    rhs = (Z * F).scalar_mul(sqrt5() * Fraction(1, 25)).cpow_shift(1)
    return [("X'Y - XY' = (2*pi*i)/5^(3/2) Z (X^2-11XY-Y^2)", lhs, rhs)]


def _build_w5(N: Fraction, variant: str) -> Pairs:
    X, Y, Z = _xyz_level5(N)
    W = X * Y.tau_derivative() - Y * X.tau_derivative()
    F = X * X - (X * Y).scalar_mul(11) - Y * Y
    lhs = W ** 10
    rhs = (((X * Y) ** 9) * (F ** 5)).scalar_mul(Fraction(1, 5 ** 10)).cpow_shift(10)
    return [("W(X,Y)^10 = (2*pi*i/5)^10 X^9 Y^9 (X^2-11XY-Y^2)^5", lhs, rhs)]


def _build_me6(N: Fraction, variant: str) -> Pairs:
    X, Y, Z = _xyz_level5_shifted(N)
    XY = X * Y
    F = X * X + XY.scalar_mul(11) - Y * Y
    lhs = XY ** 9
    rhs = (Z ** 10) * (F ** 5)
    if variant == CORRECTED:
        rhs = -rhs
        label = "X^9 Y^9 = -Z^10 (X^2+11XY-Y^2)^5 (sign corrected)"
    else:
        label = "X^9 Y^9 = Z^10 (X^2+11XY-Y^2)^5"
    return [(label, lhs, rhs)]


def _build_ode6(N: Fraction, variant: str) -> Pairs:
    X, Y, Z = _xyz_level5_shifted(N)
    F = X * X + (X * Y).scalar_mul(11) - Y * Y
    lhs = X.tau_derivative() * Y - X * Y.tau_derivative()
    rhs = (Z * F).cpow_shift(1)
    return [("X'Y - XY' = 2*pi*i Z (X^2+11XY-Y^2)", lhs, rhs)]


def _build_w6(N: Fraction, variant: str) -> Pairs:
    X, Y, Z = _xyz_level5_shifted(N)
    F = X * X + (X * Y).scalar_mul(11) - Y * Y
    rhs = (((X * Y) ** 9) * (F ** 5)).cpow_shift(10)
    if variant == CORRECTED:
        W = X * Y.tau_derivative() - Y * X.tau_derivative()
        lhs = W ** 10
        rhs = -rhs
        label = "W(X,Y)^10 = -(2*pi*i)^10 X^9 Y^9 (X^2+11XY-Y^2)^5 (matrix and sign corrected)"
    else:
        W = (X - Y) * X.tau_derivative()
        lhs = W ** 10
        label = "repeated-column determinant^10 = (2*pi*i)^10 X^9 Y^9 (X^2+11XY-Y^2)^5"
    return [(label, lhs, rhs)]


def _build_heat(N: Fraction, variant: str) -> Pairs:
    pairs: Pairs = []
    for ch in CATALOG_CHARS:
        lhs = _th(ch.eps, ch.eps_prime, 2, N)
        rhs = _th(ch.eps, ch.eps_prime, 0, N).tau_derivative().scalar_mul(2).cpow_shift(1)
        pairs.append((f"heat {ch}", lhs, rhs))
    return pairs


def _build_shift(N: Fraction, variant: str) -> Pairs:
    pairs: Pairs = []
    for base, m, n in [(char(_f(1, 5), _f(1, 5)), 1, 0),
                       (char(_f(3, 5), -_f(1, 5)), 0, 1),
                       (char(1, _f(1, 5)), 0, 1),
                       (char(_f(1, 5), _f(3, 5)), -1, 2)]:
        p, shifted = char_shift_phase(base, m, n)
        lhs = theta_const(shifted, 0, N)
        rhs = theta_const(base, 0, N).phase_mul(p)
        pairs.append((f"theta{shifted} = e({p.a}) theta{base}", lhs, rhs))
    for ch in (char(_f(1, 5), _f(3, 5)), char(_f(3, 5), 1)):
        lhs = theta_const(ch.negated(), 0, N)
        rhs = theta_const(ch, 0, N)
        pairs.append((f"theta{ch.negated()} = theta{ch}", lhs, rhs))
        lhs1 = theta_const(ch.negated(), 1, N)
        rhs1 = -theta_const(ch, 1, N)
        pairs.append((f"theta'{ch.negated()} = -theta'{ch}", lhs1, rhs1))
    return pairs


def _build_tp_eq(N: Fraction, variant: str) -> Pairs:
    pairs: Pairs = []
    for ch in CATALOG_CHARS:
        pairs.append((f"sum = product {ch}",
                      _th(ch.eps, ch.eps_prime, 0, N),
                      theta_const_product(ch, N)))
    return pairs


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

def _entries() -> list[IdentityEntry]:
    es: list[IdentityEntry] = [
        IdentityEntry("E1", "eta^5(t)/eta(5t) divisor-sum expansion", "§1 Eq. (1)", 10, 2, _build_e1),
        IdentityEntry("E2", "eta^5(5t)/eta(t) divisor-sum expansion", "§1 Eq. (2)", 10, 2, _build_e2),
        IdentityEntry("E3", "partition congruence generating function", "§1 Ramanujan identity", 10, 2, _build_e3),
        IdentityEntry("E4", "first derivative theta constant as eta cube", "§2.3", 10, 2, _build_e4),
    ]
    t1_locs = {
        "T1a": "Thm 1.1, pair (1,1/5),(1,3/5)",
        "T1b": "Thm 1.1, pair (3/5,1),(1/5,1)",
        "T1c": "Thm 1.1, pair (1/5,1/5),(3/5,3/5)",
        "T1d": "Thm 1.1, pair (1/5,3/5),(3/5,9/5)",
        "T1e": "Thm 1.1, pair (1/5,7/5),(3/5,1/5)",
        "T1f": "Thm 1.1, pair (1/5,9/5),(3/5,7/5)",
    }
    for tid, loc in t1_locs.items():
        variants = (AS_STATED, CORRECTED) if tid == "T1d" else (AS_STATED,)
        es.append(IdentityEntry(tid, "quartic derivative-formula analogue", loc,
                                10, 10, _build_t1(tid), variants))
    d_locs = {"D1": "Thm 4.1", "D2": "Thm 4.1", "D3": "Thm 4.2", "D4": "Thm 4.2",
              "D5": "Thm 4.3", "D6": "Thm 4.3", "D7": "Thm 4.4", "D8": "Thm 4.4",
              "D9": "Thm 4.5", "D10": "Thm 4.5", "D11": "Thm 4.6", "D12": "Thm 4.6"}
    for did, loc in d_locs.items():
        variants = (AS_STATED, CORRECTED) if did in ("D3", "D4") else (AS_STATED,)
        es.append(IdentityEntry(did, "first-derivative formula, fifth powers", loc,
                                10, 8, _build_d(did), variants))
    es += [
        IdentityEntry("R1", "vanishing residue combination", "§5.1 Eq. (11)", 10, 8, _build_r1),
        IdentityEntry("R2", "vanishing residue combination", "§5.1 Eq. (12)", 10, 8, _build_r2),
        IdentityEntry("R3", "second-derivative difference, degree ten", "§5.1 Eq. (13)", 10, 10, _build_r3),
        IdentityEntry("R4", "vanishing residue combination", "§6.1 first relation", 10, 8, _build_r4),
        IdentityEntry("R5", "vanishing residue combination", "§6.1 second relation", 10, 8, _build_r5),
        IdentityEntry("R6", "second-derivative difference with eta chain", "§6.1", 10, 10, _build_r6),
        IdentityEntry("R7a", "second-derivative difference with shifted eta chain", "§7.1", 10, 10, _build_r7a),
        IdentityEntry("FK5", "log-derivative relation for eta(5t)/eta(t)", "Thm 5.2", 10, 8, _build_fk5),
        IdentityEntry("C511", "weighted eta-quotient combination", "Cor. 5.1.1", 10, 4, _build_c511),
        IdentityEntry("C521", "sigma-series as product combination", "Cor. 5.2.1", 10, 4, _build_c521),
        IdentityEntry("PS1a", "tenth-power product-series expansion", "Thm 5.3", 10, 4, _build_ps1(+1)),
        IdentityEntry("PS1b", "tenth-power product-series expansion", "Thm 5.3", 10, 4, _build_ps1(-1)),
        IdentityEntry("ME5", "modular equation of level five", "Thm 5.4", 20, 18, _build_me5),
        IdentityEntry("ODE5", "first-order differential relation", "Thm 5.5", 10, 10, _build_ode5),
        IdentityEntry("W5", "Wronskian tenth power", "Thm 5.6", 20, 30, _build_w5),
        IdentityEntry("FK6", "log-derivative relation for eta(t/5)/eta(t)", "Thm 6.2", 10, 8, _build_fk6),
        IdentityEntry("C611", "quintuple-product combination", "Cor. 6.1.1", 10, 4, _build_c611),
        IdentityEntry("C621", "sigma-series as quintuple-product combination", "Cor. 6.2.1", 10, 4, _build_c621),
        IdentityEntry("PS2a", "product-series expansion", "Thm 6.3", 10, 4, _build_ps2(1)),
        IdentityEntry("PS2b", "product-series expansion", "Thm 6.3", 10, 4, _build_ps2(2)),
        IdentityEntry("ME6", "modular equation of level five, mirror", "Thm 6.4", 20, 18,
                      _build_me6, (AS_STATED, CORRECTED)),
        IdentityEntry("ODE6", "first-order differential relation, mirror", "Thm 6.5", 10, 10, _build_ode6),
        IdentityEntry("W6", "Wronskian tenth power, mirror", "Thm 6.6", 20, 30,
                      _build_w6, (AS_STATED, CORRECTED)),
        IdentityEntry("HEAT", "heat equation across the twelve characteristics", "§2.4", 10, 4, _build_heat),
        IdentityEntry("SHIFT", "characteristic shift and negation rules", "§2.2", 10, 4, _build_shift),
        IdentityEntry("TP-EQ", "direct sum equals triple product", "§2.3", 10, 4, _build_tp_eq),
    ]
    return es


_CATALOG: list[IdentityEntry] = _entries()
_BY_ID: dict[str, IdentityEntry] = {e.id: e for e in _CATALOG}


def catalog() -> list[IdentityEntry]:
    """All identity entries, in catalog order."""
    return list(_CATALOG)


def lookup(entry_id: str) -> IdentityEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise KeyError(f"unknown identity id {entry_id!r}; see catalog()") from None


def verify(entry_id: str, order: Rat = 20, variant: str = AS_STATED) -> IdentityReport:
    """Build both sides of one catalog entry and compare them exactly."""
    entry = lookup(entry_id)
    order = Fraction(order)
    if order < entry.min_meaningful_order:
        raise ValueError(
            f"{entry_id}: order {order} is below the minimum meaningful order "
            f"{entry.min_meaningful_order}")
    if variant not in entry.variants:
        raise ValueError(f"{entry_id}: unknown variant {variant!r}; have {entry.variants}")
    t0 = time.perf_counter()
    pairs = _homogeneous(entry.build(order + entry.margin, variant))
    report = IdentityReport(entry_id, variant, None, True, location=entry.location)
    checked: Optional[Fraction] = None
    for label, lhs, rhs in pairs:
        res = series_equal(lhs, rhs)
        if res.order_checked is not None:
            checked = res.order_checked if checked is None else min(checked, res.order_checked)
        if not res.passed and report.passed:
            report.passed = False
            report.first_mismatch_exponent = res.first_mismatch
            report.lhs_coeff = res.lhs_coeff
            report.rhs_coeff = res.rhs_coeff
            report.label = label
            report.reason = res.reason
    report.order_checked = checked
    report.elapsed = time.perf_counter() - t0
    return report


def verify_all(order: Rat = 20, parallel: bool = False,
               variant: str = AS_STATED) -> list[IdentityReport]:
    """Verify every catalog entry (clamping the order up to each entry's minimum).

    ``variant`` selects which variant to run where an entry has several;
    entries lacking the requested variant fall back to as-stated.
    """
    order = Fraction(order)

    def run(entry: IdentityEntry) -> IdentityReport:
        v = variant if variant in entry.variants else AS_STATED
        return verify(entry.id, max(order, Fraction(entry.min_meaningful_order)), v)

    if parallel:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(run, _CATALOG))
    return [run(e) for e in _CATALOG]


# ---------------------------------------------------------------------------
# report serialization
# ---------------------------------------------------------------------------

def _coeff_json(c: Optional[CycloQ5]):
    if c is None:
        return None
    return [render_rational(x) for x in c.coeffs()]


def report_to_dict(r: IdentityReport) -> dict:
    """Stable-field-order dict: {id, location, variant, passed, order, first_mismatch}."""
    mismatch = None
    if not r.passed:
        mismatch = {
            "exponent": None if r.first_mismatch_exponent is None
            else render_rational(r.first_mismatch_exponent),
            "lhs": _coeff_json(r.lhs_coeff),
            "rhs": _coeff_json(r.rhs_coeff),
            "label": r.label,
            "reason": r.reason,
        }
    return {
        "id": r.id,
        "location": r.location,
        "variant": r.variant,
        "passed": r.passed,
        "order": None if r.order_checked is None else render_rational(r.order_checked),
        "first_mismatch": mismatch,
    }


def reports_to_json(reports: list[IdentityReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2)


def report_to_text(r: IdentityReport) -> str:
    status = "pass" if r.passed else "FAIL"
    order = "inf" if r.order_checked is None else render_rational(r.order_checked)
    line = f"{r.id:6s} [{r.variant:9s}] {status}  order<{order}  ({r.location})"
    if not r.passed:
        where = ("" if r.first_mismatch_exponent is None
                 else f" at q^{render_rational(r.first_mismatch_exponent)}")
        detail = r.reason or (f"lhs={r.lhs_coeff} rhs={r.rhs_coeff}")
        line += f"\n       mismatch{where} in {r.label!r}: {detail}"
    return line
