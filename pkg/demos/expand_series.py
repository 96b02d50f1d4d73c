"""Walkthrough: building exact q-expansions.

Theta constants with rational characteristics, Dedekind eta with rational
multipliers, and eta quotients all come out as FracSeries: exact Q(zeta_5)
coefficients on a fractional exponent grid, with the phase, the fractional
q-power, and the power of 2*pi*i carried in a prefactor.

Run:  python demos/expand_series.py
"""

from fractions import Fraction as F

from theta5 import char, eta_q, eta_quotient, theta_const, theta_const_product

print("== the four classical theta constants")
for eps, eps_p in [(0, 0), (1, 0), (0, 1), (1, 1)]:
    t = theta_const(char(eps, eps_p), 0, 8)
    print(f"theta[{eps},{eps_p}] = {t}")

print()
print("== the level-five family: denominators 5 in the characteristics")
t = theta_const(char(1, F(1, 5)), 0, 6)
print(f"theta[1,1/5]     = {t}")
t = theta_const(char(F(1, 5), F(1, 5)), 0, 2)
print(f"theta[1/5,1/5]   = {t}")
print("   note the prefactor q^(1/200): the canonical q-power eps^2/8")

print()
print("== z-derivative coefficients carry powers of 2*pi*i")
tp = theta_const(char(1, 1), 1, 12)
print(f"theta'[1,1]      = {tp}")
print("   i.e. -2*pi*eta(tau)^3: the phase e(1/4) times (2*pi*i) is -2*pi")

print()
print("== the same constant two ways: direct sum vs triple product")
a = theta_const(char(1, F(3, 5)), 0, 6)
b = theta_const_product(char(1, F(3, 5)), 6)
print(f"sum form:     {a}")
print(f"product form: {b}")

print()
print("== eta and eta quotients")
print(f"eta(tau)          = {eta_q(1, 14)}")
print(f"eta(tau/5)        = {eta_q(F(1, 5), 3)}")
print(f"eta^5(t)/eta(5t)  = {eta_quotient([(1, 5), (5, -1)], 12)}")
print(f"eta^5(5t)/eta(t)  = {eta_quotient([(5, 5), (1, -1)], 12)}")
