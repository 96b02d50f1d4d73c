"""Walkthrough: p(5n+4) = 0 mod 5, from two independent directions.

The generating-function side builds 5 * prod (1-q^(5n))^5/(1-q^n)^6 with the
series engine; the oracle side computes p(n) by Euler's pentagonal-number
recurrence, never touching the engine.  Their agreement is the content of
the classical congruence identity.

Run:  python demos/partition_congruence.py
"""

from theta5 import partition_p
from theta5.series import FracSeries
from theta5.arith import pentagonal_numbers

N = 20

print("== oracle side: pentagonal-number recurrence")
row = [partition_p(5 * n + 4) for n in range(8)]
print(f"p(4), p(9), p(14), ... = {row}")
print(f"all divisible by 5: {all(v % 5 == 0 for v in row)}")
print()

print("== engine side: 5 * prod (1-q^(5n))^5 / (1-q^n)^6")
num = FracSeries.from_terms([(0, 1)], order=N)
for n in range(1, N):
    if 5 * n < N:
        num = num * FracSeries.from_terms([(0, 1), (5 * n, -1)]) ** 5
den = FracSeries.from_terms([(0, 1)], order=N)
for n in range(1, N):
    den = den * FracSeries.from_terms([(0, 1), (n, -1)]) ** 6
gf = (num * den.inverse()).scalar_mul(5)
coeffs = [int(gf.coefficient(n).rational_value()) for n in range(8)]
print(f"q-expansion coefficients  = {coeffs}")
print()

print(f"match: {row == coeffs}")
print()
print("the partition generating function itself is the inverse Euler product:")
euler = FracSeries.from_terms(pentagonal_numbers(12), order=12)
print(f"1/prod(1-q^n) = {euler.inverse()}")
