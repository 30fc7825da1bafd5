"""
How primes decompose in a radical tower
========================================

Adjoining compatible preimages of t = 105 under T_2 gives a tower of
number fields K_1, K_2, ... of degrees 2, 4, 8, ...  For a prime p away
from the ramified set, the residue degrees over p at every level follow
from the pattern rules; no number-field arithmetic is performed.
"""

from chebdyn import decompose_prime, ramified_candidates

# only finitely many primes can ramify: the Chebyshev maps are
# postcritically finite, so every discriminant uses the same primes
print("possible ramified primes for t = 105:",
      sorted(ramified_candidates(2, 105)))
print()

for p in (3, 5, 7, 11, 13):
    report = decompose_prime(2, 105, p, max_level=4)
    print(report.table_str())
    print()

# 13 is the smallest prime whose behavior differs from the cyclotomic
# tower over t = 0: it splits once and then stays at two primes
r13 = decompose_prime(2, 105, 13, 6)
degrees = [lv.primes for lv in r13.levels]
print("13 residue degrees by level:", degrees)
