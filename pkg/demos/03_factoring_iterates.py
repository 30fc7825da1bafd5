"""
Factoring T_ell^n(x) - t mod p without factoring
=================================================

The factorization pattern of an iterate is determined by where t sits in
the graph over F_p: its preperiod and the divisor class of its eventual
cycle.  Here the closed-form pattern is checked against an honest
squarefree + distinct-degree factorization.
"""

from chebdyn import (all_iterates_irreducible, classify_t,
                     factor_pattern_actual, factor_pattern_predicted)

# 105 = 1 mod 13, and 1 hangs one step above the fixed point -1 in the
# graph of T_2 on F_13
cls = classify_t(2, 13, 105)
print(f"t = 105 mod 13: preperiod {cls.rho}, cycle divisor "
      f"{cls.cycle_divisor}, branch {cls.branch}")

for n in (1, 2, 3, 4):
    predicted = factor_pattern_predicted(2, 13, n, 105)
    actual = factor_pattern_actual(2, 13, n, 105)
    print(f"T_2^{n} - 105 mod 13: {actual}   "
          f"(prediction agrees: {predicted == actual})")

# maximal preperiod forces irreducibility at every level: an integer
# irreducibility certificate from one cheap mod-p computation
print()
for (ell, p, t) in ((2, 3, 105), (2, 3, 0), (3, 53, 2)):
    flag = all_iterates_irreducible(ell, p, t)
    print(f"every T_{ell}^n - {t} irreducible, witnessed mod {p}: {flag}")

# a full residue sweep on a small instance
print()
mismatches = sum(
    factor_pattern_predicted(3, 17, 2, t) != factor_pattern_actual(3, 17, 2, t)
    for t in range(17))
print(f"T_3^2 - t mod 17, all 17 residues t: {mismatches} mismatches")
