"""
What fraction of the field is periodic?
========================================

Exactly (omega^- + omega^+) / (2 p^n) of the vertices sit on cycles.
As n grows the fraction oscillates, but along a tower of fields whose
degrees soak up every prime power it converges: to 1/2 for odd ell and
to 1/4 for ell = 2.
"""

from fractions import Fraction

from chebdyn import (build_graph, make_field, periodic_density,
                     tower_density, tower_levels, tower_limit)

# exact rational density, cross-checked against an actual enumeration
for (ell, p, n) in ((3, 53, 1), (2, 3, 4), (5, 7, 2)):
    dens = periodic_density(ell, p, n)
    g = build_graph(ell, make_field(p, n))
    print(f"G({ell},{p},{n}): density {dens} "
          f"(enumerated {g.periodic_count()}/{g.q})")

# the tower exponents 2, 2^2*3, 2^3*3^2*5, ... make every valuation grow
print("\ntower exponents:", tower_levels(5))

print("\nperiodic density along the tower for T_3 over F_5:")
for level in range(1, 8):
    a, lam, dens = tower_density(3, 5, level)
    gap = dens - Fraction(1, 2)
    print(f"  level {level}: lambda_m = {lam:2}, density - 1/2 = {gap}")

print("\nlimits:", tower_limit(3), "for odd ell,", tower_limit(2),
      "for ell = 2")
