"""
Cyclotomic reciprocity, recovered from graphs
==============================================

T_ell^n(x) - 2 generates the maximal real subfield of the ell^n-th
cyclotomic field (and T_2^n(x) the 2^(n+2)-nd).  The classical law says
p splits completely there iff p = +-1 mod ell^n.  The pattern machinery
proves the same thing; here we watch the two sides agree prime by prime.
"""

from chebdyn import factor_pattern_actual, is_prime, verify_reciprocity

print("T_3^2 - 2 mod p: splits completely iff p = +-1 (mod 9)")
for p in (5, 7, 11, 17, 19, 37, 53):
    pat = factor_pattern_actual(3, p, 2, 2)
    mark = "+-1" if p % 9 in (1, 8) else "   "
    print(f"  p = {p:3}  {mark}  pattern: {pat}")

# the t = 0 tower for ell = 2 answers to the modulus 2^(n+2)
print("\nT_2^2 - 0 mod p: splits completely iff p = +-1 (mod 16)")
for p in (7, 17, 31, 23, 47, 97):
    pat = factor_pattern_actual(2, p, 2, 0)
    mark = "+-1" if p % 16 in (1, 15) else "   "
    print(f"  p = {p:3}  {mark}  pattern: {pat}")

# the library check, swept over every odd prime below 200
bad = [p for p in range(3, 200)
       if is_prime(p) and p != 3 and not verify_reciprocity(3, 2, p)]
print("\nprimes below 200 violating the law for T_3^2 - 2:", bad or "none")
