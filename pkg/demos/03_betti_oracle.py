"""
The Betti number oracle
=======================

beta_{i,a}(I) is the rank of reduced homology H_{i-1} of the upper Koszul
complex at multidegree a.  Scanning every a up to the lcm of the generators
gives the whole multigraded table, computed exactly over Q or F_p.
"""

from linres3 import betti_table, hilbert_consistency_check, parse_ideal, socle_degrees_from_table

pinched = parse_ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z, xz^2, yz^2, z^3")
table = betti_table(pinched, 0)
for (i, j), r in table.graded().items():
    print(f"beta_{i},{j} = {r}")
print("regularity:", table.regularity())

# the last shifts of the quotient's resolution read off the socle degrees
print("socle degrees from back twists:", socle_degrees_from_table(table))

# the alternating sum of the table must reproduce the Hilbert function
print("Hilbert function consistent?", hilbert_consistency_check(pinched, 0))
