"""
Tree ordering and linear quotients
==================================

Generators are listed level by level (z-degree).  The bottom level runs
from x^d towards y^d; each higher level starts at the highest-x generator
joined to the level below, sweeps left, then returns to the right.  For an
ideal with a linear resolution every colon (m_1..m_{i-1}) : m_i is then
generated by variables.
"""

from linres3 import colon_generators, format_monomial, parse_ideal, power_ideal, tree_order

for ideal in (power_ideal(3, 3), parse_ideal("xy^3, xy^2z, y^3z, x^2yz, x^3z, x^2z^2, y^2z^2")):
    t = tree_order(ideal)
    print("order:", t)
    gens = t.monomials
    for i in range(1, len(gens)):
        colon = colon_generators(gens[:i], gens[i])
        print(f"  ({', '.join(format_monomial(m) for m in gens[:i])}) : {format_monomial(gens[i])}"
              f" = ({', '.join(format_monomial(q) for q in colon)})")
