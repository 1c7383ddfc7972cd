"""
Bad configurations and the socle
================================

Linear presentation is not enough.  A monomial f whose degree-d divisors all
avoid the ideal, while fx, fy and fz each pick up a generator, blocks a
linear resolution.  Such f are exactly the socle monomials of degree >= d.
"""

from linres3 import (
    find_bad_configuration,
    format_monomial,
    has_linear_resolution_criterion,
    parse_ideal,
    socle_monomials,
)

I = parse_ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z, xz^2")
w = find_bad_configuration(I)
print("inducer:", format_monomial(w.inducer))
print("hits from fx, fy, fz:", [format_monomial(m) for m in (w.hit_x, w.hit_y, w.hit_z)])

# the pinched power ideal: m^3 with xyz removed
pinched = parse_ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z, xz^2, yz^2, z^3")
print("socle:", [format_monomial(m) for m in socle_monomials(pinched)])
v = has_linear_resolution_criterion(pinched)
print("pinched has a linear resolution?", v.ok, "- witness kind:", v.kind)

J = parse_ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z")
print("J has a linear resolution?", has_linear_resolution_criterion(J).ok)
