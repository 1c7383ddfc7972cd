"""
Characteristic dependence
=========================

The Stanley-Reisner ideal of the six-vertex real projective plane has a
linear resolution over Q and over F_3, but not over F_2: the torsion in
H_1(RP^2) shows up as an extra Betti number.
"""

from linres3 import reisner_demo

out = reisner_demo((0, 2, 3))
print("generators:", ", ".join(out["generators"]))
for c, data in out["characteristics"].items():
    print(f"char {c}: regularity {data['regularity']}, linear resolution {data['linear_resolution']}")
