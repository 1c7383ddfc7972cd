"""
Dual graphs and linear presentation
===================================

Two degree-d generators are joined when their lcm has degree d + 1.  An
ideal is linearly presented when, for every pair f, g, the generators
dividing lcm(f, g) form a connected subgraph.
"""

from linres3 import dual_graph, is_linearly_presented, parse_ideal, power_ideal, render_dual_graph

# the full cube power: every lattice point is a generator
cube = power_ideal(3, 3)
g = dual_graph(cube)
print("m^3:", len(g.vertices), "vertices,", g.num_edges, "edges")

# two corners with nothing in between are not linearly presented
far = parse_ideal("x^3, z^3")
verdict = is_linearly_presented(far)
f, h = verdict.witness
print("x^3, z^3 linearly presented?", verdict.ok, "- disconnected pair:",
      far.generators[f], far.generators[h])

# J is linearly presented; its lattice picture has 6 blue and 4 red points
J = parse_ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z")
print("J linearly presented?", is_linearly_presented(J).ok)
print(render_dual_graph(J, "dot"))
