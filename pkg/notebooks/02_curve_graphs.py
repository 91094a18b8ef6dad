"""
Curve graphs of small punctured spheres
=======================================

Orbit samples of simple closed curves, their intersection matrices, and a
grid cross-check of the intersection numbers.
"""

import numpy as np

from raagcurves import graphs
from raagcurves.curves import oracle, sample, surface
from raagcurves.curves.intersection import geometric_intersection

# four punctures: any two distinct curves meet, so the graph has no edges
s04 = sample.enumerate_curves(surface.surface_model(0, 4), depth=10, maxlen=20)
off = s04.matrix[~np.eye(len(s04), dtype=bool)]
print(f"S_0,4: {len(s04)} classes, smallest off-diagonal intersection {off.min()}")

# five punctures: edges appear, triangles do not
s05 = sample.enumerate_curves(surface.surface_model(0, 5))
g = sample.curve_graph(s05)
print(f"S_0,5: {len(s05)} classes, {g.number_of_edges()} disjoint pairs, "
      f"triangle: {sample.has_triangle(g)}")

# paths embed, four-cycles do not
print("P4 copies found:", len(sample.find_copies(s05, graphs.path_graph(4))))
print("C4 copies found:", len(sample.find_copies(s05, graphs.cycle4())))

# the grid oracle draws one curve on a square grid and searches the other
m = s05.model
for a, b in [("x1 x2", "x2 x3"), ("x1 x2", "x3 x4"), ("x1 x3^-1 x2 x3", "x2 x3")]:
    ca, cb = surface.canonical_class(m, a), surface.canonical_class(m, b)
    fast = geometric_intersection(m, ca, cb)
    grid, trace = oracle.stabilized_oracle(m, ca, cb)
    print(f"i({a}, {b}): linked pairs {fast}, grid {grid}, trace {trace}")
