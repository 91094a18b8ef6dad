"""
Decompositions of complexity four and the complex corpus
========================================================
"""

from raagcurves import complexes, decomposition, graphs

report = decomposition.match_cases(decomposition.enumerate_decompositions(4))
print(report.table())
print("exact match with the five cases:", report.exact)

for name, (K, N) in complexes.corpus().items():
    r = complexes.check_proposition(K, N)
    print(f"{name:>20} N={N}: thick stars {r['thick_stars']}, large links {r['links_large']}")

# the hinge has two triangles on a shared edge; only one reading calls it proper
hinge = complexes.hinge()
print("hinge proper (codim-1 faces):", complexes.is_proper(hinge, "codim1"))
print("hinge proper (every face):", complexes.is_proper(hinge, "any"))

facts = graphs.EtaFacts()
facts.register(graphs.gamma0(), 5)
for n in range(4, 9):
    print(f"lambda{n}: eta >= {graphs.eta_lower_bound(graphs.lambda_graph(n), facts)}")
