"""Pálfy's condition and the classification of disconnected graphs."""

from cdgraph import PrimeGraph, build_graph, classify, find_independent_triple, parse_degrees

# A solvable group never has three pairwise non-adjacent primes.
# Degrees 2, 3, 5 give three isolated vertices, so no solvable group has them.
g = build_graph(parse_degrees("1 2 3 5"))
print("independent triple:", find_independent_triple(g))
print(classify(g))

# K1 + K3 on {7} and {2, 3, 5}: sizes (1, 3) and 3 >= 2**1 - 1.
g = build_graph(parse_degrees("1 30 7"))
print(classify(g))

# K2 + K2 satisfies the condition but fails the inequality: 2 < 2**2 - 1.
g = PrimeGraph.from_edges([(2, 3), (5, 7)])
print(classify(g))

# Growing the second clique to three vertices repairs it: 3 >= 3.
g = PrimeGraph.from_edges([(2, 3), (5, 7), (5, 11), (7, 11)])
print(classify(g))

# A connected graph can still fail the condition.  On the path
# 2-3-5-7-11 the vertices 2, 5 and 11 are pairwise non-adjacent.
g = PrimeGraph.from_edges([(2, 3), (3, 5), (5, 7), (7, 11)])
print(classify(g))
