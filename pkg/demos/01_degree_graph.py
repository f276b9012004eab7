"""Building a character degree graph from a set of degrees.

The vertices are the primes dividing some degree; two primes are joined
when their product divides a single degree.
"""

from cdgraph import build_graph, complement, connected_components, parse_degrees, to_dot

# Degrees 1, 6, 10, 15 and 7: every pair among 2, 3, 5 shares a degree,
# while 7 only ever appears alone.
degrees = parse_degrees("1, 6, 10, 15, 7")
g = build_graph(degrees)

print("vertices:", sorted(g.vertices))
print("edges:   ", g.sorted_edges())

# Two components: the triangle {2, 3, 5} and the isolated vertex 7.
for comp in connected_components(g):
    print("component", sorted(comp))

# The complement is where independent triples show up as triangles.
print("complement edges:", complement(g).sorted_edges())

# Graphviz source; pipe it to `dot -Tpng` to draw the graph.
print(to_dot(g))
