import random
from itertools import combinations

from hypothesis import strategies as st

from cdgraph import PrimeGraph

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def random_graph(rng: random.Random, max_order: int = 9) -> PrimeGraph:
    """Uniform order in [0, max_order], then each possible edge with probability 1/2."""
    k = rng.randint(0, max_order)
    verts = PRIMES[:k]
    edges = [e for e in combinations(verts, 2) if rng.random() < 0.5]
    return PrimeGraph.from_edges(edges, verts)


@st.composite
def graphs(draw, max_order=9):
    k = draw(st.integers(0, max_order))
    verts = PRIMES[:k]
    pairs = list(combinations(verts, 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return PrimeGraph.from_edges([e for e, keep in zip(pairs, mask) if keep], verts)


def disjoint_cliques(*sizes: int) -> PrimeGraph:
    it = iter(PRIMES)
    verts, edges = [], []
    for s in sizes:
        block = [next(it) for _ in range(s)]
        verts += block
        edges += combinations(block, 2)
    return PrimeGraph.from_edges(edges, verts)
