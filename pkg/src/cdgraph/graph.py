"""Prime-vertex graphs and the character degree graph of a degree set.

A :class:`DegreeSet` stands in for the set of irreducible character degrees
of a finite group.  :func:`build_graph` turns it into the character degree
graph: the vertices are the primes dividing some degree and two primes are
joined when their product divides some degree.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .primes import MAX_VALUE, is_prime, prime_factors


def _edge(p: int, q: int) -> frozenset[int]:
    return frozenset((p, q))


@dataclass(frozen=True)
class DegreeSet:
    degrees: frozenset[int]

    def __post_init__(self):
        if not isinstance(self.degrees, frozenset):
            object.__setattr__(self, "degrees", frozenset(self.degrees))
        if not self.degrees:
            raise ValueError("degree set is empty")
        for d in self.degrees:
            if isinstance(d, bool) or not isinstance(d, int):
                raise TypeError(f"degree {d!r} is not an integer")
            if d < 1:
                raise ValueError(f"degree {d} is not positive")
            if d > MAX_VALUE:
                raise ValueError(f"degree {d} exceeds the 64-bit factorization limit")

    @classmethod
    def of(cls, *degrees: int) -> DegreeSet:
        return cls(frozenset(degrees))

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.degrees))

    def __len__(self) -> int:
        return len(self.degrees)

    def __contains__(self, d) -> bool:
        return d in self.degrees


@dataclass(frozen=True)
class PrimeGraph:
    """Undirected, loop-free graph whose vertices are primes.

    Edges are stored as two-element frozensets, so symmetry holds by
    construction.  Instances are immutable and hashable.
    """

    vertices: frozenset[int]
    edges: frozenset[frozenset[int]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(frozenset(e) for e in self.edges))
        for v in self.vertices:
            if not is_prime(v):
                raise ValueError(f"vertex {v} is not prime")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"self-loop or malformed edge {sorted(e)}")
            missing = e - self.vertices
            if missing:
                raise ValueError(f"edge {sorted(e)} references unknown vertex {min(missing)}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], isolated: Iterable[int] = ()) -> PrimeGraph:
        edge_set = frozenset(_edge(p, q) for p, q in edges)
        vertices = set(isolated)
        for e in edge_set:
            vertices |= e
        return cls(frozenset(vertices), edge_set)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def adjacent(self, p: int, q: int) -> bool:
        return p != q and _edge(p, q) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        if v not in self.vertices:
            raise KeyError(v)
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e in self.edges:
            p, q = e
            adj[p].add(q)
            adj[q].add(p)
        return adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def parse_degrees(text: str) -> DegreeSet:
    """Parse whitespace- or comma-separated positive integers.

    >>> sorted(parse_degrees("6, 6 6").degrees)
    [6]
    """
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if not tokens:
        raise ValueError("no degrees given")
    values = []
    for tok in tokens:
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise ValueError(f"not a decimal integer: {tok!r}")
        values.append(int(tok))
    return DegreeSet(frozenset(values))


def build_graph(d: DegreeSet) -> PrimeGraph:
    vertices: set[int] = set()
    edges: set[frozenset[int]] = set()
    for x in d.degrees:
        ps = prime_factors(x)
        vertices.update(ps)
        # p*q | x for distinct primes p, q exactly when both divide x
        edges.update(_edge(p, q) for p, q in combinations(ps, 2))
    return PrimeGraph(frozenset(vertices), frozenset(edges))


def connected_components(g: PrimeGraph) -> tuple[frozenset[int], ...]:
    """Connected components, largest first, ties broken by smallest prime."""
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return tuple(comps)


def complement(g: PrimeGraph) -> PrimeGraph:
    edges = frozenset(
        _edge(p, q) for p, q in combinations(sorted(g.vertices), 2) if _edge(p, q) not in g.edges
    )
    return PrimeGraph(g.vertices, edges)


def is_clique(g: PrimeGraph, s: Iterable[int]) -> bool:
    s = set(s)
    unknown = s - g.vertices
    if unknown:
        raise ValueError(f"vertex {min(unknown)} is not in the graph")
    return all(g.adjacent(p, q) for p, q in combinations(s, 2))


def parse_edge_list(text: str) -> PrimeGraph:
    """Read a graph from ``p q`` edge lines and ``v p`` vertex lines.

    Blank lines and ``#`` comments are ignored; ``;`` also ends a line so
    that short graphs fit in a single command-line argument.
    """
    edges = []
    isolated = []
    for lineno, raw in enumerate(re.split(r"[\n;]", text), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if len(parts) == 2 and parts[0] == "v":
                isolated.append(_label(parts[1]))
            elif len(parts) == 2:
                p, q = _label(parts[0]), _label(parts[1])
                if p == q:
                    raise ValueError(f"self-loop on {p}")
                edges.append((p, q))
            else:
                raise ValueError(f"expected 'p q' or 'v p', got {line!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return PrimeGraph.from_edges(edges, isolated)


def _label(tok: str) -> int:
    if not tok.isdigit():
        raise ValueError(f"not a decimal label: {tok!r}")
    v = int(tok)
    if v > MAX_VALUE or not is_prime(v):
        raise ValueError(f"vertex label {v} is not a prime")
    return v


def to_edge_list(g: PrimeGraph) -> str:
    """Inverse of :func:`parse_edge_list`."""
    lines = [f"v {v}" for v in sorted(g.vertices) if not any(v in e for e in g.edges)]
    lines += [f"{p} {q}" for p, q in g.sorted_edges()]
    return "".join(line + "\n" for line in lines)


def to_dot(g: PrimeGraph, name: str = "delta") -> str:
    out = [f"graph {name} {{\n"]
    for v in sorted(g.vertices):
        out.append(f'  {v} [label="{v}"];\n')
    for p, q in g.sorted_edges():
        out.append(f"  {p} -- {q};\n")
    out.append("}\n")
    return "".join(out)
