"""Pálfy's condition, the disconnected-graph classification and Pálfy's inequality.

For a solvable group any three vertices of the character degree graph span
at least one edge.  A disconnected graph obeying this has exactly two
components, both complete, and with sizes ``a <= b`` it must also satisfy
``b >= 2**a - 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .graph import PrimeGraph, complement, connected_components


def _positive(x, name: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < 1:
        raise ValueError(f"{name} must be positive, got {x}")
    return x


@dataclass(frozen=True, order=True)
class ComponentPair:
    """Component sizes of a two-component graph, stored with ``a <= b``."""

    a: int
    b: int

    def __post_init__(self):
        _positive(self.a, "a")
        _positive(self.b, "b")
        if self.a > self.b:
            raise ValueError(f"pair not normalized: {self.a} > {self.b}")

    @classmethod
    def of(cls, x: int, y: int) -> ComponentPair:
        return cls(min(x, y), max(x, y))

    @property
    def order(self) -> int:
        return self.a + self.b

    def satisfies_inequality(self) -> bool:
        return pair_satisfies_inequality(self.a, self.b)

    def __iter__(self):
        yield self.a
        yield self.b


def pair_satisfies_inequality(x: int, y: int) -> bool:
    """True iff ``max(x, y) >= 2**min(x, y) - 1``.

    Exact for any size of input: ``b + 1 >= 2**a`` holds precisely when
    ``b + 1`` needs more than ``a`` bits, so the power is never built.
    """
    _positive(x, "x")
    _positive(y, "y")
    a, b = min(x, y), max(x, y)
    return (b + 1).bit_length() > a


def find_independent_triple(g: PrimeGraph) -> Optional[tuple[int, int, int]]:
    """Return the smallest triangle of the complement graph, or None.

    Each non-edge ``{p, q}`` is extended by a common non-neighbour ``r``.
    """
    non_adj = complement(g).adjacency()
    best = None
    for p, q in combinations(sorted(g.vertices), 2):
        if q not in non_adj[p]:
            continue
        common = non_adj[p] & non_adj[q]
        if common:
            triple = tuple(sorted((p, q, min(common))))
            if best is None or triple < best:
                best = triple
    return best


def satisfies_palfy_condition(g: PrimeGraph) -> bool:
    return find_independent_triple(g) is None


class ViolationReason(enum.Enum):
    THREE_OR_MORE_COMPONENTS = "three_or_more_components"
    COMPONENT_NOT_COMPLETE = "component_not_complete"
    INDEPENDENT_TRIPLE = "independent_triple"


@dataclass(frozen=True)
class Empty:
    name = "Empty"


@dataclass(frozen=True)
class Connected:
    name = "Connected"


@dataclass(frozen=True)
class TwoCompleteComponents:
    pair: ComponentPair
    inequality_holds: bool
    name = "TwoCompleteComponents"


@dataclass(frozen=True)
class PalfyViolation:
    reason: ViolationReason
    witness: frozenset[int]
    name = "PalfyViolation"


Classification = Union[Empty, Connected, TwoCompleteComponents, PalfyViolation]


def _missing_edge(g: PrimeGraph, comp: frozenset[int]):
    for p, q in combinations(sorted(comp), 2):
        if not g.adjacent(p, q):
            return frozenset((p, q))
    return None


def classify(g: PrimeGraph) -> Classification:
    """Classify ``g`` against Pálfy's condition.

    Violations win over everything else.  A disconnected graph is reported
    by its most specific defect (a third component, then a missing edge
    inside a component); a connected graph that fails the condition is
    reported with an independent triple.  The inequality flag is only
    computed for genuine two-clique graphs.
    """
    if not g.vertices:
        return Empty()
    comps = connected_components(g)
    if len(comps) >= 3:
        witness = frozenset(min(c) for c in comps[:3])
        return PalfyViolation(ViolationReason.THREE_OR_MORE_COMPONENTS, witness)
    if len(comps) == 2:
        for comp in comps:
            gap = _missing_edge(g, comp)
            if gap is not None:
                return PalfyViolation(ViolationReason.COMPONENT_NOT_COMPLETE, gap)
        pair = ComponentPair.of(len(comps[0]), len(comps[1]))
        return TwoCompleteComponents(pair, pair.satisfies_inequality())
    triple = find_independent_triple(g)
    if triple is not None:
        return PalfyViolation(ViolationReason.INDEPENDENT_TRIPLE, frozenset(triple))
    return Connected()
