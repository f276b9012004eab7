"""Combinatorics of disconnected character degree graphs of solvable groups."""

from .counting import (
    BRUTE_FORCE_LIMIT,
    OrderRange,
    brute_force_c,
    c_of_n,
    order_range_for_count,
    parse_order,
    raw_pair_count,
    valid_pairs,
)
from .graph import (
    DegreeSet,
    PrimeGraph,
    build_graph,
    complement,
    connected_components,
    is_clique,
    parse_degrees,
    parse_edge_list,
    to_dot,
    to_edge_list,
)
from .palfy import (
    ComponentPair,
    Connected,
    Empty,
    PalfyViolation,
    TwoCompleteComponents,
    ViolationReason,
    classify,
    find_independent_triple,
    pair_satisfies_inequality,
    satisfies_palfy_condition,
)
from .primes import is_prime, prime_factors
from .tables import Table1Row, Table2Row, render, table1, table2

__version__ = "0.1.0"
