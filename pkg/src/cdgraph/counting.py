"""Counting component-size pairs that satisfy Pálfy's inequality.

``c_of_n(n)`` is the number of pairs ``(k, n - k)`` with ``n - k >= 2**k - 1``.
Because ``2**k + k - 1`` increases with ``k`` this is the largest ``alpha``
with ``n >= 2**alpha + alpha - 1``, and each value ``alpha`` is taken by
exactly ``2**alpha + 1`` consecutive orders.

All orders are Python ints, so nothing here overflows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .palfy import ComponentPair, pair_satisfies_inequality

#: Largest order accepted by :func:`brute_force_c` unless overridden.
BRUTE_FORCE_LIMIT = 10**6

OrderLike = Union[int, str]


def parse_order(text: str) -> int:
    """Parse a decimal order, allowing ``_`` and ``,`` as digit separators.

    >>> parse_order("1,000_000")
    1000000
    """
    cleaned = re.sub(r"[_,]", "", text.strip())
    if not re.fullmatch(r"[+-]?\d+", cleaned):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(cleaned)


def _order(n: OrderLike) -> int:
    if isinstance(n, str):
        n = parse_order(n)
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"graph order must be an int, got {type(n).__name__}")
    if n < 2:
        raise ValueError(f"graph order must be at least 2, got {n}")
    return n


def threshold(alpha: int) -> int:
    """Smallest order ``n`` with ``c(n) >= alpha``."""
    return (1 << alpha) + alpha - 1


def raw_pair_count(n: OrderLike) -> int:
    """Number of unordered splits of ``n`` into two positive parts."""
    return _order(n) // 2


def c_of_n(n: OrderLike) -> int:
    n = _order(n)
    alpha, power = 1, 2
    # invariant: power == 2**alpha and n >= power + alpha - 1
    while n >= 2 * power + alpha:
        alpha += 1
        power *= 2
    return alpha


def brute_force_c(n: OrderLike, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Count valid pairs by testing every candidate split of ``n``.

    Only splits with ``k <= n.bit_length()`` are tested: for larger ``k``,
    ``2**k - 1 >= n > n - k`` so the pair fails without evaluation.  No
    monotonicity in ``k`` is assumed.
    """
    n = _order(n)
    if n > limit:
        raise ValueError(f"order {n} exceeds the brute-force limit {limit}")
    top = min(n // 2, n.bit_length())
    return sum(1 for k in range(1, top + 1) if pair_satisfies_inequality(k, n - k))


def valid_pairs(n: OrderLike) -> list[ComponentPair]:
    """The pairs ``(1, n-1), (2, n-2), ..., (c, n-c)`` with ``c = c(n)``."""
    n = _order(n)
    return [ComponentPair(k, n - k) for k in range(1, c_of_n(n) + 1)]


@dataclass(frozen=True)
class OrderRange:
    """Inclusive range of orders ``n`` sharing ``c(n) == alpha``."""

    alpha: int
    min_n: int
    max_n: int

    @property
    def size(self) -> int:
        return self.max_n - self.min_n + 1

    def __contains__(self, n) -> bool:
        return self.min_n <= n <= self.max_n

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.min_n, self.max_n + 1))


def order_range_for_count(alpha: int) -> OrderRange:
    if isinstance(alpha, bool) or not isinstance(alpha, int):
        raise TypeError(f"alpha must be an int, got {type(alpha).__name__}")
    if alpha < 1:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return OrderRange(alpha, threshold(alpha), threshold(alpha + 1) - 1)
