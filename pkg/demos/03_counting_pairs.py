"""How few component-size pairs survive the inequality.

Any split of n vertices into two groups gives floor(n/2) size pairs, but
only c(n) ~ log2(n) of them satisfy b >= 2**a - 1.
"""

from cdgraph import brute_force_c, c_of_n, order_range_for_count, raw_pair_count, valid_pairs

for n in (4, 10, 100, 10**6):
    print(f"n={n:>8}  raw pairs={raw_pair_count(n):>7}  valid={c_of_n(n):>2}  {[tuple(p) for p in valid_pairs(n)][:5]}")

# The direct count over every split agrees.
assert all(c_of_n(n) == brute_force_c(n) for n in range(2, 5000))

# Exact integer arithmetic, so astronomically large orders are fine.
n = 10**100
print("c(10**100) =", c_of_n(n), " while floor(n/2) has", len(str(raw_pair_count(n))), "digits")

# Each value alpha is taken on exactly 2**alpha + 1 consecutive orders.
for alpha in (1, 2, 3, 20, 64):
    r = order_range_for_count(alpha)
    print(f"alpha={alpha:>2}: n in [{r.min_n}, {r.max_n}], {r.size} orders (2**{alpha} + 1 = {2**alpha + 1})")
