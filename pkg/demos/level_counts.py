"""Level counts on regular tilings, exactly.

Around a seed vertex of a {p,q} tiling, level i carries a_i vertices that
extend an existing tree and b_i fresh roots.  The counts follow an exact
integer recursion; here we print the {4,5} table, watch the growth ratios
settle onto the crystal-growing constant, and peek at the one Euclidean
case {4,4}, where growth is linear instead of exponential.
"""

from mosaicforest import (
    SchlafliSymbol,
    Series,
    cumulative_root_limit,
    cumulative_root_ratio,
    euclidean_counts,
    growth_ratio,
    layer_counts,
    spectral_constants,
)

s45 = SchlafliSymbol(4, 5)

print("== {4,5}: order-5 square tiling ==")
print(f"{'i':>3} {'a_i':>10} {'b_i':>10} {'a_i+b_i':>10}")
for row in layer_counts(s45, 10):
    print(f"{row.level:>3} {row.a:>10} {row.b:>10} {row.total:>10}")

growth = spectral_constants(s45).growth
print(f"\ncrystal-growing ratio: {growth} = {growth.decimal(12)}")
print(f"{'i':>3} {'a_(i+1)/a_i':>16} {'gap to limit':>14}")
for i in range(1, 11):
    r = growth_ratio(s45, i, Series.A)
    gap = abs(r - growth)
    print(f"{i:>3} {float(r):>16.10f} {gap.decimal(12):>14}")

print("\ncumulative root share b_i / sum(b_0..b_i):")
limit = cumulative_root_limit(s45)
for i in (2, 5, 10, 16):
    r = cumulative_root_ratio(s45, i)
    print(f"  i={i:>2}: {float(r):.10f}  (limit {limit.decimal(10)})")

print("\n== {4,4}: the square grid, linear growth ==")
for i in (1, 2, 5, 10, 100):
    row = euclidean_counts(i)
    print(f"  i={i:>3}: a={row.a:>4} b={row.b}   (a = 8i-4, b constant)")
