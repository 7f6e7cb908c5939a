"""Infinite graphs of finite total weight, studied through truncations.

The triangle-chain family hangs a triangle of weight r^k off block k of an
infinite path.  Total weight is a geometric series, so tails are exact, and
the zeta coefficients of the truncations converge geometrically: block k+1
only contributes cycles of weight about r^{3(k+1)}.  The convergence study
makes that rate visible from the numbers alone.
"""

from zetagraph import (
    convergence_study,
    graph_stats,
    make_source,
    truncate_source,
    zeta_fredholm,
)

src = make_source("triangle-chain", 0.5)
print(f"family {src.name}, r={src.params['r']}, analytic total weight {src.total_weight}")

print("\ntruncations:")
for K in range(5):
    g = src.block(K)
    stats = graph_stats(g)
    print(f"  K={K}: {stats.vertex_count:2d} vertices, materialized weight "
          f"{stats.total_weight:8.5f}, tail {src.tail_weight(K):8.5f}, "
          f"sum {stats.total_weight + src.tail_weight(K):.5f}")

g, tail = truncate_source(src, epsilon=1.0)
print(f"\nsmallest truncation with tail <= 1.0: {len(g.vertices)} vertices, tail {tail}")

print("\nu^3 coefficient of det(1 - uT) as the chain deepens:")
prev = None
for K in range(7):
    c3 = zeta_fredholm(src.block(K), 4).series.coefficient(3).real
    note = "" if prev is None else f"   moved by {abs(c3 - prev):.2e}"
    print(f"  K={K}: {c3:+.10f}{note}")
    prev = c3

print("\ndelta ratios from the convergence study (expect r^3 = 0.125):")
rows = convergence_study(src, 8, 4)
d3 = {k: delta for k, n, delta in rows if n == 3}
for k in range(1, 8):
    print(f"  delta_{k}/delta_{k-1} = {d3[k] / d3[k - 1]:.6f}")
