"""Prime cycles and zeta poles of small graphs.

Prime cycles are the rotation classes that are not powers of shorter ones;
they are the factors of the Euler product.  Poles of the zeta function are
the reciprocal eigenvalues of the transfer operator, with multiplicities.
The complete graph K4 has enough symmetry that both lists are worth staring
at once.
"""

from zetagraph import (
    edge_sequence_label,
    euler_product,
    make_graph,
    prime_cycles,
    spectrum_poles,
)

verts = ["p", "q", "r", "s"]
k4 = make_graph(
    verts,
    [(u, v, 1.0, 1.0) for i, u in enumerate(verts) for v in verts[i + 1:]],
)

print("prime cycles of K4 up to length 5:")
for rec in prime_cycles(k4, 5):
    if rec.is_prime:
        print(f"  length {rec.length}: {edge_sequence_label(rec.edges)}")

counts = {}
for rec in prime_cycles(k4, 8):
    if rec.is_prime:
        counts[rec.length] = counts.get(rec.length, 0) + 1
print(f"\nprime counts by length: {counts}")

print(f"\nreciprocal zeta to order 8:\n  {euler_product(k4, 8)}")

print("\npoles (reciprocal transfer eigenvalues) with multiplicities:")
for pole, mult in spectrum_poles(k4):
    print(f"  {pole.real:+.6f} {pole.imag:+.6f}i   x{mult}")
print("\nthe pole at +1/3 is 1/(valency-1): K4 is 3-regular, so its zeta")
print("behaves like the regular-graph theory predicts")
