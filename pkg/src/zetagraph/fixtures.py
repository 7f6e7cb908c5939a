"""Small named graphs used throughout the test suite and the demos.

Each function builds a fresh instance, so tests can never share state.
"""

from .graph import WeightedGraph, make_graph


def edge_pair() -> WeightedGraph:
    """Single edge {a, b} with w(a->b)=2, w(b->a)=3."""
    return make_graph(["a", "b"], [("a", "b", 2.0, 3.0)])


def path3() -> WeightedGraph:
    """Path a-b-c, unit weights. A tree, so its zeta function is 1."""
    return make_graph(["a", "b", "c"], [("a", "b", 1.0, 1.0), ("b", "c", 1.0, 1.0)])


def triangle() -> WeightedGraph:
    """Unit-weight triangle on x, y, z."""
    return make_graph(
        ["x", "y", "z"],
        [("x", "y", 1.0, 1.0), ("y", "z", 1.0, 1.0), ("z", "x", 1.0, 1.0)],
    )


def weighted_triangle() -> WeightedGraph:
    """Triangle with asymmetric orientation weights.

    The two directed triangles have weights 0.5*0.25*0.5 = 0.0625 and
    0.2*0.4*0.1 = 0.008, so the reciprocal zeta function is
    (1 - 0.0625 u^3)(1 - 0.008 u^3).
    """
    return make_graph(
        ["x", "y", "z"],
        [("x", "y", 0.5, 0.1), ("y", "z", 0.25, 0.4), ("z", "x", 0.5, 0.2)],
    )


def backtrack_pair() -> WeightedGraph:
    """edge_pair with both orientations reversal-permitted: a 2-cycle of weight 6."""
    return make_graph(
        ["a", "b"], [("a", "b", 2.0, 3.0)], backtrack=[("a", "b"), ("b", "a")]
    )


def backtrack_single() -> WeightedGraph:
    """edge_pair with only a->b reversal-permitted.

    No closed edge sequence is admissible (the seam step always violates the
    rule), yet the vertex path a,b,a is regular under the one-sided flag; the
    asymmetric-flag counterexample used by the discrepancy tests.
    """
    return make_graph(["a", "b"], [("a", "b", 2.0, 3.0)], backtrack=[("a", "b")])


def triangle_reversal_pair() -> WeightedGraph:
    """Unit triangle with reversal permitted along x->y and y->x."""
    return make_graph(
        ["x", "y", "z"],
        [("x", "y", 1.0, 1.0), ("y", "z", 1.0, 1.0), ("z", "x", 1.0, 1.0)],
        backtrack=[("x", "y"), ("y", "x")],
    )


def complete4() -> WeightedGraph:
    """Unit-weight complete graph on four vertices (Euler number -2)."""
    verts = ["p", "q", "r", "s"]
    edges = []
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            edges.append((u, v, 1.0, 1.0))
    return make_graph(verts, edges)


def catalogue() -> dict[str, WeightedGraph]:
    return {
        "edge": edge_pair(),
        "p3": path3(),
        "k3": triangle(),
        "wt3": weighted_triangle(),
        "bt1": backtrack_pair(),
        "bt2": backtrack_single(),
        "k3s": triangle_reversal_pair(),
        "k4": complete4(),
    }
