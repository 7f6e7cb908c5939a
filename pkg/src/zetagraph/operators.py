"""Matrix operators on the vertex and oriented-edge spaces of a graph.

Bases always follow :func:`zetagraph.graph.canonical_order`.  Matrices are
dense numpy arrays up to 2000 basis elements and column-compressed sparse
beyond that; the switch is internal, results do not depend on it.

Conventions. For an operator defined on basis vectors, entry [row, col] is
the coefficient of `row` in the image of `col`.  The adjacency operator sends
x to sum_x' w(x, x') x', so its matrix entry [x', x] is w(x, x').  The
roundtrip weight of an edge is W(e) = w(e) * w(e reversed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import WeightedGraph, canonical_order, reverse

DENSE_LIMIT = 2000


@dataclass(frozen=True)
class LinearOperator:
    """Matrix with labeled domain (cols) and codomain (rows) bases."""

    rows: tuple
    cols: tuple
    mat: object

    def dense(self) -> np.ndarray:
        if sp.issparse(self.mat):
            return np.asarray(self.mat.todense())
        return np.asarray(self.mat)

    def trace(self) -> complex:
        if sp.issparse(self.mat):
            return complex(self.mat.diagonal().sum())
        return complex(np.trace(self.mat))

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        if self.cols != other.rows:
            raise ValueError("basis mismatch in operator product")
        return LinearOperator(self.rows, other.cols, self.mat @ other.mat)


def _materialize(rows, cols, triplets):
    """Build dense or sparse from (row_index, col_index, value) triples."""
    shape = (len(rows), len(cols))
    if max(shape) <= DENSE_LIMIT:
        mat = np.zeros(shape, dtype=np.float64)
        for i, j, v in triplets:
            mat[i, j] += v
        return LinearOperator(tuple(rows), tuple(cols), mat)
    if triplets:
        ii, jj, vv = zip(*triplets)
    else:
        ii, jj, vv = (), (), ()
    mat = sp.csc_matrix((vv, (ii, jj)), shape=shape, dtype=np.float64)
    return LinearOperator(tuple(rows), tuple(cols), mat)


def transfer_matrix(g: WeightedGraph) -> LinearOperator:
    """Weighted non-backtracking (Hashimoto) operator on oriented edges.

    Column e holds w(e') at row e' for every continuation e' with
    o(e') = t(e); the reversal e' = e^{-1} is excluded unless e carries the
    backtrack flag.
    """
    _, edges = canonical_order(g)
    index = {e: i for i, e in enumerate(edges)}
    triplets = []
    for e in edges:
        allow_reversal = e in g.backtrack
        for e2 in edges:
            if e2[0] != e[1]:
                continue
            if e2 == reverse(e) and not allow_reversal:
                continue
            triplets.append((index[e2], index[e], g.weight[e2]))
    return _materialize(edges, edges, triplets)


def incidence_maps(g: WeightedGraph) -> tuple[LinearOperator, LinearOperator, LinearOperator]:
    """The three maps linking vertex and edge space.

    spread: vertex -> weighted sum of its outgoing oriented edges.
    endpoint: oriented edge -> its target vertex, coefficient 1.
    flip: oriented edge -> its reversal, scaled by the reversal's weight;
          zeroed wherever either orientation carries the backtrack flag.
    """
    verts, edges = canonical_order(g)
    vi = {x: i for i, x in enumerate(verts)}
    ei = {e: i for i, e in enumerate(edges)}
    spread = _materialize(edges, verts, [(ei[e], vi[e[0]], g.weight[e]) for e in edges])
    endpoint = _materialize(verts, edges, [(vi[e[1]], ei[e], 1.0) for e in edges])
    flip_triplets = []
    for e in edges:
        if e in g.backtrack or reverse(e) in g.backtrack:
            continue
        flip_triplets.append((ei[reverse(e)], ei[e], g.weight[reverse(e)]))
    flip = _materialize(edges, edges, flip_triplets)
    return spread, endpoint, flip


def adjacency_matrix(g: WeightedGraph) -> LinearOperator:
    verts, _ = canonical_order(g)
    vi = {x: i for i, x in enumerate(verts)}
    triplets = []
    for u, v in g.edges:
        triplets.append((vi[v], vi[u], g.weight[(u, v)]))
        triplets.append((vi[u], vi[v], g.weight[(v, u)]))
    return _materialize(verts, verts, triplets)


def excess_matrix(g: WeightedGraph) -> LinearOperator:
    """Diagonal operator with entry (count of unflagged departures) - 1."""
    verts, _ = canonical_order(g)
    vi = {x: i for i, x in enumerate(verts)}
    triplets = []
    for x in verts:
        q = sum(1 for y in g.neighbors(x) if (x, y) not in g.backtrack) - 1
        triplets.append((vi[x], vi[x], float(q)))
    return _materialize(verts, verts, triplets)


def zigzag_matrix(g: WeightedGraph, n: int) -> LinearOperator:
    """Weight of length-n walks that shuttle along a single incident edge.

    Order 0 is the identity and order 1 the adjacency operator.  Even order
    2k lands back at the start with weight W(x, x')^k (diagonal); odd order
    2k+1 ends across the edge with weight W(x, x')^k w(x, x').  When
    backtrack flags are present, order 2 admits only departures (x, x')
    outside the flag set, and orders >= 3 require both orientations outside
    it; this reproduces the flip-map factorization checked in the tests.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    verts, _ = canonical_order(g)
    vi = {x: i for i, x in enumerate(verts)}
    if n == 0:
        return _materialize(verts, verts, [(i, i, 1.0) for i in range(len(verts))])
    if n == 1:
        return adjacency_matrix(g)
    triplets = []
    for x in verts:
        for y in g.neighbors(x):
            if (x, y) in g.backtrack:
                continue
            if n >= 3 and (y, x) in g.backtrack:
                continue
            W = g.weight[(x, y)] * g.weight[(y, x)]
            if n % 2 == 0:
                triplets.append((vi[x], vi[x], W ** (n // 2)))
            else:
                triplets.append((vi[y], vi[x], W ** (n // 2) * g.weight[(x, y)]))
    return _materialize(verts, verts, triplets)


def reduced_path_matrices(g: WeightedGraph, m: int) -> list[LinearOperator]:
    """Path-sum operators of orders 0..m via the zigzag recursion.

    Order m sums w(p) over reduced paths p of length m from each start
    vertex (reduced: backtracking only across flagged orientations), placing
    the weight at the path's endpoint.  Computed by
    A_m = sum_{j=1..m} (-1)^{j+1} A_{m-j} B_j, which inverts the zigzag
    family in the series ring; the direct enumeration twin below exists to
    test this identity.
    """
    if m < 0:
        raise ValueError("order must be >= 0")
    verts, _ = canonical_order(g)
    B = [zigzag_matrix(g, j) for j in range(m + 1)]
    A = [zigzag_matrix(g, 0)]
    for order in range(1, m + 1):
        acc = None
        for j in range(1, order + 1):
            term = A[order - j].mat @ B[j].mat
            if j % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        A.append(LinearOperator(tuple(verts), tuple(verts), acc))
    return A


def reduced_path_matrix(g: WeightedGraph, m: int) -> LinearOperator:
    return reduced_path_matrices(g, m)[m]


def _enumerate_reduced_paths(g: WeightedGraph, m: int):
    """Yield (start, end, weight, first_step) over reduced length-m paths."""
    for start in g.vertices:
        stack = [(start, None, 1.0, 0, None)]
        while stack:
            x, prev, wgt, depth, first = stack.pop()
            if depth == m:
                yield start, x, wgt, first
                continue
            for y in g.neighbors(x):
                if prev is not None and y == prev and (prev, x) not in g.backtrack:
                    continue
                step = g.weight[(x, y)]
                stack.append((y, x, wgt * step, depth + 1, first if first else (x, y)))


def reduced_path_matrix_direct(g: WeightedGraph, m: int) -> LinearOperator:
    """Enumeration twin of reduced_path_matrix; exponential, test use only."""
    verts, _ = canonical_order(g)
    vi = {x: i for i, x in enumerate(verts)}
    mat = np.zeros((len(verts), len(verts)))
    for start, end, wgt, _ in _enumerate_reduced_paths(g, m):
        mat[vi[end], vi[start]] += wgt
    return LinearOperator(tuple(verts), tuple(verts), mat)


def anchored_path_matrix(g: WeightedGraph, m: int, n: int) -> LinearOperator:
    """Reduced-path sums with the first edge's roundtrip weight to the n-th
    power as a premium: each length-m path from x contributes
    W(x, x_1)^n w(p) at its endpoint.  Built by direct enumeration."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    verts, _ = canonical_order(g)
    vi = {x: i for i, x in enumerate(verts)}
    mat = np.zeros((len(verts), len(verts)))
    for start, end, wgt, first in _enumerate_reduced_paths(g, m):
        W = g.weight[first] * g.weight[reverse(first)]
        mat[vi[end], vi[start]] += W ** n * wgt
    return LinearOperator(tuple(verts), tuple(verts), mat)
