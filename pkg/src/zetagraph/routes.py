"""Determinant routes to the reciprocal zeta function, cross-validated
against the cycle oracle.

Every route returns Z(u)^{-1} as a truncated series.  The Fredholm route
det(1 - uT) is normative; the factorization, block-determinant, partial
product, and unit-weight routes are independent computations checked
against it coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycles import euler_product
from .errors import ResourceCapError
from .graph import WeightedGraph, canonical_order, reverse
from .operators import adjacency_matrix, excess_matrix, incidence_maps, transfer_matrix, zigzag_matrix
from .series import MatrixSeries, Series, coeffs_agree, fredholm_det, max_deviation


@dataclass(frozen=True)
class RouteResult:
    route: str
    series: Series
    metadata: dict

    def __post_init__(self):
        if abs(self.series.coefficient(0) - 1.0) > 1e-12:
            raise ArithmeticError(f"route {self.route}: constant coefficient is not 1")


@dataclass(frozen=True)
class PairVerdict:
    route_a: str
    route_b: str
    max_dev: float
    agree: bool


@dataclass(frozen=True)
class DiscrepancyReport:
    order: int
    tolerance: float
    pairs: tuple[PairVerdict, ...]
    flags: tuple[str, ...]

    @property
    def all_agree(self) -> bool:
        return all(p.agree for p in self.pairs)

    def csv_lines(self) -> list[str]:
        lines = ["routeA,routeB,max_dev,verdict"]
        for p in self.pairs:
            verdict = "agree" if p.agree else "disagree"
            lines.append(f"{p.route_a},{p.route_b},{p.max_dev!r},{verdict}")
        return lines


def _require_no_flags(g: WeightedGraph, route: str) -> None:
    if g.backtrack:
        raise ValueError(f"route {route} requires an empty backtrack set")


def _unoriented_pairs(g: WeightedGraph):
    return [(u, v) for u, v in g.edges]


def _roundtrip_product(g: WeightedGraph, order: int, skip=frozenset()) -> Series:
    """Prod over unoriented edges (1 - u^2 W(e)), skipping a given set."""
    result = Series.one(order)
    for u, v in g.edges:
        if frozenset((u, v)) in skip:
            continue
        W = g.weight[(u, v)] * g.weight[(v, u)]
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = 1.0
        if order >= 2:
            c[2] = -W
        result = result * Series(c)
    return result


def zeta_fredholm(g: WeightedGraph, M: int) -> RouteResult:
    """Z^{-1} = det(1 - uT) via power traces.  Works for any backtrack set."""
    T = transfer_matrix(g)
    return RouteResult("fredholm", fredholm_det(T.mat, M), {"dimension": len(T.rows)})


def _factorization_matrix_series(g: WeightedGraph, M: int) -> MatrixSeries:
    """The vertex-space series 1 + sum_n (-u)^n tau J^{n-1} sigma."""
    sigma, tau, flip = incidence_maps(g)
    nv = len(tau.rows)
    coeffs = [np.eye(nv, dtype=np.complex128)]
    P = sigma.dense().astype(np.complex128)
    tau_d = tau.dense()
    flip_d = flip.dense()
    for n in range(1, M + 1):
        coeffs.append((-1) ** n * (tau_d @ P))
        P = flip_d @ P
    return MatrixSeries(coeffs)


def zeta_sunada(g: WeightedGraph, M: int) -> RouteResult:
    """Factorization route: det of the vertex-space series times the
    roundtrip product over unoriented edges.  Empty backtrack set only."""
    _require_no_flags(g, "sunada")
    det = _factorization_matrix_series(g, M).det()
    series = det * _roundtrip_product(g, M)
    return RouteResult("sunada", series.truncate(M), {"vertex_dimension": len(g.vertices)})


def sunada_point_value(g: WeightedGraph, u0: complex) -> complex:
    """Exact value of Z^{-1}(u0) from the closed-form vertex matrix.

    Entries: diagonal 1 + sum_{x'} u0^2 W/(1 - u0^2 W), off-diagonal
    -u0 w(x,x')/(1 - u0^2 W(x,x')).  Valid strictly inside the disc of
    radius min_e 1/sqrt(W(e)); raises outside or on the boundary."""
    _require_no_flags(g, "sunada")
    verts, _ = canonical_order(g)
    vi = {x: i for i, x in enumerate(verts)}
    Ws = [g.weight[(u, v)] * g.weight[(v, u)] for u, v in g.edges]
    if Ws:
        radius = 1.0 / np.sqrt(max(Ws))
        if abs(u0) >= radius:
            raise ValueError(
                f"|u0|={abs(u0):.6g} is not inside the convergence disc of radius {radius:.6g}"
            )
    B = np.eye(len(verts), dtype=np.complex128)
    u2 = u0 * u0
    for x in verts:
        for y in g.neighbors(x):
            W = g.weight[(x, y)] * g.weight[(y, x)]
            B[vi[x], vi[x]] += u2 * W / (1 - u2 * W)
            B[vi[y], vi[x]] += -u0 * g.weight[(x, y)] / (1 - u2 * W)
    value = np.linalg.det(B)
    for W in Ws:
        value *= 1 - u2 * W
    return complex(value)


def zeta_bass(g: WeightedGraph, M: int, variant: str = "corrected") -> RouteResult:
    """Block determinant on vertex-plus-edge space.

    The matrix is [[1 - uA + u^2 B_2, u^2 tau flip^k], [u sigma, 1 + u flip]]
    with k = 2 for the corrected variant (the block forced by multiplying
    the factorization's own L and M matrices) and k = 1 as the source
    theorem displays it.  The corrected variant matches the Fredholm route;
    the as-printed one is retained to document the discrepancy."""
    _require_no_flags(g, "bass")
    if variant not in ("corrected", "as-printed"):
        raise ValueError(f"unknown variant {variant!r}")
    sigma, tau, flip = incidence_maps(g)
    A = adjacency_matrix(g).dense()
    B2 = zigzag_matrix(g, 2).dense()
    s_d, t_d, j_d = sigma.dense(), tau.dense(), flip.dense()
    nv, ne = A.shape[0], j_d.shape[0]
    dim = nv + ne
    k = 2 if variant == "corrected" else 1
    c0 = np.eye(dim, dtype=np.complex128)
    c1 = np.zeros((dim, dim), dtype=np.complex128)
    c1[:nv, :nv] = -A
    c1[nv:, :nv] = s_d
    c1[nv:, nv:] = j_d
    c2 = np.zeros((dim, dim), dtype=np.complex128)
    c2[:nv, :nv] = B2
    c2[:nv, nv:] = t_d @ np.linalg.matrix_power(j_d, k)
    coeffs = [c0, c1, c2][: M + 1]
    while len(coeffs) < M + 1:
        coeffs.append(np.zeros((dim, dim), dtype=np.complex128))
    series = MatrixSeries(coeffs).det()
    return RouteResult(
        "bass", series, {"variant": variant, "block_sizes": (nv, ne)}
    )


def backtrack_weight_constant(g: WeightedGraph, variant: str = "W") -> float:
    """The exponential correction constant for the partial product formula.

    Sums over ordered adjacent pairs with departure unflagged and return
    flagged.  The W variant uses the roundtrip weight (forced by the trace
    identity behind the formula); the w-squared variant uses the squared
    departure weight as the source displays it.  Symmetric flag sets make
    the sum empty, so the constant is exactly 0.
    """
    if variant not in ("W", "w-squared"):
        raise ValueError(f"unknown alpha variant {variant!r}")
    total = 0.0
    for x in g.vertices:
        for y in g.neighbors(x):
            if (x, y) in g.backtrack or (y, x) not in g.backtrack:
                continue
            if variant == "W":
                total += g.weight[(x, y)] * g.weight[(y, x)]
            else:
                total += g.weight[(x, y)] ** 2
    return 0.5 * total


def zeta_partial_formula(g: WeightedGraph, M: int, alpha_variant: str = "W") -> RouteResult:
    """Product formula for graphs with backtrack flags:
    det(vertex series) * prod over unflagged unoriented edges (1 - u^2 W)
    * exp(-alpha u^2).  Exact for symmetric flag sets; for asymmetric ones
    it is known to deviate from the Fredholm determinant and the result is
    flagged, not fixed."""
    alpha = backtrack_weight_constant(g, alpha_variant)
    sigma, tau, flip = incidence_maps(g)
    nv = len(tau.rows)
    coeffs = [np.eye(nv, dtype=np.complex128)]
    if M >= 1:
        coeffs.append(-zigzag_matrix(g, 1).dense().astype(np.complex128))
    if M >= 2:
        coeffs.append(zigzag_matrix(g, 2).dense().astype(np.complex128))
    t_d, j_d = tau.dense(), flip.dense()
    P = j_d @ j_d @ sigma.dense().astype(np.complex128)
    for m in range(3, M + 1):
        coeffs.append((-1) ** m * (t_d @ P))
        P = j_d @ P
    det = MatrixSeries(coeffs).det()
    flagged = {frozenset(e) for e in g.backtrack}
    series = det * _roundtrip_product(g, M, skip=flagged)
    if alpha != 0.0:
        expc = np.zeros(M + 1, dtype=np.complex128)
        if M >= 2:
            expc[2] = -alpha
        series = series * Series(expc).exp()
    return RouteResult(
        "partial",
        series.truncate(M),
        {
            "alpha": alpha,
            "alpha_variant": alpha_variant,
            "symmetric_flags": g.has_symmetric_backtrack(),
        },
    )


def zeta_classical(g: WeightedGraph, M: int) -> RouteResult:
    """Unit-weight specialization (1-u^2)^{-chi} det(1 - uA + u^2 Q) with
    chi the Euler number; valid only when every weight is 1."""
    _require_no_flags(g, "classical")
    if any(abs(w - 1.0) > 1e-12 for w in g.weight.values()):
        raise ValueError("classical route requires unit weights")
    A = adjacency_matrix(g).dense().astype(np.complex128)
    Q = excess_matrix(g).dense().astype(np.complex128)
    nv = A.shape[0]
    coeffs = [np.eye(nv, dtype=np.complex128)]
    if M >= 1:
        coeffs.append(-A)
    if M >= 2:
        coeffs.append(Q)
    while len(coeffs) < M + 1:
        coeffs.append(np.zeros((nv, nv), dtype=np.complex128))
    det = MatrixSeries(coeffs).det()
    chi = len(g.vertices) - len(g.edges)
    base_c = np.zeros(M + 1, dtype=np.complex128)
    base_c[0] = 1.0
    if M >= 2:
        base_c[2] = -1.0
    base = Series(base_c)
    series = det
    if chi > 0:
        inv = base.invert()
        for _ in range(chi):
            series = series * inv
    else:
        for _ in range(-chi):
            series = series * base
    return RouteResult("classical", series.truncate(M), {"euler_number": chi})


ROUTE_BUILDERS = {
    "fredholm": zeta_fredholm,
    "sunada": zeta_sunada,
    "bass": zeta_bass,
    "partial": zeta_partial_formula,
    "classical": zeta_classical,
}


def cross_validate(
    g: WeightedGraph, M: int, include_experimental: bool = False, tol: float = 1e-9
) -> DiscrepancyReport:
    """Run the oracle plus every applicable route and compare pairwise.

    Applicability: fredholm always; sunada and bass need no flags;
    classical additionally needs unit weights; the partial formula runs for
    symmetric flag sets, and for asymmetric ones only on request (it is
    then marked experimental, since it provably deviates there).
    """
    series: dict[str, Series] = {}
    series["oracle"] = euler_product(g, M)
    series["fredholm"] = zeta_fredholm(g, M).series
    flags: list[str] = []
    if not g.backtrack:
        series["sunada"] = zeta_sunada(g, M).series
        series["bass"] = zeta_bass(g, M).series
        if all(abs(w - 1.0) <= 1e-12 for w in g.weight.values()):
            series["classical"] = zeta_classical(g, M).series
    else:
        if g.has_symmetric_backtrack():
            series["partial"] = zeta_partial_formula(g, M).series
        else:
            flags.append("asymmetric-backtrack-set")
            if include_experimental:
                series["partial"] = zeta_partial_formula(g, M).series
                flags.append("experimental:partial")
    names = sorted(series)
    pairs = []
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            dev = max_deviation(series[a], series[b])
            pairs.append(PairVerdict(a, b, dev, coeffs_agree(series[a], series[b], tol)))
    return DiscrepancyReport(M, tol, tuple(pairs), tuple(flags))


POLE_DIMENSION_CAP = 2000


def spectrum_poles(g: WeightedGraph) -> list[tuple[complex, int]]:
    """Poles of Z as reciprocal eigenvalues of the transfer operator,
    clustered into multiplicities, sorted by modulus then argument."""
    T = transfer_matrix(g)
    if len(T.rows) > POLE_DIMENSION_CAP:
        raise ResourceCapError(
            f"edge dimension {len(T.rows)} exceeds pole cap {POLE_DIMENSION_CAP}"
        )
    eig = np.linalg.eigvals(T.dense())
    # rounding keeps equal-modulus poles adjacent despite float noise
    poles = sorted(
        (1.0 / lam for lam in eig if abs(lam) > 1e-12),
        key=lambda p: (round(abs(p), 9), round(float(np.angle(p)), 9)),
    )
    clustered: list[tuple[complex, int]] = []
    for p in poles:
        if clustered and abs(p - clustered[-1][0]) <= 1e-8 * max(1.0, abs(clustered[-1][0])):
            clustered[-1] = (clustered[-1][0], clustered[-1][1] + 1)
        else:
            clustered.append((p, 1))
    return clustered


def poles_csv_lines(poles: list[tuple[complex, int]]) -> list[str]:
    from .series import _fmt

    lines = ["re,im,multiplicity"]
    for p, mult in poles:
        lines.append(f"{_fmt(p.real)},{_fmt(p.imag)},{mult}")
    return lines
