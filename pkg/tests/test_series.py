import numpy as np
import pytest

from zetagraph import fixtures
from zetagraph.operators import incidence_maps, transfer_matrix
from zetagraph.series import (
    MatrixSeries,
    Series,
    coeffs_agree,
    csv_lines,
    fredholm_det,
    max_deviation,
)


def poly_charpoly_reference(T, order):
    """Exact coefficients of det(1 - uT) by cofactor expansion over plain
    coefficient arrays; independent of the Series machinery under test."""
    n = T.shape[0]

    def conv(a, b):
        return np.convolve(a, b)

    def det(rows, cols):
        if len(rows) == 1:
            i, j = rows[0], cols[0]
            entry = np.array([1.0 + 0j if i == j else 0.0, -T[i, j]])
            return entry
        total = np.zeros(1, dtype=complex)
        i = rows[0]
        for k, j in enumerate(cols):
            entry = np.array([1.0 + 0j if i == j else 0.0, -T[i, j]])
            if not entry.any():
                continue
            minor = det(rows[1:], cols[:k] + cols[k + 1 :])
            term = (-1) ** k * conv(entry, minor)
            if len(term) > len(total):
                total = np.pad(total, (0, len(term) - len(total)))
            total[: len(term)] += term
        return total

    full = det(tuple(range(n)), tuple(range(n)))
    out = np.zeros(order + 1, dtype=complex)
    take = min(order + 1, len(full))
    out[:take] = full[:take]
    return out


def test_series_ring_identities():
    one = Series([1, 1])
    other = Series([1, -1])
    prod = one * other
    assert np.allclose(prod.coefficients(), [1, 0])
    prod = one.truncate(5) * other.truncate(5)
    assert np.allclose(prod.coefficients(), [1, 0, -1, 0, 0, 0])
    assert np.allclose((one + other).coefficients(), [2, 0])
    assert np.allclose((one - other).coefficients(), [0, 2])
    assert np.allclose((2.0 * one).coefficients(), [2, 2])
    assert np.allclose((one * 3.0).coefficients(), [3, 3])
    assert np.allclose((-one).coefficients(), [-1, -1])


def test_series_is_immutable_and_copies_input():
    buf = np.array([1.0, 2.0])
    s = Series(buf)
    buf[0] = 99.0
    assert s.coefficient(0) == 1.0
    view = s.coefficients()
    view[0] = 5.0  # mutating the returned copy must not leak back
    assert s.coefficient(0) == 1.0


def test_invert_geometric_series():
    inv = Series([1, -1, 0, 0, 0, 0]).invert()
    assert np.allclose(inv.coefficients(), np.ones(6))
    s = Series(np.arange(1, 8, dtype=float))
    assert np.allclose((s * s.invert()).coefficients(), [1, 0, 0, 0, 0, 0, 0], atol=1e-12)


def test_invert_requires_nonzero_constant():
    with pytest.raises(ValueError):
        Series([0, 1]).invert()


def test_derivative_and_scale_and_eval():
    s = Series([1, 0, 3])
    assert np.allclose(s.derivative().coefficients(), [0, 6])
    assert np.allclose(s.scale_argument(2.0).coefficients(), [1, 0, 12])
    assert s(0.5) == pytest.approx(1 + 3 * 0.25)


def test_log_of_one_minus_u_is_mercator():
    s = Series([1, -1] + [0] * 8).log()
    expected = [0] + [-1.0 / n for n in range(1, 10)]
    assert np.allclose(s.coefficients(), expected)


def test_exp_log_inverse_pair():
    rng = np.random.default_rng(0)
    for _ in range(10):
        c = rng.normal(size=9)
        c[0] = 1.0
        s = Series(c)
        assert max_deviation(s.log().exp(), s) < 1e-12
        d = rng.normal(size=9) * 0.5
        d[0] = 0.0
        t = Series(d)
        assert max_deviation(t.exp().log(), t) < 1e-11


def test_exp_log_preconditions():
    with pytest.raises(ValueError):
        Series([1, 1]).exp()
    with pytest.raises(ValueError):
        Series([2, 1]).log()


def test_fredholm_det_scalar_cases():
    assert np.allclose(fredholm_det(np.array([[2.0]]), 3).coefficients(), [1, -2, 0, 0])
    eye2 = np.eye(2)
    assert np.allclose(fredholm_det(eye2, 2).coefficients(), [1, -2, 1])


def test_fredholm_det_matches_cofactor_charpoly():
    rng = np.random.default_rng(3)
    for dim in range(1, 9):
        for _ in range(4):
            T = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            got = fredholm_det(T, 10).coefficients()
            want = poly_charpoly_reference(T, 10)
            scale = np.maximum(1.0, np.abs(want))
            assert np.max(np.abs(got - want) / scale) < 1e-9, dim


def test_fredholm_det_on_fixture_transfer_operators():
    cat = fixtures.catalogue()
    assert np.allclose(
        fredholm_det(transfer_matrix(cat["k3"]).mat, 6).coefficients().real,
        [1, 0, 0, -2, 0, 0, 1],
    )
    assert np.allclose(
        fredholm_det(transfer_matrix(cat["bt1"]).mat, 4).coefficients().real,
        [1, 0, -6, 0, 0],
    )
    assert np.allclose(
        fredholm_det(transfer_matrix(cat["edge"]).mat, 4).coefficients().real,
        [1, 0, 0, 0, 0],
    )


def test_matrix_series_det_equals_fredholm_embedding():
    rng = np.random.default_rng(4)
    for dim in (2, 3, 5):
        T = rng.normal(size=(dim, dim))
        ms = MatrixSeries.identity_minus_u(T, 8)
        assert max_deviation(ms.det(), fredholm_det(T, 8)) < 1e-12


def test_matrix_series_det_multiplicative():
    rng = np.random.default_rng(5)
    for _ in range(5):
        dim, order = 4, 8
        def rand_ms():
            coeffs = [np.eye(dim, dtype=complex)]
            coeffs += [rng.normal(size=(dim, dim)) * 0.5 for _ in range(order)]
            return MatrixSeries(coeffs)
        S1, S2 = rand_ms(), rand_ms()
        lhs = (S1 * S2).det()
        rhs = S1.det() * S2.det()
        assert coeffs_agree(lhs, rhs.truncate(order))


def test_matrix_series_det_requires_identity_head():
    with pytest.raises(ValueError):
        MatrixSeries([np.zeros((2, 2)), np.eye(2)]).det()


def test_det_of_flip_is_roundtrip_product():
    for name, g in fixtures.catalogue().items():
        if g.backtrack:
            continue
        _, _, flip = incidence_maps(g)
        lhs = fredholm_det(flip.mat, 8)
        rhs = Series.one(8)
        for u, v in g.edges:
            c = np.zeros(9, dtype=complex)
            c[0] = 1.0
            c[2] = -g.weight[(u, v)] * g.weight[(v, u)]
            rhs = rhs * Series(c)
        assert max_deviation(lhs, rhs) < 1e-12, name


def test_coeffs_agree_tolerance_contract():
    a = Series([1.0, 1000.0])
    b = Series([1.0, 1000.0 + 5e-7])
    # |delta| <= tol + tol * max(1, |ref|) with ref = 1000
    assert coeffs_agree(a, b, tol=1e-9)
    b = Series([1.0, 1000.0 + 2e-6])
    assert not coeffs_agree(a, b, tol=1e-9)


def test_csv_lines_format():
    lines = csv_lines(Series([1.0, -0.0, 0.25]))
    assert lines[0] == "n,re,im"
    assert lines[1] == "0,1.0,0.0"
    assert lines[2] == "1,0.0,0.0"  # negative zero normalized
    assert lines[3] == "2,0.25,0.0"
