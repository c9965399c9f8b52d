from fractions import Fraction

import pytest

import eccwheel as ew


def test_ecc_matrix_matches_definition():
    for n in range(5, 13):
        assert ew.ecc_matrix(n) == ew.ecc_matrix_definitional(n)


def test_ecc_matrix_w5():
    assert ew.ecc_matrix(5) == [
        [0, 1, 1, 1, 1],
        [1, 0, 0, 2, 0],
        [1, 0, 0, 0, 2],
        [1, 2, 0, 0, 0],
        [1, 0, 2, 0, 0],
    ]


def test_determinants_agree_with_bareiss():
    expected = [-32, -80, 0, -448, -1024, 0, -5120, -11264, 0]
    for n, value in zip(range(5, 14), expected):
        assert ew.det_E(n) == value
        assert ew.bareiss_det(ew.ecc_matrix(n)) == value


def test_inertia_and_rank():
    for n in range(5, 17):
        e = ew.ecc_matrix(n)
        assert ew.inertia_E(n) == ew.inertia_exact(e)
        assert ew.rank_E(n) == ew.rank_exact(e)
        assert ew.inertia_E_minus_edge(n) == ew.inertia_exact(ew.ecc_matrix_minus_edge(n))


def test_inverse_w6_and_pinv_w7():
    inv = ew.inverse(6)
    assert inv[0][0] == Fraction(-4, 5)
    assert inv[1][2] == Fraction(-3, 10)
    e = ew.ecc_matrix(6)
    product = [[sum(e[i][k] * inv[k][j] for k in range(6)) for j in range(6)] for i in range(6)]
    assert product == [[int(i == j) for j in range(6)] for i in range(6)]
    assert ew.penrose_check(ew.ecc_matrix(7), ew.pinv(7))


def test_spectral_radius():
    for n in (5, 9, 20):
        closed = ew.spectral_radius(n)["rho"]
        assert closed == pytest.approx((n - 4) + (n * n - 7 * n + 15) ** 0.5, abs=1e-12)
        assert abs(ew.power_iteration_rho(ew.ecc_matrix(n)) - closed) < 1e-8


def test_edm_witness():
    for n in range(5, 15):
        z = ew.edm_witness(n)
        e = ew.ecc_matrix(n)
        assert sum(z) == 0
        quad = sum(z[i] * e[i][j] * z[j] for i in range(n) for j in range(n))
        assert quad == ew.edm_witness_value(n) == (2 * (n - 1) if n % 2 else 2 * (n - 4))


def test_verify_report():
    rep = ew.verify(7)
    statuses = [c["status"] for c in rep["checks"]]
    assert "fail" not in statuses
    assert [c["name"] for c in rep["checks"]] == ew.check_names()


def test_errors():
    with pytest.raises(ew.DomainError):
        ew.inverse(7)
    with pytest.raises(ValueError):
        ew.ecc_matrix(3)
    with pytest.raises(ew.NotSymmetricError):
        ew.inertia_exact([[0, 1], [0, 0]])
    assert ew.bareiss_det([["1/2", 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)
