import numpy as np
import pytest

from qtclust import (
    DegenerateGapError,
    GapReport,
    LaplaceParams,
    ParameterError,
    eigendecompose,
    gap_stats,
    laplace_wavefunction,
    phase_field,
    select_s,
)

from conftest import random_geometric_graph


def test_select_s_first_gap_rule():
    gaps = GapReport(first_gap=0.05, avg_gap=0.04, next_ratio=3.0, low_count=2)
    assert select_s(gaps, LaplaceParams(rule="first_gap", multiplier=1.2)) == pytest.approx(0.06)


def test_select_s_avg_gap_rule():
    eig = eigendecompose(np.diag([0.0, 0.1, 0.3]))
    gaps = gap_stats(eig, 3)
    assert select_s(gaps, LaplaceParams(rule="avg_gap", multiplier=1.0)) == pytest.approx(0.15)


def test_select_s_explicit_rule():
    gaps = GapReport(first_gap=0.02, avg_gap=0.02, next_ratio=2.0, low_count=2)
    s = select_s(gaps, LaplaceParams(rule="explicit", multiplier=5 * 0.02))
    assert s == pytest.approx(0.1)


def test_select_s_degenerate_gap():
    gaps = GapReport(first_gap=0.0, avg_gap=0.0, next_ratio=0.0, low_count=2)
    with pytest.raises(DegenerateGapError):
        select_s(gaps, LaplaceParams(rule="first_gap", multiplier=1.2))


def test_laplace_params_validation():
    with pytest.raises(ParameterError):
        LaplaceParams(rule="nope", multiplier=1.0)
    with pytest.raises(ParameterError):
        LaplaceParams(rule="avg_gap", multiplier=0.0)


def test_single_node_scalar_resolvent():
    eig = eigendecompose(np.array([[0.0]]))
    wave = laplace_wavefunction(eig, 0, 2.5)
    assert wave.amplitudes[0] == pytest.approx(1 / 2.5)
    assert wave.phases[0] == 0.0


def test_two_node_hand_spectral_sum(two_node_eig):
    wave = laplace_wavefunction(two_node_eig, 0, 2.0)
    assert wave.amplitudes[0] == pytest.approx(0.375 - 0.125j, abs=1e-15)
    assert wave.amplitudes[1] == pytest.approx(0.125 + 0.125j, abs=1e-15)
    # cross-check against the direct complex solve
    solved = np.linalg.solve(2.0 * np.eye(2) + 1j * np.array([[1.0, -1.0], [-1.0, 1.0]]), np.array([1.0, 0.0]))
    assert np.abs(wave.amplitudes - solved).max() < 1e-12


def test_resolvent_identity_random_triples():
    rng = np.random.default_rng(0)
    for seed in range(20):
        m = int(rng.integers(10, 60))
        graph, eig = random_geometric_graph(seed + 100, m)
        j = int(rng.integers(m))
        s = float(rng.uniform(0.05, 2.0))
        wave = laplace_wavefunction(eig, j, s)
        e_j = np.zeros(m)
        e_j[j] = 1.0
        direct = np.linalg.solve(s * np.eye(m) + 1j * graph.hamiltonian, e_j)
        assert np.abs(wave.amplitudes - direct).max() < 1e-9
        residual = (s * np.eye(m) + 1j * graph.hamiltonian) @ wave.amplitudes - e_j
        assert np.abs(residual).max() < 1e-9


def test_init_node_phase_quadrant():
    for seed in range(5):
        graph, eig = random_geometric_graph(seed + 200, 30)
        wave = laplace_wavefunction(eig, seed % 30, 0.3)
        phase = wave.phases[wave.init_node]
        assert -np.pi / 2 < phase <= 0.0


def test_wavefunction_validation():
    _, eig = random_geometric_graph(1, 10)
    with pytest.raises(ParameterError):
        laplace_wavefunction(eig, 10, 0.5)
    with pytest.raises(ParameterError):
        laplace_wavefunction(eig, 0, 0.0)


def test_phase_field_basic_angles():
    phases = phase_field(np.array([1.0 + 0.0j, 1j, -1j, -1.0 + 0.0j]))
    assert phases[0] == 0.0
    assert phases[1] == pytest.approx(np.pi / 2)
    assert phases[2] == pytest.approx(-np.pi / 2)
    assert phases[3] == pytest.approx(np.pi)


def test_phase_field_negative_real_axis_maps_to_pi():
    # the branch cut: arguments must land in (-pi, pi], never -pi
    val = phase_field(np.array([complex(-1.0, -0.0)]))
    assert val[0] == pytest.approx(np.pi)
    assert val[0] > 0


def test_phase_field_underflow_warns():
    with pytest.warns(RuntimeWarning):
        phase_field(np.array([1e-310 + 0j, 1.0 + 0j]))
