import numpy as np
import pytest

from trimqc import (ConvergenceError, CouplingParams, HamiltonianOp,
                    InvalidArgumentError, ResourceLimitError, build_lattice,
                    full_spectrum, gap, low_spectrum)
from trimqc.eigen import residuals

from oracles import oracle_hamiltonian


def make_op(L, J, omega, eta, h=1.0):
    return HamiltonianOp(build_lattice(L), CouplingParams(J=J, omega=omega, eta=eta, h=h))


def test_free_spins():
    spec = full_spectrum(make_op(2, J=0.0, omega=1.0, eta=1.0))
    assert np.allclose(spec.energies, [-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5])
    assert gap(spec) == pytest.approx(1.0)


def test_full_matches_characteristic_roots():
    op = make_op(2, J=6.0, omega=1.0, eta=1.0)
    spec = full_spectrum(op)
    oracle = np.linalg.eigvalsh(oracle_hamiltonian(2, 6.0, 1.0, 1.0))
    assert np.max(np.abs(spec.energies - oracle)) < 1e-10


@pytest.mark.parametrize("J,omega,eta", [(6.0, 1.0, 1.0), (-3.3, 0.2, 2.4), (5.1, 1.7, 0.0)])
def test_traceless(J, omega, eta):
    spec = full_spectrum(make_op(3, J=J, omega=omega, eta=eta))
    assert abs(spec.energies.sum()) <= 1e-9 * np.sqrt((spec.energies ** 2).sum())


def test_spectrum_invariants():
    op = make_op(3, J=-4.0, omega=1.3, eta=0.6)
    spec = full_spectrum(op)
    assert np.all(np.diff(spec.energies) >= 0)
    gram = spec.vectors.T @ spec.vectors
    assert np.max(np.abs(gram - np.eye(op.dim))) < 1e-10
    assert residuals(op, spec).max() <= 1e-8 * max(1.0, np.abs(spec.energies).max())
    assert spec.complete


def test_sign_convention():
    spec = full_spectrum(make_op(3, J=2.2, omega=0.4, eta=1.1))
    for m in range(spec.vectors.shape[1]):
        col = spec.vectors[:, m]
        nz = np.nonzero(np.abs(col) > 1e-12)[0]
        assert col[nz[0]] > 0


def test_full_spectrum_cap():
    with pytest.raises(ResourceLimitError):
        full_spectrum(make_op(5, J=1.0, omega=1.0, eta=1.0))


def test_low_equals_full_exhaustive():
    op = make_op(2, J=-2.7, omega=0.9, eta=1.4)
    dense = full_spectrum(op)
    low = low_spectrum(op, 8)
    assert np.max(np.abs(low.energies - dense.energies)) < 1e-10
    assert low.complete


@pytest.mark.parametrize("L", [2, 3, 4])
def test_low_matches_dense_randomized(L):
    rng = np.random.default_rng(100 + L)
    for _ in range(3):
        J = rng.uniform(-6, 6)
        omega, eta = rng.uniform(0, 2.5, size=2)
        op = make_op(L, J=J, omega=omega, eta=eta)
        dense = full_spectrum(op, max_sites=op.n_sites)
        low = low_spectrum(op, 4)
        assert np.max(np.abs(low.energies[:4] - dense.energies[:4])) < 1e-9


def test_low_spectrum_degenerate_free_spins():
    # J=0 splits into field multiplets; restarts must find every copy
    op = make_op(2, J=0.0, omega=1.0, eta=1.0)
    low = low_spectrum(op, 8)
    assert np.allclose(low.energies, [-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5], atol=1e-10)


def test_low_spectrum_residuals():
    op = make_op(4, J=6.0, omega=1.0, eta=0.2)
    spec = low_spectrum(op, 2)
    res = residuals(op, spec)
    assert res.max() <= 1e-8 * max(1.0, np.abs(spec.energies).max())


def test_low_spectrum_deterministic():
    op = make_op(3, J=5.0, omega=0.7, eta=1.2)
    a = low_spectrum(op, 3)
    b = low_spectrum(op, 3)
    assert np.array_equal(a.energies, b.energies)
    assert np.array_equal(a.vectors, b.vectors)


def test_mirror_swap_spectrum_invariance():
    from trimqc.hamiltonian import mirror_swapped
    op = make_op(3, J=6.0, omega=1.5, eta=0.5)
    a = full_spectrum(op)
    b = full_spectrum(mirror_swapped(op))
    assert np.max(np.abs(a.energies - b.energies)) < 1e-9


def test_ferro_antiferro_spectra_differ():
    ep = full_spectrum(make_op(2, J=6.0, omega=1.0, eta=1.0)).energies
    em = full_spectrum(make_op(2, J=-6.0, omega=1.0, eta=1.0)).energies
    assert np.max(np.abs(ep - em)) > 0.1


def test_gap_examples():
    g_iso = gap(full_spectrum(make_op(2, J=6.0, omega=1.0, eta=1.0)))
    g_aniso = gap(full_spectrum(make_op(2, J=6.0, omega=1.5, eta=0.5)))
    assert g_iso > g_aniso
    spec = full_spectrum(make_op(4, J=-6.0, omega=1.0, eta=1.0, h=1.0), max_sites=10)
    assert gap(spec) < 0.01 * abs(spec.energies[0])


def test_gap_requires_two_pairs():
    op = make_op(2, J=1.0, omega=1.0, eta=1.0)
    spec = low_spectrum(op, 1)
    if len(spec.energies) < 2:
        with pytest.raises(InvalidArgumentError):
            gap(spec)
    else:
        pytest.skip("ground level degenerate; gap defined")


def test_low_spectrum_validates_k():
    op = make_op(2, J=1.0, omega=1.0, eta=1.0)
    with pytest.raises(InvalidArgumentError):
        low_spectrum(op, 0)
    with pytest.raises(InvalidArgumentError):
        low_spectrum(op, 9)


def test_nonconvergence_raises():
    op = make_op(3, J=4.0, omega=1.1, eta=0.9)
    with pytest.raises(ConvergenceError):
        low_spectrum(op, 2, max_iter=3)
