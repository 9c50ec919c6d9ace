import numpy as np
import pytest

from trimqc import (CouplingParams, HamiltonianOp, InvalidArgumentError,
                    ResourceLimitError, build_lattice)
from trimqc.hamiltonian import mirror_swapped, parity_vector, permute_sites
from trimqc.lattice import mirror_permutation

from oracles import oracle_hamiltonian


def make_op(L, J, omega, eta, h=1.0):
    return HamiltonianOp(build_lattice(L), CouplingParams(J=J, omega=omega, eta=eta, h=h))


def test_params_validation():
    with pytest.raises(InvalidArgumentError):
        CouplingParams(J=1.0, omega=-0.1, eta=1.0)
    with pytest.raises(InvalidArgumentError):
        CouplingParams(J=float("inf"), omega=1.0, eta=1.0)


def test_diagonal_all_up():
    op = make_op(2, J=3.7, omega=1.0, eta=1.0)
    e = np.zeros(8)
    e[0] = 1.0
    assert op.apply(e)[0] == pytest.approx(1.5)  # <000|H|000> = 3h/2


def test_single_bond_matrix_element():
    # |000> couples to |011> through the eta bond (2,3) with amplitude J/4
    J = 6.0
    op = make_op(2, J=J, omega=1.0, eta=1.0)
    e = np.zeros(8)
    e[0] = 1.0
    out = op.apply(e)
    assert out[0b011] == pytest.approx(J / 4)
    assert out[0b110] == pytest.approx(J / 4)   # omega bond (1,2)
    assert out[0b101] == pytest.approx(J / 4)   # unit bond (1,3)


@pytest.mark.parametrize("L", [2, 3])
def test_matches_kronecker_oracle(L):
    rng = np.random.default_rng(4)
    for _ in range(3):
        J, omega, eta, h = rng.uniform(-6, 6), rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0.5, 2)
        op = make_op(L, J=J, omega=omega, eta=eta, h=h)
        H = oracle_hamiltonian(L, J, omega, eta, h)
        assert np.max(np.abs(op.materialize() - H)) < 1e-12


def test_materialize_matches_apply():
    rng = np.random.default_rng(11)
    op = make_op(3, J=-4.2, omega=0.7, eta=1.9)
    M = op.materialize()
    assert np.max(np.abs(M - M.T)) == 0.0
    for _ in range(5):
        v = rng.standard_normal(op.dim)
        assert np.linalg.norm(M @ v - op.apply(v)) <= 1e-12 * np.linalg.norm(v)


def test_offdiagonal_count():
    # every bond contributes a flip pair for each setting of the other bits,
    # counted in both directions: 2 * 2^(N-2) * bonds entries
    op = make_op(2, J=2.0, omega=0.5, eta=1.5)
    M = op.materialize()
    np.fill_diagonal(M, 0.0)
    assert np.count_nonzero(M) == 2 * 2 ** (3 - 2) * 2 * 3


def test_parity_commutes():
    rng = np.random.default_rng(7)
    for L in (2, 3, 4):
        op = make_op(L, J=5.5, omega=1.2, eta=0.4)
        P = parity_vector(op.n_sites)
        v = rng.standard_normal(op.dim)
        assert np.linalg.norm(op.apply(P * v) - P * op.apply(v)) <= 1e-12 * np.linalg.norm(v)


def test_symmetry_sampled():
    rng = np.random.default_rng(3)
    op = make_op(4, J=6.0, omega=0.3, eta=2.5)
    rows = rng.integers(0, op.dim, size=40)
    for a in rows:
        e = np.zeros(op.dim)
        e[a] = 1.0
        col = op.apply(e)   # column a of H
        for b in rng.integers(0, op.dim, size=10):
            e2 = np.zeros(op.dim)
            e2[b] = 1.0
            assert col[b] == op.apply(e2)[a]


def test_mirror_covariance():
    op = make_op(3, J=6.0, omega=1.5, eta=0.5)
    swapped = mirror_swapped(op)
    # identical spectra
    e1 = np.linalg.eigvalsh(op.materialize())
    e2 = np.linalg.eigvalsh(swapped.materialize())
    assert np.max(np.abs(e1 - e2)) < 1e-10
    # and unitary equivalence through the mirror site relabeling
    perm = mirror_permutation(op.lattice)
    rng = np.random.default_rng(9)
    v = rng.standard_normal(op.dim)
    lhs = op.apply(v)
    rhs = permute_sites(swapped.apply(permute_sites(v, op.n_sites, perm)), op.n_sites, perm)
    assert np.linalg.norm(lhs - rhs) <= 1e-12 * np.linalg.norm(v)


def test_offdiagonal_linear_in_J():
    rng = np.random.default_rng(21)
    v = rng.standard_normal(64)
    kw = dict(omega=0.8, eta=1.7, h=1.3)
    base = make_op(3, J=0.0, **kw).apply(v)
    d1 = make_op(3, J=2.0, **kw).apply(v) - base
    d2 = make_op(3, J=-7.0, **kw).apply(v) - base
    assert np.linalg.norm(d2 - (-7.0 / 2.0) * d1) <= 1e-12 * np.linalg.norm(d2)


def test_apply_rejects_bad_shape():
    op = make_op(2, J=1.0, omega=1.0, eta=1.0)
    with pytest.raises(InvalidArgumentError):
        op.apply(np.zeros(7))


def test_materialize_cap():
    op = make_op(5, J=1.0, omega=1.0, eta=1.0)
    with pytest.raises(ResourceLimitError, match="iterative"):
        op.materialize(max_sites=14)
