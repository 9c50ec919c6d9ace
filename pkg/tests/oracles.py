"""Independent brute-force reference implementations for tests.

Deliberately different algorithms from the package: the Hamiltonian is
assembled from explicit Kronecker products of single-site operators, the
partial trace and partial transpose work by bit-arithmetic index maps
instead of tensor reshapes, and thermal weights come from high-precision
direct summation. Site conventions match the package contract (1-based,
site 1 = most significant bit, S = sigma/2).
"""

import mpmath
import numpy as np

SX = np.array([[0.0, 0.5], [0.5, 0.0]])
SZ = np.array([[0.5, 0.0], [0.0, -0.5]])
ID2 = np.eye(2)


def oracle_bonds(L):
    """Bond list rebuilt from patch coordinates, not from the package."""
    coords = [(r, c) for r in range(1, L + 1) for c in range(1, r + 1)]
    index = {rc: i + 1 for i, rc in enumerate(coords)}
    bonds = []
    for (r, c) in coords:
        if (r, c + 1) in index:
            bonds.append((index[(r, c)], index[(r, c + 1)], "eta"))
        if (r + 1, c) in index:
            bonds.append((index[(r, c)], index[(r + 1, c)], "omega"))
        if (r + 1, c + 1) in index:
            bonds.append((index[(r, c)], index[(r + 1, c + 1)], "unit"))
    return bonds, len(coords)


def site_operator(op, site, n):
    out = np.eye(1)
    for s in range(1, n + 1):
        out = np.kron(out, op if s == site else ID2)
    return out


def oracle_hamiltonian(L, J, omega, eta, h=1.0):
    """Dense H by Kronecker-product assembly."""
    bonds, n = oracle_bonds(L)
    factor = {"omega": omega, "eta": eta, "unit": 1.0}
    H = np.zeros((2 ** n, 2 ** n))
    for (i, j, cls) in bonds:
        H += J * factor[cls] * (site_operator(SX, i, n) @ site_operator(SX, j, n))
    for i in range(1, n + 1):
        H += h * site_operator(SZ, i, n)
    return H


def oracle_partial_trace(rho, n, keep):
    """Reduced matrix over `keep` (ordered) via explicit index summation."""
    rest = [s for s in range(1, n + 1) if s not in keep]
    dk, dr = 2 ** len(keep), 2 ** len(rest)
    kept_part = np.zeros(dk, dtype=np.int64)
    for t, s in enumerate(keep):
        kept_part |= ((np.arange(dk) >> (len(keep) - 1 - t)) & 1) << (n - s)
    rest_part = np.zeros(dr, dtype=np.int64)
    for t, s in enumerate(rest):
        rest_part |= ((np.arange(dr) >> (len(rest) - 1 - t)) & 1) << (n - s)
    out = np.zeros((dk, dk))
    for r in rest_part:
        idx = kept_part + r
        out += rho[np.ix_(idx, idx)]
    return out


def oracle_partial_transpose(rho, n, sites_a):
    """Partial transpose by swapping the A-bits of row and column indices."""
    dim = 2 ** n
    mask = 0
    for s in sites_a:
        mask |= 1 << (n - s)
    a = np.arange(dim)[:, None]
    b = np.arange(dim)[None, :]
    a2 = (a & ~mask) | (b & mask)
    b2 = (b & ~mask) | (a & mask)
    out = np.empty_like(rho)
    out[a2, b2] = rho
    return out


def oracle_negativity(rho, n, sites_a):
    mu = np.linalg.eigvalsh(oracle_partial_transpose(rho, n, sites_a))
    return float(np.abs(mu).sum() - 1.0)


def oracle_thermal_weights(energies, T, dps=50):
    """exp(-E_i/T)/Z by direct high-precision summation (k_B = 1)."""
    with mpmath.workdps(dps):
        ws = [mpmath.exp(-mpmath.mpf(float(e)) / T) for e in energies]
        Z = mpmath.fsum(ws)
        return np.array([float(w / Z) for w in ws])


def oracle_mqc(rho, n, center):
    """T_N and friends, entirely through the dense full-PT route."""
    one_vs_rest = oracle_negativity(rho, n, [center])
    pairwise = {}
    for j in range(1, n + 1):
        if j == center:
            continue
        rho_pair = oracle_partial_trace(rho, n, [center, j])
        pairwise[j] = max(oracle_negativity(rho_pair, 2, [1]), 0.0)
    radicand = one_vs_rest ** 2 - sum(v ** 2 for v in pairwise.values())
    return {
        "one_vs_rest": one_vs_rest,
        "pairwise": pairwise,
        "radicand": radicand,
        "t_n": float(np.sqrt(max(radicand, 0.0))),
    }


def ghz_vector(n):
    v = np.zeros(2 ** n)
    v[0] = v[-1] = 1 / np.sqrt(2)
    return v


def bell_block_product_vector():
    """Ten-spin product of row blocks: the large-eta limit of the N=10 patch.

    Rows decouple into independent within-row chains; each row block is the
    equal superposition of the two alternating patterns.
    """
    def block(bits_a, bits_b):
        v = np.zeros(2 ** len(bits_a))
        v[int(bits_a, 2)] = v[int(bits_b, 2)] = 1 / np.sqrt(2)
        return v
    v = np.array([1.0, 1.0]) / np.sqrt(2)          # row 1: single site
    v = np.kron(v, block("10", "01"))              # row 2
    v = np.kron(v, block("101", "010"))            # row 3
    v = np.kron(v, block("1010", "0101"))          # row 4
    return v
