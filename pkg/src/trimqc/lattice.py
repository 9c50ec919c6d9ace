"""Finite triangular patches with three nearest-neighbor bond direction classes.

Sites are numbered 1-based, row-major from the apex: row 1 holds site 1,
row r holds sites r(r-1)/2 + 1 ... r(r+1)/2, so a patch of side L has
N = L(L+1)/2 sites. Each nearest-neighbor bond belongs to one of three
direction classes:

  * eta   -- horizontal, within a row
  * omega -- down-left diagonal, site (r, c) to (r+1, c)
  * unit  -- down-right diagonal, site (r, c) to (r+1, c+1)

Every class contributes L(L-1)/2 bonds. Boundaries are open.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidArgumentError


class BondClass(str, Enum):
    OMEGA = "omega"
    ETA = "eta"
    UNIT = "unit"


@dataclass(frozen=True)
class Lattice:
    side_length: int
    n_sites: int
    bonds: tuple[tuple[int, int, BondClass], ...]
    site_coords: tuple[tuple[int, int], ...]  # (row, col), both 1-based


def site_index(row: int, col: int) -> int:
    """1-based site index of (row, col) under row-major-from-apex numbering."""
    return row * (row - 1) // 2 + col


def build_lattice(side_length: int) -> Lattice:
    """Build the open-boundary triangular patch of side length L >= 2."""
    if side_length < 2:
        raise InvalidArgumentError(f"side length must be >= 2, got {side_length}")
    L = side_length
    coords = []
    for r in range(1, L + 1):
        for c in range(1, r + 1):
            coords.append((r, c))
    bonds = []
    for r in range(2, L + 1):
        for c in range(1, r):
            bonds.append((site_index(r, c), site_index(r, c + 1), BondClass.ETA))
    for r in range(1, L):
        for c in range(1, r + 1):
            bonds.append((site_index(r, c), site_index(r + 1, c), BondClass.OMEGA))
            bonds.append((site_index(r, c), site_index(r + 1, c + 1), BondClass.UNIT))
    bonds.sort(key=lambda b: (b[0], b[1]))
    return Lattice(
        side_length=L,
        n_sites=L * (L + 1) // 2,
        bonds=tuple(bonds),
        site_coords=tuple(coords),
    )


def mirror_permutation(lattice: Lattice) -> tuple[int, ...]:
    """Left-right mirror of the patch as a site permutation.

    Entry p[i-1] is the image of site i. The mirror maps (r, c) to
    (r, r+1-c); it preserves eta-class bonds and exchanges the omega and
    unit classes.
    """
    perm = []
    for (r, c) in lattice.site_coords:
        perm.append(site_index(r, r + 1 - c))
    return tuple(perm)


def to_json_dict(lattice: Lattice) -> dict:
    """JSON-ready dump: {L, n_sites, bonds: [[i, j, class], ...]}."""
    return {
        "L": lattice.side_length,
        "n_sites": lattice.n_sites,
        "bonds": [[i, j, cls.value] for (i, j, cls) in lattice.bonds],
    }
