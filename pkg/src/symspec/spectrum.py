"""Quantized energy levels, Laplace eigenvalues and multiplicities.

Rank-one spaces use the energy ``c_k = (N_M + 2k)^2 / 2``; the unit-metric
Laplace eigenvalue is ``((N_M + 2k)^2 - N_M^2) / sigma`` with the per-space
metric constant ``sigma`` from the catalog.  SU(3)/SO(3) is handled through the
quadratic form ``6 (x^2 - xy + y^2)`` on shifted root coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .catalog import SymmetricSpaceDescriptor
from .rootsys import Weight, weyl_dim

Level = Union[int, tuple[int, int]]


@dataclass(frozen=True)
class SpectralLine:
    k: Level
    energy: Fraction | None
    eigenvalue: Fraction
    multiplicity: int
    weight: Weight
    multiplicity_closed: int | None = None


@dataclass(frozen=True)
class SplittingSolution:
    """Solutions of x^2 - xy + y^2 = Q under the strict dominance constraints.

    ``ordered_pairs`` lists every admissible (k1, k2) = (x-1, y-1) and is closed
    under swapping.  ``pairs`` keeps one representative k1 <= k2 per swap
    class; each class is one irreducible summand count in the splitting.
    """

    Q: int
    ordered_pairs: tuple[tuple[int, int], ...]

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(p for p in self.ordered_pairs if p[0] <= p[1])

    @property
    def count(self) -> int:
        return len(self.pairs)


def _require_rank_one(space: SymmetricSpaceDescriptor) -> None:
    if space.rank != 1:
        raise ValueError(f"{space.id} has rank {space.rank}; use su3_eigenvalue / "
                         f"splitting_count for the rank-two space")


def energy_level(space: SymmetricSpaceDescriptor, k: int) -> Fraction:
    _require_rank_one(space)
    if k < 0:
        raise ValueError(f"level index must be nonnegative, got {k}")
    return Fraction((space.N_M + 2 * k) ** 2, 2)


def raw_eigenvalue(space: SymmetricSpaceDescriptor, k: int) -> Fraction:
    """2 c_k - N_M^2 = (N_M + 2k)^2 - N_M^2, before the metric correction."""
    return 2 * energy_level(space, k) - space.N_M ** 2


def laplace_eigenvalue(space: SymmetricSpaceDescriptor, k: int) -> Fraction:
    return raw_eigenvalue(space, k) / space.sigma


def _binom(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def multiplicity_closed(space: SymmetricSpaceDescriptor, k: int) -> int:
    if k < 0:
        raise ValueError(f"level index must be nonnegative, got {k}")
    n = space.n
    if space.id == "S^n":
        return _binom(n + k, k) - _binom(n + k - 2, k - 2)
    if space.id == "CP^n":
        return _binom(n + k, k) ** 2 - _binom(n + k - 1, k - 1) ** 2
    if space.id == "HP^n":
        m = (Fraction(2 * n + 2 * k + 1, (k + 1) * (2 * n + 1))
             * _binom(2 * n + k, k) * _binom(2 * n + k - 1, k))
        if m.denominator != 1:
            raise AssertionError(f"non-integral HP^{n} multiplicity {m} at k={k}")
        return int(m)
    raise ValueError(f"no closed-form multiplicity for {space.id}; "
                     f"use multiplicity_weyl")


def multiplicity_weyl(space: SymmetricSpaceDescriptor, k: Level) -> int:
    return weyl_dim(space.group, space.highest_weight(k))


def spectral_line(space: SymmetricSpaceDescriptor, k: int) -> SpectralLine:
    try:
        closed = multiplicity_closed(space, k)
    except ValueError:
        closed = None
    return SpectralLine(k=k, energy=energy_level(space, k),
                        eigenvalue=laplace_eigenvalue(space, k),
                        multiplicity=multiplicity_weyl(space, k),
                        weight=space.highest_weight(k), multiplicity_closed=closed)


def spectrum(space: SymmetricSpaceDescriptor, k_max: int) -> list[SpectralLine]:
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    return [spectral_line(space, k) for k in range(k_max + 1)]


# --- SU(3)/SO(3) ---------------------------------------------------------

def su3_form(x, y) -> Fraction:
    """6 (x^2 - xy + y^2): squared Tr(ad ad)-length of x*a1 + y*a2."""
    x, y = Fraction(x), Fraction(y)
    return 6 * (x * x - x * y + y * y)


def su3_dominant(k1, k2) -> bool:
    """Strict dominance k1 < 2 k2 < 4 k1 for the weight k1*a1 + k2*a2."""
    k1, k2 = Fraction(k1), Fraction(k2)
    return k1 < 2 * k2 < 4 * k1


def su3_eigenvalue(k1, k2) -> tuple[Fraction, Fraction, bool]:
    """(norm_value, eigenvalue, dominant) for the weight k1*a1 + k2*a2.

    ``k1, k2`` are coordinates over the simple roots; they may be thirds for
    weights outside the root lattice (see :func:`su3_root_coords`).  The
    eigenvalue subtracts the form at x = y = 1, the squared length of rho.
    Dominance is reported, never enforced.
    """
    norm_value = su3_form(Fraction(k1) + 1, Fraction(k2) + 1)
    return norm_value, norm_value - su3_form(1, 1), su3_dominant(k1, k2)


def su3_root_coords(m1: int, m2: int) -> tuple[Fraction, Fraction]:
    """Simple-root coordinates of m1*w_1 + m2*w_2 in A2."""
    return Fraction(2 * m1 + m2, 3), Fraction(m1 + 2 * m2, 3)


def su3_family_eigenvalue(p: int, q: int) -> Fraction:
    """Tr(ad ad)-normalized eigenvalue of phi_a^p phitilde_b^q (weight 2q w_1 + 2p w_2)."""
    return su3_eigenvalue(*su3_root_coords(2 * q, 2 * p))[1]


def splitting_count(Q: int) -> SplittingSolution:
    """All (k1, k2) with x = k1 + 1, y = k2 + 1 solving x^2 - xy + y^2 = Q.

    The search box 1 < x, y <= ceil(2 sqrt(Q)) is complete because
    x^2 - xy + y^2 >= x^2 / 4 (and symmetrically in y).
    """
    if Q < 1:
        raise ValueError(f"Q must be positive, got {Q}")
    bound = math.isqrt(4 * Q)
    if bound * bound < 4 * Q:
        bound += 1
    found = []
    for x in range(2, bound + 1):
        # y solves y^2 - x y + (x^2 - Q) = 0
        disc = 4 * Q - 3 * x * x
        if disc < 0:
            continue
        r = math.isqrt(disc)
        if r * r != disc:
            continue
        for y2 in {x + r, x - r}:
            if y2 % 2:
                continue
            y = y2 // 2
            if 2 <= y <= bound and su3_dominant(x - 1, y - 1):
                found.append((x - 1, y - 1))
    return SplittingSolution(Q, tuple(sorted(found)))
