"""Exact root systems of types A, B, C, D and F4.

Roots and weights live in the usual Euclidean ambient realizations and every
quantity is a :class:`fractions.Fraction`.  Inner products are the plain dot
product; Weyl-dimension ratios and duality pairings do not depend on the
overall scale, so no Killing-form normalization is carried around.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

RationalVec = tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D", "F4")


def vec(*coords) -> RationalVec:
    return tuple(Fraction(c) for c in coords)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence[Fraction]) -> RationalVec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def norm2(u: Sequence[Fraction]) -> Fraction:
    return dot(u, u)


def reflect(v: Sequence[Fraction], alpha: Sequence[Fraction]) -> RationalVec:
    """Reflection of ``v`` in the hyperplane orthogonal to ``alpha``."""
    return sub(v, scale(2 * dot(v, alpha) / norm2(alpha), alpha))


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan solve of a square nonsingular system over Q."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def _unit(dim: int, i: int, c=1) -> list[Fraction]:
    e = [Fraction(0)] * dim
    e[i] = Fraction(c)
    return e


def _simple_roots(family: str, rank: int) -> list[RationalVec]:
    if family == "A":
        dim = rank + 1
        return [tuple(a - b for a, b in zip(_unit(dim, i), _unit(dim, i + 1)))
                for i in range(rank)]
    if family == "F4":
        h = Fraction(1, 2)
        return [vec(0, 1, -1, 0), vec(0, 0, 1, -1), vec(0, 0, 0, 1),
                (h, -h, -h, -h)]
    dim = rank
    chain = [tuple(a - b for a, b in zip(_unit(dim, i), _unit(dim, i + 1)))
             for i in range(rank - 1)]
    if family == "B":
        last = tuple(_unit(dim, rank - 1))
    elif family == "C":
        last = tuple(_unit(dim, rank - 1, 2))
    else:  # D
        last = tuple(a + b for a, b in zip(_unit(dim, rank - 2), _unit(dim, rank - 1)))
    return chain + [last]


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    simple_roots: tuple[RationalVec, ...]
    positive_roots: tuple[RationalVec, ...]
    _gram_inv: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def label(self) -> str:
        return "F4" if self.family == "F4" else f"{self.family}{self.rank}"

    @property
    def dim(self) -> int:
        return len(self.simple_roots[0])

    def simple_coefficients(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of ``v`` (assumed in the root span) over the simple roots."""
        pairings = [dot(v, a) for a in self.simple_roots]
        return tuple(sum((g * p for g, p in zip(row, pairings)), Fraction(0))
                     for row in self._gram_inv)

    def from_simple_coefficients(self, coeffs: Sequence) -> RationalVec:
        out = (Fraction(0),) * self.dim
        for c, a in zip(coeffs, self.simple_roots):
            out = add(out, scale(c, a))
        return out

    def all_roots(self) -> tuple[RationalVec, ...]:
        return self.positive_roots + tuple(scale(-1, r) for r in self.positive_roots)


def build_root_system(family: str, rank: int) -> RootSystem:
    """Build the root system of the given family and rank.

    Positive roots are produced by closing the simple roots under simple
    reflections and keeping the roots with nonnegative simple-root
    coordinates, so the enumeration checks itself against the known counts.

    ``D2`` (= A1 x A1) is accepted because the three-sphere needs SO(4).
    """
    family = family.upper()
    if family not in FAMILIES:
        raise ValueError(f"unsupported root-system family {family!r}; "
                         f"expected one of {', '.join(FAMILIES)}")
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    if family == "F4" and rank != 4:
        raise ValueError(f"F4 has rank 4, got {rank}")
    if family == "D" and rank < 2:
        raise ValueError(f"D{rank} is not a root system (need rank >= 2)")

    simple = _simple_roots(family, rank)
    gram = [[dot(a, b) for b in simple] for a in simple]
    inv_cols = [_solve(gram, _unit(rank, j)) for j in range(rank)]
    gram_inv = tuple(tuple(inv_cols[j][i] for j in range(rank)) for i in range(rank))

    roots: set[RationalVec] = set(simple) | {scale(-1, a) for a in simple}
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for a in simple:
                s = reflect(r, a)
                if s not in roots:
                    roots.add(s)
                    nxt.append(s)
        frontier = nxt

    proto = RootSystem(family, rank, tuple(simple), (), gram_inv)
    positive = []
    for r in roots:
        c = proto.simple_coefficients(r)
        if any(x.denominator != 1 for x in c):
            raise AssertionError(f"non-integral root {r} in {family}{rank}")
        if all(x >= 0 for x in c):
            positive.append((tuple(int(x) for x in c), r))
    positive.sort(key=lambda t: (sum(t[0]), t[0]))
    return RootSystem(family, rank, tuple(simple), tuple(r for _, r in positive), gram_inv)


def positive_root_count(family: str, rank: int) -> int:
    """Classical number of positive roots."""
    return {"A": rank * (rank + 1) // 2, "B": rank * rank, "C": rank * rank,
            "D": rank * (rank - 1), "F4": 24}[family.upper()]


def rho(rs: RootSystem) -> RationalVec:
    total = (Fraction(0),) * rs.dim
    for r in rs.positive_roots:
        total = add(total, r)
    return scale(Fraction(1, 2), total)


def fundamental_weights(rs: RootSystem) -> list[RationalVec]:
    """Weights w_i in the root span with 2<w_i, a_j>/<a_j, a_j> = delta_ij."""
    out = []
    for i in range(rs.rank):
        half = norm2(rs.simple_roots[i]) / 2
        # w_i = sum_k c_k a_k with <w_i, a_j> = half * delta_ij
        coeffs = [half * rs._gram_inv[k][i] for k in range(rs.rank)]
        out.append(rs.from_simple_coefficients(coeffs))
    return out


@dataclass(frozen=True)
class Weight:
    """A weight stored both in the fundamental-weight basis and ambiently."""

    coeffs: tuple[int, ...]
    ambient: RationalVec

    @classmethod
    def from_coeffs(cls, rs: RootSystem, coeffs: Iterable[int]) -> "Weight":
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != rs.rank:
            raise ValueError(f"{rs.label} weights need {rs.rank} coefficients, "
                             f"got {len(coeffs)}")
        amb = (Fraction(0),) * rs.dim
        for c, w in zip(coeffs, fundamental_weights(rs)):
            amb = add(amb, scale(c, w))
        return cls(coeffs, amb)

    @classmethod
    def from_ambient(cls, rs: RootSystem, v: Sequence) -> "Weight":
        v = tuple(Fraction(x) for x in v)
        coeffs = []
        for a in rs.simple_roots:
            c = 2 * dot(v, a) / norm2(a)
            if c.denominator != 1:
                raise ValueError(f"{v} is not an integral weight of {rs.label}")
            coeffs.append(int(c))
        w = cls.from_coeffs(rs, coeffs)
        if w.ambient != v:
            # v has a component orthogonal to the root span (type A)
            raise ValueError(f"{v} is not in the weight lattice span of {rs.label}")
        return w

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                      add(self.ambient, other.ambient))

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * c for c in self.coeffs), scale(k, self.ambient))


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module of highest weight ``lam``."""
    if not lam.is_dominant:
        raise ValueError(f"weight {lam.coeffs} is not dominant")
    r = rho(rs)
    shifted = add(lam.ambient, r)
    num = Fraction(1)
    for alpha in rs.positive_roots:
        num *= dot(shifted, alpha) / dot(r, alpha)
    if num.denominator != 1 or num < 1:
        raise AssertionError(f"Weyl dimension formula gave {num}")
    return int(num)


def cartan_helgason_even(rs_restricted: RootSystem, lam: Weight) -> bool:
    """Spherical-weight test: <lam, a>/<a, a> is a nonnegative integer for all a > 0."""
    for alpha in rs_restricted.positive_roots:
        ratio = dot(lam.ambient, alpha) / norm2(alpha)
        if ratio.denominator != 1 or ratio < 0:
            return False
    return True
