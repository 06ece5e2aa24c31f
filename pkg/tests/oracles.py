"""Independent reference computations used to freeze expected values.

Nothing here imports the package's root-system or spectrum code.  The
Freudenthal oracle builds its own Cartan matrices and positive roots; the
harmonic oracles count kernels of Laplacians on monomial bases with FLINT.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import flint


# --- Cartan data (Bourbaki numbering, A_ij = 2(a_i, a_j)/(a_j, a_j)) ----------

def cartan(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if family in ("A", "B", "C"):
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if family == "B" and rank >= 2:
            a[rank - 2][rank - 1] = -2
        if family == "C" and rank >= 2:
            a[rank - 1][rank - 2] = -2
    elif family == "D":
        for i in range(rank - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        if rank >= 3:
            a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
            a[rank - 2][rank - 3] = a[rank - 3][rank - 2] = -1
    elif family == "F4":
        a = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    else:
        raise ValueError(family)
    return tuple(tuple(r) for r in a)


def half_lengths(family: str, rank: int) -> tuple[Fraction, ...]:
    """(a_i, a_i) / 2 for each simple root."""
    one, half = Fraction(1), Fraction(1, 2)
    if family == "B" and rank >= 2:
        return (one,) * (rank - 1) + (half,)
    if family == "C" and rank >= 2:
        return (half,) * (rank - 1) + (one,)
    if family == "F4":
        return (one, one, half, half)
    return (one,) * rank


def _inverse(m):
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def positive_roots(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, grown by root strings."""
    a = cartan(family, rank)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # p = how far beta - t a_i stays a root
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in roots:
                        p += 1
                    else:
                        break
                pair = sum(beta[j] * a[j][i] for j in range(rank))
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


class _Form:
    """Inner products of weights given in fundamental-weight coordinates."""

    def __init__(self, family: str, rank: int):
        self.a = cartan(family, rank)
        self.d = half_lengths(family, rank)
        self.ainv = _inverse(self.a)
        self.rank = rank

    def root_to_fund(self, r):
        return tuple(sum(r[i] * self.a[i][j] for i in range(self.rank)) for j in range(self.rank))

    def ip(self, mu, nu) -> Fraction:
        # mu = sum_i c_i a_i with c = mu A^{-1}; (a_i, nu) = nu_i d_i
        c = [sum(Fraction(mu[k]) * self.ainv[k][i] for k in range(self.rank))
             for i in range(self.rank)]
        return sum(c[i] * nu[i] * self.d[i] for i in range(self.rank))


def _dominant(mu, a):
    mu = list(mu)
    while True:
        i = next((i for i, x in enumerate(mu) if x < 0), None)
        if i is None:
            return tuple(mu)
        c = mu[i]
        mu = [m - c * a[i][j] for j, m in enumerate(mu)]


def _orbit_size(mu, a) -> int:
    seen = {tuple(mu)}
    frontier = [tuple(mu)]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(w)):
                if w[i]:
                    r = tuple(x - w[i] * a[i][j] for j, x in enumerate(w))
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
        frontier = nxt
    return len(seen)


@lru_cache(maxsize=None)
def freudenthal_dim(family: str, rank: int, lam: tuple[int, ...]) -> int:
    """Dimension as sum over dominant weights of multiplicity times orbit size."""
    a = cartan(family, rank)
    form = _Form(family, rank)
    pos = [form.root_to_fund(r) for r in positive_roots(family, rank)]
    rho = (1,) * rank
    lr = tuple(x + y for x, y in zip(lam, rho))
    top = form.ip(lr, lr)

    # dominant weights of the module, ordered by depth below lam
    roots_simple = positive_roots(family, rank)
    depth = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for r, rf in zip(roots_simple, pos):
                nu = tuple(x - y for x, y in zip(mu, rf))
                if all(x >= 0 for x in nu) and nu not in depth:
                    depth[nu] = depth[mu] + sum(r)
                    nxt.append(nu)
        frontier = nxt
    mult: dict = {lam: 1}

    def m(mu):
        return mult.get(_dominant(mu, a), 0)

    for mu in sorted(depth, key=lambda w: depth[w]):
        if mu == lam:
            continue
        mr = tuple(x + y for x, y in zip(mu, rho))
        denom = top - form.ip(mr, mr)
        total = Fraction(0)
        for rf in pos:
            j = 1
            while True:
                nu = tuple(x + j * y for x, y in zip(mu, rf))
                if form.ip(nu, nu) > form.ip(lam, lam) or all(
                        x == 0 for x in rf):
                    break
                mm = m(nu)
                if mm == 0 and _dominant(nu, a) not in depth:
                    break
                total += mm * form.ip(nu, rf)
                j += 1
        val = 2 * total / denom
        if val.denominator != 1:
            raise AssertionError(f"non-integral multiplicity {val} at {mu}")
        if val:
            mult[mu] = int(val)
    return sum(c * _orbit_size(mu, a) for mu, c in mult.items())


# --- splitting -------------------------------------------------------------------

def splitting_bruteforce(Q: int) -> list[tuple[int, int]]:
    """All (x-1, y-1) with x^2 - xy + y^2 = Q and k1 < 2 k2 < 4 k1."""
    out = []
    top = 2 * math.isqrt(Q) + 3
    for x in range(1, top):
        for y in range(1, top):
            if x * x - x * y + y * y == Q:
                k1, k2 = x - 1, y - 1
                if k1 < 2 * k2 < 4 * k1:
                    out.append((k1, k2))
    return sorted(out)


# --- harmonic dimensions -----------------------------------------------------------

def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def _kernel_dim(domain, codomain, image_of) -> int:
    if not domain:
        return 0
    if not codomain:
        return len(domain)
    row = {e: i for i, e in enumerate(codomain)}
    mat = flint.fmpz_mat(len(codomain), len(domain))
    for j, e in enumerate(domain):
        for target, c in image_of(e):
            mat[row[target], j] += c
    return len(domain) - mat.rank()


def sphere_harmonics_dim(n: int, k: int) -> int:
    """dim ker(Laplacian) on degree-k polynomials in n+1 real variables."""
    nv = n + 1

    def lap(e):
        for i in range(nv):
            if e[i] >= 2:
                t = list(e)
                t[i] -= 2
                yield tuple(t), e[i] * (e[i] - 1)

    return _kernel_dim(_monomials(nv, k), _monomials(nv, k - 2) if k >= 2 else [], lap)


def cp_harmonics_dim(n: int, k: int) -> int:
    """dim ker(sum d^2/dz_i dzbar_i) on bidegree (k, k) in n+1 complex variables."""
    nv = n + 1

    def bideg(d):
        return [p + q for p in _monomials(nv, d) for q in _monomials(nv, d)]

    def lap(e):
        for i in range(nv):
            if e[i] and e[nv + i]:
                t = list(e)
                t[i] -= 1
                t[nv + i] -= 1
                yield tuple(t), e[i] * e[nv + i]

    return _kernel_dim(bideg(k), bideg(k - 1) if k >= 1 else [], lap)
