"""Lie derivatives, the Casimir operator and the carre du champ on SU(n).

Functions on SU(n) are polynomials in the matrix entries ``z[i,j]`` and their
conjugates ``zbar[i,j]``, treated as independent variables.  The one-parameter
subgroup ``z exp(tX)`` differentiates to

    L_X f = sum_ij (zX)_ij df/dz_ij + (zbar Xbar)_ij df/dzbar_ij.

The metric on su(n) is ``g(Z, W) = Re Tr(Z W^*)``.  Bases are stored as
rational orthogonal elements together with their squared lengths, so the
Casimir ``-sum_a L_{X_a}^2 / g(X_a, X_a)`` stays exact.  The sign makes the
eigenvalues nonnegative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .polyalg import GaussianRational, Polynomial, Ring, ring

GR = GaussianRational
Matrix = tuple[tuple[GaussianRational, ...], ...]

# on-group identities are checked at this tolerance, relative to max |f|
GROUP_TOL = 1e-9


def matrix_ring(n: int) -> Ring:
    if n < 1:
        raise ValueError(f"matrix size must be positive, got {n}")
    return ring(("z", (n, n)), ("zbar", (n, n)))


def _matrix_size(r: Ring) -> int:
    try:
        shape = r.shape("z")
        if r.shape("zbar") != shape or len(shape) != 2 or shape[0] != shape[1]:
            raise KeyError
    except KeyError:
        raise ValueError("polynomial is not over square matrix families z, zbar") from None
    return shape[0]


@dataclass(frozen=True)
class LieAlgebraElement:
    n: int
    entries: Matrix

    def __post_init__(self):
        rows = tuple(tuple(GR.coerce(x) for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        object.__setattr__(self, "entries", rows)
        for i in range(self.n):
            for j in range(self.n):
                if rows[i][j] + rows[j][i].conjugate():
                    raise ValueError(f"matrix is not skew-Hermitian at ({i}, {j})")
        if sum((rows[i][i] for i in range(self.n)), GR(0)):
            raise ValueError("matrix is not traceless")

    @property
    def is_real(self) -> bool:
        return all(not x.im for row in self.entries for x in row)

    def inner(self, other: "LieAlgebraElement") -> Fraction:
        """g(Z, W) = Re Tr(Z W^*)."""
        total = GR(0)
        for i in range(self.n):
            for j in range(self.n):
                total = total + self.entries[i][j] * other.entries[i][j].conjugate()
        return total.re


def _elem(n: int, pairs: dict) -> LieAlgebraElement:
    rows = [[GR(0)] * n for _ in range(n)]
    for (i, j), v in pairs.items():
        rows[i][j] = GR.coerce(v)
    return LieAlgebraElement(n, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class OrthonormalBasis:
    """Orthogonal basis; ``elements[a] / sqrt(norms2[a])`` is g-orthonormal."""

    n: int
    kind: str
    elements: tuple[LieAlgebraElement, ...]
    norms2: tuple[Fraction, ...]

    def __post_init__(self):
        expected = self.n * self.n - 1 if self.kind == "su" else self.n * (self.n - 1) // 2
        if len(self.elements) != expected:
            raise ValueError(f"{self.kind}({self.n}) needs {expected} elements, "
                             f"got {len(self.elements)}")
        for a, x in enumerate(self.elements):
            if x.inner(x) != self.norms2[a]:
                raise ValueError(f"element {a} has squared length {x.inner(x)}, "
                                 f"not {self.norms2[a]}")
            for b in range(a):
                if x.inner(self.elements[b]):
                    raise ValueError(f"elements {b} and {a} are not orthogonal")


def so_basis(n: int) -> OrthonormalBasis:
    els = [_elem(n, {(j, k): 1, (k, j): -1}) for j in range(n) for k in range(j + 1, n)]
    return OrthonormalBasis(n, "so", tuple(els), tuple(Fraction(2) for _ in els))


def su_basis(n: int) -> OrthonormalBasis:
    els, norms = [], []
    for j in range(n):
        for k in range(j + 1, n):
            els.append(_elem(n, {(j, k): 1, (k, j): -1}))
            els.append(_elem(n, {(j, k): GR(0, 1), (k, j): GR(0, 1)}))
            norms += [Fraction(2), Fraction(2)]
    for m in range(1, n):
        # i * diag(1, ..., 1, -m, 0, ...) with m ones
        d = {(i, i): GR(0, 1) for i in range(m)}
        d[(m, m)] = GR(0, -m)
        els.append(_elem(n, d))
        norms.append(Fraction(m + m * m))
    return OrthonormalBasis(n, "su", tuple(els), tuple(norms))


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), GR(0)) for j in range(n)]
            for i in range(n)]


def cayley_orthogonal(skew: Sequence[Sequence]) -> list[list[Fraction]]:
    """Rational orthogonal matrix (I - S)(I + S)^{-1} from a rational skew matrix S."""
    n = len(skew)
    s = [[Fraction(x) for x in row] for row in skew]
    plus = [[Fraction(i == j) + s[i][j] for j in range(n)] for i in range(n)]
    minus = [[Fraction(i == j) - s[i][j] for j in range(n)] for i in range(n)]
    # invert plus by Gauss-Jordan
    aug = [row + [Fraction(i == j) for j in range(n)] for i, row in enumerate(plus)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    inv = [row[n:] for row in aug]
    return [[sum((minus[i][k] * inv[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)]


def conjugated_basis(basis: OrthonormalBasis, q: Sequence[Sequence]) -> OrthonormalBasis:
    """Basis Q X Q^T for a rational orthogonal Q (again g-orthogonal, same lengths)."""
    qm = [[GR.coerce(x) for x in row] for row in q]
    qt = [list(col) for col in zip(*qm)]
    els = []
    for x in basis.elements:
        m = _matmul(_matmul(qm, [list(r) for r in x.entries]), qt)
        els.append(LieAlgebraElement(basis.n, tuple(tuple(r) for r in m)))
    return OrthonormalBasis(basis.n, basis.kind, tuple(els), basis.norms2)


# --- operators ------------------------------------------------------------

def lie_derivative(x: LieAlgebraElement, f: Polynomial) -> Polynomial:
    n = _matrix_size(f.ring)
    if x.n != n:
        raise ValueError(f"element of su({x.n}) applied to functions on SU({n})")
    r = f.ring
    zi = [[r.index("z", i, j) for j in range(n)] for i in range(n)]
    bi = [[r.index("zbar", i, j) for j in range(n)] for i in range(n)]
    xm = x.entries
    xbar = [[v.conjugate() for v in row] for row in xm]
    out: dict = {}
    for e, c in f.terms.items():
        for idx, mat in ((zi, xm), (bi, xbar)):
            for i in range(n):
                for j in range(n):
                    ej = e[idx[i][j]]
                    if not ej:
                        continue
                    base = c * ej
                    for k in range(n):
                        xv = mat[k][j]
                        if not xv:
                            continue
                        ne = list(e)
                        ne[idx[i][j]] -= 1
                        ne[idx[i][k]] += 1
                        ne = tuple(ne)
                        v = base * xv
                        s = out.get(ne)
                        out[ne] = v if s is None else s + v
    return Polynomial._raw(r, {e: c for e, c in out.items() if c})


def casimir_via_basis(f: Polynomial, basis: OrthonormalBasis) -> Polynomial:
    """-sum_a L_a L_a f / g(X_a, X_a), summed literally over ``basis``."""
    out = Polynomial.zero(f.ring)
    for x, w in zip(basis.elements, basis.norms2):
        out = out - lie_derivative(x, lie_derivative(x, f)) * GR(1 / w)
    return out


def _to_int_parts(f: Polynomial) -> tuple[int, dict, dict]:
    den = 1
    for c in f.terms.values():
        den = math.lcm(den, c.re.denominator, c.im.denominator)
    re_part = {e: int(c.re * den) for e, c in f.terms.items() if c.re}
    im_part = {e: int(c.im * den) for e, c in f.terms.items() if c.im}
    return den, re_part, im_part


def _polarize(terms: dict, idx, k: int, j: int) -> dict:
    """P_kj = sum_i w_ik d/dw_ij on an integer-coefficient term dict."""
    n = len(idx)
    out: dict = {}
    for e, c in terms.items():
        for i in range(n):
            a = idx[i][j]
            ea = e[a]
            if ea:
                ne = list(e)
                ne[a] -= 1
                ne[idx[i][k]] += 1
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + c * ea
    return out


def _add_into(acc: dict, terms: dict, factor: int) -> None:
    for e, c in terms.items():
        acc[e] = acc.get(e, 0) + factor * c


def _casimir_int(terms: dict, zi, bi, n: int) -> dict:
    """n times the Casimir on integer terms.

    With E, Ebar the Euler operators in z and zbar, the basis sum collapses to

        C = sum_kj (P_kj P_jk + Pb_kj Pb_jk - 2 P_kj Pb_kj)
            - (E^2 + Ebar^2 - 2 E Ebar) / n
    """
    zset = [idx for row in zi for idx in row]
    bset = [idx for row in bi for idx in row]
    acc: dict = {}
    for k in range(n):
        for j in range(n):
            pz = _polarize(terms, zi, j, k)
            _add_into(acc, _polarize(pz, zi, k, j), n)
            pb = _polarize(terms, bi, j, k)
            _add_into(acc, _polarize(pb, bi, k, j), n)
            pzb = _polarize(_polarize(terms, bi, k, j), zi, k, j)
            _add_into(acc, pzb, -2 * n)
    for e, c in terms.items():
        dz = sum(e[i] for i in zset)
        db = sum(e[i] for i in bset)
        acc[e] = acc.get(e, 0) - c * (dz - db) ** 2
    return {e: c for e, c in acc.items() if c}


def casimir(f: Polynomial, n: int) -> Polynomial:
    """-sum_a L_a^2 f over a g-orthonormal basis of su(n); nonnegative spectrum."""
    m = _matrix_size(f.ring)
    if m != n:
        raise ValueError(f"polynomial lives on {m}x{m} matrices, not {n}x{n}")
    r = f.ring
    zi = [[r.index("z", i, j) for j in range(n)] for i in range(n)]
    bi = [[r.index("zbar", i, j) for j in range(n)] for i in range(n)]
    den, re_part, im_part = _to_int_parts(f)
    cre = _casimir_int(re_part, zi, bi, n)
    cim = _casimir_int(im_part, zi, bi, n)
    scale = Fraction(1, den * n)
    terms = {}
    for e in set(cre) | set(cim):
        terms[e] = GR(cre.get(e, 0) * scale, cim.get(e, 0) * scale)
    return Polynomial._raw(r, {e: c for e, c in terms.items() if c})


def carre_du_champ(f: Polynomial, g: Polynomial, n: int) -> Polynomial:
    """k(f, g) = casimir(fg) - f casimir(g) - g casimir(f)."""
    return casimir(f * g, n) - f * casimir(g, n) - g * casimir(f, n)


def so_invariance(f: Polynomial, n: int) -> bool:
    """Exact vanishing of every so(n) Lie derivative in the free polynomial ring."""
    if _matrix_size(f.ring) != n:
        raise ValueError(f"polynomial does not live on {n}x{n} matrices")
    return all(lie_derivative(x, f).is_zero() for x in so_basis(n).elements)


# --- numerical evaluation on the group --------------------------------------

def unitary_samples(n: int, count: int, seed: int = 0) -> list[np.ndarray]:
    """Identity followed by pseudo-random special-unitary matrices."""
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    rng = np.random.default_rng(seed)
    out = [np.eye(n, dtype=complex)]
    while len(out) < count:
        m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        q, r = np.linalg.qr(m)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        q = q / np.linalg.det(q) ** (1.0 / n)
        out.append(q)
    return out


def group_points(samples: Sequence[np.ndarray]) -> np.ndarray:
    """Rows of (z entries, zbar entries) in ring variable order."""
    return np.array([np.concatenate([u.ravel(), u.conj().ravel()]) for u in samples])


def evaluate_on_group(f: Polynomial, samples: Sequence[np.ndarray]) -> np.ndarray:
    from .polyalg import evaluate_numeric
    return evaluate_numeric(f, group_points(samples))


@dataclass(frozen=True)
class EigenEstimate:
    value: float
    rational: Fraction | None
    exact: bool            # Cf = value * f in the free polynomial ring
    max_residual: float    # max |Cf - value f| / max |f| over the samples


def relative_residual(lhs: np.ndarray, rhs: np.ndarray, scale: np.ndarray) -> float:
    """max |lhs - rhs| divided by max |scale| (eigenfunctions have no fixed size)."""
    size = float(np.max(np.abs(scale)))
    return float(np.max(np.abs(lhs - rhs))) / (size if size > 0 else 1.0)


def eigenvalue(f: Polynomial, n: int, samples: Sequence[np.ndarray],
               max_denominator: int = 1000) -> EigenEstimate:
    """Casimir eigenvalue of ``f``: exact ratio if it exists, else least squares on-group."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no eigenvalue")
    cf = casimir(f, n)
    fv = evaluate_on_group(f, samples)
    cv = evaluate_on_group(cf, samples)
    e0 = next(iter(f.terms))
    ratio = cf.coefficient(e0) / f.terms[e0]
    if not ratio.im and (cf - f * ratio).is_zero():
        lam = ratio.re
        return EigenEstimate(float(lam), lam, True, relative_residual(cv, float(lam) * fv, fv))
    lam = complex(np.vdot(fv, cv) / np.vdot(fv, fv))
    guess = Fraction(lam.real).limit_denominator(max_denominator)
    res_guess = relative_residual(cv, float(guess) * fv, fv)
    if res_guess < GROUP_TOL:
        return EigenEstimate(float(guess), guess, False, res_guess)
    return EigenEstimate(lam.real, None, False, relative_residual(cv, lam * fv, fv))
