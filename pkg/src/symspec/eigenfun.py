"""Explicit eigenfunction families and their verification.

* CP^n: ``(a,z)^k (b,w)^k`` with ``(a,b) = 0``, restricted to ``w = zbar``.
* HP^n: ``l_AB(U,V)^k`` with ``I(A,B) = (a,d) - (b,c) = 0``, restricted to
  ``U = (z, w)``, ``V = (wbar, -zbar)``.
* SU(n)/SO(n): ``phi_a^p phitilde_b^q`` with ``(a,b) = 0``.

The bilinear form ``(x, y) = sum x_i y_i`` never conjugates.  Admissible
parameters are sampled exactly: ``b`` is projected into the null space of
``(a, .)`` using Gaussian-integer arithmetic, so constraints hold with zero
residual.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import liediff
from .catalog import SymmetricSpaceDescriptor, lookup
from .polyalg import (GaussianRational, Polynomial, Ring, apply_box, mixed_laplacian,
                      ring, span_rank_profile)
from .spectrum import multiplicity_closed, multiplicity_weyl, su3_family_eigenvalue

GR = GaussianRational
Vector = tuple[GaussianRational, ...]
Level = Union[int, tuple[int, int]]

# generators sampled per unit of target multiplicity in span-rank checks
OVERSAMPLING = 5
# sample points on SU(n) for on-group identities
GROUP_SAMPLES = 200


class ConstraintError(ValueError):
    """Family parameters violate the isotropy constraint."""

    def __init__(self, message: str, residual: GaussianRational):
        super().__init__(f"{message} (residual {residual})")
        self.residual = residual


def bilinear(x: Sequence, y: Sequence) -> GaussianRational:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    total = GR(0)
    for a, b in zip(x, y):
        total = total + GR.coerce(a) * GR.coerce(b)
    return total


def _vec(x: Sequence) -> Vector:
    return tuple(GR.coerce(v) for v in x)


def quaternionic_residual(A: Sequence, B: Sequence) -> GaussianRational:
    """I(A, B) = (a, d) - (b, c) for A = (a, b), B = (c, d)."""
    if len(A) != len(B) or len(A) % 2:
        raise ValueError("A and B must have the same even length")
    h = len(A) // 2
    return bilinear(A[:h], B[h:]) - bilinear(A[h:], B[:h])


@dataclass(frozen=True)
class SectionFamilySpec:
    space_id: str
    level: Level
    params: tuple[Vector, ...]
    constraint_residual: GaussianRational


# --- rings ------------------------------------------------------------------

def cpn_ring(n: int) -> Ring:
    return ring(("z", n + 1), ("w", n + 1))


def cpn_restricted_ring(n: int) -> Ring:
    return ring(("z", n + 1), ("zbar", n + 1))


def hpn_ring(n: int) -> Ring:
    return ring(("U", 2 * n + 2), ("V", 2 * n + 2))


def hpn_restricted_ring(n: int) -> Ring:
    return ring(("z", n + 1), ("w", n + 1), ("zbar", n + 1), ("wbar", n + 1))


# --- CP^n -------------------------------------------------------------------

def cpn_spec(a: Sequence, b: Sequence, k: int) -> SectionFamilySpec:
    return SectionFamilySpec("CP^n", k, (_vec(a), _vec(b)), bilinear(a, b))


def cpn_section(a: Sequence, b: Sequence, k: int) -> Polynomial:
    if len(a) != len(b) or len(a) < 2:
        raise ValueError("a and b must be vectors of the same length n+1 >= 2")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    res = bilinear(a, b)
    if res:
        raise ConstraintError("CP^n section needs (a, b) = 0", res)
    rg = cpn_ring(len(a) - 1)
    return (Polynomial.linear(rg, a, "z") ** k) * (Polynomial.linear(rg, b, "w") ** k)


def restrict_conjugate(p: Polynomial) -> Polynomial:
    """Substitute w_i -> zbar_i."""
    (zn, zs), (wn, ws) = p.ring.families
    if (zn, wn) != ("z", "w") or zs != ws:
        raise ValueError("expected a polynomial over families z, w of equal size")
    target = ring(("z", zs), ("zbar", zs))
    mapping = {f"w[{i}]": Polynomial.var(target, "zbar", i) for i in range(zs[0])}
    return p.substitute(mapping, target)


def euclidean_laplacian(p: Polynomial) -> Polynomial:
    """4 sum d^2/dz_i dzbar_i (and likewise for w if present)."""
    out = mixed_laplacian(p, "z", "zbar")
    if any(name == "w" for name, _ in p.ring.families):
        out = out + mixed_laplacian(p, "w", "wbar")
    return out * 4


# --- HP^n -------------------------------------------------------------------

def hpn_spec(A: Sequence, B: Sequence, k: int) -> SectionFamilySpec:
    return SectionFamilySpec("HP^n", k, (_vec(A), _vec(B)), quaternionic_residual(A, B))


def l_ab(A: Sequence, B: Sequence, rg: Ring) -> Polynomial:
    """l_AB(U, V) = (A, U)(B, V) - (B, U)(A, V)."""
    return (Polynomial.linear(rg, A, "U") * Polynomial.linear(rg, B, "V")
            - Polynomial.linear(rg, B, "U") * Polynomial.linear(rg, A, "V"))


def hpn_section(A: Sequence, B: Sequence, k: int) -> Polynomial:
    if len(A) != len(B) or len(A) < 4 or len(A) % 2:
        raise ValueError("A and B must be vectors of the same even length 2n+2 >= 4")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    res = quaternionic_residual(A, B)
    if res:
        raise ConstraintError("HP^n section needs I(A, B) = (a,d) - (b,c) = 0", res)
    rg = hpn_ring(len(A) // 2 - 1)
    return l_ab(A, B, rg) ** k


def hpn_restrict(p: Polynomial) -> Polynomial:
    """Substitute U = (z, w) and V = (wbar, -zbar)."""
    size = p.ring.shape("U")[0]
    if p.ring.shape("V") != (size,) or size % 2:
        raise ValueError("expected a polynomial over families U, V of equal even size")
    m = size // 2
    target = hpn_restricted_ring(m - 1)
    mapping = {}
    for i in range(m):
        mapping[f"U[{i}]"] = Polynomial.var(target, "z", i)
        mapping[f"U[{m + i}]"] = Polynomial.var(target, "w", i)
        mapping[f"V[{i}]"] = Polynomial.var(target, "wbar", i)
        mapping[f"V[{m + i}]"] = -Polynomial.var(target, "zbar", i)
    return p.substitute(mapping, target)


# --- SU(n)/SO(n) --------------------------------------------------------------

def _phi(a: Sequence, n: int, fam: str) -> Polynomial:
    if len(a) != n:
        raise ValueError(f"vector has length {len(a)}, expected {n}")
    rg = liediff.matrix_ring(n)
    out = Polynomial.zero(rg)
    for i in range(n):
        col = Polynomial.zero(rg)
        for j in range(n):
            c = GR.coerce(a[j])
            if c:
                col = col + Polynomial.var(rg, fam, j, i) * c
        out = out + col * col
    return out


def sun_phi(a: Sequence, n: int) -> Polynomial:
    """phi_a = Tr(z^T a a^T z) = sum_{j,al} a_j a_al Phi_{j al}, Phi = z z^T."""
    return _phi(a, n, "z")


def sun_phi_tilde(b: Sequence, n: int) -> Polynomial:
    """phitilde_b = Tr(zbar^T b b^T zbar)."""
    return _phi(b, n, "zbar")


def sun_family(a: Sequence, b: Sequence, p: int, q: int, n: int) -> Polynomial:
    if p < 0 or q < 0:
        raise ValueError(f"exponents must be nonnegative, got ({p}, {q})")
    res = bilinear(a, b)
    if res:
        raise ConstraintError("SU(n) family needs (a, b) = 0", res)
    return (sun_phi(a, n) ** p) * (sun_phi_tilde(b, n) ** q)


# --- admissible sampling ------------------------------------------------------

def _gauss_int(rng: random.Random, bound: int) -> GaussianRational:
    return GR(rng.randint(-bound, bound), rng.randint(-bound, bound))


def sample_isotropic_pair(rng: random.Random, size: int, bound: int = 3) -> tuple[Vector, Vector]:
    """(a, b) with (a, b) = 0 exactly: b <- (a,a) b - (a,b) a."""
    while True:
        a = tuple(_gauss_int(rng, bound) for _ in range(size))
        aa = bilinear(a, a)
        if aa:
            break
    b = tuple(_gauss_int(rng, bound) for _ in range(size))
    ab = bilinear(a, b)
    b = tuple(aa * y - ab * x for x, y in zip(a, b))
    return a, b


def sample_quaternionic_pair(rng: random.Random, size: int, bound: int = 3) -> tuple[Vector, Vector]:
    """(A, B) in C^{2m} with I(A, B) = 0: c <- (a,a) c, d <- (a,a) d - I a."""
    m = size // 2
    while True:
        A = tuple(_gauss_int(rng, bound) for _ in range(size))
        aa = bilinear(A[:m], A[:m])
        if aa:
            break
    B = tuple(_gauss_int(rng, bound) for _ in range(size))
    res = quaternionic_residual(A, B)
    c = tuple(aa * x for x in B[:m])
    d = tuple(aa * y - res * x for x, y in zip(A[:m], B[m:]))
    return A, c + d


# --- verification ---------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: str
    detail: str = ""


@dataclass(frozen=True)
class FamilyReport:
    space_id: str
    n: int | None
    level: Level
    rank: int
    expected_rank: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _generators(space: SymmetricSpaceDescriptor, level: Level, count: int,
                rng: random.Random) -> tuple[list[Polynomial], list[Polynomial],
                                             list[GaussianRational], str]:
    """(raw sections, restricted functions, constraint residuals, annihilator name)."""
    raw, restricted, residuals = [], [], []
    if space.id == "CP^n":
        for _ in range(count):
            a, b = sample_isotropic_pair(rng, space.n + 1)
            residuals.append(bilinear(a, b))
            s = cpn_section(a, b, level)
            raw.append(s)
            restricted.append(restrict_conjugate(s))
        return raw, restricted, residuals, "mixed_laplacian"
    if space.id == "HP^n":
        for _ in range(count):
            A, B = sample_quaternionic_pair(rng, 2 * space.n + 2)
            residuals.append(quaternionic_residual(A, B))
            s = hpn_section(A, B, level)
            raw.append(s)
            restricted.append(hpn_restrict(s))
        return raw, restricted, residuals, "box"
    if space.id == "SU3/SO3":
        p, q = level
        for _ in range(count):
            a, b = sample_isotropic_pair(rng, 3)
            residuals.append(bilinear(a, b))
            f = sun_family(a, b, p, q, 3)
            raw.append(f)
            restricted.append(f)
        return raw, restricted, residuals, "so_invariance"
    raise ValueError(f"no explicit eigenfunction family for {space.id}")


def family_generators(space: SymmetricSpaceDescriptor, level: Level, count: int,
                      seed: int = 0) -> list[Polynomial]:
    """``count`` restricted generators from admissible parameters (seeded)."""
    return _generators(space, level, count, random.Random(seed))[1]


def expected_multiplicity(space: SymmetricSpaceDescriptor, level: Level) -> int:
    if space.id in ("CP^n", "HP^n"):
        return multiplicity_closed(space, level)
    return multiplicity_weyl(space, level)


def verify_family(space: SymmetricSpaceDescriptor | str, level: Level, n: int | None = None,
                  seed: int = 0) -> FamilyReport:
    """Constraint gate, annihilation identity, span rank and (SU(3)) Casimir checks."""
    if isinstance(space, str):
        space = lookup(space, n)
    if space.id == "SU3/SO3":
        level = tuple(level) if not isinstance(level, int) else level
        if isinstance(level, int) or len(level) != 2:
            raise ValueError("SU3/SO3 levels are exponent pairs (p, q)")
    elif not isinstance(level, int):
        raise ValueError(f"{space.id} levels are integers")
    target = expected_multiplicity(space, level)
    rng = random.Random(seed)
    raw, restricted, residuals, annihilator = _generators(
        space, level, OVERSAMPLING * target, rng)
    checks = []

    bad = [r for r in residuals if r]
    checks.append(CheckResult("constraint", not bad, str(bad[0] if bad else GR(0)),
                              f"{len(residuals)} sampled parameter sets"))

    if annihilator == "mixed_laplacian":
        worst = next((mixed_laplacian(s, "z", "w") for s in raw
                      if not mixed_laplacian(s, "z", "w").is_zero()), None)
        checks.append(CheckResult("annihilation", worst is None,
                                  "0" if worst is None else worst.to_text(),
                                  "sum d^2/dz_i dw_i of each section"))
        worst = next((euclidean_laplacian(s) for s in restricted
                      if not euclidean_laplacian(s).is_zero()), None)
        checks.append(CheckResult("harmonic_restriction", worst is None,
                                  "0" if worst is None else worst.to_text(),
                                  "Euclidean Laplacian of each restriction"))
    elif annihilator == "box":
        worst = next((apply_box(s, space.n) for s in raw
                      if not apply_box(s, space.n).is_zero()), None)
        checks.append(CheckResult("annihilation", worst is None,
                                  "0" if worst is None else worst.to_text(),
                                  "box operator on each section"))
        worst = next((euclidean_laplacian(s) for s in restricted
                      if not euclidean_laplacian(s).is_zero()), None)
        checks.append(CheckResult("harmonic_restriction", worst is None,
                                  "0" if worst is None else worst.to_text(),
                                  "Euclidean Laplacian of each restriction"))
    else:
        inv = all(liediff.so_invariance(f, 3) for f in raw[:3])
        checks.append(CheckResult("so_invariance", inv, "0" if inv else "nonzero",
                                  "exact so(3) Lie derivatives of three generators"))
        samples = liediff.unitary_samples(3, GROUP_SAMPLES, seed)
        est = liediff.eigenvalue(raw[0], 3, samples)
        ok = est.max_residual < liediff.GROUP_TOL
        checks.append(CheckResult("casimir_eigen", ok, f"{est.max_residual:.3e}",
                                  f"eigenvalue {est.rational if est.rational is not None else est.value}"))
        predicted = su3_family_eigenvalue(*level)
        lam = est.rational if est.rational is not None else est.value
        normalized = lam * space.sigma if est.rational is not None else est.value * float(space.sigma)
        ok = abs(float(normalized) - float(predicted)) < 1e-9
        checks.append(CheckResult("casimir_normalization", ok,
                                  f"{abs(float(normalized) - float(predicted)):.3e}",
                                  f"{space.sigma} * {lam} vs su3 value {predicted}"))

    prof = span_rank_profile(restricted, sample_seed=seed)
    checks.append(CheckResult("span_rank", prof.rank == target, str(prof.rank - target),
                              f"rank {prof.rank} of {len(restricted)} generators, "
                              f"multiplicity {target}, {prof.points_used} points"))
    checks.sort(key=lambda c: c.name)
    return FamilyReport(space.id, space.n, level, prof.rank, target, tuple(checks))
