"""Sparse multivariate polynomials over the Gaussian rationals Q(i).

A :class:`Ring` declares named variable families with fixed shapes (vectors
``z[0], z[1], ...`` or matrices ``z[0,1], ...``).  Polynomials map exponent
tuples to :class:`GaussianRational` coefficients and never store zeros.
Arithmetic between polynomials of different rings is an error.

Canonical text form (used by the CLI ``--emit`` output)::

    poly     := "0" | term (" + " term)*
    term     := "(" coeff ")" ("*" var ("^" int)?)*
    coeff    := rational sign rational "i"        e.g. 1/2-3i, 0+1i, -4+0i
    var      := family "[" int ("," int)* "]"

Terms are ordered by descending total degree, then descending exponent tuple
in ring order.  The rendering is bit-exact across runs.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import flint
import numpy as np


class GaussianRational:
    """Exact complex number a + b i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise TypeError(f"refusing inexact complex {x!r}")
            return cls(int(x.real), int(x.imag))
        if isinstance(x, (int, Rational)):
            return cls(x)
        if isinstance(x, str):
            return parse_gaussian(x)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        if not o.im:
            return GaussianRational(self.re * o.re, self.im * o.re)
        if not self.im:
            return GaussianRational(self.re * o.re, self.re * o.im)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        d = o.re * o.re + o.im * o.im
        if not d:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(o.re / d, -o.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


GR = GaussianRational
I = GaussianRational(0, 1)

_GR_RE = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)i\s*$")


def parse_gaussian(text: str) -> GaussianRational:
    m = _GR_RE.match(text)
    if not m:
        raise ValueError(f"not a Gaussian rational in a+bi form: {text!r}")
    im = Fraction(m.group(3))
    return GaussianRational(Fraction(m.group(1)), im if m.group(2) == "+" else -im)


# --- rings ---------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """Ordered variable families; ``shape`` is an int (vector) or (rows, cols)."""

    families: tuple[tuple[str, tuple[int, ...]], ...]
    names: tuple[str, ...] = field(init=False, compare=False, repr=False)
    _index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        fams = []
        for name, shape in self.families:
            shape = (shape,) if isinstance(shape, int) else tuple(shape)
            if not re.fullmatch(r"[A-Za-z][A-Za-z_]*", name):
                raise ValueError(f"bad family name {name!r}")
            fams.append((name, shape))
        object.__setattr__(self, "families", tuple(fams))
        if len({n for n, _ in fams}) != len(fams):
            raise ValueError(f"duplicate family names in {fams}")
        names, index = [], {}
        for name, shape in fams:
            for idx in itertools.product(*(range(s) for s in shape)):
                index[(name,) + idx] = len(names)
                names.append(f"{name}[{','.join(map(str, idx))}]")
        for i, nm in enumerate(names):
            index[nm] = i
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "_index", index)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, family_or_name: str, *idx: int) -> int:
        key = (family_or_name,) + idx if idx else family_or_name
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"variable {key!r} not declared in ring "
                           f"{[n for n, _ in self.families]}") from None

    def shape(self, family: str) -> tuple[int, ...]:
        for name, shape in self.families:
            if name == family:
                return shape
        raise KeyError(f"family {family!r} not declared")

    def family_indices(self, family: str) -> list[int]:
        shape = self.shape(family)
        return [self._index[(family,) + idx]
                for idx in itertools.product(*(range(s) for s in shape))]


def ring(*families) -> Ring:
    """``ring(("z", 3), ("w", 3))`` or ``ring(("z", (3, 3)))``."""
    return Ring(tuple(families))


# --- polynomials ---------------------------------------------------------

Exps = tuple[int, ...]


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Exps, object] | None = None):
        self.ring = ring
        clean = {}
        for e, c in (terms or {}).items():
            c = GaussianRational.coerce(c)
            if c:
                if len(e) != ring.nvars:
                    raise ValueError(f"exponent {e} has wrong length for {ring.nvars} vars")
                clean[tuple(e)] = c
        self.terms: dict[Exps, GaussianRational] = clean

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # constructors
    @classmethod
    def const(cls, ring: Ring, c=1) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def var(cls, ring: Ring, family_or_name: str, *idx: int) -> "Polynomial":
        i = ring.index(family_or_name, *idx)
        e = [0] * ring.nvars
        e[i] = 1
        return cls._raw(ring, {tuple(e): GaussianRational(1)})

    @classmethod
    def linear(cls, ring: Ring, coeffs: Sequence, family: str) -> "Polynomial":
        """sum_i coeffs[i] * family[i] (the bilinear pairing (a, z))."""
        idx = ring.family_indices(family)
        if len(coeffs) != len(idx):
            raise ValueError(f"{family} has {len(idx)} entries, got {len(coeffs)} coefficients")
        terms = {}
        for c, i in zip(coeffs, idx):
            c = GaussianRational.coerce(c)
            if c:
                e = [0] * ring.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return cls._raw(ring, terms)

    # arithmetic
    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials belong to different rings: "
                             f"{self.ring.families} vs {other.ring.families}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.const(self.ring, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = GaussianRational.coerce(other)
            if not c:
                return Polynomial.zero(self.ring)
            return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.const(self.ring, 1)
        base = self
        while m:
            if m & 1:
                out = out * base
            m >>= 1
            if m:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == Polynomial.const(self.ring, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.ring.nvars, GaussianRational(0))

    def coefficient(self, exps: Exps) -> GaussianRational:
        return self.terms.get(tuple(exps), GaussianRational(0))

    def conjugate_coefficients(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c.conjugate() for e, c in self.terms.items()})

    def derive(self, var, *idx) -> "Polynomial":
        i = var if isinstance(var, int) else self.ring.index(var, *idx)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                out[ne] = c * k
        return Polynomial._raw(self.ring, out)

    def evaluate(self, values: Sequence) -> GaussianRational:
        """Exact evaluation at a point given in ring variable order."""
        vals = [GaussianRational.coerce(v) for v in values]
        if len(vals) != self.ring.nvars:
            raise ValueError(f"need {self.ring.nvars} values, got {len(vals)}")
        total = GaussianRational(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v ** k
            total = total + t
        return total

    def substitute(self, mapping: Mapping[str, "Polynomial"], target: Ring) -> "Polynomial":
        """Replace variables (by name) with polynomials over ``target``.

        Unmapped variables must exist in ``target`` under the same name.
        """
        images = []
        for name in self.ring.names:
            if name in mapping:
                img = mapping[name]
                if img.ring != target:
                    raise ValueError(f"image of {name} is not over the target ring")
            else:
                img = Polynomial.var(target, name)
            images.append(img)
        out = Polynomial.zero(target)
        cache: dict[tuple[int, int], Polynomial] = {}
        for e, c in self.terms.items():
            t = Polynomial.const(target, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    t = t * cache[key]
            out = out + t
        return out

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            s = f"({self.terms[e]})"
            for name, k in zip(self.ring.names, e):
                if k == 1:
                    s += f"*{name}"
                elif k:
                    s += f"*{name}^{k}"
            parts.append(s)
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial<{self.to_text()}>"

    @classmethod
    def parse(cls, text: str, ring: Ring) -> "Polynomial":
        text = text.strip()
        if text == "0":
            return cls.zero(ring)
        out = cls.zero(ring)
        for chunk in re.split(r"\s\+\s", text):
            m = re.fullmatch(r"\(([^)]*)\)((?:\*[A-Za-z_]+\[[\d,]+\](?:\^\d+)?)*)", chunk.strip())
            if not m:
                raise ValueError(f"malformed term {chunk!r}")
            e = [0] * ring.nvars
            for vm in re.finditer(r"\*([A-Za-z_]+\[[\d,]+\])(?:\^(\d+))?", m.group(2)):
                try:
                    e[ring.index(vm.group(1))] += int(vm.group(2) or 1)
                except KeyError as exc:
                    raise ValueError(exc.args[0]) from None
            out = out + cls(ring, {tuple(e): parse_gaussian(m.group(1))})
        return out


def arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"op must be 'add' or 'mul', got {op!r}")


def pow(p: Polynomial, m: int) -> Polynomial:  # noqa: A001 - mirrors the ring operation name
    return p ** m


def derive(p: Polynomial, var, *idx) -> Polynomial:
    return p.derive(var, *idx)


def mixed_laplacian(p: Polynomial, fam1: str, fam2: str) -> Polynomial:
    """sum_i d^2 / d fam1[i] d fam2[i]."""
    a, b = p.ring.family_indices(fam1), p.ring.family_indices(fam2)
    if len(a) != len(b):
        raise ValueError(f"families {fam1} and {fam2} have different sizes")
    out = Polynomial.zero(p.ring)
    for i, j in zip(a, b):
        out = out + p.derive(i).derive(j)
    return out


def apply_box(p: Polynomial, n: int) -> Polynomial:
    """sum_{i=0}^{n} (d^2/dU_i dV_{n+1+i} - d^2/dV_i dU_{n+1+i}) on families U, V."""
    for fam in ("U", "V"):
        shape = p.ring.shape(fam)
        if shape != (2 * n + 2,):
            raise ValueError(f"family {fam} has shape {shape}, box operator for "
                             f"n={n} needs arity {2 * n + 2}")
    out = Polynomial.zero(p.ring)
    for i in range(n + 1):
        u, v = p.ring.index("U", i), p.ring.index("V", n + 1 + i)
        out = out + p.derive(u).derive(v)
        u2, v2 = p.ring.index("U", n + 1 + i), p.ring.index("V", i)
        out = out - p.derive(v2).derive(u2)
    return out


def apply_operator(p: Polynomial, q: Polynomial) -> Polynomial:
    """partial(P) q: each variable of ``p`` becomes the matching partial derivative."""
    p._check(q)
    out: dict = {}
    for m, c in p.terms.items():
        for e, d in q.terms.items():
            if all(ei >= mi for ei, mi in zip(e, m)):
                f = 1
                for ei, mi in zip(e, m):
                    for t in range(mi):
                        f *= ei - t
                ne = tuple(ei - mi for ei, mi in zip(e, m))
                v = c * d * f
                s = out.get(ne)
                out[ne] = v if s is None else s + v
    return Polynomial._raw(p.ring, {e: c for e, c in out.items() if c})


def pairing(p: Polynomial, q: Polynomial) -> GaussianRational:
    """<<p, q>> = (partial(P) q)(0) with the identity bilinear form."""
    return apply_operator(p, q).constant_term()


# --- exact span rank by evaluation -----------------------------------------

def _common_scale(poly: Polynomial) -> int:
    den = 1
    for c in poly.terms.values():
        den = math.lcm(den, c.re.denominator, c.im.denominator)
    return den


@dataclass(frozen=True)
class SpanRank:
    rank: int
    points_used: int
    history: tuple[tuple[int, int], ...]  # (number of points, rank) checkpoints


def _sample_point(rng: random.Random, nvars: int, bound: int):
    d = rng.randint(1, bound)
    nums = [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(nvars)]
    return d, nums


def _monomial_columns(monos, sparse, points, D):
    """Real and imaginary parts of d^(D - deg) * prod x_v^e_v, one column per point."""
    cols_re, cols_im = [], []
    for d, nums in points:
        cache: dict[tuple[int, int], tuple[int, int]] = {}
        dpow = [d ** j for j in range(D + 1)]
        col_re, col_im = [], []
        for e in monos:
            x, y = 1, 0
            deg = 0
            for i, k in sparse[e]:
                key = (i, k)
                pv = cache.get(key)
                if pv is None:
                    a, b = nums[i]
                    pr, pi = 1, 0
                    for _ in range(k):
                        pr, pi = pr * a - pi * b, pr * b + pi * a
                    pv = cache[key] = (pr, pi)
                x, y = x * pv[0] - y * pv[1], x * pv[1] + y * pv[0]
                deg += k
            s = dpow[D - deg]
            col_re.append(x * s)
            col_im.append(y * s)
        cols_re.append(col_re)
        cols_im.append(col_im)
    return cols_re, cols_im


def _complex_rank(er: list[list[int]], ei: list[list[int]], npts: int) -> int:
    """Rank over Q(i) of E = er + i ei restricted to the first ``npts`` columns."""
    m = len(er)
    if m == 0 or npts == 0:
        return 0
    rows = []
    for j in range(m):
        rows.append(er[j][:npts] + [-v for v in ei[j][:npts]])
    for j in range(m):
        rows.append(ei[j][:npts] + er[j][:npts])
    mat = flint.fmpz_mat(2 * m, 2 * npts, [v for r in rows for v in r])
    r = mat.rank()
    if r % 2:
        raise AssertionError("realified rank must be even")
    return r // 2


def span_rank_profile(polys: Sequence[Polynomial], sample_seed: int = 0,
                      bound: int = 100) -> SpanRank:
    """Rank of the evaluation matrix of ``polys`` at random Gaussian-rational points.

    Points come from ``random.Random(sample_seed)`` with numerators and one
    shared denominator per point bounded by ``bound``.  Rows are scaled by the
    coefficient denominators and columns by powers of the point denominator,
    which keeps every entry a Gaussian integer without changing the rank.  The
    matrix product and the rank (of the real 2x2 block form) are exact integer
    computations.  The first checkpoint is N = 2 * len(polys) points; N grows
    by len(polys) // 2 until the ranks at N and N - step agree.
    """
    polys = list(polys)
    if not polys:
        return SpanRank(0, 0, ())
    for p in polys[1:]:
        polys[0]._check(p)
    m = len(polys)
    nv = polys[0].ring.nvars
    D = max(p.total_degree() for p in polys)

    monos = sorted({e for p in polys for e in p.terms})
    col = {e: i for i, e in enumerate(monos)}
    sparse = {e: tuple((i, k) for i, k in enumerate(e) if k) for e in monos}
    K = len(monos)
    cr = [[0] * K for _ in range(m)]
    ci = [[0] * K for _ in range(m)]
    for j, p in enumerate(polys):
        s = _common_scale(p)
        for e, c in p.terms.items():
            cr[j][col[e]] = int(c.re * s)
            ci[j][col[e]] = int(c.im * s)
    CR = flint.fmpz_mat(m, K, [v for r in cr for v in r])
    CI = flint.fmpz_mat(m, K, [v for r in ci for v in r])

    rng = random.Random(sample_seed)
    points: list = []
    step = max(1, m // 2)
    target = 2 * m
    history: list[tuple[int, int]] = []
    er: list[list[int]] = [[] for _ in range(m)]
    ei: list[list[int]] = [[] for _ in range(m)]
    while True:
        fresh = [_sample_point(rng, nv, bound) for _ in range(target - len(points))]
        points += fresh
        mre, mim = _monomial_columns(monos, sparse, fresh, D)
        MR = flint.fmpz_mat(K, len(fresh), [mre[t][k] for k in range(K) for t in range(len(fresh))])
        MI = flint.fmpz_mat(K, len(fresh), [mim[t][k] for k in range(K) for t in range(len(fresh))])
        ER = (CR * MR - CI * MI).tolist()
        EI = (CR * MI + CI * MR).tolist()
        for j in range(m):
            er[j] += [int(v) for v in ER[j]]
            ei[j] += [int(v) for v in EI[j]]
        if not history:
            history.append((target - step, _complex_rank(er, ei, target - step)))
        history.append((target, _complex_rank(er, ei, target)))
        if history[-1][1] == history[-2][1]:
            break
        target += step
    return SpanRank(history[-1][1], target, tuple(history))


def span_rank(polys: Sequence[Polynomial], sample_seed: int = 0) -> int:
    return span_rank_profile(polys, sample_seed).rank


# --- numerical evaluation ------------------------------------------------

class NumericEvaluator:
    """Vectorized floating-point evaluation of a polynomial at many points."""

    def __init__(self, poly: Polynomial):
        self.ring = poly.ring
        items = list(poly.terms.items())
        self.exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), poly.ring.nvars)
        self.coeffs = np.array([complex(c) for _, c in items], dtype=complex)

    def __call__(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex)
        if points.ndim == 1:
            points = points[None, :]
        vals = np.ones((points.shape[0], len(self.coeffs)), dtype=complex)
        for v in range(self.ring.nvars):
            col = self.exps[:, v]
            nz = np.nonzero(col)[0]
            if nz.size:
                vals[:, nz] *= points[:, v:v + 1] ** col[nz]
        return vals @ self.coeffs


def evaluate_numeric(poly: Polynomial, points: np.ndarray) -> np.ndarray:
    return NumericEvaluator(poly)(points)


def random_gaussian(rng: random.Random, bound: int = 100, denominator: bool = True) -> GaussianRational:
    d = rng.randint(1, bound) if denominator else 1
    return GaussianRational(Fraction(rng.randint(-bound, bound), d),
                            Fraction(rng.randint(-bound, bound), d))


def random_polynomial(rng: random.Random, rg: Ring, max_degree: int, n_terms: int,
                      bound: int = 9) -> Polynomial:
    """Random polynomial with ``n_terms`` monomials of total degree <= max_degree."""
    terms = {}
    for _ in range(n_terms):
        e = [0] * rg.nvars
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(rg.nvars)] += 1
        terms[tuple(e)] = random_gaussian(rng, bound, denominator=False)
    return Polynomial(rg, terms)


def ones_like_family(values: Iterable) -> list[GaussianRational]:
    return [GaussianRational.coerce(v) for v in values]
