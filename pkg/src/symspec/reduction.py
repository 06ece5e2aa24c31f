"""Chart maps between the reduced cotangent models of CP^n and HP^n.

Complex case: ``X_C = {(u, v) : ||u|| = 1, u.vbar = 0, v != 0}`` modulo the
diagonal circle maps to ``{<u,u> = <v,v> != 0, u.v = 0}`` via

    u~_k = (||v|| u_k + i v_k) / sqrt 2,    v~_k = (vbar_k - i ||v|| ubar_k) / sqrt 2.

Quaternionic case: ``p_k = u_{2k} + u_{2k+1} j`` and ``q_k = v_{2k} + v_{2k+1} j``
with ``||p|| = 1`` and ``<p, q>_H = 0`` map to ``||z|| = ||w||``, ``<z, w> = 0``,
``I(z, w) = 0``.  The map used here is the complex chart in the coordinates
``u' = (u_{2k}, -ubar_{2k+1})`` followed by ``(x_{2k}, x_{2k+1}) -> (-x_{2k+1}, x_{2k})``
on the second output.  Written out, ``w_{2k+1}`` is built from the even entries
``v_{2k}, u_{2k}``; :func:`chart_quaternionic_as_printed` keeps the variant that
uses odd entries there, which fails the output constraints.

All maps are floating point; square roots make exact arithmetic unavailable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ChartTolerances:
    input_gate: float = 1e-10
    output_check: float = 1e-9


TOL = ChartTolerances()


class ChartError(ValueError):
    """Input point violates the chart's constraints."""

    def __init__(self, message: str, residuals: dict[str, float]):
        detail = ", ".join(f"{k}={v:.3e}" for k, v in residuals.items())
        super().__init__(f"{message}: {detail}")
        self.residuals = residuals


@dataclass(frozen=True)
class ChartPoint:
    u: np.ndarray
    v: np.ndarray
    kind: str
    residuals: dict


def chart_point(u, v, kind: str) -> ChartPoint:
    """Bundle an input point with its constraint residuals."""
    if kind == "complex":
        res = complex_input_residuals(u, v)
    elif kind == "quaternionic":
        res = quaternionic_input_residuals(u, v)
    else:
        raise ValueError(f"kind must be 'complex' or 'quaternionic', got {kind!r}")
    return ChartPoint(_arr(u), _arr(v), kind, res)


def _arr(x) -> np.ndarray:
    a = np.asarray(x, dtype=complex)
    if a.ndim != 1:
        raise ValueError(f"expected a vector, got shape {a.shape}")
    return a


# --- complex chart -------------------------------------------------------------

def complex_input_residuals(u, v) -> dict[str, float]:
    u, v = _arr(u), _arr(v)
    return {"norm_u": abs(np.linalg.norm(u) - 1.0), "u.vbar": abs(np.sum(u * v.conj()))}


def complex_output_residuals(ut, vt) -> dict[str, float]:
    ut, vt = _arr(ut), _arr(vt)
    return {"<u,u>-<v,v>": abs(np.vdot(ut, ut).real - np.vdot(vt, vt).real),
            "u.v": abs(np.sum(ut * vt))}


def chart_complex(u, v, tol: ChartTolerances = TOL) -> tuple[np.ndarray, np.ndarray]:
    u, v = _arr(u), _arr(v)
    if u.shape != v.shape:
        raise ValueError(f"u and v differ in length: {u.shape} vs {v.shape}")
    res = complex_input_residuals(u, v)
    nv = np.linalg.norm(v)
    if nv <= tol.input_gate:
        raise ChartError("v must be nonzero", {"norm_v": nv})
    if max(res.values()) >= tol.input_gate:
        raise ChartError("point is not in X_C", res)
    s = 1.0 / np.sqrt(2.0)
    return s * (nv * u + 1j * v), s * (v.conj() - 1j * nv * u.conj())


def complex_class_invariants(ut, vt) -> np.ndarray:
    """Outer product u~ (x) v~: constant on classes (e^{it} u~, e^{-it} v~)."""
    return np.outer(_arr(ut), _arr(vt))


# --- quaternionic chart ----------------------------------------------------------

def _qmul(a, b, c, d):
    """(a + b j)(c + d j) = (ac - b dbar) + (ad + b cbar) j."""
    return a * c - b * np.conj(d), a * d + b * np.conj(c)


def quaternion_inner(u, v) -> tuple[complex, complex]:
    """<p, q>_H = sum conj(p_k) q_k as (complex part, j part)."""
    u, v = _arr(u), _arr(v)
    if len(u) % 2 or u.shape != v.shape:
        raise ValueError("quaternionic vectors need equal even complex length")
    re, jj = _qmul(u[0::2].conj(), -u[1::2], v[0::2], v[1::2])
    return complex(re.sum()), complex(jj.sum())


def symplectic_I(z, w) -> complex:
    """I(z, w) = sum z_{2k} w_{2k+1} - z_{2k+1} w_{2k}."""
    z, w = _arr(z), _arr(w)
    return complex(np.sum(z[0::2] * w[1::2] - z[1::2] * w[0::2]))


def quaternionic_input_residuals(u, v) -> dict[str, float]:
    c, j = quaternion_inner(u, v)
    return {"norm_u": abs(np.linalg.norm(_arr(u)) - 1.0),
            "<p,q>_H complex": abs(c), "<p,q>_H j": abs(j)}


def quaternionic_output_residuals(z, w) -> dict[str, float]:
    z, w = _arr(z), _arr(w)
    return {"||z||-||w||": abs(np.linalg.norm(z) - np.linalg.norm(w)),
            "<z,w>": abs(np.vdot(z, w)), "I(z,w)": abs(symplectic_I(z, w))}


def _quaternionic_gate(u, v, tol: ChartTolerances):
    u, v = _arr(u), _arr(v)
    res = quaternionic_input_residuals(u, v)
    nv = np.linalg.norm(v)
    if nv <= tol.input_gate:
        raise ChartError("v must be nonzero", {"norm_v": nv})
    if max(res.values()) >= tol.input_gate:
        raise ChartError("point is not in X_H", res)
    return u, v, nv


def chart_quaternionic(u, v, tol: ChartTolerances = TOL) -> tuple[np.ndarray, np.ndarray]:
    u, v, nv = _quaternionic_gate(u, v, tol)
    s = 1.0 / np.sqrt(2.0)
    z = np.empty_like(u)
    w = np.empty_like(u)
    z[0::2] = s * (nv * u[0::2] + 1j * v[0::2])
    z[1::2] = s * (-nv * u[1::2].conj() - 1j * v[1::2].conj())
    w[0::2] = s * (v[1::2] - 1j * nv * u[1::2])
    w[1::2] = s * (v[0::2].conj() - 1j * nv * u[0::2].conj())
    return z, w


def chart_quaternionic_as_printed(u, v, tol: ChartTolerances = TOL) -> tuple[np.ndarray, np.ndarray]:
    """Variant whose w_{2k+1} uses v_{2k+1}, u_{2k+1}; kept for comparison only."""
    z, w = chart_quaternionic(u, v, tol)
    _, v, nv = _quaternionic_gate(u, v, tol)
    u = _arr(u)
    w[1::2] = (v[1::2].conj() - 1j * nv * u[1::2].conj()) / np.sqrt(2.0)
    return z, w


# --- admissible sampling ------------------------------------------------------------

def random_complex_point(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(u, v) in X_C for C^{n+1}: unit u, v projected off u with respect to u.vbar."""
    u = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    u /= np.linalg.norm(u)
    v = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    v = v - np.vdot(u, v) * u
    return u, v


def random_quaternionic_point(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(u, v) in X_H for H^{n+1}: q <- q - p <p, q>_H with ||p|| = 1."""
    m = 2 * n + 2
    u = rng.normal(size=m) + 1j * rng.normal(size=m)
    u /= np.linalg.norm(u)
    v = rng.normal(size=m) + 1j * rng.normal(size=m)
    c, j = quaternion_inner(u, v)
    x, y = _qmul(u[0::2], u[1::2], c, j)
    v = v.copy()
    v[0::2] -= x
    v[1::2] -= y
    return u, v


def batch_check(kind: str, count: int, n: int, seed: int = 0) -> float:
    """Largest output residual over ``count`` random admissible points."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        if kind == "complex":
            out = complex_output_residuals(*chart_complex(*random_complex_point(rng, n)))
        elif kind == "quaternionic":
            out = quaternionic_output_residuals(*chart_quaternionic(*random_quaternionic_point(rng, n)))
        else:
            raise ValueError(f"kind must be 'complex' or 'quaternionic', got {kind!r}")
        worst = max(worst, *out.values())
    return worst
