"""Built-in symmetric-space descriptors and the plain-text descriptor format.

A descriptor file is a flat UTF-8 ``key = value`` document.  Values are JSON
literals (integers, quoted strings, ``null`` and bracketed lists); ``#`` starts
a comment line.  ``schema_version = 1`` is mandatory and unknown keys are an
error.  See ``README.md`` for the full grammar.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .diagrams import BLACK, WHITE, SatakeDiagram, grassmannian_satake
from .rootsys import RootSystem, Weight, build_root_system, weyl_dim

SCHEMA_VERSION = 1

CROSS_IDS = ("S^n", "CP^n", "HP^n", "CaP2")
KNOWN_IDS = CROSS_IDS + ("SU3/SO3",)

# First nontrivial eigenspace of the Cayley plane is the 26-dimensional
# F4-module; the catalog picks the fundamental weight with that dimension.
CAP2_FIRST_EIGENSPACE_DIM = 26


class DescriptorError(ValueError):
    """Malformed or invalid descriptor document."""


@dataclass(frozen=True)
class SymmetricSpaceDescriptor:
    id: str
    n: int | None
    g_name: str
    k_name: str
    group_family: str
    group_rank: int
    restricted_family: str
    restricted_rank: int
    satake: SatakeDiagram
    N_M: int
    sigma: Fraction
    # one fundamental-weight coefficient vector per level index; the weight at
    # levels (k_1, ..., k_r) is sum_i k_i * highest_weight_basis[i]
    highest_weight_basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        problems = invariant_violations(self)
        if problems:
            raise DescriptorError("; ".join(problems))

    @cached_property
    def group(self) -> RootSystem:
        return build_root_system(self.group_family, self.group_rank)

    @property
    def rank(self) -> int:
        return self.restricted_rank

    def highest_weight(self, level) -> Weight:
        levels = (level,) if isinstance(level, int) else tuple(level)
        if len(levels) != len(self.highest_weight_basis):
            raise ValueError(f"{self.id} takes {len(self.highest_weight_basis)} level "
                             f"indices, got {levels}")
        if any(k < 0 for k in levels):
            raise ValueError(f"level indices must be nonnegative, got {levels}")
        coeffs = [0] * self.group_rank
        for k, basis in zip(levels, self.highest_weight_basis):
            coeffs = [c + k * b for c, b in zip(coeffs, basis)]
        return Weight.from_coeffs(self.group, coeffs)

    def weight_lattice_rank(self) -> int:
        """Number of fundamental weights the highest-weight map actually uses."""
        return sum(1 for i in range(self.group_rank)
                   if any(b[i] for b in self.highest_weight_basis))


def invariant_violations(d: SymmetricSpaceDescriptor) -> list[str]:
    out = []
    if not isinstance(d.N_M, int) or d.N_M < 1:
        out.append(f"N_M must be a positive integer (got {d.N_M!r})")
    if not isinstance(d.sigma, Fraction) or d.sigma <= 0:
        out.append(f"sigma must be a positive rational (got {d.sigma!r})")
    if d.restricted_rank < 1:
        out.append(f"restricted_rank must be positive (got {d.restricted_rank})")
    if len(d.highest_weight_basis) != d.restricted_rank:
        out.append(f"highest_weight_basis has {len(d.highest_weight_basis)} rows but "
                   f"restricted_rank is {d.restricted_rank}")
    for row in d.highest_weight_basis:
        if len(row) != d.group_rank:
            out.append(f"highest-weight row {list(row)} needs {d.group_rank} entries")
        elif any(c < 0 for c in row):
            out.append(f"highest-weight rule is not dominant at level 1: {list(row)}")
        elif not any(row):
            out.append("highest-weight rule gives the zero weight at level 1")
    if (d.satake.family, d.satake.rank) != (d.group_family, d.group_rank):
        out.append(f"Satake diagram is {d.satake.family}{d.satake.rank} but the group "
                   f"is {d.group_family}{d.group_rank}")
    try:
        build_root_system(d.group_family, d.group_rank)
    except ValueError as exc:
        out.append(str(exc))
    return out


def _painting(rank: int, white: Sequence[int]) -> tuple[str, ...]:
    return tuple(WHITE if i in white else BLACK for i in range(1, rank + 1))


def _sphere(n: int) -> SymmetricSpaceDescriptor:
    if n < 2:
        raise ValueError(f"S^n needs n >= 2 (got {n})")
    if n % 2 == 0:
        fam, rank = "B", n // 2
    else:
        fam, rank = "D", (n + 1) // 2
    if fam == "D" and rank == 2:
        # so(3,1) = sl(2,C): both nodes white, swapped by the involution
        satake = SatakeDiagram("D", 2, (WHITE, WHITE), ((1, 2),))
        basis = (1, 1)  # e_1 = w_1 + w_2 in D2
    else:
        satake = SatakeDiagram(fam, rank, _painting(rank, [1]))
        basis = (2,) if (fam, rank) == ("B", 1) else (1,) + (0,) * (rank - 1)
    return SymmetricSpaceDescriptor(
        id="S^n", n=n, g_name=f"SO({n + 1})", k_name=f"SO({n})",
        group_family=fam, group_rank=rank, restricted_family="A", restricted_rank=1,
        satake=satake, N_M=n - 1, sigma=Fraction(4), highest_weight_basis=(basis,))


def _cpn(n: int) -> SymmetricSpaceDescriptor:
    if n < 1:
        raise ValueError(f"CP^n needs n >= 1 (got {n})")
    basis = (2,) if n == 1 else (1,) + (0,) * (n - 2) + (1,)
    return SymmetricSpaceDescriptor(
        id="CP^n", n=n, g_name=f"SU({n + 1})", k_name=f"S(U(1)xU({n}))",
        group_family="A", group_rank=n,
        restricted_family="A" if n == 1 else "BC", restricted_rank=1,
        satake=grassmannian_satake(1, n), N_M=n, sigma=Fraction(1),
        highest_weight_basis=(basis,))


def _hpn(n: int) -> SymmetricSpaceDescriptor:
    if n < 1:
        raise ValueError(f"HP^n needs n >= 1 (got {n})")
    rank = n + 1
    return SymmetricSpaceDescriptor(
        id="HP^n", n=n, g_name=f"Sp({n + 1})", k_name=f"Sp({n})xSp(1)",
        group_family="C", group_rank=rank,
        restricted_family="A" if n == 1 else "BC", restricted_rank=1,
        satake=SatakeDiagram("C", rank, _painting(rank, [2])), N_M=2 * n + 1,
        sigma=Fraction(1), highest_weight_basis=((0, 1) + (0,) * (rank - 2),))


def cap2_fundamental_index() -> int:
    """Index (from 0) of the F4 fundamental weight spanning the CaP2 spectrum."""
    f4 = build_root_system("F4", 4)
    hits = [i for i in range(4)
            if weyl_dim(f4, Weight.from_coeffs(f4, [int(j == i) for j in range(4)]))
            == CAP2_FIRST_EIGENSPACE_DIM]
    if len(hits) != 1:
        raise AssertionError(f"expected one F4 fundamental weight of dim 26, got {hits}")
    return hits[0]


def _cap2() -> SymmetricSpaceDescriptor:
    i = cap2_fundamental_index()
    return SymmetricSpaceDescriptor(
        id="CaP2", n=None, g_name="F4", k_name="Spin(9)",
        group_family="F4", group_rank=4, restricted_family="BC", restricted_rank=1,
        satake=SatakeDiagram("F4", 4, _painting(4, [i + 1])), N_M=11,
        sigma=Fraction(1), highest_weight_basis=(tuple(int(j == i) for j in range(4)),))


def _su3_so3() -> SymmetricSpaceDescriptor:
    # levels (k1, k2) -> 2*k2*w_1 + 2*k1*w_2, i.e. the exponents (p, q) of
    # phi_a^p * phitilde_b^q; sigma = 3 converts Tr(ad ad) eigenvalues to the
    # Re Tr(Z W^*) metric on SU(3)
    return SymmetricSpaceDescriptor(
        id="SU3/SO3", n=None, g_name="SU(3)", k_name="SO(3)",
        group_family="A", group_rank=2, restricted_family="A", restricted_rank=2,
        satake=SatakeDiagram("A", 2, (WHITE, WHITE)), N_M=2, sigma=Fraction(3),
        highest_weight_basis=((0, 2), (2, 0)))


def lookup(space_id: str, n: int | None = None) -> SymmetricSpaceDescriptor:
    """Descriptor for one of the built-in spaces."""
    key = space_id.strip()
    builders = {"S^n": _sphere, "CP^n": _cpn, "HP^n": _hpn}
    if key in builders:
        if n is None:
            raise ValueError(f"{key} needs a parameter n")
        return builders[key](int(n))
    if key in ("CaP2", "SU3/SO3"):
        return _cap2() if key == "CaP2" else _su3_so3()
    raise KeyError(f"unknown space {space_id!r}; known: {', '.join(KNOWN_IDS)}")


# --- descriptor documents -------------------------------------------------

_FIELDS = ("schema_version", "id", "n", "g_name", "k_name", "group_family",
           "group_rank", "restricted_family", "restricted_rank", "satake_painting",
           "satake_arrows", "N_M", "sigma", "highest_weight_basis")


def serialize(d: SymmetricSpaceDescriptor) -> str:
    values = {
        "schema_version": SCHEMA_VERSION, "id": d.id, "n": d.n,
        "g_name": d.g_name, "k_name": d.k_name,
        "group_family": d.group_family, "group_rank": d.group_rank,
        "restricted_family": d.restricted_family, "restricted_rank": d.restricted_rank,
        "satake_painting": list(d.satake.painting),
        "satake_arrows": [list(a) for a in d.satake.arrows],
        "N_M": d.N_M, "sigma": str(d.sigma),
        "highest_weight_basis": [list(r) for r in d.highest_weight_basis],
    }
    lines = [f"# symmetric-space descriptor: {d.id}" + (f", n = {d.n}" if d.n else "")]
    lines += [f"{k} = {json.dumps(values[k])}" for k in _FIELDS]
    return "\n".join(lines) + "\n"


def _expect(key: str, value, kind, line: int):
    ok = {
        "int": isinstance(value, int) and not isinstance(value, bool),
        "str": isinstance(value, str),
        "int?": value is None or (isinstance(value, int) and not isinstance(value, bool)),
        "list": isinstance(value, list),
    }[kind]
    if not ok:
        raise DescriptorError(f"line {line}: field {key!r}: expected {kind}, got {value!r}")
    return value


def load_descriptor(text: str) -> SymmetricSpaceDescriptor:
    """Parse and validate a descriptor document."""
    raw: dict[str, tuple[object, int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        key = key.strip()
        if not sep or not key:
            raise DescriptorError(f"line {lineno}: expected 'key = value', got {stripped!r}")
        if key not in _FIELDS:
            raise DescriptorError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise DescriptorError(f"line {lineno}: duplicate key {key!r}")
        try:
            raw[key] = (json.loads(value.strip()), lineno)
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"line {lineno}: field {key!r}: {exc.msg}") from None
    missing = [k for k in _FIELDS if k not in raw]
    if missing:
        raise DescriptorError(f"missing fields: {', '.join(missing)}")

    def get(key, kind):
        value, line = raw[key]
        return _expect(key, value, kind, line)

    if get("schema_version", "int") != SCHEMA_VERSION:
        raise DescriptorError(f"line {raw['schema_version'][1]}: unsupported "
                              f"schema_version {raw['schema_version'][0]!r}")
    sigma_value, sigma_line = raw["sigma"]
    try:
        sigma = Fraction(str(sigma_value))
    except (ValueError, ZeroDivisionError):
        raise DescriptorError(f"line {sigma_line}: field 'sigma': not a rational: "
                              f"{sigma_value!r}") from None
    painting = tuple(get("satake_painting", "list"))
    arrows = tuple(tuple(a) for a in get("satake_arrows", "list"))
    basis = tuple(tuple(r) for r in get("highest_weight_basis", "list"))
    for row in basis:
        if not all(isinstance(c, int) for c in row):
            raise DescriptorError(f"line {raw['highest_weight_basis'][1]}: field "
                                  f"'highest_weight_basis': entries must be integers")
    try:
        satake = SatakeDiagram(get("group_family", "str"), get("group_rank", "int"),
                               painting, arrows)
        return SymmetricSpaceDescriptor(
            id=get("id", "str"), n=get("n", "int?"),
            g_name=get("g_name", "str"), k_name=get("k_name", "str"),
            group_family=get("group_family", "str"), group_rank=get("group_rank", "int"),
            restricted_family=get("restricted_family", "str"),
            restricted_rank=get("restricted_rank", "int"),
            satake=satake, N_M=get("N_M", "int"), sigma=sigma,
            highest_weight_basis=basis)
    except DescriptorError:
        raise
    except ValueError as exc:
        raise DescriptorError(f"invalid descriptor: {exc}") from None


def load_catalog_file(path) -> dict[tuple[str, int | None], SymmetricSpaceDescriptor]:
    """Read one or more descriptors separated by lines of '---'."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    out = {}
    for chunk in text.split("\n---"):
        if chunk.strip():
            d = load_descriptor(chunk)
            out[(d.id, d.n)] = d
    return out
