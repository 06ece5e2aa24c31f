"""Satake diagrams, painted Dynkin diagrams and the second Betti number.

Diagrams are painted node lists on a standard Dynkin shape; adjacency is implied
by the family and rank.  Nodes are numbered from 1 in Bourbaki order.
"""

from __future__ import annotations

from dataclasses import dataclass

WHITE = "W"
BLACK = "B"


def _check_shape(family: str, rank: int, painting: tuple[str, ...]) -> None:
    if len(painting) != rank:
        raise ValueError(f"{family}{rank} diagram needs {rank} nodes, got {len(painting)}")
    bad = [p for p in painting if p not in (WHITE, BLACK)]
    if bad:
        raise ValueError(f"node paint must be {WHITE!r} or {BLACK!r}, got {bad}")


@dataclass(frozen=True)
class PaintedDynkin:
    family: str
    rank: int
    painting: tuple[str, ...]

    def __post_init__(self):
        _check_shape(self.family, self.rank, self.painting)

    def white_nodes(self) -> list[int]:
        return [i + 1 for i, p in enumerate(self.painting) if p == WHITE]


@dataclass(frozen=True)
class SatakeDiagram:
    family: str
    rank: int
    painting: tuple[str, ...]
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        _check_shape(self.family, self.rank, self.painting)
        norm = []
        for pair in self.arrows:
            i, j = sorted(int(x) for x in pair)
            if i == j:
                raise ValueError(f"arrow ({i}, {j}) must join distinct nodes")
            for k in (i, j):
                if not 1 <= k <= self.rank:
                    raise ValueError(f"arrow endpoint {k} outside 1..{self.rank}")
                if self.painting[k - 1] != WHITE:
                    raise ValueError(f"arrow endpoint {k} is a black node")
            norm.append((i, j))
        object.__setattr__(self, "arrows", tuple(sorted(set(norm))))

    def white_nodes(self) -> list[int]:
        return [i + 1 for i, p in enumerate(self.painting) if p == WHITE]


def satake_to_painted(sd: SatakeDiagram) -> PaintedDynkin:
    """Delete the arrows; the painting carries over unchanged."""
    return PaintedDynkin(sd.family, sd.rank, sd.painting)


def second_betti(sd: SatakeDiagram) -> int:
    """Rank of H^2 of the quantization space: the number of white vertices."""
    return len(sd.white_nodes())


def grassmannian_satake(p: int, q: int) -> SatakeDiagram:
    """Satake diagram (type AIII) of the dual of SU(p+q)/S(U(p) x U(q)).

    Nodes 1..p and q..p+q-1 are white, the q-p-1 middle nodes are black, and
    node i is joined to node p+q-i.  When p == q there are only 2p-1 nodes and
    the middle node p is its own partner, so it carries no arrow.
    """
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be positive, got ({p}, {q})")
    if p > q:
        raise ValueError(f"grassmannian_satake requires p <= q, got ({p}, {q})")
    rank = p + q - 1
    painting = tuple(WHITE if (i <= p or i >= q) else BLACK for i in range(1, rank + 1))
    arrows = tuple((i, p + q - i) for i in range(1, p + 1) if i != p + q - i)
    return SatakeDiagram("A", rank, painting, arrows)


def _edges(family: str, rank: int) -> list[tuple[int, int, int]]:
    """(i, j, bond multiplicity) for the Dynkin shape."""
    chain = [(i, i + 1, 1) for i in range(1, rank)]
    if family == "B" and rank >= 2:
        chain[-1] = (rank - 1, rank, 2)
    elif family == "C" and rank >= 2:
        chain[-1] = (rank - 1, rank, 2)
    elif family == "D":
        if rank == 2:
            return []
        chain = [(i, i + 1, 1) for i in range(1, rank - 1)] + [(rank - 2, rank, 1)]
    elif family == "F4":
        chain = [(1, 2, 1), (2, 3, 2), (3, 4, 1)]
    return chain


def render(diagram: SatakeDiagram | PaintedDynkin) -> str:
    """ASCII rendering: white nodes 'o', black nodes '*', arrows listed below.

    D-type fork nodes are drawn after a '<' branch marker; double bonds as '='.
    """
    fam, rank = diagram.family, diagram.rank
    sym = ["o" if p == WHITE else "*" for p in diagram.painting]
    label = "F4" if fam == "F4" else f"{fam}{rank}"
    if fam == "D" and rank >= 3:
        line = "-".join(sym[: rank - 2]) + "<" + sym[rank - 2] + "," + sym[rank - 1]
    elif fam == "D":
        line = "  ".join(sym)
    else:
        bonds = {(i, j): m for i, j, m in _edges(fam, rank)}
        parts = [sym[0]]
        for i in range(1, rank):
            parts.append("=" if bonds.get((i, i + 1), 1) == 2 else "-")
            parts.append(sym[i])
        line = "".join(parts)
    out = [f"{label}: {line}"]
    numbers = " ".join(str(i) for i in range(1, rank + 1))
    out.append(f"nodes: {numbers}")
    arrows = getattr(diagram, "arrows", ())
    if arrows:
        out.append("arrows: " + ", ".join(f"{i}<->{j}" for i, j in arrows))
    return "\n".join(out)
