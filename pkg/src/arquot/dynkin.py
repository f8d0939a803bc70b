"""Simply-laced Dynkin diagrams A_n, D_n, E_6, E_7, E_8.

Vertex labels are 1..n.  Conventions:

* A_n: the path 1 - 2 - ... - n.
* D_n: the path 1 - ... - (n-2), with both n-1 and n attached to n-2
  (the two "exceptional" vertices).
* E_n: the path 1 - ... - (n-1), with n attached to 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidRank, NoSuchAutomorphism

FAMILIES = ("A", "D", "E")

IDENTITY = "Identity"
FLIP = "Flip"


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int
    edges: frozenset

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def neighbors(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {j: [] for j in self.vertices}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return {j: tuple(sorted(v)) for j, v in nbrs.items()}

    @property
    def coxeter_number(self) -> int:
        return coxeter_number(self)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"DynkinDiagram({self.name})"


def _check_rank(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise InvalidRank(f"unknown Dynkin family {family!r}")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InvalidRank(f"rank must be an integer, got {rank!r}")
    ok = {
        "A": rank >= 1,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
    }[family]
    if not ok:
        raise InvalidRank(f"{family}{rank} is not a valid Dynkin type")


def diagram(family: str, rank: int) -> DynkinDiagram:
    """Return the canonical diagram of the given type.

    >>> sorted(diagram("D", 4).edges)
    [(1, 2), (2, 3), (2, 4)]
    """
    family = family.upper()
    _check_rank(family, rank)
    if family == "A":
        edges = {(j, j + 1) for j in range(1, rank)}
    elif family == "D":
        edges = {(j, j + 1) for j in range(1, rank - 2)}
        edges |= {(rank - 2, rank - 1), (rank - 2, rank)}
    else:
        edges = {(j, j + 1) for j in range(1, rank - 1)}
        edges.add((3, rank))
    return DynkinDiagram(family, rank, frozenset(edges))


def coxeter_number(d: DynkinDiagram) -> int:
    if d.family == "A":
        return d.rank + 1
    if d.family == "D":
        return 2 * d.rank - 2
    return {6: 12, 7: 18, 8: 30}[d.rank]


def diagram_automorphism(d: DynkinDiagram, kind: str = FLIP) -> dict[int, int]:
    """The identity or the nontrivial involution of `d`, as a dict on labels.

    Flip reverses A_n, swaps the exceptional pair of D_n and reflects E_6.
    E_7 and E_8 have no nontrivial automorphism.  D_4 has more symmetry
    than this, but only the n-1 <-> n swap is ever needed.
    """
    n = d.rank
    if kind == IDENTITY:
        return {j: j for j in d.vertices}
    if kind != FLIP:
        raise ValueError(f"unknown automorphism kind {kind!r}")
    if d.family == "A":
        return {j: n + 1 - j for j in d.vertices}
    if d.family == "D":
        perm = {j: j for j in d.vertices}
        perm[n - 1], perm[n] = n, n - 1
        return perm
    if n == 6:
        return {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}
    raise NoSuchAutomorphism(f"{d.name} has no nontrivial diagram automorphism")


def is_tree(d: DynkinDiagram) -> bool:
    if len(d.edges) != d.rank - 1:
        return False
    seen = {1}
    stack = [1]
    while stack:
        j = stack.pop()
        for k in d.neighbors[j]:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return len(seen) == d.rank
