"""Finite stable translation quivers.

Vertices are the integers ``0..N-1``.  Each vertex may carry a label, which
for orbit quivers is the least representative ``(i, j)`` (with ``i >= 0``)
of the corresponding orbit in ZΔ; vertices are numbered in increasing
label order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable

from scipy.cluster.hierarchy import DisjointSet

from .dynkin import DynkinDiagram
from .errors import InvalidQuiver, MeshViolation, NotRightward, NotTauStable
from .ztrans import AffineAutomorphism, ZVertex, zd_arrows_out


@dataclass(frozen=True)
class Covering:
    """How an orbit quiver sits under ZΔ: Q = ZΔ / <phi>."""

    diagram: DynkinDiagram
    phi: AffineAutomorphism


@dataclass(frozen=True)
class QuiverMeta:
    family: str | None = None
    rank: int | None = None
    level: int | None = None
    standard: bool = True
    connected: bool = True
    # deletion outputs are not required to satisfy the mesh property
    mesh_required: bool = True


@dataclass(frozen=True)
class TranslationQuiver:
    labels: tuple
    arrows: tuple[tuple[int, int], ...]
    tau: tuple[int, ...]
    meta: QuiverMeta = field(default_factory=QuiverMeta)
    covering: Covering | None = None

    def __post_init__(self):
        n = len(self.tau)
        if len(self.labels) != n:
            raise InvalidQuiver("one label per vertex required")
        if sorted(self.tau) != list(range(n)):
            raise InvalidQuiver("translation is not a bijection of the vertex set")
        counts = Counter(self.arrows)
        for (a, b), c in counts.items():
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidQuiver(f"arrow {a}->{b} references a missing vertex")
            if c > 1:
                raise InvalidQuiver(f"arrow {a}->{b} has multiplicity {c}")
        if list(self.arrows) != sorted(counts):
            object.__setattr__(self, "arrows", tuple(sorted(counts)))

    @property
    def n(self) -> int:
        return len(self.tau)

    def __len__(self) -> int:
        return len(self.tau)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.arrows:
            out[a].append(b)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.arrows:
            inn[b].append(a)
        return tuple(tuple(sorted(x)) for x in inn)

    @cached_property
    def tau_inverse(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for v, t in enumerate(self.tau):
            inv[t] = v
        return tuple(inv)

    def row(self, v: int):
        lab = self.labels[v]
        return lab[1] if isinstance(lab, tuple) else None

    def vertices_in_rows(self, rows: Iterable[int]) -> frozenset[int]:
        rows = set(rows)
        return frozenset(v for v in range(self.n) if self.row(v) in rows)


def orbit_quiver(
    d: DynkinDiagram, f: AffineAutomorphism, level: int | None = None
) -> TranslationQuiver:
    """ZΔ modulo the free action of <f>.

    Orbits are found by union-find on the column window ``[0, 2*max(s) + 2)``;
    every orbit meets ``[0, max(s))``, so the least member with ``i >= 0``
    of each class serves as its representative.
    """
    if f.diagram != d:
        raise ValueError("automorphism lives on a different diagram")
    if min(f.shift) < 1:
        raise NotRightward(f"{f!r} does not move every vertex to the right")
    width = 2 * max(f.shift) + 2
    window = [ZVertex(i, j) for i in range(width) for j in d.vertices]
    dsu = DisjointSet(window)
    for v in window:
        w = f(v)
        if w.i < width:
            dsu.merge(v, w)
    classes = sorted(min(s) for s in dsu.subsets())
    index = {}
    for k, rep in enumerate(classes):
        for v in dsu.subset(rep):
            index[v] = k

    arrows = set()
    tau_inv = [0] * len(classes)
    for k, rep in enumerate(classes):
        for w in zd_arrows_out(d, rep):
            t = index[w]
            if (k, t) in arrows or t == k:
                raise InvalidQuiver(f"orbit quiver of {f!r} has a multiple arrow or loop")
            arrows.add((k, t))
        tau_inv[k] = index[ZVertex(rep.i + 1, rep.j)]
    tau = [0] * len(classes)
    for k, t in enumerate(tau_inv):
        tau[t] = k

    q = TranslationQuiver(
        labels=tuple(classes),
        arrows=tuple(sorted(arrows)),
        tau=tuple(tau),
        meta=QuiverMeta(family=d.family, rank=d.rank, level=level),
        covering=Covering(d, f),
    )
    check_mesh(q)
    return replace(q, meta=replace(q.meta, connected=is_connected(q)))


def mesh_violations(q: TranslationQuiver) -> list[int]:
    """Vertices m where {a : a -> m} differs from {b : tau(m) -> b}."""
    return [
        m
        for m in range(q.n)
        if set(q.in_neighbors[m]) != set(q.out_neighbors[q.tau[m]])
    ]


def check_mesh(q: TranslationQuiver) -> None:
    bad = mesh_violations(q)
    if bad:
        raise MeshViolation(f"mesh property fails at vertices {bad[:10]}")


def tau_orbits(q: TranslationQuiver) -> list[tuple[int, ...]]:
    """Cycles of the translation, each starting at its least vertex.

    Cycles are listed in order of their least vertex and walk in the
    direction of tau^-1.
    """
    seen = [False] * q.n
    orbits = []
    for v in range(q.n):
        if seen[v]:
            continue
        cyc = []
        w = v
        while not seen[w]:
            seen[w] = True
            cyc.append(w)
            w = q.tau_inverse[w]
        orbits.append(tuple(cyc))
    return orbits


def connected_components(q: TranslationQuiver) -> list[tuple[int, ...]]:
    """Components of the graph whose edges are the arrows and the tau-links.

    Translation links count as connections, so a quiver such as the one of
    an A_1 cluster category (no arrows, one tau-orbit) is connected.
    """
    if q.n == 0:
        return []
    dsu = DisjointSet(range(q.n))
    for a, b in q.arrows:
        dsu.merge(a, b)
    for v, t in enumerate(q.tau):
        dsu.merge(v, t)
    comps = [tuple(sorted(s)) for s in dsu.subsets()]
    return sorted(comps)


def is_connected(q: TranslationQuiver) -> bool:
    return len(connected_components(q)) <= 1


def delete_tau_stable(q: TranslationQuiver, X: Iterable[int]) -> TranslationQuiver:
    """Remove the tau-stable vertex set X together with its arrows.

    Surviving vertices are renumbered in their original order; their
    labels and the restricted translation are kept.  Covering data is
    dropped because the result is no longer an orbit quiver.
    """
    X = frozenset(X)
    for v in sorted(X):
        if not 0 <= v < q.n:
            raise InvalidQuiver(f"vertex {v} is not in the quiver")
        if q.tau[v] not in X:
            raise NotTauStable(v, q.tau[v])
    if not X:
        return q
    kept = [v for v in range(q.n) if v not in X]
    new = {v: k for k, v in enumerate(kept)}
    arrows = tuple(sorted((new[a], new[b]) for a, b in q.arrows if a in new and b in new))
    tau = tuple(new[q.tau[v]] for v in kept)
    out = TranslationQuiver(
        labels=tuple(q.labels[v] for v in kept),
        arrows=arrows,
        tau=tau,
        meta=replace(q.meta, mesh_required=False),
        covering=None,
    )
    return replace(out, meta=replace(out.meta, connected=is_connected(out)))


def is_tau_stable(q: TranslationQuiver, X: Iterable[int]) -> bool:
    X = set(X)
    return all(q.tau[v] in X for v in X)


@dataclass(frozen=True)
class ValidationReport:
    n_vertices: int
    n_arrows: int
    translation_bijective: bool
    multiplicity_free: bool
    mesh_property: bool
    mesh_required: bool
    components: int

    @property
    def valid(self) -> bool:
        mesh_ok = self.mesh_property or not self.mesh_required
        return self.translation_bijective and self.multiplicity_free and mesh_ok

    @property
    def connected(self) -> bool:
        return self.components <= 1


def validate(q: TranslationQuiver) -> ValidationReport:
    # the constructor already rejects non-bijective tau and repeated arrows
    return ValidationReport(
        n_vertices=q.n,
        n_arrows=len(q.arrows),
        translation_bijective=sorted(q.tau) == list(range(q.n)),
        multiplicity_free=len(set(q.arrows)) == len(q.arrows),
        mesh_property=not mesh_violations(q),
        mesh_required=q.meta.mesh_required,
        components=len(connected_components(q)),
    )


def relabel(q: TranslationQuiver, perm) -> TranslationQuiver:
    """Renumber vertex v as perm[v]; meta and covering are kept."""
    perm = list(perm)
    n = q.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of the vertices")
    labels = [None] * n
    tau = [0] * n
    for v in range(n):
        labels[perm[v]] = q.labels[v]
        tau[perm[v]] = perm[q.tau[v]]
    arrows = tuple(sorted((perm[a], perm[b]) for a, b in q.arrows))
    return TranslationQuiver(tuple(labels), arrows, tuple(tau), q.meta, q.covering)
