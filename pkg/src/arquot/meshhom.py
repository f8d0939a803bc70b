"""Hom dimensions in mesh categories.

Two independent routes:

* :func:`hammock` knits dim Hom(x, -) on ZΔ column by column from the
  additive recursion with its two correction terms (at x itself and at
  sigma(x)), and :func:`hom_dim_orbit` sums it over a phi-orbit to get Homs
  in the orbit category.
* The oracle computes the path category modulo mesh relations by exact
  linear algebra over Q.  It works on any finite quiver with a (partial)
  translation, never looks at sigma or phi, and can additionally kill a
  set of vertices, which gives Homs in the quotient by maps factoring
  through those vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .dynkin import DynkinDiagram, coxeter_number
from .errors import ArquotError, MissingCoveringData, WindowTooSmall
from .tquiver import TranslationQuiver
from .ztrans import ZVertex, sigma, tau, zd_arrows_in


@dataclass(frozen=True)
class HammockFunction:
    base: ZVertex
    values: MappingProxyType

    def __call__(self, v) -> int:
        return self.values.get(ZVertex(*v), 0)

    @property
    def support(self) -> list[ZVertex]:
        return sorted(self.values)


@lru_cache(maxsize=None)
def _hammock_at_zero(d: DynkinDiagram, j: int) -> dict:
    x = ZVertex(0, j)
    h = coxeter_number(d)
    sig = sigma(d)
    sig_inv = sig.inverse()
    stop_after = sig(x).i + h
    values: dict[ZVertex, int] = {}
    i = 0
    while True:
        nonzero = False
        # rows ascending: in-arrows from the same column come from lower rows
        for k in d.vertices:
            m = ZVertex(i, k)
            val = sum(values.get(w, 0) for w in zd_arrows_in(d, m)) - values.get(tau(m), 0)
            if m == x:
                val += 1
            if sig_inv(m) == x:
                val += 1
            if val < 0:
                raise AssertionError(f"negative hammock value {val} at {m} from {x} on Z{d.name}")
            if val:
                values[m] = val
                nonzero = True
        if not nonzero and i > stop_after:
            break
        i += 1
        if i > 2 * h + 1:
            raise AssertionError(f"hammock from {x} on Z{d.name} exceeds 2h columns")
    return values


def hammock(d: DynkinDiagram, x) -> HammockFunction:
    """dim Hom(x, -) on the mesh category of ZΔ, as a finitely supported function."""
    x = ZVertex(*x)
    base = _hammock_at_zero(d, x.j)
    shifted = {ZVertex(v.i + x.i, v.j): c for v, c in base.items()}
    return HammockFunction(x, MappingProxyType(shifted))


def hom_dim_orbit(q: TranslationQuiver, a: int, b: int) -> int:
    """dim Hom(a, b) in the orbit category, as a sum of ZΔ-hammock values."""
    if q.covering is None:
        raise MissingCoveringData(
            "this quiver carries no covering data (e.g. it came from a deletion); "
            "use the oracle instead"
        )
    d, f = q.covering.diagram, q.covering.phi
    x = ZVertex(*q.labels[a])
    y = ZVertex(*q.labels[b])
    hx = hammock(d, x)
    last = x.i + 2 * coxeter_number(d)
    f_inv = f.inverse()
    while y.i >= x.i:
        y = f_inv(y)
    total = 0
    while y.i <= last:
        total += hx(y)
        y = f(y)
    return total


@dataclass(frozen=True)
class HomMatrix:
    vertices: tuple
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __len__(self):
        return len(self.vertices)

    def permuted(self, f) -> HomMatrix:
        """The matrix seen through a vertex bijection f: row f[a] holds row a."""
        n = len(self.vertices)
        verts = [None] * n
        rows = [[0] * n for _ in range(n)]
        for a in range(n):
            verts[f[a]] = self.vertices[a]
            for b in range(n):
                rows[f[a]][f[b]] = self.entries[a][b]
        return HomMatrix(tuple(verts), tuple(tuple(r) for r in rows))

    def as_dict(self) -> dict:
        return {
            "vertices": [list(v) if isinstance(v, tuple) else v for v in self.vertices],
            "matrix": [list(r) for r in self.entries],
        }


def _vertex_key(q: TranslationQuiver, v: int):
    lab = q.labels[v]
    return (v, *lab) if isinstance(lab, tuple) else (v, lab)


def hom_matrix(q: TranslationQuiver, oracle: bool = False) -> HomMatrix:
    if oracle:
        return oracle_hom_matrix(q)
    entries = tuple(
        tuple(hom_dim_orbit(q, a, b) for b in range(q.n)) for a in range(q.n)
    )
    return HomMatrix(tuple(_vertex_key(q, v) for v in range(q.n)), entries)


# ---------------------------------------------------------------- oracle


def _layered_hom(n, in_neighbors, tau_of, source, killed=frozenset(), max_length=None):
    """dim of (paths source -> m) / (mesh ideal + paths through killed), per m.

    The path space is graded by length.  V[l][m] is the degree-l part of
    Hom(source, m); it is the cokernel of

        V[l-2][tau m]  ->  (+)_{w -> m} V[l-1][w],

    the map given by composing with the mesh starting at tau m, and the
    arrow maps V[l-1][w] -> V[l][m] are the components of that cokernel
    projection.  Once a whole layer vanishes every later one does too.
    """
    if max_length is None:
        max_length = 2 * n + 2
    totals = [0] * n
    if source in killed:
        return totals
    dims_prev2: dict[int, int] = {}
    dims_prev = {source: 1}
    maps_prev: dict[tuple[int, int], DomainMatrix] = {}
    totals[source] = 1
    for _length in range(1, max_length + 1):
        dims: dict[int, int] = {}
        maps: dict[tuple[int, int], DomainMatrix] = {}
        for m in range(n):
            if m in killed:
                continue
            ins = [w for w in in_neighbors[m] if dims_prev.get(w, 0)]
            if not ins:
                continue
            t = tau_of[m]
            d_t = dims_prev2.get(t, 0) if t is not None else 0
            blocks = []
            for w in ins:
                blk = maps_prev.get((t, w)) if d_t else None
                if blk is None:
                    blk = DomainMatrix.zeros((dims_prev[w], d_t), QQ)
                blocks.append(blk)
            B = DomainMatrix.vstack(*blocks)
            N = B.transpose().nullspace()
            k = N.shape[0]
            if k == 0:
                continue
            dims[m] = k
            col = 0
            for w in ins:
                dw = dims_prev[w]
                maps[(w, m)] = N[:, col : col + dw]
                col += dw
            totals[m] += k
        if not dims and not dims_prev:
            return totals
        dims_prev2 = dims_prev
        dims_prev, maps_prev = dims, maps
    raise ArquotError(f"mesh path space from vertex {source} did not vanish by length {max_length}")


def oracle_hom_function(q: TranslationQuiver, x: int, killed=frozenset()) -> list[int]:
    """dim Hom(x, m) for every vertex m of a finite translation quiver."""
    return _layered_hom(q.n, q.in_neighbors, q.tau, x, frozenset(killed))


def oracle_mesh_hom(q: TranslationQuiver, x: int, y: int, killed=frozenset()) -> int:
    return oracle_hom_function(q, x, killed)[y]


def oracle_hom_matrix(q: TranslationQuiver, killed=frozenset()) -> HomMatrix:
    """Hom matrix of k(q), or of k(q) modulo the ideal of the killed vertices.

    Rows and columns run over the surviving vertices in index order.
    """
    killed = frozenset(killed)
    keep = [v for v in range(q.n) if v not in killed]
    rows = []
    for x in keep:
        f = oracle_hom_function(q, x, killed)
        rows.append(tuple(f[y] for y in keep))
    return HomMatrix(tuple(_vertex_key(q, v) for v in keep), tuple(rows))


@dataclass(frozen=True)
class ZWindow:
    """Columns [start, stop) of ZΔ as a finite quiver with partial translation."""

    diagram: DynkinDiagram
    start: int
    stop: int

    @property
    def vertices(self) -> list[ZVertex]:
        return [ZVertex(i, j) for i in range(self.start, self.stop) for j in self.diagram.vertices]

    def index(self, v) -> int:
        i, j = v
        if not self.start <= i < self.stop:
            raise KeyError(v)
        return (i - self.start) * self.diagram.rank + (j - 1)

    def structure(self):
        d = self.diagram
        verts = self.vertices
        ins, tau_of = [], []
        for v in verts:
            ins.append([self.index(w) for w in zd_arrows_in(d, v) if self.start <= w.i < self.stop])
            t = tau(v)
            tau_of.append(self.index(t) if t.i >= self.start else None)
        return len(verts), ins, tau_of


def window_hom_function(win: ZWindow, x) -> dict[ZVertex, int]:
    n, ins, tau_of = win.structure()
    dims = _layered_hom(n, ins, tau_of, win.index(x), max_length=n)
    return {v: dims[k] for k, v in enumerate(win.vertices) if dims[k]}


def oracle_zd_hom(d: DynkinDiagram, x, y, margin: int | None = None) -> int:
    """dim Hom(x, y) in the mesh category of ZΔ, computed on a finite window.

    The window extends `margin` (default 2h) columns beyond both x and y.
    The result is recomputed with the margin doubled; if the two disagree
    the margin is doubled once more, and a further disagreement raises
    WindowTooSmall.
    """
    x, y = ZVertex(*x), ZVertex(*y)
    if margin is None:
        margin = 2 * coxeter_number(d)

    def at(mg):
        win = ZWindow(d, min(x.i, y.i) - mg, max(x.i, y.i) + mg + 1)
        return window_hom_function(win, x).get(y, 0)

    first, second = at(margin), at(2 * margin)
    if first == second:
        return first
    third = at(4 * margin)
    if third == second:
        return third
    raise WindowTooSmall(f"Hom({x}, {y}) on Z{d.name} keeps changing as the window grows")
