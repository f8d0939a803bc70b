"""Isomorphism of finite translation quivers.

A translation-quiver isomorphism is a vertex bijection that maps arrows
onto arrows and commutes with the translations.  The search runs colour
refinement over arrows and tau jointly on both quivers, then backtracks
over the vertices of the first quiver in index order, trying candidates in
index order.  Forced moves (tau-images, unique neighbour candidates) are
propagated eagerly, which never removes a solution, so the first bijection
found is the lexicographically least one.
"""

from __future__ import annotations

from collections import Counter

from .tquiver import TranslationQuiver, tau_orbits


def _orbit_lengths(q: TranslationQuiver) -> list[int]:
    length = [0] * q.n
    for orb in tau_orbits(q):
        for v in orb:
            length[v] = len(orb)
    return length


def refine_colours(q1: TranslationQuiver, q2: TranslationQuiver) -> tuple[list[int], list[int]]:
    """Stable colouring of the disjoint union of q1 and q2.

    Colours are small integers shared between the two quivers, so equal
    colour histograms are a necessary condition for isomorphism.
    """
    quivers = (q1, q2)
    sigs = [
        [
            (len(q.in_neighbors[v]), len(q.out_neighbors[v]), ln)
            for v, ln in enumerate(_orbit_lengths(q))
        ]
        for q in quivers
    ]
    colours = _compress(sigs)
    n_classes = len(set(colours[0]) | set(colours[1]))
    while True:
        sigs = []
        for q, col in zip(quivers, colours):
            sigs.append(
                [
                    (
                        col[v],
                        col[q.tau[v]],
                        tuple(sorted(col[w] for w in q.out_neighbors[v])),
                        tuple(sorted(col[w] for w in q.in_neighbors[v])),
                    )
                    for v in range(q.n)
                ]
            )
        new = _compress(sigs)
        k = len(set(new[0]) | set(new[1]))
        colours = new
        if k == n_classes:
            return colours[0], colours[1]
        n_classes = k


def _compress(sigs):
    keys = {s: c for c, s in enumerate(sorted(set(sigs[0]) | set(sigs[1])))}
    return [[keys[s] for s in side] for side in sigs]


def is_isomorphic(q1: TranslationQuiver, q2: TranslationQuiver) -> tuple[int, ...] | None:
    """Lexicographically least translation-quiver isomorphism q1 -> q2, or None.

    The witness is a tuple whose v-th entry is the image of vertex v.
    """
    if q1.n != q2.n or len(q1.arrows) != len(q2.arrows):
        return None
    if q1.n == 0:
        return ()
    c1, c2 = refine_colours(q1, q2)
    if Counter(c1) != Counter(c2):
        return None
    by_colour: dict[int, list[int]] = {}
    for w, c in enumerate(c2):
        by_colour.setdefault(c, []).append(w)

    out2 = [set(x) for x in q2.out_neighbors]
    in2 = [set(x) for x in q2.in_neighbors]
    n = q1.n
    fwd = [-1] * n
    back = [-1] * n

    def assign(v, w, trail) -> bool:
        """Map v -> w and everything it forces; False on contradiction."""
        queue = [(v, w)]
        while queue:
            a, b = queue.pop()
            if fwd[a] != -1:
                if fwd[a] != b:
                    return False
                continue
            if back[b] != -1 or c1[a] != c2[b]:
                return False
            fwd[a] = b
            back[b] = a
            trail.append(a)
            queue.append((q1.tau[a], q2.tau[b]))
            queue.append((q1.tau_inverse[a], q2.tau_inverse[b]))
            for nbrs1, nbrs2 in ((q1.out_neighbors[a], out2[b]), (q1.in_neighbors[a], in2[b])):
                for x in nbrs1:
                    if fwd[x] != -1:
                        if fwd[x] not in nbrs2:
                            return False
                        continue
                    cands = [y for y in nbrs2 if back[y] == -1 and c2[y] == c1[x]]
                    if not cands:
                        return False
                    if len(cands) == 1:
                        queue.append((x, cands[0]))
        return True

    def undo(trail, mark):
        while len(trail) > mark:
            a = trail.pop()
            back[fwd[a]] = -1
            fwd[a] = -1

    trail: list[int] = []

    def search(start) -> bool:
        v = start
        while v < n and fwd[v] != -1:
            v += 1
        if v == n:
            return True
        for w in by_colour[c1[v]]:
            if back[w] != -1:
                continue
            mark = len(trail)
            if assign(v, w, trail) and search(v + 1):
                return True
            undo(trail, mark)
        return False

    if not search(0):
        return None
    witness = tuple(fwd)
    assert check_isomorphism(q1, q2, witness)
    return witness


def check_isomorphism(q1: TranslationQuiver, q2: TranslationQuiver, f) -> bool:
    """Independent verification of a claimed witness."""
    if q1.n != q2.n or sorted(f) != list(range(q2.n)):
        return False
    if any(f[q1.tau[v]] != q2.tau[f[v]] for v in range(q1.n)):
        return False
    mapped = {(f[a], f[b]) for a, b in q1.arrows}
    return mapped == set(q2.arrows)
