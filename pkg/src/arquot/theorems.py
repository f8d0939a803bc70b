"""Instance checks of the quotient theorems for u-cluster categories.

Each ``verify_*`` builds the v-cluster category of the large type, deletes a
tau-stable band of rows, and tests the result for translation-quiver
isomorphism with the u-cluster category of the small type.  What a report
certifies is combinatorial: the tau-stability of the deleted set, the
finiteness and connectedness of both quivers, and the isomorphism (plus,
optionally, agreement of Hom dimensions).  Standardness and algebraic
origin are not machine-checked; see ``ASSUMPTIONS``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .cluster import cluster_quiver
from .errors import HypothesisViolated, RankTooSmall
from .isomorphism import is_isomorphic
from .meshhom import oracle_hom_matrix
from .tquiver import (
    TranslationQuiver,
    delete_tau_stable,
    is_connected,
    is_tau_stable,
    tau_orbits,
)

ASSUMPTIONS = (
    "Not machine-checked: u-cluster categories of finite type are taken to be "
    "standard and of algebraic origin; the quotient inherits both properties "
    "from the ambient category. Checked here: tau-stability of the deleted set, "
    "finiteness and connectedness of both AR quivers, and translation-quiver "
    "isomorphism."
)

D_PARITY_NOTE = (
    "The stated parity hypothesis only constrains the case u, m both odd. Here "
    "the exceptional vertices are switched on exactly one side, so the "
    "exceptional tau-orbit structures differ and no isomorphism can exist; "
    "reported as an empirical outcome."
)

E_CASES = {
    # case: (source rank, target rank, rows to delete)
    "E7_from_E8": (8, 7, 1),
    "E6_from_E8": (8, 6, 2),
    "E6_from_E7": (7, 6, 1),
}


@dataclass
class VerificationReport:
    theorem: str
    parameters: dict
    hypotheses: list[tuple[str, bool]]
    source: dict
    target: dict
    deletion_rows: list[int]
    deletion_orbits: list[int]
    deleted_vertices: list[int]
    tau_stable: bool
    quotient_vertices: int
    checklist: list[tuple[str, bool]] = field(default_factory=list)
    iso_witness: tuple[int, ...] | None = None
    hom_checked: bool | None = None
    exceptional_orbits: dict | None = None
    open_question: str | None = None
    search_exhausted: bool = False
    assumptions: str = ASSUMPTIONS

    @property
    def isomorphic(self) -> bool:
        return self.iso_witness is not None

    def as_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "parameters": dict(self.parameters),
            "hypotheses": [[k, v] for k, v in self.hypotheses],
            "checklist": [[k, v] for k, v in self.checklist],
            "source": self.source,
            "target": self.target,
            "deletion": {
                "rows": self.deletion_rows,
                "orbits": self.deletion_orbits,
                "vertices": self.deleted_vertices,
            },
            "tau_stable": self.tau_stable,
            "quotient_vertices": self.quotient_vertices,
            "isomorphic": self.isomorphic,
            "iso_witness": None if self.iso_witness is None else list(self.iso_witness),
            "hom_checked": self.hom_checked,
            "assumptions": self.assumptions,
        }
        if self.exceptional_orbits is not None:
            out["exceptional_orbits"] = self.exceptional_orbits
        if self.open_question is not None:
            out["open_question"] = self.open_question
        if self.search_exhausted:
            out["search_exhausted"] = True
        return out


def _require(name: str, ok: bool, detail: str = "") -> tuple[str, bool]:
    if not ok:
        raise HypothesisViolated(name, detail)
    return (name, True)


def _positive(**params) -> tuple[str, bool]:
    bad = [k for k, x in params.items() if not isinstance(x, int) or x < 1]
    return _require("positive integers", not bad, ", ".join(bad))


def _describe(q: TranslationQuiver, family: str, rank: int, level: int) -> dict:
    return {"family": family, "rank": rank, "level": level, "vertices": q.n}


def _orbits_in(q: TranslationQuiver, X) -> list[int]:
    return [k for k, orb in enumerate(tau_orbits(q)) if orb[0] in X]


def _hom_agrees(T, X, U, witness) -> bool:
    quotient = oracle_hom_matrix(T, killed=X)
    target = oracle_hom_matrix(U)
    n = len(witness)
    return all(
        quotient[a, b] == target[witness[a], witness[b]] for a in range(n) for b in range(n)
    )


def _run(theorem, params, hypotheses, T, tdesc, U, udesc, rows, check_hom, X=None):
    if X is None:
        X = T.vertices_in_rows(rows)
    stable = is_tau_stable(T, X)
    # the deletion sets come from the proofs; instability means a bug here
    assert stable, f"deletion set for {theorem} {params} is not tau-stable"
    Q = delete_tau_stable(T, X)
    witness = is_isomorphic(Q, U)
    checklist = [
        ("quotient finite", True),
        ("quotient connected", is_connected(Q)),
        ("target connected", is_connected(U)),
        ("AR quivers isomorphic", witness is not None),
    ]
    hom = None
    if check_hom and witness is not None:
        hom = _hom_agrees(T, X, U, witness)
    return VerificationReport(
        theorem=theorem,
        parameters=params,
        hypotheses=hypotheses,
        source=tdesc,
        target=udesc,
        deletion_rows=sorted(rows),
        deletion_orbits=_orbits_in(T, X),
        deleted_vertices=sorted(X),
        tau_stable=stable,
        quotient_vertices=Q.n,
        checklist=checklist,
        iso_witness=witness,
        hom_checked=hom,
    )


def verify_theorem_A(u: int, v: int, m: int, n: int, check_hom: bool = False) -> VerificationReport:
    """u-cluster A_m as a quotient of the v-cluster category of A_n."""
    hyps = [
        _positive(u=u, v=v, m=m, n=n),
        _require("u >= v", u >= v),
        _require("u = v mod 2", (u - v) % 2 == 0),
        _require("u(m+1) = v(n+1)", u * (m + 1) == v * (n + 1)),
    ]
    T, _ = cluster_quiver("A", n, v)
    U, _ = cluster_quiver("A", m, u)
    k = n - m
    if v % 2 == 0:
        rows = list(range(1, k + 1))
    else:
        # u(m+1) = v(n+1) with u, v odd forces n - m even
        half = k // 2
        rows = list(range(1, half + 1)) + list(range(n - half + 1, n + 1))
    return _run(
        "A",
        {"u": u, "v": v, "m": m, "n": n},
        hyps,
        T,
        _describe(T, "A", n, v),
        U,
        _describe(U, "A", m, u),
        rows,
        check_hom,
    )


def _exceptional_lengths(q: TranslationQuiver, rows) -> list[int]:
    rows = set(rows)
    return sorted(len(o) for o in tau_orbits(q) if q.row(o[0]) in rows)


def verify_theorem_D(u: int, v: int, m: int, n: int, check_hom: bool = False) -> VerificationReport:
    """u-cluster D_m as a quotient of the v-cluster category of D_n.

    The report carries the isomorphism outcome as computed, also when the
    stated hypotheses hold but the exceptional vertices are switched on
    only one side.
    """
    if m < 4 or n < 4:
        raise RankTooSmall(f"type D needs m, n >= 4, got m={m}, n={n}")
    both_odd_small = u % 2 == 1 and m % 2 == 1
    both_odd_large = v % 2 == 1 and n % 2 == 1
    hyps = [
        _positive(u=u, v=v, m=m, n=n),
        _require("u >= v", u >= v),
        _require("u(m-1) = v(n-1)", u * (m - 1) == v * (n - 1)),
        _require("u, m both odd implies v, n both odd", both_odd_large or not both_odd_small),
    ]
    T, _ = cluster_quiver("D", n, v)
    U, _ = cluster_quiver("D", m, u)
    rows = list(range(1, n - m + 1))
    report = _run(
        "D",
        {"u": u, "v": v, "m": m, "n": n},
        hyps,
        T,
        _describe(T, "D", n, v),
        U,
        _describe(U, "D", m, u),
        rows,
        check_hom,
    )
    report.exceptional_orbits = {
        "quotient": _exceptional_lengths(T, (n - 1, n)),
        "target": _exceptional_lengths(U, (m - 1, m)),
    }
    if both_odd_small != both_odd_large:
        report.open_question = D_PARITY_NOTE
    return report


def verify_theorem_E(case: str, u: int, v: int, check_hom: bool = False) -> VerificationReport:
    """E_7 or E_6 u-cluster categories as quotients of v-cluster E_8 or E_7.

    Which rows to delete is found by trying every set of the right number
    of tau-orbits in canonical order; the first isomorphic one is reported.
    """
    if case not in E_CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {sorted(E_CASES)}")
    src_rank, tgt_rank, k = E_CASES[case]
    hyps = [_positive(u=u, v=v)]
    if case == "E7_from_E8":
        hyps.append(_require("3u = 5v", 3 * u == 5 * v))
    elif case == "E6_from_E8":
        hyps.append(_require("u even", u % 2 == 0))
        hyps.append(_require("2u = 5v", 2 * u == 5 * v))
    else:
        hyps.append(_require("u even", u % 2 == 0))
        hyps.append(_require("2u = 3v", 2 * u == 3 * v))
    T, _ = cluster_quiver("E", src_rank, v)
    U, _ = cluster_quiver("E", tgt_rank, u)
    tdesc = _describe(T, "E", src_rank, v)
    udesc = _describe(U, "E", tgt_rank, u)
    params = {"case": case, "u": u, "v": v}
    orbits = tau_orbits(T)
    last = None
    for combo in combinations(range(len(orbits)), k):
        X = frozenset(x for c in combo for x in orbits[c])
        rows = sorted({T.row(x) for x in X})
        report = _run(case, params, hyps, T, tdesc, U, udesc, rows, check_hom, X=X)
        if report.isomorphic:
            return report
        last = report
    last.search_exhausted = True
    return last


@dataclass(frozen=True)
class DeletionWitness:
    orbits: tuple[int, ...]
    rows: tuple[int, ...]
    deleted_vertices: int
    iso_witness: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "orbits": list(self.orbits),
            "rows": list(self.rows),
            "deleted_vertices": self.deleted_vertices,
            "iso_witness": list(self.iso_witness),
        }


def search_quotients(source, target, max_orbits: int = 22) -> list[DeletionWitness]:
    """Every union of tau-orbits of `source` whose deletion yields `target`.

    `source` and `target` are (family, rank, level) triples.  Subsets are
    tried by size and then lexicographically, which is also the order of
    the result.  An empty list means no such deletion exists.
    """
    T, _ = cluster_quiver(*source)
    U, _ = cluster_quiver(*target)
    orbits = tau_orbits(T)
    if len(orbits) > max_orbits:
        raise ValueError(f"{len(orbits)} tau-orbits is too many to enumerate subsets")
    want_size = T.n - U.n
    want_lengths = Counter(len(o) for o in tau_orbits(U))
    all_lengths = Counter(len(o) for o in orbits)
    found = []
    for k in range(len(orbits) + 1):
        for combo in combinations(range(len(orbits)), k):
            if sum(len(orbits[c]) for c in combo) != want_size:
                continue
            if all_lengths - Counter(len(orbits[c]) for c in combo) != want_lengths:
                continue
            X = frozenset(x for c in combo for x in orbits[c])
            witness = is_isomorphic(delete_tau_stable(T, X), U)
            if witness is not None:
                rows = tuple(sorted({T.row(x) for x in X}))
                found.append(DeletionWitness(combo, rows, len(X), witness))
    return found


def corollary_params(family: str, u: int, m: int) -> tuple[int, int]:
    """(v, n) realising the u-cluster category of type X_m inside level 1 or 2."""
    family = family.upper()
    if u < 1 or m < 1:
        raise ValueError("u and m must be positive")
    if family == "A":
        return (1, u * (m + 1) - 1) if u % 2 else (2, (u // 2) * (m + 1) - 1)
    if family == "D":
        if m < 4:
            raise RankTooSmall(f"type D needs m >= 4, got {m}")
        return (1, u * (m - 1) + 1) if u % 2 else (2, (u // 2) * (m - 1) + 1)
    raise ValueError("corollary parameters exist for types A and D only")
