"""AR quivers of u-cluster categories and their global shape."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .dynkin import coxeter_number, diagram
from .errors import SpecMismatch
from .tquiver import TranslationQuiver, orbit_quiver, tau_orbits
from .ztrans import phi

NO_TWIST = "None"
REFLECT = "Reflect"
SWAP = "SwapExceptional"


@dataclass(frozen=True)
class ClusterQuiverSpec:
    family: str
    rank: int
    level: int
    # rectangle length = period / pairing; pairing is 2 when the ends of
    # the rectangle are glued with a twist, so half-integers never appear
    period: int
    pairing: int
    twist: str

    @property
    def rectangle_length(self) -> Fraction:
        return Fraction(self.period, self.pairing)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "level": self.level,
            "rectangle": {"period": self.period, "pairing": self.pairing},
            "twist": self.twist,
        }


def expected_spec(family: str, rank: int, u: int) -> ClusterQuiverSpec:
    """Shape predicted from the type alone: length u*h/2 + 1, twist from phi."""
    d = diagram(family, rank)
    f = phi(d, u)
    length = Fraction(u * coxeter_number(d), 2) + 1
    if f.is_diagram_identity:
        twist = NO_TWIST
    else:
        twist = SWAP if d.family == "D" else REFLECT
    pairing = f.order_of_g
    period = length * pairing
    assert period.denominator == 1
    return ClusterQuiverSpec(d.family, rank, u, int(period), pairing, twist)


def cluster_quiver(family: str, rank: int, u: int) -> tuple[TranslationQuiver, ClusterQuiverSpec]:
    """AR quiver of the u-cluster category of the given Dynkin type.

    >>> q, spec = cluster_quiver("A", 3, 1)
    >>> q.n, spec.twist
    (9, 'Reflect')
    """
    d = diagram(family, rank)
    q = orbit_quiver(d, phi(d, u), level=u)
    q = replace(q, meta=replace(q.meta, standard=True))
    return q, expected_spec(d.family, rank, u)


@dataclass(frozen=True)
class ShapeReport:
    band_width: int
    length: Fraction
    twist: str
    exceptional_orbit_lengths: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "band_width": self.band_width,
            "length": [self.length.numerator, self.length.denominator],
            "twist": self.twist,
            "exceptional_orbit_lengths": list(self.exceptional_orbit_lengths),
        }


def shape_classify(q: TranslationQuiver, spec: ClusterQuiverSpec) -> ShapeReport:
    """Read band width, length and twist off the tau-orbits of q.

    Raises SpecMismatch when the geometry disagrees with `spec`.
    """
    rows = sorted({q.row(v) for v in range(q.n)})
    orbits = tau_orbits(q)
    lengths = set()
    twisted = False
    for orb in orbits:
        orb_rows = {q.row(v) for v in orb}
        if len(orb_rows) > 2:
            raise SpecMismatch(f"a tau-orbit meets rows {sorted(orb_rows)}")
        twisted |= len(orb_rows) == 2
        lengths.add(Fraction(len(orb), len(orb_rows)))
    if len(lengths) != 1:
        raise SpecMismatch(f"tau-orbits give inconsistent lengths {sorted(lengths)}")
    if not twisted:
        twist = NO_TWIST
    else:
        twist = SWAP if spec.family == "D" else REFLECT
    exceptional: tuple[int, ...] = ()
    if spec.family == "D":
        n = spec.rank
        exceptional = tuple(
            sorted(len(o) for o in orbits if {q.row(v) for v in o} & {n - 1, n})
        )
    report = ShapeReport(len(rows), lengths.pop(), twist, exceptional)

    if report.band_width != spec.rank:
        raise SpecMismatch(f"band width {report.band_width} != rank {spec.rank}")
    if report.length != spec.rectangle_length:
        raise SpecMismatch(f"length {report.length} != expected {spec.rectangle_length}")
    if report.twist != spec.twist:
        raise SpecMismatch(f"twist {report.twist} != expected {spec.twist}")
    return report
