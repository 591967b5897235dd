"""The classicalisation step map on finite Swiss cheeses.

A disc assignment keeps index 0 for the complement of the outer closed disc
and indices 1.. for the holes.  Each non-classical step removes one index,
either merging two holes or pulling the outer disc away from a hole.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from typing import Sequence

from . import _accel
from .geometry import Disc, Geo, GeometryError, _Prec

PREFILTER_SLACK = 1e-9


class NotInH(ArithmeticError):
    """delta <= 0: the hole radii use up the whole outer radius."""


@dataclass(frozen=True)
class SwissCheese:
    outer: Disc
    holes: tuple[Disc, ...]

    def __post_init__(self):
        object.__setattr__(self, "outer", self.outer.as_closed())
        object.__setattr__(self, "holes", tuple(h.as_open() for h in self.holes))

    def to_json(self) -> dict:
        return {"outer": self.outer.to_json(), "holes": [h.to_json() for h in self.holes]}

    @classmethod
    def from_json(cls, data) -> "SwissCheese":
        return cls(Disc.from_json(data["outer"], closed=True),
                   tuple(Disc.from_json(h) for h in data.get("holes", [])))

    def assignment(self) -> "DiscAssignment":
        entries = {0: self.outer}
        for i, h in enumerate(self.holes, start=1):
            entries[i] = h
        return DiscAssignment(entries)


@dataclass(frozen=True)
class DiscAssignment:
    """Index -> disc; entry 0 is the closed outer disc whose complement is the region."""

    entries: dict

    def __post_init__(self):
        if 0 not in self.entries:
            raise ValueError("index 0 must be present")

    @property
    def indices(self) -> list[int]:
        return sorted(self.entries)

    @property
    def outer(self) -> Disc:
        return self.entries[0]

    def holes(self) -> list[tuple[int, Disc]]:
        return [(i, self.entries[i]) for i in self.indices if i]

    def cheese(self) -> SwissCheese:
        return SwissCheese(self.outer, tuple(d for _, d in self.holes()))

    def replace(self, index: int, disc: Disc, drop: int) -> "DiscAssignment":
        e = dict(self.entries)
        e[index] = disc
        del e[drop]
        return DiscAssignment(e)


def delta(h, geo: Geo | None = None) -> Decimal:
    """r(outer) minus the total hole radius."""
    geo = geo or Geo()
    if isinstance(h, SwissCheese):
        h = h.assignment()
    with _Prec(geo.precision):
        return h.outer.r - sum((d.r for _, d in h.holes()), Decimal(0))


def _pair_collides(h: DiscAssignment, i: int, j: int, geo: Geo) -> bool:
    if i == 0:
        return geo.hole_meets_boundary(h.outer, h.entries[j])
    return geo.holes_meet(h.entries[i], h.entries[j])


def min_collision(h: DiscAssignment, geo: Geo | None = None) -> tuple[int, int] | None:
    """Lexicographically least (n, m), n < m, whose closed regions meet."""
    geo = geo or Geo()
    holes = h.holes()
    if not holes:
        return None
    idx = [i for i, _ in holes]
    xs = [float(d.cx) for _, d in holes]
    ys = [float(d.cy) for _, d in holes]
    rs = [float(d.r) for _, d in holes]
    o = h.outer
    cands = _accel.collision_candidates(xs, ys, rs, float(o.cx), float(o.cy), float(o.r),
                                        PREFILTER_SLACK)
    # positions -> assignment indices; order is preserved since idx is sorted
    for a, b in cands:
        n = 0 if a == 0 else idx[a - 1]
        m = idx[b - 1]
        if _pair_collides(h, n, m, geo):
            return (n, m)
    return None


def min_collision_exact(h: DiscAssignment, geo: Geo | None = None) -> tuple[int, int] | None:
    """Reference scan without the float prefilter."""
    geo = geo or Geo()
    ids = h.indices
    for a, n in enumerate(ids):
        for m in ids[a + 1:]:
            if _pair_collides(h, n, m, geo):
                return (n, m)
    return None


@dataclass(frozen=True)
class Violation:
    n: int
    m: int


def is_classical(h, geo: Geo | None = None) -> tuple[bool, Violation | None]:
    """Hole closures pairwise disjoint and inside int(outer), each by more than eps."""
    if isinstance(h, SwissCheese):
        h = h.assignment()
    hit = min_collision(h, geo)
    if hit is None:
        return True, None
    return False, Violation(*hit)


@dataclass(frozen=True)
class StepRecord:
    case: str            # "2.1" merge or "2.2" shrink
    n: int
    m: int
    disc_n: Disc         # h(n) before the step (the outer disc when n = 0)
    disc_m: Disc         # h(m) before the step
    result: Disc         # f(h)(n)

    def to_json(self) -> dict:
        return {"case": self.case, "n": self.n, "m": self.m, "disc_n": self.disc_n.to_json(),
                "disc_m": self.disc_m.to_json(), "result": self.result.to_json()}

    @classmethod
    def from_json(cls, d) -> "StepRecord":
        closed_n = d["n"] == 0
        return cls(d["case"], int(d["n"]), int(d["m"]),
                   Disc.from_json(d["disc_n"], closed_n), Disc.from_json(d["disc_m"]),
                   Disc.from_json(d["result"], closed_n))


def step(h: DiscAssignment, geo: Geo | None = None) -> tuple[DiscAssignment, StepRecord | None]:
    geo = geo or Geo()
    if delta(h, geo) <= 0:
        raise NotInH("not in H")
    hit = min_collision(h, geo)
    if hit is None:
        return h, None
    n, m = hit
    dn, dm = h.entries[n], h.entries[m]
    if n != 0:
        new = geo.combine(dn, dm)
        case = "2.1"
    else:
        new = geo.shrink(dn, dm)
        case = "2.2"
    return h.replace(n, new, m), StepRecord(case, n, m, dn, dm, new)


@dataclass
class Certificate:
    """Original index -> final index whose region contains it, plus the step log."""

    mapping: dict
    steps: list = field(default_factory=list)
    precision: int = 50

    def to_json(self) -> dict:
        return {"precision": self.precision,
                "mapping": {str(k): v for k, v in sorted(self.mapping.items())},
                "steps": [s.to_json() for s in self.steps]}

    @classmethod
    def from_json(cls, d) -> "Certificate":
        return cls({int(k): int(v) for k, v in d["mapping"].items()},
                   [StepRecord.from_json(s) for s in d.get("steps", [])],
                   int(d.get("precision", 50)))


@dataclass
class ClassicaliseResult:
    cheese: SwissCheese
    assignment: DiscAssignment
    certificate: Certificate
    steps: int
    delta_in: Decimal
    delta_out: Decimal


def classicalise(cheese: SwissCheese, geo: Geo | None = None) -> ClassicaliseResult:
    geo = geo or Geo()
    h = cheese.assignment()
    d_in = delta(h, geo)
    if d_in <= 0:
        raise NotInH("not in H")
    owner = {i: i for i in h.indices}
    records: list[StepRecord] = []
    limit = len(h.indices)
    while True:
        h2, rec = step(h, geo)
        if rec is None:
            break
        records.append(rec)
        for k, v in owner.items():
            if v == rec.m:
                owner[k] = rec.n
        h = h2
        if len(records) > limit:
            raise RuntimeError("step count exceeded the number of holes")
    # final indices renumbered to the positions of the output cheese
    final_ids = h.indices
    pos = {i: p for p, i in enumerate(final_ids)}
    mapping = {k: pos[v] for k, v in owner.items()}
    cert = Certificate(mapping, records, geo.precision)
    return ClassicaliseResult(h.cheese(), h, cert, len(records), d_in, delta(h, geo))


# -- certificate checking ------------------------------------------------------


def _region(cheese: SwissCheese, i: int) -> Disc:
    return cheese.outer if i == 0 else cheese.holes[i - 1]


def region_contained(kind_a: int, a: Disc, kind_b: int, b: Disc, geo: Geo) -> bool:
    """Region a inside region b; kind 0 means the complement of a closed disc."""
    if kind_a == 0 and kind_b == 0:
        return geo.disc_in_disc(b, a)        # C \ A in C \ B  iff  B in A
    if kind_a == 0:
        return False                         # an unbounded set never fits in a disc
    if kind_b == 0:
        return geo.discs_disjoint(a, b)      # open disc misses the closed disc
    return geo.disc_in_disc(a, b)


def verify_certificate(cert: Certificate, before: SwissCheese, after: SwissCheese,
                       geo: Geo | None = None) -> bool:
    """Check every original region against its claimed final region.

    The step log is checked too: each record must show the removed and the
    replaced region inside the new one.  Nothing from the engine is reused.
    """
    geo = geo or Geo(cert.precision)
    n_before = len(before.holes) + 1
    n_after = len(after.holes) + 1
    if sorted(cert.mapping) != list(range(n_before)):
        return False
    if cert.mapping.get(0) != 0:
        return False
    for i, j in cert.mapping.items():
        if not 0 <= j < n_after:
            return False
        kind_b = 0 if j == 0 else 1
        if not region_contained(0 if i == 0 else 1, _region(before, i), kind_b,
                                _region(after, j), geo):
            return False
    for rec in cert.steps:
        kind = 0 if rec.n == 0 else 1
        if not region_contained(kind, rec.disc_n, kind, rec.result, geo):
            return False
        if not region_contained(1, rec.disc_m, kind, rec.result, geo):
            return False
    return True


def tamper(cert: Certificate, before: SwissCheese, after: SwissCheese,
           geo: Geo | None = None) -> Certificate:
    """Negative control: send one region to the final region farthest from it.

    Final holes are pairwise disjoint, so any final region other than the
    true one cannot contain the source; with no alternative the target
    becomes an index that does not exist.
    """
    geo = geo or Geo(cert.precision)
    mapping = dict(cert.mapping)
    i = max(mapping)
    src = _region(before, i)
    alts = [j for j in range(len(after.holes) + 1) if j != mapping[i]]
    if alts:
        mapping[i] = max(alts, key=lambda j: geo.dist(src, _region(after, j)))
    else:
        mapping[i] = len(after.holes) + 1
    return Certificate(mapping, list(cert.steps), cert.precision)


def holes_from(seq: Sequence) -> tuple[Disc, ...]:
    return tuple(d if isinstance(d, Disc) else Disc(*d) for d in seq)
