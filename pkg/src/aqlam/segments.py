"""Segments, the precedence/containment order, and parameter-level data.

A segment [b, e] stands for the decreasing half-integer sequence
b, b-1, ..., e.  A parameter is an ordered list of segments; component i
contributes a segment of length m_i centered at a_i.  All indices into a
parameter are 1-based throughout the library, matching the usual
mathematical labelling of the components.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError
from .halfint import HalfInt, HalfIntLike


@dataclass(frozen=True)
class Segment:
    """A decreasing half-integer interval [b, e] with unit step.

    >>> s = Segment.of(7, 5)
    >>> s.m, s.a
    (3, 12)
    """

    b: HalfInt  # beginning (maximum)
    e: HalfInt  # end (minimum)

    def __post_init__(self) -> None:
        diff = self.b - self.e
        if diff < 0 or diff.twice % 2 != 0:
            raise InputError(f"invalid segment [{self.b}, {self.e}]")

    @classmethod
    def of(cls, b: HalfIntLike, e: HalfIntLike) -> "Segment":
        return cls(HalfInt.of(b), HalfInt.of(e))

    @property
    def m(self) -> int:
        """Length b - e + 1."""
        return int(self.b - self.e) + 1

    @property
    def a(self) -> int:
        """Center b + e (always an integer: b and e lie on the same grid)."""
        return int(self.b + self.e)

    def entries(self) -> list[HalfInt]:
        return [self.b - k for k in range(self.m)]

    def __str__(self) -> str:
        return f"[{self.b},{self.e}]"


def segment_from_component(a: int, m: int) -> Segment:
    """Segment of length m centered at a: [(a+m-1)/2, (a-m+1)/2].

    >>> str(segment_from_component(12, 3))
    '[7,5]'
    """
    if m < 1:
        raise InputError(f"component length must be positive, got {m}")
    return Segment(HalfInt(a + m - 1), HalfInt(a - m + 1))


class Relation(enum.Enum):
    """How two distinct components compare, after duplicate resolution."""

    PRECEDES = "precedes"  # b_i > b_j and e_i > e_j
    PRECEDED_BY = "preceded-by"
    CONTAINS = "contains"
    CONTAINED = "contained"

    @property
    def inverse(self) -> "Relation":
        return _INVERSE[self]

    @property
    def is_containment(self) -> bool:
        return self in (Relation.CONTAINS, Relation.CONTAINED)


_INVERSE = {
    Relation.PRECEDES: Relation.PRECEDED_BY,
    Relation.PRECEDED_BY: Relation.PRECEDES,
    Relation.CONTAINS: Relation.CONTAINED,
    Relation.CONTAINED: Relation.CONTAINS,
}


def _relate(s: Segment, t: Segment, tie: Relation) -> Relation:
    """Relation of s to t; `tie` breaks exact duplicates."""
    if s.b > t.b and s.e > t.e:
        return Relation.PRECEDES
    if t.b > s.b and t.e > s.e:
        return Relation.PRECEDED_BY
    if s == t:
        return tie
    # containment: neither precedes the other
    if s.b >= t.b and s.e <= t.e:
        return Relation.CONTAINS
    return Relation.CONTAINED


@dataclass(frozen=True)
class GoodParityParameter:
    """An ordered, admissible list of segments (the parameter psi).

    Duplicate segments are resolved by index: the earlier copy Contains
    the later one.  The reference order must be admissible (no earlier
    component preceded by a later one); inadmissible input is rejected so
    that every report uses the caller's own ordering.

    With ``strict_parity`` set, each component must satisfy
    a_i + m_i = n (mod 2).  The flag is off by default: the algorithms are
    parity-agnostic, and natural examples (e.g. U(6,8) with n = 14 and all
    a_i + m_i odd) violate the congruence.  All segments must nevertheless
    lie on a single grid (all b_i integral, or all strictly half-integral),
    otherwise intersection counts are meaningless.
    """

    segments: tuple[Segment, ...]
    strict_parity: bool = field(default=False)

    def __post_init__(self) -> None:
        if not self.segments:
            raise InputError("parameter needs at least one segment")
        object.__setattr__(self, "segments", tuple(self.segments))
        grid = {s.b.twice % 2 for s in self.segments}
        if len(grid) > 1:
            raise InputError("segments mix integral and half-integral grids")
        if self.strict_parity:
            n = self.n
            for i, s in enumerate(self.segments, start=1):
                if (s.a + s.m - n) % 2 != 0:
                    raise InputError(
                        f"component {i} violates parity: a+m={s.a + s.m}, n={n}"
                    )
        for i in range(1, self.r + 1):
            for j in range(i + 1, self.r + 1):
                if self.relation(i, j) is Relation.PRECEDED_BY:
                    raise InputError(
                        f"reference order inadmissible: component {i} "
                        f"{self.seg(i)} is preceded by component {j} {self.seg(j)}"
                    )

    @classmethod
    def from_components(
        cls, components: Iterable[tuple[int, int]], strict_parity: bool = False
    ) -> "GoodParityParameter":
        """Build from (a_i, m_i) pairs."""
        segs = tuple(segment_from_component(a, m) for a, m in components)
        return cls(segs, strict_parity)

    @property
    def r(self) -> int:
        return len(self.segments)

    @property
    def n(self) -> int:
        return sum(s.m for s in self.segments)

    def seg(self, i: int) -> Segment:
        if not 1 <= i <= self.r:
            raise InputError(f"component index {i} out of range 1..{self.r}")
        return self.segments[i - 1]

    def m(self, i: int) -> int:
        return self.seg(i).m

    def a(self, i: int) -> int:
        return self.seg(i).a

    def relation(self, i: int, j: int) -> Relation:
        return relation(self, i, j)

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.segments) + "}"


def relation(psi: GoodParityParameter, i: int, j: int) -> Relation:
    """Relation of component i to component j (duplicates: earlier Contains).

    >>> psi = GoodParityParameter((Segment.of(7, 5), Segment.of(7, 3)))
    >>> relation(psi, 1, 2)
    <Relation.CONTAINED: 'contained'>
    """
    if i == j:
        raise InputError(f"relation needs distinct indices, got ({i}, {j})")
    tie = Relation.CONTAINS if i < j else Relation.CONTAINED
    return _relate(psi.seg(i), psi.seg(j), tie)


def intersection_size(s: Segment, t: Segment) -> int:
    """Number of common entries of the two segments.

    >>> intersection_size(Segment.of(7, 3), Segment.of(6, 1))
    4
    """
    lo = max(s.e, t.e)
    hi = min(s.b, t.b)
    return max(0, int(hi - lo) + 1) if hi >= lo else 0


def neighbors(psi: GoodParityParameter, i: int, j: int) -> bool:
    """True iff i, j are related with no third component strictly between.

    Between-ness is taken in the same relation: a precedence pair is
    blocked by nu_i > nu_k > nu_j, a containment pair by a strictly
    intermediate containment chain.
    """
    rel = relation(psi, i, j)
    if rel in (Relation.PRECEDED_BY, Relation.CONTAINED):
        i, j = j, i
        rel = rel.inverse
    for k in range(1, psi.r + 1):
        if k in (i, j):
            continue
        if relation(psi, i, k) is rel and relation(psi, k, j) is rel:
            return False
    return True


def lambda_values(psi: GoodParityParameter) -> tuple[HalfInt, ...]:
    """The shifts lambda_i = (a_i + m_i - n)/2 + sum_{j<i} m_j.

    Integral whenever strict parity holds; half-integral otherwise.
    """
    n = psi.n
    out = []
    acc = 0
    for s in psi.segments:
        out.append(HalfInt(s.a + s.m - n + 2 * acc))
        acc += s.m
    return tuple(out)


def arrangement_is_admissible(
    psi: GoodParityParameter, images: Sequence[int]
) -> bool:
    """No position h < k carries a segment preceded by the one at k."""
    r = psi.r
    if sorted(images) != list(range(1, r + 1)):
        raise InputError(f"not a permutation of 1..{r}: {tuple(images)}")
    for h in range(r):
        for k in range(h + 1, r):
            if relation(psi, images[h], images[k]) is Relation.PRECEDED_BY:
                return False
    return True


class RangeLabel(enum.Enum):
    GOOD = "good"
    NICE = "nice"
    WEAKLY_FAIR = "weakly-fair"
    MEDIOCRE = "mediocre"


def range_classify(
    psi: GoodParityParameter, arrangement: Sequence[int]
) -> set[RangeLabel]:
    """Classify an arrangement: good / nice / weakly fair / mediocre.

    The labels are cumulative: good implies nice implies weakly fair
    implies mediocre (= admissible).
    """
    images = tuple(arrangement)
    if sorted(images) != list(range(1, psi.r + 1)):
        raise InputError(f"not a permutation of 1..{psi.r}: {images}")
    segs = [psi.seg(i) for i in images]
    labels: set[RangeLabel] = set()
    pairs = list(zip(segs, segs[1:]))
    if all(s.e > t.b for s, t in pairs):
        labels.add(RangeLabel.GOOD)
    if all(s == t or (s.b > t.b and s.e > t.e) for s, t in pairs):
        labels.add(RangeLabel.NICE)
    if all(s.a >= t.a for s, t in pairs):
        labels.add(RangeLabel.WEAKLY_FAIR)
    if arrangement_is_admissible(psi, images):
        labels.add(RangeLabel.MEDIOCRE)
    return labels
