"""The linear-constraint non-vanishing criterion.

Two engines decide whether a parameter vector p gives a non-zero module:

* ``nonvanishing`` quantifies the box condition B and the adjacency
  condition C over every admissible arrangement (transporting p along the
  transition maps);
* ``nonvanishing_simplified`` checks the box once and condition C at a
  single arrangement per neighbor pair (any adjacent placement gives the
  same answer, which is tested as a property).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .arrangements import (
    DEFAULT_MAX_R,
    Permutation,
    enumerate_admissible,
    perm_inverse,
    sigma_pairs,
)
from .errors import InputError, ResourceLimitError
from .segments import GoodParityParameter, Relation, intersection_size, neighbors, relation
from .transition import ParamVector, phi, phi_adjacent


@dataclass(frozen=True)
class Witness:
    """A violated condition, with enough data to re-check it by hand.

    kind "B": indices = (i,), values = (p_i, m_i).
    kind "C": indices = (i, j), values = (p_i, q_i, p_j, q_j, lhs, sing).
    kind "overlap": indices = (k, k+1) positions, values = (overlap, sing).
    """

    kind: str
    indices: tuple[int, ...]
    sigma: Optional[Permutation]
    values: tuple[int, ...]

    def __str__(self) -> str:
        where = f" at sigma={self.sigma}" if self.sigma else ""
        return f"{self.kind}{self.indices} violated{where}: values={self.values}"


@dataclass(frozen=True)
class Verdict:
    nonzero: bool
    witness: Optional[Witness] = field(default=None)

    def __bool__(self) -> bool:
        return self.nonzero


def cond_B(psi: GoodParityParameter, pv: ParamVector, i: int) -> bool:
    """0 <= (entry coming from component i) <= m_i."""
    p = pv.entry_of(i)
    return 0 <= p <= psi.m(i)


def _c_values(
    psi: GoodParityParameter, pv: ParamVector, i: int, j: int
) -> tuple[int, int, int, int, int, int]:
    p_i = pv.entry_of(i)
    p_j = pv.entry_of(j)
    q_i = psi.m(i) - p_i
    q_j = psi.m(j) - p_j
    lhs = min(p_i, q_j) + min(q_i, p_j)
    sing = intersection_size(psi.seg(i), psi.seg(j))
    return p_i, q_i, p_j, q_j, lhs, sing


def cond_C(psi: GoodParityParameter, pv: ParamVector, i: int, j: int) -> bool:
    """min{p_i, q_j} + min{q_i, p_j} >= #(nu_i intersect nu_j).

    Defined for components placed adjacently by pv's arrangement.
    """
    inv = perm_inverse(pv.sigma)
    if abs(inv[i - 1] - inv[j - 1]) != 1:
        raise InputError(
            f"components {i},{j} are not adjacent in arrangement {pv.sigma}"
        )
    *_, lhs, sing = _c_values(psi, pv, i, j)
    return lhs >= sing


def cond_C_interval(psi: GoodParityParameter, pv: ParamVector, h: int) -> bool:
    """Interval form of condition C for positions (h, h+1).

    Precedence pair: (m+m'-(a-a'))/2 <= p+p' <= (m+m' + (a-a'))/2;
    containment: the sum must lie between the two lengths.
    """
    if not 1 <= h < len(pv.sigma):
        raise InputError(f"position {h} out of range 1..{len(pv.sigma) - 1}")
    i, j = pv.sigma[h - 1], pv.sigma[h]
    total = pv.entries[h - 1] + pv.entries[h]
    m_i, m_j = psi.m(i), psi.m(j)
    rel = relation(psi, i, j)
    if rel is Relation.PRECEDES:
        gap = psi.a(i) - psi.a(j)
        lo = (m_i + m_j - gap) // 2
        hi = (m_i + m_j + gap) // 2
    elif rel is Relation.CONTAINS:
        lo, hi = m_j, m_i
    elif rel is Relation.CONTAINED:
        lo, hi = m_i, m_j
    else:  # pragma: no cover - admissible arrangements never hit this
        raise InputError(f"position {h} is preceded by position {h + 1}")
    return lo <= total <= hi


def _as_reference(
    psi: GoodParityParameter, p: Sequence[int] | ParamVector
) -> ParamVector:
    if isinstance(p, ParamVector):
        if p.sigma != tuple(range(1, psi.r + 1)):
            raise InputError("expected a vector on the reference arrangement")
        pv = p
    else:
        pv = ParamVector.reference(tuple(p))
    if len(pv.entries) != psi.r:
        raise InputError(f"expected {psi.r} entries, got {len(pv.entries)}")
    return pv


def nonvanishing(
    psi: GoodParityParameter,
    p: Sequence[int] | ParamVector,
    max_r: int = DEFAULT_MAX_R,
) -> Verdict:
    """Full engine: B at every arrangement, C at every adjacent placement."""
    pv = _as_reference(psi, p)
    try:
        sigmas = enumerate_admissible(psi, max_r=max_r)
    except ResourceLimitError as exc:
        raise ResourceLimitError(
            f"{exc}; use nonvanishing_simplified for large r"
        ) from None
    for sigma in sigmas:
        moved = phi(psi, pv, sigma)
        for i in range(1, psi.r + 1):
            if not cond_B(psi, moved, i):
                return Verdict(
                    False,
                    Witness("B", (i,), sigma, (moved.entry_of(i), psi.m(i))),
                )
        for h in range(psi.r - 1):
            i, j = sigma[h], sigma[h + 1]
            values = _c_values(psi, moved, i, j)
            if values[-2] < values[-1]:
                return Verdict(False, Witness("C", (i, j), sigma, values))
    return Verdict(True)


def _adjacent_sigma(
    psi: GoodParityParameter, i: int, j: int
) -> Optional[Permutation]:
    """Greedily bubble components i < j together through containment swaps.

    Swapping an adjacent containment pair never breaks admissibility (the
    admissibility constraint only orders precedence pairs), so any sequence
    of such swaps is legal.  Returns None when blocked on both sides.
    """
    images = list(range(1, psi.r + 1))
    pi, pj = i - 1, j - 1
    while pj - pi > 1:
        left_of_j = images[pj - 1]
        right_of_i = images[pi + 1]
        if relation(psi, left_of_j, j).is_containment:
            images[pj - 1], images[pj] = images[pj], images[pj - 1]
            pj -= 1
        elif relation(psi, i, right_of_i).is_containment:
            images[pi], images[pi + 1] = images[pi + 1], images[pi]
            pi += 1
        else:
            return None
    return tuple(images)


def nonvanishing_simplified(
    psi: GoodParityParameter, p: Sequence[int] | ParamVector
) -> Verdict:
    """Default engine: box condition plus condition C once per neighbor pair."""
    pv = _as_reference(psi, p)
    for i in range(1, psi.r + 1):
        if not cond_B(psi, pv, i):
            return Verdict(
                False, Witness("B", (i,), pv.sigma, (pv.entries[i - 1], psi.m(i)))
            )
    for i in range(1, psi.r + 1):
        for j in range(i + 1, psi.r + 1):
            if not neighbors(psi, i, j):
                continue
            sigma = _adjacent_sigma(psi, i, j)
            if sigma is None:
                pairs = sigma_pairs(psi, i, j)
                if not pairs:  # pragma: no cover - impossible for neighbors
                    raise InputError(f"neighbor pair ({i},{j}) has no placement")
                sigma = pairs[0]

            moved = phi(psi, pv, sigma)
            values = _c_values(psi, moved, i, j)
            if values[-2] < values[-1]:
                return Verdict(False, Witness("C", (i, j), sigma, values))
    return Verdict(True)
