"""Packet enumeration: all parameter vectors, survivors, and invariants.

A packet at a given rank collects every vector p with 0 <= p_i <= m_i and
fixed sum that passes the non-vanishing criterion; each survivor carries
its reduced antitableau and canonical signed rows (a complete invariant
pair), plus the p-adic image when the comparison is in domain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .criterion import nonvanishing_simplified
from .errors import InputError, InvariantViolationError
from .halfint import HalfInt
from .padic import ExtendedMultiSegment, project_EF, to_extended
from .segments import GoodParityParameter, lambda_values
from .tableau import Rows, trapa_reduce

Antitableau = tuple[tuple[HalfInt, ...], ...]


@dataclass(frozen=True)
class PacketEntry:
    p: tuple[int, ...]
    levi: tuple[tuple[int, int], ...]
    lam: tuple[HalfInt, ...]
    antitableau: Antitableau
    rows: Rows
    padic_image: Optional[ExtendedMultiSegment]


def enumerate_params(
    psi: GoodParityParameter, p_rank: int
) -> list[tuple[int, ...]]:
    """All integer vectors in the box summing to p_rank, lexicographic."""
    n = psi.n
    if not 0 <= p_rank <= n:
        raise InputError(f"rank {p_rank} out of range 0..{n}")
    boxes = [range(psi.m(i) + 1) for i in range(1, psi.r + 1)]
    return [p for p in itertools.product(*boxes) if sum(p) == p_rank]


def compute_packet(
    psi: GoodParityParameter, p_rank: int, verify: bool = False
) -> list[PacketEntry]:
    """Entries for exactly the non-vanishing vectors at the given rank.

    The linear-constraint engine decides; survivors are reduced to their
    antitableau.  With ``verify`` the tableau engine re-decides every
    vector and any disagreement raises an invariant violation.
    """
    in_domain = all(psi.seg(i).e >= 0 for i in range(1, psi.r + 1))
    lam = lambda_values(psi)
    entries = []
    for p in enumerate_params(psi, p_rank):
        verdict = nonvanishing_simplified(psi, p)
        if verify or verdict.nonzero:
            reduction = trapa_reduce(psi, p)
            if verify and reduction.nonzero != verdict.nonzero:
                raise InvariantViolationError(
                    f"engines disagree on p={p}: criterion says "
                    f"{verdict.nonzero}, tableau says {reduction.nonzero}"
                )
        if not verdict.nonzero:
            continue
        image = None
        if in_domain:
            image = project_EF(psi, to_extended(psi, p))
        entries.append(
            PacketEntry(
                p=tuple(p),
                levi=tuple((pi, psi.m(i + 1) - pi) for i, pi in enumerate(p)),
                lam=lam,
                antitableau=reduction.antitableau,
                rows=reduction.rows,
                padic_image=image,
            )
        )
    return entries


def multiplicity_report(
    entries: list[PacketEntry],
) -> tuple[bool, list[tuple[PacketEntry, PacketEntry]]]:
    """Check that the (antitableau, rows) invariant pairs are distinct."""
    seen: dict[tuple, PacketEntry] = {}
    collisions = []
    for entry in entries:
        key = (entry.antitableau, entry.rows)
        if key in seen:
            collisions.append((seen[key], entry))
        else:
            seen[key] = entry
    return not collisions, collisions


@dataclass(frozen=True)
class AVReport:
    """Packets across all ranks, with the p-adic fiber audit when possible."""

    packets: dict[int, list[PacketEntry]]
    fiber_sizes: Optional[dict[ExtendedMultiSegment, int]]
    fibers_ok: Optional[bool]

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.packets.values())


def arthur_vogan(psi: GoodParityParameter, verify: bool = False) -> AVReport:
    """Packets for every rank 0..n plus the fiber audit of the p-adic map.

    For n odd each p-adic image must have exactly two preimages (p and its
    complement m - p); for n even the map must be injective.
    """
    packets = {
        rank: compute_packet(psi, rank, verify=verify)
        for rank in range(psi.n + 1)
    }
    in_domain = all(psi.seg(i).e >= 0 for i in range(1, psi.r + 1))
    if not in_domain:
        return AVReport(packets, None, None)
    sizes: dict[ExtendedMultiSegment, int] = {}
    for entries in packets.values():
        for entry in entries:
            sizes[entry.padic_image] = sizes.get(entry.padic_image, 0) + 1
    want = 2 if psi.n % 2 else 1
    ok = all(count == want for count in sizes.values())
    return AVReport(packets, sizes, ok)
