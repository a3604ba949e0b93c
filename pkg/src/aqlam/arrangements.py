"""Admissible arrangements and paths between them.

A permutation is a tuple of 1-based images (sigma(1), ..., sigma(r)):
position h of the arrangement carries component sigma(h).  An arrangement
is admissible when no earlier position is preceded by a later one; the set
of admissible permutations is written Sigma_r.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InputError, ResourceLimitError
from .segments import (
    GoodParityParameter,
    Relation,
    arrangement_is_admissible,
    relation,
)

Permutation = tuple[int, ...]

DEFAULT_MAX_R = 8


def perm_inverse(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for pos, img in enumerate(sigma, start=1):
        inv[img - 1] = pos
    return tuple(inv)


def perm_inversions(sigma: Permutation) -> int:
    return sum(
        1
        for h in range(len(sigma))
        for k in range(h + 1, len(sigma))
        if sigma[h] > sigma[k]
    )


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma o tau)(h) = sigma(tau(h))."""
    return tuple(sigma[t - 1] for t in tau)


def is_admissible(psi: GoodParityParameter, sigma: Sequence[int]) -> bool:
    """True iff no position h < k has the segment at h preceded by the one at k."""
    return arrangement_is_admissible(psi, sigma)


def enumerate_admissible(
    psi: GoodParityParameter, max_r: int = DEFAULT_MAX_R
) -> list[Permutation]:
    """All admissible permutations, in lexicographic order of image lists.

    DFS over positions with pruning: a partial arrangement is extended by a
    component only if no already-placed component is preceded by it.
    """
    r = psi.r
    if r > max_r:
        raise ResourceLimitError(
            f"r={r} exceeds the arrangement bound {max_r}; raise max_r to override"
        )
    out: list[Permutation] = []
    prefix: list[int] = []
    used = [False] * (r + 1)

    def extend() -> None:
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for i in range(1, r + 1):
            if used[i]:
                continue
            if any(relation(psi, h, i) is Relation.PRECEDED_BY for h in prefix):
                continue
            used[i] = True
            prefix.append(i)
            extend()
            prefix.pop()
            used[i] = False

    extend()
    return out


def sigma_pairs(
    psi: GoodParityParameter, i: int, j: int, max_r: int = DEFAULT_MAX_R
) -> list[Permutation]:
    """The admissible permutations placing components i and j adjacently.

    Empty iff some k lies strictly between i and j in the precedence order.
    """
    if i == j:
        raise InputError(f"sigma_pairs needs distinct indices, got ({i}, {j})")
    out = []
    for sigma in enumerate_admissible(psi, max_r=max_r):
        inv = perm_inverse(sigma)
        if abs(inv[i - 1] - inv[j - 1]) == 1:
            out.append(sigma)
    return out


def transposition_path(
    psi: GoodParityParameter, sigma: Sequence[int], tau: Sequence[int]
) -> list[int]:
    """Adjacent-transposition path from arrangement sigma to tau.

    Returns positions h (1-based) such that successively swapping positions
    (h, h+1) turns sigma into tau.  Every intermediate arrangement is
    admissible, and the length equals the inversion count of sigma^{-1} tau:
    the path is a geodesic, and on a geodesic no pair is swapped twice, so
    no pair can leave and re-enter its (shared, admissible) relative order.
    """
    sigma = tuple(sigma)
    tau = tuple(tau)
    for name, perm in (("sigma", sigma), ("tau", tau)):
        if not is_admissible(psi, perm):
            raise InputError(f"{name}={perm} is not admissible")
    # Bubble-sort sigma towards tau's order; each swap fixes one inversion.
    rank = {img: pos for pos, img in enumerate(tau)}
    work = [rank[img] for img in sigma]
    path: list[int] = []
    changed = True
    while changed:
        changed = False
        for h in range(len(work) - 1):
            if work[h] > work[h + 1]:
                work[h], work[h + 1] = work[h + 1], work[h]
                path.append(h + 1)
                changed = True
    return path


def appropriate_arrangement(psi: GoodParityParameter) -> Permutation:
    """The canonical arrangement used by the tableau engine.

    Sorts components by end descending, then beginning ascending, then
    index; in the result every earlier segment either precedes or is
    contained in every later one.
    """
    order = sorted(
        range(1, psi.r + 1),
        key=lambda i: (-psi.seg(i).e.twice, psi.seg(i).b.twice, i),
    )
    return tuple(order)
