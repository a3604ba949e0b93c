"""Signed-tableau construction and the reduce-to-antitableau-or-zero engine.

This is the second, independent decision procedure.  A parameter vector is
turned into a signed tableau column by column; each column carries a
cumulative box-count type L_{k,i} and a derived filling type
nu_{k;i} = b(nu_k) + 1 - L_{k,i}.  The local rewrite on two adjacent
columns (``trapa_op``) either certifies zero (overlap < singularity) or
performs an elementary operation on the filling segments, implemented
through closed-form type equations.  Iterating the rewrite yields an
antitableau exactly when the parameter is non-vanishing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .arrangements import (
    Permutation,
    appropriate_arrangement,
    enumerate_admissible,
)
from .criterion import Witness
from .errors import AqlamError, InputError, InvariantViolationError
from .halfint import HalfInt
from .segments import (
    GoodParityParameter,
    Relation,
    Segment,
    _relate,
    intersection_size,
)
from .transition import ParamVector, phi

Rows = tuple[tuple[int, str], ...]


class ZeroParameterError(AqlamError):
    """An entry fell outside its box during construction (maps to Zero)."""


def _canonical_rows(rows: Sequence[tuple[int, str]]) -> Rows:
    """Length descending, then '+' rows before '-' rows."""
    return tuple(sorted(rows, key=lambda r: (-r[0], r[1] != "+")))


@dataclass(frozen=True)
class Column:
    """One skew column: its segment and cumulative type L_{k,i}.

    ``L[i]`` counts the boxes of the column lying in its first i
    components; L[0] = 0 and L[height] = m.  Signed counts Lp/Lm are
    recorded on freshly built columns and dropped after rewrites.
    """

    segment: Segment
    L: tuple[int, ...]
    Lp: Optional[tuple[int, ...]] = None
    Lm: Optional[tuple[int, ...]] = None

    @property
    def height(self) -> int:
        return len(self.L) - 1

    @property
    def top(self) -> HalfInt:
        return self.segment.b + 1

    def L_at(self, i: int) -> int:
        if i <= 0:
            return 0
        if i >= self.height:
            return self.L[-1]
        return self.L[i]

    def fill(self, i: int) -> HalfInt:
        """The filling type nu_{k;i} = top - L_{k,i}, extended constantly."""
        return self.top - self.L_at(i)

    def fills(self) -> tuple[HalfInt, ...]:
        return tuple(self.fill(i) for i in range(self.height + 1))


@dataclass(frozen=True)
class TableauState:
    columns: tuple[Column, ...]
    rows: Rows
    sigma: Permutation


@dataclass(frozen=True)
class TrapaZero:
    """Zero certificate: the overlap fell below the singularity."""

    overlap: int
    sing: int


def build_tableau(psi: GoodParityParameter, pv: ParamVector) -> TableauState:
    """Construct the signed tableau for pv, column by column.

    For each new column, pluses extend minus-ending rows longest first,
    minuses extend plus-ending rows longest first, and remainders open new
    rows; the signed type records, for each component range, how many boxes
    of either sign landed there (new rows have unlimited capacity).
    """
    rows: list[tuple[int, str]] = []
    columns: list[Column] = []
    for k, comp in enumerate(pv.sigma, start=1):
        seg = psi.seg(comp)
        p, m = pv.entries[k - 1], seg.m
        q = m - p
        if not 0 <= p <= m:
            raise ZeroParameterError(
                f"entry {p} for component {comp} outside box [0, {m}]"
            )
        Lp, Lm = [0], [0]
        for i in range(1, k + 1):
            if i == k:
                Lp.append(p)
                Lm.append(q)
            else:
                plus_ends = sum(1 for ln, s in rows if ln >= k - i and s == "+")
                minus_ends = sum(1 for ln, s in rows if ln >= k - i and s == "-")
                Lp.append(min(minus_ends, p))
                Lm.append(min(plus_ends, q))
        L = tuple(a + b for a, b in zip(Lp, Lm))
        columns.append(Column(seg, L, tuple(Lp), tuple(Lm)))

        minus_rows = sorted((r for r in rows if r[1] == "-"), reverse=True)
        plus_rows = sorted((r for r in rows if r[1] == "+"), reverse=True)
        new_rows = []
        new_rows += [(ln + 1, "+") for ln, _ in minus_rows[:p]]
        new_rows += [(ln, "-") for ln, _ in minus_rows[p:]]
        new_rows += [(ln + 1, "-") for ln, _ in plus_rows[:q]]
        new_rows += [(ln, "+") for ln, _ in plus_rows[q:]]
        new_rows += [(1, "+")] * max(0, p - len(minus_rows))
        new_rows += [(1, "-")] * max(0, q - len(plus_rows))
        rows = new_rows
    return TableauState(tuple(columns), _canonical_rows(rows), pv.sigma)


def overlap(state: TableauState, k: int) -> int:
    """Overlap of columns at positions k and k+1 (1-based), clamped at 0."""
    if not 1 <= k < len(state.columns):
        raise InputError(f"column position {k} out of range")
    return _overlap(state.columns[k - 1], state.columns[k])


def _overlap(left: Column, right: Column) -> int:
    m = left.segment.m
    val = min(right.L_at(i) - left.L_at(i) + m for i in range(left.height + 1))
    return max(0, val)


def trapa_op(
    left: Column, right: Column
) -> Union[TrapaZero, tuple[Column, Column]]:
    """The local rewrite on two adjacent columns.

    Zero when overlap < singularity; a no-op when the left segment precedes
    the right; otherwise the elementary operation on the filling segments,
    realized by the closed-form type equations.  The merged shape
    L'_{right,i} + L'_{left,i-1} is conserved.
    """
    rel = _relate(left.segment, right.segment, tie=Relation.CONTAINS)
    if rel is Relation.PRECEDED_BY:
        raise InputError(
            f"right segment {right.segment} precedes left {left.segment}"
        )
    ov = _overlap(left, right)
    sing = intersection_size(left.segment, right.segment)
    if ov < sing:
        return TrapaZero(ov, sing)
    if rel is Relation.PRECEDES:
        return left, right

    top = max(left.height, right.height)
    d = [int(left.fill(j) - right.fill(j)) for j in range(top + 1)]

    def delta(i: int) -> Optional[int]:
        if rel is Relation.CONTAINS:
            window = d[:i]
        else:
            window = d[i:]
        return min(window) if window else None

    def shift_right(i: int) -> int:
        dlt = delta(i)
        return min(0, dlt) if dlt is not None else 0

    new_right_fills = [
        right.fill(i) + shift_right(i) for i in range(right.height + 1)
    ]
    new_left_fills = [
        left.fill(i) - shift_right(i + 1) for i in range(left.height + 1)
    ]
    new_left = _column_from_fills(new_left_fills)
    new_right = _column_from_fills(new_right_fills)

    # Self-checks: the rewrite must produce the elementary-operation pair
    # of segments and conserve the merged shape.
    pair = {left.segment, right.segment}
    bs = sorted((s.b for s in pair), reverse=True)
    es = sorted((s.e for s in pair), reverse=True)
    want = (Segment(bs[0], es[0]), Segment(bs[-1], es[-1]))
    if (new_left.segment, new_right.segment) != want:
        raise InvariantViolationError(
            f"rewrite produced segments {new_left.segment}, "
            f"{new_right.segment}; expected {want[0]}, {want[1]}"
        )
    for i in range(right.height + 2):
        before = right.L_at(i) + left.L_at(i - 1)
        after = new_right.L_at(i) + new_left.L_at(i - 1)
        if before != after:
            raise InvariantViolationError(
                f"merged shape not conserved at i={i}: {before} != {after}"
            )
    return new_left, new_right


def _column_from_fills(fills: Sequence[HalfInt]) -> Column:
    top = fills[0]
    L = tuple(int(top - f) for f in fills)
    if any(L[i] > L[i + 1] for i in range(len(L) - 1)):
        raise InvariantViolationError(f"fill types not weakly decreasing: {fills}")
    return Column(Segment(top - 1, fills[-1]), L)


def validate_antitableau(state: TableauState) -> bool:
    """True iff nu_{k;i} >= nu_{k+1;i} for all adjacent columns and all i."""
    for left, right in zip(state.columns, state.columns[1:]):
        for i in range(right.height + 1):
            if left.fill(i) < right.fill(i):
                return False
    return True


def _antitableau_grid(state: TableauState) -> tuple[tuple[HalfInt, ...], ...]:
    """Reconstruct the filled rows from column types.

    Grid column c stacks, for k = c..r, the entries of component k+1-c of
    state column k: the run nu_{k;i-1} - 1 down to nu_{k;i} with i = k+1-c.
    """
    r = len(state.columns)
    grid_cols: list[list[HalfInt]] = []
    for c in range(1, r + 1):
        col: list[HalfInt] = []
        for k in range(c, r + 1):
            i = k + 1 - c
            column = state.columns[k - 1]
            hi = column.fill(i - 1)
            lo = column.fill(i)
            count = int(hi - lo)
            col += [hi - 1 - t for t in range(count)]
        grid_cols.append(col)
    height = max(len(c) for c in grid_cols)
    rows = []
    for t in range(height):
        rows.append(tuple(c[t] for c in grid_cols if len(c) > t))
    return tuple(rows)


@dataclass(frozen=True)
class Reduction:
    """Outcome of the full reduce: a zero certificate or an antitableau."""

    zero: Optional[Witness]
    antitableau: Optional[tuple[tuple[HalfInt, ...], ...]] = None
    rows: Optional[Rows] = None
    state: Optional[TableauState] = None

    @property
    def nonzero(self) -> bool:
        return self.zero is None


def _zero_reduction(witness: Witness) -> Reduction:
    return Reduction(zero=witness)


def _insert_leftward(
    columns: list[Column], start: int, sigma: Permutation
) -> Optional[Witness]:
    """Bubble the column at position start (1-based) leftward.

    Applies the rewrite at (pos, pos+1) for pos = start-1 down to 1,
    stopping at a precedence (no-op) pair or the left wall.  Returns a
    zero witness or None.
    """
    for pos in range(start - 1, 0, -1):
        left, right = columns[pos - 1], columns[pos]
        rel = _relate(left.segment, right.segment, tie=Relation.CONTAINS)
        result = trapa_op(left, right)
        if isinstance(result, TrapaZero):
            return Witness(
                "overlap", (pos, pos + 1), sigma, (result.overlap, result.sing)
            )
        columns[pos - 1], columns[pos] = result
        if rel is Relation.PRECEDES:
            break
    return None


def trapa_reduce(
    psi: GoodParityParameter, p: Sequence[int] | ParamVector
) -> Reduction:
    """Reduce a reference-order parameter to an antitableau, or certify zero.

    The vector is transported to the canonical arrangement, the signed
    tableau is built, and each column is bubbled leftward through the local
    rewrite as it arrives.
    """
    if not isinstance(p, ParamVector):
        p = ParamVector.reference(tuple(p))
    sigma = appropriate_arrangement(psi)
    pv = phi(psi, p, sigma)
    try:
        state = build_tableau(psi, pv)
    except ZeroParameterError:
        for h, comp in enumerate(pv.sigma):
            entry = pv.entries[h]
            if not 0 <= entry <= psi.m(comp):
                return _zero_reduction(
                    Witness("B", (comp,), sigma, (entry, psi.m(comp)))
                )
        raise  # pragma: no cover
    columns = list(state.columns)
    for k in range(2, len(columns) + 1):
        witness = _insert_leftward(columns, k, sigma)
        if witness is not None:
            return _zero_reduction(witness)
    final = TableauState(tuple(columns), state.rows, sigma)
    if not validate_antitableau(final):
        raise InvariantViolationError(
            f"reduction finished on a non-antitableau state for p={p.entries}"
        )
    return Reduction(None, _antitableau_grid(final), final.rows, final)


def reduce_with_schedule(
    psi: GoodParityParameter,
    p: Sequence[int] | ParamVector,
    rng: random.Random,
) -> Reduction:
    """Like trapa_reduce, but applies the rewrite in a random valid order.

    Used to exercise confluence: the final antitableau must not depend on
    the schedule.
    """
    if not isinstance(p, ParamVector):
        p = ParamVector.reference(tuple(p))
    sigma = appropriate_arrangement(psi)
    pv = phi(psi, p, sigma)
    try:
        state = build_tableau(psi, pv)
    except ZeroParameterError:
        return trapa_reduce(psi, p)
    columns = list(state.columns)
    while True:
        pending: list[tuple[int, Union[TrapaZero, tuple[Column, Column]]]] = []
        for pos in range(1, len(columns)):
            left, right = columns[pos - 1], columns[pos]
            rel = _relate(left.segment, right.segment, tie=Relation.CONTAINS)
            if rel is Relation.PRECEDED_BY:
                continue
            result = trapa_op(left, right)
            if isinstance(result, TrapaZero):
                pending.append((pos, result))
                continue
            changed = (result[0].segment, result[0].L, result[1].segment, result[1].L) != (
                left.segment,
                left.L,
                right.segment,
                right.L,
            )
            if changed:
                pending.append((pos, result))
        if not pending:
            break
        pos, result = pending[rng.randrange(len(pending))]
        if isinstance(result, TrapaZero):
            return _zero_reduction(
                Witness("overlap", (pos, pos + 1), sigma, (result.overlap, result.sing))
            )
        columns[pos - 1], columns[pos] = result
    final = TableauState(tuple(columns), state.rows, sigma)
    if not validate_antitableau(final):
        raise InvariantViolationError("random schedule stalled before antitableau")
    return Reduction(None, _antitableau_grid(final), final.rows, final)


def last_column_type(
    psi: GoodParityParameter, p: Sequence[int] | ParamVector
) -> tuple[HalfInt, ...]:
    """Pointwise minimum of the built last-column types over all arrangements.

    Defined only for non-vanishing parameters; equals the last column of
    the reduced antitableau (a tested identity).
    """
    if not isinstance(p, ParamVector):
        p = ParamVector.reference(tuple(p))
    reduction = trapa_reduce(psi, p)
    if not reduction.nonzero:
        raise InputError("last-column type is undefined for a zero parameter")
    best: Optional[list[HalfInt]] = None
    for sigma in enumerate_admissible(psi):
        state = build_tableau(psi, phi(psi, p, sigma))
        fills = state.columns[-1].fills()
        if best is None:
            best = list(fills)
        else:
            best = [min(a, b) for a, b in zip(best, fills)]
    assert best is not None
    return tuple(best)


def upper_bound_check(
    prefix: Sequence[Column], last: Column, h: Optional[int] = None
) -> bool:
    """Decide non-zero insertion of a final column into an antitableau prefix.

    The prefix columns mu_1..mu_{r-1} must satisfy mu_{k;i} >= mu_{k+1;i},
    with mu_1..mu_h preceding the new segment and the rest contained in it.
    Evaluates the two quantified-minimum inequalities: chains
    i = j_0 > j_1 > ... walk down the prefix columns from the newest to
    column h, accumulating type differences.
    """
    prefix = list(prefix)
    r = len(prefix) + 1
    for a, b in zip(prefix, prefix[1:]):
        hi = max(a.height, b.height) + 1
        if any(a.fill(i) < b.fill(i) for i in range(hi + 1)):
            raise InputError("prefix columns are not an antitableau")
    rels = [
        _relate(c.segment, last.segment, tie=Relation.CONTAINS) for c in prefix
    ]
    if h is None:
        h = sum(1 for rel in rels if rel is Relation.PRECEDES)
    if rels[:h] != [Relation.PRECEDES] * h or any(
        rel is not Relation.CONTAINED for rel in rels[h:]
    ):
        raise InputError(
            "prefix must split into preceding segments followed by contained ones"
        )
    steps = r - h - 1  # chain length for inequality (a)

    def mu(k: int, j: int) -> HalfInt:
        return prefix[k - 1].fill(j)

    floor = -steps - 1
    for i in range(last.height + 1):
        # (a) full chains of length `steps`, then anchor at column h;
        # with no preceding column there is no anchor and (a) is vacuous
        if h == 0:
            bound_a = None
        elif steps == 0:
            bound_a = mu(h, i)
        else:
            best: dict[int, HalfInt] = {}  # j -> partial min, walking steps
            level = {i: HalfInt(0)}
            for s in range(1, steps + 1):
                nxt: dict[int, HalfInt] = {}
                for j0, acc in level.items():
                    for j1 in range(floor, j0):
                        cand = acc + (mu(r - s, j0) - mu(r - s, j1))
                        if j1 not in nxt or cand < nxt[j1]:
                            nxt[j1] = cand
                level = nxt
            bound_a = min(acc + mu(h, j) for j, acc in level.items())
        if bound_a is not None and last.fill(i) > bound_a:
            return False
        # (b) chains of any length 1..steps ending exactly at 0
        bound_b: Optional[HalfInt] = None
        level = {i: HalfInt(0)}
        for s in range(1, steps + 1):
            nxt = {}
            for j0, acc in level.items():
                if j0 > 0:
                    cand = acc + (mu(r - s, j0) - mu(r - s, 0))
                    if bound_b is None or cand < bound_b:
                        bound_b = cand
                for j1 in range(1, j0):
                    cand = acc + (mu(r - s, j0) - mu(r - s, j1))
                    if j1 not in nxt or cand < nxt[j1]:
                        nxt[j1] = cand
            level = nxt
        if bound_b is not None and last.fill(i) - last.fill(0) > int(bound_b):
            return False
    return True
