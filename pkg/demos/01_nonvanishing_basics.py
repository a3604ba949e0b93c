"""
Deciding non-vanishing from segment data
========================================

A parameter is a list of decreasing half-integer segments, one per
component, plus an entry vector p with 0 <= p_i <= m_i.  The criterion
engine answers "does this parametrize a nonzero module?" and, when the
answer is no, hands back the violated inequality.
"""

from aqlam import GoodParityParameter
from aqlam.criterion import nonvanishing

# The running example: three segments of lengths 3, 5, 6 with centers
# a = (12, 10, 7), written as [7,5], [7,3], [6,1].
psi = GoodParityParameter.from_components([(12, 3), (10, 5), (7, 6)])
for i in range(1, 4):
    print(f"component {i}: {psi.seg(i)}  (m = {psi.m(i)})")

verdict = nonvanishing(psi, (2, 2, 2))
print("p = (2,2,2) survives:", verdict.nonzero)

# Shrink the middle segment to [6,2] and the same vector dies: the two
# lower segments now share 5 points but the Levi data only covers 4.
psi_bad = GoodParityParameter.from_components([(12, 3), (8, 5), (7, 6)])
verdict = nonvanishing(psi_bad, (2, 2, 2))
print("after shrinking:", verdict.nonzero)
w = verdict.witness
print(f"witness: condition {w.kind} at components {w.indices}, "
      f"lhs {w.values[-2]} < required {w.values[-1]}")

# Every vector in the box can be scanned the same way.
survivors = [
    p
    for p in __import__("itertools").product(range(4), range(6), range(7))
    if nonvanishing(psi, p).nonzero
]
print(f"{len(survivors)} of 168 vectors in the box survive")
