"""
The signed-tableau engine
=========================

The same question answered geometrically: each component contributes a
column, columns are merged by a local rewrite, and the parameter
survives exactly when the rewrites terminate in an antitableau.  The
final antitableau together with the canonical signed rows is a complete
invariant of the module.
"""

import random

from aqlam import GoodParityParameter
from aqlam.tableau import (
    build_tableau,
    overlap,
    reduce_with_schedule,
    trapa_reduce,
)
from aqlam.transition import ParamVector

psi = GoodParityParameter.from_components([(12, 3), (10, 5), (7, 6)])
p = (2, 2, 2)

state = build_tableau(psi, ParamVector.reference(p))
print("column overlaps:", overlap(state, 1), overlap(state, 2))
print("signed rows of the raw build:", state.rows)

reduction = trapa_reduce(psi, p)
print("reduced antitableau:")
for row in reduction.antitableau:
    print("  ", " ".join(str(x) for x in row))
print("canonical rows:", reduction.rows)

# The rewrite order does not matter; any valid schedule lands on the
# same antitableau.
rng = random.Random(0)
for trial in range(3):
    again = reduce_with_schedule(psi, p, rng)
    assert again.antitableau == reduction.antitableau
print("three random schedules agree with the leftward one")

# A vanishing parameter is certified by an overlap that falls below the
# intersection size of the colliding columns.
psi_bad = GoodParityParameter.from_components([(12, 3), (8, 5), (7, 6)])
zero = trapa_reduce(psi_bad, p)
print("vanishing case witness:", zero.zero)
