"""
Admissible arrangements and moving parameters between them
==========================================================

Segments can be listed in any order in which no segment is preceded by
a later one.  A parameter vector lives on one such arrangement; the
transition map transports it to any other, one adjacent swap of a
containment pair at a time, and the result never depends on the path.
"""

from aqlam import GoodParityParameter
from aqlam.arrangements import enumerate_admissible, transposition_path
from aqlam.transition import ParamVector, phi, phi_adjacent

psi = GoodParityParameter.from_components([(12, 3), (10, 5), (7, 6)])

sigmas = enumerate_admissible(psi)
print("admissible arrangements:", sigmas)

pv = ParamVector.reference((2, 2, 2))
moved = phi_adjacent(psi, pv, 1)
print("after swapping positions 1,2:", moved.sigma, moved.entries)
print("swap again, back to the start:", phi_adjacent(psi, moved, 1).entries)

# phi composes the adjacent swaps along a shortest path.
for tau in sigmas:
    path = transposition_path(psi, pv.sigma, tau)
    print(f"to {tau}: path {path} ->", phi(psi, pv, tau).entries)

# Entry sums are preserved: all arrangements describe the same group.
assert all(sum(phi(psi, pv, tau).entries) == 6 for tau in sigmas)
print("entry sums conserved across all arrangements")
