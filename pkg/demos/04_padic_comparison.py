"""
The p-adic side of the picture
==============================

Each entry vector reparametrizes as a pair (l_i, eta_i) per component:
l is the smaller half of the Levi datum and eta a sign tracking partial
length sums.  For an even total size the map is a bijection; for an odd
total it becomes 2-to-1 after a global sign normalization, and the
non-vanishing conditions translate verbatim.
"""

from aqlam import GoodParityParameter, HalfInt, Segment
from aqlam.criterion import nonvanishing
from aqlam.padic import padic_nonvanishing, project_EF, sign_of, to_extended


def halves(b_twice: int, m: int) -> Segment:
    b = HalfInt(b_twice)
    return Segment(b, b - (m - 1))


# n = 6: segments [7/2,5/2], [7/2,5/2], [5/2,3/2]
psi = GoodParityParameter((halves(7, 2), halves(7, 2), halves(5, 2)))

ems = to_extended(psi, (2, 1, 0))
print("l   =", ems.l)
print("eta =", ["+" if e == 1 else "-" for e in ems.eta])
print("sign of the extension:", "+" if sign_of(psi, ems) == 1 else "-")

# Verdicts agree with the real side, vector by vector.
import itertools

agree = all(
    padic_nonvanishing(psi, project_EF(psi, to_extended(psi, p))).nonzero
    == nonvanishing(psi, p).nonzero
    for p in itertools.product(range(3), repeat=3)
)
print("verdicts agree on the whole box:", agree)

# For odd n the images pair up: p and its complement m - p project to
# the same point.
psi_odd = GoodParityParameter.from_components([(5, 2), (4, 3), (3, 2)])
image = lambda p: project_EF(psi_odd, to_extended(psi_odd, p))
print("p=(1,0,2) and complement (1,3,0) project equally:",
      image((1, 0, 2)) == image((1, 3, 0)))
