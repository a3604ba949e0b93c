import random

import pytest

from aqlam import GoodParityParameter, intersection_size
from aqlam.criterion import (
    cond_B,
    cond_C,
    nonvanishing,
    nonvanishing_simplified,
)
from aqlam.errors import InputError
from aqlam.transition import ParamVector

from conftest import box, random_entry_vector, random_parameter, seg


def test_fixture_nonzero(psi_A):
    verdict = nonvanishing(psi_A, (2, 2, 2))
    assert verdict.nonzero
    assert verdict.witness is None
    assert bool(verdict)


def test_fixture_zero_with_witness(psi_B):
    verdict = nonvanishing(psi_B, (2, 2, 2))
    assert not verdict.nonzero
    w = verdict.witness
    assert w.kind == "C"
    assert w.indices == (2, 3)
    # lhs 4 against an intersection of size 5
    assert w.values[-2:] == (4, 5)


def test_out_of_box_is_zero(psi_A):
    # the parameter space extends beyond the box; condition B catches it
    verdict = nonvanishing(psi_A, (4, 2, 0))
    assert not verdict.nonzero
    assert verdict.witness.kind == "B"


def test_wrong_length_rejected(psi_A):
    with pytest.raises(InputError):
        nonvanishing(psi_A, (2, 2))


def test_cond_B(psi_A):
    pv = ParamVector.reference((2, 2, 2))
    assert all(cond_B(psi_A, pv, i) for i in (1, 2, 3))
    # after a containment swap the transported entry can leave the box
    bad = ParamVector(entries=(9, -1, 2), sigma=(1, 2, 3))
    assert not cond_B(psi_A, bad, 2)


def test_cond_C_requires_adjacency(psi_A):
    pv = ParamVector.reference((2, 2, 2))
    with pytest.raises(InputError):
        cond_C(psi_A, pv, 1, 3)


def test_r1_never_vanishes():
    psi = GoodParityParameter((seg(5, 4),))
    for p in range(5):
        assert nonvanishing(psi, (p,)).nonzero


def test_r2_closed_form_spot():
    psi = GoodParityParameter((seg(7, 5), seg(7, 3)))
    sing = intersection_size(psi.seg(1), psi.seg(2))
    for p in box(psi):
        expected = (
            min(p[0], psi.m(2) - p[1]) + min(psi.m(1) - p[0], p[1]) >= sing
        )
        assert nonvanishing(psi, p).nonzero == expected
        assert nonvanishing_simplified(psi, p).nonzero == expected


def test_engines_agree_on_random_instances():
    rng = random.Random(31)
    for _ in range(150):
        psi = random_parameter(rng, rng.randint(1, 4), b_max=7, m_max=4)
        p = random_entry_vector(rng, psi)
        assert (
            nonvanishing(psi, p).nonzero
            == nonvanishing_simplified(psi, p).nonzero
        )


def test_verdict_witness_reports_transported_values(psi_B):
    w = nonvanishing(psi_B, (2, 2, 2)).witness
    # the witness carries (p_i, q_i, p_j, q_j, lhs, sing) at the failing order
    p_i, q_i, p_j, q_j, lhs, sing = w.values
    assert min(p_i, q_j) + min(q_i, p_j) == lhs
    assert lhs < sing
