"""Building-block registry and its internal consistency checks."""

import pytest

from charvar import blocks
from charvar.blocks import (SelfCheckFailed, UnknownBlock, blocks_selfcheck,
                            rep_to_labels)
from charvar.polyring import IntPoly, ONE, Q
from charvar.repring import Character, HMRep, MonodromyGroup


def test_lookup_and_unknown():
    entry = blocks.block("e_SL2")
    assert entry.value == IntPoly.parse("q^3 - q")
    assert entry.citation
    with pytest.raises(UnknownBlock):
        blocks.block("e_nothing")


def test_typed_accessors():
    assert blocks.poly("e_X0") == IntPoly.parse("q^4 + 4q^3 - q^2 - 4q")
    r = blocks.rep("R_X4bar")
    assert r.coefficient(blocks.CHAR_T1) == IntPoly.parse("q^3 - 1")
    assert r.coefficient(blocks.CHAR_N) == IntPoly.parse("3q^2 - 3q")
    with pytest.raises(UnknownBlock):
        blocks.poly("R_X4bar")
    with pytest.raises(UnknownBlock):
        blocks.rep("e_X0")


def test_block_names_cover_both_kinds():
    names = blocks.block_names()
    assert "R_X4barZ2" in names
    assert "e_Y4lambdabar" in names
    assert len(names) == len(set(names))


def test_rep_to_labels():
    assert rep_to_labels(blocks.rep("R_X4barZ2")) == {
        "T": IntPoly.parse("q^3"),
        "S2": IntPoly.parse("-3q"),
        "S-2": IntPoly.parse("3q^2"),
        "S0": IntPoly.parse("-1"),
    }
    rank1 = rep_to_labels(blocks.rep("R_X4bar"))
    assert set(rank1) == {"T", "N"}
    with pytest.raises(ValueError):
        rep_to_labels(HMRep(MonodromyGroup(3, ("a", "b", "c")),
                            {Character((0, 0, 0)): ONE}))


def test_rep_to_labels_drops_zero_terms():
    r = HMRep(blocks.Z2_GROUP, {blocks.CHAR_T1: Q})
    assert rep_to_labels(r) == {"T": Q}


def test_selfcheck_passes_and_names_everything():
    assert blocks_selfcheck() == [
        "punctured_line_reproduces_union_fiber",
        "punctured_line_reproduces_quotient_fiber",
        "collapse_relates_the_two_representations",
        "conjugation_quotient_reproduces_total",
        "genus1_strata_partition_the_group",
    ]


def test_selfcheck_failure_carries_both_sides():
    failure = SelfCheckFailed("demo", ONE, Q)
    assert failure.name == "demo"
    assert failure.got == ONE
    assert failure.want == Q


def test_genus1_fiber_blocks_partition():
    # fibers over the five class types add up to the full group count
    total = (blocks.poly("e_X0") + blocks.poly("e_X1")
             + (Q * Q - 1) * (blocks.poly("e_X2bar") + blocks.poly("e_X3bar"))
             + blocks.poly("e_X4"))
    assert total == blocks.poly("e_SL2") ** 2
