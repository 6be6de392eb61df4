"""Strata of untwisted genus-3 tuples and the character variety E-polynomial.

6-tuples with commutator product Id split by the class of the partial
product of the first two commutators; the diagonalizable cell reuses the
genus-2 quotient-base monodromy. The reducible locus is handled separately
and the final value combines the reducible quotient with the free part.
"""

from __future__ import annotations

import math

from . import blocks, fibcalc, genus2, reference
from .polyring import IntPoly, Q, poly_div_exact
from .repring import HMRep, rep_collapse, rep_tensor


class CrossCheckFailed(AssertionError):
    """Two independent routes to the same value disagree."""

    def __init__(self, what: str, first, second):
        super().__init__("%s: %s vs %s" % (what, first, second))
        self.what = what
        self.first = first
        self.second = second


def v_strata() -> "list[IntPoly]":
    """Cells over the central and trace-degenerate partial product classes."""
    orbit = Q * Q - 1
    return [
        reference.check("e_v0", blocks.poly("e_Y0") * blocks.poly("e_X0")),
        reference.check("e_v1", blocks.poly("e_Y1") * blocks.poly("e_X1")),
        reference.check("e_v2",
                        orbit * blocks.poly("e_Y2bar") * blocks.poly("e_X2bar")),
        reference.check("e_v3",
                        orbit * blocks.poly("e_Y3bar") * blocks.poly("e_X3bar")),
    ]


def compute_r_v4_z2() -> HMRep:
    """Tensor the genus-2 quotient-base monodromy with the line family."""
    return reference.check(
        "r_v4_z2",
        rep_tensor(genus2.solve_ry4z2(), blocks.rep("R_X4barZ2")))


def compute_e_v4() -> IntPoly:
    """Diagonalizable cell, via the closed formula and the fibration route."""
    r = compute_r_v4_z2()
    at = r.coefficient(blocks.CHAR_T2)
    bt = r.coefficient(blocks.CHAR_S2)
    ct = r.coefficient(blocks.CHAR_SM2)
    dt = r.coefficient(blocks.CHAR_S0)
    closed = (Q * (Q * Q - 2 * Q - 1) * at
              - Q * (Q + 1) * (bt + ct) - 2 * Q * dt)

    fibration = fibcalc.e_pgl_d_quotient(
        fibcalc.e_punctured_line(r, 2),
        fibcalc.e_punctured_line(rep_collapse(blocks.COLLAPSE_MAP, r), 3))
    if closed != fibration:
        raise CrossCheckFailed("diagonalizable cell", closed, fibration)
    return reference.check("e_v4", closed)


def _split_by_inversion(xp: IntPoly, xm: IntPoly,
                        yp: IntPoly, ym: IntPoly) -> "tuple[IntPoly, IntPoly]":
    """Invariant and anti-invariant parts of a product of two Z2-spaces."""
    return fibcalc.e_z2_product(xp, xm, yp, ym), xp * ym + xm * yp


def reducible_locus() -> "tuple[IntPoly, IntPoly]":
    """Simultaneously reducible tuples, upstairs and in the quotient."""
    cells = _reducible_cells()
    return cells[4], cells[5]


def _reducible_cells() -> "tuple[IntPoly, ...]":
    # Six C* eigenvalue coordinates carrying the simultaneous inversion;
    # each factor contributes (q, -1) to the (invariant, anti) pair.
    xp, xm = Q, IntPoly([-1])
    for _ in range(5):
        xp, xm = _split_by_inversion(xp, xm, Q, IntPoly([-1]))

    e_m_red = IntPoly()
    for k in range(0, 7, 2):
        e_m_red = e_m_red + math.comb(6, k) * Q ** (6 - k)
    if e_m_red != xp:
        raise CrossCheckFailed("reducible quotient", e_m_red, xp)
    reference.check("e_m_red", e_m_red)

    # Remove the 64 central tuples, which are inversion-fixed, before
    # crossing with the conjugation orbit of the diagonal torus.
    e_r1 = reference.check(
        "e_r1",
        fibcalc.e_z2_product(xp - 64, xm,
                             blocks.poly("e_PGL2_over_D_plus"),
                             blocks.poly("e_PGL2_over_D_minus")))
    e_r2 = reference.check(
        "e_r2",
        poly_div_exact(((Q - 1) ** 6 - 64) * (Q ** 5 - Q) * (Q ** 3 - Q),
                       Q * Q - Q))
    e_r3 = reference.check("e_r3", IntPoly([64]))
    e_r4 = reference.check(
        "e_r4", 64 * poly_div_exact(Q ** 6 - 1, Q - 1) * (Q * Q - 1))

    e_v_red = reference.check("e_v_red", e_r1 + e_r2 + e_r3 + e_r4)
    return e_r1, e_r2, e_r3, e_r4, e_v_red, e_m_red


def character_variety_total() -> "tuple[IntPoly, IntPoly, IntPoly]":
    """Assemble e(V), the irreducible quotient, and the final value."""
    cells = v_strata()
    e_v = cells[0] + cells[1] + cells[2] + cells[3] + compute_e_v4()
    reference.check("e_v_total", e_v)

    e_v_red, e_m_red = reducible_locus()
    e_v_irr = reference.check("e_v_irr", e_v - e_v_red)
    e_m_irr = reference.check(
        "e_m_irr", poly_div_exact(e_v_irr, blocks.poly("e_PGL2")))
    e_m = reference.check("e_m", e_m_red + e_m_irr)
    return e_v, e_m_irr, e_m


class UntwistedPipeline:
    """All untwisted cells, the reducible locus, and the final polynomial."""

    __slots__ = ("e_v0", "e_v1", "e_v2", "e_v3", "e_v4", "r_v4_z2", "e_v",
                 "e_r1", "e_r2", "e_r3", "e_r4", "e_v_red", "e_m_red",
                 "e_v_irr", "e_m_irr", "e_m")

    @classmethod
    def run(cls) -> "UntwistedPipeline":
        self = cls.__new__(cls)
        self.e_v0, self.e_v1, self.e_v2, self.e_v3 = v_strata()
        self.r_v4_z2 = compute_r_v4_z2()
        self.e_v4 = compute_e_v4()
        (self.e_r1, self.e_r2, self.e_r3, self.e_r4,
         self.e_v_red, self.e_m_red) = _reducible_cells()
        self.e_v, self.e_m_irr, self.e_m = character_variety_total()
        self.e_v_irr = self.e_v - self.e_v_red
        return self
