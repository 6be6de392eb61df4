"""Six-stratum assembly of the twisted genus-3 count and its E-polynomial.

6-tuples (A1,B1,...,A3,B3) in SL(2,C) with [A1,B1][A2,B2][A3,B3] = -Id are
stratified by the geometry of the three pair commutators: all traces
degenerate, trace triple on the degenerate lines, on the degenerate planes,
commutators sharing exactly one eigenvector, diagonalizable triples on the
trace surface, and the open remainder. Every stratum is derived from the
genus-1 and genus-2 blocks and checked against its frozen value.
"""

from __future__ import annotations

from . import blocks, fibcalc, reference
from .polyring import IntPoly, Q, poly_div_exact
from .repring import Character, CharMap, HMRep, MonodromyGroup, rep_e_map, rep_pullback, rep_tensor

# Rank-2 group for extensions with two independent eigenvalue parameters.
_PAIR_GROUP = MonodromyGroup(2, ("first-eigenvalue", "second-eigenvalue"))
_TWO_MINUS_ONE = IntPoly([-1, 0, 1])


def stratum_points() -> IntPoly:
    """Cells with all three commutator traces in {2, -2}."""
    x0 = blocks.poly("e_X0")
    x1 = blocks.poly("e_X1")
    x2 = blocks.poly("e_X2bar")
    x3 = blocks.poly("e_X3bar")
    orbit = _TWO_MINUS_ONE

    e_w11 = reference.check("e_w11", Q * x2 ** 3 * orbit)
    e_w12 = reference.check(
        "e_w12",
        3 * x0 * (x0 * x1 + orbit * x2 * x3)
        + 3 * x2 * ((Q - 2) * x2 * x3 + x2 * x1 + x3 * x0) * orbit)
    e_w13 = reference.check("e_w13", 3 * Q * x3 ** 2 * x2 * orbit)
    e_w14 = reference.check(
        "e_w14",
        x1 * (x1 ** 2 + orbit * x3 ** 2)
        + x3 * ((Q - 2) * x3 ** 2 + 2 * x3 * x1) * orbit)
    return reference.check("e_w1", e_w11 + e_w12 + e_w13 + e_w14)


def stratum_lines() -> IntPoly:
    """Cells whose trace triple lies on the degenerate lines."""
    x0 = blocks.poly("e_X0")
    x1 = blocks.poly("e_X1")
    x2 = blocks.poly("e_X2bar")
    x3 = blocks.poly("e_X3bar")
    x4z2 = blocks.poly("e_X4barZ2")
    orbit = _TWO_MINUS_ONE

    line_factor = Q * (x2 + x3) * x4z2
    e_w21 = reference.check("e_w21", x2 * orbit * line_factor)
    e_w22 = reference.check("e_w22", x3 * orbit * line_factor)
    e_w23 = reference.check("e_w23", x0 * blocks.poly("e_g2_W4"))
    e_w24 = reference.check("e_w24", x2 * orbit * blocks.poly("e_g2_Z5_s12"))
    e_w25 = reference.check("e_w25", x1 * blocks.poly("e_g2_Y4corr"))
    e_w26 = reference.check("e_w26", x3 * orbit * blocks.poly("e_g2_Z5_s11"))
    total = 3 * (e_w21 + e_w22 + e_w23 + e_w24 + e_w25 + e_w26)
    return reference.check("e_w2", total)


def stratum_planes() -> IntPoly:
    """Cells whose trace triple lies on the degenerate planes."""
    orbit = _TWO_MINUS_ONE
    e_w31 = reference.check(
        "e_w31", blocks.poly("e_X2bar") * orbit * blocks.poly("e_g2_Z6_s12"))
    e_w32 = reference.check(
        "e_w32", blocks.poly("e_X3bar") * orbit * blocks.poly("e_g2_Z6_s11"))
    return reference.check("e_w3", 3 * (e_w31 + e_w32))


def stratum_quadric_one() -> "tuple[IntPoly, IntPoly]":
    """Cells where the commutators share exactly one eigenvector.

    The base family extends over a two-torus of eigenvalue parameters, minus
    six correction lines and four correction points.
    """
    r = blocks.rep("R_X4bar")

    # Factors with independent eigenvalue loops whose product loop is the
    # third slot; only T*T*T and N1*N2*N12 survive on the invariant part.
    h1 = CharMap(blocks.Z2_GROUP, _PAIR_GROUP, (Character((1, 0)),))
    h2 = CharMap(blocks.Z2_GROUP, _PAIR_GROUP, (Character((0, 1)),))
    h12 = CharMap(blocks.Z2_GROUP, _PAIR_GROUP, (Character((1, 1)),))
    triple = rep_tensor(rep_tensor(rep_pullback(h1, r), rep_pullback(h2, r)),
                        rep_pullback(h12, r))
    e_full = fibcalc.e_torus(triple)

    line = reference.check(
        "e_w4_line_term",
        blocks.poly("e_X4lambdabar") * fibcalc.e_punctured_line(rep_tensor(r, r), 3))
    points = 4 * blocks.poly("e_X4lambdabar") ** 3

    e_zbar = reference.check("e_zbar", e_full - 6 * line - points)
    e_w4 = reference.check("e_w4", blocks.poly("e_PGL2") * e_zbar)
    return e_zbar, e_w4


def _slot_rep(slot: int, weights: "dict[str, IntPoly]") -> HMRep:
    coeffs = {}
    for name, poly in weights.items():
        slots = ["T", "T", "T"]
        slots[slot] = name
        coeffs[fibcalc.BPrimeChar(slots)] = poly
    return HMRep(fibcalc.BPRIME_GROUP, coeffs)


def quadric_two_factors() -> "list[HMRep]":
    """The three slot representations entering the trace-surface contraction.

    Slots one and two carry the quotient fiber family's weights; the product
    slot carries them with the two sign characters exchanged, because its
    eigenvalue parameter is inverted relative to the others.
    """
    base = blocks.rep_to_labels(blocks.rep("R_X4barZ2"))
    swapped = dict(base)
    swapped["S2"], swapped["S-2"] = base["S-2"], base["S2"]
    return [_slot_rep(0, base), _slot_rep(1, base), _slot_rep(2, swapped)]


def stratum_quadric_two() -> "tuple[IntPoly, IntPoly]":
    """Diagonalizable commutator triples with traces on the degenerate surface."""
    f1, f2, f3 = quadric_two_factors()
    tensored = rep_tensor(rep_tensor(f1, f2), f3)
    e_zbar_prime = reference.check(
        "e_zbar_prime", rep_e_map(tensored, fibcalc.bprime_table()))

    e_zbar, _ = stratum_quadric_one()
    e_w5 = reference.check(
        "e_w5", fibcalc.e_pgl_d_quotient(e_zbar_prime, e_zbar))
    return e_zbar_prime, e_w5


def stratum_generic() -> IntPoly:
    """Open stratum: no shared eigenvector and traces off the surface."""
    e_zbar_prime, _ = stratum_quadric_two()
    cube = blocks.poly("e_X4barZ2") ** 3
    return reference.check(
        "e_w6", blocks.poly("e_PGL2") * (cube - e_zbar_prime))


def twisted_total() -> "tuple[IntPoly, IntPoly]":
    """Sum the six strata and divide out the conjugation action."""
    pipe = TwistedPipeline.run()
    return pipe.e_w_total, pipe.e_m1


class TwistedPipeline:
    """All twisted strata, their total, and the character variety value."""

    __slots__ = ("e_w1", "e_w2", "e_w3", "e_w4", "e_w5", "e_w6",
                 "e_zbar", "e_zbar_prime", "e_w_total", "e_m1")

    @classmethod
    def run(cls) -> "TwistedPipeline":
        self = cls.__new__(cls)
        self.e_w1 = stratum_points()
        self.e_w2 = stratum_lines()
        self.e_w3 = stratum_planes()
        self.e_zbar, self.e_w4 = stratum_quadric_one()
        self.e_zbar_prime, self.e_w5 = stratum_quadric_two()
        self.e_w6 = stratum_generic()
        total = (self.e_w1 + self.e_w2 + self.e_w3
                 + self.e_w4 + self.e_w5 + self.e_w6)
        self.e_w_total = reference.check("e_w_total", total)
        self.e_m1 = reference.check(
            "e_m1", poly_div_exact(self.e_w_total, blocks.poly("e_PGL2")))
        return self
