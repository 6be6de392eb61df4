"""Monodromy of the genus-2 diagonal fiber family and its twist-quotient.

The family of 4-tuples in SL(2,C) whose commutator product is a fixed
non-central diagonal matrix varies over the punctured eigenvalue line. Its
monodromy representation is assembled from seven cells, reduced by the torus
factor, and the version over the inversion-quotient base is recovered by
solving a four-equation linear system over Z[q] with fraction-free
elimination.
"""

from __future__ import annotations

from . import blocks, fibcalc, reference
from .polyring import IntPoly, NonzeroRemainder, ONE, Q, poly_div_exact
from .repring import (Character, CharMap, EvalTable, HMRep, MonodromyGroup,
                      rep_collapse, rep_partial_push, rep_pullback, rep_tensor)


class SingularSystem(ArithmeticError):
    """The linear system has no unique polynomial solution."""


class NonPolynomialSolution(ArithmeticError):
    """An elimination step failed to divide exactly over Z[q]."""


# Base-times-fiber group for the two-parameter eigenvalue family; the torus
# direction is integrated out by a partial push.
_PUSH_GROUP = MonodromyGroup(2, ("swap", "torus"))
_TORUS_GROUP = MonodromyGroup(1, ("torus",))
_TORUS_FIBER = EvalTable(_TORUS_GROUP, {Character((0,)): Q - 1,
                                        Character((1,)): IntPoly()})


def _unit(group, char) -> HMRep:
    return HMRep(group, {char: ONE})


def _aligned_pair_cell() -> HMRep:
    """Cell of two diagonalizable commutators with matched eigenvalue loops.

    Pull the line family back along the two loop embeddings whose product is
    the swap loop; pushing the torus factor down kills all cross terms.
    """
    r = blocks.rep("R_X4bar")
    h1 = CharMap(blocks.Z2_GROUP, _PUSH_GROUP, (Character((0, 1)),))
    h2 = CharMap(blocks.Z2_GROUP, _PUSH_GROUP, (Character((1, 1)),))
    pushed = rep_partial_push(
        rep_tensor(rep_pullback(h1, r), rep_pullback(h2, r)), _TORUS_FIBER)
    return pushed - 4 * blocks.poly("e_X4lambdabar") * r


def compute_r_ybar4() -> HMRep:
    """Sum the seven cells of the diagonal fiber family's monodromy."""
    r = blocks.rep("R_X4bar")
    t_unit = _unit(blocks.Z2_GROUP, blocks.CHAR_T1)
    x0 = blocks.poly("e_X0")
    x1 = blocks.poly("e_X1")
    x2 = blocks.poly("e_X2bar")
    x3 = blocks.poly("e_X3bar")
    x4z2 = blocks.poly("e_X4barZ2")

    part1 = reference.check("r_y4_part1", (Q - 1) * (x2 + x3) ** 2 * t_unit)
    part2 = reference.check("r_y4_part2", 2 * (x0 + 2 * (Q - 1) * x2) * r)
    part3 = reference.check("r_y4_part3", 2 * (x1 + 2 * (Q - 1) * x3) * r)
    part4 = reference.check("r_y4_part4", 2 * (Q - 1) * x2 * (x4z2 * t_unit - r))
    part5 = reference.check("r_y4_part5", 2 * (Q - 1) * x3 * (x4z2 * t_unit - r))
    aligned = _aligned_pair_cell()
    part6 = reference.check("r_y4_part6", (2 * Q - 1) * aligned)
    part7 = reference.check(
        "r_y4_part7", (Q - 1) * (x4z2 ** 2 * t_unit - aligned))

    total = part1 + part2 + part3 + part4 + part5 + part6 + part7
    return reference.check("r_ybar4", total)


def compute_r_mlambda() -> HMRep:
    """Divide the torus factor (q-1) out of both coefficients."""
    r = compute_r_ybar4()
    reduced = HMRep(blocks.Z2_GROUP, {
        char: poly_div_exact(poly, Q - 1) for char, poly in r.coeffs.items()
    })
    return reference.check("r_mlambda", reduced)


def compute_e_y4() -> IntPoly:
    """Genus-2 tuples with diagonalizable non-central commutator product."""
    orbit = Q * Q - 1
    value = (blocks.poly("e_SL2") ** 4
             - blocks.poly("e_Y0") - blocks.poly("e_Y1")
             - orbit * blocks.poly("e_Y2bar") - orbit * blocks.poly("e_Y3bar"))
    return reference.check("e_y4", value)


def genus2x1_strata() -> IntPoly:
    """Split the twisted genus-3 total by the genus-2 partial product class."""
    from .genus3_twisted import twisted_total

    e_w, _ = twisted_total()
    orbit = Q * Q - 1
    w0 = reference.check("e_g2x1_w0", blocks.poly("e_Y0") * blocks.poly("e_X1"))
    w1 = reference.check("e_g2x1_w1", blocks.poly("e_Y1") * blocks.poly("e_X0"))
    w2 = reference.check(
        "e_g2x1_w2", orbit * blocks.poly("e_Y2bar") * blocks.poly("e_X3bar"))
    w3 = reference.check(
        "e_g2x1_w3", orbit * blocks.poly("e_Y3bar") * blocks.poly("e_X2bar"))
    return reference.check("e_g2x1_w4", e_w - w0 - w1 - w2 - w3)


def stratification_rows() -> "dict[Character, IntPoly]":
    """Row coefficients of the mixed stratum equation, one per character.

    Each unknown coefficient of the quotient family is probed by tensoring
    its character with the inversion-twisted line family and running the
    two-puncture fibration followed by the conjugation quotient.
    """
    twisted = rep_pullback(blocks.SWAP_MAP, blocks.rep("R_X4barZ2"))
    rows = {}
    for char in (blocks.CHAR_T2, blocks.CHAR_S2, blocks.CHAR_SM2, blocks.CHAR_S0):
        probe = rep_tensor(_unit(blocks.Z2SQ_GROUP, char), twisted)
        quot = fibcalc.e_punctured_line(probe, 2)
        tot = fibcalc.e_punctured_line(
            rep_collapse(blocks.COLLAPSE_MAP, probe), 3)
        rows[char] = fibcalc.e_pgl_d_quotient(quot, tot)
    reference.check("g2x1_row_a", rows[blocks.CHAR_T2])
    reference.check("g2x1_row_b", rows[blocks.CHAR_S2])
    reference.check("g2x1_row_c", rows[blocks.CHAR_SM2])
    reference.check("g2x1_row_d", rows[blocks.CHAR_S0])
    return rows


def solve_ry4z2() -> HMRep:
    """Recover the quotient-base monodromy coefficients (a, b, c, d).

    Equations: the mixed stratum row equation; the closed fibration formula
    (q^3-2q^2-q)a - (q^2+q)(b+c) - 2q d = e(Y4); the fiber sum
    a+b+c+d = e over one diagonal class; and a+d = invariant coefficient
    upstairs. Eliminate d, then b+c, then a, then b; verify all residuals.
    """
    rows = stratification_rows()
    row_a = rows[blocks.CHAR_T2]
    row_b = rows[blocks.CHAR_S2]
    row_c = rows[blocks.CHAR_SM2]
    row_d = rows[blocks.CHAR_S0]

    r_ybar4 = compute_r_ybar4()
    invariant_sum = r_ybar4.coefficient(blocks.CHAR_T1)
    e_y4 = compute_e_y4()
    e_y4l = blocks.poly("e_Y4lambdabar")
    e_mixed = genus2x1_strata()

    bc = e_y4l - invariant_sum
    try:
        a = poly_div_exact(e_y4 + (Q * Q + Q) * bc + 2 * Q * invariant_sum,
                           Q * (Q - 1) ** 2)
    except NonzeroRemainder as exc:
        raise NonPolynomialSolution("invariant unknown: %s" % exc) from exc
    d = invariant_sum - a

    pivot = row_b - row_c
    if not pivot:
        raise SingularSystem("sign-character rows coincide")
    try:
        b = poly_div_exact(e_mixed - row_a * a - row_c * bc - row_d * d, pivot)
    except NonzeroRemainder as exc:
        raise NonPolynomialSolution("sign unknown: %s" % exc) from exc
    c = bc - b

    residuals = (
        row_a * a + row_b * b + row_c * c + row_d * d - e_mixed,
        (Q ** 3 - 2 * Q * Q - Q) * a - (Q * Q + Q) * (b + c) - 2 * Q * d - e_y4,
        a + b + c + d - e_y4l,
        a + d - invariant_sum,
    )
    if any(residuals):
        raise SingularSystem("candidate violates %d equations"
                             % sum(1 for res in residuals if res))

    solution = HMRep(blocks.Z2SQ_GROUP, {
        blocks.CHAR_T2: a, blocks.CHAR_S2: b,
        blocks.CHAR_SM2: c, blocks.CHAR_S0: d,
    })
    return reference.check("r_ybar4_z2", solution)


class Genus2Monodromy:
    """The family's monodromy data in both coordinate systems."""

    __slots__ = ("r_ybar4", "r_ybar4_z2", "r_mlambda", "e_y4")

    @classmethod
    def run(cls) -> "Genus2Monodromy":
        self = cls.__new__(cls)
        self.r_ybar4 = compute_r_ybar4()
        self.r_mlambda = compute_r_mlambda()
        self.e_y4 = compute_e_y4()
        self.r_ybar4_z2 = solve_ry4z2()
        return self
