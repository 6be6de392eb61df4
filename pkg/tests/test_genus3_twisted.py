"""Six-stratum twisted pipeline."""

from charvar import blocks, reference
from charvar.genus3_twisted import (TwistedPipeline, quadric_two_factors,
                                    stratum_generic, stratum_lines,
                                    stratum_planes, stratum_points,
                                    stratum_quadric_one, stratum_quadric_two,
                                    twisted_total)
from charvar.polyring import IntPoly, Q, poly_div_exact, poly_is_palindromic


def test_stratum_values():
    assert stratum_points() == reference.expected("e_w1")
    assert stratum_lines() == reference.expected("e_w2")
    assert stratum_planes() == reference.expected("e_w3")
    e_zbar, e_w4 = stratum_quadric_one()
    assert e_zbar == reference.expected("e_zbar")
    assert e_w4 == reference.expected("e_w4")
    e_zbar_prime, e_w5 = stratum_quadric_two()
    assert e_zbar_prime == reference.expected("e_zbar_prime")
    assert e_w5 == reference.expected("e_w5")
    assert stratum_generic() == reference.expected("e_w6")


def test_quadric_strata_share_conjugation_structure():
    e_zbar, e_w4 = stratum_quadric_one()
    e_zbar_prime, e_w5 = stratum_quadric_two()
    assert e_w4 == blocks.poly("e_PGL2") * e_zbar
    assert e_w5 == (Q * Q - Q) * e_zbar_prime + Q * e_zbar


def test_slot_factor_layout():
    f1, f2, f3 = quadric_two_factors()
    base = blocks.rep_to_labels(blocks.rep("R_X4barZ2"))

    def slot_weights(factor, slot):
        out = {}
        for char, poly in factor.coeffs.items():
            assert all(s == "T" for i, s in enumerate(char.slots) if i != slot)
            out[char.slots[slot]] = poly
        return out

    assert slot_weights(f1, 0) == base
    assert slot_weights(f2, 1) == base
    swapped = slot_weights(f3, 2)
    assert swapped["S2"] == base["S-2"]
    assert swapped["S-2"] == base["S2"]
    assert swapped["T"] == base["T"]
    assert swapped["S0"] == base["S0"]


def test_total_and_quotient():
    e_w, e_m1 = twisted_total()
    assert e_w == reference.expected("e_w_total")
    assert e_m1 == reference.expected("e_m1")
    assert poly_div_exact(e_w, blocks.poly("e_PGL2")) == e_m1


def test_final_polynomial_shape():
    pipe = TwistedPipeline.run()
    assert pipe.e_m1.degree == 12
    assert pipe.e_m1.coefficient(12) == 1
    assert poly_is_palindromic(pipe.e_m1, 12)


def test_pipeline_fields_are_consistent():
    pipe = TwistedPipeline.run()
    total = (pipe.e_w1 + pipe.e_w2 + pipe.e_w3
             + pipe.e_w4 + pipe.e_w5 + pipe.e_w6)
    assert total == pipe.e_w_total
    assert pipe.e_w4 == blocks.poly("e_PGL2") * pipe.e_zbar
