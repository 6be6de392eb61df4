"""Exact E-polynomial computations for rank-2 character varieties.

The package derives the genus-3 moduli-space E-polynomials, twisted and
untwisted, through explicit stratifications, and independently verifies
the results by counting commutator-equation solutions over SL(2, F_q).
"""

from .fibcalc import (e_pgl_d_quotient, e_punctured_line, e_torus,
                      e_z2_product)
from .fforacle import (ClassFunction, SL2Element, UnsupportedField,
                       VerificationFailed, commutator_distribution,
                       genus_convolve, sl2_enumerate, trace_stratum_count,
                       verify_table)
from .genus2 import Genus2Monodromy
from .genus3_twisted import TwistedPipeline
from .genus3_untwisted import UntwistedPipeline
from .polyring import (IntPoly, NonzeroRemainder, poly_div_exact,
                       poly_is_palindromic)
from .repring import (Character, CharMap, EvalTable, HMRep, MonodromyGroup,
                      rep_collapse, rep_e_map, rep_pullback, rep_tensor)

__version__ = "1.0.0"

__all__ = [
    "Character", "CharMap", "ClassFunction", "EvalTable", "Genus2Monodromy",
    "HMRep", "IntPoly", "MonodromyGroup", "NonzeroRemainder", "SL2Element",
    "TwistedPipeline", "UnsupportedField", "UntwistedPipeline",
    "VerificationFailed", "commutator_distribution", "e_pgl_d_quotient",
    "e_punctured_line", "e_torus", "e_z2_product", "genus_convolve",
    "poly_div_exact", "poly_is_palindromic", "rep_collapse", "rep_e_map",
    "rep_pullback", "rep_tensor", "sl2_enumerate", "trace_stratum_count",
    "verify_table",
]
