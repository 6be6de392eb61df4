"""Registry of the building-block constants every pipeline starts from.

Genus-1 conjugacy-class strata, the genus-1 fiber representations, genus-2
totals, and six imported genus-2 stratum polynomials. Values are either an
IntPoly or an HMRep; each entry carries a one-line description of the space
it measures. The registry is write-once at import.
"""

from __future__ import annotations

from .polyring import IntPoly
from . import fibcalc
from .repring import CharMap, Character, HMRep, MonodromyGroup

parse = IntPoly.parse


class UnknownBlock(KeyError):
    """Requested name is not in the registry."""


class SelfCheckFailed(AssertionError):
    """An internal consistency identity between blocks does not hold."""

    def __init__(self, name: str, got, want):
        super().__init__("%s: got %s, want %s" % (name, got, want))
        self.name = name
        self.got = got
        self.want = want


# Monodromy groups shared across the pipelines. The rank-1 group is generated
# by the loop swapping the two eigenvalues of a diagonalizable commutator; the
# rank-2 group by the loops around the two degenerate eigenvalue points.
Z2_GROUP = MonodromyGroup(1, ("swap",))
Z2SQ_GROUP = MonodromyGroup(2, ("plus", "minus"))

CHAR_T1 = Character((0,))
CHAR_N = Character((1,))
CHAR_T2 = Character((0, 0))
CHAR_S2 = Character((1, 0))
CHAR_SM2 = Character((0, 1))
CHAR_S0 = Character((1, 1))

# S2,S-2 -> N and S0 -> T: forget which degenerate point a loop encircles.
COLLAPSE_MAP = CharMap(Z2SQ_GROUP, Z2_GROUP, (CHAR_N, CHAR_N))
# Exchange the two degenerate points (the eigenvalue inversion twist).
SWAP_MAP = CharMap(Z2SQ_GROUP, Z2SQ_GROUP, (CHAR_SM2, CHAR_S2))

_LABELS_RANK1 = ((CHAR_T1, "T"), (CHAR_N, "N"))
_LABELS_RANK2 = ((CHAR_T2, "T"), (CHAR_S2, "S2"), (CHAR_SM2, "S-2"), (CHAR_S0, "S0"))


def rep_to_labels(rep: HMRep) -> "dict[str, IntPoly]":
    """Render an HMRep over one of the shared groups as a label -> poly map."""
    if rep.group == Z2_GROUP:
        pairs = _LABELS_RANK1
    elif rep.group == Z2SQ_GROUP:
        pairs = _LABELS_RANK2
    else:
        raise ValueError("no label scheme for %r" % (rep.group,))
    out = {}
    for char, label in pairs:
        poly = rep.coefficient(char)
        if poly:
            out[label] = poly
    return out


class BlockEntry:
    __slots__ = ("name", "value", "citation")

    def __init__(self, name: str, value, citation: str):
        self.name = name
        self.value = value
        self.citation = citation

    def __repr__(self) -> str:
        return "BlockEntry(%r, %r)" % (self.name, self.value)


_REGISTRY: "dict[str, BlockEntry]" = {}


def _register(name: str, value, citation: str) -> None:
    if name in _REGISTRY:
        raise ValueError("duplicate block %r" % name)
    _REGISTRY[name] = BlockEntry(name, value, citation)


_register("e_SL2", parse("q^3 - q"), "E-polynomial of SL(2,C)")
_register("e_PGL2", parse("q^3 - q"), "E-polynomial of PGL(2,C)")
_register("e_PGL2_over_U", parse("q^2 - 1"),
          "PGL(2,C) modulo the unipotent upper-triangular subgroup")
_register("e_PGL2_over_D_plus", parse("q^2"),
          "invariant part of PGL(2,C) modulo the diagonal torus")
_register("e_PGL2_over_D_minus", parse("q"),
          "anti-invariant part of PGL(2,C) modulo the diagonal torus")

_register("e_W0", parse("1"), "genus-1 twisted stratum: no solutions beyond the base point, [A,B]=Id slice")
_register("e_W1", parse("1"), "genus-1 twisted stratum over the central class -Id")
_register("e_W2", parse("q^2 - 1"), "genus-1 twisted stratum over the unipotent class")
_register("e_W3", parse("q^2 - 1"), "genus-1 twisted stratum over the negative unipotent class")
_register("e_W4lambda", parse("q^2 + q"),
          "genus-1 twisted stratum over one fixed diagonal class")
_register("e_W4", parse("q^3 - 2q^2 - q"),
          "genus-1 twisted stratum over all non-central diagonal classes")

_register("e_X0", parse("q^4 + 4q^3 - q^2 - 4q"),
          "pairs in SL(2,C) with commutator Id")
_register("e_X1", parse("q^3 - q"),
          "pairs in SL(2,C) with commutator -Id")
_register("e_X2bar", parse("q^3 - 2q^2 - 3q"),
          "commutator fiber over the fixed unipotent element")
_register("e_X3bar", parse("q^3 + 3q^2"),
          "commutator fiber over the fixed negative unipotent element")
_register("e_X4lambdabar", parse("q^3 + 3q^2 - 3q - 1"),
          "commutator fiber over one fixed non-central diagonal element")
_register("e_X4bar", parse("q^4 - 3q^3 - 6q^2 + 5q + 3"),
          "union of commutator fibers over the punctured eigenvalue line")
_register("e_X4barZ2", parse("q^4 - 2q^3 - 3q^2 + 3q + 1"),
          "the same union modulo the eigenvalue inversion")
_register("e_X4", parse("q^6 - 2q^5 - 4q^4 + 3q^2 + 2q"),
          "pairs in SL(2,C) with diagonalizable non-central commutator")

_register("R_X4bar",
          HMRep(Z2_GROUP, {CHAR_T1: parse("q^3 - 1"),
                           CHAR_N: parse("3q^2 - 3q")}),
          "fiber monodromy representation over the punctured eigenvalue line")
_register("R_X4barZ2",
          HMRep(Z2SQ_GROUP, {CHAR_T2: parse("q^3"),
                             CHAR_S2: parse("-3q"),
                             CHAR_SM2: parse("3q^2"),
                             CHAR_S0: parse("-1")}),
          "fiber monodromy representation after the eigenvalue inversion quotient")

_register("e_Y0", parse("q^9 + q^8 + 12q^7 + 2q^6 - 3q^4 - 12q^3 - q"),
          "genus-2 tuples with commutator product Id")
_register("e_Y1", parse("q^9 - 3q^7 - 30q^6 + 30q^4 + 3q^3 - q"),
          "genus-2 tuples with commutator product -Id")
_register("e_Y2bar", parse("q^9 - 3q^7 - 4q^6 - 39q^5 - 4q^4 - 15q^3"),
          "genus-2 fiber over the fixed unipotent element")
_register("e_Y3bar", parse("q^9 - 3q^7 + 15q^6 + 6q^5 + 45q^4"),
          "genus-2 fiber over the fixed negative unipotent element")
_register("e_Y4lambdabar",
          parse("q^9 - 3q^7 + 15q^6 - 39q^5 + 39q^4 - 15q^3 + 3q^2 - 1"),
          "genus-2 fiber over one fixed non-central diagonal element")

_register("e_g2_W4", parse("q^9 - 2q^8 - 7q^7 - 18q^6 + 24q^5 + 28q^4 - 17q^3 - 8q^2 - q"),
          "imported genus-2 stratum constant: diagonalizable commutator product class")
_register("e_g2_Y4corr", parse("q^9 - 2q^8 + 2q^7 - 18q^6 + 6q^5 + 28q^4 - 8q^3 - 8q^2 - q"),
          "imported genus-2 total over non-central diagonalizable classes, corrected value")
_register("e_g2_Z5_s12", parse("q^8 - 3q^7 - 3q^6 - 35q^5 + 69q^4 - 15q^3 - 11q^2 - 3q"),
          "imported genus-2 stratum constant, one-eigenvector family, first source")
_register("e_g2_Z5_s11", parse("q^8 - 3q^7 - 3q^6 - 35q^5 + 69q^4 - 15q^3 - 11q^2 - 3q"),
          "imported genus-2 stratum constant, one-eigenvector family, second source")
_register("e_g2_Z6_s12", parse("q^9 - 5q^8 + 24q^6 + 20q^5 - 60q^4 + 6q^3 + 11q^2 + 3q"),
          "imported genus-2 stratum constant, two-eigenvector family, first source")
_register("e_g2_Z6_s11", parse("q^9 - 5q^8 + 15q^6 + 11q^5 - 51q^4 + 15q^3 + 11q^2 + 3q"),
          "imported genus-2 stratum constant, two-eigenvector family, second source")


def block(name: str) -> BlockEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownBlock(name) from None


def block_names() -> "list[str]":
    return list(_REGISTRY)


def poly(name: str) -> IntPoly:
    """Shorthand for the polynomial value of a registry entry."""
    value = block(name).value
    if not isinstance(value, IntPoly):
        raise UnknownBlock("%s is not a polynomial block" % name)
    return value


def rep(name: str) -> HMRep:
    value = block(name).value
    if not isinstance(value, HMRep):
        raise UnknownBlock("%s is not a representation block" % name)
    return value


def blocks_selfcheck() -> "list[str]":
    """Re-derive the identities tying the registry together; return their names."""
    from .repring import rep_collapse

    passed = []

    def expect(name, got, want):
        if got != want:
            raise SelfCheckFailed(name, got, want)
        passed.append(name)

    expect("punctured_line_reproduces_union_fiber",
           fibcalc.e_punctured_line(rep("R_X4bar"), 3), poly("e_X4bar"))
    expect("punctured_line_reproduces_quotient_fiber",
           fibcalc.e_punctured_line(rep("R_X4barZ2"), 2), poly("e_X4barZ2"))
    expect("collapse_relates_the_two_representations",
           rep_collapse(COLLAPSE_MAP, rep("R_X4barZ2")), rep("R_X4bar"))
    expect("conjugation_quotient_reproduces_total",
           fibcalc.e_pgl_d_quotient(poly("e_X4barZ2"), poly("e_X4bar")),
           poly("e_X4"))
    expect("genus1_strata_partition_the_group",
           poly("e_SL2") - poly("e_W0") - poly("e_W1") - poly("e_W2") - poly("e_W3"),
           poly("e_W4"))
    return passed
