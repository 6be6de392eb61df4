"""Frozen expected values for every displayed intermediate of the pipelines.

Each entry pairs a computed quantity's name with the value it must equal and
a one-line description. Pipeline code calls check() right after producing a
value; a disagreement raises ReferenceMismatch carrying both sides. Inside
the collecting() context mismatches are recorded instead of raised, which is
what the verify command uses to list every failure in one run.

Two entries are rederived rather than transcribed: e_w6 and e_w4_line_term.
For each, the transcription source disagrees with the identities tying the
surrounding values together (stratum sums, exact quotients); the stored
values are the unique polynomials satisfying those identities.
"""

from __future__ import annotations

import contextlib

from .polyring import IntPoly

parse = IntPoly.parse


class ReferenceMismatch(AssertionError):
    """A computed value disagrees with its frozen expected value."""

    def __init__(self, name: str, got, want):
        super().__init__("%s: got %s, want %s" % (name, got, want))
        self.name = name
        self.got = got
        self.want = want


_TABLE: "dict[str, tuple[object, str]]" = {}


def _add(name, value, citation):
    if name in _TABLE:
        raise ValueError("duplicate reference %r" % name)
    _TABLE[name] = (value, citation)


# Twisted pipeline: strata of 6-tuples with commutator product -Id,
# grouped by the geometry of the three pair commutators.
_add("e_w11", parse("q^12 - 6q^11 + 2q^10 + 34q^9 - 12q^8 - 82q^7 - 18q^6 + 54q^5 + 27q^4"),
     "degenerate-trace stratum, trace pattern (2,2,2)")
_add("e_w12", parse("9q^12 + 27q^11 - 69q^10 - 192q^9 - 27q^8 + 186q^7 + 129q^6 - 42q^4 - 21q^3"),
     "degenerate-trace stratum, mixed patterns with one sign flip")
_add("e_w13", parse("3q^12 + 12q^11 - 21q^10 - 120q^9 - 63q^8 + 108q^7 + 81q^6"),
     "degenerate-trace stratum, mixed patterns with two sign flips")
_add("e_w14", parse("q^12 + 10q^11 + 26q^10 - 12q^9 - 99q^8 - 27q^7 + 72q^6 + 30q^5 - q^3"),
     "degenerate-trace stratum, trace pattern (-2,-2,-2)")
_add("e_w1", parse("14q^12 + 43q^11 - 62q^10 - 290q^9 - 201q^8 + 185q^7 + 264q^6 + 84q^5 - 15q^4 - 22q^3"),
     "stratum where all three commutator traces are degenerate")
_add("e_w21", parse("2q^13 - 7q^12 - 13q^11 + 47q^10 + 40q^9 - 103q^8 - 58q^7 + 93q^6 + 38q^5 - 30q^4 - 9q^3"),
     "degenerate-line stratum, cell family 1")
_add("e_w22", parse("2q^13 + 3q^12 - 22q^11 - 27q^10 + 61q^9 + 58q^8 - 68q^7 - 43q^6 + 27q^5 + 9q^4"),
     "degenerate-line stratum, cell family 2")
_add("e_w23", parse("q^13 + 2q^12 - 16q^11 - 48q^10 - 33q^9 + 170q^8 + 143q^7 - 200q^6 - 128q^5 + 72q^4 + 33q^3 + 4q^2"),
     "degenerate-line stratum, cell family 3")
_add("e_w24", parse("q^13 - 5q^12 - q^11 - 15q^10 + 148q^9 - 28q^8 - 336q^7 + 112q^6 + 227q^5 - 55q^4 - 39q^3 - 9q^2"),
     "degenerate-line stratum, cell family 4")
_add("e_w25", parse("q^12 - 2q^11 + q^10 - 16q^9 + 4q^8 + 46q^7 - 14q^6 - 36q^5 + 7q^4 + 8q^3 + q^2"),
     "degenerate-line stratum, cell family 5")
_add("e_w26", parse("q^13 - 13q^11 - 44q^10 - 24q^9 + 236q^8 - 20q^7 - 228q^6 + 47q^5 + 36q^4 + 9q^3"),
     "degenerate-line stratum, cell family 6")
_add("e_w2", parse("21q^13 - 18q^12 - 201q^11 - 258q^10 + 528q^9 + 1011q^8 - 879q^7 - 840q^6 + 525q^5 + 117q^4 + 6q^3 - 12q^2"),
     "stratum with trace triple on the degenerate lines")
_add("e_w31", parse("q^14 - 7q^13 + 6q^12 + 46q^11 - 35q^10 - 211q^9 + 94q^8 + 351q^7 - 103q^6 - 218q^5 + 28q^4 + 39q^3 + 9q^2"),
     "degenerate-plane stratum, trace-2 cell")
_add("e_w32", parse("q^14 - 2q^13 - 16q^12 + 17q^11 + 71q^10 - 33q^9 - 194q^8 + 74q^7 + 174q^6 - 47q^5 - 36q^4 - 9q^3"),
     "degenerate-plane stratum, trace-(-2) cell")
_add("e_w3", parse("6q^14 - 27q^13 - 30q^12 + 189q^11 + 108q^10 - 732q^9 - 300q^8 + 1275q^7 + 213q^6 - 795q^5 - 24q^4 + 90q^3 + 27q^2"),
     "stratum with trace triple on the degenerate planes")
# Rederived: satisfies assembly = torus term - 6*line - points exactly.
_add("e_w4_line_term", parse("q^10 - 15q^8 - 36q^7 - 24q^6 + 300q^5 - 228q^4 - 60q^3 + 39q^2 + 20q + 3"),
     "line correction term in the one-shared-eigenvector family")
_add("e_zbar", parse("q^11 - 8q^10 - 3q^9 + 78q^8 + 15q^7 + 531q^6 - 1779q^5 + 1209q^4 + 216q^3 - 163q^2 - 82q - 15"),
     "base family of pairs whose commutators share exactly one eigenvector")
_add("e_w4", parse("q^14 - 8q^13 - 4q^12 + 86q^11 + 18q^10 + 453q^9 - 1794q^8 + 678q^7 + 1995q^6 - 1372q^5 - 298q^4 + 148q^3 + 82q^2 + 15q"),
     "stratum whose commutators share exactly one eigenvector")
_add("e_zbar_prime", parse("q^11 - 6q^10 + 54q^8 - 12q^7 + 189q^6 - 915q^5 + 666q^4 + 153q^3 - 81q^2 - 43q - 6"),
     "conjugation-quotient family over the degenerate trace surface")
_add("e_w5", parse("q^13 - 6q^12 - 2q^11 + 51q^10 + 12q^9 + 216q^8 - 573q^7 - 198q^6 + 696q^5 - 18q^4 - 125q^3 - 45q^2 - 9q"),
     "stratum of simultaneously diagonalizable commutator triples on the trace surface")
# Rederived: the six strata must sum to e_w_total.
_add("e_w6", parse("q^15 - 7q^14 + 8q^13 + 44q^12 - 105q^11 - 109q^10 + 9q^9 + 1068q^8 - 666q^7 - 1182q^6 + 852q^5 + 238q^4 - 92q^3 - 52q^2 - 7q"),
     "open stratum: commutators with no shared eigenvector, traces off the surface")
_add("e_w_total", parse("q^15 - 5q^13 + 10q^11 - 252q^10 - 20q^9 + 20q^7 + 252q^6 - 10q^5 + 5q^3 - q"),
     "6-tuples in SL(2,C) with commutator product -Id")
_add("e_m1", parse("q^12 - 4q^10 + 6q^8 - 252q^7 - 14q^6 - 252q^5 + 6q^4 - 4q^2 + 1"),
     "E-polynomial of the twisted genus-3 character variety")

# Genus-2 monodromy pipeline.
_add("r_y4_part1", {"T": parse("4q^7 - 15q^5 + 5q^4 + 15q^3 - 9q^2")},
     "diagonal-fiber cell 1: both commutators of non-diagonalizable type")
_add("r_y4_part2", {"T": parse("6q^7 - 4q^6 - 6q^5 - 2q^4 + 4q^3 + 6q^2 - 4q"),
                    "N": parse("18q^6 - 30q^5 - 6q^4 + 30q^3 - 12q^2")},
     "diagonal-fiber cell 2: one commutator central of type Id")
_add("r_y4_part3", {"T": parse("4q^7 + 10q^6 - 12q^5 - 6q^4 - 10q^3 + 12q^2 + 2q"),
                    "N": parse("12q^6 + 18q^5 - 66q^4 + 30q^3 + 6q^2")},
     "diagonal-fiber cell 3: one commutator central of type -Id")
_add("r_y4_part4", {"T": parse("2q^8 - 12q^7 + 10q^6 + 36q^5 - 26q^4 - 36q^3 + 14q^2 + 12q"),
                    "N": parse("-6q^6 + 24q^5 - 12q^4 - 24q^3 + 18q^2")},
     "diagonal-fiber cell 4: trace-2 commutator beside a diagonalizable one")
_add("r_y4_part5", {"T": parse("2q^8 - 2q^7 - 24q^6 + 12q^5 + 34q^4 - 10q^3 - 12q^2"),
                    "N": parse("-6q^6 - 6q^5 + 30q^4 - 18q^3")},
     "diagonal-fiber cell 5: trace-(-2) commutator beside a diagonalizable one")
_add("r_y4_part6", {"T": parse("2q^8 - 11q^7 - 19q^6 + 32q^5 + 10q^4 + 14q^3 - 34q^2 + q + 5"),
                    "N": parse("-6q^6 - 99q^5 + 249q^4 - 165q^3 + 9q^2 + 12q")},
     "diagonal-fiber cell 6: both commutators diagonalizable, aligned eigenvalues")
_add("r_y4_part7", {"T": parse("q^9 - 6q^8 + 8q^7 + 27q^6 - 41q^5 - 21q^4 + 23q^3 + 26q^2 - 11q - 6"),
                    "N": parse("3q^6 + 48q^5 - 150q^4 + 132q^3 - 21q^2 - 12q")},
     "diagonal-fiber cell 7: both commutators diagonalizable, independent eigenvalues")
_add("r_ybar4", {"T": parse("q^9 - 3q^7 + 6q^5 - 6q^4 + 3q^2 - 1"),
                 "N": parse("15q^6 - 45q^5 + 45q^4 - 15q^3")},
     "total monodromy representation of the genus-2 diagonal fiber family")
_add("r_mlambda", {"T": parse("q^8 + q^7 - 2q^6 - 2q^5 + 4q^4 - 2q^3 - 2q^2 + q + 1"),
                   "N": parse("15q^5 - 30q^4 + 15q^3")},
     "diagonal fiber monodromy with the torus factor divided out")
_add("e_y4", parse("q^12 - 2q^11 - 4q^10 + 6q^9 - 6q^8 + 18q^7 - 6q^6 - 18q^5 + 15q^4 - 6q^3 + 2q"),
     "genus-2 4-tuples with diagonalizable non-central commutator product")
_add("e_g2x1_w0", parse("q^12 + q^11 + 11q^10 + q^9 - 12q^8 - 5q^7 - 12q^6 + 3q^5 + 11q^4 + q^2"),
     "product stratification cell: genus-2 part with product Id")
_add("e_g2x1_w1", parse("q^13 + 4q^12 - 4q^11 - 46q^10 - 117q^9 + 72q^8 + 243q^7 - 18q^6 - 124q^5 - 16q^4 + q^3 + 4q^2"),
     "product stratification cell: genus-2 part with product -Id")
_add("e_g2x1_w2", parse("q^14 + 3q^13 - 4q^12 - 16q^11 - 48q^10 - 108q^9 + 24q^8 + 76q^7 + 27q^6 + 45q^5"),
     "product stratification cell: genus-2 part with trace-2 product")
_add("e_g2x1_w3", parse("q^14 - 2q^13 - 7q^12 + 23q^11 - 9q^10 - 33q^9 - 93q^8 - 123q^7 + 108q^6 + 135q^5"),
     "product stratification cell: genus-2 part with trace-(-2) product")
_add("e_g2x1_w4", parse("q^15 - 2q^14 - 7q^13 + 6q^12 + 6q^11 - 160q^10 + 237q^9 + 9q^8 - 171q^7 + 147q^6 - 69q^5 + 5q^4 + 4q^3 - 5q^2 - q"),
     "product stratification cell: genus-2 part with diagonalizable product")
_add("g2x1_row_a", parse("q^6 - 2q^5 - 4q^4 + 3q^2 + 2q"),
     "elimination row coefficient on the invariant unknown")
_add("g2x1_row_b", parse("2q^5 - 7q^4 - 3q^3 + 7q^2 + q"),
     "elimination row coefficient on the first sign character unknown")
_add("g2x1_row_c", parse("-q^5 - 4q^4 + 4q^2 + q"),
     "elimination row coefficient on the second sign character unknown")
_add("g2x1_row_d", parse("-5q^4 - q^3 + 5q^2 + q"),
     "elimination row coefficient on the product character unknown")
_add("r_ybar4_z2", {"T": parse("q^9 - 3q^7 + 6q^5"),
                    "S2": parse("-45q^5 - 15q^3"),
                    "S-2": parse("15q^6 + 45q^4"),
                    "S0": parse("-6q^4 + 3q^2 - 1")},
     "diagonal fiber monodromy after the eigenvalue inversion quotient")

# Untwisted pipeline.
_add("e_v0", parse("q^13 + 5q^12 + 15q^11 + 45q^10 - 8q^9 - 53q^8 - 32q^7 - 45q^6 + 23q^5 + 44q^4 + q^3 + 4q^2"),
     "untwisted cell: commutator product Id on both sides")
_add("e_v1", parse("q^12 - 4q^10 - 30q^9 + 3q^8 + 60q^7 + 3q^6 - 30q^5 - 4q^4 + q^2"),
     "untwisted cell: commutator product -Id on both sides")
_add("e_v2", parse("q^14 - 2q^13 - 7q^12 + 4q^11 - 16q^10 + 84q^9 + 132q^8 - 44q^7 - 65q^6 - 42q^5 - 45q^4"),
     "untwisted cell: trace-2 commutator product")
_add("e_v3", parse("q^14 + 3q^13 - 4q^12 + 3q^11 + 54q^10 + 57q^9 + 84q^8 - 63q^7 - 135q^6"),
     "untwisted cell: trace-(-2) commutator product")
_add("r_v4_z2", {"T": parse("q^12 - 3q^10 + 51q^8 + 270q^6 + 51q^4 - 3q^2 + 1"),
                 "S2": parse("-3q^10 - 36q^8 - 66q^6 - 36q^4 - 3q^2"),
                 "S-2": parse("3q^11 + 6q^9 + 63q^7 + 63q^5 + 6q^3 + 3q"),
                 "S0": parse("-q^9 - 183q^7 - 183q^5 - q^3")},
     "tensor family for the diagonalizable untwisted cell")
_add("e_v4", parse("q^15 - 2q^14 - 7q^13 + 6q^12 + 51q^11 - 70q^10 + 192q^9 - 171q^8 - 216q^7 + 237q^6 - 24q^5 + 5q^4 + 4q^3 - 5q^2 - q"),
     "untwisted cell: diagonalizable non-central commutator product")
_add("e_v_total", parse("q^15 - 5q^13 + q^12 + 73q^11 + 9q^10 + 295q^9 - 5q^8 - 295q^7 - 5q^6 - 73q^5 + 5q^3 - q"),
     "6-tuples in SL(2,C) with commutator product Id")
_add("e_r1", parse("q^8 + 9q^6 - 5q^4 - 69q^2"),
     "reducible locus cell: distinct diagonal characters")
_add("e_r2", parse("q^12 - 5q^11 + 9q^10 - 5q^9 - 6q^8 + 14q^7 - 78q^6 - 58q^5 + 5q^4 - 9q^3 + 69q^2 + 63q"),
     "reducible locus cell: non-diagonal extensions")
_add("e_r3", parse("64"),
     "reducible locus cell: central 6-tuples")
_add("e_r4", parse("64q^7 + 64q^6 - 64q - 64"),
     "reducible locus cell: unipotent extensions of central tuples")
_add("e_v_red", parse("q^12 - 5q^11 + 9q^10 - 5q^9 - 5q^8 + 78q^7 - 5q^6 - 58q^5 - 9q^3 - q"),
     "reducible locus of the untwisted 6-tuple variety")
_add("e_m_red", parse("q^6 + 15q^4 + 15q^2 + 1"),
     "E-polynomial of the reducible part of the untwisted character variety")
_add("e_v_irr", parse("q^15 - 5q^13 + 78q^11 + 300q^9 - 373q^7 - 15q^5 + 14q^3"),
     "irreducible locus of the untwisted 6-tuple variety")
_add("e_m_irr", parse("q^12 - 4q^10 + 74q^8 + 374q^6 + q^4 - 14q^2"),
     "E-polynomial of the irreducible part of the untwisted character variety")
_add("e_m", parse("q^12 - 4q^10 + 74q^8 + 375q^6 + 16q^4 + q^2 + 1"),
     "E-polynomial of the untwisted genus-3 character variety")


def has_constant(name: str) -> bool:
    return name in _TABLE


def expected(name: str):
    return _TABLE[name][0]


def citation(name: str) -> str:
    return _TABLE[name][1]


def names() -> "list[str]":
    return list(_TABLE)


def _canonical(value):
    from .blocks import rep_to_labels
    from .repring import HMRep

    if isinstance(value, HMRep):
        return rep_to_labels(value)
    return value


class Collector:
    """Names exercised and mismatches found while collecting() is active."""

    __slots__ = ("checked", "failures")

    def __init__(self):
        self.checked: "set[str]" = set()
        self.failures: "list[ReferenceMismatch]" = []


_collector: "Collector | None" = None


@contextlib.contextmanager
def collecting():
    """Record mismatches on the yielded Collector instead of raising."""
    global _collector
    outer = _collector
    _collector = found = Collector()
    try:
        yield found
    finally:
        _collector = outer


def check(name: str, value):
    """Compare value against the frozen entry; pass the value through."""
    want = expected(name)
    got = _canonical(value)
    if _collector is not None:
        _collector.checked.add(name)
    if got != want:
        failure = ReferenceMismatch(name, got, want)
        if _collector is None:
            raise failure
        _collector.failures.append(failure)
    return value
