"""E-polynomial rules for fibrations with finite monodromy over small bases.

Covers the punctured-line and two-torus base rules, the Z/2-quotient product
formula, the PGL-conjugation quotient formula, and the evaluation table for
the twice-punctured-plane base whose character group has order 16 after the
relations among the three slot characters are imposed.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Sequence

from .polyring import IntPoly
from .repring import EvalTable, HMRep

Q = IntPoly([0, 1])
Q_MINUS_1 = IntPoly([-1, 1])

SLOT_NAMES = ("T", "S2", "S-2", "S0")
_SLOT_BITS = {"T": (0, 0), "S2": (1, 0), "S-2": (0, 1), "S0": (1, 1)}
_BITS_SLOT = {bits: name for name, bits in _SLOT_BITS.items()}
_SLOT_ORDER = {"T": 0, "S2": 1, "S-2": 2, "S0": 3}

TRIPLE_RULES = ("s_minus2_parity", "lambda_slot", "s2_parity")

_E_FULL = IntPoly([9, -6, 1])
_E_HALF = IntPoly([6, -2])
_E_SIGN = IntPoly([5, -1])


def e_punctured_line(r: HMRep, punctures: int) -> IntPoly:
    """Total-space E-polynomial over C minus the given number of points."""
    if punctures < 1:
        raise ValueError("need at least one puncture, got %d" % punctures)
    invariant = r.coefficient(r.group.trivial())
    total = IntPoly()
    for poly in r.coeffs.values():
        total = total + poly
    return Q_MINUS_1 * invariant - (punctures - 1) * total


def e_torus(r: HMRep) -> IntPoly:
    """Total-space E-polynomial over C* x C*: only the invariant part survives."""
    return Q_MINUS_1 * Q_MINUS_1 * r.coefficient(r.group.trivial())


def e_z2_product(xp: IntPoly, xm: IntPoly, yp: IntPoly, ym: IntPoly) -> IntPoly:
    """E-polynomial of (X x Y)/Z2 from the invariant and anti-invariant parts."""
    return xp * yp + xm * ym


def e_pgl_d_quotient(e_quot: IntPoly, e_tot: IntPoly) -> IntPoly:
    """E-polynomial of (Z x PGL(2,C)/D)/Z2 given e(Z/Z2) and e(Z)."""
    return (Q * Q - Q) * e_quot + Q * e_tot


class BPrimeChar:
    """Character of the three-slot sign group, one slot per puncture pair.

    Slots are indexed by the three eigenvalue parameters (first, second,
    product); each slot carries one of T, S2, S-2, S0, itself a character
    of a rank-2 group encoded as two bits.
    """

    __slots__ = ("slots",)

    def __init__(self, slots: Iterable[str]):
        st = tuple(slots)
        if len(st) != 3 or any(s not in _SLOT_BITS for s in st):
            raise ValueError("slots must be a triple from %r: %r" % (SLOT_NAMES, st))
        self.slots = st

    @property
    def bits(self) -> tuple:
        out = []
        for s in self.slots:
            out.extend(_SLOT_BITS[s])
        return tuple(out)

    def raw_product(self, other: "BPrimeChar") -> "BPrimeChar":
        """Slotwise product in the ambient order-64 group, no normal form."""
        return BPrimeChar(tuple(
            _BITS_SLOT[(a[0] ^ b[0], a[1] ^ b[1])]
            for a, b in ((_SLOT_BITS[x], _SLOT_BITS[y])
                         for x, y in zip(self.slots, other.slots))))

    def __mul__(self, other: "BPrimeChar") -> "BPrimeChar":
        return bprime_char_normalize(self.raw_product(other))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BPrimeChar):
            return NotImplemented
        return self.slots == other.slots

    def __hash__(self) -> int:
        return hash(self.slots)

    def __repr__(self) -> str:
        return "BPrimeChar(%r)" % (self.slots,)


# Relations: the product-slot character is determined by the other two, so the
# ambient group is cut by this rank-2 subgroup before evaluating fibers.
_RELATION_COSET = (
    BPrimeChar(("T", "T", "T")),
    BPrimeChar(("S0", "S0", "T")),
    BPrimeChar(("T", "S0", "S0")),
    BPrimeChar(("S0", "T", "S0")),
)


def _normal_key(c: BPrimeChar) -> tuple:
    s0_count = sum(1 for s in c.slots if s == "S0")
    return (s0_count, tuple(_SLOT_ORDER[s] for s in c.slots))


def bprime_char_normalize(c: BPrimeChar) -> BPrimeChar:
    """Canonical coset representative: fewest S0 slots, then slotwise order."""
    return min((c.raw_product(k) for k in _RELATION_COSET), key=_normal_key)


class BPrimeGroup:
    """The order-16 quotient character group, represented by normal forms."""

    rank = 6
    generator_labels = ("first+", "first-", "second+", "second-",
                        "product+", "product-")

    def trivial(self) -> BPrimeChar:
        return BPrimeChar(("T", "T", "T"))

    def characters(self) -> "list[BPrimeChar]":
        seen = {bprime_char_normalize(BPrimeChar(s))
                for s in product(SLOT_NAMES, repeat=3)}
        return sorted(seen, key=_normal_key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BPrimeGroup)

    def __hash__(self) -> int:
        return hash(BPrimeGroup)

    def __repr__(self) -> str:
        return "BPrimeGroup()"


BPRIME_GROUP = BPrimeGroup()


def bprime_e_value(c: BPrimeChar, rule: str = "s_minus2_parity") -> IntPoly:
    """Fiber E-polynomial of a (possibly non-normalized) slot character.

    The first two classes are forced; the all-signs class depends on the rule.
    Only "s_minus2_parity" is consistent with the rest of the computation; the
    other two rules are retained so the rejection can be reproduced.
    """
    if rule not in TRIPLE_RULES:
        raise ValueError("unknown rule %r, expected one of %r" % (rule, TRIPLE_RULES))
    signed = [s in ("S2", "S-2") for s in c.slots]
    n_signed = sum(signed)
    if n_signed == 0:
        s0_count = sum(1 for s in c.slots if s == "S0")
        return _E_FULL if s0_count % 2 == 0 else _E_HALF
    if n_signed < 3:
        return _E_SIGN
    if rule == "s_minus2_parity":
        even = sum(1 for s in c.slots if s == "S-2") % 2 == 0
    elif rule == "lambda_slot":
        even = c.slots[0] == "S2"
    else:
        even = sum(1 for s in c.slots if s == "S2") % 2 == 0
    return _E_FULL if even else _E_HALF


def bprime_table() -> EvalTable:
    """Evaluation table over the 16 normal forms (decided rule only)."""
    return EvalTable(BPRIME_GROUP, {
        c: bprime_e_value(c) for c in BPRIME_GROUP.characters()
    })


def bprime_contract(factors: Sequence[HMRep], rule: str = "s_minus2_parity") -> IntPoly:
    """Contract a slotwise tensor product term by term, without normalizing.

    Audit path for the rule switch: candidate rules are sensitive to the raw
    slot pattern of each term, so the 64 summands are classified directly.
    """
    total = IntPoly()
    for combo in product(*(f.coeffs.items() for f in factors)):
        char = combo[0][0]
        coeff = combo[0][1]
        for other_char, other_coeff in combo[1:]:
            char = char.raw_product(other_char)
            coeff = coeff * other_coeff
        total = total + coeff * bprime_e_value(char, rule)
    return total
