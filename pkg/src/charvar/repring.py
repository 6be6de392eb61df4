"""Calculus of monodromy representations over elementary abelian 2-groups.

Every local system that appears in the stratifications has monodromy group
(Z/2)^k for some k <= 4, so characters are bit vectors composing by XOR and
a representation is a finite formal sum of characters with IntPoly weights.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping

from .polyring import IntPoly, _coerce


class GroupMismatch(ValueError):
    """Operands live over different monodromy groups."""


class RankMismatch(ValueError):
    """A character map does not fit the rank of its operand."""


class MonodromyGroup:
    """The group (Z/2)^rank with a label per generating loop."""

    __slots__ = ("rank", "generator_labels")

    def __init__(self, rank: int, generator_labels: Iterable[str]):
        labels = tuple(generator_labels)
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        if len(labels) != rank:
            raise ValueError("need %d labels, got %d" % (rank, len(labels)))
        self.rank = rank
        self.generator_labels = labels

    def trivial(self) -> "Character":
        return Character((0,) * self.rank)

    def characters(self) -> "list[Character]":
        return [Character(bits) for bits in product((0, 1), repeat=self.rank)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonodromyGroup):
            return NotImplemented
        return (self.rank, self.generator_labels) == (other.rank, other.generator_labels)

    def __hash__(self) -> int:
        return hash((self.rank, self.generator_labels))

    def __repr__(self) -> str:
        return "MonodromyGroup(%d, %r)" % (self.rank, list(self.generator_labels))


class Character:
    """One-dimensional character of (Z/2)^k, stored as its bit vector."""

    __slots__ = ("bits",)

    def __init__(self, bits: Iterable[int]):
        bt = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bt):
            raise ValueError("bits must be 0 or 1: %r" % (bt,))
        self.bits = bt

    def __mul__(self, other: "Character") -> "Character":
        if len(self.bits) != len(other.bits):
            raise RankMismatch("cannot multiply characters of ranks %d and %d"
                               % (len(self.bits), len(other.bits)))
        return Character(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return "Character(%r)" % (self.bits,)


class HMRep:
    """Formal sum of characters with polynomial coefficients (zeros dropped)."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: MonodromyGroup, coeffs: Mapping[Character, IntPoly]):
        clean: dict[Character, IntPoly] = {}
        for char, poly in coeffs.items():
            if len(char.bits) != group.rank:
                raise RankMismatch("character %r does not fit rank %d" % (char, group.rank))
            poly = _coerce(poly)
            if poly:
                clean[char] = poly
        self.group = group
        self.coeffs = clean

    def coefficient(self, char: Character) -> IntPoly:
        return self.coeffs.get(char, IntPoly())

    def __add__(self, other: "HMRep") -> "HMRep":
        if self.group != other.group:
            raise GroupMismatch("cannot add over %r and %r" % (self.group, other.group))
        out = dict(self.coeffs)
        for char, poly in other.coeffs.items():
            out[char] = out.get(char, IntPoly()) + poly
        return HMRep(self.group, out)

    def __sub__(self, other: "HMRep") -> "HMRep":
        return self + (-other)

    def __neg__(self) -> "HMRep":
        return HMRep(self.group, {c: -p for c, p in self.coeffs.items()})

    def __rmul__(self, scalar: "IntPoly | int") -> "HMRep":
        scalar = _coerce(scalar)
        return HMRep(self.group, {c: scalar * p for c, p in self.coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HMRep):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = sorted(self.coeffs.items(), key=lambda kv: kv[0].bits)
        body = " + ".join("(%s)*chi%r" % (p, c.bits) for c, p in terms) or "0"
        return "<HMRep over %r: %s>" % (self.group, body)


class EvalTable:
    """E-polynomial of the fiber class attached to each character; total map."""

    __slots__ = ("group", "values")

    def __init__(self, group: MonodromyGroup, values: Mapping[Character, IntPoly]):
        table: dict[Character, IntPoly] = {}
        for char, poly in values.items():
            if len(char.bits) != group.rank:
                raise RankMismatch("character %r does not fit rank %d" % (char, group.rank))
            table[char] = _coerce(poly)
        missing = [c for c in group.characters() if c not in table]
        if missing:
            raise ValueError("table misses characters %r" % (missing,))
        self.group = group
        self.values = table

    def __call__(self, char: Character) -> IntPoly:
        return self.values[char]


class CharMap:
    """Linear map of character bit vectors, given by generator images."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: MonodromyGroup, target: MonodromyGroup,
                 images: Iterable[Character]):
        imgs = tuple(images)
        if len(imgs) != source.rank:
            raise RankMismatch("need %d generator images, got %d"
                               % (source.rank, len(imgs)))
        for char in imgs:
            if len(char.bits) != target.rank:
                raise RankMismatch("image %r does not fit rank %d" % (char, target.rank))
        self.source = source
        self.target = target
        self.images = imgs

    def __call__(self, char: Character) -> Character:
        if len(char.bits) != self.source.rank:
            raise RankMismatch("character %r does not fit rank %d"
                               % (char, self.source.rank))
        out = self.target.trivial()
        for bit, image in zip(char.bits, self.images):
            if bit:
                out = out * image
        return out


def rep_tensor(r1: HMRep, r2: HMRep) -> HMRep:
    """Tensor product: convolution of coefficients over the character group."""
    if r1.group != r2.group:
        raise GroupMismatch("tensor over %r and %r" % (r1.group, r2.group))
    out: dict[Character, IntPoly] = {}
    for c1, p1 in r1.coeffs.items():
        for c2, p2 in r2.coeffs.items():
            c = c1 * c2
            out[c] = out.get(c, IntPoly()) + p1 * p2
    return HMRep(r1.group, out)


def _transport(h: CharMap, r: HMRep) -> HMRep:
    if h.source != r.group:
        raise RankMismatch("map source %r does not match %r" % (h.source, r.group))
    out: dict[Character, IntPoly] = {}
    for char, poly in r.coeffs.items():
        image = h(char)
        out[image] = out.get(image, IntPoly()) + poly
    return HMRep(h.target, out)


def rep_pullback(h: CharMap, r: HMRep) -> HMRep:
    """Relabel characters along h; coefficients on coinciding images add."""
    return _transport(h, r)


def rep_collapse(s: CharMap, r: HMRep) -> HMRep:
    """Sum coefficients of characters with equal image under the surjection s."""
    return _transport(s, r)


def rep_e_map(r: HMRep, tbl: EvalTable) -> IntPoly:
    """Contract a representation against the fiber table: sum coeff * e."""
    if r.group != tbl.group:
        raise GroupMismatch("e-map over %r with table over %r" % (r.group, tbl.group))
    out = IntPoly()
    for char, poly in r.coeffs.items():
        out = out + poly * tbl(char)
    return out


def rep_partial_push(r: HMRep, fiber_tbl: EvalTable) -> HMRep:
    """Push down the trailing factor: (chi1, chi2) sends coeff*e(chi2) to chi1.

    The group of r must end with the generators of fiber_tbl's group; the
    result lives over the leading generators.
    """
    head = r.group.rank - fiber_tbl.group.rank
    if head <= 0:
        raise GroupMismatch("fiber rank %d leaves no base factor in rank %d"
                            % (fiber_tbl.group.rank, r.group.rank))
    if r.group.generator_labels[head:] != fiber_tbl.group.generator_labels:
        raise GroupMismatch("trailing labels %r do not match fiber %r"
                            % (r.group.generator_labels[head:],
                               fiber_tbl.group.generator_labels))
    base = MonodromyGroup(head, r.group.generator_labels[:head])
    out: dict[Character, IntPoly] = {}
    for char, poly in r.coeffs.items():
        chi1 = Character(char.bits[:head])
        chi2 = Character(char.bits[head:])
        out[chi1] = out.get(chi1, IntPoly()) + poly * fiber_tbl(chi2)
    return HMRep(base, out)
