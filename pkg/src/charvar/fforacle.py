"""Brute-force counts over SL(2, F_q) that cross-check the symbolic pipelines.

Everything here is finite: enumerate the group, tabulate multiplication,
count solutions of commutator equations by convolution, and compare the
counts against evaluated E-polynomials. No result from the symbolic side
feeds in, so agreement is evidence rather than circularity.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Union

import numpy as np

from . import blocks, reference
from ._kernels import get_backend

SUPPORTED_Q = (3, 5, 7, 11, 13)

# Exhaustive conjugation checks are quadratic in the group order; above
# this bound ClassFunction verification samples conjugators instead.
_EXHAUSTIVE_LIMIT = 7
_SAMPLE_CONJUGATORS = 48


class UnsupportedField(ValueError):
    """The field size is not an odd prime at most 13."""


class VerificationFailed(AssertionError):
    """An asserted oracle row disagrees with its polynomial value."""

    def __init__(self, rows: List[dict]):
        self.rows = rows
        names = ", ".join("%s@q=%d" % (r["name"], r["q"]) for r in rows)
        super().__init__("oracle disagrees on %d row(s): %s" % (len(rows), names))


def _validate_field(q: int) -> None:
    if q not in SUPPORTED_Q:
        raise UnsupportedField(
            "q must be an odd prime at most 13, got %r" % (q,))


class SL2Element:
    """One matrix [[a, b], [c, d]] over F_q with determinant 1."""

    __slots__ = ("a", "b", "c", "d", "q")

    def __init__(self, a: int, b: int, c: int, d: int, q: int):
        _validate_field(q)
        self.a = a % q
        self.b = b % q
        self.c = c % q
        self.d = d % q
        self.q = q
        if (self.a * self.d - self.b * self.c) % q != 1:
            raise ValueError("determinant is not 1 in F_%d" % q)

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.q

    def __mul__(self, other: "SL2Element") -> "SL2Element":
        if not isinstance(other, SL2Element):
            return NotImplemented
        if other.q != self.q:
            raise ValueError("elements live over different fields")
        return SL2Element(self.a * other.a + self.b * other.c,
                          self.a * other.b + self.b * other.d,
                          self.c * other.a + self.d * other.c,
                          self.c * other.b + self.d * other.d, self.q)

    def inverse(self) -> "SL2Element":
        return SL2Element(self.d, -self.b, -self.c, self.a, self.q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SL2Element):
            return NotImplemented
        return (self.a, self.b, self.c, self.d, self.q) == \
            (other.a, other.b, other.c, other.d, other.q)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d, self.q))

    def __repr__(self) -> str:
        return "SL2Element(%d, %d, %d, %d, q=%d)" % (
            self.a, self.b, self.c, self.d, self.q)


class _Tables(NamedTuple):
    q: int
    entries: np.ndarray
    lookup: np.ndarray
    mul: np.ndarray
    inv: np.ndarray
    tr: np.ndarray
    order: int


@lru_cache(maxsize=None)
def _tables(q: int) -> _Tables:
    _validate_field(q)
    rng = np.arange(q, dtype=np.int64)
    a, b, c, d = [x.ravel() for x in np.meshgrid(rng, rng, rng, rng,
                                                 indexing="ij")]
    keep = (a * d - b * c) % q == 1
    entries = np.stack([a[keep], b[keep], c[keep], d[keep]], axis=1)
    order = len(entries)
    if order != q ** 3 - q:
        raise ArithmeticError("group enumeration produced %d elements" % order)
    lookup = np.full(q ** 4, -1, np.int32)
    flat = ((entries[:, 0] * q + entries[:, 1]) * q
            + entries[:, 2]) * q + entries[:, 3]
    lookup[flat] = np.arange(order, dtype=np.int32)
    backend = get_backend()
    mul = backend.mul_table(entries, lookup, q)
    inv = backend.inv_perm(entries, lookup, q)
    tr = (entries[:, 0] + entries[:, 3]) % q
    return _Tables(q, entries, lookup, mul, inv, tr, order)


def _index_of(tables: _Tables, a: int, b: int, c: int, d: int) -> int:
    q = tables.q
    idx = int(tables.lookup[(((a % q) * q + b % q) * q + c % q) * q + d % q])
    if idx < 0:
        raise ValueError("matrix is not in SL(2, F_%d)" % q)
    return idx


def _center_index(tables: _Tables, center: str) -> int:
    if center == "id":
        return _index_of(tables, 1, 0, 0, 1)
    if center == "minus-id":
        return _index_of(tables, -1, 0, 0, -1)
    raise ValueError("center must be 'id' or 'minus-id', got %r" % (center,))


class ClassFunction:
    """Integer-valued function on SL(2, F_q), stored densely by group index."""

    __slots__ = ("q", "values", "class_constant")

    def __init__(self, q: int, values, class_constant: bool = False):
        _validate_field(q)
        arr = np.ascontiguousarray(values, dtype=np.int64)
        if arr.shape != (q ** 3 - q,):
            raise ValueError("expected %d values, got shape %r"
                             % (q ** 3 - q, arr.shape))
        self.q = q
        self.values = arr
        self.class_constant = bool(class_constant)

    def __getitem__(self, element: SL2Element) -> int:
        if element.q != self.q:
            raise ValueError("element lives over a different field")
        t = _tables(self.q)
        return int(self.values[_index_of(t, element.a, element.b,
                                         element.c, element.d)])

    def total(self) -> int:
        # Python ints: at q=13 genus-3 totals exceed the int64 range even
        # though every individual entry fits.
        return sum(self.values.tolist())


def _verify_class_constant(tables: _Tables, values: np.ndarray) -> bool:
    backend = get_backend()
    if tables.q <= _EXHAUSTIVE_LIMIT:
        return bool(backend.conjugation_invariant(values, tables.mul,
                                                  tables.inv))
    picks = random.Random(tables.q).sample(range(tables.order),
                                           _SAMPLE_CONJUGATORS)
    for g in picks:
        orbit = tables.mul[tables.mul[g], tables.inv[g]]
        if not np.array_equal(values[orbit], values):
            return False
    return True


def sl2_enumerate(q: int) -> List[SL2Element]:
    """All of SL(2, F_q) in canonical (a, b, c, d) lexicographic order."""
    t = _tables(q)
    return [SL2Element(int(a), int(b), int(c), int(d), q)
            for a, b, c, d in t.entries]


def commutator_distribution(q: int) -> ClassFunction:
    """Count pairs (A, B) with [A, B] = g, for every g at once."""
    t = _tables(q)
    counts = get_backend().commutator_counts(t.mul, t.inv)
    mass = sum(counts.tolist())
    if mass != t.order ** 2:
        raise ArithmeticError("commutator mass %d != |G|^2" % mass)
    return ClassFunction(q, counts,
                         class_constant=_verify_class_constant(t, counts))


def genus_convolve(n1: ClassFunction, g: int) -> ClassFunction:
    """Fold the one-handle distribution g times under group convolution.

    The result counts 2g-tuples (A_1, B_1, ..., A_g, B_g) whose commutator
    product lands on each group element.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    t = _tables(n1.q)
    backend = get_backend()
    out = n1.values
    for _ in range(g - 1):
        out = backend.convolve(out, n1.values, t.mul, t.inv)
    mass = sum(out.tolist())
    if mass != t.order ** (2 * g):
        raise ArithmeticError("genus-%d mass %d != |G|^%d" % (g, mass, 2 * g))
    return ClassFunction(n1.q, out, class_constant=n1.class_constant)


def _special_trace_count(t1: int, t2: int, t3: int, q: int) -> int:
    pm2 = (2 % q, q - 2)
    return sum(1 for t in (t1, t2, t3) if t in pm2)


def _on_relation_surface(t1: int, t2: int, t3: int, q: int) -> bool:
    return (t1 * t1 + t2 * t2 + t3 * t3 + t1 * t2 * t3) % q == 4 % q


def _pred_points(t1, t2, t3, q):
    return _special_trace_count(t1, t2, t3, q) == 3


def _pred_lines(t1, t2, t3, q):
    k = _special_trace_count(t1, t2, t3, q)
    return k == 2 or (k == 1 and _on_relation_surface(t1, t2, t3, q))


def _pred_planes(t1, t2, t3, q):
    return (_special_trace_count(t1, t2, t3, q) == 1
            and not _on_relation_surface(t1, t2, t3, q))


def _pred_quadric(t1, t2, t3, q):
    return (_special_trace_count(t1, t2, t3, q) == 0
            and _on_relation_surface(t1, t2, t3, q))


def _pred_generic(t1, t2, t3, q):
    return (_special_trace_count(t1, t2, t3, q) == 0
            and not _on_relation_surface(t1, t2, t3, q))


StratumPredicate = Callable[[int, int, int, int], bool]

STRATUM_PREDICATES: Dict[str, StratumPredicate] = {
    "points": _pred_points,
    "lines": _pred_lines,
    "planes": _pred_planes,
    "quadric": _pred_quadric,
    "generic": _pred_generic,
}


def trace_stratum_count(q: int, g: int = 3, center: str = "minus-id",
                        predicate: Union[str, StratumPredicate] = "generic",
                        ) -> int:
    """Weight of one trace cell in the three-factor commutator count.

    Splits the genus-3 solution count over the traces (t1, t2, t3) of the
    three partial commutator products and sums the cells the predicate
    selects. Only q in {3, 5} keeps the full triple table cheap enough to
    be worth tabulating.
    """
    if q not in (3, 5):
        raise UnsupportedField(
            "trace cell tabulation is only wired for q in {3, 5}")
    if g != 3:
        raise ValueError("trace cells are defined for the genus-3 count")
    if isinstance(predicate, str):
        predicate = STRATUM_PREDICATES[predicate]
    t = _tables(q)
    n1 = commutator_distribution(q)
    cells = get_backend().trace_triple_counts(
        n1.values, t.mul, t.inv, t.tr, _center_index(t, center), q)
    n3 = genus_convolve(n1, 3)
    if sum(cells.tolist()) != n3[_center_element(q, center)]:
        raise ArithmeticError("trace cells do not add up to the total count")
    total = 0
    for t1 in range(q):
        for t2 in range(q):
            for t3 in range(q):
                if predicate(t1, t2, t3, q):
                    total += int(cells[(t1 * q + t2) * q + t3])
    return total


def _center_element(q: int, center: str) -> SL2Element:
    if center == "id":
        return SL2Element(1, 0, 0, 1, q)
    return SL2Element(-1, 0, 0, -1, q)


def _split_eigenvalue(q: int) -> Optional[int]:
    # Smallest quadratic residue other than +-1; the twisted fiber counts
    # only reproduce the polynomial when the eigenvalue is a square.
    residues = sorted({pow(x, 2, q) for x in range(1, q)})
    for lam in residues:
        if lam not in (1, q - 1):
            return lam
    return None


def _row(name: str, q: int, expected: int, count: int, asserted: bool) -> dict:
    return {"name": name, "q": q, "expected": expected, "count": count,
            "match": expected == count, "asserted": asserted}


def verify_table(q_list: Optional[Sequence[int]] = None) -> List[dict]:
    """Compare solution counts against evaluated polynomials, field by field.

    Untwisted rows are asserted for every supported q. Twisted and fiber
    rows are asserted only when q = 1 (mod 4); for q = 3 (mod 4) they are
    recorded in the output with asserted=False, since -Id solution counts
    genuinely depart from the polynomial values there. Raises
    VerificationFailed if any asserted row disagrees.
    """
    if q_list is None:
        q_list = SUPPORTED_Q
    for q in q_list:
        _validate_field(q)
    rows: List[dict] = []
    for q in q_list:
        t = _tables(q)
        n1 = commutator_distribution(q)
        n2 = genus_convolve(n1, 2)
        n3 = genus_convolve(n1, 3)
        idx_id = _index_of(t, 1, 0, 0, 1)
        idx_neg = _index_of(t, -1, 0, 0, -1)
        idx_jp = _index_of(t, 1, 1, 0, 1)
        idx_jm = _index_of(t, -1, 1, 0, -1)

        def poly_at(name: str) -> int:
            if reference.has_constant(name):
                return reference.expected(name)(q)
            return blocks.poly(name)(q)

        split = q % 4 == 1
        plan = [
            ("e_X0", n1, idx_id, True),
            ("e_Y0", n2, idx_id, True),
            ("e_v_total", n3, idx_id, True),
            ("e_X1", n1, idx_neg, split),
            ("e_Y1", n2, idx_neg, split),
            ("e_w_total", n3, idx_neg, split),
            ("e_X2bar", n1, idx_jp, split),
            ("e_X3bar", n1, idx_jm, split),
            ("e_Y2bar", n2, idx_jp, split),
            ("e_Y3bar", n2, idx_jm, split),
        ]
        lam = _split_eigenvalue(q)
        if lam is not None:
            idx_xi = _index_of(t, lam, 0, 0, pow(lam, q - 2, q))
            plan.append(("e_X4lambdabar", n1, idx_xi, split))
            plan.append(("e_Y4lambdabar", n2, idx_xi, split))
        for name, dist, idx, asserted in plan:
            rows.append(_row(name, q, poly_at(name), int(dist.values[idx]),
                             asserted))
    bad = [r for r in rows if r["asserted"] and not r["match"]]
    if bad:
        raise VerificationFailed(bad)
    return rows
