"""Array kernels for the finite-group oracle, numba-accelerated when possible.

The CHARVAR_KERNELS environment variable pins the backend to "numba" or
"numpy"; unset, numba is used when importable and numpy otherwise. Both
backends return identical integers on every input, so the flag trades
speed only. Library results never depend on it.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np


class Backend(NamedTuple):
    name: str
    mul_table: Callable
    inv_perm: Callable
    commutator_counts: Callable
    convolve: Callable
    trace_triple_counts: Callable
    conjugation_invariant: Callable


# -- numpy reference implementations ------------------------------------


def _np_mul_table(entries: np.ndarray, lookup: np.ndarray, q: int) -> np.ndarray:
    a = entries[:, 0].astype(np.int64)
    b = entries[:, 1].astype(np.int64)
    c = entries[:, 2].astype(np.int64)
    d = entries[:, 3].astype(np.int64)
    n = len(entries)
    mul = np.empty((n, n), np.int32)
    for i in range(n):
        ai, bi, ci, di = (int(entries[i, 0]), int(entries[i, 1]),
                          int(entries[i, 2]), int(entries[i, 3]))
        pa = (ai * a + bi * c) % q
        pb = (ai * b + bi * d) % q
        pc = (ci * a + di * c) % q
        pd = (ci * b + di * d) % q
        mul[i] = lookup[((pa * q + pb) * q + pc) * q + pd]
    return mul


def _np_inv_perm(entries: np.ndarray, lookup: np.ndarray, q: int) -> np.ndarray:
    a = entries[:, 0].astype(np.int64)
    b = entries[:, 1].astype(np.int64)
    c = entries[:, 2].astype(np.int64)
    d = entries[:, 3].astype(np.int64)
    # det = 1, so the adjugate is the inverse.
    ia, ib, ic, id_ = d % q, (-b) % q, (-c) % q, a % q
    return lookup[((ia * q + ib) * q + ic) * q + id_].astype(np.int32)


def _np_commutator_counts(mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    counts = np.zeros(n, np.int64)
    for g in range(n):
        left = mul[g]
        right = mul[inv[g]][inv]
        comm = mul[left, right]
        counts += np.bincount(comm, minlength=n)
    return counts


def _np_convolve(na: np.ndarray, nb: np.ndarray,
                 mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    out = np.zeros(n, np.int64)
    for x in range(n):
        w = na[x]
        if w:
            out += w * nb[mul[inv[x]]]
    return out


def _np_trace_triple_counts(n1: np.ndarray, mul: np.ndarray, inv: np.ndarray,
                            tr: np.ndarray, center: int, q: int) -> np.ndarray:
    counts = np.zeros(q * q * q, np.int64)
    tr = tr.astype(np.int64)
    for c1 in range(len(n1)):
        w1 = int(n1[c1])
        if w1 == 0:
            continue
        c3 = mul[inv[mul[c1]], center]
        flat = (int(tr[c1]) * q + tr) * q + tr[c3]
        np.add.at(counts, flat, w1 * n1 * n1[c3])
    return counts


def _np_conjugation_invariant(values: np.ndarray, mul: np.ndarray,
                              inv: np.ndarray) -> bool:
    n = mul.shape[0]
    for g in range(n):
        orbit = mul[mul[g], inv[g]]
        if not np.array_equal(values[orbit], values):
            return False
    return True


_NUMPY = Backend("numpy", _np_mul_table, _np_inv_perm, _np_commutator_counts,
                 _np_convolve, _np_trace_triple_counts,
                 _np_conjugation_invariant)


# -- numba implementations (loop bodies compiled on first use) -----------


def _nb_mul_table(entries, lookup, q):  # pragma: no cover - mirrored by numpy
    n = entries.shape[0]
    mul = np.empty((n, n), np.int32)
    for i in range(n):
        ai, bi, ci, di = entries[i, 0], entries[i, 1], entries[i, 2], entries[i, 3]
        for j in range(n):
            a, b, c, d = entries[j, 0], entries[j, 1], entries[j, 2], entries[j, 3]
            pa = (ai * a + bi * c) % q
            pb = (ai * b + bi * d) % q
            pc = (ci * a + di * c) % q
            pd = (ci * b + di * d) % q
            mul[i, j] = lookup[((pa * q + pb) * q + pc) * q + pd]
    return mul


def _nb_inv_perm(entries, lookup, q):  # pragma: no cover
    n = entries.shape[0]
    out = np.empty(n, np.int32)
    for i in range(n):
        a, b, c, d = entries[i, 0], entries[i, 1], entries[i, 2], entries[i, 3]
        ia, ib, ic, id_ = d % q, (-b) % q, (-c) % q, a % q
        out[i] = lookup[((ia * q + ib) * q + ic) * q + id_]
    return out


def _nb_commutator_counts(mul, inv):  # pragma: no cover
    n = mul.shape[0]
    counts = np.zeros(n, np.int64)
    for g in range(n):
        ig = inv[g]
        for h in range(n):
            comm = mul[mul[g, h], mul[ig, inv[h]]]
            counts[comm] += 1
    return counts


def _nb_convolve(na, nb, mul, inv):  # pragma: no cover
    n = mul.shape[0]
    out = np.zeros(n, np.int64)
    for x in range(n):
        w = na[x]
        if w != 0:
            row = mul[inv[x]]
            for c in range(n):
                out[c] += w * nb[row[c]]
    return out


def _nb_trace_triple_counts(n1, mul, inv, tr, center, q):  # pragma: no cover
    counts = np.zeros(q * q * q, np.int64)
    n = mul.shape[0]
    for c1 in range(n):
        w1 = n1[c1]
        if w1 == 0:
            continue
        t1 = tr[c1]
        for c2 in range(n):
            c3 = mul[inv[mul[c1, c2]], center]
            flat = (t1 * q + tr[c2]) * q + tr[c3]
            counts[flat] += w1 * n1[c2] * n1[c3]
    return counts


def _nb_conjugation_invariant(values, mul, inv):  # pragma: no cover
    n = mul.shape[0]
    for g in range(n):
        ig = inv[g]
        for h in range(n):
            if values[mul[mul[g, h], ig]] != values[h]:
                return False
    return True


def _build_numba() -> Backend:
    import numba

    jit = numba.njit(cache=True)
    return Backend("numba", jit(_nb_mul_table), jit(_nb_inv_perm),
                   jit(_nb_commutator_counts), jit(_nb_convolve),
                   jit(_nb_trace_triple_counts), jit(_nb_conjugation_invariant))


@lru_cache(maxsize=None)
def get_backend(name: "str | None" = None) -> Backend:
    """Resolve a backend by name, or by CHARVAR_KERNELS, or by availability."""
    if name is None:
        name = os.environ.get("CHARVAR_KERNELS")
    if name == "numpy":
        return _NUMPY
    if name == "numba":
        return _build_numba()
    if name is None:
        try:
            return _build_numba()
        except ImportError:
            return _NUMPY
    raise ValueError("unknown kernel backend %r" % name)
