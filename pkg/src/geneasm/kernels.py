"""Brute-force scan of the arrangement space for the realism oracle.

Deciding whether a signed graph is the overlap graph of some encoded
arrangement means scanning kappa! * 2^kappa candidate arrangements; at
kappa = 8 that is ~10M pointer strings, by far the hottest loop in the
package.  The kernel below is plain scalar numpy code, JIT-compiled with
numba when available.  Set ``GENEASM_NO_NUMBA=1`` to force the
interpreted fallback (the same function, undecorated); the fallback is
also selected automatically when numba is not installed.

``benchmarks/bench_realism.py`` compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np


def _scan_impl(adjacency, positive_mask, kappa, out_perm):  # pragma: no cover - exercised via wrappers
    """Find an arrangement whose encoded string has the given overlap structure.

    adjacency[p] is a bitmask of the magnitudes overlapping p (bits 2..kappa),
    positive_mask a bitmask of the positive magnitudes.  Permutations of
    1..kappa are enumerated lexicographically, inversion masks in ascending
    order (bit t inverts the segment at slot t).  On a match the permutation
    is written to out_perm and the inversion mask returned; -1 means no
    arrangement matches.
    """
    n = 2 * kappa - 2
    perm = np.arange(1, kappa + 1, dtype=np.int64)
    mag = np.zeros(n, dtype=np.int64)
    barred = np.zeros(n, dtype=np.int64)
    first = np.zeros(kappa + 1, dtype=np.int64)
    second = np.zeros(kappa + 1, dtype=np.int64)

    while True:
        for inv in range(1 << kappa):
            pos = 0
            for t in range(kappa):
                k = perm[t]
                flip = (inv >> t) & 1
                if k == 1:
                    mag[pos] = 2
                    barred[pos] = flip
                    pos += 1
                elif k == kappa:
                    mag[pos] = kappa
                    barred[pos] = flip
                    pos += 1
                elif flip == 0:
                    mag[pos] = k
                    barred[pos] = 0
                    mag[pos + 1] = k + 1
                    barred[pos + 1] = 0
                    pos += 2
                else:
                    mag[pos] = k + 1
                    barred[pos] = 1
                    mag[pos + 1] = k
                    barred[pos + 1] = 1
                    pos += 2

            for p in range(2, kappa + 1):
                first[p] = -1
                second[p] = -1
            for i in range(n):
                p = mag[i]
                if first[p] < 0:
                    first[p] = i
                else:
                    second[p] = i

            ok = True
            for p in range(2, kappa + 1):
                positive = barred[first[p]] != barred[second[p]]
                if positive != (((positive_mask >> p) & 1) == 1):
                    ok = False
                    break
                m = 0
                for i in range(first[p] + 1, second[p]):
                    m ^= 1 << mag[i]
                if m != adjacency[p]:
                    ok = False
                    break
            if ok:
                for t in range(kappa):
                    out_perm[t] = perm[t]
                return inv

        # next permutation in lexicographic order
        i = kappa - 2
        while i >= 0 and perm[i] >= perm[i + 1]:
            i -= 1
        if i < 0:
            return -1
        j = kappa - 1
        while perm[j] <= perm[i]:
            j -= 1
        perm[i], perm[j] = perm[j], perm[i]
        lo = i + 1
        hi = kappa - 1
        while lo < hi:
            perm[lo], perm[hi] = perm[hi], perm[lo]
            lo += 1
            hi -= 1


scan_arrangements_python = _scan_impl

_numba_disabled = os.environ.get("GENEASM_NO_NUMBA", "") not in ("", "0")
scan_arrangements_numba = None
if not _numba_disabled:
    try:
        import numba
    except ImportError:  # pragma: no cover
        numba = None
    if numba is not None:
        scan_arrangements_numba = numba.njit(cache=True)(_scan_impl)

scan_arrangements = scan_arrangements_numba or scan_arrangements_python


def backend_name() -> str:
    return "numba" if scan_arrangements is scan_arrangements_numba else "python"


def scan_for_arrangement(adjacency_masks, positive_mask, kappa, scan=None):
    """Run the scan and decode the result into an arrangement tuple or None."""
    if scan is None:
        scan = scan_arrangements
    adjacency = np.zeros(kappa + 1, dtype=np.int64)
    for p, mask in adjacency_masks.items():
        adjacency[p] = mask
    out_perm = np.zeros(kappa, dtype=np.int64)
    inv = scan(adjacency, np.int64(positive_mask), np.int64(kappa), out_perm)
    if inv < 0:
        return None
    return tuple(
        -int(out_perm[t]) if (int(inv) >> t) & 1 else int(out_perm[t])
        for t in range(kappa)
    )
