"""Exhaustive codeword scans.

The hot loop of every distance computation enumerates all q**k
message vectors and finds the minimum Hamming weight of msg @ G mod q.
Two interchangeable implementations are provided:

    scan_njit    compiled odometer walk, one row-add per digit change
    scan_numpy   chunked matrix products over blocks of message indices

Both enumerate messages in base-q counting order (coefficient 0 is the
least significant digit), return the same (min_weight, counts) pair,
and count the zero message in counts[0].  ``scan`` picks the compiled
path unless numba is unavailable or MADICS_NO_NUMBA is set to a
nonempty value other than "0".
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via MADICS_NO_NUMBA
    HAVE_NUMBA = False

    def _njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


def numba_disabled_by_env():
    flag = os.environ.get("MADICS_NO_NUMBA", "")
    return flag not in ("", "0")


@_njit(cache=True)
def _odometer_scan(gmat, q, counts):
    k, n = gmat.shape
    msg = np.zeros(k, np.int64)
    word = np.zeros(n, np.int64)
    total = 1
    for _ in range(k):
        total *= q
    best = n + 1
    counts[0] += 1
    for _ in range(total - 1):
        # rolling a digit from q-1 to 0 adds the row once, mod q
        i = 0
        while msg[i] == q - 1:
            msg[i] = 0
            for t in range(n):
                word[t] = (word[t] + gmat[i, t]) % q
            i += 1
        msg[i] += 1
        for t in range(n):
            word[t] = (word[t] + gmat[i, t]) % q
        w = 0
        for t in range(n):
            if word[t] != 0:
                w += 1
        counts[w] += 1
        if w < best:
            best = w
    return best


def scan_njit(gmat, q):
    """Compiled scan; returns (min nonzero-message weight, counts)."""
    gmat = np.ascontiguousarray(gmat, dtype=np.int64)
    counts = np.zeros(gmat.shape[1] + 1, dtype=np.int64)
    best = _odometer_scan(gmat, q, counts)
    return int(best), counts


def scan_numpy(gmat, q, chunk=1 << 13):
    """Pure-numpy scan; same contract and enumeration order as scan_njit."""
    gmat = np.ascontiguousarray(gmat, dtype=np.int64)
    k, n = gmat.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    counts[0] += 1
    total = q**k
    best = n + 1
    powers = q ** np.arange(k, dtype=np.int64)
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // powers[None, :]) % q
        words = (msgs @ gmat) % q
        ws = np.count_nonzero(words, axis=1)
        counts += np.bincount(ws, minlength=n + 1)
        blockmin = int(ws.min())
        if blockmin < best:
            best = blockmin
    return best, counts


def scan(gmat, q, use_numba=None):
    """Dispatch to the compiled or numpy scan.

    use_numba=None honors MADICS_NO_NUMBA and numba availability;
    True/False force a path (True raises if numba is missing).
    """
    if use_numba is None:
        use_numba = HAVE_NUMBA and not numba_disabled_by_env()
    if use_numba:
        if not HAVE_NUMBA:
            raise RuntimeError("numba requested but not importable")
        return scan_njit(gmat, q)
    return scan_numpy(gmat, q)


def codeword_support_table(gmat, q):
    """All q**k codewords as a 0/1 support matrix, rows in the same
    base-q counting order as the scans.  Used by the ring cross-check,
    which needs supports rather than weights."""
    gmat = np.ascontiguousarray(gmat, dtype=np.int64)
    k, n = gmat.shape
    total = q**k
    powers = q ** np.arange(k, dtype=np.int64)
    idx = np.arange(total, dtype=np.int64)
    msgs = (idx[:, None] // powers[None, :]) % q
    words = (msgs @ gmat) % q
    return (words != 0).astype(np.uint8)
