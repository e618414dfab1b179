"""Array kernels for the Garside left normal form.

A simple (permutation) braid on ``n`` strands is stored as a 0-based int64
array ``p`` where ``p[j]`` is the end position of the strand that starts at
position ``j``.  A normal form is an infimum ``inf`` together with a
``(k, n)`` array of non-trivial, non-Delta simple factors.

Set ``BRAIDKIT_DISABLE_NUMBA=1`` to run the interpreted fallback; the same
source is used for both paths.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_DISABLED = os.environ.get("BRAIDKIT_DISABLE_NUMBA", "") not in ("", "0")
USE_NUMBA = numba is not None and not NUMBA_DISABLED


def _finishing(a, i):
    # sigma_i is a right divisor of a: the strands ending at i, i+1 crossed
    n = a.shape[0]
    left = -1
    right = -1
    for j in range(n):
        if a[j] == i:
            left = j
        elif a[j] == i + 1:
            right = j
    return left > right


def _make_left_weighted(a, b):
    """Slide generators from the front of ``b`` onto the end of ``a``; True if anything moved."""
    n = a.shape[0]
    moved = False
    i = 0
    while i < n - 1:
        if b[i] > b[i + 1] and not _finishing(a, i):
            for j in range(n):
                if a[j] == i:
                    a[j] = i + 1
                elif a[j] == i + 1:
                    a[j] = i
            tmp = b[i]
            b[i] = b[i + 1]
            b[i + 1] = tmp
            moved = True
            i = 0
        else:
            i += 1
    return moved


def _is_identity(a):
    for j in range(a.shape[0]):
        if a[j] != j:
            return False
    return True


def _is_delta(a):
    n = a.shape[0]
    for j in range(n):
        if a[j] != n - 1 - j:
            return False
    return True


def _left_normal_form(letters, n):
    """Return ``(inf, factors)`` for the braid word ``letters`` on ``n`` strands."""
    m = letters.shape[0]
    # Each negative letter sigma_i^-1 is Delta^-1 times the simple braid
    # Delta sigma_i^-1.  Moving all Delta^-1 to the front flips every earlier
    # factor once per later negative letter.
    flips = np.zeros(m, dtype=np.int64)
    neg = 0
    for pos in range(m - 1, -1, -1):
        flips[pos] = neg
        if letters[pos] < 0:
            neg += 1
    inf = -neg

    factors = np.empty((m + 1, n), dtype=np.int64)
    k = 0
    simple = np.empty(n, dtype=np.int64)
    for pos in range(m):
        x = letters[pos]
        if x > 0:
            g = x - 1
            for j in range(n):
                simple[j] = j
            simple[g] = g + 1
            simple[g + 1] = g
        else:
            # permutation of Delta sigma_g^-1: reverse, then undo the last crossing
            g = -x - 1
            for j in range(n):
                r = n - 1 - j
                if r == g:
                    r = g + 1
                elif r == g + 1:
                    r = g
                simple[j] = r
        if flips[pos] % 2 == 1:
            for j in range(n):
                factors[k, n - 1 - j] = n - 1 - simple[j]
        else:
            for j in range(n):
                factors[k, j] = simple[j]
        k += 1
        idx = k - 2
        while idx >= 0:
            if not _make_left_weighted(factors[idx], factors[idx + 1]):
                break
            idx -= 1
        lead = 0
        while lead < k and _is_delta(factors[lead]):
            lead += 1
        if lead > 0:
            inf += lead
            for r in range(lead, k):
                for j in range(n):
                    factors[r - lead, j] = factors[r, j]
            k -= lead
        while k > 0 and _is_identity(factors[k - 1]):
            k -= 1
    return inf, factors[:k].copy()


def _strand_positions(letters, n):
    """Final position of each strand (0-based) after reading ``letters``."""
    at = np.arange(n, dtype=np.int64)
    for pos in range(letters.shape[0]):
        g = abs(letters[pos]) - 1
        tmp = at[g]
        at[g] = at[g + 1]
        at[g + 1] = tmp
    out = np.empty(n, dtype=np.int64)
    for p in range(n):
        out[at[p]] = p
    return out


if USE_NUMBA:
    _opts = dict(cache=True, nogil=True)
    _finishing = numba.njit(**_opts)(_finishing)
    _make_left_weighted = numba.njit(**_opts)(_make_left_weighted)
    _is_identity = numba.njit(**_opts)(_is_identity)
    _is_delta = numba.njit(**_opts)(_is_delta)
    left_normal_form = numba.njit(**_opts)(_left_normal_form)
    strand_positions = numba.njit(**_opts)(_strand_positions)
else:
    left_normal_form = _left_normal_form
    strand_positions = _strand_positions
