"""Backtracking kernels for the exhaustive enumerators.

Every walker visits the prefix tree of one family depth first, in
lexicographic order, and never extends a prefix that already violates the
family condition.  A walker returns the number of complete objects, or -1 as
soon as that number would exceed ``ceiling``.  With ``store`` set it also
writes each object as a row of ``out`` (0-indexed entries), so listing is a
count pass followed by a fill pass into an array of the right height.

The kernels are compiled with numba when it is importable.  Setting the
environment variable ``INVSEQ_DISABLE_JIT`` to anything but ``""``/``"0"``
runs the identical source as plain Python over numpy arrays; the compiled and
interpreted paths must agree object for object.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "INVSEQ_DISABLE_JIT"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

JIT_ENABLED = numba is not None and os.environ.get(ENV_FLAG, "") in ("", "0")


def _jit(fn):
    if JIT_ENABLED:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def py_func(kernel):
    """The uncompiled source of ``kernel`` (the kernel itself when not jitted)."""
    return getattr(kernel, "py_func", kernel)


@_jit
def walk_inversions(n, ceiling, out, store):
    # Every inversion sequence: position d (0-based) takes values 0..d.
    e = np.zeros(n, np.int64)
    count = 0
    d = 0
    while d >= 0:
        if e[d] > d:
            d -= 1
            if d >= 0:
                e[d] += 1
            continue
        if d == n - 1:
            if count >= ceiling:
                return -1
            if store:
                out[count, :] = e
            count += 1
            e[d] += 1
        else:
            d += 1
            e[d] = 0
    return count


@_jit
def walk_ggm(n, ceiling, out, store):
    # No weakly decreasing triple.  State before position d: the running
    # maximum and the largest non-record entry (both -1 when absent).  A value
    # b extends the prefix iff largest_nonrecord < b <= d.
    e = np.zeros(n, np.int64)
    top = np.empty(n + 1, np.int64)
    low = np.empty(n + 1, np.int64)
    top[0] = -1
    low[0] = -1
    count = 0
    d = 0
    e[0] = 0
    while d >= 0:
        b = e[d]
        if b > d:
            d -= 1
            if d >= 0:
                e[d] += 1
            continue
        if b > top[d]:
            top[d + 1] = b
            low[d + 1] = low[d]
        else:
            top[d + 1] = top[d]
            low[d + 1] = b
        if d == n - 1:
            if count >= ceiling:
                return -1
            if store:
                out[count, :] = e
            count += 1
            e[d] += 1
        else:
            d += 1
            e[d] = low[d] + 1
    return count


@_jit
def walk_kaw(n, k, ceiling, out, store):
    # e_i <= max(e_{i-1}, ..., e_{i-k}) + 1, entries before the start read 0.
    e = np.zeros(n, np.int64)
    count = 0
    d = 0
    while d >= 0:
        w = 0
        for m in range(d - k, d):
            if m >= 0 and e[m] > w:
                w = e[m]
        bound = w + 1
        if bound > d:
            bound = d
        if e[d] > bound:
            d -= 1
            if d >= 0:
                e[d] += 1
            continue
        if d == n - 1:
            if count >= ceiling:
                return -1
            if store:
                out[count, :] = e
            count += 1
            e[d] += 1
        else:
            d += 1
            e[d] = 0
    return count


@_jit
def walk_ascent(n, avoid210, primitive, ceiling, out, store):
    # Ascent sequences, optionally 210-avoiding and/or primitive.  State before
    # position d: ascent count, running maximum, and the largest value that is
    # already the "1" of a 21 pattern (-1 if none).  A new value c completes a
    # 210 exactly when c is below that last quantity.
    x = np.zeros(n, np.int64)
    ascents = np.zeros(n + 1, np.int64)
    top = np.zeros(n + 1, np.int64)
    mid = np.full(n + 1, -1, np.int64)
    count = 0
    d = 0
    while d >= 0:
        c = x[d]
        bound = 0 if d == 0 else ascents[d] + 1
        if c > bound:
            d -= 1
            if d >= 0:
                x[d] += 1
            continue
        if d > 0 and ((avoid210 and c < mid[d]) or (primitive and c == x[d - 1])):
            x[d] += 1
            continue
        if d == 0:
            ascents[1] = 0
            top[1] = c
            mid[1] = -1
        else:
            ascents[d + 1] = ascents[d] + (1 if c > x[d - 1] else 0)
            top[d + 1] = top[d] if top[d] > c else c
            mid[d + 1] = mid[d]
            if c < top[d] and c > mid[d]:
                mid[d + 1] = c
        if d == n - 1:
            if count >= ceiling:
                return -1
            if store:
                out[count, :] = x
            count += 1
            x[d] += 1
        else:
            d += 1
            x[d] = 0
    return count


@_jit
def has_crossing_rgf(rgf, k, enhanced):
    """Whether the partition encoded by ``rgf`` has a (enhanced) k-crossing."""
    n = rgf.shape[0]
    # right[i] = partner of the arc leaving i, or -1.
    right = np.full(n, -1, np.int64)
    last = np.full(n, -1, np.int64)
    for j in range(n):
        b = rgf[j]
        if last[b] >= 0:
            right[last[b]] = j
        last[b] = j
    left = np.empty(n, np.int64)
    m = 0
    for i in range(n):
        if right[i] >= 0:
            left[m] = i
            m += 1
    if m < k:
        return False
    chain = np.empty(m, np.int64)
    # Fix the first arc (i1, j1); every later arc needs i in (i1, j1) (or up
    # to j1 when enhanced) and increasing right ends.  Longest such chain by
    # DP over arcs in left-endpoint order.
    for a in range(m):
        i1 = left[a]
        j1 = right[i1]
        chain[a] = 1
        for b in range(a + 1, m):
            ib = left[b]
            chain[b] = 0
            if ib > j1 or (ib == j1 and not enhanced):
                break
            jb = right[ib]
            if jb <= j1:
                continue
            best = 0
            for c in range(a, b):
                if chain[c] > best and right[left[c]] < jb:
                    best = chain[c]
            chain[b] = best + 1
            if chain[b] >= k:
                return True
    return False


@_jit
def walk_rgf(n, ceiling, out, store):
    # Restricted growth functions: r_0 = 0, r_d <= 1 + max(r_0..r_{d-1}).
    r = np.zeros(n, np.int64)
    top = np.zeros(n + 1, np.int64)
    count = 0
    d = 0
    while d >= 0:
        bound = 0 if d == 0 else top[d] + 1
        if r[d] > bound:
            d -= 1
            if d >= 0:
                r[d] += 1
            continue
        top[d + 1] = r[d] if d == 0 or r[d] > top[d] else top[d]
        if d == n - 1:
            if count >= ceiling:
                return -1
            if store:
                out[count, :] = r
            count += 1
            r[d] += 1
        else:
            d += 1
            r[d] = 0
    return count


@_jit
def count_rgf_avoiders(n, k, enhanced, ceiling):
    """Partitions of [n] with no (enhanced) k-crossing; -1 past ``ceiling``.

    ``ceiling`` bounds the number of partitions visited, not the result.
    """
    r = np.zeros(n, np.int64)
    top = np.zeros(n + 1, np.int64)
    visited = 0
    count = 0
    d = 0
    while d >= 0:
        bound = 0 if d == 0 else top[d] + 1
        if r[d] > bound:
            d -= 1
            if d >= 0:
                r[d] += 1
            continue
        top[d + 1] = r[d] if d == 0 or r[d] > top[d] else top[d]
        if d == n - 1:
            if visited >= ceiling:
                return -1
            visited += 1
            if not has_crossing_rgf(r, k, enhanced):
                count += 1
            r[d] += 1
        else:
            d += 1
            r[d] = 0
    return count


def run_walker(walker, n, *args, ceiling):
    """Count pass plus fill pass; returns the objects as an ``(m, n)`` array.

    Returns ``None`` when the ceiling is exceeded.
    """
    empty = np.zeros((0, n), np.int64)
    m = walker(n, *args, ceiling, empty, False)
    if m < 0:
        return None
    out = np.zeros((m, n), np.int64)
    walker(n, *args, ceiling, out, True)
    return out
