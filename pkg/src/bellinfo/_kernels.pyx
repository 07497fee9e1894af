# cython: language_level=3
"""Compiled grid kernels.  Signatures mirror :mod:`bellinfo._fallback`."""
import numpy as np

cimport numpy as cnp
from libc.math cimport log1p

cnp.import_array()


cdef inline double _flow(double theta) nogil:
    cdef double x = 4.0 * theta - 1.0
    cdef double r = 0.0
    if x > -1.0:
        r += (1.0 + x) * log1p(x)
    if x < 1.0:
        r += (1.0 - x) * log1p(-x)
    r *= 0.5
    return r if r > 0.0 else 0.0


cdef _half_sincos(x):
    h = 0.5 * np.ascontiguousarray(x, dtype=np.float64)
    return np.sin(h), np.cos(h)


def theta_table(mus, nus, int s):
    # sin((a +- b)/2) expanded so the inner loop has no transcendental calls
    sa_, ca_ = _half_sincos(mus)
    sb_, cb_ = _half_sincos(nus)
    cdef double[::1] sa = sa_, ca = ca_, sb = sb_, cb = cb_
    cdef double sign = 1.0 if s == 0 else -1.0
    out = np.empty((sa.shape[0], sb.shape[0]), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i, j
    cdef double v
    with nogil:
        for i in range(sa.shape[0]):
            for j in range(sb.shape[0]):
                v = sa[i] * cb[j] + sign * ca[i] * sb[j]
                o[i, j] = 0.5 * v * v
    return out


def flow_table(mus, nus, int s):
    out = theta_table(mus, nus, s)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(o.shape[0]):
            for j in range(o.shape[1]):
                o[i, j] = _flow(o[i, j])
    return out


def triple_scan(table, double tol):
    """Scan all ordered index triples of a square pairwise-flow table.

    Returns ``(best, (i, j, k), n_below)`` where ``best`` is the minimum over
    triples of the largest of the three pairwise flows, ``(i, j, k)`` the
    first triple attaining it, and ``n_below`` the number of triples whose
    three flows are all ``<= tol``.
    """
    cdef double[:, ::1] t = np.ascontiguousarray(table, dtype=np.float64)
    cdef Py_ssize_t m = t.shape[0]
    if t.shape[1] != m:
        raise ValueError("table must be square")
    cdef Py_ssize_t i, j, k, bi = 0, bj = 0, bk = 0
    cdef double best = np.inf, worst, f
    cdef long long n_below = 0
    with nogil:
        for i in range(m):
            for j in range(m):
                f = t[i, j]
                if f >= best and f > tol:
                    continue
                for k in range(m):
                    worst = f
                    if t[i, k] > worst:
                        worst = t[i, k]
                    if t[j, k] > worst:
                        worst = t[j, k]
                    if worst <= tol:
                        n_below += 1
                    if worst < best:
                        best = worst
                        bi = i
                        bj = j
                        bk = k
    return best, (int(bi), int(bj), int(bk)), int(n_below)


def independent_multisets(ok, int n):
    """All nondecreasing index n-tuples whose every pair is marked in ``ok``.

    ``ok`` is a square boolean matrix; pairs of equal indices use the
    diagonal.  Output is in lexicographic order.
    """
    cdef cnp.uint8_t[:, ::1] g = np.ascontiguousarray(ok, dtype=np.uint8)
    cdef Py_ssize_t m = g.shape[0]
    if g.shape[1] != m:
        raise ValueError("ok must be square")
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    if m == 0:
        return out
    cdef cnp.intp_t[::1] stack = np.zeros(n, dtype=np.intp)
    cdef int depth = 0, d
    cdef Py_ssize_t cand
    cdef bint good
    stack[0] = 0
    while depth >= 0:
        cand = stack[depth]
        if cand >= m:
            depth -= 1
            if depth >= 0:
                stack[depth] += 1
            continue
        good = 1
        for d in range(depth):
            if not g[stack[d], cand]:
                good = 0
                break
        if not good:
            stack[depth] += 1
            continue
        if depth + 1 == n:
            out.append(tuple(int(stack[d]) for d in range(n)))
            stack[depth] += 1
        else:
            depth += 1
            stack[depth] = cand
    return out
