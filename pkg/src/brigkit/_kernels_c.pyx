# cython: language_level=3
"""Compiled kernels: line-for-line twin of _kernels_py.

Operands are arbitrary-precision Python ints (the values overflow any
machine word almost immediately), so the win here is loop and dispatch
overhead, which dominates the grid sweeps where individual operands are
small.  Tests pin both backends to identical outputs.
"""

from math import isqrt


def lucas_u_pair(A, B, long long n):
    """(U_n, U_{n+1}) by top-down fast doubling."""
    if n < 0:
        raise ValueError("index must be non-negative")
    cdef int nbits = 0
    cdef long long m = n
    while m:
        nbits += 1
        m >>= 1
    if nbits == 0:
        return 0, 1
    cdef int i
    u, u1 = 0, 1
    for i in range(nbits - 1, -1, -1):
        d = u * (2 * u1 - A * u)
        e = u1 * u1 - B * u * u
        if (n >> i) & 1:
            u, u1 = e, A * e - B * d
        else:
            u, u1 = d, e
    return u, u1


def lucas_uv(A, B, long long n):
    """(U_n, V_n) for the Lucas sequences of first and second kind."""
    u, u1 = lucas_u_pair(A, B, n)
    return u, 2 * u1 - A * u


def term_at(A, B, P, Q, long long n):
    """u_n in O(log n) big multiplications via u_n = U_n*Q + (U_{n+1} - A*U_n)*P."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return P
    u, u1 = lucas_u_pair(A, B, n)
    return u * Q + (u1 - A * u) * P


def term_window(A, B, P, Q, long long n):
    """(u_n, u_{n+1}) in O(log n)."""
    return term_at(A, B, P, Q, n), term_at(A, B, P, Q, n + 1)


def term_iter(A, B, P, Q, long long n):
    """u_n by n-1 recurrence steps; the linear-time reference path."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return P
    cdef long long i
    prev, cur = P, Q
    for i in range(n - 1):
        prev, cur = cur, A * cur - B * prev
    return cur


def zero_scan(A, B, P, Q, long long lo, long long hi):
    """All k in [lo, hi] with u_k = 0, by plain iteration."""
    cdef list hits = []
    cdef long long n = 1
    prev, cur = P, Q
    if lo == 0 and hi >= 0 and P == 0:
        hits.append(0)
    while n <= hi:
        if n >= lo and cur == 0:
            hits.append(n)
        prev, cur = cur, A * cur - B * prev
        n += 1
    return hits


cdef bint _ge_sqrt(x, y, delta, root):
    # exact x >= y*sqrt(delta) for y >= 0; root = isqrt(delta) or 0
    if root:
        return x >= y * root
    if x < 0:
        return False
    return x * x >= y * y * delta


def real_growth_scan(A, B, P, Q, long long lo, long long hi, bint far):
    """First n in [lo, hi] violating the applicable real-case lower bounds,
    or -1 if none.  Same contract as the pure twin."""
    if lo < 2:
        raise ValueError("scan start must be >= 2")
    if hi < lo:
        return -1
    delta = A * A - 4 * B
    r = isqrt(delta)
    root = r if r * r == delta else 0
    absq = abs(Q)
    q2 = Q * Q
    cdef long long n, i

    prev, cur = P, Q
    for i in range(lo - 1):
        prev, cur = cur, A * cur - B * prev
    ua, ub = lucas_u_pair(A, B, lo - 2)
    pw2 = 1 << lo
    pw5 = 5 ** lo
    if far:
        for n in range(lo, hi + 1):
            absu = -cur if cur < 0 else cur
            v = 2 * ub - A * ua
            t = (pw2 >> 1) * absu - absq * v
            if not _ge_sqrt(t, absq * ua, delta, root):
                return n
            if absu * absu * pw2 * pw2 < q2 * pw5:
                return n
            prev, cur = cur, A * cur - B * prev
            ua, ub = ub, A * ub - B * ua
            pw2 <<= 1
            pw5 *= 5
        return -1

    k1 = max(5 * abs(P), 22 * absq)
    k2 = max(14 * abs(P), 36 * absq)
    fa, fb = lucas_u_pair(1, -1, lo)
    for n in range(lo, hi + 1):
        absu = -cur if cur < 0 else cur
        v = 2 * ub - A * ua
        if not _ge_sqrt(2 * k1 * absu - v, ua, delta, root):
            return n
        ln = 2 * fb - fa
        t = 2 * k2 * absu - ln
        if t < 0 or t * t < 5 * fa * fa:
            return n
        prev, cur = cur, A * cur - B * prev
        ua, ub = ub, A * ub - B * ua
        fa, fb = fb, fa + fb
    return -1


def nonreal_growth_scan(A, B, P, Q, long long lo, long long hi):
    """Last n in [lo, hi] with |u_n|^3 < B^n, or -1."""
    if lo < 0 or hi < lo:
        return -1
    cdef long long n, i, last = -1
    prev, cur = P, Q
    for i in range(lo - 1):
        prev, cur = cur, A * cur - B * prev
    un = P if lo == 0 else cur
    bp = B ** lo
    n = lo
    while n <= hi:
        a = -un if un < 0 else un
        if a * a * a < bp:
            last = n
        if n == 0:
            un = Q
        else:
            prev, cur = cur, A * cur - B * prev
            un = cur
        bp *= B
        n += 1
    return last


def lucas_growth_scan(A, B, long long lo, long long hi):
    """First n in [lo, hi] violating the Lucas growth bound, or -1."""
    if lo < 2:
        raise ValueError("scan start must be >= 2")
    if hi < lo:
        return -1
    delta = A * A - 4 * B
    r = isqrt(delta)
    root = r if r * r == delta else 0
    cdef long long off = 2 if B < 0 else 1
    cdef long long n
    ua, ub = lucas_u_pair(A, B, lo - off)
    un, un1 = lucas_u_pair(A, B, lo)
    mult = 4 if B < 0 else 2
    for n in range(lo, hi + 1):
        absu = -un if un < 0 else un
        v = 2 * ub - A * ua
        if not _ge_sqrt(mult * absu - v, ua, delta, root):
            return n
        ua, ub = ub, A * ub - B * ua
        un, un1 = un1, A * un1 - B * un
    return -1
