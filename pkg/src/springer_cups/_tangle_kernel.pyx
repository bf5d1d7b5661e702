# cython: boundscheck=False, wraparound=False
"""Compiled strand tracer; same contract as _tangle_py.trace."""


def trace(int m, a_partner, a_marks, g_partner, g_marks):
    cdef int t, p, v, q, v0, par
    cdef int[64] ap, am, gp, gm, rp, rm
    cdef char[64] seen
    if m > 32:
        raise ValueError("compiled tracer supports at most 32 vertices")
    for v in range(m):
        ap[v] = a_partner[v]
        am[v] = a_marks[v]
        rp[v] = -2
        rm[v] = 0
        seen[v] = 0
    for v in range(2 * m):
        gp[v] = g_partner[v]
        gm[v] = g_marks[v]
    for t in range(m):
        if rp[t] != -2:
            continue
        par = gm[t]
        p = gp[t]
        while True:
            if p < m:
                rp[t] = p
                rp[p] = t
                rm[t] = par
                rm[p] = par
                break
            v = p - m
            seen[v] = 1
            par ^= am[v]
            q = ap[v]
            if q < 0:
                rp[t] = -1
                rm[t] = par
                break
            seen[q] = 1
            par ^= gm[m + q]
            p = gp[m + q]
    bottom = []
    for v0 in range(m):
        if seen[v0] or ap[v0] >= 0:
            continue
        v = v0
        seen[v] = 1
        par = am[v]
        while True:
            par ^= gm[m + v]
            v = gp[m + v] - m
            seen[v] = 1
            par ^= am[v]
            q = ap[v]
            if q < 0:
                break
            seen[q] = 1
            v = q
        bottom.append(par)
    circles = []
    for v0 in range(m):
        if seen[v0]:
            continue
        par = 0
        v = v0
        while True:
            seen[v] = 1
            par ^= am[v]
            q = ap[v]
            seen[q] = 1
            par ^= gm[m + q]
            v = gp[m + q] - m
            if v == v0:
                break
        circles.append(par)
    return [rp[v] for v in range(m)], [rm[v] for v in range(m)], bottom, circles
