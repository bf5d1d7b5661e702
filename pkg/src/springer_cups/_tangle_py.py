"""Pure-Python strand tracer; mirrors the compiled kernel line for line."""


def trace(m, a_partner, a_marks, g_partner, g_marks):
    """Stack a generator tangle on top of a cup diagram and follow every strand.

    Points 0..m-1 are the tangle's top endpoints and m..2m-1 its bottom
    endpoints, which sit on the diagram's vertices.  a_partner[v] is the
    other endpoint of the cup at v or -1 for a ray; marks are parities.

    Returns (partner, marks, bottom, circles): the resulting diagram on the
    top points (partner -1 for a ray), the parities of bottom-to-bottom
    strands and the parities of closed circles.
    """
    res_partner = [-2] * m
    res_marks = [0] * m
    seen = [False] * m
    for t in range(m):
        if res_partner[t] != -2:
            continue
        par = g_marks[t]
        p = g_partner[t]
        while True:
            if p < m:
                res_partner[t] = p
                res_partner[p] = t
                res_marks[t] = res_marks[p] = par
                break
            v = p - m
            seen[v] = True
            par ^= a_marks[v]
            q = a_partner[v]
            if q < 0:
                res_partner[t] = -1
                res_marks[t] = par
                break
            seen[q] = True
            par ^= g_marks[m + q]
            p = g_partner[m + q]
    bottom = []
    for v in range(m):
        if seen[v] or a_partner[v] >= 0:
            continue
        seen[v] = True
        par = a_marks[v]
        while True:
            par ^= g_marks[m + v]
            v = g_partner[m + v] - m
            seen[v] = True
            par ^= a_marks[v]
            q = a_partner[v]
            if q < 0:
                break
            seen[q] = True
            v = q
        bottom.append(par)
    circles = []
    for v0 in range(m):
        if seen[v0]:
            continue
        par = 0
        v = v0
        while True:
            seen[v] = True
            par ^= a_marks[v]
            q = a_partner[v]
            seen[q] = True
            par ^= g_marks[m + q]
            v = g_partner[m + q] - m
            if v == v0:
                break
        circles.append(par)
    return res_partner, res_marks, bottom, circles
