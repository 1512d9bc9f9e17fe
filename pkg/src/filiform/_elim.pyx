# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernel; same contract as ``filiform._elim_py``."""

from math import gcd


cdef list _primitive(list row):
    cdef object g = 0
    cdef object x
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref_int(rows, Py_ssize_t ncols):
    """Fraction-free Gauss-Jordan elimination over the integers."""
    cdef list work = []
    cdef list pivots = []
    cdef list row, prow, out
    cdef Py_ssize_t nrows, rank = 0, c, r, t, p
    cdef object pv, f, g, a, b, x, y

    for r_ in rows:
        row = list(r_)
        if any(row):
            work.append(_primitive(row))
    nrows = len(work)
    for c in range(ncols):
        if rank == nrows:
            break
        p = -1
        for r in range(rank, nrows):
            if (<list>work[r])[c]:
                p = r
                break
        if p < 0:
            continue
        work[rank], work[p] = work[p], work[rank]
        prow = <list>work[rank]
        pv = prow[c]
        for r in range(nrows):
            if r == rank:
                continue
            row = <list>work[r]
            f = row[c]
            if not f:
                continue
            g = gcd(pv, f)
            a = pv // g
            b = f // g
            if a == 1:
                for t in range(c, ncols):
                    y = prow[t]
                    if y:
                        row[t] = row[t] - b * y
            elif a == -1:
                for t in range(ncols):
                    x = -row[t]
                    if t >= c:
                        y = prow[t]
                        if y:
                            x = x - b * y
                    row[t] = x
            else:
                for t in range(ncols):
                    x = a * row[t]
                    if t >= c:
                        y = prow[t]
                        if y:
                            x = x - b * y
                    row[t] = x
            work[r] = _primitive(row)
        pivots.append(c)
        rank += 1
    out = []
    for r in range(rank):
        row = <list>work[r]
        c = pivots[r]
        if row[c] < 0:
            row = [-x for x in row]
        out.append(row)
    return out, pivots
