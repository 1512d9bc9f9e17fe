"""Pure-Python elimination kernel.

Fallback for :mod:`filiform._elim` when the compiled extension is not
available. Both modules expose the same ``rref_int`` and must return
identical results.
"""

from math import gcd


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(reduced, pivots)``. Each row of ``reduced`` is a primitive
    integer vector with a positive entry at its pivot column and zeros at
    every other pivot column; dividing a row by its pivot entry gives the
    reduced row echelon form over the rationals. Zero rows are dropped.
    """
    work = [_primitive(list(r)) for r in rows if any(r)]
    nrows = len(work)
    pivots = []
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        p = -1
        for r in range(rank, nrows):
            if work[r][c]:
                p = r
                break
        if p < 0:
            continue
        work[rank], work[p] = work[p], work[rank]
        prow = work[rank]
        pv = prow[c]
        for r in range(nrows):
            if r == rank:
                continue
            row = work[r]
            f = row[c]
            if not f:
                continue
            g = gcd(pv, f)
            a = pv // g
            b = f // g
            if a == 1:
                for t in range(c, ncols):
                    if prow[t]:
                        row[t] -= b * prow[t]
            elif a == -1:
                for t in range(ncols):
                    row[t] = -row[t]
                    if t >= c and prow[t]:
                        row[t] -= b * prow[t]
            else:
                for t in range(ncols):
                    x = a * row[t]
                    if t >= c and prow[t]:
                        x -= b * prow[t]
                    row[t] = x
            work[r] = _primitive(row)
        pivots.append(c)
        rank += 1
    out = []
    for row, c in zip(work[:rank], pivots):
        if row[c] < 0:
            row = [-x for x in row]
        out.append(row)
    return out, pivots
