from fractions import Fraction

import pytest

from filiform import linalg


@pytest.fixture(params=linalg.available_backends())
def backend(request):
    prev = linalg.set_backend(request.param)
    yield request.param
    linalg.set_backend(prev)


def unit(n, i):
    """Coordinate vector of e_i (1-based)."""
    return [Fraction(int(t == i - 1)) for t in range(n)]


def dense_defect(A):
    """Leibniz residuals straight from the triple-sum formula over all indices."""
    n = A.dim
    g = [[[A.constants.get((i, j, k), Fraction(0)) for k in range(1, n + 1)]
          for j in range(1, n + 1)] for i in range(1, n + 1)]
    out = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    s = sum(g[j][k][l] * g[i][l][m] - g[i][j][l] * g[l][k][m] + g[i][k][l] * g[l][j][m]
                            for l in range(n))
                    if s:
                        out[(i + 1, j + 1, k + 1, m + 1)] = s
    return out
