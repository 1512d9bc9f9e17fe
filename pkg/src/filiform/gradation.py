"""Diagonal Z-gradations: weight checks, weight lattices, natural gradation.

A weight vector ``w`` assigns an integer level to each basis vector; it is
admissible when every nonzero constant ``c[i, j, k]`` has
``w_i + w_j == w_k``.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .core import Algebra, LinearMap, is_nilpotent, leibniz_defect, lower_central_series, product
from .linalg import Subspace, inverse, nullspace


class GradationError(ValueError):
    """A weight vector is not compatible with the multiplication."""

    def __init__(self, triple, weights):
        self.triple = triple
        i, j, k = triple
        super().__init__(
            f"constant ({i},{j},{k}) is nonzero but w{i} + w{j} = {weights[i - 1] + weights[j - 1]} "
            f"!= w{k} = {weights[k - 1]}")


@dataclass(frozen=True)
class GradationReport:
    nonempty_levels: tuple
    connected: bool
    length: int | None  # None when the levels have a gap

    def as_dict(self):
        return {"nonempty_levels": list(self.nonempty_levels), "connected": self.connected,
                "length": self.length}


def report_for(weights):
    levels = tuple(sorted(set(weights)))
    connected = levels[-1] - levels[0] + 1 == len(levels)
    return GradationReport(levels, connected, len(levels) if connected else None)


def check_weights(A, weights):
    """First triple violating additivity, or ``None``."""
    w = list(weights)
    if len(w) != A.dim:
        raise ValueError(f"weight vector has length {len(w)}, algebra has dimension {A.dim}")
    for (i, j, k) in A.constants:
        if w[i - 1] + w[j - 1] != w[k - 1]:
            return (i, j, k)
    return None


def verify_weights(A, weights):
    """Report on ``weights``; raises :class:`GradationError` if inadmissible."""
    w = [int(x) for x in weights]
    bad = check_weights(A, w)
    if bad is not None:
        raise GradationError(bad, w)
    return report_for(w)


def constraint_matrix(A):
    n = A.dim
    rows = set()
    for (i, j, k) in A.constants:
        row = [0] * n
        row[i - 1] += 1
        row[j - 1] += 1
        row[k - 1] -= 1
        rows.add(tuple(row))
    return sorted(rows)


def _primitive(v):
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def admissible_weight_lattice(A):
    """Primitive integer vectors spanning all admissible weight vectors.

    One vector per free coordinate of the additivity system, with a 1 in
    that coordinate. When these are integral (the usual case) their integer
    span is exactly the set of integer admissible weights.
    """
    n = A.dim
    basis = nullspace(constraint_matrix(A), n) if A.constants else [
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    return [_primitive(v) for v in basis]


def _normalized(w):
    lo = min(w)
    return tuple(x - lo + 1 for x in w)


def best_diagonal_gradation(A, bound=3):
    """Longest connected diagonal gradation reachable in the weight lattice.

    Searches integer combinations of :func:`admissible_weight_lattice` with
    coefficients in ``[-bound, bound]``. Ties go to the lexicographically
    smallest vector after shifting the lowest level to 1; the returned
    weights themselves are unshifted, since a shift is not admissible in
    general. Cost grows like ``(2*bound + 1) ** rank``.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    n = A.dim
    lattice = admissible_weight_lattice(A)
    best_w = tuple([0] * n)
    best_key = (-1, _normalized(best_w), best_w)
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(lattice)):
        w = [0] * n
        for c, v in zip(coeffs, lattice):
            if c:
                for t in range(n):
                    w[t] += c * v[t]
        levels = set(w)
        span = max(levels) - min(levels) + 1
        if span != len(levels) or span < -best_key[0]:
            continue
        w = tuple(w)
        key = (-span, _normalized(w), w)
        if key < best_key:
            best_key, best_w = key, w
    return list(best_w), report_for(best_w)


def _adapted_basis(series, n):
    """Per level i, vectors extending a basis of L^{i+1} to one of L^i."""
    unit = [tuple(Fraction(int(t == s)) for t in range(n)) for s in range(n)]
    levels = []
    for i in range(len(series) - 1):
        upper, lower = series[i], series[i + 1]
        need = upper.dim - lower.dim
        chosen = []
        span = lower
        for cand in list(unit) + list(upper.basis):
            if len(chosen) == need:
                break
            if cand in upper and cand not in span:
                chosen.append(cand)
                span = span.sum(Subspace(n, [cand]))
        levels.append(chosen)
    return levels


def natural_grading(A):
    """The associated graded algebra of the lower central series.

    Returns ``(gr, weights)``: ``gr`` is written in an adapted basis ordered
    by level (original basis vectors preferred, in index order) and
    ``weights`` gives each basis vector's level.
    """
    if not is_nilpotent(A):
        raise ValueError("natural gradation needs a nilpotent algebra")
    n = A.dim
    series = lower_central_series(A)
    levels = _adapted_basis(series, n)
    vectors, weights = [], []
    for lvl, vecs in enumerate(levels, start=1):
        for v in vecs:
            vectors.append(list(v))
            weights.append(lvl)
    # columns of P are the adapted basis vectors
    P = [[vectors[c][r] for c in range(n)] for r in range(n)]
    Pinv = inverse(P)
    consts = {}
    for a in range(n):
        for b in range(n):
            p = product(A, vectors[a], vectors[b])
            if not any(p):
                continue
            target = weights[a] + weights[b]
            for k in range(n):
                if weights[k] != target:
                    continue
                v = sum((Pinv[k][t] * p[t] for t in range(n) if p[t] and Pinv[k][t]), Fraction(0))
                if v:
                    consts[(a + 1, b + 1, k + 1)] = v
    gr = Algebra(n, consts, name=f"gr {A.name}" if A.name else "gr")
    assert check_weights(gr, weights) is None
    assert not leibniz_defect(gr)
    return gr, weights


def adapted_basis_is_identity(A):
    """True when the adapted basis chosen by :func:`natural_grading` is e_1..e_n."""
    n = A.dim
    levels = _adapted_basis(lower_central_series(A), n)
    flat = [v for lvl in levels for v in lvl]
    return all(flat[s] == tuple(Fraction(int(t == s)) for t in range(n)) for s in range(n))


def is_naturally_graded_table(A):
    """Sufficient test: gr equals A constant-for-constant in the adapted basis.

    False does not prove A is not naturally graded; that needs an
    isomorphism test.
    """
    gr, _ = natural_grading(A)
    return adapted_basis_is_identity(A) and gr == A


def canonical_weights(family, n, **params):
    """Explicit admissible weights of length n - 1 for the catalog families."""
    if family in ("NGF1", "NGF2", "NGF3"):
        return [1] + list(range(1, n))
    if family in ("M1",):
        return list(range(1, n)) + [params["k"] - 1]
    if family in ("M2", "M3"):
        return list(range(1, n)) + [(n - 1) // 2]
    if family == "M4":
        return [1] + [i + 2 - n for i in range(2, n)] + [2]
    raise ValueError(f"no canonical weights recorded for {family}")


def ngf1_max_length_basis_change(n):
    """Basis change making ``e_1 - e_2`` a basis vector of NGF1.

    Returns ``(P, weights)`` where the weights on the new basis give a
    connected gradation of length n.
    """
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m[1][0] = Fraction(-1)
    weights = [-1, n - 2] + [n - j for j in range(3, n + 1)]
    return LinearMap(m), weights
