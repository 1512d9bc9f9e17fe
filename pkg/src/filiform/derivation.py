"""Derivations, inner derivations and low-degree cohomology dimensions.

A derivation ``D`` satisfies ``D[x, y] = [Dx, y] + [x, Dy]``. With the
matrix convention ``D(e_c) = sum_r M[r][c] e_r`` this is a homogeneous
linear system in the ``n**2`` entries of ``M`` (ordered row-major), and
``Der`` is its nullspace.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .core import LinearMap, DimensionError, product, require_leibniz, right_annihilator
from .gradation import verify_weights
from .linalg import Subspace, nullspace, rank, transpose


@dataclass(frozen=True)
class DerivationBasis:
    algebra_dim: int
    maps: tuple
    space: Subspace = field(repr=False, compare=False)

    @classmethod
    def from_vectors(cls, n, vectors):
        space = Subspace(n * n, vectors)
        maps = tuple(LinearMap.from_flat(n, row) for row in space.basis)
        return cls(n, maps, space)

    @property
    def dim(self):
        return len(self.maps)

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __contains__(self, D):
        return D.flat() in self.space


@dataclass(frozen=True)
class DerivationCheck:
    ok: bool
    pair: tuple | None = None  # first basis pair (i, j) where the identity fails

    def __bool__(self):
        return self.ok


def derivation_system(A):
    """Rows of the linear system whose nullspace is Der(A), as dense lists.

    One equation per basis pair ``(i, j)`` and output coordinate ``m``.
    """
    n = A.dim
    rows = defaultdict(lambda: defaultdict(Fraction))
    for (i, j, k), v in A.constants.items():
        # D([e_i, e_j])_m picks M[m][k]
        for m in range(1, n + 1):
            rows[(i, j, m)][(m - 1) * n + (k - 1)] += v
    for (l, j, m), v in A.constants.items():
        # [D e_i, e_j]_m picks M[l][i]
        for i in range(1, n + 1):
            rows[(i, j, m)][(l - 1) * n + (i - 1)] -= v
    for (i, l, m), v in A.constants.items():
        # [e_i, D e_j]_m picks M[l][j]
        for j in range(1, n + 1):
            rows[(i, j, m)][(l - 1) * n + (j - 1)] -= v
    dense = []
    for key in sorted(rows):
        sparse = rows[key]
        if any(sparse.values()):
            row = [Fraction(0)] * (n * n)
            for u, c in sparse.items():
                row[u] = c
            dense.append(row)
    return dense


def derivation_space(A):
    require_leibniz(A)
    n = A.dim
    return DerivationBasis.from_vectors(n, nullspace(derivation_system(A), n * n))


def is_derivation(A, D):
    """Check the derivation identity directly on every basis pair."""
    n = A.dim
    if D.dim != n:
        raise DimensionError(f"map of size {D.dim} on algebra of dimension {n}")
    images = [D.image(j) for j in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = D(A.bracket_vector(i, j))
            ei = [Fraction(int(t == i - 1)) for t in range(n)]
            ej = [Fraction(int(t == j - 1)) for t in range(n)]
            rhs = product(A, images[i - 1], ej)
            for t, x in enumerate(product(A, ei, images[j - 1])):
                rhs[t] += x
            if lhs != rhs:
                return DerivationCheck(False, (i, j))
    return DerivationCheck(True)


def right_multiplication(A, x):
    """``R_x(y) = [y, x]`` as a LinearMap."""
    n = A.dim
    cols = [product(A, [Fraction(int(t == c)) for t in range(n)], x) for c in range(n)]
    return LinearMap([[cols[c][r] for c in range(n)] for r in range(n)])


def inner_derivations(A):
    require_leibniz(A)
    n = A.dim
    vecs = []
    for i in range(1, n + 1):
        # R_{e_i}: M[r][c] = c[c, i, r]
        m = [[Fraction(0)] * n for _ in range(n)]
        for c in range(1, n + 1):
            for r, v in A.bracket(c, i).items():
                m[r - 1][c - 1] = v
        vecs.append([x for row in m for x in row])
    inn = DerivationBasis.from_vectors(n, vecs)
    expected = n - right_annihilator(A).dim
    if inn.dim != expected:
        raise ArithmeticError(f"dim Inn = {inn.dim} but n - dim R(L) = {expected}")
    return inn


def coboundary_rank(A):
    """Rank of ``d -> ([d x, y] + [x, d y] - d[x, y])``, computed on the transpose."""
    n = A.dim
    system = derivation_system(A)
    if not system:
        return 0
    return rank(transpose(system, n * n), len(system))


def h1_dim(A):
    return derivation_space(A).dim - inner_derivations(A).dim


def b2_dim(A):
    der = derivation_space(A).dim
    b2 = A.dim ** 2 - der
    independent = coboundary_rank(A)
    if b2 != independent:
        raise ArithmeticError(f"n^2 - dim Der = {b2} but rank of the coboundary map is {independent}")
    return b2


def graded_der_decomposition(A, weights):
    """Split Der(A) by the shift a derivation applies to the weights.

    Returns ``{shift: DerivationBasis}`` over every shift in
    ``[-(length - 1), length - 1]``, empty levels included.
    """
    report = verify_weights(A, weights)
    if not report.connected:
        raise ValueError(f"weights {list(weights)} give a gradation with gaps: levels {report.nonempty_levels}")
    require_leibniz(A)
    n = A.dim
    w = list(weights)
    system = derivation_system(A)
    out = {}
    top = report.length - 1
    for s in range(-top, top + 1):
        cols = [r * n + c for r in range(n) for c in range(n) if w[r] - w[c] == s]
        if not cols:
            out[s] = DerivationBasis.from_vectors(n, [])
            continue
        sub = [[row[u] for u in cols] for row in system]
        sub = [r for r in sub if any(r)]
        vecs = []
        for v in nullspace(sub, len(cols)):
            full = [Fraction(0)] * (n * n)
            for u, x in zip(cols, v):
                full[u] = x
            vecs.append(full)
        out[s] = DerivationBasis.from_vectors(n, vecs)
    return out


def _map(n, images):
    return LinearMap.from_images(n, images)


def _shift_maps(n, first_i, last_i_of_j, js):
    # d_j(y_i) = y_{i+j}
    return [(f"d{j}", _map(n, {i: {i + j: 1} for i in range(first_i, last_i_of_j(j) + 1)})) for j in js]


def printed_h0_m4(n):
    """The diagonal-plus map with h0(y_1) = y_n, exactly as printed for M4."""
    images = {1: {n: 1}}
    for i in range(2, n + 1):
        images[i] = {i: 2 - n + i}
    return _map(n, images)


def corrected_h0_m4(n):
    """Diagonal map scaling each basis vector by its M4 weight."""
    images = {1: {1: 1}, n: {n: 2}}
    for i in range(2, n):
        images[i] = {i: i + 2 - n}
    return _map(n, images)


def expected_der_basis(family, n, labelled=False, **params):
    """Explicit derivation bases claimed for M1(k), M2, M3 and M4.

    For M2/M3 the weight of ``d0`` on ``y_n`` is ``(n-1)/2``; for M4 the
    diagonal map is :func:`corrected_h0_m4`.
    """
    from .catalog import ParameterError, make

    if family not in ("M1", "M2", "M3", "M4"):
        raise ParameterError(f"no explicit derivation basis for family {family!r}")
    make(family, n, **params)  # parameter validation
    out = []
    if family in ("M1", "M2", "M3"):
        top = params["k"] - 1 if family == "M1" else Fraction(n - 1, 2)
        d0 = {i: {i: i} for i in range(1, n)}
        d0[n] = {n: top}
        out.append(("d0", _map(n, d0)))
        out += _shift_maps(n, 1, lambda j: n - j - 1, range(1, n - 1))
        out.append(("h1", _map(n, {n: {n - 1: 1}})))
        if family == "M1":
            k = params["k"]
            if 2 * k - 2 >= n:
                h2 = {1: {n: 1}}
                for i in range(2, n - k + 2):
                    h2[i] = {k + i - 2: i - 1}
                out.append(("h2", _map(n, h2)))
    else:
        for s in range(3 - n, 1):
            out.append((f"d{s}", _map(n, {1: {n - 1 + s: 1}})))
        out += _shift_maps(n, 2, lambda j: n - j, range(1, n - 1))
        out.append(("h1", _map(n, {1: {n: 1}})))
        out.append(("h0", corrected_h0_m4(n)))
    return out if labelled else [m for _, m in out]


def printed_h1_b2(family, n, **params):
    """Dimensions of H^1 and B^2 from the published reference tables, or ``None``."""
    if family == "M1":
        if 2 * params["k"] - 2 <= n - 1:
            return n - 2, n * n - n + 2
        return n - 1, n * n - n + 1
    if family in ("M2", "M3"):
        return n - 2, n * n - n + 2
    if family == "M4":
        return n - 3, n * n - n + 3
    return None


def minimum_der_dim(family, n, **params):
    """Number of maps in the explicit basis, a lower bound for dim Der."""
    return len(expected_der_basis(family, n, **params))
