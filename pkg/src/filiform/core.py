"""Leibniz algebras given by structure constants.

Basis indices are 1-based throughout, matching the usual ``e_1, ..., e_n``
notation; coordinate vectors are plain 0-based Python sequences of length
``n``. Scalars are :class:`fractions.Fraction`.
"""

from fractions import Fraction
from types import MappingProxyType

from .linalg import Subspace, SingularMatrixError, identity, inverse, nullspace, rank


class DimensionError(ValueError):
    pass


class NotLeibnizError(ValueError):
    """Raised when an operation needs the Leibniz identity and it fails."""

    def __init__(self, defect, message=None):
        self.defect = list(defect)
        if message is None:
            shown = ", ".join(f"({i},{j},{k};{m})={r}" for i, j, k, m, r in self.defect[:5])
            more = "" if len(self.defect) <= 5 else f" and {len(self.defect) - 5} more"
            message = f"Leibniz identity fails at {shown}{more}"
        super().__init__(message)


def _check_len(v, n, what="vector"):
    if len(v) != n:
        raise DimensionError(f"{what} has length {len(v)}, algebra has dimension {n}")


class Algebra:
    """Finite-dimensional algebra ``[e_i, e_j] = sum_k c[i, j, k] e_k``.

    ``constants`` maps 1-based triples ``(i, j, k)`` to nonzero Fractions;
    zero entries are dropped on construction.
    """

    __slots__ = ("dim", "constants", "name", "params", "_rows")

    def __init__(self, dim, constants=None, name=None, params=None):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        clean = {}
        for key, value in (constants or {}).items():
            i, j, k = key
            for idx in key:
                if not 1 <= idx <= dim:
                    raise IndexError(f"index {idx} in {key} outside 1..{dim}")
            value = Fraction(value)
            if value:
                clean[(int(i), int(j), int(k))] = value
        self.dim = dim
        self.constants = MappingProxyType(dict(sorted(clean.items())))
        self.name = name
        self.params = MappingProxyType(dict(params or {}))
        rows = {}
        for (i, j, k), v in self.constants.items():
            rows.setdefault((i, j), {})[k] = v
        self._rows = rows

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.dim == other.dim and dict(self.constants) == dict(other.constants)

    def __hash__(self):
        return hash((self.dim, tuple(self.constants.items())))

    def __repr__(self):
        label = self.name or "Algebra"
        return f"<{label} dim={self.dim} nonzero={len(self.constants)}>"

    def bracket(self, i, j):
        """Product of basis vectors ``[e_i, e_j]`` as a sparse ``{k: value}``."""
        return self._rows.get((i, j), {})

    def bracket_vector(self, i, j):
        out = [Fraction(0)] * self.dim
        for k, v in self.bracket(i, j).items():
            out[k - 1] = v
        return out

    def nonzero_pairs(self):
        return self._rows.keys()


def abelian(n):
    return Algebra(n, {}, name="abelian")


def direct_sum(a, b):
    """Block direct sum; basis of ``b`` is shifted by ``a.dim``."""
    s = a.dim
    consts = dict(a.constants)
    for (i, j, k), v in b.constants.items():
        consts[(i + s, j + s, k + s)] = v
    return Algebra(a.dim + b.dim, consts)


class LinearMap:
    """Square matrix acting on coordinates, ``d(e_j) = sum_i M[i][j] e_i``."""

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix):
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("linear map matrix must be square and nonempty")
        self.dim = n
        self.matrix = rows

    @classmethod
    def zero(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls(identity(n))

    @classmethod
    def from_images(cls, n, images):
        """Build from ``{j: {i: coeff}}`` meaning ``d(e_j) = sum coeff e_i``."""
        m = [[Fraction(0)] * n for _ in range(n)]
        for j, img in images.items():
            for i, c in img.items():
                m[i - 1][j - 1] += Fraction(c)
        return cls(m)

    @classmethod
    def from_flat(cls, n, flat):
        return cls([flat[r * n:(r + 1) * n] for r in range(n)])

    def flat(self):
        """Row-major entries, the unknown ordering used by the derivation system."""
        return tuple(x for row in self.matrix for x in row)

    def image(self, j):
        """Column ``j`` (1-based) as a coordinate list."""
        return [self.matrix[i][j - 1] for i in range(self.dim)]

    def __call__(self, v):
        _check_len(v, self.dim)
        return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in self.matrix]

    def __matmul__(self, other):
        n = self.dim
        if other.dim != n:
            raise DimensionError(f"cannot compose maps of sizes {n} and {other.dim}")
        b = other.matrix
        return LinearMap([[sum((self.matrix[i][k] * b[k][j] for k in range(n)
                                if self.matrix[i][k] and b[k][j]), Fraction(0))
                           for j in range(n)] for i in range(n)])

    def __add__(self, other):
        return LinearMap([[x + y for x, y in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other):
        return LinearMap([[x - y for x, y in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def scale(self, c):
        c = Fraction(c)
        return LinearMap([[c * x for x in r] for r in self.matrix])

    def commutator(self, other):
        return self @ other - other @ self

    def is_zero(self):
        return not any(any(r) for r in self.matrix)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearMap({[[str(x) for x in r] for r in self.matrix]})"


def product(A, x, y):
    """Bilinear product of two coordinate vectors."""
    n = A.dim
    _check_len(x, n, "left factor")
    _check_len(y, n, "right factor")
    out = [Fraction(0)] * n
    for (i, j), row in A._rows.items():
        a = x[i - 1]
        if not a:
            continue
        b = y[j - 1]
        if not b:
            continue
        ab = a * b
        for k, v in row.items():
            out[k - 1] += ab * v
    return out


def _sparse_mul_left(A, i, vec):
    # [e_i, vec] for sparse vec {l: c}
    out = {}
    for l, c in vec.items():
        for m, v in A.bracket(i, l).items():
            out[m] = out.get(m, 0) + c * v
    return out


def _sparse_mul_right(A, vec, k):
    # [vec, e_k]
    out = {}
    for l, c in vec.items():
        for m, v in A.bracket(l, k).items():
            out[m] = out.get(m, 0) + c * v
    return out


def leibniz_defect(A):
    """All nonzero residuals of ``[x,[y,z]] - [[x,y],z] + [[x,z],y]`` on basis triples.

    Entries are ``(i, j, k, m, residual)``: the coefficient of ``e_m`` in the
    residual for ``x, y, z = e_i, e_j, e_k``. Empty iff A is a Leibniz algebra.
    """
    n = A.dim
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ij = A.bracket(i, j)
            for k in range(1, n + 1):
                res = _sparse_mul_left(A, i, A.bracket(j, k))
                for m, v in _sparse_mul_right(A, ij, k).items():
                    res[m] = res.get(m, 0) - v
                for m, v in _sparse_mul_right(A, A.bracket(i, k), j).items():
                    res[m] = res.get(m, 0) + v
                for m in sorted(res):
                    if res[m]:
                        out.append((i, j, k, m, Fraction(res[m])))
    return out


def is_leibniz(A):
    return not leibniz_defect(A)


def require_leibniz(A):
    defect = leibniz_defect(A)
    if defect:
        raise NotLeibnizError(defect)


def is_lie(A):
    require_leibniz(A)
    c = A.constants
    for (i, j, k), v in c.items():
        if c.get((j, i, k), 0) != -v:
            return False
    return True


def change_basis(A, P):
    """Rewrite A in the basis ``f_j = sum_i P[i][j] e_i``.

    ``change_basis(change_basis(A, P), Q) == change_basis(A, P @ Q)``.
    """
    n = A.dim
    if P.dim != n:
        raise DimensionError(f"basis change of size {P.dim} for algebra of dimension {n}")
    try:
        Pinv = inverse(P.matrix)
    except SingularMatrixError as exc:
        raise SingularMatrixError(n, exc.rank) from None
    cols = [P.image(j) for j in range(1, n + 1)]
    consts = {}
    for a in range(n):
        for b in range(n):
            c = product(A, cols[a], cols[b])
            if not any(c):
                continue
            for k in range(n):
                v = sum((Pinv[k][t] * c[t] for t in range(n) if Pinv[k][t] and c[t]), Fraction(0))
                if v:
                    consts[(a + 1, b + 1, k + 1)] = v
    return Algebra(n, consts)


def _products_span(A, left_vectors, right_vectors):
    prods = []
    for x in left_vectors:
        for y in right_vectors:
            p = product(A, x, y)
            if any(p):
                prods.append(p)
    return Subspace(A.dim, prods)


def lower_central_series(A):
    """``[L^1, L^2, ...]`` with ``L^{k+1} = [L^k, L]``, stopping before the first repeat."""
    n = A.dim
    full = Subspace.whole(n)
    series = [full]
    while True:
        nxt = _products_span(A, series[-1].basis, full.basis)
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def is_nilpotent(A):
    require_leibniz(A)
    return lower_central_series(A)[-1].dim == 0


def is_filiform(A):
    require_leibniz(A)
    n = A.dim
    dims = [s.dim for s in lower_central_series(A)]
    dims += [dims[-1]] * (n + 1 - len(dims))
    return all(dims[i - 1] == n - i for i in range(2, n + 1))


def _annihilator(A, left):
    n = A.dim
    rows = []
    for i in range(1, n + 1):
        block = [[Fraction(0)] * n for _ in range(n)]
        for j in range(1, n + 1):
            pair = (j, i) if left else (i, j)
            for k, v in A.bracket(*pair).items():
                block[k - 1][j - 1] = v
        rows.extend(r for r in block if any(r))
    return Subspace(n, nullspace(rows, n))


def is_two_sided_ideal(A, S):
    full = Subspace.whole(A.dim).basis
    return (S.contains_subspace(_products_span(A, full, S.basis))
            and S.contains_subspace(_products_span(A, S.basis, full)))


def right_annihilator(A):
    """``{x : [L, x] = 0}``.

    For Leibniz algebras this is a two-sided ideal, and that is checked.
    """
    r = _annihilator(A, left=False)
    if not is_two_sided_ideal(A, r) and is_leibniz(A):
        raise ArithmeticError("right annihilator of a Leibniz algebra is not a two-sided ideal")
    return r


def left_annihilator(A):
    """``{x : [x, L] = 0}``."""
    return _annihilator(A, left=True)


def is_invertible(P):
    return rank(P.matrix, P.dim) == P.dim
