"""Exact rational linear algebra.

Everything here works on plain lists of :class:`fractions.Fraction` (or
ints). The heavy lifting is done by ``rref_int``, taken from the compiled
``filiform._elim`` extension when it is importable and from
``filiform._elim_py`` otherwise.
"""

from fractions import Fraction
from math import lcm

from . import _elim_py

try:
    from . import _elim as _elim_c
except ImportError:  # extension not built
    _elim_c = None

_KERNELS = {"python": _elim_py.rref_int}
if _elim_c is not None:
    _KERNELS["cython"] = _elim_c.rref_int

BACKEND = "cython" if _elim_c is not None else "python"
_rref_int = _KERNELS[BACKEND]


def available_backends():
    return sorted(_KERNELS)


def set_backend(name):
    """Select the elimination kernel by name; returns the previous one."""
    global BACKEND, _rref_int
    if name not in _KERNELS:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {available_backends()}")
    prev = BACKEND
    BACKEND = name
    _rref_int = _KERNELS[name]
    return prev


def _to_int_row(row):
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [x.numerator for x in row]
    return [x.numerator * (den // x.denominator) for x in row]


def rref(rows, ncols=None):
    """Reduced row echelon form over Q.

    Returns ``(basis, pivots)`` with zero rows removed; ``basis`` rows are
    tuples of Fractions with a 1 at each pivot.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise ValueError(f"ragged matrix: row of length {len(r)}, expected {ncols}")
    reduced, pivots = _rref_int([_to_int_row(r) for r in rows], ncols)
    zero, one = Fraction(0), Fraction(1)
    basis = []
    for row, c in zip(reduced, pivots):
        p = row[c]
        basis.append(tuple(zero if not x else one if x == p else Fraction(x, p) for x in row))
    return basis, pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : A x = 0}, one vector per free column, as Fraction tuples."""
    basis, pivots = rref(rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(basis, pivots):
            v[c] = -row[f]
        out.append(tuple(v))
    return out


def transpose(rows, ncols):
    return [list(col) for col in zip(*rows)] if rows else [[] for _ in range(ncols)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(m):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def inverse(m):
    """Exact inverse of a square matrix; raises ``SingularMatrixError``."""
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    basis, pivots = rref(aug, 2 * n)
    r = sum(1 for c in pivots if c < n)
    if r < n:
        raise SingularMatrixError(n, r)
    return [list(row[n:]) for row in basis]


class SingularMatrixError(ValueError):
    def __init__(self, n, rank):
        super().__init__(f"matrix of size {n} is singular (rank {rank})")
        self.n = n
        self.rank = rank


class Subspace:
    """A subspace of Q^n held as its reduced row echelon basis.

    Two subspaces are equal exactly when their echelon bases are equal.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        vectors = [tuple(Fraction(x) for x in v) for v in vectors]
        if vectors:
            basis, pivots = rref(vectors, ambient_dim)
        else:
            basis, pivots = [], []
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def whole(cls, n):
        return cls(n, identity(n))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"

    def reduce(self, v):
        """Remainder of ``v`` after clearing the pivot columns."""
        v = [Fraction(x) for x in v]
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f:
                for t in range(c, self.ambient_dim):
                    if row[t]:
                        v[t] -= f * row[t]
        return v

    def __contains__(self, v):
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return not any(self.reduce(v))

    def contains_subspace(self, other):
        return all(v in self for v in other.basis)

    def coordinates(self, v):
        """Coefficients of ``v`` in the echelon basis; ``None`` if outside."""
        if v not in self:
            return None
        return [Fraction(v[c]) for c in self.pivots]

    def sum(self, other):
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))
