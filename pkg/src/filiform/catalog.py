"""Constructors for the named filiform Leibniz families.

Families ``NGF1``-``NGF3`` are the naturally graded ones, ``F1``-``F3`` the
three general classes, and ``M1``-``M4`` the algebras admitting a connected
gradation of length ``n - 1`` besides ``NGF2`` and ``NGF3`` with alpha 1.
All basis indices are 1-based.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Algebra, leibniz_defect

FAMILIES = ("NGF1", "NGF2", "NGF3", "F1", "F2", "F3", "M1", "M2", "M3", "M4")


class ParameterError(ValueError):
    """A family parameter is outside its admissible range."""


class TranscriptionError(ValueError):
    """A constructed table fails the Leibniz identity."""

    def __init__(self, family, defect):
        self.defect = defect
        shown = ", ".join(f"({i},{j},{k};{m})={r}" for i, j, k, m, r in defect[:5])
        super().__init__(f"{family} table violates the Leibniz identity at {shown}")


@dataclass(frozen=True)
class FamilyId:
    tag: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in FAMILIES:
            raise ParameterError(f"unknown family {self.tag!r}; expected one of {', '.join(FAMILIES)}")


def _need(cond, msg):
    if not cond:
        raise ParameterError(msg)


def _check_n(n, least):
    _need(isinstance(n, int) and n >= least, f"n must be an integer >= {least}, got {n!r}")


def _check_alpha01(n, alpha):
    alpha = Fraction(alpha)
    _need(alpha in (0, 1), f"alpha must be 0 or 1, got {alpha}")
    _need(alpha == 0 or n % 2 == 0, f"alpha = 1 requires even n (alpha = 0 for odd n), got n = {n}")
    return alpha


def _validated(name, n, consts, params):
    alg = Algebra(n, consts, name=name, params=params)
    defect = leibniz_defect(alg)
    if defect:
        raise TranscriptionError(name, defect)
    return alg


def _chain(consts, start, stop):
    # [e_i, e_1] = e_{i+1}, start <= i <= stop
    for i in range(start, stop + 1):
        consts[(i, 1, i + 1)] = Fraction(1)


def _skew_products(consts, n, alpha):
    for i in range(2, n):
        consts[(i, 1, i + 1)] = Fraction(1)
        consts[(1, i, i + 1)] = Fraction(-1)
    if alpha:
        for i in range(2, n):
            consts[(i, n + 1 - i, n)] = alpha * (-1) ** (i + 1)


def make_ngf1(n):
    _check_n(n, 3)
    consts = {(1, 1, 3): Fraction(1)}
    _chain(consts, 2, n - 1)
    return Algebra(n, consts, name="NGF1", params={"n": n})


def make_ngf2(n):
    _check_n(n, 3)
    consts = {(1, 1, 3): Fraction(1)}
    _chain(consts, 3, n - 1)
    return Algebra(n, consts, name="NGF2", params={"n": n})


def make_ngf3(n, alpha=0):
    _check_n(n, 3)
    alpha = _check_alpha01(n, alpha)
    consts = {}
    _skew_products(consts, n, alpha)
    return Algebra(n, consts, name="NGF3", params={"n": n, "alpha": alpha})


def _coeffs(values, first, last, label):
    """Normalize a parameter list or ``{index: value}`` mapping to a dict."""
    if values is None:
        return {}
    if isinstance(values, dict):
        out = {int(k): Fraction(v) for k, v in values.items()}
    else:
        values = list(values)
        _need(len(values) == last - first + 1,
              f"{label} needs {last - first + 1} values ({label}{first}..{label}{last}), got {len(values)}")
        out = {first + t: Fraction(v) for t, v in enumerate(values)}
    for idx in out:
        _need(first <= idx <= last, f"{label}{idx} is not a parameter (expected {label}{first}..{label}{last})")
    return {k: v for k, v in out.items() if v}


def make_f1(n, alphas=None, theta=0):
    """``alphas`` holds alpha_4..alpha_{n-1} as a list or ``{index: value}``.

    The ``[e_2, e_2]`` product also carries an ``alpha_n e_n`` term; pass it
    as a trailing list entry or as key ``n`` (default 0).
    """
    _check_n(n, 4)
    if alphas is not None and not isinstance(alphas, dict):
        alphas = list(alphas)
        if len(alphas) == n - 4:
            alphas.append(0)
    a = _coeffs(alphas, 4, n, "alpha")
    theta = Fraction(theta)
    consts = {(1, 1, 3): Fraction(1)}
    _chain(consts, 2, n - 1)
    # [e_1, e_2] = alpha_4 e_4 + ... + alpha_{n-1} e_{n-1} + theta e_n
    for t, v in a.items():
        if t < n:
            consts[(1, 2, t)] = v
    if theta:
        consts[(1, 2, n)] = theta
    # [e_j, e_2] = alpha_4 e_{j+2} + alpha_5 e_{j+3} + ...
    for j in range(2, n - 1):
        for t, v in a.items():
            if j + t - 2 <= n:
                consts[(j, 2, j + t - 2)] = v
    params = {"n": n, "theta": theta}
    params.update({f"alpha{t}": a.get(t, Fraction(0)) for t in range(4, n)})
    if n in a:
        params[f"alpha{n}"] = a[n]
    return _validated("F1", n, consts, params)


def make_f2(n, betas=None, gamma=0):
    """``betas`` holds beta_3..beta_{n-1} as a list or ``{index: value}``."""
    _check_n(n, 4)
    b = _coeffs(betas, 3, n - 1, "beta")
    gamma = Fraction(gamma)
    consts = {(1, 1, 3): Fraction(1)}
    _chain(consts, 3, n - 1)
    # [e_1, e_2] = beta_3 e_4 + ... + beta_{n-1} e_n
    for t, v in b.items():
        consts[(1, 2, t + 1)] = v
    if gamma:
        consts[(2, 2, n)] = gamma
    # [e_j, e_2] = beta_3 e_{j+2} + beta_4 e_{j+3} + ...
    for j in range(3, n - 1):
        for t, v in b.items():
            if j + t - 1 <= n:
                consts[(j, 2, j + t - 1)] = v
    params = {"n": n, "gamma": gamma}
    params.update({f"beta{t}": b.get(t, Fraction(0)) for t in range(3, n)})
    return _validated("F2", n, consts, params)


def make_f3(n, theta1=0, theta2=0, theta3=0, alpha=0, tail=None):
    """Assemble an F3 table and validate it.

    ``tail`` maps ``(i, j, k)`` to the coefficient of ``e_k`` in ``[e_i, e_j]``
    for ``2 <= i, j`` and ``k >= i + j + 1``; the skew partner ``[e_j, e_i]``
    is filled in. The family leaves these products free up to the Leibniz
    identity, so the result is checked and rejected if the identity fails.
    """
    _check_n(n, 4)
    alpha = _check_alpha01(n, alpha)
    theta1, theta2, theta3 = Fraction(theta1), Fraction(theta2), Fraction(theta3)
    consts = {}
    _skew_products(consts, n, alpha)
    if theta1:
        consts[(1, 1, n)] = theta1
    if theta2:
        consts[(1, 2, n)] = theta2
    if theta3:
        consts[(2, 2, n)] = theta3
    skew = {}
    for (i, j, k), v in (tail or {}).items():
        v = Fraction(v)
        _need(i >= 2 and j >= 2, f"tail entry {(i, j, k)}: both factors must have index >= 2")
        _need(i != j, f"tail entry {(i, j, k)}: diagonal products are zero in a skew table")
        _need(i + j + 1 <= k <= n, f"tail entry {(i, j, k)}: need i + j + 1 <= k <= n")
        for key, val in (((i, j, k), v), ((j, i, k), -v)):
            if key in skew and skew[key] != val:
                raise ParameterError(f"tail entries {(i, j, k)} and {(j, i, k)} are not antisymmetric")
            skew[key] = val
    for key, v in skew.items():
        consts[key] = consts.get(key, 0) + v
    params = {"n": n, "theta1": theta1, "theta2": theta2, "theta3": theta3, "alpha": alpha}
    if skew:
        params["tail"] = {key: v for key, v in sorted(skew.items()) if key[0] < key[1]}
    return _validated("F3", n, consts, params)


def make_m1(n, k):
    _check_n(n, 4)
    _need(isinstance(k, int) and 3 <= k <= n - 1, f"M1 requires 3 <= k <= n-1, got k = {k} with n = {n}")
    consts = {}
    _chain(consts, 1, n - 2)
    for i in range(1, n - k + 1):
        consts[(i, n, k + i - 1)] = Fraction(1)
    return Algebra(n, consts, name="M1", params={"n": n, "k": k})


def _check_odd(n, fam):
    _need(n % 2 == 1, f"{fam} is defined only for odd n, got n = {n}")


def make_m2(n, alpha=1):
    _check_n(n, 5)
    _check_odd(n, "M2")
    alpha = Fraction(alpha)
    _need(alpha != 0, "M2 requires alpha != 0")
    consts = {}
    _chain(consts, 1, n - 2)
    h = (n + 1) // 2
    for i in range(1, (n - 1) // 2 + 1):
        consts[(i, n, h + i - 1)] = Fraction(1)
    consts[(n, n, n - 1)] = alpha
    return Algebra(n, consts, name="M2", params={"n": n, "alpha": alpha})


def make_m3(n):
    _check_n(n, 5)
    _check_odd(n, "M3")
    consts = {}
    _chain(consts, 1, n - 2)
    consts[(n, n, n - 1)] = Fraction(1)
    return Algebra(n, consts, name="M3", params={"n": n})


def make_m4(n):
    _check_n(n, 4)
    consts = {(1, 1, n): Fraction(1)}
    for i in range(2, n):
        consts[(i, 1, i + 1)] = Fraction(1)
        consts[(1, i, i + 1)] = Fraction(-1)
    return Algebra(n, consts, name="M4", params={"n": n})


def make(family, n, **params):
    """Dispatch on a family tag, e.g. ``make("M1", 7, k=4)``."""
    FamilyId(family)
    builders = {
        "NGF1": make_ngf1, "NGF2": make_ngf2, "NGF3": make_ngf3,
        "F1": make_f1, "F2": make_f2, "F3": make_f3,
        "M1": make_m1, "M2": make_m2, "M3": make_m3, "M4": make_m4,
    }
    try:
        return builders[family](n, **params)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {family}: {exc}") from None


def length_n_minus_1_members(n):
    """``(label, algebra)`` for every length ``n - 1`` family member at dimension n."""
    out = [("NGF2", make_ngf2(n))]
    if n % 2 == 0:
        out.append(("NGF3(alpha=1)", make_ngf3(n, 1)))
    for k in range(3, n):
        out.append((f"M1(k={k})", make_m1(n, k)))
    if n % 2 == 1 and n >= 5:
        out.append(("M2(alpha=1)", make_m2(n, 1)))
        out.append(("M3", make_m3(n)))
    out.append(("M4", make_m4(n)))
    return out
