"""Batch audit of the length ``n - 1`` algebras.

For every member and dimension this recomputes the structural facts
(Leibniz identity, filiform series, canonical gradation) and the
derivation data, and sets them beside the published reference dimensions for
``H^1`` and ``B^2``. The printed numbers are annotations only; a mismatch
is report content, not an error.
"""

from .catalog import make
from .core import is_filiform, is_lie, leibniz_defect, left_annihilator, right_annihilator
from .derivation import (
    coboundary_rank, derivation_space, expected_der_basis, graded_der_decomposition,
    inner_derivations, is_derivation, printed_h1_b2,
)
from .gradation import canonical_weights, check_weights, report_for
from .linalg import rank

FAMILY_ORDER = ("NGF2", "NGF3", "M1", "M2", "M3", "M4")
MIN_N, MAX_N = 4, 12


def members(n):
    """``(family, params)`` for each audited algebra of dimension n."""
    out = [("NGF2", {})]
    if n % 2 == 0:
        out.append(("NGF3", {"alpha": 1}))
    out += [("M1", {"k": k}) for k in range(3, n)]
    if n % 2 == 1 and n >= 5:
        out += [("M2", {"alpha": 1}), ("M3", {})]
    out.append(("M4", {}))
    return out


def parse_n_range(text):
    """``"5..9"`` or ``"7"`` to a list of ints inside the audit cap."""
    text = str(text).strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    if lo < MIN_N or hi > MAX_N:
        raise ValueError(f"audit range must lie within {MIN_N}..{MAX_N}, got {text!r}")
    return list(range(lo, hi + 1))


def audit_row(family, n, params):
    A = make(family, n, **params)
    n2 = n * n
    leibniz = not leibniz_defect(A)
    weights = canonical_weights(family, n, **params)
    bad = check_weights(A, weights)
    grad = report_for(weights)
    der = derivation_space(A)
    inn = inner_derivations(A)
    h1 = der.dim - inn.dim
    b2 = n2 - der.dim
    graded = graded_der_decomposition(A, weights) if bad is None else {}
    row = {
        "family": family,
        "n": n,
        "params": {k: str(v) for k, v in sorted(params.items())},
        "leibniz": leibniz,
        "filiform": is_filiform(A),
        "lie": is_lie(A),
        "weights": weights,
        "weights_admissible": bad is None,
        "gradation_length": grad.length,
        "dim_left_annihilator": left_annihilator(A).dim,
        "dim_right_annihilator": right_annihilator(A).dim,
        "dim_der": der.dim,
        "dim_inn": inn.dim,
        "dim_h1": h1,
        "dim_b2": b2,
        "coboundary_rank": coboundary_rank(A),
        "graded_dims": {str(s): b.dim for s, b in sorted(graded.items()) if b.dim},
        "graded_sum_matches": sum(b.dim for b in graded.values()) == der.dim,
    }
    row["identities_ok"] = (h1 + inn.dim == der.dim and row["coboundary_rank"] + der.dim == n2
                            and row["graded_sum_matches"])
    if family in ("M1", "M2", "M3", "M4"):
        maps = expected_der_basis(family, n, **params)
        independent = rank([m.flat() for m in maps], n2) == len(maps)
        row["explicit_basis_size"] = len(maps)
        row["explicit_basis_ok"] = (independent and all(is_derivation(A, m) for m in maps)
                                    and all(m in der for m in maps))
        row["explicit_basis_spans_der"] = row["explicit_basis_ok"] and len(maps) == der.dim
        ph1, pb2 = printed_h1_b2(family, n, **params)
        row["printed_h1"] = ph1
        row["printed_b2"] = pb2
        row["h1_matches_printed"] = ph1 == h1
        row["b2_matches_printed"] = pb2 == b2
    return row


def build_report(n_values):
    rows = []
    for n in n_values:
        for family, params in members(n):
            rows.append(audit_row(family, n, params))
    rows.sort(key=lambda r: (FAMILY_ORDER.index(r["family"]), r["n"], sorted(r["params"].items())))
    mismatches = []
    for r in rows:
        for what in ("h1", "b2"):
            key = f"{what}_matches_printed"
            if key in r and not r[key]:
                mismatches.append({"family": r["family"], "n": r["n"], "params": r["params"],
                                   "quantity": what, "computed": r[f"dim_{what}"],
                                   "printed": r[f"printed_{what}"]})
    return {
        "n_values": list(n_values),
        "rows": rows,
        "mismatches": mismatches,
        "all_structural_checks_pass": all(
            r["leibniz"] and r["filiform"] and r["weights_admissible"]
            and r["gradation_length"] == r["n"] - 1 and r["identities_ok"]
            and r.get("explicit_basis_ok", True) for r in rows),
    }


def _label(r):
    if not r["params"]:
        return r["family"]
    inner = ", ".join(f"{k}={v}" for k, v in r["params"].items())
    return f"{r['family']}({inner})"


def _yn(flag):
    return "yes" if flag else "no"


def render_markdown(report):
    lines = [
        "# Audit of filiform Leibniz algebras of length n-1",
        "",
        f"Dimensions: {', '.join(str(n) for n in report['n_values'])}",
        "",
        "Columns marked (printed) are published reference values, shown for comparison only.",
        "",
        "| algebra | n | leibniz | filiform | lie | length | dim L | dim R | Der | Inn | H1 | B2 "
        "| H1 (printed) | B2 (printed) | explicit basis | identities |",
        "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|",
    ]
    for r in report["rows"]:
        ph1 = r.get("printed_h1")
        pb2 = r.get("printed_b2")
        h1_flag = "" if ph1 is None else (" ok" if r["h1_matches_printed"] else " MISMATCH")
        b2_flag = "" if pb2 is None else (" ok" if r["b2_matches_printed"] else " MISMATCH")
        if "explicit_basis_size" in r:
            basis = f"{r['explicit_basis_size']} maps, " + (
                "spans Der" if r["explicit_basis_spans_der"]
                else ("contained" if r["explicit_basis_ok"] else "FAILED"))
        else:
            basis = "-"
        lines.append(
            f"| {_label(r)} | {r['n']} | {'ok' if r['leibniz'] else 'FAIL'} | {_yn(r['filiform'])} "
            f"| {_yn(r['lie'])} | {r['gradation_length']} | {r['dim_left_annihilator']} "
            f"| {r['dim_right_annihilator']} | {r['dim_der']} | {r['dim_inn']} | {r['dim_h1']} "
            f"| {r['dim_b2']} | {'-' if ph1 is None else ph1}{h1_flag} "
            f"| {'-' if pb2 is None else pb2}{b2_flag} | {basis} | {'ok' if r['identities_ok'] else 'FAIL'} |")
    lines += ["", f"## Mismatches with printed values ({len(report['mismatches'])})", ""]
    if report["mismatches"]:
        for m in report["mismatches"]:
            lines.append(f"- {_label(m)}, n={m['n']}: dim {m['quantity'].upper()} computed "
                         f"{m['computed']}, printed {m['printed']}")
    else:
        lines.append("none")
    lines += ["", f"All structural checks pass: {_yn(report['all_structural_checks_pass'])}", ""]
    return "\n".join(lines)
