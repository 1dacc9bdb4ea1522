"""Decomposition matrices and the relative factor between two bases.

The matrix of a canonical basis set has one row per rank-n multipartition
(descending gamma order) and one column per basis vector.  The finite-e
matrix factors through the no-modulus one: column by column, repeatedly
strip the greatest remaining support term by subtracting that multiple of
the corresponding no-modulus basis vector; the multiples assemble into the
relative matrix, which is unitriangular with off-diagonal entries in
v*Z[v] and nonnegative coefficients.  verify() rechecks all of that from
the finished matrices, including the v=1 specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canonical import CanonicalBasisSet
from .combinatorics import (
    Charge,
    Multipartition,
    Ordering,
    compare_dominance,
    enumerate_multipartitions,
    format_multipartition,
    gamma_sequence,
)
from .laurent import ONE, ZERO, LaurentPoly, exact_div

__all__ = [
    "PolyMatrix",
    "NotInBInfinity",
    "NonTermination",
    "InconsistentSystem",
    "basis_matrix",
    "extract_relative",
    "back_substitution_oracle",
    "verify",
    "format_cell",
    "matrix_to_csv",
    "matrix_to_latex",
    "matrix_to_json_obj",
    "matrix_to_text",
]


class NotInBInfinity(RuntimeError):
    """A support term survived that is not a no-modulus basis label."""


class NonTermination(RuntimeError):
    """Column extraction exceeded the rank-layer size."""


class InconsistentSystem(RuntimeError):
    """Back substitution left a nonzero residual."""


@dataclass(frozen=True)
class PolyMatrix:
    """A labeled matrix of Laurent polynomials."""

    row_labels: tuple[Multipartition, ...]
    col_labels: tuple[Multipartition, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("column count mismatch")

    def entry(self, row: Multipartition, col: Multipartition) -> LaurentPoly:
        return self.entries[self.row_labels.index(row)][self.col_labels.index(col)]

    def column(self, col: Multipartition) -> dict[Multipartition, LaurentPoly]:
        j = self.col_labels.index(col)
        return {
            r: self.entries[i][j]
            for i, r in enumerate(self.row_labels)
            if not self.entries[i][j].is_zero()
        }

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.col_labels != other.row_labels:
            raise ValueError("inner labels do not match")
        rows = []
        for i in range(len(self.row_labels)):
            row = []
            for j in range(len(other.col_labels)):
                acc = ZERO
                for k in range(len(self.col_labels)):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(self.row_labels, other.col_labels, tuple(rows))

    def eval_one(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(p.eval_one() for p in row) for row in self.entries)


def basis_matrix(basis: CanonicalBasisSet, pad: int = 0) -> PolyMatrix:
    """Expand a basis set over all rank-n multipartitions.

    Rows run over the whole rank layer in descending gamma order at the
    basis charge; columns over the basis labels in their stored order.
    """
    level = len(basis.charge)
    rows = tuple(enumerate_multipartitions(level, basis.rank, basis.charge, pad))
    cols = basis.labels
    entries = tuple(
        tuple(basis.vectors[c].coeff(r) for c in cols) for r in rows
    )
    return PolyMatrix(rows, cols, entries)


def extract_relative(ge: CanonicalBasisSet, ginf: CanonicalBasisSet) -> PolyMatrix:
    """Expand each finite-e basis vector over the no-modulus basis.

    Rows are the no-modulus labels, columns the finite-e labels, both in
    descending gamma order; the entry at (row nu, col lam) is the
    coefficient of the nu vector inside the lam vector.
    """
    if ge.charge != ginf.charge:
        raise ValueError(f"charge mismatch: {ge.charge} vs {ginf.charge}")
    if ge.rank != ginf.rank:
        raise ValueError(f"rank mismatch: {ge.rank} vs {ginf.rank}")
    if ginf.e is not None:
        raise ValueError("second argument must be a no-modulus basis")
    charge = ge.charge
    layer_size = len(enumerate_multipartitions(len(charge), ge.rank, charge))
    inf_labels = set(ginf.labels)
    cols: dict[Multipartition, dict[Multipartition, LaurentPoly]] = {}
    for lam in ge.labels:
        if lam not in inf_labels:
            raise NotInBInfinity(format_multipartition(lam))
        coeffs: dict[Multipartition, LaurentPoly] = {lam: ONE}
        resid = ge.vectors[lam] - ginf.vectors[lam]
        steps = 0
        while not resid.is_zero():
            steps += 1
            if steps > layer_size:
                raise NonTermination(f"column {format_multipartition(lam)}")
            mu = max(resid.entries, key=lambda m: gamma_sequence(m, charge))
            if mu not in inf_labels:
                raise NotInBInfinity(format_multipartition(mu))
            d = resid.coeff(mu)
            coeffs[mu] = d
            resid = resid - ginf.vectors[mu].scale(d)
        cols[lam] = coeffs
    entries = tuple(
        tuple(cols[lam].get(nu, ZERO) for lam in ge.labels) for nu in ginf.labels
    )
    return PolyMatrix(ginf.labels, ge.labels, entries)


def back_substitution_oracle(de: PolyMatrix, dinf: PolyMatrix) -> PolyMatrix:
    """Solve dinf * X = de by back substitution on the raw matrices.

    Independent of the basis machinery: the elimination order is read off
    the support structure of dinf alone (a column is eliminated once its
    pivot row is clear of every other remaining column), and each pivot is
    divided out with exact_div.  Raises InconsistentSystem when a column of
    de is not in the span.
    """
    if de.row_labels != dinf.row_labels:
        raise ValueError("row labels do not match")
    ncols = len(dinf.col_labels)
    pivot_row = [dinf.row_labels.index(c) for c in dinf.col_labels]
    remaining = set(range(ncols))
    order: list[int] = []
    while remaining:
        free = [
            j
            for j in remaining
            if all(
                dinf.entries[pivot_row[j]][k].is_zero()
                for k in remaining
                if k != j
            )
        ]
        if not free:
            raise ValueError("matrix is not unitriangular in any column order")
        free.sort()
        order.append(free[0])
        remaining.discard(free[0])
    out_cols = []
    for cj in range(len(de.col_labels)):
        resid = [de.entries[i][cj] for i in range(len(de.row_labels))]
        x = [ZERO] * ncols
        for j in order:
            pr = pivot_row[j]
            if resid[pr].is_zero():
                continue
            xj = exact_div(resid[pr], dinf.entries[pr][j])
            x[j] = xj
            for i in range(len(resid)):
                if not dinf.entries[i][j].is_zero():
                    resid[i] = resid[i] - dinf.entries[i][j] * xj
        if any(not r.is_zero() for r in resid):
            raise InconsistentSystem(format_multipartition(de.col_labels[cj]))
        out_cols.append(x)
    entries = tuple(
        tuple(out_cols[cj][j] for cj in range(len(de.col_labels)))
        for j in range(ncols)
    )
    return PolyMatrix(dinf.col_labels, de.col_labels, entries)


def verify(
    de: PolyMatrix,
    dinf: PolyMatrix,
    drel: PolyMatrix,
    charge: Optional[Charge] = None,
) -> list[dict]:
    """Structural checks on a finished factorization, as a report list.

    The dominance condition depends on the charge of the underlying
    module; it defaults to the zero charge of the labels' level.
    """
    if charge is None:
        charge = (0,) * len(de.row_labels[0])
    report = []

    ok = de.row_labels == dinf.row_labels and dinf.matmul(drel).entries == de.entries
    report.append(
        {
            "check": "product",
            "pass": bool(ok),
            "detail": "finite-e matrix equals no-modulus matrix times relative matrix",
        }
    )

    diag_ok = True
    tri_ok = True
    for i, nu in enumerate(drel.row_labels):
        for j, lam in enumerate(drel.col_labels):
            c = drel.entries[i][j]
            if nu == lam:
                diag_ok = diag_ok and c == ONE
            else:
                tri_ok = tri_ok and c.in_v_ztimes()
    missing = [c for c in drel.col_labels if c not in drel.row_labels]
    diag_ok = diag_ok and not missing
    report.append(
        {
            "check": "unitriangular",
            "pass": bool(diag_ok and tri_ok),
            "detail": "unit diagonal, off-diagonal entries in v*Z[v]",
        }
    )

    order_ok = True
    for i, nu in enumerate(drel.row_labels):
        for j, lam in enumerate(drel.col_labels):
            if not drel.entries[i][j].is_zero() and nu != lam:
                if compare_dominance(lam, nu, charge) is not Ordering.GREATER:
                    order_ok = False
    report.append(
        {
            "check": "order",
            "pass": bool(order_ok),
            "detail": "nonzero entries only where the column label dominates the row label",
        }
    )

    pos_ok = all(
        p.in_nonneg_v_poly() for m in (de, dinf, drel) for row in m.entries for p in row
    )
    report.append(
        {
            "check": "positivity",
            "pass": bool(pos_ok),
            "detail": "all entries have nonnegative coefficients and exponents",
        }
    )

    lhs = de.eval_one()
    prod = dinf.matmul(drel)
    spec_ok = lhs == prod.eval_one() and _int_matmul(
        dinf.eval_one(), drel.eval_one()
    ) == lhs
    report.append(
        {
            "check": "specialization",
            "pass": bool(spec_ok),
            "detail": "the identity also holds for the integer matrices at v=1",
        }
    )
    return report


def all_pass(report: list[dict]) -> bool:
    return all(item["pass"] for item in report)


def _int_matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


# -- rendering -----------------------------------------------------------


def format_cell(p: LaurentPoly) -> str:
    """Machine cell grammar: '.' for zero, else 'c*v^k' terms joined by '+'."""
    if p.is_zero():
        return "."
    return "+".join(f"{c}*v^{e}" for e, c in p.items())


def _latex_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "\\cdot"
    parts = []
    for e, c in p.items():
        if e == 0:
            body = str(abs(c))
        else:
            vp = "v" if e == 1 else f"v^{{{e}}}"
            body = vp if abs(c) == 1 else f"{abs(c)}{vp}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)


def matrix_to_csv(m: PolyMatrix) -> str:
    lines = ["," + ",".join(format_multipartition(c) for c in m.col_labels)]
    for lab, row in zip(m.row_labels, m.entries):
        lines.append(
            format_multipartition(lab) + "," + ",".join(format_cell(p) for p in row)
        )
    return "\n".join(lines) + "\n"


def matrix_to_latex(m: PolyMatrix) -> str:
    cols = "c" * len(m.col_labels)
    lines = [f"\\begin{{array}}{{l|{cols}}}"]
    head = " & ".join(format_multipartition(c) for c in m.col_labels)
    lines.append(f" & {head} \\\\")
    lines.append("\\hline")
    for lab, row in zip(m.row_labels, m.entries):
        cells = " & ".join(_latex_poly(p) for p in row)
        lines.append(f"{format_multipartition(lab)} & {cells} \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines) + "\n"


def matrix_to_json_obj(m: PolyMatrix) -> dict:
    return {
        "row_labels": [format_multipartition(r) for r in m.row_labels],
        "col_labels": [format_multipartition(c) for c in m.col_labels],
        "entries": [[p.to_pairs() for p in row] for row in m.entries],
    }


def matrix_to_text(m: PolyMatrix) -> str:
    heads = [""] + [format_multipartition(c) for c in m.col_labels]
    body = [
        [format_multipartition(lab)] + ["." if p.is_zero() else str(p) for p in row]
        for lab, row in zip(m.row_labels, m.entries)
    ]
    widths = [
        max(len(r[i]) for r in [heads] + body) for i in range(len(heads))
    ]
    lines = []
    for r in [heads] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"
