"""Dense exact linear algebra over a coefficient field.

Small row-reduction utilities used by the degree-truncated oracles and the
graded isomorphism search.  Rows are lists of field elements.
"""


def row_reduce(rows, fld):
    """Return (reduced rows, pivot column indices); input is not mutated."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next(
            (i for i in range(r, len(rows)) if not fld.is_zero(rows[i][c])), None
        )
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = fld.inv(rows[r][c])
        rows[r] = [fld.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not fld.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, fld) -> int:
    reduced, _ = row_reduce(rows, fld)
    return len(reduced)


def in_row_span(rows, target, fld) -> bool:
    """Is `target` a linear combination of `rows`?"""
    if all(fld.is_zero(x) for x in target):
        return True
    if not rows:
        return False
    return rank(rows, fld) == rank(list(rows) + [list(target)], fld)


def solve_in_span(rows, target, fld):
    """Coefficients expressing target over rows, or None.

    Solves x * rows = target by reducing the transposed augmented system.
    """
    nrows = len(rows)
    if nrows == 0:
        return [] if all(fld.is_zero(x) for x in target) else None
    ncols = len(rows[0])
    aug = [[rows[i][c] for i in range(nrows)] + [target[c]] for c in range(ncols)]
    reduced, pivots = row_reduce(aug, fld)
    if nrows in pivots:
        return None
    coeffs = [fld.zero] * nrows
    for row, p in zip(reduced, pivots):
        coeffs[p] = row[-1]
    return coeffs


def nullspace(rows, fld):
    """Basis of {x : rows_matrix @ x = 0}, for rows over ncols columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = row_reduce(rows, fld)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [fld.zero] * ncols
        vec[fc] = fld.one
        for row, p in zip(reduced, pivots):
            vec[p] = fld.neg(row[fc])
        basis.append(vec)
    return basis
