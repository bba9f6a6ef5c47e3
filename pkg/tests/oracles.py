"""Independent oracles: plain linear algebra over graded pieces.

Nothing here touches the Groebner engine; membership and kernel
dimensions come from row reduction of coefficient matrices, and the
monomial-order oracle is the definition unrolled term by term.
"""

from reflextor.linalg import in_row_span, rank
from reflextor.orders import degree
from reflextor.poly import Poly


def all_monomials(nvars, d):
    if d < 0:
        return []
    if nvars == 1:
        return [(d,)]
    out = []
    for e in range(d + 1):
        out.extend((e,) + rest for rest in all_monomials(nvars - 1, d - e))
    return out


def poly_coeff_vector(p, basis_index, fld):
    vec = [fld.zero] * len(basis_index)
    for m, c in p.terms:
        vec[basis_index[m]] = c
    return vec


def homogeneous_membership_oracle(gens, f):
    """Is homogeneous f in the ideal generated by homogeneous gens?

    Exact per degree: membership is solvable inside the graded piece.
    """
    sig = f.sig
    fld = sig.field
    if f.is_zero:
        return True
    d = f.homogeneous_degree()
    basis = all_monomials(sig.nvars, d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero:
            continue
        shift = d - g.homogeneous_degree()
        for m in all_monomials(sig.nvars, shift):
            rows.append(poly_coeff_vector(g * Poly.monomial(sig, m), index, fld))
    return in_row_span(rows, poly_coeff_vector(f, index, fld), fld)


def ideal_piece_dimension(gens, d):
    """dim of the degree-d piece of the ideal generated by homogeneous gens."""
    sig = gens[0].sig
    fld = sig.field
    basis = all_monomials(sig.nvars, d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero:
            continue
        shift = d - g.homogeneous_degree()
        for m in all_monomials(sig.nvars, shift):
            rows.append(poly_coeff_vector(g * Poly.monomial(sig, m), index, fld))
    return rank(rows, fld)


def _vector_coeff_vector(v, degs, target_degree, fld, nvars):
    index = {}
    offset = 0
    pieces = []
    for i, cd in enumerate(degs):
        monos = all_monomials(nvars, target_degree - cd)
        pieces.append(monos)
        for m in monos:
            index[(i, m)] = offset
            offset += 1
    vec = [fld.zero] * offset
    for i, p in enumerate(v.coords):
        for m, c in p.terms:
            vec[index[(i, m)]] = c
    return vec, offset


def submodule_piece_dimension(vectors, coord_degrees, target_degree):
    """dim of the degree-d piece of the span of homogeneous vectors."""
    if not vectors:
        return 0
    sig = vectors[0].sig
    fld = sig.field
    nvars = sig.nvars
    from reflextor.hilbert import vector_degree

    rows = []
    for v in vectors:
        dv = vector_degree(v, coord_degrees)
        for m in all_monomials(nvars, target_degree - dv):
            image = v.poly_mul(Poly.monomial(sig, m))
            vec, _ = _vector_coeff_vector(image, coord_degrees, target_degree,
                                          fld, nvars)
            rows.append(vec)
    return rank(rows, fld)


def kernel_piece_dimension(vectors, coord_degrees, target_degree):
    """dim of the degree-d syzygy space of the given homogeneous vectors."""
    if not vectors:
        return 0
    sig = vectors[0].sig
    fld = sig.field
    nvars = sig.nvars
    from reflextor.hilbert import vector_degree

    columns = []
    for v in vectors:
        dv = vector_degree(v, coord_degrees)
        for m in all_monomials(nvars, target_degree - dv):
            image = v.poly_mul(Poly.monomial(sig, m))
            vec, _ = _vector_coeff_vector(image, coord_degrees, target_degree,
                                          fld, nvars)
            columns.append(vec)
    if not columns:
        return 0
    return len(columns) - rank(columns, fld)


def grevlex_oracle(m1, m2):
    """The definition, unrolled: degree first, then the last differing
    exponent decides reversed."""
    d1, d2 = degree(m1), degree(m2)
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for a, b in zip(reversed(m1), reversed(m2)):
        if a != b:
            return 1 if a < b else -1
    return 0


def lex_oracle(m1, m2):
    for a, b in zip(m1, m2):
        if a != b:
            return 1 if a > b else -1
    return 0
