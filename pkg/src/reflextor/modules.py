"""Finitely presented graded modules over a quotient ring.

A module is a cokernel: generators with integer degrees and homogeneous
relation columns, everything reduced to normal form modulo the defining
ideal.  The operations here (kernel, tensor, dual, transpose,
pushforward, syzygy, minimize, biduality, Fitting ideals, local rank)
all reduce to span membership and syzygy computations over the ambient
polynomial ring with the ring relations adjoined.

Sign and twist conventions: M = coker(P) with P acting from the column
side, entry (i, j) homogeneous of degree coldeg(j) - gendeg(i); dualizing
flips generator degrees, so Hom(M, R) lives inside a free module with
coordinate degrees -gendeg(i).
"""

import threading
from dataclasses import dataclass

from .caps import Caps
from .groebner import (
    FreeVector,
    Ideal,
    IncrementalSpan,
    Span,
    _terms_to_vector,
    ideal_quotient,
    intersect_ideals,
)
from .hilbert import hilbert_series_of_presentation, vector_degree
from .poly import Poly
from .rings import QuotientRing, RIdeal


class DegreeError(ValueError):
    """A presentation or map fails graded consistency."""


class NotWellDefined(ValueError):
    """A matrix does not descend to a map of the presented modules."""


class NotTorsionless(ValueError):
    """Pushforward requested for a module with biduality kernel."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# ----------------------------------------------------------------------
# presented modules


class PresentedModule:
    """M = coker(columns) in a graded free module over a quotient ring."""

    __slots__ = (
        "ring",
        "gen_degrees",
        "columns",
        "col_degrees",
        "_minimal",
        "_resolution",
        "_resolution_lock",
        "_hilbert",
    )

    def __init__(self, ring: QuotientRing, gen_degrees, columns, _minimal=False):
        self.ring = ring
        self.gen_degrees = tuple(int(d) for d in gen_degrees)
        g = len(self.gen_degrees)
        cleaned = []
        for col in columns:
            if col.rank != g:
                raise DegreeError(
                    f"relation column of rank {col.rank} against {g} generators"
                )
            col = ring.reduce_vector(col)
            if col.is_zero:
                continue
            cleaned.append(col)
        self.columns = tuple(cleaned)
        degs = []
        for col in self.columns:
            degs.append(vector_degree(col, self.gen_degrees))
        self.col_degrees = tuple(degs)
        self._minimal = _minimal
        self._resolution = None
        self._resolution_lock = threading.Lock()
        self._hilbert = None

    # -- basics ----------------------------------------------------------
    @property
    def num_generators(self):
        return len(self.gen_degrees)

    @property
    def num_relations(self):
        return len(self.columns)

    def entry(self, i: int, j: int) -> Poly:
        return self.columns[j].coords[i]

    def rows(self):
        return [
            [self.columns[j].coords[i] for j in range(self.num_relations)]
            for i in range(self.num_generators)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, PresentedModule)
            and self.ring == other.ring
            and self.gen_degrees == other.gen_degrees
            and self.columns == other.columns
        )

    def __hash__(self):
        return hash((self.ring, self.gen_degrees, self.columns))

    def __repr__(self):
        return (
            f"PresentedModule({self.num_generators} gens {self.gen_degrees}, "
            f"{self.num_relations} relations)"
        )

    def matrix_strings(self):
        return [[str(p) for p in row] for row in self.rows()]

    def hilbert_series(self, caps: Caps = None):
        """Series of M as a module over the ambient polynomial ring."""
        if self._hilbert is None:
            cols = list(self.columns) + ring_relation_vectors(
                self.ring, self.num_generators
            )
            self._hilbert = hilbert_series_of_presentation(
                self.ring.sig, self.gen_degrees, cols, caps
            )
        return self._hilbert


def ring_relation_vectors(ring: QuotientRing, rank: int):
    """Columns g*e_i for defining generators g, making spans R-spans."""
    out = []
    for g in ring.ideal.generators:
        for i in range(rank):
            coords = [Poly.zero(ring.sig)] * rank
            coords[i] = g
            out.append(FreeVector(ring.sig, coords))
    return out


def ring_span(ring: QuotientRing, rank: int, vectors, caps: Caps = None) -> Span:
    """Span over R: the given vectors with the ring relations adjoined."""
    vecs = list(vectors) + ring_relation_vectors(ring, rank)
    return Span(ring.sig, rank, vecs, caps=caps)


def ring_membership_span(ring, rank, vectors, caps: Caps = None) -> IncrementalSpan:
    vecs = list(vectors) + ring_relation_vectors(ring, rank)
    return IncrementalSpan(ring.sig, rank, vecs, caps=caps)


def syzygies_over_ring(ring: QuotientRing, rank: int, vectors, caps: Caps = None):
    """Generators of the syzygy module of `vectors` inside R^len(vectors)."""
    k = len(vectors)
    if k == 0:
        return []
    span = ring_span(ring, rank, vectors, caps)
    out = []
    for s in span.syzygies():
        head = FreeVector(ring.sig, s.coords[:k])
        head = ring.reduce_vector(head)
        if not head.is_zero:
            out.append(head)
    return out


def minimal_generator_indices(ring, rank, vectors, degrees, modulo=(), caps=None):
    """Graded-Nakayama choice of generators of (span(vectors)+D)/D over R.

    Vectors are scanned in ascending degree; one is kept exactly when the
    kept ones together with D do not already span it.
    """
    if not vectors:
        return []
    order = sorted(range(len(vectors)), key=lambda i: (degrees[i], str(vectors[i])))
    span = ring_membership_span(ring, rank, list(modulo), caps)
    kept = []
    for i in order:
        if vectors[i].is_zero:
            continue
        if span.contains(vectors[i]):
            continue
        kept.append(i)
        span.add(vectors[i])
    return sorted(kept)


def present_subquotient(ring, rank, coord_degrees, numerators, denominators, caps=None):
    """Present (span(numerators) + D)/D, with D = span(denominators) over R.

    Returns the presented module together with the chosen generator
    vectors inside R^rank (reduced representatives of the classes).
    """
    den_span = ring_membership_span(ring, rank, denominators, caps)
    reduced = []
    for v in numerators:
        nf = den_span.normal_form_terms(v)
        if nf:
            reduced.append(ring.reduce_vector(_terms_to_vector(nf, ring.sig, rank)))
    reduced = [v for v in reduced if not v.is_zero]
    degs = [vector_degree(v, coord_degrees) for v in reduced]
    kept = minimal_generator_indices(
        ring, rank, reduced, degs, modulo=denominators, caps=caps
    )
    gens = [reduced[i] for i in kept]
    gen_degs = [degs[i] for i in kept]
    if not gens:
        return PresentedModule(ring, (), (), _minimal=True), []
    stacked = list(gens) + list(denominators) + ring_relation_vectors(ring, rank)
    span = Span(ring.sig, rank, stacked, caps=caps)
    t = len(gens)
    rel_cols = []
    for s in span.syzygies():
        head = ring.reduce_vector(FreeVector(ring.sig, s.coords[:t]))
        if not head.is_zero:
            rel_cols.append(head)
    module = PresentedModule(ring, gen_degs, rel_cols)
    return minimize(module), gens


def module_is_zero(m: PresentedModule, caps: Caps = None) -> bool:
    """Membership-certified: every generator lies in the relation span."""
    if m.num_generators == 0:
        return True
    span = ring_membership_span(ring=m.ring, rank=m.num_generators,
                                vectors=m.columns, caps=caps)
    return all(
        span.contains(FreeVector.unit(m.ring.sig, m.num_generators, i))
        for i in range(m.num_generators)
    )


# ----------------------------------------------------------------------
# constructors


def cyclic(ring: QuotientRing, ideal) -> PresentedModule:
    """R/J with one generator in degree zero."""
    if isinstance(ideal, RIdeal):
        gens = ideal.generators
    else:
        gens = tuple(ideal)
    cols = [FreeVector(ring.sig, (g,)) for g in gens]
    return PresentedModule(ring, (0,), cols)


def free_module(ring: QuotientRing, degrees) -> PresentedModule:
    return PresentedModule(ring, tuple(degrees), (), _minimal=True)


def module_from_rows(ring, rows, gen_degrees) -> PresentedModule:
    """Cokernel of a row-major matrix of polynomials."""
    g = len(rows)
    if g != len(tuple(gen_degrees)):
        raise DegreeError("generator degree count does not match the row count")
    ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise DegreeError("ragged presentation matrix")
    cols = []
    for j in range(ncols):
        cols.append(FreeVector(ring.sig, tuple(rows[i][j] for i in range(g))))
    return PresentedModule(ring, tuple(gen_degrees), cols)


# ----------------------------------------------------------------------
# maps


class ModuleMap:
    """Degree-zero map between presented modules, given on generators.

    `columns[j]` is the image of the j-th source generator, a homogeneous
    vector over the target's generators.
    """

    __slots__ = ("source", "target", "columns")

    def __init__(self, source, target, columns, check=True, caps: Caps = None):
        self.source = source
        self.target = target
        cols = []
        for j, col in enumerate(columns):
            col = target.ring.reduce_vector(col)
            if col.rank != target.num_generators:
                raise DegreeError("map column rank does not match the target")
            if not col.is_zero:
                d = vector_degree(col, target.gen_degrees)
                if d != source.gen_degrees[j]:
                    raise DegreeError(
                        f"map is not degree zero on generator {j}: {d} != "
                        f"{source.gen_degrees[j]}"
                    )
            cols.append(col)
        self.columns = tuple(cols)
        if check:
            self._check_well_defined(caps)

    def _check_well_defined(self, caps):
        if not self.source.columns:
            return
        span = ring_membership_span(
            self.target.ring, self.target.num_generators, self.target.columns, caps
        )
        for rel in self.source.columns:
            image = self.apply_vector(rel)
            if not span.contains(image):
                raise NotWellDefined(
                    f"relation {rel} does not map into the target relations"
                )

    def apply_vector(self, vec: FreeVector) -> FreeVector:
        """Image of an element of the source's free cover."""
        out = FreeVector.zero(self.target.ring.sig, self.target.num_generators)
        for j, p in enumerate(vec.coords):
            if not p.is_zero:
                out = out + self.columns[j].poly_mul(p)
        return self.target.ring.reduce_vector(out)

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other (other's target is self's source)."""
        if other.target is not self.source and other.target != self.source:
            raise DegreeError("composition mismatch")
        cols = [self.apply_vector(c) for c in other.columns]
        return ModuleMap(other.source, self.target, cols, check=False)

    def is_zero(self, caps: Caps = None) -> bool:
        span = ring_membership_span(
            self.target.ring, self.target.num_generators, self.target.columns, caps
        )
        return all(span.contains(c) for c in self.columns)

    def cokernel(self) -> PresentedModule:
        return PresentedModule(
            self.target.ring,
            self.target.gen_degrees,
            tuple(self.columns) + tuple(self.target.columns),
        )

    def matrix_strings(self):
        return [
            [str(self.columns[j].coords[i]) for j in range(len(self.columns))]
            for i in range(self.target.num_generators)
        ]


def identity_map(m: PresentedModule) -> ModuleMap:
    cols = [
        FreeVector.unit(m.ring.sig, m.num_generators, i)
        for i in range(m.num_generators)
    ]
    return ModuleMap(m, m, cols, check=False)


def kernel(phi: ModuleMap, caps: Caps = None):
    """Kernel of a map, as a presented module plus its inclusion map."""
    ring = phi.source.ring
    g_s = phi.source.num_generators
    g_t = phi.target.num_generators
    if g_s == 0:
        zero = PresentedModule(ring, (), (), _minimal=True)
        return zero, ModuleMap(zero, phi.source, (), check=False)
    # preimage of the target relations inside the source free cover
    stacked = list(phi.columns)
    stacked += list(phi.target.columns)
    stacked += ring_relation_vectors(ring, g_t)
    span = Span(ring.sig, g_t, stacked, caps=caps)
    preimage = []
    for s in span.syzygies():
        head = ring.reduce_vector(FreeVector(ring.sig, s.coords[:g_s]))
        if not head.is_zero:
            preimage.append(head)
    module, gens = present_subquotient(
        ring, g_s, phi.source.gen_degrees, preimage, list(phi.source.columns), caps
    )
    incl = ModuleMap(module, phi.source, gens, check=False)
    return module, incl


# ----------------------------------------------------------------------
# minimization


def minimize(m: PresentedModule, caps: Caps = None) -> PresentedModule:
    """Equivalent presentation with no unit entries and no redundant data.

    Unit entries are pivoted away (killing one generator and one relation
    each), zero columns are dropped, and the surviving columns are cut to
    a minimal generating set of the relation span.  Idempotent.
    """
    if m._minimal:
        return m
    ring = m.ring
    if not m.columns:
        out = PresentedModule(ring, m.gen_degrees, (), _minimal=True)
        return out
    degs = list(m.gen_degrees)
    rows = [list(r) for r in m.rows()]
    changed = True
    while changed:
        changed = False
        g = len(rows)
        r = len(rows[0]) if rows and rows[0] else 0
        pivot = None
        for i in range(g):
            for j in range(r):
                p = rows[i][j]
                if not p.is_zero and p.total_degree() == 0:
                    pivot = (i, j, p.leading_coefficient())
                    break
            if pivot:
                break
        if pivot is None:
            break
        i0, j0, unit = pivot
        fld = ring.sig.field
        inv = fld.inv(unit)
        for j in range(len(rows[0])):
            if j == j0:
                continue
            factor = rows[i0][j].scale(inv)
            if factor.is_zero:
                continue
            for i in range(len(rows)):
                rows[i][j] = ring.reduce(rows[i][j] - factor * rows[i][j0])
        for i in range(len(rows)):
            del rows[i][j0]
        del rows[i0]
        del degs[i0]
        changed = True
        if not rows:
            break
    if not rows or not degs:
        return PresentedModule(ring, (), (), _minimal=True)
    g = len(rows)
    cols = []
    for j in range(len(rows[0])):
        col = FreeVector(ring.sig, tuple(rows[i][j] for i in range(g)))
        col = ring.reduce_vector(col)
        if not col.is_zero:
            cols.append(col)
    col_degs = [vector_degree(c, degs) for c in cols]
    kept = minimal_generator_indices(ring, g, cols, col_degs, caps=caps)
    out = PresentedModule(ring, tuple(degs), tuple(cols[i] for i in kept))
    out._minimal = True
    return out


# ----------------------------------------------------------------------
# tensor, dual, transpose


def tensor(a: PresentedModule, b: PresentedModule) -> PresentedModule:
    """A (x) B: generator grid with block relations [P_A (x) id | id (x) P_B]."""
    if a.ring != b.ring:
        raise DegreeError("tensor product across different rings")
    ring = a.ring
    ga, gb = a.num_generators, b.num_generators
    degs = tuple(
        a.gen_degrees[i] + b.gen_degrees[k] for i in range(ga) for k in range(gb)
    )
    zero = Poly.zero(ring.sig)
    cols = []
    for col in a.columns:
        for k in range(gb):
            coords = [zero] * (ga * gb)
            for i in range(ga):
                if not col.coords[i].is_zero:
                    coords[i * gb + k] = col.coords[i]
            cols.append(FreeVector(ring.sig, coords))
    for i in range(ga):
        for col in b.columns:
            coords = [zero] * (ga * gb)
            for k in range(gb):
                if not col.coords[k].is_zero:
                    coords[i * gb + k] = col.coords[k]
            cols.append(FreeVector(ring.sig, coords))
    return PresentedModule(ring, degs, cols)


def _dual_pair(m: PresentedModule, caps: Caps = None):
    """Hom(M, R) as kernel of the transposed presentation, plus embedding.

    The embedding vectors live in the free module with coordinate degrees
    -gendeg(i); coordinate i of a functional is its value on generator i.
    """
    ring = m.ring
    g, r = m.num_generators, m.num_relations
    f0_dual = free_module(ring, tuple(-d for d in m.gen_degrees))
    f1_dual = free_module(ring, tuple(-d for d in m.col_degrees))
    cols = []
    for j in range(g):
        cols.append(FreeVector(ring.sig, tuple(m.entry(j, c) for c in range(r))))
    psi = ModuleMap(f0_dual, f1_dual, cols, check=False)
    return kernel(psi, caps)


def dual(m: PresentedModule, caps: Caps = None) -> PresentedModule:
    return _dual_pair(m, caps)[0]


def transpose(m: PresentedModule, caps: Caps = None) -> PresentedModule:
    """Cokernel of the dualized presentation map, returned minimized."""
    ring = m.ring
    g, r = m.num_generators, m.num_relations
    degs = tuple(-d for d in m.col_degrees)
    cols = []
    for j in range(g):
        cols.append(FreeVector(ring.sig, tuple(m.entry(j, c) for c in range(r))))
    return minimize(PresentedModule(ring, degs, cols), caps)


# ----------------------------------------------------------------------
# biduality and pushforward


@dataclass
class BidualityReport:
    map: ModuleMap
    kernel: PresentedModule
    cokernel: PresentedModule

    @property
    def torsionless(self):
        return self.kernel.num_generators == 0

    @property
    def reflexive(self):
        return self.torsionless and self.cokernel.num_generators == 0


def biduality(m: PresentedModule, caps: Caps = None) -> BidualityReport:
    """The natural map M -> M**, with its kernel and cokernel presented."""
    ring = m.ring
    mstar, incl_star = _dual_pair(m, caps)
    star_vectors = incl_star.columns  # functionals on M, inside R^{g_M}
    mstarstar, incl_star2 = _dual_pair(mstar, caps)
    bidual_vectors = incl_star2.columns  # functionals on M*, inside R^{g_M*}
    g = m.num_generators
    gss = mstarstar.num_generators
    if g == 0:
        zero = PresentedModule(ring, (), (), _minimal=True)
        return BidualityReport(ModuleMap(zero, mstarstar, (), check=False), zero, zero)
    lift_span = ring_span(ring, mstar.num_generators, bidual_vectors, caps)
    cols = []
    for j in range(g):
        ev = FreeVector(
            ring.sig, tuple(v.coords[j] for v in star_vectors)
        )  # evaluation of functionals at generator j
        if ev.is_zero:
            cols.append(FreeVector.zero(ring.sig, gss))
            continue
        coeffs = lift_span.lift(ev)
        if coeffs is None:
            raise RuntimeError("biduality image failed to lift into M**")
        cols.append(
            ring.reduce_vector(FreeVector(ring.sig, tuple(coeffs[:gss])))
        )
    bmap = ModuleMap(m, mstarstar, cols, caps=caps)
    ker, _ = kernel(bmap, caps)
    coker = minimize(bmap.cokernel(), caps)
    return BidualityReport(bmap, minimize(ker, caps), coker)


@dataclass
class PushforwardResult:
    module: PresentedModule
    embedding: ModuleMap      # N -> R^s against a minimal generating set of N*
    target_free: PresentedModule
    ext1_certificate: object  # homology report for Ext^1(N1, R) = 0
    # Omega(Tr N) and Tr(N1) agree up to free summands; the recorded witness
    # is the Hilbert-series difference written over the ring's series
    stable_syzygy_identity: object = None


def pushforward(n: PresentedModule, caps: Caps = None) -> PushforwardResult:
    """Embed a torsionless module along its dual's minimal generators.

    The cokernel N1 of the embedding N -> R^s satisfies Ext^1(N1, R) = 0,
    which is recomputed and attached as a certificate.
    """
    from .homology import ext

    ring = n.ring
    tr = transpose(n, caps)
    ext1 = ext(tr, free_module(ring, (0,)), 1, caps)
    if not ext1.is_zero:
        raise NotTorsionless(
            "module is not torsionless: Ext^1(transpose, R) is nonzero",
            witness=ext1,
        )
    mstar, incl_star = _dual_pair(n, caps)
    star_vectors = list(incl_star.columns)
    dual_coord_degs = tuple(-d for d in n.gen_degrees)
    star_degs = [vector_degree(v, dual_coord_degs) for v in star_vectors]
    kept = minimal_generator_indices(
        ring, n.num_generators, star_vectors, star_degs, caps=caps
    )
    minimal_functionals = [star_vectors[i] for i in kept]
    e_degs = [star_degs[i] for i in kept]
    s = len(minimal_functionals)
    target = free_module(ring, tuple(-e for e in e_degs))
    cols = []
    for j in range(n.num_generators):
        cols.append(
            FreeVector(
                ring.sig, tuple(v.coords[j] for v in minimal_functionals)
            )
        )
    emb = ModuleMap(n, target, cols, caps=caps)
    n1 = minimize(emb.cokernel(), caps)
    recheck = ext(transpose(n1, caps), free_module(ring, (0,)), 1, caps)
    if not recheck.is_zero:
        raise RuntimeError("pushforward postcondition failed: Ext^1(N1, R) != 0")
    omega_tr = syzygy(tr, 1, caps)
    diff = omega_tr.hilbert_series(caps) - transpose(n1, caps).hilbert_series(caps)
    ring_numer = free_module(ring, (0,)).hilbert_series(caps).as_dict()
    witness = diff.is_free_combination_of(ring_numer)
    return PushforwardResult(n1, emb, target, recheck, witness)


# ----------------------------------------------------------------------
# Fitting ideals and local rank


def _determinant(rows):
    n = len(rows)
    sig = rows[0][0].sig
    if n == 1:
        return rows[0][0]
    total = Poly.zero(sig)
    for k in range(n):
        entry = rows[0][k]
        if entry.is_zero:
            continue
        minor = [r[:k] + r[k + 1 :] for r in rows[1:]]
        term = entry * _determinant(minor)
        total = total + term if k % 2 == 0 else total - term
    return total


def fitting_ideal(m: PresentedModule, i: int, caps: Caps = None) -> Ideal:
    """Fitt_i(M): the ideal of (g - i)-minors of the presentation matrix."""
    from itertools import combinations

    sig = m.ring.sig
    g = m.num_generators
    size = g - i
    if size <= 0:
        return Ideal(sig, (Poly.one(sig),))
    r = m.num_relations
    if size > g or size > r:
        return Ideal(sig, ())
    rows = m.rows()
    minors = []
    for row_idx in combinations(range(g), size):
        for col_idx in combinations(range(r), size):
            sub = [[rows[i2][j2] for j2 in col_idx] for i2 in row_idx]
            d = m.ring.reduce(_determinant(sub))
            if not d.is_zero and d not in minors:
                minors.append(d)
    return Ideal(sig, tuple(minors))


@dataclass
class LocalizedRank:
    kind: str                # "free" | "not_free" | "unknown"
    rank: object = None
    witness: str = ""
    certificate: object = None  # the element outside p killing Fitt_{r-1}

    @property
    def is_free(self):
        return self.kind == "free"


def localized_rank(m: PresentedModule, p: RIdeal, caps: Caps = None) -> LocalizedRank:
    """Freeness and rank of M at a prime, by the two-sided Fitting test.

    M_p is free of rank r exactly when Fitt_r is not contained in p and
    Fitt_{r-1} dies locally, i.e. some c outside p multiplies Fitt_{r-1}
    into the defining ideal; c is searched in the annihilator-quotient
    (I : Fitt_{r-1}).
    """
    if p.prime_status not in ("verified", "asserted"):
        raise ValueError("localized rank needs a verified or asserted prime")
    if not p.is_proper(caps):
        raise ValueError("localized rank at the unit ideal")
    ring = m.ring
    mm = minimize(m, caps)
    gb_p = p.lift_gb(caps)
    from .groebner import normal_form as nf

    def contained_in_p(ideal: Ideal) -> bool:
        return all(nf(g, gb_p).is_zero for g in ideal.generators)

    g = mm.num_generators
    r = None
    for i in range(g + 1):
        if not contained_in_p(fitting_ideal(mm, i, caps)):
            r = i
            break
    if r is None:
        raise RuntimeError("Fitting chain never left the prime; Fitt_g = (1) must")
    if r == 0:
        return LocalizedRank("free", 0, witness="Fitt_0 survives outside the prime")
    below = fitting_ideal(mm, r - 1, caps)
    reduced_gens = [g2 for g2 in (ring.reduce(x) for x in below.generators)
                    if not g2.is_zero]
    if not reduced_gens:
        return LocalizedRank(
            "free", r, witness=f"Fitt_{r - 1} vanishes in the ring"
        )
    quot = None
    for f in reduced_gens:
        q = ideal_quotient(ring.ideal, f, caps)
        quot = q if quot is None else intersect_ideals(quot, q, caps)
    for c in quot.generators:
        if not nf(c, gb_p).is_zero:
            return LocalizedRank(
                "free",
                r,
                witness=f"{c} kills Fitt_{r - 1} outside the prime",
                certificate=c,
            )
    return LocalizedRank(
        "not_free",
        None,
        witness=(
            f"rank would have to be {r}, but Fitt_{r - 1} does not localize "
            f"to zero: (I : Fitt_{r - 1}) lies inside the prime"
        ),
    )


# ----------------------------------------------------------------------
# syzygies of a module


def syzygy(m: PresentedModule, n: int, caps: Caps = None) -> PresentedModule:
    """n-th syzygy along the minimal graded free resolution."""
    if n < 0:
        raise ValueError("negative syzygy index")
    if n == 0:
        return minimize(m, caps)
    from .homology import resolution

    res = resolution(m)
    res.extend_to(n + 1, caps)
    return res.syzygy_module(n)
