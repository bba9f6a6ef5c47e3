"""Buchberger's algorithm for ideals and submodules of free modules.

Internally an element of S^r is a dict mapping (position, exponent-tuple)
to a coefficient.  The module order is position-over-term: terms in an
earlier position are larger than any term in a later position, with the
ring's monomial order breaking ties inside a position.  That block shape
is what makes the tail-augmentation trick below work: appending a unit
tail e_i to each input vector and computing one Gröbner basis yields, in
a single pass, a basis of the span, membership certificates, lifts of
members through the generators, and a generating set of the syzygy module
(the elements whose span part reduced to zero).

All routines are pure; caps and cancellation are threaded via `Caps`.
"""

from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps
from .orders import degree, mono_div, mono_divides, mono_lcm, mono_mul, sort_key
from .poly import Poly, SignatureMismatch

# ----------------------------------------------------------------------
# vectors


class FreeVector:
    """Element of a free module S^r, coordinates sharing one signature."""

    __slots__ = ("sig", "coords")

    def __init__(self, sig, coords):
        coords = tuple(coords)
        for p in coords:
            if p.sig != sig:
                raise SignatureMismatch("vector coordinate over a foreign signature")
        self.sig = sig
        self.coords = coords

    @classmethod
    def zero(cls, sig, rank):
        return cls(sig, tuple(Poly.zero(sig) for _ in range(rank)))

    @classmethod
    def unit(cls, sig, rank, i):
        coords = [Poly.zero(sig)] * rank
        coords[i] = Poly.one(sig)
        return cls(sig, coords)

    @property
    def rank(self):
        return len(self.coords)

    @property
    def is_zero(self):
        return all(p.is_zero for p in self.coords)

    def __add__(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeVector(self.sig, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeVector(self.sig, (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return FreeVector(self.sig, (-a for a in self.coords))

    def poly_mul(self, p: Poly):
        return FreeVector(self.sig, (p * a for a in self.coords))

    def __eq__(self, other):
        return (
            isinstance(other, FreeVector)
            and self.sig == other.sig
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.sig, self.coords))

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.coords) + ")"

    def __repr__(self):
        return f"FreeVector{self}"


def _poly_terms(p: Poly, pos=0):
    return {(pos, m): c for m, c in p.terms}

def _vector_terms(v: FreeVector):
    out = {}
    for i, p in enumerate(v.coords):
        for m, c in p.terms:
            out[(i, m)] = c
    return out

def _terms_to_vector(terms, sig, rank) -> FreeVector:
    buckets = [dict() for _ in range(rank)]
    for (i, m), c in terms.items():
        buckets[i][m] = c
    return FreeVector(sig, tuple(Poly.from_dict(sig, b) for b in buckets))

def _terms_to_poly(terms, sig) -> Poly:
    return Poly.from_dict(sig, {m: c for (_, m), c in terms.items()})


# ----------------------------------------------------------------------
# term-level engine


def _key_fn(order):
    def key(term):
        pos, mono = term
        return (-pos, sort_key(order, mono))

    return key


def _strip_content(terms, fld):
    """Rescale so coefficients are primitive integers (QQ) or monic (GF)."""
    if not terms:
        return terms
    if fld.characteristic == 0:
        from math import gcd

        den = 1
        for c in terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in terms.values():
            num = gcd(num, abs(c.numerator * den) // c.denominator)
        if num == 0:
            return terms
        factor = fld.from_rational(den, num)
        return {t: c * factor for t, c in terms.items()}
    return terms


def _reduce_full(work, basis, keyfn, fld):
    """Full normal form of a term dict against basis entries.

    basis entries are (lead_term, lead_coeff, terms_dict); every term of
    the result is divisible by no basis lead in the same position.
    """
    work = dict(work)
    remainder = {}
    while work:
        t = max(work, key=keyfn)
        c = work.pop(t)
        pos, mono = t
        hit = None
        for entry in basis:
            lt = entry[0]
            if lt[0] == pos and mono_divides(lt[1], mono):
                hit = entry
                break
        if hit is None:
            remainder[t] = c
            continue
        lt, lc, terms = hit
        shift = mono_div(mono, lt[1])
        factor = fld.div(c, lc)
        for (p2, m2), c2 in terms.items():
            if (p2, m2) == lt:
                continue
            key2 = (p2, mono_mul(m2, shift))
            s = fld.sub(work.get(key2, fld.zero), fld.mul(factor, c2))
            if fld.is_zero(s):
                work.pop(key2, None)
            else:
                work[key2] = s
    return remainder


def _spair(e1, e2, fld):
    """S-vector of two basis entries with leads in the same position."""
    (pos, m1), c1, t1 = e1
    (_, m2), c2, t2 = e2
    lcm = mono_lcm(m1, m2)
    s1, s2 = mono_div(lcm, m1), mono_div(lcm, m2)
    inv1, inv2 = fld.inv(c1), fld.inv(c2)
    acc = {}
    for (p, m), c in t1.items():
        acc[(p, mono_mul(m, s1))] = fld.mul(inv1, c)
    for (p, m), c in t2.items():
        key = (p, mono_mul(m, s2))
        v = fld.sub(acc.get(key, fld.zero), fld.mul(inv2, c))
        if fld.is_zero(v):
            acc.pop(key, None)
        else:
            acc[key] = v
    return acc


def _entry(terms, keyfn):
    lt = max(terms, key=keyfn)
    return (lt, terms[lt], terms)


def _buchberger_terms(inputs, order, fld, caps: Caps, rank: int):
    """Core loop; returns the interreduced monic basis as entry triples."""
    keyfn = _key_fn(order)
    basis = []
    for terms in inputs:
        terms = _strip_content(dict(terms), fld)
        if terms:
            basis.append(_entry(terms, keyfn))

    def lcm_of(i, j):
        (p1, m1) = basis[i][0]
        (p2, m2) = basis[j][0]
        if p1 != p2:
            return None
        return mono_lcm(m1, m2)

    pending = set()
    for j in range(len(basis)):
        for i in range(j):
            if lcm_of(i, j) is not None:
                pending.add((i, j))

    while pending:
        best = min(
            pending, key=lambda ij: (degree(lcm_of(ij[0], ij[1])), ij[1], ij[0])
        )
        pending.discard(best)
        i, j = best
        lcm = lcm_of(i, j)
        caps.tick(degree(lcm))
        (pi, mi) = basis[i][0]
        (pj, mj) = basis[j][0]
        # product criterion is only sound for rank-one (polynomial) input
        if rank == 1 and lcm == mono_mul(mi, mj):
            continue
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            (pk, mk) = basis[k][0]
            if pk == pi and mono_divides(mk, lcm):
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = _spair(basis[i], basis[j], fld)
        nf = _reduce_full(s, basis, keyfn, fld)
        if not nf:
            continue
        nf = _strip_content(nf, fld)
        new_index = len(basis)
        basis.append(_entry(nf, keyfn))
        for k in range(new_index):
            if lcm_of(k, new_index) is not None:
                pending.add((k, new_index))

    # minimalize: drop entries whose lead is divisible by another lead
    basis.sort(key=lambda e: keyfn(e[0]))
    kept = []
    for e in basis:
        (p, m) = e[0]
        if not any(
            kp == p and mono_divides(km, m) for ((kp, km), _, _) in kept
        ):
            kept.append(e)
    # tail-reduce and normalize monic
    reduced = []
    for idx, e in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        nf = _reduce_full(e[2], others, keyfn, fld)
        lt = max(nf, key=keyfn)
        inv = fld.inv(nf[lt])
        nf = {t: fld.mul(inv, c) for t, c in nf.items()}
        reduced.append(_entry(nf, keyfn))
    reduced.sort(key=lambda e: keyfn(e[0]))
    return reduced


# ----------------------------------------------------------------------
# public surface


@dataclass
class GroebnerBasis:
    """Reduced basis plus enough context to run normal forms against it."""

    sig: object
    rank: int
    generators: list  # Poly when rank == 1 came from polynomials, else FreeVector
    reduced: bool = True
    _entries: list = None
    _syzygies: list = None  # FreeVectors over S^len(original), when recorded
    original: list = None

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def contains_unit(self) -> bool:
        one = (0,) * self.sig.nvars
        return any(lt[1] == one for (lt, _, _) in self._entries)


def _as_term_inputs(gens):
    """Normalize a list of Poly or FreeVector into term dicts + context."""
    gens = list(gens)
    if not gens:
        raise ValueError("empty generating set")
    if isinstance(gens[0], Poly):
        sig = gens[0].sig
        for g in gens:
            if not isinstance(g, Poly):
                raise ValueError("mixed polynomial and vector generators")
            if g.sig != sig:
                raise SignatureMismatch("mixed signatures in generating set")
        return [_poly_terms(g) for g in gens], sig, 1, True
    sig = gens[0].sig
    rank = gens[0].rank
    for g in gens:
        if not isinstance(g, FreeVector):
            raise ValueError("mixed polynomial and vector generators")
        if g.sig != sig:
            raise SignatureMismatch("mixed signatures in generating set")
        if g.rank != rank:
            raise ValueError(f"mixed ranks in generating set: {g.rank} vs {rank}")
    return [_vector_terms(g) for g in gens], sig, rank, False


def buchberger(gens, caps: Caps = None, record_syzygies: bool = False):
    """Reduced Groebner basis of the ideal or submodule generated by gens.

    With record_syzygies the division records are retained via the
    tail-augmentation run, enabling `syzygy_matrix`.
    """
    caps = caps or DEFAULT_CAPS.fresh()
    inputs, sig, rank, is_poly = _as_term_inputs(gens)
    if record_syzygies:
        span = Span(sig, rank, list(gens), caps=caps, _is_poly=is_poly)
        gb = span.gb
        gb._syzygies = span.syzygies()
        gb.original = list(gens)
        return gb
    entries = _buchberger_terms(inputs, sig.order, sig.field, caps, rank)
    if is_poly:
        out = [_terms_to_poly(e[2], sig) for e in entries]
    else:
        out = [_terms_to_vector(e[2], sig, rank) for e in entries]
    return GroebnerBasis(sig, rank, out, True, entries)


def normal_form(f, gb: GroebnerBasis):
    """Unique canonical representative of f modulo the basis."""
    if isinstance(f, Poly):
        if gb.rank != 1:
            raise ValueError("polynomial against a module basis")
        if f.sig != gb.sig:
            raise SignatureMismatch("signature mismatch in normal form")
        terms = _poly_terms(f)
    else:
        if f.sig != gb.sig:
            raise SignatureMismatch("signature mismatch in normal form")
        if f.rank != gb.rank:
            raise ValueError(f"rank mismatch: {f.rank} vs {gb.rank}")
        terms = _vector_terms(f)
    keyfn = _key_fn(gb.sig.order)
    nf = _reduce_full(terms, gb._entries, keyfn, gb.sig.field)
    if isinstance(f, Poly):
        return _terms_to_poly(nf, gb.sig)
    return _terms_to_vector(nf, gb.sig, gb.rank)


def verify_groebner(gb: GroebnerBasis) -> bool:
    """Post-hoc check: every same-position S-pair reduces to zero."""
    keyfn = _key_fn(gb.sig.order)
    fld = gb.sig.field
    entries = gb._entries
    for j in range(len(entries)):
        for i in range(j):
            if entries[i][0][0] != entries[j][0][0]:
                continue
            s = _spair(entries[i], entries[j], fld)
            if _reduce_full(s, entries, keyfn, fld):
                return False
    return True


class Span:
    """Submodule of a free module with membership, lifts and syzygies.

    One augmented Groebner run serves every query: vectors are extended
    by unit tails recording how each basis element was assembled from
    the inputs.
    """

    def __init__(self, sig, rank, vectors, caps: Caps = None, _is_poly=False):
        caps = caps or DEFAULT_CAPS.fresh()
        self.sig = sig
        self.rank = rank
        self.vectors = list(vectors)
        self.count = len(self.vectors)
        self._is_poly = _is_poly
        fld = sig.field
        aug_inputs = []
        for i, v in enumerate(self.vectors):
            terms = _poly_terms(v) if isinstance(v, Poly) else _vector_terms(v)
            if isinstance(v, Poly) and rank != 1:
                raise ValueError("polynomial in a module span")
            terms = dict(terms)
            terms[(rank + i, (0,) * sig.nvars)] = fld.one
            aug_inputs.append(terms)
        self._keyfn = _key_fn(sig.order)
        self._aug = _buchberger_terms(
            aug_inputs, sig.order, fld, caps, rank + self.count
        )
        self._span_entries = []
        self._syzygy_tails = []
        for lt, lc, terms in self._aug:
            if lt[0] < rank:
                head = {t: c for t, c in terms.items() if t[0] < rank}
                self._span_entries.append(_entry(head, self._keyfn))
            else:
                # lead in the tail block forces every term into the tail
                self._syzygy_tails.append(
                    {(p - rank, m): c for (p, m), c in terms.items()}
                )

    @property
    def gb(self) -> GroebnerBasis:
        if self._is_poly:
            gens = [_terms_to_poly(e[2], self.sig) for e in self._span_entries]
        else:
            gens = [
                _terms_to_vector(e[2], self.sig, self.rank)
                for e in self._span_entries
            ]
        return GroebnerBasis(self.sig, self.rank, gens, True, self._span_entries)

    def _to_terms(self, v):
        if isinstance(v, Poly):
            if self.rank != 1:
                raise ValueError("polynomial against a module span")
            return _poly_terms(v)
        if v.rank != self.rank:
            raise ValueError(f"rank mismatch: {v.rank} vs {self.rank}")
        return _vector_terms(v)

    def normal_form(self, v):
        nf = _reduce_full(self._to_terms(v), self._span_entries, self._keyfn, self.sig.field)
        if isinstance(v, Poly):
            return _terms_to_poly(nf, self.sig)
        return _terms_to_vector(nf, self.sig, self.rank)

    def contains(self, v) -> bool:
        return not _reduce_full(
            self._to_terms(v), self._span_entries, self._keyfn, self.sig.field
        )

    def lift(self, v):
        """Coefficients a with v = sum a_i * vectors_i, or None."""
        fld = self.sig.field
        aug = dict(self._to_terms(v))
        nf = _reduce_full(aug, self._aug, self._keyfn, fld)
        if any(t[0] < self.rank for t in nf):
            return None
        coeffs = [dict() for _ in range(self.count)]
        for (p, m), c in nf.items():
            coeffs[p - self.rank][m] = fld.neg(c)
        return [Poly.from_dict(self.sig, d) for d in coeffs]

    def syzygies(self):
        """Generators of the syzygy module of the input vectors, in S^count."""
        return [
            _terms_to_vector(t, self.sig, self.count) for t in self._syzygy_tails
        ]


class IncrementalSpan:
    """Membership-only span of a growing vector list.

    No tails are carried, so this is cheaper than `Span`; adding a vector
    only processes S-pairs against the existing basis, which is already
    pairwise reduced.
    """

    def __init__(self, sig, rank, vectors=(), caps: Caps = None):
        self.sig = sig
        self.rank = rank
        self.caps = caps or DEFAULT_CAPS.fresh()
        self._keyfn = _key_fn(sig.order)
        inputs = []
        for v in vectors:
            inputs.append(_poly_terms(v) if isinstance(v, Poly) else _vector_terms(v))
        self._entries = _buchberger_terms(
            inputs, sig.order, sig.field, self.caps, rank
        )

    def _to_terms(self, v):
        return _poly_terms(v) if isinstance(v, Poly) else _vector_terms(v)

    def contains(self, v) -> bool:
        return not _reduce_full(
            self._to_terms(v), self._entries, self._keyfn, self.sig.field
        )

    def normal_form_terms(self, v):
        return _reduce_full(
            self._to_terms(v), self._entries, self._keyfn, self.sig.field
        )

    def add(self, v):
        """Absorb a new vector, completing the basis against it only."""
        fld = self.sig.field
        nf = _reduce_full(self._to_terms(v), self._entries, self._keyfn, fld)
        if not nf:
            return
        queue = [nf]
        while queue:
            # re-reduce: entries appended since enqueue may now apply
            cand = _reduce_full(queue.pop(), self._entries, self._keyfn, fld)
            if not cand:
                continue
            terms = _strip_content(cand, fld)
            entry = _entry(terms, self._keyfn)
            new_index = len(self._entries)
            self._entries.append(entry)
            for k in range(new_index):
                lt_k = self._entries[k][0]
                lt_n = entry[0]
                if lt_k[0] != lt_n[0]:
                    continue
                self.caps.tick(degree(mono_lcm(lt_k[1], lt_n[1])))
                s = _spair(self._entries[k], entry, fld)
                red = _reduce_full(s, self._entries, self._keyfn, fld)
                if red:
                    queue.append(red)


def syzygy_matrix(gb: GroebnerBasis, original_gens):
    """Columns generating the syzygies of original_gens; needs records."""
    if gb._syzygies is None or gb.original != list(original_gens):
        raise ValueError(
            "missing division records: compute the basis with record_syzygies=True"
        )
    return list(gb._syzygies)


# ----------------------------------------------------------------------
# ideals


@dataclass
class Ideal:
    """Ideal of the ambient polynomial ring with a lazily cached basis."""

    sig: object
    generators: tuple

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero)
        for g in gens:
            if g.sig != self.sig:
                raise SignatureMismatch("ideal generator over a foreign signature")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_gb", None)

    def gb(self, caps: Caps = None) -> GroebnerBasis:
        if self._gb is None:
            if not self.generators:
                object.__setattr__(
                    self,
                    "_gb",
                    GroebnerBasis(self.sig, 1, [], True, []),
                )
            else:
                object.__setattr__(self, "_gb", buchberger(self.generators, caps))
        return self._gb

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def contains(self, f: Poly, caps: Caps = None) -> bool:
        if not self.generators:
            return f.is_zero
        return normal_form(f, self.gb(caps)).is_zero

    def is_proper(self, caps: Caps = None) -> bool:
        if not self.generators:
            return True
        return not self.gb(caps).contains_unit()

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal_quotient(ideal: Ideal, f: Poly, caps: Caps = None) -> Ideal:
    """(I : f) = {g : g*f in I}, computed from syzygies of (f, gens(I))."""
    if f.is_zero:
        raise ValueError("ideal quotient by zero")
    if not ideal.generators:
        return Ideal(ideal.sig, ())
    span = Span(ideal.sig, 1, [f] + list(ideal.generators), caps=caps, _is_poly=True)
    firsts = [s.coords[0] for s in span.syzygies()]
    return Ideal(ideal.sig, tuple(g for g in firsts if not g.is_zero))


def krull_dimension(ideal: Ideal, caps: Caps = None) -> int:
    """dim(ambient/I) via independent variable sets of the lead-term ideal."""
    n = ideal.sig.nvars
    if not ideal.generators:
        return n
    gb = ideal.gb(caps)
    if gb.contains_unit():
        raise ValueError("unit ideal has no dimension")
    supports = []
    for g in gb.generators:
        m = g.leading_monomial()
        supports.append(frozenset(i for i, e in enumerate(m) if e))
    best = 0
    for mask in range(1 << n):
        subset = {i for i in range(n) if (mask >> i) & 1}
        if len(subset) <= best:
            continue
        if all(not s <= subset for s in supports):
            best = len(subset)
    return best


def _fresh_var(sig, base="t"):
    name = base
    while name in sig.variables:
        name += "_"
    return name


def radical_membership(f: Poly, ideal: Ideal, caps: Caps = None) -> bool:
    """f in rad(I), decided by 1 in I + (1 - t*f) over an extended ring."""
    from .poly import RingSignature

    if f.is_zero:
        return True
    sig = ideal.sig
    tname = _fresh_var(sig)
    ext = RingSignature(sig.field, sig.variables + (tname,), sig.order)
    lift = lambda p: p.map_exponents(lambda m: m + (0,), ext)
    t = Poly.variable(ext, tname)
    gens = [lift(g) for g in ideal.generators]
    gens.append(Poly.one(ext) - t * lift(f))
    gb = buchberger(gens, caps)
    return normal_form(Poly.one(ext), gb).is_zero


def intersect_ideals(a: Ideal, b: Ideal, caps: Caps = None) -> Ideal:
    """I intersect J via the elimination order on t*I + (1-t)*J."""
    from .orders import elimination
    from .poly import RingSignature

    if not a.generators or not b.generators:
        return Ideal(a.sig, ())
    sig = a.sig
    if sig != b.sig:
        raise SignatureMismatch("ideal intersection across signatures")
    tname = _fresh_var(sig)
    ext = RingSignature(sig.field, (tname,) + sig.variables, elimination(1))
    lift = lambda p: p.map_exponents(lambda m: (0,) + m, ext)
    t = Poly.variable(ext, tname)
    one_minus_t = Poly.one(ext) - t
    gens = [t * lift(g) for g in a.generators]
    gens += [one_minus_t * lift(g) for g in b.generators]
    gb = buchberger(gens, caps)
    kept = []
    for g in gb.generators:
        if all(m[0] == 0 for m, _ in g.terms):
            kept.append(g.map_exponents(lambda m: m[1:], sig))
    return Ideal(sig, tuple(kept))
