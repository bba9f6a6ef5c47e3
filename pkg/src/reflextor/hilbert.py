"""Hilbert series of graded modules over the ambient polynomial ring.

A series is stored as an integer Laurent-polynomial numerator over the
fixed denominator (1-t)^nvars.  The numerator is the alternating sum of
shift contributions along a finite graded free resolution over the
ambient ring, so it is independent of the resolution used and equality
of numerators decides equality of series.
"""

from dataclasses import dataclass

from .caps import Caps
from .groebner import FreeVector, Span


def _laurent_add(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for d, c in b.items():
        out[d] = out.get(d, 0) + sign * c
        if out[d] == 0:
            del out[d]
    return out


def _laurent_shift(a: dict, shift: int) -> dict:
    return {d + shift: c for d, c in a.items()}


def laurent_div_exact(num: dict, den: dict):
    """Exact quotient num/den in Z[t, 1/t], or None when not divisible."""
    if not den:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    num = dict(num)
    quot = {}
    den_top = max(den)
    den_lead = den[den_top]
    lowest = (min(num) - min(den)) if num else 0
    while num:
        top = max(num)
        lead = num[top]
        if lead % den_lead != 0:
            return None
        c = lead // den_lead
        d = top - den_top
        if d < lowest:
            return None  # quotient exponents would descend without end
        quot[d] = quot.get(d, 0) + c
        for e, k in den.items():
            num[e + d] = num.get(e + d, 0) - c * k
            if num[e + d] == 0:
                del num[e + d]
    return quot


def laurent_str(a: dict) -> str:
    if not a:
        return "0"
    chunks = []
    for d in sorted(a):
        c = a[d]
        if d == 0:
            body = str(abs(c))
        else:
            t = "t" if d == 1 else f"t^{d}"
            body = t if abs(c) == 1 else f"{abs(c)}*{t}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple  # sorted tuple of (degree, int coefficient)
    nvars: int

    @classmethod
    def from_dict(cls, numer: dict, nvars: int):
        items = tuple(sorted((d, c) for d, c in numer.items() if c))
        return cls(items, nvars)

    def as_dict(self) -> dict:
        return dict(self.numerator)

    @property
    def is_zero(self):
        return not self.numerator

    def __add__(self, other):
        self._check(other)
        return HilbertSeries.from_dict(
            _laurent_add(self.as_dict(), other.as_dict()), self.nvars
        )

    def __sub__(self, other):
        self._check(other)
        return HilbertSeries.from_dict(
            _laurent_add(self.as_dict(), other.as_dict(), -1), self.nvars
        )

    def shift(self, d: int):
        """Series of the module twisted so degrees move up by d."""
        return HilbertSeries.from_dict(_laurent_shift(self.as_dict(), d), self.nvars)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("Hilbert series over different ambient rings")

    def coefficient(self, degree: int) -> int:
        """Dimension of the graded piece in the given degree."""
        from math import comb

        total = 0
        for d, c in self.numerator:
            k = degree - d
            if k >= 0:
                total += c * comb(self.nvars - 1 + k, k)
        return total

    def values(self, lo: int, hi: int):
        return [self.coefficient(d) for d in range(lo, hi + 1)]

    def is_free_combination_of(self, ring_numerator: dict):
        """Quotient by the ring's numerator when it divides exactly, else None.

        A Z[t,1/t] quotient exhibits the series as an integer combination of
        shifted free-module series, the stable-equivalence signature.
        """
        if self.is_zero:
            return {}
        return laurent_div_exact(self.as_dict(), ring_numerator)

    def __str__(self):
        if self.is_zero:
            return "0"
        return f"({laurent_str(self.as_dict())})/(1-t)^{self.nvars}"


def vector_degree(v: FreeVector, coord_degrees):
    """Degree of a homogeneous vector of a graded free module."""
    degs = set()
    for p, d in zip(v.coords, coord_degrees):
        if not p.is_zero:
            degs.add(p.homogeneous_degree() + d)
    if not degs:
        raise ValueError("zero vector has no degree")
    if len(degs) > 1:
        raise ValueError(f"inhomogeneous vector: {v} over degrees {coord_degrees}")
    return degs.pop()


def minimal_vector_subset(sig, rank, vectors, degrees, caps: Caps = None):
    """Indices of a minimal generating subset of a graded span over S.

    Vectors are scanned by ascending degree; one is redundant exactly when
    the earlier accepted ones already span it (graded Nakayama).
    """
    order = sorted(
        range(len(vectors)), key=lambda i: (degrees[i], str(vectors[i]))
    )
    accepted = []
    span = None
    for i in order:
        if vectors[i].is_zero:
            continue
        if span is not None and span.contains(vectors[i]):
            continue
        accepted.append(i)
        span = Span(sig, rank, [vectors[j] for j in accepted], caps=caps)
    return sorted(accepted)


def ambient_betti_shifts(sig, gen_degrees, columns, caps: Caps = None):
    """Shift multisets of a graded free resolution over the ambient ring.

    Returns one degree tuple per homological step, starting with the given
    generator degrees.  Syzygy steps pick minimal generating subsets, which
    makes the walk terminate within the syzygy bound; the alternating sum
    of the shifts is independent of the resolution, so the series computed
    from it is canonical even when the input presentation is not minimal.
    """
    shifts = [tuple(gen_degrees)]
    current_rank = len(gen_degrees)
    current_degs = list(gen_degrees)
    vectors = [c for c in columns if not c.is_zero]
    degs = [vector_degree(c, current_degs) for c in vectors]
    steps = 0
    while vectors:
        steps += 1
        if steps > sig.nvars + 2:
            raise RuntimeError("ambient resolution exceeded the syzygy bound")
        chosen = minimal_vector_subset(sig, current_rank, vectors, degs, caps)
        vectors = [vectors[i] for i in chosen]
        degs = [degs[i] for i in chosen]
        if not vectors:
            break
        shifts.append(tuple(degs))
        span = Span(sig, current_rank, vectors, caps=caps)
        syz = [s for s in span.syzygies() if not s.is_zero]
        current_rank = len(vectors)
        current_degs = degs
        vectors = syz
        degs = [vector_degree(s, current_degs) for s in vectors]
    return shifts


def hilbert_series_of_presentation(sig, gen_degrees, columns, caps: Caps = None):
    """Alternating-shift Hilbert series of coker(columns) as an S-module."""
    if not gen_degrees:
        return HilbertSeries.from_dict({}, sig.nvars)
    shifts = ambient_betti_shifts(sig, gen_degrees, columns, caps)
    numer = {}
    sign = 1
    for step in shifts:
        for d in step:
            numer[d] = numer.get(d, 0) + sign
        sign = -sign
    return HilbertSeries.from_dict(numer, sig.nvars)
