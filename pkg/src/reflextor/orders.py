"""Monomial orders on exponent tuples.

Monomials are plain tuples of nonnegative ints, one slot per ambient
variable.  Every order here is a total, multiplicative well-order, exposed
through a sort key so that bigger key means bigger monomial.
"""

from dataclasses import dataclass

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class MonomialOrder:
    kind: str          # "grevlex" | "lex" | "elim"
    block: int = 0     # for "elim": the first `block` variables dominate

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order kind: {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a positive block size")


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination(k: int) -> MonomialOrder:
    """Order making the first k variables infinitely larger than the rest."""
    return MonomialOrder("elim", k)


def degree(m) -> int:
    return sum(m)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b; caller must ensure divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def sort_key(order: MonomialOrder, m):
    """Key with key(a) < key(b) iff a < b in the order."""
    if order.kind == "grevlex":
        return _grevlex_key(m)
    if order.kind == "lex":
        return m
    k = order.block
    return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))


def compare(order: MonomialOrder, m1, m2) -> int:
    """Return LT, EQ or GT for m1 against m2."""
    if len(m1) != len(m2):
        raise ValueError(f"monomial length mismatch: {len(m1)} vs {len(m2)}")
    k1, k2 = sort_key(order, m1), sort_key(order, m2)
    if k1 < k2:
        return LT
    if k1 > k2:
        return GT
    return EQ
