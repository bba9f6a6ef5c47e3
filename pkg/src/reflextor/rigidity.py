"""Exhaustive Tor tables over a module catalog, hunting rigidity failures.

A pair witnesses a 1-rigidity violation when Tor_1 vanishes but Tor_2
does not, and a 2-rigidity violation when Tor_1 and Tor_2 vanish but
Tor_3 does not.  Tor is symmetric in its arguments, so each unordered
pair is examined once and a hit disqualifies both members.
"""

from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .homology import tor


@dataclass
class RigidityViolation:
    left: int                  # catalog indices
    right: int
    kind: str                  # "1-rigidity" | "2-rigidity"
    tor_pattern: tuple         # is_zero flags for i = 1..window

    def describe(self, names=None):
        l = names[self.left] if names else f"#{self.left}"
        r = names[self.right] if names else f"#{self.right}"
        return f"{self.kind} violation on ({l}, {r}): Tor zero-pattern {self.tor_pattern}"


def rigidity_search(ring, catalog, window: int = 3, caps: Caps = None):
    """All rigidity-violating unordered pairs from the catalog."""
    caps = caps or DEFAULT_CAPS.fresh()
    if window < 2:
        raise ValueError("a rigidity window needs at least Tor_1 and Tor_2")
    for m in catalog:
        if m.ring != ring:
            raise ValueError("catalog module over a different ring")
    violations = []
    for a in range(len(catalog)):
        for b in range(a, len(catalog)):
            pattern = tuple(
                tor(catalog[a], catalog[b], i, caps, want_module=False).is_zero
                for i in range(1, window + 1)
            )
            if pattern[0] and not pattern[1]:
                violations.append(RigidityViolation(a, b, "1-rigidity", pattern))
            elif window >= 3 and pattern[0] and pattern[1] and not pattern[2]:
                violations.append(RigidityViolation(a, b, "2-rigidity", pattern))
    return violations
