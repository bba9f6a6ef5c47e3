#!/usr/bin/env python3
"""Experiment harness: reflexive tensor products with both factors bad.

Open question this explores, and does NOT answer: over a hypersurface
ring, when M (x) N is reflexive and every high Tor is torsion, must M or
N be reflexive?  The two-variable counterexample machinery fails to
produce one (there the tensor is reflexive but N is reflexive too, or a
factor stops being torsion-compatible), so this script simply enumerates
small cyclic-module pairs over chosen hypersurfaces and reports any pair
where the hypotheses hold and *neither* factor is reflexive.  Finding
none is evidence of nothing; finding one would be worth a careful look
by hand.

Usage:
    python scripts/open_question_search.py [--vars x y] [--lead x*y]
        [--max-degree 2] [--window 4]
"""

import argparse
import itertools
import sys

from reflextor import QQ, make_ring
from reflextor.homology import is_torsion, tor
from reflextor.modules import cyclic, minimize, module_is_zero, tensor
from reflextor.parse import parse_poly
from reflextor.serre import is_reflexive


def monomial_texts(variables, max_degree):
    """All monomials in the variables up to the degree bound, as strings."""
    out = []
    for total in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(variables, total):
            out.append("*".join(combo))
    return out


def build_catalog(ring, max_degree):
    texts = monomial_texts(ring.sig.variables, max_degree)
    catalog = []
    for t in texts:
        m = cyclic(ring, (parse_poly(t, ring.sig),))
        reduced = minimize(m)
        if reduced.num_generators and not module_is_zero(reduced):
            catalog.append((t, reduced))
    return catalog


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--vars", nargs="+", default=["x", "y"])
    parser.add_argument("--lead", default="x*y",
                        help="defining polynomial of the hypersurface")
    parser.add_argument("--max-degree", type=int, default=2)
    parser.add_argument("--window", type=int, default=4)
    args = parser.parse_args(argv)

    ring = make_ring(QQ, args.vars, [args.lead])
    if not ring.hypersurface:
        print("warning: defining ideal is not principal after reduction")
    catalog = build_catalog(ring, args.max_degree)
    names = [t for t, _ in catalog]
    print(f"ring {ring}, catalog of {len(catalog)} cyclic modules: {names}")

    candidates = []
    examined = 0
    for (name_m, m), (name_n, n) in itertools.combinations_with_replacement(
        catalog, 2
    ):
        examined += 1
        t = minimize(tensor(m, n))
        if module_is_zero(t):
            continue
        if not is_reflexive(t).reflexive:
            continue
        torsion_ok = all(
            is_torsion(tor(m, n, i).module) for i in range(1, args.window + 1)
        )
        if not torsion_ok:
            continue
        m_ref = is_reflexive(m).reflexive
        n_ref = is_reflexive(n).reflexive
        status = f"M reflexive={m_ref}, N reflexive={n_ref}"
        print(f"  hypothesis pair ({name_m}, {name_n}): tensor reflexive, "
              f"Tor torsion through {args.window}; {status}")
        if not m_ref and not n_ref:
            candidates.append((name_m, name_n))

    print(f"examined {examined} unordered pairs")
    if candidates:
        print("PAIRS WHERE NEITHER FACTOR IS REFLEXIVE (inspect by hand):")
        for pair in candidates:
            print(f"  {pair}")
    else:
        print("no pair found with both factors non-reflexive; "
              "the question stays open either way")
    return 0


if __name__ == "__main__":
    sys.exit(main())
