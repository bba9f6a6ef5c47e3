#!/usr/bin/env python3
"""Run the built-in worked-example replay and print the side-by-side table.

Equivalent to `reflextor paper-suite`; kept as a script so the suite can
be driven without installing the console entry point.
"""

import sys

from reflextor.paper_suite import paper_suite, paper_suite_text


def main():
    report = paper_suite()
    sys.stdout.write(paper_suite_text(report))
    return report["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
