#!/usr/bin/env python3
"""Reproduce the desk-checkable columns of the 24-prime catalog.

For every catalogued prime: the congruence p = 1 mod 9, the nontrivial
rational 3-symbol, the ambiguous-class order, and (for primes within the
class-group budget) the 3-part structure and the resulting sextic-closure
type under the shipped u assignment.
"""

import argparse
import time

from purecubic.classgroup import (
    BudgetExhausted,
    ambiguous_order,
    class_group,
    decide_k_structure,
)
from purecubic.cli import TABLE1_PRIMES, load_u_assignments
from purecubic.cubicfield import classify
from purecubic.symbols import cubic_residue_rational


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=float, default=600.0,
                    help="total class-group budget in seconds")
    ap.add_argument("--classgroup-primes", type=int, nargs="*", default=[199],
                    help="primes whose class group to attempt (heavy)")
    args = ap.parse_args()

    u_map = load_u_assignments()
    deadline = time.monotonic() + args.budget
    print(f"{'p':>6} {'mod9':>4} {'(3/p)3':>7} {'|C^sigma|':>9} {'h3 type':>8} {'k type':>8}")
    for p in TABLE1_PRIMES:
        sym = cubic_residue_rational(3, p)
        amb = ambiguous_order(p)
        h3_type = "-"
        k_type = "-"
        if p in args.classgroup_primes and time.monotonic() < deadline:
            try:
                cg = class_group(classify(p), budget_seconds=deadline - time.monotonic())
                h3_type = str(cg.p3_type)
                u, _ = u_map[p]
                k_type = decide_k_structure(cg, u=u, p=p).k_type
            except BudgetExhausted:
                h3_type = "unverified"
        print(f"{p:>6} {p % 9:>4} {'zeta^%d' % sym.e:>7} {amb:>9} {h3_type:>8} {k_type:>8}")


if __name__ == "__main__":
    main()
