#!/usr/bin/env python3
"""Survey the splitting laws against the polynomial-factorization oracle.

Checks split_in_gamma against the factorization of x^3 - d over F_q for
every cube-free d and prime q in the given ranges (within the oracle's
applicability domain q coprime to 3b), and reports any disagreement.
"""

import argparse

from sympy import primerange

from purecubic.cubicfield import brute_split, classify, split_in_gamma


def cube_free(d):
    try:
        classify(d)
        return True
    except ValueError:
        return False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=50)
    ap.add_argument("--max-q", type=int, default=500)
    args = ap.parse_args()

    total = bad = 0
    for d in range(2, args.max_d):
        if not cube_free(d):
            continue
        F = classify(d)
        for q in primerange(2, args.max_q):
            if (3 * F.b) % q == 0:
                continue
            total += 1
            if split_in_gamma(F, q) != brute_split(F, q):
                bad += 1
                print(f"MISMATCH d={d} q={q}")
    print(f"{total} (d, q) pairs checked, {bad} mismatches")


if __name__ == "__main__":
    main()
