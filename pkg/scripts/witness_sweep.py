"""Search for failing instances over a grid of (alpha, beta) with beta != alpha - 1.

Usage: python scripts/witness_sweep.py [--max-alpha 4] [--max-beta 4] [--budget 100]
"""

import argparse

from rulingset.ruling import find_beta_mismatch_witness


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-alpha", type=int, default=4)
    ap.add_argument("--max-beta", type=int, default=4)
    ap.add_argument("--budget", type=int, default=100)
    ap.add_argument("--families", default="path,cycle,random")
    args = ap.parse_args()
    families = args.families.split(",")

    for alpha in range(2, args.max_alpha + 1):
        for beta in range(1, args.max_beta + 1):
            if beta == alpha - 1:
                print(f"alpha={alpha} beta={beta}: supported case, skipped")
                continue
            w = find_beta_mismatch_witness(families, alpha, beta, args.budget)
            if w is None:
                print(f"alpha={alpha} beta={beta}: none within {args.budget}")
                continue
            why = f"close pairs {w.check.close_pairs}" if w.check.close_pairs else f"uncovered {w.check.uncovered}"
            print(f"alpha={alpha} beta={beta}: {w.instance} via {w.pipeline}, set {sorted(w.set)}, {why}")


if __name__ == "__main__":
    main()
