#!/usr/bin/env python
"""
Run the self-verification battery: every closed form in the package is
checked against an independent numeric route (cyclic Jacobi spectra,
partial traces of exact ground kets, measurement-grid searches for the
discord and Bell optima).
"""
import argparse
import sys

from qrgflow import run_all


def parse_args():
    parser = argparse.ArgumentParser()
    parser.add_argument("--oracle-states", type=int, default=200,
                        help="states per brute-force comparison (the slow part)")
    parser.add_argument("--random-states", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=42)
    return parser.parse_args()


def main():
    args = parse_args()
    results = run_all(oracle_states=args.oracle_states,
                      random_states=args.random_states, seed=args.seed)
    for res in results:
        print(f"{'PASS' if res.ok else 'FAIL'} {res.name} — {res.detail}")
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
