"""Print a relator-by-relator report for every shipped presentation check,
plus a randomized multiplicativity fuzz of the Klein-to-braid embedding.
"""
import argparse
import random

from surfgroups import KleinElement, phi1, verify_all_presentations
from surfgroups.embeddings import verify_phi1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fuzz", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    reports = dict(verify_all_presentations())
    reports["embedding"] = verify_phi1()
    for name, report in reports.items():
        print(f"[{name}] {'passed' if report.passed else 'FAILED'}")
        for relator, ok in report.results:
            print(f"    {'ok  ' if ok else 'FAIL'}  {relator}")

    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.fuzz):
        u = KleinElement(rng.randint(-20, 20), rng.randint(-20, 20))
        v = KleinElement(rng.randint(-20, 20), rng.randint(-20, 20))
        if phi1(u * v) != phi1(u) * phi1(v):
            failures += 1
    print(f"[fuzz] {args.fuzz} samples, seed {args.seed}, {failures} failures")


if __name__ == "__main__":
    main()
