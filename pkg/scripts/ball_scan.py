"""Scan the injectivity certificate over a range of ball radii.

Prints one line per radius with the number of distinct normal-form images
and the wall-clock time, so growth and cost are easy to eyeball.
"""
import argparse
import time

from surfgroups import certify_injectivity_ball


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-radius", type=int, default=32)
    parser.add_argument("--step", type=int, default=4)
    args = parser.parse_args()

    print(f"{'radius':>6}  {'distinct':>8}  {'status':>12}  {'seconds':>8}")
    for radius in range(0, args.max_radius + 1, args.step):
        start = time.perf_counter()
        report = certify_injectivity_ball(radius)
        elapsed = time.perf_counter() - start
        status = "ok" if report.passed else f"{len(report.collisions)} collisions"
        print(f"{radius:>6}  {report.count:>8}  {status:>12}  {elapsed:>8.3f}")


if __name__ == "__main__":
    main()
