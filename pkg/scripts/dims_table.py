"""Tabulate cohomological-dimension answers over a grid of surfaces.

Useful for sanity-checking the oracle by eye: each row is a surface, each
column a (group, quantity) pair, and bounds are rendered with a leading "<=".
"""
import argparse

from surfgroups.dims import SurfaceSpec, dim_query

COLUMNS = [("braid", "cd"), ("braid", "vcd"), ("mcg", "vcd")]


def cell(surface: SurfaceSpec, group: str, quantity: str) -> str:
    ans = dim_query(surface, group, quantity)
    if ans.kind == "exact":
        return str(ans.value)
    if ans.kind == "bound":
        return f"<={ans.value}"
    return "-"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-genus", type=int, default=5)
    parser.add_argument("--max-punctures", type=int, default=6)
    args = parser.parse_args()

    header = "surface".ljust(22) + "".join(f"{g}/{q}".rjust(12) for g, q in COLUMNS)
    print(header)
    for kind, g0 in (("orientable", 0), ("nonorientable", 1)):
        for g in range(g0, args.max_genus + 1):
            for k in range(0, args.max_punctures + 1):
                s = SurfaceSpec(kind, g, k)
                label = f"{kind[0].upper()}{g} k={k}".ljust(22)
                print(label + "".join(cell(s, gr, q).rjust(12) for gr, q in COLUMNS))


if __name__ == "__main__":
    main()
