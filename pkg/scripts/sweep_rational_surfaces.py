"""Run every Tate model over rational surfaces with K^2 from -5 to 9 and summarize h^{1,1}."""

import argparse

from ltphodge.bases import RationalSurface
from ltphodge.catalog import TABLE1
from ltphodge.ltp import table1_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmin", type=int, default=-5)
    ap.add_argument("--kmax", type=int, default=9)
    args = ap.parse_args()

    ks = range(args.kmax, args.kmin - 1, -1)
    print("family    " + "".join(f"{k:>5}" for k in ks))
    grid = {k: table1_sweep(RationalSurface(k)) for k in ks}
    for i, fam in enumerate(TABLE1):
        cells = []
        for k in ks:
            v = grid[k][i]
            h11 = next(c.lhs for c in v.compared if (c.p, c.q) == (1, 1))
            cells.append(f"{h11:>4}{'' if v.holds else '!'}")
        print(f"{fam.id:<10}" + "".join(f"{c:>5}" for c in cells))
    total = sum(v.holds for vs in grid.values() for v in vs)
    print(f"\n{total}/{len(TABLE1) * len(ks)} verdicts hold")


if __name__ == "__main__":
    main()
