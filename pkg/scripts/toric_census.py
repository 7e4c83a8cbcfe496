"""Invariants of all 18 toric Fano 3-folds and the E8 4-fold over each."""

from ltphodge.bases import Toric3
from ltphodge.catalog import E8_FAMILY, fourfold_hodge
from ltphodge.toric import FAN_IDS, IntersectionRing, anticanonical_degree, c1c2, load_fan, toric_hodge

if __name__ == "__main__":
    print(f"{'id':>3} {'rays':>4} {'h11':>4} {'c1^3':>5} {'ring':>5} {'c1c2':>5} {'E8 h31':>7} {'E8 chi':>7}  name")
    for i in FAN_IDS:
        f = load_fan(i)
        h = fourfold_hodge(E8_FAMILY, Toric3(f, i))
        print(
            f"{i:>3} {len(f.rays):>4} {toric_hodge(f)[1, 1]:>4} {anticanonical_degree(f):>5} "
            f"{IntersectionRing(f).anticanonical_cube():>5} {c1c2(f):>5} {h.h31:>7} {h.chi:>7}  {f.name}"
        )
