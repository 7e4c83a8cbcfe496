"""Regenerate the shipped fan JSON files from the ray lists of the 18 toric Fano 3-folds.

Maximal cones are the facets of the convex hull of the rays.  Entry (4) is
P(O + O(2)) over P^2, whose fan has the ray -e1-2e2-e3; the printed ray list
for (3) already describes P(O + O(1)) over P^2.
"""

import json
import sys
from pathlib import Path

from ltphodge.toric import face_fan, validate_fan

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def v(*terms):
    out = [0, 0, 0]
    for c, e in terms:
        for i in range(3):
            out[i] += c * e[i]
    return tuple(out)


def neg(e):
    return v((-1, e))


BASIS = [E1, E2, E3]

RAYS = {
    1: ("P3", BASIS + [v((-1, E1), (-1, E2), (-1, E3))]),
    2: ("P2xP1", BASIS + [v((-1, E1), (-1, E2)), neg(E3)]),
    3: ("P(O+O(1)) over P2", BASIS + [neg(E2), v((-1, E1), (-1, E2), (-1, E3))]),
    4: ("P(O+O(2)) over P2", BASIS + [neg(E2), v((-1, E1), (-2, E2), (-1, E3))]),
    5: ("toric Fano (5)", BASIS + [v((-1, E1), (-1, E2), (-1, E3)), v((-1, E1), (-1, E3))]),
    6: ("P1xP1xP1", BASIS + [neg(E1), neg(E2), neg(E3)]),
    7: ("toric Fano (7)", BASIS + [v((-1, E1), (-1, E3)), v((-1, E2), (-1, E3)), neg(E3)]),
    8: ("toric Fano (8)", BASIS + [v((-1, E1), (-1, E3)), v((1, E3), (-1, E2)), neg(E3)]),
    9: ("toric Fano (9)", BASIS + [neg(E2), v((1, E2), (-1, E1)), neg(E3)]),
    10: ("toric Fano (10)", BASIS + [v((-1, E1), (-1, E3)), v((1, E1), (-1, E2)), neg(E3)]),
    11: ("toric Fano (11)", BASIS + [v((1, E3), (-1, E2)), neg(E2), v((-1, E1), (-1, E2), (-1, E3))]),
    12: ("toric Fano (12)", BASIS + [v((1, E3), (-1, E2)), v((-1, E1), (-1, E3)), neg(E2)]),
    13: ("toric Fano (13)", BASIS + [v((1, E2), (-1, E1)), neg(E2), v((1, E1), (-1, E2)), neg(E3)]),
    14: ("toric Fano (14)", BASIS + [v((1, E2), (-1, E1)), neg(E2), v((1, E1), (-1, E2)), v((1, E1), (-1, E2), (-1, E3))]),
    15: ("toric Fano (15)", BASIS + [v((1, E2), (-1, E1)), neg(E2), v((1, E1), (-1, E2)), v((-1, E2), (-1, E3))]),
    16: ("toric Fano (16)", BASIS + [v((1, E2), (-1, E1)), neg(E2), v((1, E1), (-1, E2)), v((1, E1), (-1, E3))]),
    17: ("toric Fano (17)", BASIS + [neg(E1), neg(E2), neg(E3), v((1, E1), (-1, E2)), v((1, E2), (-1, E1))]),
    18: ("toric Fano (18)", BASIS + [v((1, E2), (-1, E1)), neg(E1), neg(E2), v((1, E1), (-1, E2)), v((-1, E1), (-1, E3))]),
}


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for fan_id, (name, rays) in RAYS.items():
        fan = face_fan(rays, name)
        report = validate_fan(fan)
        if not report:
            sys.exit(f"fan ({fan_id}) invalid: {report.reason}")
        (out / f"fan_{fan_id:02d}.json").write_text(json.dumps(fan.to_json()) + "\n")
        print(f"({fan_id}) {name}: {len(fan.rays)} rays, {len(fan.max_cones)} cones")


if __name__ == "__main__":
    default = Path(__file__).resolve().parents[1] / "src" / "ltphodge" / "data" / "fans"
    main(sys.argv[1] if len(sys.argv) > 1 else default)
