"""Command line interface: ``ltphodge <subcommand> [options]``.

Exit status is 0 when every requested verdict holds or is a designated
counterexample failing as documented, 1 otherwise, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .bases import RationalSurface, parse_base
from .catalog import REGISTRY, SMOOTH_KINDS, get_family
from .ltp import CAVEAT_TEXT, LtpVerdict, counterexample_verdicts, table1_sweep, table3_render, verdict
from .toric import FAN_IDS, IntersectionRing, anticanonical_degree, c1c2, load_fan, toric_hodge, validate_fan, weierstrass_anticanonical_h0

FORMATS = ("text", "json", "csv")


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_verdicts(verdicts: list[LtpVerdict], fmt: str) -> str:
    if fmt == "json":
        return _json([v.to_json() for v in verdicts])
    if fmt == "csv":
        rows = [["family", "base", "dim", "p", "q", "lhs", "rhs", "source", "holds", "expected_failure"]]
        for v in verdicts:
            for c in v.compared:
                rows.append([v.family_id, v.base, v.total_dim, c.p, c.q, c.lhs, c.rhs, c.source, v.holds, v.expected_failure])
        return _csv(rows)
    out = []
    for v in verdicts:
        status = "holds" if v.holds else "fails"
        if v.expected_failure:
            status += " (expected counterexample)"
        out.append(f"{v.family_id} over {v.base} (dim {v.total_dim}): LTP {status}")
        for c in v.compared:
            rel = "=" if c.equal else "!="
            out.append(f"  h^{{{c.p},{c.q}}}: {c.lhs} {rel} {c.rhs}  [{c.source}]")
        for cav in v.caveats:
            out.append(f"  caveat {cav}: {CAVEAT_TEXT.get(cav, '')}")
    return "\n".join(out) + "\n"


def cmd_families(args) -> tuple[str, int]:
    fams = [REGISTRY[k] for k in REGISTRY]
    if args.format == "json":
        return _json([f.to_json() for f in fams]), 0
    rows = [["id", "kind", "gauge", "rank", "n", "gamma", "mw_rank", "mw_torsion", "cy"]]
    for f in fams:
        d = f.to_json()
        rows.append([d["id"], d["kind"], d["gauge"] or "", d["rank"] or "", d["n"], d["gamma"], d["mw_rank"], d["mw_torsion"], d["cy"]])
    if args.format == "csv":
        return _csv(rows), 0
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n", 0


def _status(verdicts) -> int:
    return 0 if all(v.as_documented for v in verdicts) else 1


def cmd_verify(args) -> tuple[str, int]:
    fam = get_family(args.family)
    base = parse_base(args.base) if args.base else None
    v = [verdict(fam, base)]
    return render_verdicts(v, args.format), _status(v)


def cmd_sweep(args) -> tuple[str, int]:
    base = parse_base(args.base)
    if args.set == "table1":
        if not isinstance(base, RationalSurface):
            raise ValueError("the Tate-model sweep runs over rational surfaces")
        vs = table1_sweep(base)
    else:
        vs = [verdict(get_family(k.value), base) for k in SMOOTH_KINDS]
    return render_verdicts(vs, args.format), _status(vs)


def cmd_table3(args) -> tuple[str, int]:
    cells = table3_render()
    if args.format == "json":
        return _json([c.__dict__ for c in cells]), 0
    rows = [["kind", "fan_id", "base", "h11", "h31", "h22"]]
    rows += [[c.kind, c.fan_id, c.base_name, c.h11, c.h31, c.h22] for c in cells]
    if args.format == "csv":
        return _csv(rows), 0
    lines = [f"{'':6}" + "".join(f"{c.base_name:>22}" for c in cells[:4])]
    for kind in ("e8", "e7", "e6"):
        row = [c for c in cells if c.kind == kind]
        for label, attr in (("h11", "h11"), ("h31", "h31"), ("h22", "h22")):
            head = kind.upper() if attr == "h11" else ""
            lines.append(f"{head:4}{label:>4}" + "".join(f"{getattr(c, attr):>22}" for c in row))
    return "\n".join(line.rstrip() for line in lines) + "\n", 0


def cmd_toric(args) -> tuple[str, int]:
    fan = load_fan(args.fan_id)
    if args.action == "show":
        rep = validate_fan(fan)
        data = {**fan.to_json(), "id": args.fan_id, "valid": rep.valid}
        if args.format == "json":
            return _json(data), 0
        lines = [f"({args.fan_id}) {fan.name}: {len(fan.rays)} rays, {len(fan.max_cones)} maximal cones, valid={rep.valid}"]
        lines += [f"  ray {i}: {list(r)}" for i, r in enumerate(fan.rays)]
        lines += [f"  cone {list(c)}" for c in fan.max_cones]
        return "\n".join(lines) + "\n", 0
    if args.action == "degree":
        deg, oracle = anticanonical_degree(fan), IntersectionRing(fan).anticanonical_cube()
        data = {"id": args.fan_id, "c1_cubed": deg, "intersection_oracle": oracle, "c1c2": c1c2(fan)}
    elif args.action == "hodge":
        d = toric_hodge(fan)
        if args.format == "text":
            return d.pretty() + "\n", 0
        data = {"id": args.fan_id, **d.to_json()}
    else:
        h0 = weierstrass_anticanonical_h0(fan)
        data = {"id": args.fan_id, "h0_anticanonical_Z": h0, "h0_normal_bundle_W": h0 - 1}
    if args.format == "json":
        return _json(data), 0
    if args.format == "csv":
        return _csv([list(data), list(data.values())]), 0
    return "\n".join(f"{k}: {v}" for k, v in data.items()) + "\n", 0


def cmd_counterexamples(args) -> tuple[str, int]:
    vs = counterexample_verdicts()
    return render_verdicts(vs, args.format), _status(vs)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", "-o", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="ltphodge", description="Hodge numbers and LTP verdicts for elliptic fibrations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("families", parents=[common], help="list catalog families")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify", parents=[common], help="LTP verdict for one family over one base")
    p.add_argument("--family", required=True)
    p.add_argument("--base", help="base descriptor, e.g. P2, rational:K2=5, toric:7, P2xP1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="verdicts for a family set over one base")
    p.add_argument("--base", default="rational:K2=9")
    p.add_argument("--set", choices=("table1", "smooth"), default="table1")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table3", parents=[common], help="Hodge numbers of E8/E7/E6 4-folds over four toric bases")
    p.set_defaults(func=cmd_table3)

    p = sub.add_parser("toric", parents=[common], help="inspect the toric Fano 3-fold fans")
    p.add_argument("action", choices=("show", "degree", "hodge", "h0"))
    p.add_argument("fan_id", type=int, choices=FAN_IDS, metavar="ID")
    p.set_defaults(func=cmd_toric)

    p = sub.add_parser("counterexamples", parents=[common], help="families where LTP is expected to fail")
    p.set_defaults(func=cmd_counterexamples)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = args.func(args)
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        parser.error(str(msg))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
