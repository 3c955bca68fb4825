"""Command-line front end.

    fanocalc diamond <variety> [--format text|json] [--full]
    fanocalc nearby-cycle [--format text|json]
    fanocalc verify <suite> [--seed N] [--degree-cap N] [--pair-cap N] [--format text|json]

Exit status: 0 when every check passes, 1 on a failed check, 2 on usage errors.
The JSON output carries everything the text renderer needs, so
``render_text(json.loads(json_output))`` reproduces the text output exactly.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import degeneration as dg
from . import hodge_ring as hr
from .suites import DEFAULT_SEED, FAIL, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VARIETIES = {
    "p8": ("projective space P^8", 8, lambda: hr.hd_projective_space(8)),
    "k3": ("K3 surface", 2, hr.hd_k3),
    "hilb2": ("Hilbert square of a K3 surface", 4, hr.hd_hilb2_k3),
    "cubic4": ("cubic fourfold", 4, hr.hd_cubic_fourfold),
    "sigma": ("Sigma, the flop of Bl_S P^8", 8, hr.hd_sigma),
    "q4y": ("quadric fourfold bundle Q4/Y", 8, hr.hd_q4_over_y),
    "q3y": ("quadric threefold bundle Q3/Y", 7, hr.hd_q3_over_y),
    "fano": ("Fano eightfold F (nearby fibre)", 8, dg.hd_fano_eightfold),
}


def parse_variety(tag: str) -> tuple[str, str, int, hr.HodgePolynomial]:
    if tag.startswith("quadric:"):
        try:
            n = int(tag.split(":", 1)[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad quadric dimension in {tag!r}") from None
        if n < 0:
            raise argparse.ArgumentTypeError("quadric dimension must be nonnegative")
        return tag, f"smooth quadric of dimension {n}", n, hr.hd_quadric(n)
    if tag not in VARIETIES:
        choices = ", ".join(list(VARIETIES) + ["quadric:N"])
        raise argparse.ArgumentTypeError(f"unknown variety {tag!r} (choose from {choices})")
    name, dim, build = VARIETIES[tag]
    return tag, name, dim, build()


# Reports ---------------------------------------------------------------------

def diamond_report(tag: str, name: str, dim: int, cls: hr.HodgePolynomial, full: bool) -> dict:
    d = hr.to_diamond(cls, dim)
    report = {
        "command": "diamond",
        "variety": tag,
        "name": name,
        "dimension": dim,
        "class": str(cls),
        "rows": [{"degree": k, "entries": d.row(k)} for k in range(dim - dim % 2, -1, -2)],
        "odd_cohomology_zero": d.odd_cohomology_vanishes(),
        "checks": [],
    }
    if full:
        report["grid"] = [list(r) for r in d.entries]
    return report


def nearby_cycle_report() -> dict:
    fibre = dg.sigma_q4y_fibre()
    cs = dg.clemens_schmid(fibre)
    limit = dg.limit_diamond(cs, 8)
    return {
        "command": "nearby-cycle",
        "components": {
            "X1 = Sigma": str(hr.hd_sigma()),
            "X2 = Q4/Y": str(hr.hd_q4_over_y()),
            "X1 n X2 = Q3/Y": str(hr.hd_q3_over_y()),
        },
        "nearby_cycle": str(cs.limit_class),
        "central_cohomology": [cs.central_cohomology[k] for k in range(17)],
        "weight_filtration_trivial": cs.weight_filtration_trivial,
        "monodromy_zero": cs.monodromy_zero,
        "rows": [{"degree": k, "entries": limit.row(k)} for k in range(8, -1, -2)],
        "checks": [],
    }


def verify_report(suites: list[str], seed: int, degree_cap: int, pair_cap: int) -> dict:
    checks = []
    for name in suites:
        for c in run_suite(name, seed, degree_cap, pair_cap):
            checks.append({"suite": name, **c.to_dict()})
    return {"command": "verify", "suites": suites, "seed": seed, "checks": checks}


def _rows_text(rows: list[dict]) -> list[str]:
    if not rows:
        return []
    width = max(len(str(v)) for r in rows for v in r["entries"]) + 1
    longest = max(len(r["entries"]) for r in rows)
    lines = []
    for r in rows:
        cells = "".join(str(v).rjust(width) for v in r["entries"])
        pad = " " * ((longest - len(r["entries"])) * width // 2)
        lines.append(f"H^{r['degree']:<3}|{pad}{cells}")
    return lines


def render_text(report: dict) -> str:
    lines: list[str] = []
    cmd = report["command"]
    if cmd == "diamond":
        lines.append(f"{report['name']} [{report['variety']}], dimension {report['dimension']}")
        lines.append(f"HD = {report['class']}")
        lines.extend(_rows_text(report["rows"]))
        lines.append("odd cohomology: " + ("zero" if report["odd_cohomology_zero"] else "NONZERO"))
        if "grid" in report:
            lines.append("full grid h^{p,q} (rows p, columns q):")
            width = max(len(str(v)) for r in report["grid"] for v in r) + 1
            for p, row in enumerate(report["grid"]):
                lines.append(f"p={p:<2}|" + "".join(str(v).rjust(width) for v in row))
    elif cmd == "nearby-cycle":
        for label, cls in report["components"].items():
            lines.append(f"[{label}] = {cls}")
        lines.append(f"psi = [X1] + [X2] - (1 + uv)[X1 n X2] = {report['nearby_cycle']}")
        lines.append("dim H^k(X0), k = 0..16: " + " ".join(map(str, report["central_cohomology"])))
        lines.append(f"weight_filtration_trivial: {str(report['weight_filtration_trivial']).lower()}")
        lines.append(f"monodromy_zero: {str(report['monodromy_zero']).lower()}")
        lines.append("limit Hodge diamond:")
        lines.extend(_rows_text(report["rows"]))
    elif cmd == "verify":
        current = None
        for c in report["checks"]:
            if c["suite"] != current:
                current = c["suite"]
                lines.append(f"== {current} ==")
            detail = f" ({c['detail']})" if c["detail"] else ""
            lines.append(f"[{c['status'].upper()}] {c['name']}{detail}")
        failed = sum(c["status"] == FAIL for c in report["checks"])
        lines.append(f"{len(report['checks']) - failed}/{len(report['checks'])} checks without failure")
    return "\n".join(lines) + "\n"


def exit_status(report: dict) -> int:
    return EXIT_FAIL if any(c["status"] == FAIL for c in report.get("checks", [])) else EXIT_OK


def emit(report: dict, fmt: str) -> int:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return exit_status(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fanocalc", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diamond", help="print the Hodge diamond of a variety")
    p.add_argument("variety", type=parse_variety,
                   help="p8 | k3 | hilb2 | cubic4 | quadric:N | sigma | q4y | q3y | fano")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--full", action="store_true", help="also print the complete (p,q) grid")

    p = sub.add_parser("nearby-cycle", help="motivic nearby cycle of the central fibre")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--degree-cap", type=int, default=8)
    p.add_argument("--pair-cap", type=int, default=10000)
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "diamond":
        report = diamond_report(*args.variety, full=args.full)
    elif args.command == "nearby-cycle":
        report = nearby_cycle_report()
    else:
        if args.degree_cap <= 0 or args.pair_cap <= 0:
            sys.stderr.write("fanocalc: caps must be positive\n")
            return EXIT_USAGE
        suites = list(SUITES) if args.suite == "all" else [args.suite]
        report = verify_report(suites, args.seed, args.degree_cap, args.pair_cap)
    return emit(report, args.format)


if __name__ == "__main__":
    sys.exit(main())
