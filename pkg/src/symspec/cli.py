"""Command-line interface: ``symspec spectrum|splitting|verify|diagram``.

Every command builds one :class:`OutputRecord` and renders it as a table
(default), JSON or CSV.  ``SYMSPEC_FORMAT`` sets the default format.  Exit
codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import catalog, diagrams, eigenfun, spectrum
from .rootsys import Weight, build_root_system, weyl_dim

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


def rational(x) -> dict:
    """Exact ``p/q`` string plus a decimal rendering."""
    x = Fraction(x)
    return {"exact": str(x), "decimal": float(x)}


@dataclass
class OutputRecord:
    command: str
    space: str | None
    parameters: dict
    result: Any
    columns: list[str] = field(default_factory=list)  # table/csv column order

    def to_json_obj(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "command": self.command,
                "space": self.space, "parameters": self.parameters, "result": self.result}


def _cell(v) -> str:
    if isinstance(v, dict) and "exact" in v:
        return v["exact"]
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_cell(x) for x in v) + ")"
    return str(v)


def _rows(rec: OutputRecord) -> list[dict]:
    res = rec.result
    if isinstance(res, dict):
        for key in ("rows", "checks"):
            if key in res:
                return res[key]
    return []


def render(rec: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec.to_json_obj(), indent=2, sort_keys=True)
    rows = _rows(rec)
    cols = rec.columns or (list(rows[0]) if rows else [])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in cols])
        return buf.getvalue().rstrip("\n")
    out = []
    head = [f"{rec.command}" + (f" {rec.space}" if rec.space else "")]
    for k, v in rec.parameters.items():
        head.append(f"{k}={_cell(v)}")
    out.append("  ".join(head))
    if cols:
        table = [cols] + [[_cell(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
        for i, row in enumerate(table):
            out.append("  ".join(s.rjust(wd) for s, wd in zip(row, widths)))
            if i == 0:
                out.append("  ".join("-" * wd for wd in widths))
    if isinstance(rec.result, dict):
        for k, v in rec.result.items():
            if k in ("rows", "checks"):
                continue
            if isinstance(v, str) and "\n" in v:
                out.append(f"{k}:")
                out.extend(f"  {line}" for line in v.splitlines())
            elif k == "polynomials":
                out.append(f"{k}:")
                out.extend(f"  {t}" for t in v)
            else:
                out.append(f"{k}: {_cell(v)}")
    return "\n".join(out)


# --- space resolution ---------------------------------------------------------------

def resolve_space(space_id: str, n: int | None, catalog_file: str | None):
    if catalog_file:
        try:
            entries = catalog.load_catalog_file(catalog_file)
        except OSError as exc:
            raise UsageError(f"cannot read catalog {catalog_file}: {exc}") from None
        except catalog.DescriptorError as exc:
            raise UsageError(f"{catalog_file}: {exc}") from None
        if (space_id, n) in entries:
            return entries[(space_id, n)]
    try:
        return catalog.lookup(space_id, n)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --- commands ---------------------------------------------------------------------

def cmd_spectrum(space_id: str, n: int | None, k_max: int,
                 catalog_file: str | None = None) -> OutputRecord:
    if k_max < 0:
        raise UsageError(f"--k-max must be nonnegative, got {k_max}")
    d = resolve_space(space_id, n, catalog_file)
    rows = []
    if d.rank == 1:
        for line in spectrum.spectrum(d, k_max):
            rows.append({"k": line.k, "energy": rational(line.energy),
                         "eigenvalue": rational(line.eigenvalue),
                         "multiplicity_closed": line.multiplicity_closed,
                         "multiplicity_weyl": line.multiplicity,
                         "highest_weight": list(line.weight.coeffs)})
        cols = ["k", "energy", "eigenvalue", "multiplicity_closed", "multiplicity_weyl",
                "highest_weight"]
    else:
        for total in range(k_max + 1):
            for p in range(total, -1, -1):
                q = total - p
                lam = spectrum.su3_family_eigenvalue(p, q)
                w = d.highest_weight((p, q))
                rows.append({"k": [p, q], "energy": None,
                             "eigenvalue": rational(lam / d.sigma),
                             "eigenvalue_su3": rational(lam),
                             "multiplicity_closed": None,
                             "multiplicity_weyl": spectrum.multiplicity_weyl(d, (p, q)),
                             "highest_weight": list(w.coeffs)})
        cols = ["k", "eigenvalue", "eigenvalue_su3", "multiplicity_weyl", "highest_weight"]
    return OutputRecord("spectrum", d.id, {"n": d.n, "k_max": k_max},
                        {"rows": rows, "sigma": rational(d.sigma), "N_M": d.N_M}, cols)


def cmd_splitting(Q: int) -> OutputRecord:
    if Q < 1:
        raise UsageError(f"Q must be a positive integer, got {Q}")
    sol = spectrum.splitting_count(Q)
    a2 = build_root_system("A", 2)
    rows = []
    total = 0
    for k1, k2 in sol.pairs:
        # highest weight k1*a1 + k2*a2 has fundamental coordinates (2k1 - k2, 2k2 - k1);
        # a swap class {(k1, k2), (k2, k1)} is one real-irreducible summand
        dim = weyl_dim(a2, Weight.from_coeffs(a2, (2 * k1 - k2, 2 * k2 - k1)))
        class_dim = dim if k1 == k2 else 2 * dim
        total += class_dim
        rows.append({"k1": k1, "k2": k2, "weyl_dim": dim, "class_dim": class_dim,
                     "eigenvalue": rational(6 * Q - 6)})
    return OutputRecord("splitting", "SU3/SO3", {"Q": Q},
                        {"rows": rows, "count": sol.count,
                         "ordered_pairs": [list(p) for p in sol.ordered_pairs],
                         "total_dimension": total},
                        ["k1", "k2", "weyl_dim", "class_dim", "eigenvalue"])


def cmd_verify(space_id: str, n: int | None, level, seed: int = 0, emit: int = 0,
               catalog_file: str | None = None) -> OutputRecord:
    d = resolve_space(space_id, n, catalog_file)
    try:
        report = eigenfun.verify_family(d, level, seed=seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    checks = [{"check": c.name, "status": "pass" if c.passed else "FAIL",
               "residual": c.residual, "detail": c.detail} for c in report.checks]
    result = {"checks": checks, "passed": report.passed, "rank": report.rank,
              "expected_rank": report.expected_rank}
    if emit:
        gens = eigenfun.family_generators(d, level, emit, seed)
        result["polynomials"] = [g.to_text() for g in gens]
    params = {"n": d.n, "level": list(level) if isinstance(level, tuple) else level,
              "seed": seed}
    return OutputRecord("verify", d.id, params, result,
                        ["check", "status", "residual", "detail"])


def cmd_diagram(target: str, n: int | None = None, p: int | None = None,
                q: int | None = None, catalog_file: str | None = None) -> OutputRecord:
    if target == "grassmannian":
        if p is None or q is None:
            raise UsageError("diagram grassmannian needs --p and --q")
        try:
            sd = diagrams.grassmannian_satake(p, q)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        space, params = f"Gr({p},{p + q})", {"p": p, "q": q}
    else:
        d = resolve_space(target, n, catalog_file)
        sd, space, params = d.satake, d.id, {"n": d.n}
    painted = diagrams.satake_to_painted(sd)
    result = {"satake": diagrams.render(sd), "painted": diagrams.render(painted),
              "white_nodes": sd.white_nodes(), "arrows": [list(a) for a in sd.arrows],
              "b2": diagrams.second_betti(sd)}
    return OutputRecord("diagram", space, params, result)


# --- argument parsing -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get("SYMSPEC_FORMAT", "table")
    parser = _Parser(prog="symspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=FORMATS,
                        default=default_fmt if default_fmt in FORMATS else "table")
        sp.add_argument("--catalog", metavar="FILE", help="descriptor file overriding built-ins")

    sp = sub.add_parser("spectrum", help="energy levels, eigenvalues and multiplicities")
    sp.add_argument("space")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k-max", type=int, default=3)
    common(sp)

    sp = sub.add_parser("splitting", help="solutions of x^2 - xy + y^2 = Q")
    sp.add_argument("Q", type=int)
    common(sp)

    sp = sub.add_parser("verify", help="verify an explicit eigenfunction family")
    sp.add_argument("space")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--emit", type=int, default=0, metavar="COUNT",
                    help="also print COUNT generator polynomials in canonical text")
    common(sp)

    sp = sub.add_parser("diagram", help="Satake diagram, painted diagram and b2")
    sp.add_argument("target", help="space id or 'grassmannian'")
    sp.add_argument("--n", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    common(sp)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, OutputRecord | None, str]:
    args = build_parser().parse_args(argv)
    if args.command == "spectrum":
        rec = cmd_spectrum(args.space, args.n, args.k_max, args.catalog)
    elif args.command == "splitting":
        rec = cmd_splitting(args.Q)
    elif args.command == "verify":
        if args.space == "SU3/SO3":
            if args.p is None or args.q is None:
                raise UsageError("SU3/SO3 verification needs --p and --q")
            level = (args.p, args.q)
        else:
            if args.k is None:
                raise UsageError(f"{args.space} verification needs --k")
            level = args.k
        rec = cmd_verify(args.space, args.n, level, args.seed, args.emit, args.catalog)
    else:
        rec = cmd_diagram(args.target, args.n, args.p, args.q, args.catalog)
    code = EXIT_OK
    if rec.command == "verify" and not rec.result["passed"]:
        code = EXIT_VERIFY
    return code, rec, render(rec, args.format)


def main(argv: list[str] | None = None) -> int:
    try:
        code, _, text = run(argv)
    except UsageError as exc:
        print(f"symspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
