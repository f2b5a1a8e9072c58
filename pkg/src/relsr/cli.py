"""Command-line front end.

Every verb parses its input, calls the computation modules and prints one JSON
report (canonical key order, so identical inputs give byte-identical output).
Exit status: 0 on success, 1 when a mathematical assertion fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import bounds, complexes, face_algebra, geometry, homology, io
from .linalg import FieldSpec

SCHEMA_VERSION = 1
EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


class MathFailure(Exception):
    """A computed identity or bound did not hold; the report is still printed."""

    def __init__(self, report: dict):
        super().__init__("mathematical assertion violated")
        self.report = report


# -- verbs -------------------------------------------------------------------------


def _complex_stats(args) -> dict:
    rc = io.parse_input(args.file, "relative")
    fh = complexes.fh_vectors(rc)
    out = {"dim": int(rc.dim), "f": list(fh.f), "h": list(fh.h), "g": list(fh.g), "chi": fh.chi}
    if args.max_degree is not None:
        out["hilbert_numerator"] = list(complexes.hilbert_numerator(rc, fh.d, args.max_degree))
    return out


def _complex_check(args) -> dict:
    rc = io.parse_input(args.file, "relative")
    field = args.field
    b = homology.betti(rc, field)
    return {
        "field": str(field),
        "pure": rc.is_pure,
        "betti": list(b.reduced_betti),
        "cohen_macaulay": homology.is_cohen_macaulay(rc, field),
        "buchsbaum": homology.is_buchsbaum(rc, field),
        "eulerian": complexes.is_eulerian(rc),
    }


def _schenzel(args) -> dict:
    rc = io.parse_input(args.file, "relative")
    try:
        res = face_algebra.schenzel_decompose(rc, args.field, seed=args.seed)
    except face_algebra.SchenzelMismatchError as exc:
        raise MathFailure({"field": str(args.field), "ok": False, "detail": str(exc)}) from None
    return {"field": str(args.field), "h": list(res.h), "h_alg": list(res.h_alg),
            "h_top": list(res.h_top), "ok": res.ok}


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise io.InputError("missing required option(s): " + ", ".join("-" + n if len(n) == 1 else "--" + n
                                                                        for n in missing))


def _polytope_cyclic(args) -> dict:
    _need(args, "d", "n")
    p = geometry.cyclic_polytope(args.d, args.n)
    bd = p.boundary_complex()
    return {"d": args.d, "n": args.n, "polytope": io.polytope_to_json(p), "f": list(p.f_vector()),
            "h": list(complexes.fh_vectors(bd).h)}


def _mink_sum(args) -> dict:
    fam = io.parse_input(args.file, "family")
    ms = geometry.minkowski_sum(fam)
    generic = geometry.check_relative_general_position(fam, ms)
    out = {"d": fam.d, "vertex_counts": list(fam.vertex_counts), "f": list(ms.f_vector(fam.d)),
           "general_position": generic, "sum": io.polytope_to_json(ms.polytope)}
    if generic:
        out["mixed_f"] = list(geometry.mixed_faces(fam, ms))
    return out


def _mink_verify(args) -> dict:
    fam = io.parse_input(args.file, "family")
    if not geometry.check_relative_general_position(fam):
        raise io.InputError(f"{args.file}: family is not in relatively general position")
    table = bounds.bound_table(fam.vertex_counts, fam.d, args.mode)
    rep = bounds.verify_family(fam, table)
    out = {
        "mode": table.mode,
        "alpha": list(rep.alpha),
        "d": rep.d,
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail, "tight": list(c.tight)} for c in rep.checks],
        "mixed_nonface_dim": rep.mixed_nonface_dim,
        "ok": rep.ok,
    }
    if not rep.ok:
        raise MathFailure(out)
    return out


def _subset_key(S) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(S)) + "}"


def _bound(args) -> dict:
    _need(args, "alpha", "d")
    try:
        table = bounds.bound_table(args.alpha, args.d, args.mode)
    except bounds.InconsistentTableError as exc:
        raise MathFailure({"ok": False, "detail": str(exc)}) from None
    subsets = sorted(table.values, key=lambda S: (len(S), sorted(S)))
    return {
        "mode": table.mode,
        "alpha": list(table.alpha),
        "d": table.d,
        "h_bounds": list(table.h_bounds[table.full]),
        "nb_f": list(table.nb_f()),
        "mixed_f": list(bounds.mixed_bounds(table.alpha, table.d, table).f_mix),
        "table": {_subset_key(S): list(table.values[S]) for S in subsets},
    }


VERBS = {
    "complex-stats": (_complex_stats, True),
    "complex-check": (_complex_check, True),
    "schenzel": (_schenzel, True),
    "polytope-cyclic": (_polytope_cyclic, False),
    "mink-sum": (_mink_sum, True),
    "mink-verify": (_mink_verify, True),
    "bound": (_bound, False),
}


# -- rendering ---------------------------------------------------------------------


def _is_num_list(v: Any) -> bool:
    return isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v)


def _grid(rows: list[tuple[str, list]]) -> list[str]:
    width = max(len(r) for _, r in rows)
    label_w = max(len(k) for k, _ in rows)
    cells = [[str(x) for x in r] for _, r in rows]
    col_w = [max([len(str(j))] + [len(c[j]) for c in cells if j < len(c)]) for j in range(width)]
    lines = [" " * label_w + "  " + "  ".join(str(j).rjust(col_w[j]) for j in range(width))]
    for (k, _), c in zip(rows, cells):
        lines.append(k.ljust(label_w) + "  " + "  ".join(c[j].rjust(col_w[j]) if j < len(c) else " " * col_w[j]
                                                         for j in range(width)))
    return lines


def render(report: dict) -> str:
    """Human-readable aligned tables; every value of the JSON report appears."""
    lines: list[str] = []
    scalars = [(k, v) for k, v in sorted(report.items()) if not isinstance(v, (list, dict)) or v == []]
    vectors = [(k, v) for k, v in sorted(report.items()) if _is_num_list(v) and v]
    width = max([len(k) for k, _ in scalars] or [0])
    for k, v in scalars:
        lines.append(f"{k.ljust(width)}  {v}")
    if vectors:
        lines.append("")
        lines.extend(_grid(vectors))
    for k, v in sorted(report.items()):
        if isinstance(v, dict) and v and all(_is_num_list(x) for x in v.values()):
            lines.append("")
            lines.append(k + ":")
            lines.extend(_grid(list(v.items())))
        elif isinstance(v, dict) and v:
            lines.append("")
            lines.append(k + ":")
            lines.extend("  " + s for s in render(v).splitlines())
        elif isinstance(v, list) and v and all(isinstance(x, dict) and "ok" in x for x in v):
            lines.append("")
            name_w = max(len(str(x.get("name", ""))) for x in v)
            for x in v:
                extra = "  ".join(f"{a}={b}" for a, b in sorted(x.items()) if a not in ("name", "ok") and b not in ("", []))
                lines.append(f"{'PASS' if x['ok'] else 'FAIL'}  {str(x.get('name', '')).ljust(name_w)}  {extra}".rstrip())
        elif isinstance(v, list) and v and not _is_num_list(v):
            lines.append("")
            lines.append(f"{k}: {io.dumps(v)}")
    return "\n".join(lines)


# -- entry point -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit status 2, matching input errors
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_INPUT)


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _alpha(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("alpha entries must be positive")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec(0), help="q (default), f2 or fp:<p>")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--max-degree", type=int, default=None, help="degree cap for Hilbert series output")
    common.add_argument("--pretty", action="store_true", help="print aligned tables instead of JSON")
    common.add_argument("--mode", choices=("mubt", "nu"), default=None, help="bound table flavour")
    common.add_argument("--alpha", type=_alpha, default=None, help="vertex counts, e.g. 4,4,2")
    common.add_argument("-d", type=int, default=None, help="dimension")
    common.add_argument("-n", type=int, default=None, help="number of vertices")

    parser = _Parser(prog="relsr", description="Exact relative Stanley-Reisner computations.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, (_, takes_file) in VERBS.items():
        p = sub.add_parser(verb, parents=[common])
        if takes_file:
            p.add_argument("file", help="JSON input")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler, _ = VERBS[args.verb]
    status = EXIT_OK
    try:
        report = handler(args)
    except MathFailure as exc:
        report, status = exc.report, EXIT_MATH
    except (io.InputError, complexes.MalformedFaceError, complexes.VoidComplexError,
            complexes.NotSubcomplexError, geometry.DegenerateInputError, geometry.GeneralPositionError,
            homology.NotBuchsbaumError, homology.NotPureError) as exc:
        sys.stderr.write(f"relsr: error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"relsr: error: {exc}\n")
        return EXIT_INPUT
    report = {"schema": SCHEMA_VERSION, "verb": args.verb, "seed": args.seed, **report}
    out.write((render(report) if args.pretty else io.dumps(report)) + "\n")
    return status


def main(argv: Sequence[str] | None = None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
