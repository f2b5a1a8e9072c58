"""JSON reading and writing for complexes, polytopes and families.

Formats::

    complex   {"facets": [[1, 2, 3], ...]}
    relative  {"delta": <complex>, "gamma": <complex> | null}     (null: Γ void)
    polytope  {"dim": d, "vertices": [["1/2", "-3", "0"], ...]}
    family    {"dim": d, "members": [<polytope>, ...]}

Rational coordinates are written as "p/q" strings (integers as "p").
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .complexes import MalformedFaceError, RelativeComplex, SimplicialComplex, VOID, build_complex
from .geometry import PolytopeFamily, RationalPolytope, convex_hull


class InputError(ValueError):
    """Malformed input; the message names the offending location."""


def _line_of(text: str, needle: str) -> int | None:
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


class _Doc:
    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source
        try:
            self.data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None

    def fail(self, path: str, msg: str, key: str | None = None) -> InputError:
        line = _line_of(self.text, f'"{key}"') if key else None
        where = f"{self.source}:{line}" if line else self.source
        return InputError(f"{where}: {path}: {msg}")


def _complex(doc: _Doc, obj: Any, path: str) -> SimplicialComplex:
    if not isinstance(obj, dict) or "facets" not in obj:
        raise doc.fail(path, 'expected an object with a "facets" list', "facets")
    facets = obj["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise doc.fail(path + ".facets", "expected a list of integer lists", "facets")
    try:
        return build_complex(facets)
    except MalformedFaceError as exc:
        raise doc.fail(path + ".facets", str(exc), "facets") from None


def _relative(doc: _Doc, obj: Any, path: str) -> RelativeComplex:
    if isinstance(obj, dict) and "delta" in obj:
        delta = _complex(doc, obj["delta"], path + ".delta")
        g = obj.get("gamma")
        gamma = VOID if g is None else _complex(doc, g, path + ".gamma")
        try:
            return RelativeComplex(delta, gamma)
        except ValueError as exc:
            raise doc.fail(path, str(exc), "gamma") from None
    return RelativeComplex(_complex(doc, obj, path), VOID)


def _rational(doc: _Doc, x: Any, path: str) -> Fraction:
    if isinstance(x, bool):
        raise doc.fail(path, f"not a rational: {x!r}", "vertices")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise doc.fail(path, f"not an exact rational (use an integer or a 'p/q' string): {x!r}", "vertices")


def _polytope(doc: _Doc, obj: Any, path: str, dim: int | None = None) -> RationalPolytope:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise doc.fail(path, 'expected an object with "vertices"', "vertices")
    d = obj.get("dim", dim)
    verts = obj["vertices"]
    if not isinstance(verts, list) or not verts:
        raise doc.fail(path + ".vertices", "expected a nonempty list of points", "vertices")
    pts = []
    for i, v in enumerate(verts):
        if not isinstance(v, list):
            raise doc.fail(f"{path}.vertices[{i}]", "expected a coordinate list", "vertices")
        pts.append([_rational(doc, x, f"{path}.vertices[{i}]") for x in v])
    if d is None:
        d = len(pts[0])
    if not isinstance(d, int) or any(len(p) != d for p in pts):
        raise doc.fail(path, f"every vertex needs exactly dim={d} coordinates", "dim")
    return convex_hull(pts)


def _family(doc: _Doc, obj: Any, path: str) -> PolytopeFamily:
    if not isinstance(obj, dict) or "members" not in obj:
        raise doc.fail(path, 'expected an object with "members"', "members")
    d = obj.get("dim")
    members = obj["members"]
    if not isinstance(members, list) or not members:
        raise doc.fail(path + ".members", "expected a nonempty list of polytopes", "members")
    polys = tuple(_polytope(doc, p, f"{path}.members[{i}]", d) for i, p in enumerate(members))
    if d is None:
        d = polys[0].dim_ambient
    try:
        return PolytopeFamily(polys, d)
    except ValueError as exc:
        raise doc.fail(path, str(exc), "members") from None


_KINDS = {"complex": _complex, "relative": _relative, "polytope": _polytope, "family": _family}


def parse_text(text: str, kind: str, source: str = "<input>"):
    if kind not in _KINDS:
        raise ValueError(f"unknown input kind {kind!r}")
    doc = _Doc(text, source)
    return _KINDS[kind](doc, doc.data, "$")


def parse_input(path: str | Path, kind: str):
    """Read and validate a JSON file of the given kind."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"{p}: cannot read: {exc.strerror}") from None
    return parse_text(text, kind, str(p))


# -- serialization -----------------------------------------------------------------


def rational_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def complex_to_json(c: SimplicialComplex) -> dict:
    return {"facets": [list(f) for f in c.facets]}


def relative_to_json(rc: RelativeComplex) -> dict:
    return {"delta": complex_to_json(rc.delta), "gamma": None if rc.gamma.is_void else complex_to_json(rc.gamma)}


def polytope_to_json(p: RationalPolytope) -> dict:
    return {"dim": p.dim_ambient, "vertices": [[rational_str(x) for x in v] for v in p.vertices]}


def family_to_json(f: PolytopeFamily) -> dict:
    return {"dim": f.d, "members": [polytope_to_json(p) for p in f.members]}


def dumps(obj: Any) -> str:
    """Canonical JSON text (sorted keys), so equal reports are byte-identical."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
