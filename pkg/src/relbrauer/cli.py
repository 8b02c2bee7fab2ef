"""Command-line front end.

Three subcommands: `torsion` prints the rational torsion subgroup of a curve,
`pairing` computes the Brauer class paired with a single point, and `relbr`
maps a full generating set, reporting raw and normalized scalars, per-class
status, and (for quadratic m = 2) the exact group structure.  Output is
plain text or JSON; identical invocations produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .brauer import Cyclotomic, Quadratic, class_status
from .cocycle import NonConstantCocycleValue, RationalCocycle, brauer_pairing, relative_brauer
from .curve import INFINITY, CurvePoint, PointNotOnCurve, SingularCurve, WeierstrassCurve
from .exact import FactoringLimitExceeded
from .torsion import torsion_subgroup

RANK_WARNING = (
    "warning: --gens auto assumes the Mordell-Weil rank is 0; "
    "generators are taken from the torsion subgroup only"
)


class ParseError(Exception):
    """Malformed command-line literal, with an optional character position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position

    def __str__(self):
        base = super().__str__()
        if self.position is None:
            return base
        return f"{base} (at position {self.position})"


def _normalize(text: str) -> str:
    # U+2212 sneaks in when coefficients are pasted from typeset sources
    return text.replace("−", "-").strip()


def _rational_token(token: str, position: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid rational literal {token!r}", position=position) from None


def parse_curve(text: str) -> WeierstrassCurve:
    """Curve literal: five coefficients 'a1 a2 a3 a4 a6', or '[A,B]' for
    the short model y^2 = x^3 + A*x + B."""
    s = _normalize(text)
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError("unterminated short curve literal '[A,B]'", position=len(s) - 1)
        parts = s[1:-1].split(",")
        if len(parts) != 2:
            raise ParseError("short curve literal takes exactly two entries '[A,B]'", position=1)
        a4 = _rational_token(parts[0].strip(), 1)
        a6 = _rational_token(parts[1].strip(), 2 + len(parts[0]))
        return WeierstrassCurve(0, 0, 0, a4, a6)
    tokens = list(re.finditer(r"[^\s,]+", s))
    if len(tokens) != 5:
        raise ParseError(
            f"expected five coefficients 'a1 a2 a3 a4 a6', got {len(tokens)}", position=0
        )
    coeffs = [_rational_token(tok.group(), tok.start()) for tok in tokens]
    return WeierstrassCurve(*coeffs)


def _try_affine(text: str) -> CurvePoint | None:
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = text.split(",")
    if len(parts) != 2:
        return None
    try:
        return CurvePoint(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError):
        return None


def parse_point(text: str, curve: WeierstrassCurve) -> CurvePoint:
    """Point literal: 'O' for infinity or 'x,y'; a leading '-' negates the
    point when the literal coordinates themselves are not on the curve."""
    s = _normalize(text)
    if s == "O":
        return INFINITY
    literal = _try_affine(s)
    if literal is not None and curve.is_on_curve(literal):
        return literal
    flipped = _try_affine(s[1:].lstrip()) if s.startswith("-") else None
    if flipped is not None and curve.is_on_curve(flipped):
        return curve.negate(flipped)
    if literal is not None or flipped is not None:
        raise PointNotOnCurve(f"point {text!r} is not on the curve")
    raise ParseError(f"cannot parse point {text!r}; expected 'O' or 'x,y'")


def parse_extension(text: str):
    """Extension literal: 'quad:d', or 'cyclo:N:g1,g2,...' where the g_i
    generate the fixed subgroup of (Z/N)*."""
    s = _normalize(text)
    head, sep, rest = s.partition(":")
    if not sep:
        raise ParseError(f"extension literal {text!r} is missing ':'")
    kind = head.lower()
    if kind == "quad":
        try:
            d = int(rest.strip())
        except ValueError:
            raise ParseError(f"quadratic descriptor needs an integer, got {rest!r}") from None
        return Quadratic(d)
    if kind in ("cyclo", "cyclotomic"):
        n_text, _, gens_text = rest.partition(":")
        try:
            conductor = int(n_text.strip())
        except ValueError:
            raise ParseError(f"conductor must be an integer, got {n_text!r}") from None
        gens = []
        cleaned = gens_text.replace("{", "").replace("}", "")
        for piece in cleaned.split(","):
            piece = piece.strip()
            if not piece:
                continue
            try:
                gens.append(int(piece))
            except ValueError:
                raise ParseError(f"subgroup generator {piece!r} is not an integer") from None
        return Cyclotomic.from_generators(conductor, gens)
    raise ParseError(f"unknown extension kind {head!r}; expected 'quad' or 'cyclo'")


@dataclass(frozen=True)
class JobSpec:
    """A fully parsed invocation, ready to run."""

    command: str
    curve: WeierstrassCurve
    output: str = "text"
    t: CurvePoint | None = None
    m: int | None = None
    p: CurvePoint | None = None
    ext: Quadratic | Cyclotomic | None = None
    gens_auto: bool = True
    gens: tuple[CurvePoint, ...] | None = None


def _rat_str(x: Fraction) -> str:
    return str(x)


def _point_json(p: CurvePoint):
    if p.is_infinity:
        return "O"
    return [_rat_str(p.x), _rat_str(p.y)]


def _curve_json(c: WeierstrassCurve) -> dict:
    return {
        "a1": _rat_str(c.a1),
        "a2": _rat_str(c.a2),
        "a3": _rat_str(c.a3),
        "a4": _rat_str(c.a4),
        "a6": _rat_str(c.a6),
    }


def _algebra_json(point: CurvePoint, algebra, status, order=None) -> dict:
    entry = {"point": _point_json(point)}
    entry["order"] = order
    entry["b_raw"] = _rat_str(algebra.b_raw)
    entry["b_normalized"] = _rat_str(algebra.b_normalized)
    entry["status"] = status.kind
    if status.witness is not None:
        entry["witness"] = status.witness
    return entry


def run(job: JobSpec) -> dict:
    """Execute a job and return its JSON-ready report."""
    if job.command == "torsion":
        return _run_torsion(job)
    if job.command == "pairing":
        return _run_pairing(job)
    if job.command == "relbr":
        return _run_relbr(job)
    raise ValueError(f"unknown command {job.command!r}")


def _run_torsion(job: JobSpec) -> dict:
    group = torsion_subgroup(job.curve)
    return {
        "schema": "1",
        "command": "torsion",
        "curve": _curve_json(job.curve),
        "structure": group.describe(),
        "order": group.order,
        "generators": [
            {"point": _point_json(point), "order": order}
            for point, order in group.generators
        ],
        "elements": [_point_json(point) for point in group.elements],
    }


def _run_pairing(job: JobSpec) -> dict:
    cocycle = RationalCocycle(job.curve, job.m, job.t)
    algebra = brauer_pairing(cocycle, job.p, job.ext)
    status = class_status(algebra)
    entry = _algebra_json(job.p, algebra, status, order=job.curve.point_order(job.p))
    return {
        "schema": "1",
        "command": "pairing",
        "curve": _curve_json(job.curve),
        "cocycle": {"m": cocycle.m, "t": _point_json(cocycle.t)},
        "extension": job.ext.literal(),
        "results": [entry],
    }


def _run_relbr(job: JobSpec) -> dict:
    cocycle = RationalCocycle(job.curve, job.m, job.t)
    if job.gens_auto:
        print(RANK_WARNING, file=sys.stderr)
        generators = torsion_subgroup(job.curve).generators
    else:
        generators = tuple(
            (point, job.curve.point_order(point)) for point in job.gens
        )
    presentation = relative_brauer(cocycle, generators, job.ext)
    report = {
        "schema": "1",
        "command": "relbr",
        "curve": _curve_json(job.curve),
        "cocycle": {"m": cocycle.m, "t": _point_json(cocycle.t)},
        "extension": job.ext.literal(),
        "results": [
            _algebra_json(e.point, e.algebra, e.status, order=e.order)
            for e in presentation.entries
        ],
        "order_bound": presentation.order_bound,
    }
    if presentation.group_invariants is not None:
        report["group_structure"] = list(presentation.group_invariants)
    return report


def _point_text(value) -> str:
    if value == "O":
        return "O"
    return f"({value[0]}, {value[1]})"


def _curve_text(data: dict) -> str:
    curve = WeierstrassCurve(*(Fraction(data[k]) for k in ("a1", "a2", "a3", "a4", "a6")))
    return curve.equation()


def _status_text(entry: dict, bound: int) -> str:
    status = entry["status"]
    if status == "nontrivial":
        return f"nontrivial (witness prime {entry['witness']})"
    if status == "undetermined":
        return f"undetermined (class order divides {bound})"
    return status


def render_text(report: dict) -> str:
    lines = [f"curve: {_curve_text(report['curve'])}"]
    if report["command"] == "torsion":
        lines.append(f"torsion: {report['structure']} (order {report['order']})")
        lines.append("generators:")
        for gen in report["generators"]:
            lines.append(f"  {_point_text(gen['point'])}  order {gen['order']}")
        lines.append("elements: " + ", ".join(_point_text(p) for p in report["elements"]))
        return "\n".join(lines)
    cocycle = report["cocycle"]
    lines.append(f"cocycle: m = {cocycle['m']}, t = {_point_text(cocycle['t'])}")
    lines.append(f"extension: {report['extension']}")
    bound = cocycle["m"]
    for entry in report["results"]:
        order = entry.get("order")
        suffix = f"  order {order}" if order is not None else ""
        lines.append(f"point: {_point_text(entry['point'])}{suffix}")
        lines.append(f"  b_raw: {entry['b_raw']}")
        lines.append(f"  b_normalized: {entry['b_normalized']}")
        lines.append(f"  status: {_status_text(entry, bound)}")
    if report["command"] == "relbr":
        invariants = report.get("group_structure")
        if invariants is not None:
            text = " x ".join(f"Z/{n}" for n in invariants) if invariants else "trivial"
            lines.append(f"group structure: {text}")
        else:
            lines.append(f"order bound: every class order divides {bound}")
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="relbrauer", description="relative Brauer groups of genus-1 curves")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--curve", required=True, help="'a1 a2 a3 a4 a6' or '[A,B]'")
        p.add_argument("--output", choices=("text", "json"), default="text")

    torsion = sub.add_parser("torsion", help="rational torsion subgroup")
    common(torsion)

    pairing = sub.add_parser("pairing", help="Brauer class of a single point")
    common(pairing)
    pairing.add_argument("--t", required=True, help="m-torsion point, e.g. --t=0,0")
    pairing.add_argument("--m", required=True, type=int, help="cyclic order")
    pairing.add_argument("--p", required=True, help="point to pair, 'O' or 'x,y'")
    pairing.add_argument("--ext", required=True, help="'quad:d' or 'cyclo:N:g1,g2'")

    relbr = sub.add_parser("relbr", help="relative Brauer group presentation")
    common(relbr)
    relbr.add_argument("--t", required=True, help="m-torsion point, e.g. --t=-8,18")
    relbr.add_argument("--m", required=True, type=int, help="cyclic order")
    relbr.add_argument("--ext", required=True, help="'quad:d' or 'cyclo:N:g1,g2'")
    relbr.add_argument(
        "--gens",
        default="auto",
        help="'auto' (torsion generators, rank 0 assumed) or 'x1,y1;x2,y2;...'",
    )
    return parser


def _job_from_args(argv) -> JobSpec:
    ns = _build_parser().parse_args(argv)
    curve = parse_curve(ns.curve)
    if ns.command == "torsion":
        return JobSpec("torsion", curve, output=ns.output)
    t = parse_point(ns.t, curve)
    ext = parse_extension(ns.ext)
    if ns.command == "pairing":
        p = parse_point(ns.p, curve)
        return JobSpec("pairing", curve, output=ns.output, t=t, m=ns.m, p=p, ext=ext)
    gens_value = _normalize(ns.gens)
    if gens_value == "auto":
        return JobSpec("relbr", curve, output=ns.output, t=t, m=ns.m, ext=ext, gens_auto=True)
    points = tuple(
        parse_point(piece, curve) for piece in gens_value.split(";") if piece.strip()
    )
    if not points:
        raise ParseError("--gens needs 'auto' or a ';'-separated point list")
    return JobSpec(
        "relbr", curve, output=ns.output, t=t, m=ns.m, ext=ext, gens_auto=False, gens=points
    )


def main(argv=None) -> int:
    try:
        job = _job_from_args(argv)
        report = run(job)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SingularCurve, PointNotOnCurve, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FactoringLimitExceeded as exc:
        print(f"error: factoring limit exceeded: {exc}", file=sys.stderr)
        return 2
    except NonConstantCocycleValue as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if job.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
