"""Command-line front end.

Commands: validate, cohomology, modular-class, berezinian, replace,
homotopy-check.  Exit codes: 0 success (a nontrivial class is a result,
not an error), 1 when a groupoid/complex/representation law fails, 2 on
usage or schema errors.  Reports go to stdout, either human-readable
text or canonical JSON (stable key order, so identical input and flags
give byte-identical output); elapsed time goes to stderr to keep stdout
reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .complexes import berezinian_class, invertible_replacement
from .groupoid import ClassReport, coboundary_solve_1, is_cocycle_1, validate as validate_groupoid
from .linalg import format_rational
from .reps import (
    LineRep,
    RepUpToWeakHomotopy,
    Trivialization,
    VectorRep,
    characteristic_function,
    det_representation,
    modular_class_ruth,
    modular_class_vector,
    strict_as_homotopy,
    verify_line_rep,
    verify_ruth,
    verify_vector_rep,
)
from .schema import InputDocument, SchemaError, parse
from . import complexes


@dataclass
class ReportDocument:
    """Everything a command wants to say, ready for rendering."""

    command: str
    input: str
    ok: bool = True
    fields: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_json(self) -> str:
        payload = {"command": self.command, "input": self.input, "ok": self.ok}
        payload.update(self.fields)
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"input: {self.input}"]
        for key, value in self.fields.items():
            lines.extend(_text_lines(key, value))
        lines.append(f"status: {'ok' if self.ok else 'failed'}")
        return "\n".join(lines) + "\n"


def _text_lines(key, value, indent: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = [f"{indent}{key}:"]
        for k, v in value.items():
            lines.extend(_text_lines(k, v, indent + "  "))
        return lines
    if isinstance(value, list):
        lines = [f"{indent}{key}:"]
        for item in value:
            if isinstance(item, dict):
                rendered = ", ".join(f"{k}={v}" for k, v in item.items())
            elif isinstance(item, list):
                rendered = "[" + " ".join(str(x) for x in item) + "]"
            else:
                rendered = str(item)
            lines.append(f"{indent}  - {rendered}")
        return lines
    return [f"{indent}{key}: {value}"]


def _cochain_json(report: ClassReport) -> dict:
    return {key[0]: format_rational(v) for key, v in sorted(report.cocycle.values.items())}


def _class_fields(report: ClassReport) -> dict:
    fields = {
        "cochain": _cochain_json(report),
        "class": "trivial" if report.is_coboundary else "nontrivial",
    }
    if report.witness is not None:
        fields["witness"] = {
            obj: format_rational(v) for obj, v in sorted(report.witness.values.items())
        }
    else:
        fields["obstructions"] = [
            {"arrow": a, "value": format_rational(v)} for a, v in report.obstructions
        ]
    return fields


def _validate_document(doc: InputDocument) -> tuple[dict, bool]:
    sections: dict = {}
    gpd_report = validate_groupoid(doc.groupoid)
    sections["groupoid"] = gpd_report.problems or "ok"
    ok = gpd_report.ok
    rep = doc.rep
    if isinstance(rep, RepUpToWeakHomotopy):
        complex_problems: dict = {}
        for obj, fiber in sorted(rep.complexes.items()):
            check = complexes.verify_complex(fiber)
            complex_problems[obj] = check.problems or "ok"
            ok = ok and check.ok
        sections["complex"] = complex_problems
        if ok:
            check = verify_ruth(rep)
            sections["rep"] = check.problems or "ok"
            ok = ok and check.ok
    elif isinstance(rep, VectorRep):
        check = verify_vector_rep(rep)
        sections["rep"] = check.problems or "ok"
        ok = ok and check.ok
    elif isinstance(rep, LineRep):
        check = verify_line_rep(rep)
        sections["rep"] = check.problems or "ok"
        ok = ok and check.ok
    return sections, ok


def _cmd_validate(doc: InputDocument, args, report: ReportDocument) -> int:
    sections, ok = _validate_document(doc)
    report.fields["sections"] = sections
    report.ok = ok
    return 0 if ok else 1


def _cmd_cohomology(doc: InputDocument, args, report: ReportDocument) -> int:
    if doc.cochain is None:
        raise SchemaError(["'cohomology' needs a cochain section"])
    gpd_report = validate_groupoid(doc.groupoid)
    if not gpd_report.ok:
        report.fields["sections"] = {"groupoid": gpd_report.problems}
        report.ok = False
        return 1
    if not is_cocycle_1(doc.groupoid, doc.cochain):
        report.fields["is_cocycle"] = False
        report.ok = False
        return 1
    report.fields["is_cocycle"] = True
    solved = coboundary_solve_1(doc.groupoid, doc.cochain)
    report.fields.update(_class_fields(solved))
    return 0


def _require_rep(doc: InputDocument):
    if doc.rep is None:
        raise SchemaError(["this command needs a rep section"])
    return doc.rep


def _cmd_modular_class(doc: InputDocument, args, report: ReportDocument) -> int:
    rep = _require_rep(doc)
    sections, ok = _validate_document(doc)
    report.fields["sections"] = sections
    if not ok:
        report.ok = False
        return 1
    report.fields["rep_kind"] = doc.rep_kind
    if isinstance(rep, RepUpToWeakHomotopy):
        solved = modular_class_ruth(rep, doc.sigma)
        report.fields["berezinian"] = _cochain_json(solved)
    elif isinstance(rep, VectorRep):
        solved = modular_class_vector(rep, doc.sigma)
        report.fields["berezinian"] = {
            a: format_rational(v)
            for a, v in sorted(det_representation(rep).action.items())
        }
    else:
        phi = characteristic_function(rep, doc.sigma)
        solved = coboundary_solve_1(rep.groupoid, phi)
        report.fields["berezinian"] = {
            a: format_rational(v) for a, v in sorted(rep.action.items())
        }
    report.fields.update(_class_fields(solved))
    return 0


def _arrow_chain_map(doc: InputDocument, arrow: str):
    rep = _require_rep(doc)
    if arrow not in set(doc.groupoid.arrow_ids()):
        raise SchemaError([f"unknown arrow '{arrow}'"])
    if isinstance(rep, RepUpToWeakHomotopy):
        return rep(arrow)
    if isinstance(rep, VectorRep):
        return strict_as_homotopy(rep)(arrow)
    raise SchemaError(["this command needs matrix or per-degree actions"])


def _cmd_berezinian(doc: InputDocument, args, report: ReportDocument) -> int:
    t = _arrow_chain_map(doc, args.arrow)
    sigma = doc.sigma or Trivialization.ones()
    gpd = doc.groupoid
    try:
        value = berezinian_class(t, sigma(gpd.src(args.arrow)), sigma(gpd.tgt(args.arrow)))
    except ValueError as exc:
        # covers dimension mismatches, non-equivalences, and non-chain-maps
        report.fields["error"] = str(exc)
        report.ok = False
        return 1
    report.fields["arrow"] = args.arrow
    report.fields["value"] = format_rational(value)
    return 0


def _cmd_replace(doc: InputDocument, args, report: ReportDocument) -> int:
    t = _arrow_chain_map(doc, args.arrow)
    try:
        g, _ = invertible_replacement(t)
    except ValueError as exc:
        report.fields["error"] = str(exc)
        report.ok = False
        return 1
    report.fields["arrow"] = args.arrow
    report.fields["components"] = {
        str(i): [[format_rational(x) for x in row] for row in g.component(i).to_lists()]
        for i in g.source.degrees()
    }
    return 0


def _cmd_homotopy_check(doc: InputDocument, args, report: ReportDocument) -> int:
    rep = _require_rep(doc)
    if not isinstance(rep, RepUpToWeakHomotopy):
        rep = strict_as_homotopy(rep) if isinstance(rep, VectorRep) else None
    if rep is None:
        raise SchemaError(["'homotopy-check' needs matrix or per-degree actions"])
    check = verify_ruth(rep)
    pairs = []
    for g, h in rep.groupoid.composable_pairs():
        pairs.append(
            {
                "g": g,
                "h": h,
                "composite": rep.groupoid.compose(g, h),
                "certificate": "found" if (g, h) in check.certificates else "missing",
            }
        )
    report.fields["pairs"] = pairs
    if not check.ok:
        report.fields["problems"] = check.problems
        report.ok = False
        return 1
    return 0


_COMMANDS = {
    "validate": (_cmd_validate, False),
    "cohomology": (_cmd_cohomology, False),
    "modular-class": (_cmd_modular_class, False),
    "berezinian": (_cmd_berezinian, True),
    "replace": (_cmd_replace, True),
    "homotopy-check": (_cmd_homotopy_check, False),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modclass",
        description="Modular classes of finite groupoid representations,"
        " in exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, needs_arrow) in _COMMANDS.items():
        cmd = sub.add_parser(name)
        cmd.add_argument("input", help="path to a JSON input document")
        cmd.add_argument(
            "--format", choices=("text", "json"), default="text", dest="fmt"
        )
        if needs_arrow:
            cmd.add_argument("--arrow", required=True, help="arrow identifier")
    return parser


def run(command: str, doc: InputDocument, args) -> tuple[ReportDocument, int]:
    """Dispatch a parsed document to a command implementation."""
    report = ReportDocument(command=command, input=args.input)
    handler = _COMMANDS[command][0]
    started = time.perf_counter()
    code = handler(doc, args, report)
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return report, code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = parse(args.input)
    except FileNotFoundError:
        print(f"error: no such file: {args.input}", file=sys.stderr)
        return 2
    except SchemaError as exc:
        for problem in exc.problems:
            print(f"error: {problem}", file=sys.stderr)
        return 2
    try:
        report, code = run(args.command, doc, args)
    except SchemaError as exc:
        for problem in exc.problems:
            print(f"error: {problem}", file=sys.stderr)
        return 2
    sys.stdout.write(report.to_json() if args.fmt == "json" else report.to_text())
    print(f"elapsed: {report.elapsed_ms:.1f} ms", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
