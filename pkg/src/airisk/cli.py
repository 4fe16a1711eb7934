"""Command-line front end.

One tool, five subcommands: validate and assess work on assessment
documents; rules, tables, and init need no input.  Reports and catalogs go
to standard output (or --out); every diagnostic goes to standard error, so
output can be piped or captured cleanly.

Exit codes: 0 success, 1 invariant violations in a well-formed document,
2 document cannot be decoded, 3 unreadable or unwritable paths, 4 bad
command line.
"""

from __future__ import annotations

import argparse
import enum
import json
import os
import sys
from pathlib import Path

from .documents import (
    AssessmentDocumentError,
    DocumentError,
    format_document_error,
    parse_assessment,
)
from .model import (
    CouplingCategory,
    EnergyLevel,
    InteractionCategory,
    KnowledgeGap,
    validate_profile,
)
from .report import ReportFormat, build_report, format_usd, render_report
from .rules import MEASURE_LABELS, RULES
from .tables import (
    DEFAULT_DAMAGE_THRESHOLDS,
    DamageThresholds,
    accident_risk,
    damage_and_party,
)

NO_COLOR_ENV = "AIRISK_NO_COLOR"

_TEMPLATE_NOTE = "Replace every placeholder value, then check the file with: airisk validate FILE"


class ExitStatus(enum.IntEnum):
    OK = 0
    INVALID = 1
    DOCUMENT = 2
    IO = 3
    USAGE = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for document errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExitStatus.USAGE, f"{self.prog}: error: {message}\n")


def _eprint(message: str) -> None:
    print(message, file=sys.stderr)


def _thresholds_argument(text: str) -> DamageThresholds:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected MINOR,MAJOR,SEVERE,CATASTROPHIC (four amounts)")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number in {text!r}")
    try:
        return DamageThresholds(*values)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _read_document(path: str) -> bytes | None:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        _eprint(f"{path}: cannot read: {e.strerror or e}")
        return None


def _emit(payload: bytes, out: str | None) -> ExitStatus:
    if out is not None:
        try:
            Path(out).write_bytes(payload)
        except OSError as e:
            _eprint(f"{out}: cannot write: {e.strerror or e}")
            return ExitStatus.IO
        return ExitStatus.OK
    try:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    except BrokenPipeError:
        return ExitStatus.IO
    return ExitStatus.OK


def _load_profile(path: str, strict: bool):
    """Read and decode one document; returns (profile, status) with one of them None."""
    data = _read_document(path)
    if data is None:
        return None, ExitStatus.IO
    warnings: list[DocumentError] = []
    try:
        profile = parse_assessment(data, strict=strict, validate=False, warnings=warnings)
    except AssessmentDocumentError as e:
        for err in e.errors:
            _eprint(f"{path}: {format_document_error(err)}")
        return None, ExitStatus.DOCUMENT
    for warning in warnings:
        _eprint(f"{path}: warning: {format_document_error(warning)}")
    return profile, None


def cmd_validate(args) -> ExitStatus:
    profile, status = _load_profile(args.path, args.strict)
    if profile is None:
        return status
    violations = validate_profile(profile)
    for v in violations:
        _eprint(f"{args.path}: {v.path}: {v.message}")
    return ExitStatus.INVALID if violations else ExitStatus.OK


def cmd_assess(args) -> ExitStatus:
    profile, status = _load_profile(args.path, args.strict)
    if profile is None:
        return status
    violations = validate_profile(profile)
    if violations:
        for v in violations:
            _eprint(f"{args.path}: {v.path}: {v.message}")
        return ExitStatus.INVALID
    report = build_report(profile, args.damage_thresholds)
    color = (
        args.format == ReportFormat.TEXT.value
        and args.out is None
        and sys.stdout.isatty()
        and not os.environ.get(NO_COLOR_ENV)
    )
    return _emit(render_report(report, args.format, color=color), args.out)


def _rules_text() -> str:
    blocks = []
    for rule in RULES:
        measures = "; ".join(MEASURE_LABELS[m] for m in rule.measures)
        blocks.append(
            f"{rule.id.value}  {rule.text}\n    when: {rule.condition}\n    measures: {measures}"
        )
    return "\n\n".join(blocks) + "\n"


def _rules_markdown() -> str:
    lines = ["# Recommendation Rules"]
    for rule in RULES:
        measures = "; ".join(MEASURE_LABELS[m] for m in rule.measures)
        lines += [
            "",
            f"## {rule.id.value}",
            "",
            rule.text,
            "",
            f"- When: {rule.condition}",
            f"- Measures: {measures}",
        ]
    return "\n".join(lines) + "\n"


def _rules_machine() -> bytes:
    doc = {
        "schema_version": 1,
        "rules": [
            {
                "id": rule.id.value,
                "text": rule.text,
                "condition": rule.condition,
                "measures": [m.value for m in rule.measures],
            }
            for rule in RULES
        ],
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def cmd_rules(args) -> ExitStatus:
    if args.format == ReportFormat.MACHINE.value:
        payload = _rules_machine()
    elif args.format == ReportFormat.MARKDOWN.value:
        payload = _rules_markdown().encode("utf-8")
    else:
        payload = _rules_text().encode("utf-8")
    return _emit(payload, args.out)


def _coupling_rows() -> tuple[list[str], list[list[str]]]:
    header = ["Coupling"] + [c.value for c in InteractionCategory]
    rows = []
    for coupling in reversed(list(CouplingCategory)):
        cells = [accident_risk(coupling, interaction).letter for interaction in InteractionCategory]
        rows.append([coupling.value] + cells)
    return header, rows


def _energy_rows() -> tuple[list[str], list[list[str]]]:
    header = ["Energy"] + [g.value.capitalize() for g in KnowledgeGap]
    rows = []
    for energy in reversed(list(EnergyLevel)):
        cells = [damage_and_party(energy, gap).code for gap in KnowledgeGap]
        rows.append([energy.value.capitalize()] + cells)
    return header, rows


def _damage_band_rows(t: DamageThresholds) -> list[tuple[str, str]]:
    return [
        ("negligible", "below every band"),
        ("minor", f"at least {format_usd(t.minor)}, or minor reputational damage"),
        ("major", f"at least {format_usd(t.major)}"),
        ("severe", f"at least {format_usd(t.severe)}, or major reputational damage"),
        ("catastrophic", f"at least {format_usd(t.catastrophic)}, or any lives at risk"),
    ]


def _tables_text(t: DamageThresholds) -> str:
    # Cells join with " | " and no padding so rows stay stable grep targets.
    lines = ["System Accident Risk (coupling x interaction complexity)", ""]
    header, rows = _coupling_rows()
    lines.append(" | ".join(header))
    lines += [" | ".join(row) for row in rows]
    lines += ["", "Damage and Affected Parties (energy level x knowledge gap)", ""]
    header, rows = _energy_rows()
    lines.append(" | ".join(header))
    lines += [" | ".join(row) for row in rows]
    lines += ["", "Damage Classes (max-damage calibration)", ""]
    lines += [f"{name} | {band}" for name, band in _damage_band_rows(t)]
    return "\n".join(lines) + "\n"


def _tables_markdown(t: DamageThresholds) -> str:
    def md_table(header: list[str], rows: list[list[str]]) -> list[str]:
        out = ["| " + " | ".join(header) + " |", "|" + "|".join(" --- " for _ in header) + "|"]
        out += ["| " + " | ".join(row) + " |" for row in rows]
        return out

    lines = ["# Decision Tables", "", "## System Accident Risk", ""]
    lines += md_table(*_coupling_rows())
    lines += ["", "## Damage and Affected Parties", ""]
    lines += md_table(*_energy_rows())
    lines += ["", "## Damage Classes", ""]
    lines += [f"- {name}: {band}" for name, band in _damage_band_rows(t)]
    return "\n".join(lines) + "\n"


def _tables_machine(t: DamageThresholds) -> bytes:
    accident = {
        coupling.value: {
            interaction.value: accident_risk(coupling, interaction).value
            for interaction in InteractionCategory
        }
        for coupling in reversed(list(CouplingCategory))
    }
    damage = {
        energy.value: {
            gap.value: {
                "damage": damage_and_party(energy, gap).damage.value,
                "party_degree": damage_and_party(energy, gap).party_degree,
            }
            for gap in KnowledgeGap
        }
        for energy in reversed(list(EnergyLevel))
    }
    doc = {
        "schema_version": 1,
        "accident_risk": accident,
        "damage_party": damage,
        "damage_thresholds": {
            "minor": t.minor,
            "major": t.major,
            "severe": t.severe,
            "catastrophic": t.catastrophic,
        },
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def cmd_tables(args) -> ExitStatus:
    t = args.damage_thresholds
    if args.format == ReportFormat.MACHINE.value:
        payload = _tables_machine(t)
    elif args.format == ReportFormat.MARKDOWN.value:
        payload = _tables_markdown(t).encode("utf-8")
    else:
        payload = _tables_text(t).encode("utf-8")
    return _emit(payload, args.out)


def _template_document() -> dict:
    return {
        "//": _TEMPLATE_NOTE,
        "schema_version": 1,
        "name": "Example system",
        "ai_component": "Describe the AI component under assessment",
        "intervention": {
            "//": (
                "time_delay: milliseconds|seconds|minutes|hours|days|weeks|months; "
                "observability and correctability run 0 (black box / impossible to correct) to 5"
            ),
            "time_delay": "months",
            "observability": 5,
            "attention": {
                "//": (
                    "mode periodic needs checks_per_day (integer, at least 1); "
                    "mode intermittent needs interval (minutes|hours|days|weeks|months)"
                ),
                "mode": "periodic",
                "checks_per_day": 24,
            },
            "correctability": 5,
            "can_take_offline": True,
        },
        "targets": [
            {
                "//": (
                    "one entry per thing the AI's outputs affect; coupling and "
                    "interaction_complexity run 1-5; energy_level and knowledge_gap are "
                    "low|medium|high"
                ),
                "name": "Example target",
                "max_damage": {
                    "//": (
                        "worst case with an adversary in control: monetary_usd, lives_at_risk, "
                        "reputational (none|minor|major); declare at least one"
                    ),
                    "monetary_usd": 0,
                },
                "coupling": 1,
                "interaction_complexity": 1,
                "energy_level": "low",
                "knowledge_gap": "low",
            }
        ],
        "safety": {
            "//": "levels 0-3 per dimension; projected defaults to the current level",
            "autonomy": {"level": 0},
            "goal_complexity": {"level": 0},
            "escape_potential": {"level": 0},
            "anthropomorphization": {"level": 0},
        },
    }


def cmd_init(args) -> ExitStatus:
    payload = (json.dumps(_template_document(), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    try:
        with open(args.path, "xb") as f:
            f.write(payload)
    except FileExistsError:
        _eprint(f"{args.path}: already exists, not overwriting")
        return ExitStatus.IO
    except OSError as e:
        _eprint(f"{args.path}: cannot write: {e.strerror or e}")
        return ExitStatus.IO
    return ExitStatus.OK


def _add_format_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=[f.value for f in ReportFormat],
        default=ReportFormat.TEXT.value,
        help="output format (default: text)",
    )
    sub.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def _add_threshold_option(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--damage-thresholds",
        metavar="MINOR,MAJOR,SEVERE,CATASTROPHIC",
        type=_thresholds_argument,
        default=DEFAULT_DAMAGE_THRESHOLDS,
        help="override the monetary damage-class cutoffs (USD)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="airisk",
        description=(
            "Assess the risk of deployed AI systems: validate assessment documents, "
            "evaluate the decision tables and the seven recommendation rules, and "
            "render reports."
        ),
        epilog=(
            "exit codes: 0 ok, 1 invalid profile, 2 bad document, 3 I/O error, 4 usage error. "
            f"Set {NO_COLOR_ENV} to disable styled terminal output."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("validate", help="check a document against the schema and invariants")
    p.add_argument("path", help="assessment document")
    p.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="treat unknown fields as errors (default: on)",
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("assess", help="evaluate a document and render the risk report")
    p.add_argument("path", help="assessment document")
    p.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        default=False,
        help="treat unknown fields as errors (default: off)",
    )
    _add_format_options(p)
    _add_threshold_option(p)
    p.set_defaults(func=cmd_assess)

    p = sub.add_parser("rules", help="print the recommendation-rule catalog")
    _add_format_options(p)
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("tables", help="print the decision tables and damage-class bands")
    _add_format_options(p)
    _add_threshold_option(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("init", help="write a template assessment document")
    p.add_argument("path", help="file to create (must not exist)")
    p.set_defaults(func=cmd_init)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return int(args.func(args))


if __name__ == "__main__":
    raise SystemExit(main())
