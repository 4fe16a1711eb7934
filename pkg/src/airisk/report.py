"""Rendering assessment results for people and for machines.

The text and markdown formats present the same content in the same order:
profile header, intervention table, target table, safety levels, the seven
findings, and a calibration footer listing every invented cutoff in effect.
The machine format is a canonical JSON document that parses back to an
equal RiskReport.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any

from . import rules as _rules
from .documents import (
    canonical_json_bytes,
    intervention_from_obj,
    intervention_to_obj,
    safety_from_obj,
    safety_to_obj,
)
from .model import (
    TIME_DELAY_RANK,
    ATTENTION_RANK,
    AssessmentProfile,
    AttentionInterval,
    HumanAttention,
    InterventionIndicators,
    MaxDamage,
    Reputational,
    SafetyProfile,
    TimeDelay,
)
from .rules import Finding, Measure, MEASURE_LABELS, RuleId, RuleReport, evaluate_rules
from .tables import (
    DEFAULT_DAMAGE_THRESHOLDS,
    DamageClass,
    DamagePartyProfile,
    DamageThresholds,
    RiskLevel,
    quadrant,
    target_accident_risk,
    target_damage_party,
)

QUADRANT_CONVENTION = "1 upper-left, 2 upper-right, 3 lower-left, 4 lower-right (gap x energy)"


class ReportFormat(str, Enum):
    TEXT = "text"
    MARKDOWN = "markdown"
    MACHINE = "machine"


@dataclass(frozen=True)
class TargetResult:
    """Derived risk results for one target."""

    name: str
    max_damage_text: str
    accident_risk: RiskLevel
    damage_party: DamagePartyProfile
    quadrant: int | None = None


@dataclass(frozen=True)
class Calibration:
    """The cutoffs behind the rules' qualitative phrases, as evaluated."""

    very_small_time_delays: tuple[TimeDelay, ...]
    poor_observability_max: int
    poor_attention_min: AttentionInterval
    low_correctability_max: int
    accident_risk_min: RiskLevel
    significant_damage_min: RiskLevel
    significant_party_min: int
    high_damage_min: DamageClass
    safety_review_level: int
    safety_critical_level: int
    damage_thresholds: DamageThresholds
    quadrant_convention: str


@dataclass(frozen=True)
class RiskReport:
    """Everything a rendered report contains, in rendering order."""

    profile_name: str
    intervention: InterventionIndicators
    target_results: tuple[TargetResult, ...]
    safety: SafetyProfile
    rule_findings: RuleReport
    calibration: Calibration


def current_calibration(thresholds: DamageThresholds = DEFAULT_DAMAGE_THRESHOLDS) -> Calibration:
    """The calibration in effect for a given set of damage thresholds."""
    delays = tuple(sorted(_rules.VERY_SMALL_TIME_DELAYS, key=TIME_DELAY_RANK.__getitem__))
    return Calibration(
        very_small_time_delays=delays,
        poor_observability_max=_rules.POOR_OBSERVABILITY_MAX,
        poor_attention_min=_rules.POOR_ATTENTION_MIN,
        low_correctability_max=_rules.LOW_CORRECTABILITY_MAX,
        accident_risk_min=_rules.ACCIDENT_RISK_MIN,
        significant_damage_min=_rules.SIGNIFICANT_DAMAGE_MIN,
        significant_party_min=_rules.SIGNIFICANT_PARTY_MIN,
        high_damage_min=_rules.HIGH_DAMAGE_MIN,
        safety_review_level=_rules.SAFETY_REVIEW_LEVEL,
        safety_critical_level=_rules.SAFETY_CRITICAL_LEVEL,
        damage_thresholds=thresholds,
        quadrant_convention=QUADRANT_CONVENTION,
    )


def format_usd(amount: float) -> str:
    """Dollar text: exact billions/millions humanized, otherwise separators."""
    if isinstance(amount, float) and amount.is_integer():
        amount = int(amount)
    if isinstance(amount, int):
        if amount and amount % 1_000_000_000 == 0:
            return f"${amount // 1_000_000_000:,} billion"
        if amount and amount % 1_000_000 == 0:
            return f"${amount // 1_000_000:,} million"
        return f"${amount:,}"
    return f"${amount:,.2f}"


def format_max_damage(d: MaxDamage) -> str:
    """Cell text for a max-damage estimate, e.g. "$10 billion + 4 lives"."""
    parts = []
    if d.monetary_usd is not None:
        parts.append(format_usd(d.monetary_usd))
    if d.lives_at_risk:
        parts.append("1 life" if d.lives_at_risk == 1 else f"{d.lives_at_risk} lives")
    if parts:
        return " + ".join(parts)
    if d.reputational is not None and d.reputational is not Reputational.NONE:
        return "Reputation loss"
    return "none"


def format_attention(att: HumanAttention) -> str:
    """Attention cell text: "N times per day", "intermittent, weeks", or "minutes"."""
    if att.checks_per_day is not None:
        n = att.checks_per_day
        return "1 time per day" if n == 1 else f"{n} times per day"
    interval = att.interval
    # Gaps of a day or more get the explicit "intermittent" marker.
    if ATTENTION_RANK[interval] >= ATTENTION_RANK[AttentionInterval.DAYS]:
        return f"intermittent, {interval.value}"
    return interval.value


def build_report(
    profile: AssessmentProfile,
    thresholds: DamageThresholds = DEFAULT_DAMAGE_THRESHOLDS,
) -> RiskReport:
    """Assemble the full report for a valid profile.

    Raises:
        InvalidProfileError: if the profile fails validation.
    """
    findings = evaluate_rules(profile, thresholds)
    results = []
    for target in profile.targets:
        q = None
        if target.position is not None:
            q = quadrant(target.position.gap, target.position.energy)
        results.append(
            TargetResult(
                name=target.name,
                max_damage_text=format_max_damage(target.max_damage),
                accident_risk=target_accident_risk(target),
                damage_party=target_damage_party(target),
                quadrant=q,
            )
        )
    return RiskReport(
        profile_name=profile.name,
        intervention=profile.intervention,
        target_results=tuple(results),
        safety=profile.safety,
        rule_findings=findings,
        calibration=current_calibration(thresholds),
    )


def _two_column(rows: list[tuple[str, str]]) -> list[str]:
    width = max(len(label) for label, _ in rows)
    return [f"{label:<{width}} | {value}" for label, value in rows]


def _aligned_table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    def line(cells: list[str]) -> str:
        return " | ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()
    return [line(header)] + [line(row) for row in rows]


def render_intervention_table(ind: InterventionIndicators) -> str:
    """The four timely-intervention indicators as an aligned two-column table."""
    rows = [
        ("Time Delay", ind.time_delay.value),
        ("Observability", str(ind.observability)),
        ("Human Attention", format_attention(ind.attention)),
        ("Correctability", str(ind.correctability)),
    ]
    return "\n".join(_two_column(rows))


def _target_rows(results: tuple[TargetResult, ...]) -> tuple[list[str], list[list[str]]]:
    header = ["Targets", "Max Damage", "System Accident Risk", "Potential Damage to Other Parties"]
    rows = [
        [r.name, r.max_damage_text, r.accident_risk.letter, r.damage_party.code]
        for r in results
    ]
    if any(r.quadrant is not None for r in results):
        header.append("Quadrant")
        for row, r in zip(rows, results):
            row.append("-" if r.quadrant is None else str(r.quadrant))
    return header, rows


def render_target_table(results: tuple[TargetResult, ...]) -> str:
    """Per-target risk results as an aligned table, one row per target."""
    header, rows = _target_rows(results)
    return "\n".join(_aligned_table(header, rows))


def _safety_rows(safety: SafetyProfile) -> list[tuple[str, str]]:
    rows = []
    for name, dim in safety.dimensions():
        value = str(dim.level)
        if dim.projected != dim.level:
            value += f" (projected {dim.projected})"
        rows.append((name.replace("_", " "), value))
    return rows


def _calibration_rows(cal: Calibration) -> list[tuple[str, str]]:
    t = cal.damage_thresholds
    bands = (
        f"minor at {format_usd(t.minor)}, major at {format_usd(t.major)}, "
        f"severe at {format_usd(t.severe)}, catastrophic at {format_usd(t.catastrophic)}; "
        "any lives at risk are catastrophic"
    )
    return [
        ("very small time delay", ", ".join(d.value for d in cal.very_small_time_delays)),
        ("poor observability", f"at most {cal.poor_observability_max} (scale 0-5)"),
        ("poor attention", f"gaps of {cal.poor_attention_min.value} or more"),
        ("low correctability", f"at most {cal.low_correctability_max} (scale 0-5)"),
        ("accident risk floor", f"{cal.accident_risk_min.value.lower()} or higher (R3)"),
        (
            "other-party significance",
            f"damage {cal.significant_damage_min.value.lower()} or above at party degree "
            f"{cal.significant_party_min}+ (R4)",
        ),
        ("high damage potential", f"class {cal.high_damage_min.value.lower()} or worse (R5)"),
        ("safety review level", f"{cal.safety_review_level} or higher, current (R6)"),
        ("safety critical level", f"{cal.safety_critical_level}, current or projected (R7)"),
        ("damage class bands", bands),
        ("quadrant labels", cal.quadrant_convention),
    ]


def _finding_status(finding: Finding) -> str:
    marker = "[X]" if finding.triggered else "[ ]"
    status = "triggered" if finding.triggered else "not triggered"
    return f"{marker} {finding.rule.value} {status}"


def _measures_text(measures: tuple[Measure, ...]) -> str:
    return "; ".join(MEASURE_LABELS[m] for m in measures)


def _render_text(report: RiskReport, color: bool) -> str:
    def paint(s: str, code: str) -> str:
        return f"\x1b[{code}m{s}\x1b[0m" if color else s

    def section(title: str) -> list[str]:
        return ["", paint(title, "1"), "-" * len(title)]

    title = f"Risk Assessment: {report.profile_name}"
    lines = [paint(title, "1"), "=" * len(title)]
    lines += section("Intervention Indicators")
    lines += render_intervention_table(report.intervention).splitlines()
    lines.append(f"Can take offline: {'yes' if report.intervention.can_take_offline else 'no'}")
    lines += section("Targets")
    lines += render_target_table(report.target_results).splitlines()
    lines += section("Safety Levels")
    lines += _two_column(_safety_rows(report.safety))
    lines += section("Findings")
    for finding in report.rule_findings.findings:
        status = _finding_status(finding)
        lines.append(paint(status, "31") if finding.triggered else status)
        if finding.measures:
            lines.append(f"    measures: {_measures_text(finding.measures)}")
        if finding.targets_involved:
            lines.append(f"    targets: {', '.join(finding.targets_involved)}")
        lines.append(f"    because: {finding.rationale}")
    lines += section("Calibration")
    lines += _two_column(_calibration_rows(report.calibration))
    return "\n".join(lines) + "\n"


def _md_escape(s: str) -> str:
    return s.replace("|", "\\|")


def _md_table(header: list[str], rows: list[list[str]]) -> list[str]:
    out = [
        "| " + " | ".join(_md_escape(h) for h in header) + " |",
        "|" + "|".join(" --- " for _ in header) + "|",
    ]
    for row in rows:
        out.append("| " + " | ".join(_md_escape(c) for c in row) + " |")
    return out


def _render_markdown(report: RiskReport) -> str:
    lines = [f"# Risk Assessment: {report.profile_name}"]
    ind = report.intervention
    lines += ["", "## Intervention Indicators", ""]
    lines += _md_table(
        ["Indicator", "Value"],
        [
            ["Time Delay", ind.time_delay.value],
            ["Observability", str(ind.observability)],
            ["Human Attention", format_attention(ind.attention)],
            ["Correctability", str(ind.correctability)],
        ],
    )
    lines += ["", f"Can take offline: {'yes' if ind.can_take_offline else 'no'}"]
    header, rows = _target_rows(report.target_results)
    lines += ["", "## Targets", ""]
    lines += _md_table(header, rows)
    lines += ["", "## Safety Levels", ""]
    lines += _md_table(["Dimension", "Level"], [[n, v] for n, v in _safety_rows(report.safety)])
    lines += ["", "## Findings", ""]
    for finding in report.rule_findings.findings:
        status = "triggered" if finding.triggered else "not triggered"
        parts = [f"**{finding.rule.value}: {status}.**"]
        if finding.measures:
            parts.append(f"Measures: {_measures_text(finding.measures)}.")
        if finding.targets_involved:
            parts.append(f"Targets: {', '.join(finding.targets_involved)}.")
        parts.append(f"Because: {finding.rationale}")
        lines.append("- " + " ".join(parts))
    lines += ["", "## Calibration", ""]
    for label, value in _calibration_rows(report.calibration):
        lines.append(f"- {label}: {value}")
    return "\n".join(lines) + "\n"


def _calibration_to_obj(cal: Calibration) -> dict:
    t = cal.damage_thresholds
    return {
        "very_small_time_delays": [d.value for d in cal.very_small_time_delays],
        "poor_observability_max": cal.poor_observability_max,
        "poor_attention_min": cal.poor_attention_min.value,
        "low_correctability_max": cal.low_correctability_max,
        "accident_risk_min": cal.accident_risk_min.value,
        "significant_damage_min": cal.significant_damage_min.value,
        "significant_party_min": cal.significant_party_min,
        "high_damage_min": cal.high_damage_min.value,
        "safety_review_level": cal.safety_review_level,
        "safety_critical_level": cal.safety_critical_level,
        "damage_thresholds": {
            "minor": t.minor,
            "major": t.major,
            "severe": t.severe,
            "catastrophic": t.catastrophic,
        },
        "quadrant_convention": cal.quadrant_convention,
    }


def _finding_to_obj(finding: Finding) -> dict:
    out: dict[str, Any] = {"rule": finding.rule.value, "triggered": finding.triggered}
    if finding.measures:
        out["measures"] = [m.value for m in finding.measures]
    if finding.targets_involved:
        out["targets"] = list(finding.targets_involved)
    out["rationale"] = finding.rationale
    return out


def _target_result_to_obj(r: TargetResult) -> dict:
    out: dict[str, Any] = {
        "name": r.name,
        "max_damage": r.max_damage_text,
        "accident_risk": r.accident_risk.value,
        "damage": r.damage_party.damage.value,
        "party_degree": r.damage_party.party_degree,
    }
    if r.quadrant is not None:
        out["quadrant"] = r.quadrant
    return out


def _render_machine(report: RiskReport) -> bytes:
    doc = {
        "schema_version": 1,
        "profile_name": report.profile_name,
        "intervention": intervention_to_obj(report.intervention),
        "targets": [_target_result_to_obj(r) for r in report.target_results],
        "safety": safety_to_obj(report.safety),
        "findings": [_finding_to_obj(f) for f in report.rule_findings.findings],
        "calibration": _calibration_to_obj(report.calibration),
    }
    return canonical_json_bytes(doc)


def render_report(report: RiskReport, format: ReportFormat | str, *, color: bool = False) -> bytes:
    """Render a report in the requested format as UTF-8 bytes."""
    fmt = ReportFormat(format)
    if fmt is ReportFormat.MACHINE:
        return _render_machine(report)
    if fmt is ReportFormat.MARKDOWN:
        return _render_markdown(report).encode("utf-8")
    return _render_text(report, color).encode("utf-8")


def parse_machine_report(data: bytes | str) -> RiskReport:
    """Rebuild a RiskReport from machine-format bytes; raises ValueError."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ValueError(f"not a machine report: {e.msg}") from e
    try:
        if doc["schema_version"] != 1:
            raise ValueError(f"unsupported machine report version {doc['schema_version']!r}")
        targets = tuple(
            TargetResult(
                name=obj["name"],
                max_damage_text=obj["max_damage"],
                accident_risk=RiskLevel(obj["accident_risk"]),
                damage_party=DamagePartyProfile(RiskLevel(obj["damage"]), obj["party_degree"]),
                quadrant=obj.get("quadrant"),
            )
            for obj in doc["targets"]
        )
        findings = tuple(
            Finding(
                rule=RuleId(obj["rule"]),
                triggered=obj["triggered"],
                measures=tuple(Measure(m) for m in obj.get("measures", [])),
                rationale=obj["rationale"],
                targets_involved=tuple(obj.get("targets", [])),
            )
            for obj in doc["findings"]
        )
        cal = doc["calibration"]
        calibration = Calibration(
            very_small_time_delays=tuple(TimeDelay(d) for d in cal["very_small_time_delays"]),
            poor_observability_max=cal["poor_observability_max"],
            poor_attention_min=AttentionInterval(cal["poor_attention_min"]),
            low_correctability_max=cal["low_correctability_max"],
            accident_risk_min=RiskLevel(cal["accident_risk_min"]),
            significant_damage_min=RiskLevel(cal["significant_damage_min"]),
            significant_party_min=cal["significant_party_min"],
            high_damage_min=DamageClass(cal["high_damage_min"]),
            safety_review_level=cal["safety_review_level"],
            safety_critical_level=cal["safety_critical_level"],
            damage_thresholds=DamageThresholds(**cal["damage_thresholds"]),
            quadrant_convention=cal["quadrant_convention"],
        )
        return RiskReport(
            profile_name=doc["profile_name"],
            intervention=intervention_from_obj(doc["intervention"]),
            target_results=targets,
            safety=safety_from_obj(doc["safety"]),
            rule_findings=RuleReport(findings),
            calibration=calibration,
        )
    except (KeyError, TypeError) as e:
        raise ValueError(f"not a machine report: {e}") from e
