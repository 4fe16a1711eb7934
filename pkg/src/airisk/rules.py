"""The seven recommendation rules and their evaluation.

Each rule is an independent predicate over an assessment profile; no rule
suppresses another.  Evaluation always produces exactly seven findings, in
rule order, with a rationale naming the field values that decided the
outcome whether or not the rule fired.

The cutoffs that sharpen qualitative phrases like "very small" or "poor"
into decidable predicates are module constants, collected in this module
so reports can print the calibration in effect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .model import (
    ATTENTION_RANK,
    AssessmentProfile,
    AttentionInterval,
    InvalidProfileError,
    SafetyDimension,
    TargetAssessment,
    TimeDelay,
    attention_magnitude,
    validate_profile,
)
from .tables import (
    DAMAGE_CLASS_RANK,
    DEFAULT_DAMAGE_THRESHOLDS,
    RISK_RANK,
    DamageClass,
    DamageThresholds,
    RiskLevel,
    damage_class,
    target_accident_risk,
    target_damage_party,
)


class RuleId(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R6 = "R6"
    R7 = "R7"


class Measure(str, Enum):
    """Machine identifiers for the recommended safety measures."""

    OVERSIGHT_COMPONENT = "oversight_component"
    MONITORING_PROTOCOL = "monitoring_protocol"
    NON_AI_BACKUP_SYSTEM = "non_ai_backup_system"
    REDUCE_COMPLEXITY_ADD_CENTRAL_CONTROL = "reduce_complexity_add_central_control"
    ETHICS_COMMITTEE = "ethics_committee"
    CONVENTIONAL_SAFEGUARDS_HUMAN_OVERSIGHT = "conventional_safeguards_human_oversight"
    CYBERSECURITY_AS_WEAK_ADVERSARY = "cybersecurity_as_weak_adversary"
    PERSONNEL_SAFETY_EDUCATION = "personnel_safety_education"
    ETHICS_BOARD = "ethics_board"
    AIR_GAP_STRICT_PROTOCOLS = "air_gap_strict_protocols"
    AI_SAFETY_EXPERT_CONSULTATION = "ai_safety_expert_consultation"


MEASURE_LABELS: dict[Measure, str] = {
    Measure.OVERSIGHT_COMPONENT: "oversight component",
    Measure.MONITORING_PROTOCOL: "monitoring protocol",
    Measure.NON_AI_BACKUP_SYSTEM: "non-AI backup system",
    Measure.REDUCE_COMPLEXITY_ADD_CENTRAL_CONTROL: "reduce complexity and add centralized control around the AI component",
    Measure.ETHICS_COMMITTEE: "ethics committee",
    Measure.CONVENTIONAL_SAFEGUARDS_HUMAN_OVERSIGHT: "conventional (non-AI) safeguards and human oversight",
    Measure.CYBERSECURITY_AS_WEAK_ADVERSARY: "standard cybersecurity treating the AI as a weak human adversary",
    Measure.PERSONNEL_SAFETY_EDUCATION: "personnel education on AI safety hazards",
    Measure.ETHICS_BOARD: "ethics board",
    Measure.AIR_GAP_STRICT_PROTOCOLS: "air gapping and strict interaction protocols",
    Measure.AI_SAFETY_EXPERT_CONSULTATION: "consultation with AI safety experts",
}

# Calibration constants behind the rules' qualitative phrases.
VERY_SMALL_TIME_DELAYS = frozenset({TimeDelay.MILLISECONDS, TimeDelay.SECONDS})
POOR_OBSERVABILITY_MAX = 2
POOR_ATTENTION_MIN = AttentionInterval.DAYS
LOW_CORRECTABILITY_MAX = 2
ACCIDENT_RISK_MIN = RiskLevel.MEDIUM
SIGNIFICANT_DAMAGE_MIN = RiskLevel.MEDIUM
SIGNIFICANT_PARTY_MIN = 3
HIGH_DAMAGE_MIN = DamageClass.SEVERE
SAFETY_REVIEW_LEVEL = 2
SAFETY_CRITICAL_LEVEL = 3


@dataclass(frozen=True)
class Finding:
    """Outcome of one rule against one profile."""

    rule: RuleId
    triggered: bool
    measures: tuple[Measure, ...]
    rationale: str
    targets_involved: tuple[str, ...] = ()


@dataclass(frozen=True)
class RuleReport:
    """All seven findings, in rule order."""

    findings: tuple[Finding, ...]

    def triggered_rules(self) -> tuple[RuleId, ...]:
        return tuple(f.rule for f in self.findings if f.triggered)


@dataclass(frozen=True)
class RuleDefinition:
    """Catalog entry: the recommendation sentence plus its decidable form."""

    id: RuleId
    text: str
    condition: str
    measures: tuple[Measure, ...]


RULES: tuple[RuleDefinition, ...] = (
    RuleDefinition(
        RuleId.R1,
        "If time delay is very small and there is poor observability or attention, then an "
        "oversight component or monitoring protocol is recommended (unless the effects of the "
        "system are trivial).",
        "time delay is milliseconds or seconds; observability is at most 2 or attention gaps "
        "are days or longer; at least one target's damage class is above negligible",
        (Measure.OVERSIGHT_COMPONENT, Measure.MONITORING_PROTOCOL),
    ),
    RuleDefinition(
        RuleId.R2,
        "If correctability is low and the system can't be taken offline, then a (non-AI) "
        "backup system should be implemented and maintained.",
        "correctability is at most 2 and the system cannot be taken offline",
        (Measure.NON_AI_BACKUP_SYSTEM,),
    ),
    RuleDefinition(
        RuleId.R3,
        "If the system accident risk is medium or higher, then the system should be analyzed "
        "for ways to reduce complexity around the AI component, and add centralized control "
        "in and around that component.",
        "any target's accident risk is medium or higher",
        (Measure.REDUCE_COMPLEXITY_ADD_CENTRAL_CONTROL,),
    ),
    RuleDefinition(
        RuleId.R4,
        "If there is significant damage possible to 3rd and 4th parties, then an ethics "
        "committee is absolutely necessary for continued operation.",
        "any target's damage/party profile pairs damage at medium or above with party degree 3 or 4",
        (Measure.ETHICS_COMMITTEE,),
    ),
    RuleDefinition(
        RuleId.R5,
        "Targets of the AI's control which have high amounts of damage potential should have "
        "conventional (non-AI) safeguards and human oversight.",
        "any target's damage class is severe or worse",
        (Measure.CONVENTIONAL_SAFEGUARDS_HUMAN_OVERSIGHT,),
    ),
    RuleDefinition(
        RuleId.R6,
        "If any of the AI safety levels are level 2 or higher, then standard cybersecurity "
        "measures should be enacted as if the AI is a weak human adversary, and personnel "
        "education regarding AI safety hazards should be done within the organization. An "
        "ethics board should also be created.",
        "any safety dimension's current level is 2 or higher",
        (Measure.CYBERSECURITY_AS_WEAK_ADVERSARY, Measure.PERSONNEL_SAFETY_EDUCATION, Measure.ETHICS_BOARD),
    ),
    RuleDefinition(
        RuleId.R7,
        "If any of the AI safety levels are at or may reach level 3, then air gapping and "
        "strict protocols around interaction with the AI should be implemented. An ethics "
        "board and consultation with AI safety experts is required.",
        "any safety dimension's current or projected level is 3",
        (Measure.AIR_GAP_STRICT_PROTOCOLS, Measure.ETHICS_BOARD, Measure.AI_SAFETY_EXPERT_CONSULTATION),
    ),
)

RULES_BY_ID: dict[RuleId, RuleDefinition] = {r.id: r for r in RULES}


def _prose_join(items: list[str]) -> str:
    if len(items) <= 2:
        return " and ".join(items)
    return ", ".join(items[:-1]) + ", and " + items[-1]


def _sentence(parts: list[str], tail: str = "") -> str:
    body = _prose_join(parts) + tail
    return body[0].upper() + body[1:] + "."


def _display(dimension_name: str) -> str:
    return dimension_name.replace("_", " ")


@dataclass
class _Context:
    """Everything the predicates need, computed once per evaluation."""

    profile: AssessmentProfile
    magnitude: AttentionInterval
    classes: list[tuple[TargetAssessment, DamageClass]] = field(default_factory=list)
    risks: list[tuple[TargetAssessment, RiskLevel]] = field(default_factory=list)


def _eval_r1(ctx: _Context) -> Finding:
    ind = ctx.profile.intervention
    definition = RULES_BY_ID[RuleId.R1]
    delay_small = ind.time_delay in VERY_SMALL_TIME_DELAYS
    obs_poor = ind.observability <= POOR_OBSERVABILITY_MAX
    att_poor = ATTENTION_RANK[ctx.magnitude] >= ATTENTION_RANK[POOR_ATTENTION_MIN]
    worst = max((cls for _, cls in ctx.classes), key=DAMAGE_CLASS_RANK.__getitem__)
    trivial = worst is DamageClass.NEGLIGIBLE
    triggered = delay_small and (obs_poor or att_poor) and not trivial
    if triggered:
        parts = [f"time delay is {ind.time_delay.value}"]
        if obs_poor:
            parts.append(f"observability is {ind.observability} (at most {POOR_OBSERVABILITY_MAX})")
        if att_poor:
            parts.append(f"attention gaps reach {ctx.magnitude.value}")
        rationale = _sentence(parts, f"; effects are not trivial (worst target damage class {worst.value.lower()})")
        return Finding(RuleId.R1, True, definition.measures, rationale)
    parts = []
    if not delay_small:
        parts.append(f"time delay is {ind.time_delay.value} (not sub-minute)")
    if not (obs_poor or att_poor):
        parts.append(
            f"observability is {ind.observability} (above {POOR_OBSERVABILITY_MAX}) and "
            f"attention gaps are {ctx.magnitude.value} (under {POOR_ATTENTION_MIN.value})"
        )
    if trivial:
        parts.append("every target's damage class is negligible")
    return Finding(RuleId.R1, False, (), _sentence(parts))


def _eval_r2(ctx: _Context) -> Finding:
    ind = ctx.profile.intervention
    definition = RULES_BY_ID[RuleId.R2]
    low = ind.correctability <= LOW_CORRECTABILITY_MAX
    if low and not ind.can_take_offline:
        rationale = _sentence(
            [
                f"correctability is {ind.correctability} (at most {LOW_CORRECTABILITY_MAX})",
                "the system cannot be taken offline",
            ]
        )
        return Finding(RuleId.R2, True, definition.measures, rationale)
    parts = []
    if not low:
        parts.append(f"correctability is {ind.correctability} (above {LOW_CORRECTABILITY_MAX})")
    if ind.can_take_offline:
        parts.append("the system can be taken offline")
    return Finding(RuleId.R2, False, (), _sentence(parts))


def _eval_r3(ctx: _Context) -> Finding:
    definition = RULES_BY_ID[RuleId.R3]
    floor = RISK_RANK[ACCIDENT_RISK_MIN]
    qualifying = [(t, risk) for t, risk in ctx.risks if RISK_RANK[risk] >= floor]

    def listing(pairs):
        return _prose_join([f"{t.name} ({risk.letter})" for t, risk in pairs])

    if qualifying:
        rationale = f"Accident risk reaches medium or higher for {listing(qualifying)}."
        names = tuple(t.name for t, _ in qualifying)
        return Finding(RuleId.R3, True, definition.measures, rationale, names)
    rationale = f"Every target's accident risk is low: {listing(ctx.risks)}."
    return Finding(RuleId.R3, False, (), rationale)


def _eval_r4(ctx: _Context) -> Finding:
    definition = RULES_BY_ID[RuleId.R4]
    pairs = [(t, target_damage_party(t)) for t in ctx.profile.targets]
    floor = RISK_RANK[SIGNIFICANT_DAMAGE_MIN]
    qualifying = [
        (t, dp)
        for t, dp in pairs
        if dp.party_degree >= SIGNIFICANT_PARTY_MIN and RISK_RANK[dp.damage] >= floor
    ]

    def listing(items):
        return _prose_join([f"{t.name} ({dp.code})" for t, dp in items])

    if qualifying:
        rationale = f"Damage at medium or above can reach 3rd or 4th parties: {listing(qualifying)}."
        names = tuple(t.name for t, _ in qualifying)
        return Finding(RuleId.R4, True, definition.measures, rationale, names)
    rationale = f"No target combines damage at medium or above with 3rd- or 4th-party reach: {listing(pairs)}."
    return Finding(RuleId.R4, False, (), rationale)


def _eval_r5(ctx: _Context) -> Finding:
    definition = RULES_BY_ID[RuleId.R5]
    floor = DAMAGE_CLASS_RANK[HIGH_DAMAGE_MIN]
    qualifying = [(t, cls) for t, cls in ctx.classes if DAMAGE_CLASS_RANK[cls] >= floor]

    def listing(pairs):
        return _prose_join([f"{t.name} ({cls.value.lower()})" for t, cls in pairs])

    if qualifying:
        rationale = f"Damage potential is high for {listing(qualifying)}."
        names = tuple(t.name for t, _ in qualifying)
        return Finding(RuleId.R5, True, definition.measures, rationale, names)
    rationale = f"No target's damage class reaches severe: {listing(ctx.classes)}."
    return Finding(RuleId.R5, False, (), rationale)


def _argmax_dimension(dims: tuple[tuple[str, SafetyDimension], ...], key) -> tuple[str, int]:
    best_name, best_value = dims[0][0], key(dims[0][1])
    for name, dim in dims[1:]:
        if key(dim) > best_value:
            best_name, best_value = name, key(dim)
    return best_name, best_value


def _eval_r6(ctx: _Context) -> Finding:
    definition = RULES_BY_ID[RuleId.R6]
    dims = ctx.profile.safety.dimensions()
    qualifying = [(name, dim) for name, dim in dims if dim.level >= SAFETY_REVIEW_LEVEL]
    if qualifying:
        items = [f"{_display(name)} ({dim.level})" for name, dim in qualifying]
        rationale = f"Safety levels at {SAFETY_REVIEW_LEVEL} or higher: {_prose_join(items)}."
        return Finding(RuleId.R6, True, definition.measures, rationale)
    name, level = _argmax_dimension(dims, lambda d: d.level)
    rationale = (
        f"All safety levels are at most {SAFETY_REVIEW_LEVEL - 1} (highest is {_display(name)} at {level})."
    )
    return Finding(RuleId.R6, False, (), rationale)


def _eval_r7(ctx: _Context) -> Finding:
    definition = RULES_BY_ID[RuleId.R7]
    dims = ctx.profile.safety.dimensions()

    def reach(d: SafetyDimension) -> int:
        return max(d.level, d.projected if d.projected is not None else d.level)

    qualifying = [(name, dim) for name, dim in dims if reach(dim) >= SAFETY_CRITICAL_LEVEL]
    if qualifying:
        items = []
        for name, dim in qualifying:
            if dim.projected != dim.level:
                items.append(f"{_display(name)} ({dim.level}, projected {dim.projected})")
            else:
                items.append(f"{_display(name)} ({dim.level})")
        rationale = f"Safety levels at or projected to reach {SAFETY_CRITICAL_LEVEL}: {_prose_join(items)}."
        return Finding(RuleId.R7, True, definition.measures, rationale)
    name, value = _argmax_dimension(dims, reach)
    rationale = (
        f"No safety level is at or projected to reach {SAFETY_CRITICAL_LEVEL} "
        f"(highest is {_display(name)} at {value})."
    )
    return Finding(RuleId.R7, False, (), rationale)


def evaluate_rules(
    profile: AssessmentProfile,
    thresholds: DamageThresholds = DEFAULT_DAMAGE_THRESHOLDS,
) -> RuleReport:
    """Evaluate all seven rules against a valid profile.

    Args:
        profile: the assessment; must pass validate_profile.
        thresholds: monetary calibration for the damage classes.

    Returns:
        A report with exactly seven findings in R1..R7 order.

    Raises:
        InvalidProfileError: if the profile violates any invariant.
    """
    violations = validate_profile(profile)
    if violations:
        raise InvalidProfileError(violations)
    ctx = _Context(profile=profile, magnitude=attention_magnitude(profile.intervention.attention))
    ctx.classes = [(t, damage_class(t.max_damage, thresholds)) for t in profile.targets]
    ctx.risks = [(t, target_accident_risk(t)) for t in profile.targets]
    findings = (
        _eval_r1(ctx),
        _eval_r2(ctx),
        _eval_r3(ctx),
        _eval_r4(ctx),
        _eval_r5(ctx),
        _eval_r6(ctx),
        _eval_r7(ctx),
    )
    return RuleReport(findings)
