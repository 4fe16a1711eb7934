"""Domain model for AI-system risk assessments.

An assessment profile describes one AI system: the indicators that govern
whether a human can intervene before an incident becomes an accident, the
targets the AI's outputs affect, and the four AI-safety levels.

Constructors accept out-of-range values on purpose.  ``validate_profile``
is the single authority on invariants and reports every violation at once,
so callers can surface all problems in one pass instead of fixing them one
at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

SCHEMA_VERSION = 1


class TimeDelay(str, Enum):
    """How long the system's actions take to produce their effects."""

    MILLISECONDS = "milliseconds"
    SECONDS = "seconds"
    MINUTES = "minutes"
    HOURS = "hours"
    DAYS = "days"
    WEEKS = "weeks"
    MONTHS = "months"


class AttentionInterval(str, Enum):
    """Typical gap between one human check on the system and the next."""

    MINUTES = "minutes"
    HOURS = "hours"
    DAYS = "days"
    WEEKS = "weeks"
    MONTHS = "months"


class AttentionMode(str, Enum):
    PERIODIC = "periodic"
    INTERMITTENT = "intermittent"


class Reputational(str, Enum):
    NONE = "none"
    MINOR = "minor"
    MAJOR = "major"


class EnergyLevel(str, Enum):
    """Magnitude of energy (or an analogue) the enclosing system commands."""

    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class KnowledgeGap(str, Enum):
    """Distance between how well the technology is understood and its deployment scale."""

    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class CouplingCategory(str, Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


class InteractionCategory(str, Enum):
    LINEAR = "Linear"
    MODERATE = "Moderate"
    COMPLEX = "Complex"


# Ordinal positions for the enums whose declaration order is meaningful.
TIME_DELAY_RANK = {v: i for i, v in enumerate(TimeDelay)}
ATTENTION_RANK = {v: i for i, v in enumerate(AttentionInterval)}
REPUTATIONAL_RANK = {v: i for i, v in enumerate(Reputational)}


@dataclass(frozen=True)
class HumanAttention:
    """How often a human looks at the system: periodic checks or intermittent gaps."""

    mode: AttentionMode
    checks_per_day: int | None = None
    interval: AttentionInterval | None = None


@dataclass(frozen=True)
class InterventionIndicators:
    """The four timely-intervention factors plus whether the system can be shut down."""

    time_delay: TimeDelay
    observability: int
    attention: HumanAttention
    correctability: int
    can_take_offline: bool


@dataclass(frozen=True)
class MaxDamage:
    """Worst-case harm estimate, imagined as an adversary in full control.

    A field that is None was not declared by the assessor; an explicit zero
    is a declared judgment that the harm is nil.  At least one of the three
    quantified fields must be declared for the estimate to be valid.
    """

    monetary_usd: float | None = None
    lives_at_risk: int | None = None
    reputational: Reputational | None = None
    notes: str = ""


@dataclass(frozen=True)
class Position:
    """Continuous knowledge-gap / energy coordinates on the unit square."""

    gap: float
    energy: float


@dataclass(frozen=True)
class TargetAssessment:
    """One thing the AI's outputs affect, with its system-risk factors."""

    name: str
    max_damage: MaxDamage
    coupling: int
    interaction_complexity: int
    energy_level: EnergyLevel
    knowledge_gap: KnowledgeGap
    position: Position | None = None


@dataclass(frozen=True)
class SafetyDimension:
    """Current level 0-3 plus the level the system may reach as deployed."""

    level: int
    projected: int | None = None

    def __post_init__(self) -> None:
        # Omitted projection means "no growth expected".
        if self.projected is None:
            object.__setattr__(self, "projected", self.level)


@dataclass(frozen=True)
class SafetyProfile:
    autonomy: SafetyDimension
    goal_complexity: SafetyDimension
    escape_potential: SafetyDimension
    anthropomorphization: SafetyDimension

    def dimensions(self) -> tuple[tuple[str, SafetyDimension], ...]:
        """All four dimensions as (name, dimension), in declaration order."""
        return (
            ("autonomy", self.autonomy),
            ("goal_complexity", self.goal_complexity),
            ("escape_potential", self.escape_potential),
            ("anthropomorphization", self.anthropomorphization),
        )


@dataclass(frozen=True)
class AssessmentProfile:
    """The full description of one AI system under assessment."""

    name: str
    ai_component: str
    intervention: InterventionIndicators
    targets: tuple[TargetAssessment, ...]
    safety: SafetyProfile
    schema_version: int = SCHEMA_VERSION


@dataclass(frozen=True)
class Violation:
    """One failed invariant: where it failed and why."""

    path: str
    message: str


class InvalidProfileError(ValueError):
    """Raised when an operation requires a profile that passes validation."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        detail = "; ".join(f"{v.path}: {v.message}" for v in self.violations)
        super().__init__(f"invalid assessment profile: {detail}")


def _check_range(out: list[Violation], path: str, value: float, lo: int, hi: int) -> bool:
    if not lo <= value <= hi:
        out.append(Violation(path, f"must be between {lo} and {hi}, got {value!r}"))
        return False
    return True


def _validate_attention(out: list[Violation], att: HumanAttention) -> None:
    prefix = "intervention.attention"
    if att.mode is AttentionMode.PERIODIC:
        if att.checks_per_day is None:
            out.append(Violation(f"{prefix}.checks_per_day", "required when mode is periodic"))
        elif att.checks_per_day < 1:
            out.append(Violation(f"{prefix}.checks_per_day", f"must be at least 1, got {att.checks_per_day!r}"))
        if att.interval is not None:
            out.append(Violation(f"{prefix}.interval", "not allowed when mode is periodic"))
    else:
        if att.interval is None:
            out.append(Violation(f"{prefix}.interval", "required when mode is intermittent"))
        if att.checks_per_day is not None:
            out.append(Violation(f"{prefix}.checks_per_day", "not allowed when mode is intermittent"))


def _validate_target(out: list[Violation], prefix: str, target: TargetAssessment) -> None:
    d = target.max_damage
    if d.monetary_usd is None and d.lives_at_risk is None and d.reputational is None:
        out.append(
            Violation(
                f"{prefix}.max_damage",
                "at least one of monetary_usd, lives_at_risk, reputational must be declared",
            )
        )
    if d.monetary_usd is not None and not d.monetary_usd >= 0:
        out.append(Violation(f"{prefix}.max_damage.monetary_usd", f"must be non-negative, got {d.monetary_usd!r}"))
    if d.lives_at_risk is not None and d.lives_at_risk < 0:
        out.append(Violation(f"{prefix}.max_damage.lives_at_risk", f"must be non-negative, got {d.lives_at_risk!r}"))
    _check_range(out, f"{prefix}.coupling", target.coupling, 1, 5)
    _check_range(out, f"{prefix}.interaction_complexity", target.interaction_complexity, 1, 5)
    if target.position is not None:
        for axis in ("gap", "energy"):
            value = getattr(target.position, axis)
            if not 0 <= value <= 1:
                out.append(Violation(f"{prefix}.position.{axis}", f"must be between 0 and 1, got {value!r}"))


def validate_profile(profile: AssessmentProfile) -> list[Violation]:
    """Check every invariant of the profile and report all violations.

    Args:
        profile: any structurally well-formed profile, valid or not.

    Returns:
        All violations in deterministic field order; empty iff the profile
        satisfies every invariant.
    """
    out: list[Violation] = []
    ind = profile.intervention
    _check_range(out, "intervention.observability", ind.observability, 0, 5)
    _validate_attention(out, ind.attention)
    _check_range(out, "intervention.correctability", ind.correctability, 0, 5)

    if not profile.targets:
        out.append(Violation("targets", "at least one target is required"))
    seen: set[str] = set()
    for i, target in enumerate(profile.targets):
        prefix = f"targets[{i}]"
        if target.name in seen:
            out.append(Violation(f"{prefix}.name", f"duplicate target name {target.name!r}"))
        seen.add(target.name)
        _validate_target(out, prefix, target)

    for name, dim in profile.safety.dimensions():
        prefix = f"safety.{name}"
        _check_range(out, f"{prefix}.level", dim.level, 0, 3)
        projected = dim.projected if dim.projected is not None else dim.level
        _check_range(out, f"{prefix}.projected", projected, 0, 3)
        if dim.level > projected:
            out.append(Violation(f"{prefix}.projected", f"must be at least the current level {dim.level}"))
    return out


def _band(score: int, what: str) -> int:
    # Scores 1-5 fold into three bands: 1-2 low, 3 middle, 4-5 high.
    if not 1 <= score <= 5:
        raise ValueError(f"{what} must be between 1 and 5, got {score!r}")
    if score <= 2:
        return 0
    if score == 3:
        return 1
    return 2


def coupling_category(score: int) -> CouplingCategory:
    """Band a 1-5 coupling score into the accident-risk table's row labels."""
    return list(CouplingCategory)[_band(score, "coupling score")]


def interaction_category(score: int) -> InteractionCategory:
    """Band a 1-5 interaction-complexity score into the table's column labels."""
    return list(InteractionCategory)[_band(score, "interaction complexity score")]


def attention_magnitude(attention: HumanAttention) -> AttentionInterval:
    """Collapse an attention spec to the typical gap between human checks.

    Intermittent attention keeps its interval; periodic attention (one or
    more checks per day) means gaps of at most hours.
    """
    if attention.mode is AttentionMode.INTERMITTENT:
        if attention.interval is None:
            raise ValueError("intermittent attention requires an interval")
        return attention.interval
    if attention.checks_per_day is None or attention.checks_per_day < 1:
        raise ValueError("periodic attention requires checks_per_day >= 1")
    return AttentionInterval.HOURS
