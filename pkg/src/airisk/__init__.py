"""Risk assessment and safety-measure recommendations for deployed AI systems.

The package turns an assessment document (intervention indicators, targets
of AI control, AI-safety levels) into per-target risk results and the
findings of seven recommendation rules, with text, markdown, and machine
report formats plus an `airisk` command-line tool.
"""

from .documents import (
    AssessmentDocumentError,
    DocumentError,
    ErrorKind,
    parse_assessment,
    serialize_assessment,
)
from .model import (
    AssessmentProfile,
    AttentionInterval,
    AttentionMode,
    CouplingCategory,
    EnergyLevel,
    HumanAttention,
    InteractionCategory,
    InterventionIndicators,
    InvalidProfileError,
    KnowledgeGap,
    MaxDamage,
    Position,
    Reputational,
    SafetyDimension,
    SafetyProfile,
    TargetAssessment,
    TimeDelay,
    Violation,
    attention_magnitude,
    coupling_category,
    interaction_category,
    validate_profile,
)
from .report import (
    Calibration,
    ReportFormat,
    RiskReport,
    TargetResult,
    build_report,
    parse_machine_report,
    render_intervention_table,
    render_report,
    render_target_table,
)
from .rules import (
    Finding,
    Measure,
    RuleDefinition,
    RuleId,
    RuleReport,
    RULES,
    evaluate_rules,
)
from .tables import (
    DamageClass,
    DamagePartyProfile,
    DamageThresholds,
    DEFAULT_DAMAGE_THRESHOLDS,
    RiskLevel,
    accident_risk,
    damage_and_party,
    damage_class,
    quadrant,
)

__version__ = "0.1.0"

__all__ = [
    "AssessmentDocumentError",
    "AssessmentProfile",
    "AttentionInterval",
    "AttentionMode",
    "Calibration",
    "CouplingCategory",
    "DamageClass",
    "DamagePartyProfile",
    "DamageThresholds",
    "DEFAULT_DAMAGE_THRESHOLDS",
    "DocumentError",
    "EnergyLevel",
    "ErrorKind",
    "Finding",
    "HumanAttention",
    "InteractionCategory",
    "InterventionIndicators",
    "InvalidProfileError",
    "KnowledgeGap",
    "MaxDamage",
    "Measure",
    "Position",
    "Reputational",
    "ReportFormat",
    "RiskLevel",
    "RiskReport",
    "RuleDefinition",
    "RuleId",
    "RuleReport",
    "RULES",
    "SafetyDimension",
    "SafetyProfile",
    "TargetAssessment",
    "TargetResult",
    "TimeDelay",
    "Violation",
    "accident_risk",
    "attention_magnitude",
    "build_report",
    "coupling_category",
    "damage_and_party",
    "damage_class",
    "evaluate_rules",
    "interaction_category",
    "parse_assessment",
    "parse_machine_report",
    "quadrant",
    "render_intervention_table",
    "render_report",
    "render_target_table",
    "serialize_assessment",
    "validate_profile",
]
