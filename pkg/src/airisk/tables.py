"""Decision tables mapping schema factors to risk results.

Two exact 3x3 lookups drive the recommendation rules: coupling category x
interaction category yields the accident-risk level, and energy level x
knowledge gap yields the damage magnitude together with the party degree,
i.e. how far from the system its victims sit (1st parties operate it, 2nd
parties work alongside or use it, 3rd parties are bystanders, 4th parties
are future generations).

A five-class damage ordinal classifies max-damage estimates so the rules
can speak of "trivial" and "high damage potential" targets; its monetary
cutoffs are calibration constants, not lookups, and can be overridden.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import (
    CouplingCategory,
    EnergyLevel,
    InteractionCategory,
    KnowledgeGap,
    MaxDamage,
    Reputational,
    TargetAssessment,
    coupling_category,
    interaction_category,
)


class RiskLevel(str, Enum):
    """Severity scale shared by accident risk and damage magnitude."""

    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"
    CATASTROPHIC = "Catastrophic"

    @property
    def letter(self) -> str:
        """Single-letter table code (L/M/H/C)."""
        return self.value[0]


class DamageClass(str, Enum):
    """How bad a max-damage estimate is, from nothing to worst imaginable."""

    NEGLIGIBLE = "Negligible"
    MINOR = "Minor"
    MAJOR = "Major"
    SEVERE = "Severe"
    CATASTROPHIC = "Catastrophic"


RISK_RANK = {v: i for i, v in enumerate(RiskLevel)}
DAMAGE_CLASS_RANK = {v: i for i, v in enumerate(DamageClass)}


@dataclass(frozen=True)
class DamagePartyProfile:
    """Damage magnitude plus the most distant party it can reach."""

    damage: RiskLevel
    party_degree: int

    @property
    def code(self) -> str:
        """Compact table code, e.g. "M4"."""
        return f"{self.damage.letter}{self.party_degree}"


_L, _M, _H, _C = RiskLevel.LOW, RiskLevel.MEDIUM, RiskLevel.HIGH, RiskLevel.CATASTROPHIC

# Accident severity by coupling (rows) and interaction complexity (columns).
ACCIDENT_RISK_TABLE: dict[tuple[CouplingCategory, InteractionCategory], RiskLevel] = {
    (CouplingCategory.HIGH, InteractionCategory.LINEAR): _M,
    (CouplingCategory.HIGH, InteractionCategory.MODERATE): _H,
    (CouplingCategory.HIGH, InteractionCategory.COMPLEX): _C,
    (CouplingCategory.MEDIUM, InteractionCategory.LINEAR): _L,
    (CouplingCategory.MEDIUM, InteractionCategory.MODERATE): _M,
    (CouplingCategory.MEDIUM, InteractionCategory.COMPLEX): _H,
    (CouplingCategory.LOW, InteractionCategory.LINEAR): _L,
    (CouplingCategory.LOW, InteractionCategory.MODERATE): _L,
    (CouplingCategory.LOW, InteractionCategory.COMPLEX): _M,
}

# Damage magnitude and party degree by energy level (rows) and knowledge gap (columns).
DAMAGE_PARTY_TABLE: dict[tuple[EnergyLevel, KnowledgeGap], DamagePartyProfile] = {
    (EnergyLevel.HIGH, KnowledgeGap.LOW): DamagePartyProfile(_H, 3),
    (EnergyLevel.HIGH, KnowledgeGap.MEDIUM): DamagePartyProfile(_H, 3),
    (EnergyLevel.HIGH, KnowledgeGap.HIGH): DamagePartyProfile(_C, 4),
    (EnergyLevel.MEDIUM, KnowledgeGap.LOW): DamagePartyProfile(_M, 3),
    (EnergyLevel.MEDIUM, KnowledgeGap.MEDIUM): DamagePartyProfile(_M, 3),
    (EnergyLevel.MEDIUM, KnowledgeGap.HIGH): DamagePartyProfile(_H, 4),
    (EnergyLevel.LOW, KnowledgeGap.LOW): DamagePartyProfile(_L, 2),
    (EnergyLevel.LOW, KnowledgeGap.MEDIUM): DamagePartyProfile(_L, 2),
    (EnergyLevel.LOW, KnowledgeGap.HIGH): DamagePartyProfile(_M, 4),
}


def accident_risk(coupling: CouplingCategory, interaction: InteractionCategory) -> RiskLevel:
    """Look up the accident severity for a coupling/interaction pair."""
    return ACCIDENT_RISK_TABLE[(CouplingCategory(coupling), InteractionCategory(interaction))]


def damage_and_party(energy: EnergyLevel, gap: KnowledgeGap) -> DamagePartyProfile:
    """Look up damage magnitude and party degree for an energy/gap pair."""
    return DAMAGE_PARTY_TABLE[(EnergyLevel(energy), KnowledgeGap(gap))]


def target_accident_risk(target: TargetAssessment) -> RiskLevel:
    """Accident risk for one target, banding its raw 1-5 scores first."""
    return accident_risk(
        coupling_category(target.coupling),
        interaction_category(target.interaction_complexity),
    )


def target_damage_party(target: TargetAssessment) -> DamagePartyProfile:
    """Damage/party profile for one target."""
    return damage_and_party(target.energy_level, target.knowledge_gap)


def quadrant(gap: float, energy: float) -> int:
    """Locate continuous gap/energy coordinates on the four-quadrant grid.

    Quadrants are numbered 1 upper-left, 2 upper-right, 3 lower-left,
    4 lower-right, with gap increasing rightward and energy upward.
    Values of exactly 0.5 fall to the low side of their axis.
    """
    for axis, value in (("gap", gap), ("energy", energy)):
        if not 0 <= value <= 1:
            raise ValueError(f"{axis} must be between 0 and 1, got {value!r}")
    if energy > 0.5:
        return 2 if gap > 0.5 else 1
    return 4 if gap > 0.5 else 3


@dataclass(frozen=True)
class DamageThresholds:
    """Monetary cutoffs (USD) at which a max-damage estimate enters each class."""

    minor: float = 100.0
    major: float = 100_000.0
    severe: float = 10_000_000.0
    catastrophic: float = 1_000_000_000.0

    def __post_init__(self) -> None:
        if not self.minor <= self.major <= self.severe <= self.catastrophic:
            raise ValueError("damage thresholds must be non-decreasing")


DEFAULT_DAMAGE_THRESHOLDS = DamageThresholds()


def damage_class(d: MaxDamage, thresholds: DamageThresholds = DEFAULT_DAMAGE_THRESHOLDS) -> DamageClass:
    """Classify a max-damage estimate; undeclared fields count as no harm.

    Any lives at risk force Catastrophic: there is no exchange rate between
    money and lives, so the classification stays conservative.  Major
    reputational damage alone reaches Severe, minor alone reaches Minor.
    """
    monetary = d.monetary_usd or 0
    reputational = d.reputational or Reputational.NONE
    if (d.lives_at_risk or 0) > 0 or monetary >= thresholds.catastrophic:
        return DamageClass.CATASTROPHIC
    if monetary >= thresholds.severe or reputational is Reputational.MAJOR:
        return DamageClass.SEVERE
    if monetary >= thresholds.major:
        return DamageClass.MAJOR
    if monetary >= thresholds.minor or reputational is Reputational.MINOR:
        return DamageClass.MINOR
    return DamageClass.NEGLIGIBLE
