"""Seeded random generators for property tests.

Everything here is driven by a caller-supplied random.Random so failures
reproduce from the seed printed in the assertion message.  Generated
profiles always satisfy validate_profile; the mutators preserve validity.
"""

from __future__ import annotations

import dataclasses
import random

from airisk import (
    AssessmentProfile,
    AttentionInterval,
    AttentionMode,
    EnergyLevel,
    HumanAttention,
    InterventionIndicators,
    KnowledgeGap,
    MaxDamage,
    Position,
    Reputational,
    SafetyDimension,
    SafetyProfile,
    TargetAssessment,
    TimeDelay,
)

_MONETARY_CHOICES = (
    0,
    50,
    99,
    100,
    200,
    5_000,
    99_999,
    100_000,
    2_000_000,
    9_999_999,
    10_000_000,
    500_000_000,
    1_000_000_000,
    5_000_000_000,
    10_000_000_000,
)


def random_max_damage(rng: random.Random) -> MaxDamage:
    monetary = rng.choice(_MONETARY_CHOICES) if rng.random() < 0.7 else None
    lives = rng.choice((0, 0, 1, 4, 120)) if rng.random() < 0.3 else None
    reputational = rng.choice(list(Reputational)) if rng.random() < 0.4 else None
    if monetary is None and lives is None and reputational is None:
        monetary = rng.choice(_MONETARY_CHOICES)
    notes = rng.choice(("", "", "adversary assumed to hold full control"))
    return MaxDamage(monetary_usd=monetary, lives_at_risk=lives, reputational=reputational, notes=notes)


def random_target(rng: random.Random, name: str) -> TargetAssessment:
    position = None
    if rng.random() < 0.3:
        position = Position(gap=round(rng.random(), 3), energy=round(rng.random(), 3))
    return TargetAssessment(
        name=name,
        max_damage=random_max_damage(rng),
        coupling=rng.randint(1, 5),
        interaction_complexity=rng.randint(1, 5),
        energy_level=rng.choice(list(EnergyLevel)),
        knowledge_gap=rng.choice(list(KnowledgeGap)),
        position=position,
    )


def random_attention(rng: random.Random) -> HumanAttention:
    if rng.random() < 0.5:
        return HumanAttention(mode=AttentionMode.PERIODIC, checks_per_day=rng.randint(1, 96))
    return HumanAttention(mode=AttentionMode.INTERMITTENT, interval=rng.choice(list(AttentionInterval)))


def random_dimension(rng: random.Random) -> SafetyDimension:
    level = rng.randint(0, 3)
    projected = None if rng.random() < 0.5 else rng.randint(level, 3)
    return SafetyDimension(level=level, projected=projected)


def random_profile(rng: random.Random) -> AssessmentProfile:
    targets = tuple(random_target(rng, f"target-{i}") for i in range(rng.randint(1, 4)))
    return AssessmentProfile(
        name=f"Generated system {rng.randrange(10**6)}",
        ai_component=rng.choice(("planner", "controller", "classifier", "chat model")),
        intervention=InterventionIndicators(
            time_delay=rng.choice(list(TimeDelay)),
            observability=rng.randint(0, 5),
            attention=random_attention(rng),
            correctability=rng.randint(0, 5),
            can_take_offline=rng.random() < 0.5,
        ),
        targets=targets,
        safety=SafetyProfile(
            autonomy=random_dimension(rng),
            goal_complexity=random_dimension(rng),
            escape_potential=random_dimension(rng),
            anthropomorphization=random_dimension(rng),
        ),
    )


def raise_one_safety_level(rng: random.Random, profile: AssessmentProfile) -> AssessmentProfile:
    """Bump one dimension's current level by one; validity is preserved."""
    names = [name for name, dim in profile.safety.dimensions() if dim.level < 3]
    if not names:
        return profile
    name = rng.choice(names)
    dim = getattr(profile.safety, name)
    bumped = SafetyDimension(level=dim.level + 1, projected=max(dim.projected, dim.level + 1))
    safety = dataclasses.replace(profile.safety, **{name: bumped})
    return dataclasses.replace(profile, safety=safety)


def raise_observability(profile: AssessmentProfile) -> AssessmentProfile:
    ind = profile.intervention
    if ind.observability >= 5:
        return profile
    return dataclasses.replace(
        profile, intervention=dataclasses.replace(ind, observability=ind.observability + 1)
    )


def append_target(rng: random.Random, profile: AssessmentProfile) -> AssessmentProfile:
    extra = random_target(rng, f"extra-{len(profile.targets)}")
    return dataclasses.replace(profile, targets=profile.targets + (extra,))
