"""Reading and writing assessment documents.

The on-disk format is a single UTF-8 JSON document whose fields mirror the
model types one for one; all enum values are lowercase strings.  Writing is
canonical: fixed key order, two-space indentation, a trailing newline, and
no optional fields at their default values, so equal profiles always
produce identical bytes.

Object keys equal to ``//`` are annotations for human readers; parsers
skip them in both modes and the serializer never emits them.

Parsing never partially succeeds: the decoder accumulates every problem it
can find and raises ``AssessmentDocumentError`` carrying the full list.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable

from .model import (
    SCHEMA_VERSION,
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
    validate_profile,
)

COMMENT_KEY = "//"

_MISSING = object()


class ErrorKind(str, Enum):
    SYNTAX = "syntax"
    UNKNOWN_FIELD = "unknown_field"
    MISSING_FIELD = "missing_field"
    TYPE_MISMATCH = "type_mismatch"
    INVARIANT_VIOLATION = "invariant_violation"


@dataclass(frozen=True)
class DocumentError:
    """One problem found while decoding a document."""

    kind: ErrorKind
    path: str
    message: str
    line: int | None = None


def format_document_error(err: DocumentError) -> str:
    """One-line diagnostic, e.g. "intervention.observability: must be an integer"."""
    body = err.message if err.path in ("", "$") else f"{err.path}: {err.message}"
    if err.line is not None:
        return f"line {err.line}: {body}"
    return body


class AssessmentDocumentError(Exception):
    """Raised when document bytes cannot become a valid profile."""

    def __init__(self, errors: list[DocumentError]):
        self.errors = tuple(errors)
        summary = "; ".join(format_document_error(e) for e in self.errors[:3])
        if len(self.errors) > 3:
            summary += f" (+{len(self.errors) - 3} more)"
        super().__init__(summary)


class _Decoder:
    """Accumulates errors and warnings while walking the document tree."""

    def __init__(self, strict: bool):
        self.strict = strict
        self.errors: list[DocumentError] = []
        self.warnings: list[DocumentError] = []

    def error(self, kind: ErrorKind, path: str, message: str) -> None:
        self.errors.append(DocumentError(kind, path, message))

    def scan_keys(self, obj: dict, prefix: str, allowed: set[str]) -> None:
        for key in obj:
            if key == COMMENT_KEY or key in allowed:
                continue
            path = f"{prefix}.{key}" if prefix else str(key)
            err = DocumentError(ErrorKind.UNKNOWN_FIELD, path, "unknown field")
            (self.errors if self.strict else self.warnings).append(err)

    # -- field decoders; every None return records an error first --

    def _fetch(self, obj: dict, key: str, path: str, required: bool) -> Any:
        value = obj.get(key, _MISSING)
        if value is _MISSING and required:
            self.error(ErrorKind.MISSING_FIELD, path, "required field is missing")
        return value

    def decode_str(self, obj: dict, key: str, path: str, required: bool = True) -> str | None:
        value = self._fetch(obj, key, path, required)
        if value is _MISSING:
            return None
        if not isinstance(value, str):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be a string")
            return None
        return value

    def decode_int(self, obj: dict, key: str, path: str, required: bool = True) -> int | None:
        value = self._fetch(obj, key, path, required)
        if value is _MISSING:
            return None
        if not isinstance(value, int) or isinstance(value, bool):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an integer")
            return None
        return value

    def decode_number(self, obj: dict, key: str, path: str, required: bool = True) -> float | None:
        value = self._fetch(obj, key, path, required)
        if value is _MISSING:
            return None
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be a number")
            return None
        if not math.isfinite(value):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be a finite number")
            return None
        return value

    def decode_bool(self, obj: dict, key: str, path: str) -> bool | None:
        value = self._fetch(obj, key, path, required=True)
        if value is _MISSING:
            return None
        if not isinstance(value, bool):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be true or false")
            return None
        return value

    def decode_enum(self, obj: dict, key: str, path: str, enum_cls, required: bool = True):
        value = self.decode_str(obj, key, path, required)
        if value is None:
            return None
        try:
            return enum_cls(value)
        except ValueError:
            allowed = ", ".join(v.value for v in enum_cls)
            self.error(ErrorKind.TYPE_MISMATCH, path, f"must be one of: {allowed}")
            return None

    def decode_object(self, obj: dict, key: str, path: str, decode: Callable) -> Any:
        value = self._fetch(obj, key, path, required=True)
        if value is _MISSING:
            return None
        return decode(value, path)

    # -- structure decoders --

    def decode_attention(self, obj: Any, path: str) -> HumanAttention | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an object")
            return None
        self.scan_keys(obj, path, {"mode", "checks_per_day", "interval"})
        mode = self.decode_enum(obj, "mode", f"{path}.mode", AttentionMode)
        checks = self.decode_int(obj, "checks_per_day", f"{path}.checks_per_day", required=False)
        interval = self.decode_enum(obj, "interval", f"{path}.interval", AttentionInterval, required=False)
        if mode is None:
            return None
        return HumanAttention(mode=mode, checks_per_day=checks, interval=interval)

    def decode_intervention(self, obj: Any, path: str) -> InterventionIndicators | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an object")
            return None
        keys = {"time_delay", "observability", "attention", "correctability", "can_take_offline"}
        self.scan_keys(obj, path, keys)
        time_delay = self.decode_enum(obj, "time_delay", f"{path}.time_delay", TimeDelay)
        observability = self.decode_int(obj, "observability", f"{path}.observability")
        attention = self.decode_object(obj, "attention", f"{path}.attention", self.decode_attention)
        correctability = self.decode_int(obj, "correctability", f"{path}.correctability")
        offline = self.decode_bool(obj, "can_take_offline", f"{path}.can_take_offline")
        if None in (time_delay, observability, attention, correctability, offline):
            return None
        return InterventionIndicators(
            time_delay=time_delay,
            observability=observability,
            attention=attention,
            correctability=correctability,
            can_take_offline=offline,
        )

    def decode_max_damage(self, obj: Any, path: str) -> MaxDamage | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an object")
            return None
        self.scan_keys(obj, path, {"monetary_usd", "lives_at_risk", "reputational", "notes"})
        monetary = self.decode_number(obj, "monetary_usd", f"{path}.monetary_usd", required=False)
        lives = self.decode_int(obj, "lives_at_risk", f"{path}.lives_at_risk", required=False)
        reputational = self.decode_enum(obj, "reputational", f"{path}.reputational", Reputational, required=False)
        notes = self.decode_str(obj, "notes", f"{path}.notes", required=False)
        return MaxDamage(
            monetary_usd=monetary,
            lives_at_risk=lives,
            reputational=reputational,
            notes=notes if notes is not None else "",
        )

    def decode_position(self, obj: Any, path: str) -> Position | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an object")
            return None
        self.scan_keys(obj, path, {"gap", "energy"})
        gap = self.decode_number(obj, "gap", f"{path}.gap")
        energy = self.decode_number(obj, "energy", f"{path}.energy")
        if gap is None or energy is None:
            return None
        return Position(gap=float(gap), energy=float(energy))

    def decode_target(self, obj: Any, path: str) -> TargetAssessment | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an object")
            return None
        keys = {
            "name",
            "max_damage",
            "coupling",
            "interaction_complexity",
            "energy_level",
            "knowledge_gap",
            "position",
        }
        self.scan_keys(obj, path, keys)
        name = self.decode_str(obj, "name", f"{path}.name")
        max_damage = self.decode_object(obj, "max_damage", f"{path}.max_damage", self.decode_max_damage)
        coupling = self.decode_int(obj, "coupling", f"{path}.coupling")
        interaction = self.decode_int(obj, "interaction_complexity", f"{path}.interaction_complexity")
        energy = self.decode_enum(obj, "energy_level", f"{path}.energy_level", EnergyLevel)
        gap = self.decode_enum(obj, "knowledge_gap", f"{path}.knowledge_gap", KnowledgeGap)
        position = None
        if obj.get("position", _MISSING) is not _MISSING:
            position = self.decode_position(obj["position"], f"{path}.position")
        if None in (name, max_damage, coupling, interaction, energy, gap):
            return None
        return TargetAssessment(
            name=name,
            max_damage=max_damage,
            coupling=coupling,
            interaction_complexity=interaction,
            energy_level=energy,
            knowledge_gap=gap,
            position=position,
        )

    def decode_dimension(self, obj: Any, path: str) -> SafetyDimension | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an object")
            return None
        self.scan_keys(obj, path, {"level", "projected"})
        level = self.decode_int(obj, "level", f"{path}.level")
        projected = self.decode_int(obj, "projected", f"{path}.projected", required=False)
        if level is None:
            return None
        return SafetyDimension(level=level, projected=projected)

    def decode_safety(self, obj: Any, path: str) -> SafetyProfile | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, path, "must be an object")
            return None
        names = ("autonomy", "goal_complexity", "escape_potential", "anthropomorphization")
        self.scan_keys(obj, path, set(names))
        dims = {name: self.decode_object(obj, name, f"{path}.{name}", self.decode_dimension) for name in names}
        if any(d is None for d in dims.values()):
            return None
        return SafetyProfile(**dims)

    def decode_profile(self, obj: Any) -> AssessmentProfile | None:
        if not isinstance(obj, dict):
            self.error(ErrorKind.TYPE_MISMATCH, "$", "document must be a JSON object")
            return None
        keys = {"schema_version", "name", "ai_component", "intervention", "targets", "safety"}
        self.scan_keys(obj, "", keys)
        version = self.decode_int(obj, "schema_version", "schema_version")
        if version is not None and version != SCHEMA_VERSION:
            if version > SCHEMA_VERSION:
                message = (
                    f"document version {version} is newer than this tool supports "
                    f"(expected schema_version {SCHEMA_VERSION})"
                )
            else:
                message = f"unsupported schema_version {version} (expected {SCHEMA_VERSION})"
            self.error(ErrorKind.INVARIANT_VIOLATION, "schema_version", message)
        name = self.decode_str(obj, "name", "name")
        ai_component = self.decode_str(obj, "ai_component", "ai_component")
        intervention = self.decode_object(obj, "intervention", "intervention", self.decode_intervention)
        targets = self.decode_targets(obj)
        safety = self.decode_object(obj, "safety", "safety", self.decode_safety)
        if self.errors:
            return None
        return AssessmentProfile(
            name=name,
            ai_component=ai_component,
            intervention=intervention,
            targets=targets,
            safety=safety,
            schema_version=version,
        )

    def decode_targets(self, obj: dict) -> tuple[TargetAssessment, ...]:
        value = self._fetch(obj, "targets", "targets", required=True)
        if value is _MISSING:
            return ()
        if not isinstance(value, list):
            self.error(ErrorKind.TYPE_MISMATCH, "targets", "must be an array")
            return ()
        decoded = [self.decode_target(el, f"targets[{i}]") for i, el in enumerate(value)]
        return tuple(t for t in decoded if t is not None)


def _load_json(data: bytes | str, dec: _Decoder) -> Any:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            dec.error(ErrorKind.SYNTAX, "", f"not valid UTF-8 ({e.reason} at byte {e.start})")
            return None
    else:
        text = data
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        dec.errors.append(DocumentError(ErrorKind.SYNTAX, "", e.msg, e.lineno))
        return None
    except RecursionError:
        dec.error(ErrorKind.SYNTAX, "", "document nesting is too deep")
        return None


def parse_assessment(
    data: bytes | str,
    *,
    strict: bool = False,
    validate: bool = True,
    warnings: list[DocumentError] | None = None,
) -> AssessmentProfile:
    """Decode an assessment document.

    Args:
        data: document bytes or text.
        strict: treat unknown fields as errors instead of warnings.
        validate: also enforce profile invariants (range checks, required
            combinations); disable to inspect structurally sound but
            invalid documents.
        warnings: optional list that collects non-strict warnings.

    Returns:
        The decoded profile.

    Raises:
        AssessmentDocumentError: carrying every DocumentError found.
    """
    dec = _Decoder(strict)
    obj = _load_json(data, dec)
    profile = None
    if not dec.errors:
        profile = dec.decode_profile(obj)
    if dec.errors:
        raise AssessmentDocumentError(dec.errors)
    if warnings is not None:
        warnings.extend(dec.warnings)
    if validate:
        violations = validate_profile(profile)
        if violations:
            raise AssessmentDocumentError(
                [DocumentError(ErrorKind.INVARIANT_VIOLATION, v.path, v.message) for v in violations]
            )
    return profile


def canonical_json_bytes(obj: Any) -> bytes:
    """Serialize any JSON-ready structure in the canonical document style."""
    return (json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n").encode("utf-8")


def attention_to_obj(att: HumanAttention) -> dict:
    out: dict[str, Any] = {"mode": att.mode.value}
    if att.checks_per_day is not None:
        out["checks_per_day"] = att.checks_per_day
    if att.interval is not None:
        out["interval"] = att.interval.value
    return out


def intervention_to_obj(ind: InterventionIndicators) -> dict:
    return {
        "time_delay": ind.time_delay.value,
        "observability": ind.observability,
        "attention": attention_to_obj(ind.attention),
        "correctability": ind.correctability,
        "can_take_offline": ind.can_take_offline,
    }


def max_damage_to_obj(d: MaxDamage) -> dict:
    out: dict[str, Any] = {}
    if d.monetary_usd is not None:
        out["monetary_usd"] = d.monetary_usd
    if d.lives_at_risk is not None:
        out["lives_at_risk"] = d.lives_at_risk
    if d.reputational is not None:
        out["reputational"] = d.reputational.value
    if d.notes:
        out["notes"] = d.notes
    return out


def target_to_obj(target: TargetAssessment) -> dict:
    out: dict[str, Any] = {
        "name": target.name,
        "max_damage": max_damage_to_obj(target.max_damage),
        "coupling": target.coupling,
        "interaction_complexity": target.interaction_complexity,
        "energy_level": target.energy_level.value,
        "knowledge_gap": target.knowledge_gap.value,
    }
    if target.position is not None:
        out["position"] = {"gap": target.position.gap, "energy": target.position.energy}
    return out


def dimension_to_obj(dim: SafetyDimension) -> dict:
    out: dict[str, Any] = {"level": dim.level}
    if dim.projected != dim.level:
        out["projected"] = dim.projected
    return out


def safety_to_obj(safety: SafetyProfile) -> dict:
    return {name: dimension_to_obj(dim) for name, dim in safety.dimensions()}


def profile_to_obj(profile: AssessmentProfile) -> dict:
    return {
        "schema_version": profile.schema_version,
        "name": profile.name,
        "ai_component": profile.ai_component,
        "intervention": intervention_to_obj(profile.intervention),
        "targets": [target_to_obj(t) for t in profile.targets],
        "safety": safety_to_obj(profile.safety),
    }


def serialize_assessment(profile: AssessmentProfile) -> bytes:
    """Write a valid profile as canonical document bytes."""
    return canonical_json_bytes(profile_to_obj(profile))


def intervention_from_obj(obj: Any) -> InterventionIndicators:
    """Strictly rebuild indicators from their object form; raises ValueError."""
    dec = _Decoder(strict=True)
    result = dec.decode_intervention(obj, "intervention")
    if dec.errors:
        raise ValueError(format_document_error(dec.errors[0]))
    return result


def safety_from_obj(obj: Any) -> SafetyProfile:
    """Strictly rebuild a safety profile from its object form; raises ValueError."""
    dec = _Decoder(strict=True)
    result = dec.decode_safety(obj, "safety")
    if dec.errors:
        raise ValueError(format_document_error(dec.errors[0]))
    return result
