"""JSON project configuration: lexicon, scope, conflicts, severities."""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

from dilint.model import ProjectScope, Rule, Severity, canonical_dimension
from dilint.taxonomy import AttributeLexicon, ConflictRegistry, default_lexicon, load_lexicon

DEFAULT_SEVERITIES: dict[Rule, Severity] = {
    Rule.P0_PARSE_ERROR: Severity.ERROR,
    Rule.R1_TEMPLATE_COMPLETENESS: Severity.WARNING,
    Rule.R2_DI_QUALIFICATION: Severity.ERROR,
    Rule.R3_ACTIONABILITY: Severity.ERROR,
    Rule.R4_THEME_TAG: Severity.ERROR,
}

KNOWN_KEYS = ("lexicon", "aliases", "scope", "conflicts", "severities")


class ConfigError(ValueError):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass(frozen=True)
class RuleConfig:
    severities: Mapping[Rule, Severity] = field(default_factory=lambda: dict(DEFAULT_SEVERITIES))

    def __post_init__(self) -> None:
        merged = dict(DEFAULT_SEVERITIES)
        merged.update(self.severities)
        object.__setattr__(self, "severities", merged)

    def severity(self, rule: Rule) -> Severity:
        return self.severities[rule]


@dataclass(frozen=True)
class Config:
    lexicon: AttributeLexicon = field(default_factory=default_lexicon)
    scope: ProjectScope | None = None
    conflicts: ConflictRegistry = field(default_factory=ConflictRegistry.default)
    rules: RuleConfig = field(default_factory=RuleConfig)

    def __post_init__(self) -> None:
        if self.scope is None:
            object.__setattr__(
                self, "scope", ProjectScope(protected_dimensions=self.lexicon.protected_dimensions)
            )


def _string_list(value, where: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, str) and v.strip() for v in value):
        raise ConfigError("expected a list of non-empty strings", where)
    return tuple(v.strip() for v in value)


def load_scope(raw, lexicon: AttributeLexicon) -> ProjectScope:
    if raw is None:
        raw = {}
    if not isinstance(raw, Mapping):
        raise ConfigError("'scope' must be an object", "$.scope")
    lists = {
        key: _string_list(raw.get(key, []), f"$.scope.{key}")
        for key in ("roles", "processes", "artifacts")
    }
    if "protected_dimensions" in raw:
        protected = _string_list(raw["protected_dimensions"], "$.scope.protected_dimensions")
        for dim in protected:
            if canonical_dimension(dim) not in lexicon:
                raise ConfigError(f"unknown dimension {dim!r}", "$.scope.protected_dimensions")
    else:
        protected = lexicon.protected_dimensions
    return ProjectScope(protected_dimensions=protected, **lists)


def load_conflicts(raw) -> ConflictRegistry:
    if raw is None:
        return ConflictRegistry.default()
    if not isinstance(raw, list):
        raise ConfigError("'conflicts' must be a list of [a, b] pairs", "$.conflicts")
    for i, pair in enumerate(raw):
        ok = (
            isinstance(pair, list)
            and len(pair) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        )
        if not ok:
            raise ConfigError("expected a two-element integer array", f"$.conflicts[{i}]")
    try:
        return ConflictRegistry.from_pairs(raw)
    except ValueError as exc:
        raise ConfigError(str(exc), "$.conflicts") from None


def load_severities(raw) -> RuleConfig:
    if raw is None:
        return RuleConfig()
    if not isinstance(raw, Mapping):
        raise ConfigError("'severities' must be an object", "$.severities")
    out = {}
    for key, value in raw.items():
        where = f"$.severities.{key}"
        try:
            rule = Rule(str(key).upper())
        except ValueError:
            raise ConfigError(f"unknown rule {key!r}", where) from None
        try:
            out[rule] = Severity(str(value).lower())
        except ValueError:
            raise ConfigError(f"unknown severity {value!r}", where) from None
    return RuleConfig(out)


def config_from_mapping(doc: Mapping) -> Config:
    if not isinstance(doc, Mapping):
        raise ConfigError("config root must be an object", "$")
    unknown = sorted(set(doc) - set(KNOWN_KEYS))
    if unknown:
        raise ConfigError(f"unknown top-level key(s): {', '.join(unknown)}", "$")
    lexicon = load_lexicon(doc)
    return Config(
        lexicon=lexicon,
        scope=load_scope(doc.get("scope"), lexicon),
        conflicts=load_conflicts(doc.get("conflicts")),
        rules=load_severities(doc.get("severities")),
    )


def parse_config(text: str, source: str = "<config>") -> Config:
    try:
        doc = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ConfigError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None
    try:
        return config_from_mapping(doc)
    except ConfigError as exc:
        raise ConfigError(str(exc), source) from None


def load_config(path: str | Path) -> Config:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}", str(path)) from None
    return parse_config(text, str(path))


def starter_config() -> dict:
    """Config document equivalent to the built-in defaults, with empty scope lists."""
    lexicon = default_lexicon()
    return {
        "lexicon": {
            dim: {"protected": entry.protected, "terms": list(entry.terms)}
            for dim, entry in lexicon.entries.items()
        },
        "scope": {"roles": [], "processes": [], "artifacts": []},
        "conflicts": [list(pair) for pair, _ in ConflictRegistry.default().ordered()],
        "severities": {rule.value: sev.value for rule, sev in DEFAULT_SEVERITIES.items()},
    }
