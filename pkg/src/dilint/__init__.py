"""Parser, linter and coverage analyser for diversity & inclusion user stories."""

from dilint.analyzer import attribute_distribution, conflict_findings, coverage_report
from dilint.config import Config, ConfigError, RuleConfig, load_config
from dilint.model import (
    AttributeTag,
    Diagnostic,
    Origin,
    Pillar,
    ProjectScope,
    Rule,
    Severity,
    Span,
    SubjectKind,
    Theme,
    UserStory,
    normalize,
)
from dilint.parser import ParseError, parse_annotation, parse_corpus, parse_story, render_story
from dilint.taxonomy import (
    AttributeLexicon,
    ConflictRegistry,
    default_lexicon,
    infer_attributes,
    load_lexicon,
    pillar_of,
    theme_by_id,
)
from dilint.validator import lint

__version__ = "0.1.0"

__all__ = [
    "AttributeLexicon",
    "AttributeTag",
    "Config",
    "ConfigError",
    "ConflictRegistry",
    "Diagnostic",
    "Origin",
    "ParseError",
    "Pillar",
    "ProjectScope",
    "Rule",
    "RuleConfig",
    "Severity",
    "Span",
    "SubjectKind",
    "Theme",
    "UserStory",
    "attribute_distribution",
    "conflict_findings",
    "coverage_report",
    "default_lexicon",
    "infer_attributes",
    "lint",
    "load_config",
    "load_lexicon",
    "normalize",
    "parse_annotation",
    "parse_corpus",
    "parse_story",
    "pillar_of",
    "render_story",
    "theme_by_id",
]
