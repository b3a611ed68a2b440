"""Immutable domain types shared by the parser, validator and analyzer."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class Pillar(str, Enum):
    HUMANS = "Humans"
    DATA = "Data"
    PROCESS = "Process"
    SYSTEM = "System"
    GOVERNANCE = "Governance"


class SubjectKind(str, Enum):
    ROLE = "Role"
    PROCESS = "Process"
    ARTIFACT = "Artifact"
    UNKNOWN = "Unknown"


class Origin(str, Enum):
    EXPLICIT_ANNOTATION = "ExplicitAnnotation"
    LEXICON_INFERRED = "LexiconInferred"


class Rule(str, Enum):
    R1_TEMPLATE_COMPLETENESS = "R1"
    R2_DI_QUALIFICATION = "R2"
    R3_ACTIONABILITY = "R3"
    R4_THEME_TAG = "R4"
    P0_PARSE_ERROR = "P0"


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"

    @property
    def rank(self) -> int:
        return {"info": 0, "warning": 1, "error": 2}[self.value]


THEME_IDS = range(1, 24)

_WS_RE = re.compile(r"\s+")


def normalize(text: str) -> str:
    """Collapse whitespace runs to one space and trim both ends."""
    return _WS_RE.sub(" ", text).strip()


def canonical_dimension(name: str) -> str:
    """Title-case a dimension label ("health condition" -> "Health Condition")."""
    return " ".join(w[:1].upper() + w[1:].lower() for w in normalize(name).split(" "))


def check_theme_id(theme_id: int) -> int:
    if isinstance(theme_id, bool) or not isinstance(theme_id, int) or theme_id not in THEME_IDS:
        raise ValueError(f"theme id {theme_id!r} is outside 1..23")
    return theme_id


@dataclass(frozen=True, order=True)
class Span:
    file: str
    start_line: int
    end_line: int

    def __str__(self) -> str:
        if self.start_line == self.end_line:
            return f"{self.file}:{self.start_line}"
        return f"{self.file}:{self.start_line}-{self.end_line}"


@dataclass(frozen=True)
class AttributeTag:
    dimension: str
    value: str | None = None
    origin: Origin = Origin.EXPLICIT_ANNOTATION


@dataclass(frozen=True)
class Theme:
    id: int
    pillar: Pillar
    title: str


@dataclass(frozen=True)
class UserStory:
    raw_text: str
    role_phrase: str
    subject_phrase: str
    predicate: str
    context_clause: str | None = None
    rationale: str | None = None
    subject_kind: SubjectKind = SubjectKind.UNKNOWN
    attributes: tuple[AttributeTag, ...] = ()
    themes: tuple[int, ...] = ()
    # theme ids repeated inside the annotation; themes itself stays unique
    duplicate_themes: tuple[int, ...] = ()
    span: Span = Span("<string>", 1, 1)

    def __post_init__(self) -> None:
        for name in ("role_phrase", "subject_phrase", "predicate"):
            if not normalize(getattr(self, name)):
                raise ValueError(f"UserStory.{name} must be non-empty")
        for theme_id in self.themes:
            check_theme_id(theme_id)
        if len(set(self.themes)) != len(self.themes):
            raise ValueError(f"UserStory.themes has duplicates: {self.themes}")
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "themes", tuple(self.themes))
        object.__setattr__(self, "duplicate_themes", tuple(self.duplicate_themes))

    @property
    def dimensions(self) -> tuple[str, ...]:
        """Distinct attribute dimensions in first-seen order."""
        return tuple(dict.fromkeys(tag.dimension for tag in self.attributes))


@dataclass(frozen=True)
class Diagnostic:
    rule: Rule
    severity: Severity
    span: Span
    message: str

    def sort_key(self) -> tuple:
        return (self.span, list(Rule).index(self.rule), self.message)


@dataclass(frozen=True)
class ProjectScope:
    roles: tuple[str, ...] = ()
    processes: tuple[str, ...] = ()
    artifacts: tuple[str, ...] = ()
    protected_dimensions: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "roles", tuple(self.roles))
        object.__setattr__(self, "processes", tuple(self.processes))
        object.__setattr__(self, "artifacts", tuple(self.artifacts))
        object.__setattr__(
            self,
            "protected_dimensions",
            tuple(canonical_dimension(d) for d in self.protected_dimensions),
        )

    @property
    def checked(self) -> bool:
        """False means scope-unchecked mode: actionability findings drop to info."""
        return bool(self.roles and self.processes and self.artifacts)


@dataclass(frozen=True)
class ParseOutcome:
    stories: tuple[UserStory, ...] = ()
    diagnostics: tuple[Diagnostic, ...] = ()
