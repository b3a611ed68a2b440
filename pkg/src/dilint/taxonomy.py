"""Theme registry, pillar partition, attribute lexicon and conflict pairs."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

from dilint.model import (
    AttributeTag,
    Origin,
    Pillar,
    Theme,
    canonical_dimension,
    check_theme_id,
)

_TITLES = (
    "AI Lifecycle: Representation, Diversity, and Inclusion",
    "AI Stakeholder: Engagement and Collaboration",
    "AI Context: Awareness and Conflict Management",
    "AI Foundations: Socio-technical Approach",
    "AI Education: Inclusive Infrastructure and Training",
    "AI Opportunities: Equitable Practices and Challenges",
    "AI Challenges: Inclusion Aspects",
    "AI Data: Transparency and Explainability",
    "AI Data Security: Privacy, Sovereignty, and Infrastructure",
    "AI Data Modelling: Selection and Development",
    "AI Data Management: Documentation and Examination",
    "AI Data Analysis: Bias and Inequity",
    "AI Data Traits: Demographic Considerations",
    "AI Analysis: Bias and Marginalization",
    "AI Performance: Evaluation, Monitoring, and Refinement",
    "AI Design: Trade-offs Considerations",
    "AI System Design: Inclusive Design and Development",
    "AI Awareness: Bias Recognition and Understanding",
    "AI Tools Evaluation: Bias and Representation",
    "AI System Usability: Accessibility Assessment",
    "AI Strategy: Policy and Governance",
    "AI Safety Protocols: Risk Management and Standards",
    "AI Ethical Directives: Equity, Diversity, and Inclusion Principles",
)

# Theme 20 sits under Governance in the table even though the surrounding
# prose discusses it alongside the System pillar; the table wins here.
PILLAR_SIZES = {
    Pillar.HUMANS: 7,
    Pillar.DATA: 6,
    Pillar.PROCESS: 3,
    Pillar.SYSTEM: 3,
    Pillar.GOVERNANCE: 4,
}


def _build_themes() -> tuple[Theme, ...]:
    themes = []
    titles = iter(_TITLES)
    theme_id = 1
    for pillar, size in PILLAR_SIZES.items():
        for _ in range(size):
            themes.append(Theme(theme_id, pillar, next(titles)))
            theme_id += 1
    return tuple(themes)


THEMES: tuple[Theme, ...] = _build_themes()

assert len(THEMES) == 23 and sum(PILLAR_SIZES.values()) == 23
assert [t.id for t in THEMES] == list(range(1, 24))


def theme_by_id(theme_id: int) -> Theme:
    check_theme_id(theme_id)
    return THEMES[theme_id - 1]


def pillar_of(theme_id: int) -> Pillar:
    return theme_by_id(theme_id).pillar


def themes_in(pillar: Pillar) -> tuple[Theme, ...]:
    return tuple(t for t in THEMES if t.pillar is pillar)


# -- attribute lexicon -------------------------------------------------------

# Seed terms, drawn from the case-study phrasing. Extensible, not exhaustive.
DEFAULT_TERMS: dict[str, tuple[str, ...]] = {
    "Race": ("race", "racial", "african descent", "black", "asian", "skin tone"),
    "Color": ("color", "colour", "skin color", "skin colour", "dark-skinned"),
    "Sex": ("sex", "female", "male", "intersex"),
    "Language": (
        "language",
        "non-native",
        "native speaker",
        "english-speaking",
        "dialect",
        "bilingual",
    ),
    "Religion": (
        "religion",
        "religious",
        "faith",
        "muslim",
        "christian",
        "jewish",
        "hindu",
        "buddhist",
        "sikh",
        "niqab",
        "hijab",
    ),
    "National Origin": ("national origin", "nationality", "immigrant", "migrant", "refugee"),
    "Social Origin": ("social origin", "caste", "working class"),
    "Property": ("property", "low-income", "income", "wealth", "homeless"),
    "Birth": ("birth", "born"),
    "Gender": ("gender", "woman", "women", "lady", "ladies", "female", "man", "men", "girl"),
    "Gender Identity": ("gender identity", "non-binary", "transgender", "genderqueer"),
    "Age": ("age", "aged", "elderly", "young", "older", "senior", "teenage", "teenager"),
    "Disability": (
        "disability",
        "disabled",
        "visual impairment",
        "visually impaired",
        "hearing impairment",
        "hearing impaired",
        "speech disability",
        "impairment",
        "blind",
        "deaf",
        "wheelchair",
    ),
    "Ethnicity": (
        "ethnicity",
        "ethnic",
        "asian",
        "persian",
        "sri lankan",
        "african",
        "hispanic",
        "latino",
        "latina",
        "indigenous",
        "aboriginal",
    ),
    "Accent": ("accent",),
    "Occupation": (
        "occupation",
        "profession",
        "developer",
        "manager",
        "ceo",
        "delivery person",
        "doctor",
        "nurse",
        "health professional",
        "healthcare professional",
        "health worker",
        "fire brigade",
        "firefighter",
        "security team",
    ),
    "Lifestyle": ("lifestyle", "smokes", "smoker", "smoking", "vegan", "vegetarian"),
    "Physical Appearance": (
        "physical appearance",
        "appearance",
        "glasses",
        "beard",
        "tattoo",
        "scar",
        "burnt",
        "burned",
        "facial surgery",
    ),
    "Health Condition": (
        "health condition",
        "covid",
        "covid positive",
        "stammer",
        "stutter",
        "slow speech",
        "chronic illness",
        "illness",
    ),
    "Culture": ("culture", "cultural", "culturally", "traditional"),
    "Parenthood": ("parent", "parenthood", "mom", "mum", "mother", "father", "dad", "baby", "child"),
    "Personality Trait": (
        "personality",
        "personality trait",
        "soft spoken",
        "soft-spoken",
        "shy",
        "introvert",
        "introverted",
        "extrovert",
    ),
    "Environment": ("environment", "noisy", "noise", "background noise", "rural"),
}

DEFAULT_ALIASES: dict[str, str] = {
    "Profession": "Occupation",
    "Sex": "Sex",
    "Health condition": "Health Condition",
}


class LexiconError(ValueError):
    pass


def _term_regex(term: str) -> re.Pattern[str]:
    words = [re.escape(w) for w in term.split()]
    body = r"\s+".join(words)
    # whole word/phrase, tolerating a plural suffix
    return re.compile(rf"(?<!\w){body}(?:s|es)?(?!\w)", re.IGNORECASE)


@dataclass(frozen=True)
class LexiconEntry:
    protected: bool
    terms: tuple[str, ...]

    def __post_init__(self) -> None:
        terms = tuple(t.strip() for t in self.terms)
        if not terms:
            raise LexiconError("a lexicon dimension needs at least one term")
        if any(not t for t in terms):
            raise LexiconError("lexicon terms must be non-empty")
        object.__setattr__(self, "terms", terms)


@dataclass(frozen=True)
class AttributeLexicon:
    entries: Mapping[str, LexiconEntry]
    aliases: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_ALIASES))

    def __post_init__(self) -> None:
        entries = {canonical_dimension(k): v for k, v in sorted(self.entries.items())}
        object.__setattr__(self, "entries", dict(sorted(entries.items())))
        object.__setattr__(
            self,
            "aliases",
            {k.lower(): canonical_dimension(v) for k, v in self.aliases.items()},
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, dimension: object) -> bool:
        return isinstance(dimension, str) and canonical_dimension(dimension) in self.entries

    @property
    def dimensions(self) -> tuple[str, ...]:
        return tuple(self.entries)

    @property
    def protected_dimensions(self) -> tuple[str, ...]:
        return tuple(d for d, e in self.entries.items() if e.protected)

    def resolve(self, label: str) -> str | None:
        """Map an annotation label to a canonical dimension, or None if unknown."""
        label = canonical_dimension(label)
        target = self.aliases.get(label.lower(), label)
        return target if target in self.entries else None

    @cached_property
    def _patterns(self) -> tuple[tuple[str, tuple[re.Pattern[str], ...]], ...]:
        return tuple(
            (dim, tuple(_term_regex(t) for t in entry.terms)) for dim, entry in self.entries.items()
        )

    def first_match(self, dimension: str, phrase: str) -> re.Match[str] | None:
        """Earliest match of any term of ``dimension``; ties go to the longest."""
        best = None
        for dim, patterns in self._patterns:
            if dim != dimension:
                continue
            for pattern in patterns:
                m = pattern.search(phrase)
                if m and (best is None or (m.start(), -len(m.group())) < (best.start(), -len(best.group()))):
                    best = m
        return best


def default_lexicon() -> AttributeLexicon:
    return AttributeLexicon(
        {dim: LexiconEntry(True, terms) for dim, terms in DEFAULT_TERMS.items()},
        dict(DEFAULT_ALIASES),
    )


def infer_attributes(phrase: str, lexicon: AttributeLexicon) -> list[AttributeTag]:
    """One lexicon-inferred tag per matching dimension, ordered by dimension name."""
    tags = []
    for dimension in lexicon.dimensions:
        m = lexicon.first_match(dimension, phrase)
        if m is not None:
            tags.append(AttributeTag(dimension, m.group(), Origin.LEXICON_INFERRED))
    return tags


def load_lexicon(config: Mapping | None) -> AttributeLexicon:
    """Merge the ``lexicon`` and ``aliases`` stanzas of a config over the defaults."""
    from dilint.config import ConfigError

    base = default_lexicon()
    if not config:
        return base
    if not isinstance(config, Mapping):
        raise ConfigError("config root must be an object", "$")
    entries = dict(base.entries)
    raw = config.get("lexicon")
    raw = {} if raw is None else raw
    if not isinstance(raw, Mapping):
        raise ConfigError("'lexicon' must be an object", "$.lexicon")
    for name, entry_doc in raw.items():
        where = f"$.lexicon.{name}"
        if not isinstance(entry_doc, Mapping):
            raise ConfigError("dimension entry must be an object", where)
        terms = entry_doc.get("terms")
        if terms is None and canonical_dimension(name) in entries:
            terms = entries[canonical_dimension(name)].terms
        if not isinstance(terms, list | tuple) or not all(isinstance(t, str) for t in terms):
            raise ConfigError("'terms' must be a list of strings", f"{where}.terms")
        protected = entry_doc.get("protected", True)
        if not isinstance(protected, bool):
            raise ConfigError("'protected' must be a boolean", f"{where}.protected")
        try:
            entries[canonical_dimension(name)] = LexiconEntry(protected, tuple(terms))
        except LexiconError as exc:
            raise ConfigError(str(exc), f"{where}.terms") from None
    aliases = dict(base.aliases)
    raw_aliases = config.get("aliases")
    raw_aliases = {} if raw_aliases is None else raw_aliases
    if not isinstance(raw_aliases, Mapping) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in raw_aliases.items()
    ):
        raise ConfigError("'aliases' must map labels to dimension names", "$.aliases")
    aliases.update(raw_aliases)
    for label, target in aliases.items():
        if canonical_dimension(target) not in entries:
            raise ConfigError(f"alias {label!r} targets unknown dimension {target!r}", "$.aliases")
    return AttributeLexicon(entries, aliases)


# -- conflict registry -------------------------------------------------------

DEFAULT_CONFLICTS: dict[frozenset[int], str] = {
    frozenset({2, 3}): "stakeholder engagement vs conflicting viewpoints",
    frozenset({8, 9}): "transparency vs privacy",
    frozenset({17, 20}): "inclusive design vs usability",
}


@dataclass(frozen=True)
class ConflictRegistry:
    pairs: Mapping[frozenset[int], str]

    def __post_init__(self) -> None:
        checked = {}
        for pair, rationale in self.pairs.items():
            pair = frozenset(pair)
            if len(pair) != 2:
                raise ValueError(f"conflict pair must hold two distinct themes: {sorted(pair)}")
            for theme_id in pair:
                check_theme_id(theme_id)
            checked[pair] = rationale
        object.__setattr__(self, "pairs", dict(sorted(checked.items(), key=lambda kv: sorted(kv[0]))))

    @classmethod
    def default(cls) -> ConflictRegistry:
        return cls(dict(DEFAULT_CONFLICTS))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> ConflictRegistry:
        out = {}
        for pair in pairs:
            key = frozenset(pair)
            out[key] = DEFAULT_CONFLICTS.get(key, "declared in project config")
        return cls(out)

    def contains(self, a: int, b: int) -> bool:
        return frozenset({a, b}) in self.pairs

    def ordered(self) -> list[tuple[tuple[int, int], str]]:
        return [(tuple(sorted(p)), r) for p, r in self.pairs.items()]
