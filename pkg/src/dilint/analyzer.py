"""Corpus-level theme coverage, attribute spread and conflict findings."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from dilint.model import Pillar, Span, THEME_IDS, UserStory
from dilint.taxonomy import PILLAR_SIZES, ConflictRegistry, pillar_of, themes_in

for _pillar, _size in PILLAR_SIZES.items():
    assert len(themes_in(_pillar)) == _size, _pillar


@dataclass(frozen=True)
class CoverageReport:
    covered_themes: frozenset[int]
    gaps: frozenset[int]
    pillar_coverage: Mapping[Pillar, tuple[int, int]]
    story_count: int = 0

    @classmethod
    def from_themes(cls, covered: Iterable[int], story_count: int) -> CoverageReport:
        covered = frozenset(covered)
        pillars = {
            p: (sum(1 for t in covered if pillar_of(t) is p), size)
            for p, size in PILLAR_SIZES.items()
        }
        return cls(covered, frozenset(THEME_IDS) - covered, pillars, story_count)

    def merge(self, other: CoverageReport) -> CoverageReport:
        return CoverageReport.from_themes(
            self.covered_themes | other.covered_themes, self.story_count + other.story_count
        )


@dataclass(frozen=True)
class ConflictFinding:
    pair: tuple[int, int]
    story_refs_a: tuple[Span, ...]
    story_refs_b: tuple[Span, ...]
    rationale: str


@dataclass(frozen=True)
class AttributeDistribution:
    counts: Mapping[str, int] = field(default_factory=dict)

    def merge(self, other: AttributeDistribution) -> AttributeDistribution:
        total = Counter(self.counts)
        total.update(other.counts)
        return AttributeDistribution(dict(sorted(total.items())))


def coverage_report(stories: Sequence[UserStory]) -> CoverageReport:
    covered: set[int] = set()
    for story in stories:
        covered.update(story.themes)
    return CoverageReport.from_themes(covered, len(stories))


def conflict_findings(
    stories: Sequence[UserStory], registry: ConflictRegistry | None = None
) -> list[ConflictFinding]:
    registry = registry or ConflictRegistry.default()
    findings = []
    for (a, b), rationale in registry.ordered():
        refs_a = tuple(s.span for s in stories if a in s.themes)
        refs_b = tuple(s.span for s in stories if b in s.themes)
        if refs_a and refs_b:
            findings.append(ConflictFinding((a, b), refs_a, refs_b, rationale))
    return findings


def attribute_distribution(stories: Sequence[UserStory]) -> AttributeDistribution:
    """Number of stories carrying each dimension; a story counts once per dimension."""
    counts: Counter[str] = Counter()
    for story in stories:
        counts.update(set(story.dimensions))
    return AttributeDistribution(dict(sorted(counts.items())))
