"""Text and JSON renderings of lint results and corpus analysis."""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from dilint.analyzer import (
    AttributeDistribution,
    ConflictFinding,
    CoverageReport,
    attribute_distribution,
    conflict_findings,
    coverage_report,
)
from dilint.model import (
    AttributeTag,
    Diagnostic,
    Origin,
    Rule,
    Severity,
    Span,
    SubjectKind,
    UserStory,
)
from dilint.taxonomy import ConflictRegistry, theme_by_id

REPORT_VERSION = 1


@dataclass(frozen=True)
class Report:
    stories: tuple[UserStory, ...]
    diagnostics: tuple[Diagnostic, ...]
    coverage: CoverageReport
    conflicts: tuple[ConflictFinding, ...]
    attributes: AttributeDistribution

    @property
    def max_severity(self) -> Severity | None:
        if not self.diagnostics:
            return None
        return max((d.severity for d in self.diagnostics), key=lambda s: s.rank)


def build_report(
    stories: Sequence[UserStory],
    diagnostics: Sequence[Diagnostic],
    registry: ConflictRegistry | None = None,
) -> Report:
    return Report(
        tuple(stories),
        tuple(diagnostics),
        coverage_report(stories),
        tuple(conflict_findings(stories, registry)),
        attribute_distribution(stories),
    )


# -- serialization -----------------------------------------------------------


def span_to_dict(span: Span) -> dict:
    return {"file": span.file, "start_line": span.start_line, "end_line": span.end_line}


def span_from_dict(d: dict) -> Span:
    return Span(d["file"], d["start_line"], d["end_line"])


def story_to_dict(story: UserStory) -> dict:
    return {
        "raw_text": story.raw_text,
        "role_phrase": story.role_phrase,
        "context_clause": story.context_clause,
        "subject_phrase": story.subject_phrase,
        "subject_kind": story.subject_kind.value,
        "predicate": story.predicate,
        "rationale": story.rationale,
        "attributes": [
            {"dimension": t.dimension, "value": t.value, "origin": t.origin.value}
            for t in story.attributes
        ],
        "themes": list(story.themes),
        "duplicate_themes": list(story.duplicate_themes),
        "span": span_to_dict(story.span),
    }


def story_from_dict(d: dict) -> UserStory:
    return UserStory(
        raw_text=d["raw_text"],
        role_phrase=d["role_phrase"],
        context_clause=d.get("context_clause"),
        subject_phrase=d["subject_phrase"],
        subject_kind=SubjectKind(d.get("subject_kind", "Unknown")),
        predicate=d["predicate"],
        rationale=d.get("rationale"),
        attributes=tuple(
            AttributeTag(a["dimension"], a.get("value"), Origin(a["origin"]))
            for a in d.get("attributes", [])
        ),
        themes=tuple(d.get("themes", [])),
        duplicate_themes=tuple(d.get("duplicate_themes", [])),
        span=span_from_dict(d["span"]),
    )


def diagnostic_to_dict(diag: Diagnostic) -> dict:
    return {
        "rule": diag.rule.value,
        "severity": diag.severity.value,
        "span": span_to_dict(diag.span),
        "message": diag.message,
    }


def diagnostics_summary(diagnostics: Sequence[Diagnostic]) -> dict:
    by_severity = Counter(d.severity.value for d in diagnostics)
    by_rule = Counter(d.rule.value for d in diagnostics)
    return {
        "total": len(diagnostics),
        "by_severity": {s.value: by_severity.get(s.value, 0) for s in Severity},
        "by_rule": {r.value: by_rule.get(r.value, 0) for r in Rule},
    }


def report_to_dict(report: Report) -> dict:
    cov = report.coverage
    return {
        "version": REPORT_VERSION,
        "diagnostics": [diagnostic_to_dict(d) for d in report.diagnostics],
        "coverage": {
            "story_count": cov.story_count,
            "covered_themes": sorted(cov.covered_themes),
            "gaps": sorted(cov.gaps),
            "pillars": {
                p.value: {"covered": c, "total": t} for p, (c, t) in cov.pillar_coverage.items()
            },
        },
        "conflicts": [
            {
                "pair": list(f.pair),
                "rationale": f.rationale,
                "stories_a": [span_to_dict(s) for s in f.story_refs_a],
                "stories_b": [span_to_dict(s) for s in f.story_refs_b],
            }
            for f in report.conflicts
        ],
        "attributes": dict(report.attributes.counts),
        "diagnostics_summary": diagnostics_summary(report.diagnostics),
        "stories": [story_to_dict(s) for s in report.stories],
    }


def render_json(report: Report) -> str:
    # insertion order is fixed above; sort_keys would reorder the top level
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def render_text(report: Report) -> str:
    lines = []
    for d in report.diagnostics:
        lines.append(f"{d.span}: {d.severity.value}: [{d.rule.value}] {d.message}")
    if report.diagnostics:
        lines.append("")

    cov = report.coverage
    lines.append(f"Stories: {cov.story_count}")
    lines.append(f"Theme coverage: {len(cov.covered_themes)}/23")
    for pillar, (covered, total) in cov.pillar_coverage.items():
        lines.append(f"  {pillar.value:<11} {covered}/{total}")
    if cov.gaps:
        lines.append("Uncovered themes:")
        for theme_id in sorted(cov.gaps):
            lines.append(f"  {theme_id:>2}  {theme_by_id(theme_id).title}")

    if report.conflicts:
        lines.append("Conflicts needing trade-off review:")
        for f in report.conflicts:
            a, b = f.pair
            lines.append(
                f"  {a} vs {b} ({f.rationale}): "
                f"{len(f.story_refs_a)} vs {len(f.story_refs_b)} stories"
            )

    if report.attributes.counts:
        lines.append("Attribute dimensions (stories):")
        for dim, count in report.attributes.counts.items():
            lines.append(f"  {dim:<20} {count}")

    summary = diagnostics_summary(report.diagnostics)["by_severity"]
    lines.append(
        f"Summary: {summary['error']} error(s), {summary['warning']} warning(s), "
        f"{summary['info']} info"
    )
    return "\n".join(lines) + "\n"
