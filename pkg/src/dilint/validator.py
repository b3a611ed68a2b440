"""Lint rules R1-R4 over parsed stories."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import replace

from dilint.config import RuleConfig
from dilint.model import (
    Diagnostic,
    Origin,
    ParseOutcome,
    ProjectScope,
    Rule,
    Severity,
    SubjectKind,
    UserStory,
    normalize,
)
from dilint.taxonomy import AttributeLexicon, infer_attributes

ARTICLES = frozenset({"a", "an", "the"})
PRONOUNS = frozenset(
    """i me my mine myself you your yours we us our ours he him his she her hers
    it its they them their theirs this that these those something anything
    everything someone anyone everyone one""".split()
)
# verbs that carry no behaviour on their own ("do it", "make this")
LIGHT_VERBS = frozenset({"do", "does", "make", "makes", "be", "have", "has", "get", "gets", "handle"})


def _words(text: str) -> list[str]:
    return [w.strip(".,;:!?\"'()").lower() for w in normalize(text).split(" ") if w]


def _vacuous(text: str, extra: frozenset[str] = frozenset()) -> bool:
    words = [w for w in _words(text) if w]
    return all(w in ARTICLES or w in PRONOUNS or w in extra for w in words)


def _diag(rule: Rule, story: UserStory, message: str, severity: Severity = Severity.ERROR) -> Diagnostic:
    return Diagnostic(rule, severity, story.span, message)


def check_template_completeness(story: UserStory) -> list[Diagnostic]:
    """R1: the rationale is present and no slot is only articles or pronouns."""
    problems = []
    if not story.rationale:
        problems.append("missing 'so that' rationale")
    slots = [
        ("role", story.role_phrase, frozenset()),
        ("subject", story.subject_phrase, frozenset()),
        ("predicate", story.predicate, LIGHT_VERBS),
    ]
    if story.rationale:
        slots.append(("rationale", story.rationale, frozenset()))
    for name, value, extra in slots:
        if _vacuous(value, extra):
            problems.append(f"{name} {value!r} names nothing concrete")
    if not problems:
        return []
    return [
        _diag(
            Rule.R1_TEMPLATE_COMPLETENESS,
            story,
            f"incomplete template: {'; '.join(problems)} in {story.raw_text!r}",
            Severity.WARNING,
        )
    ]


def role_attributes(story: UserStory, lexicon: AttributeLexicon) -> set[str]:
    """Dimensions attached to the role: every annotation label plus role-phrase matches."""
    dims = {t.dimension for t in story.attributes if t.origin is Origin.EXPLICIT_ANNOTATION}
    dims.update(t.dimension for t in infer_attributes(story.role_phrase, lexicon))
    return dims


def behaviour_attributes(story: UserStory, lexicon: AttributeLexicon) -> set[str]:
    text = f"{story.predicate} {story.rationale or ''}".strip()
    return {t.dimension for t in infer_attributes(text, lexicon)}


def check_di_qualification(
    story: UserStory, lexicon: AttributeLexicon, scope: ProjectScope
) -> list[Diagnostic]:
    """R2: a protected attribute qualifies the role or appears in the behaviour."""
    protected = set(scope.protected_dimensions)
    if role_attributes(story, lexicon) & protected:
        return []
    if behaviour_attributes(story, lexicon) & protected:
        return []
    return [
        _diag(
            Rule.R2_DI_QUALIFICATION,
            story,
            f"role {story.role_phrase!r} carries no protected attribute and neither "
            f"predicate nor rationale refers to one",
        )
    ]


def match_subject(subject: str, scope: ProjectScope) -> SubjectKind:
    """Longest scope entry contained in ``subject`` (case-insensitive)."""
    haystack = normalize(subject).lower()
    best: tuple[int, SubjectKind] | None = None
    for kind, names in (
        (SubjectKind.ROLE, scope.roles),
        (SubjectKind.PROCESS, scope.processes),
        (SubjectKind.ARTIFACT, scope.artifacts),
    ):
        for name in names:
            needle = normalize(name).lower()
            if needle and needle in haystack and (best is None or len(needle) > best[0]):
                best = (len(needle), kind)
    return best[1] if best else SubjectKind.UNKNOWN


def check_actionability(story: UserStory, scope: ProjectScope) -> tuple[UserStory, list[Diagnostic]]:
    """R3: the subject is a role, process or artifact the project controls.

    Returns the story with ``subject_kind`` filled in alongside any finding.
    """
    kind = match_subject(story.subject_phrase, scope)
    story = replace(story, subject_kind=kind)
    if kind is not SubjectKind.UNKNOWN:
        return story, []
    severity = Severity.ERROR if scope.checked else Severity.INFO
    note = "" if scope.checked else " (scope-unchecked: no complete project scope configured)"
    return story, [
        _diag(
            Rule.R3_ACTIONABILITY,
            story,
            f"subject {story.subject_phrase!r} is not actionable within project scope{note}",
            severity,
        )
    ]


def check_theme_tags(story: UserStory) -> list[Diagnostic]:
    """R4: reports untagged stories (info) and repeated theme ids."""
    out = []
    if not story.themes:
        out.append(_diag(Rule.R4_THEME_TAG, story, "story carries no theme tag", Severity.INFO))
    if story.duplicate_themes:
        dupes = ", ".join(str(t) for t in story.duplicate_themes)
        out.append(_diag(Rule.R4_THEME_TAG, story, f"duplicate theme id(s): {dupes}"))
    return out


# rules whose severity is fixed by the finding, not by configuration
_FIXED = {
    (Rule.R3_ACTIONABILITY, Severity.INFO),
    (Rule.R4_THEME_TAG, Severity.INFO),
}


def _apply(diags: Iterable[Diagnostic], rules: RuleConfig) -> list[Diagnostic]:
    out = []
    for d in diags:
        if (d.rule, d.severity) not in _FIXED:
            d = replace(d, severity=rules.severity(d.rule))
        out.append(d)
    return out


def check_story(
    story: UserStory, lexicon: AttributeLexicon, scope: ProjectScope
) -> tuple[UserStory, list[Diagnostic]]:
    story, r3 = check_actionability(story, scope)
    diags = (
        check_template_completeness(story)
        + check_di_qualification(story, lexicon, scope)
        + r3
        + check_theme_tags(story)
    )
    return story, diags


def run_checks(
    outcome: ParseOutcome,
    lexicon: AttributeLexicon,
    scope: ProjectScope,
    rules: RuleConfig | None = None,
) -> tuple[list[UserStory], list[Diagnostic]]:
    """Lint and also return the stories with ``subject_kind`` resolved."""
    rules = rules or RuleConfig()
    stories: list[UserStory] = []
    diags: list[Diagnostic] = list(outcome.diagnostics)
    for story in outcome.stories:
        story, found = check_story(story, lexicon, scope)
        stories.append(story)
        diags.extend(found)
    return stories, sorted(_apply(diags, rules), key=Diagnostic.sort_key)


def lint(
    outcome: ParseOutcome,
    lexicon: AttributeLexicon,
    scope: ProjectScope,
    rules: RuleConfig | None = None,
) -> list[Diagnostic]:
    return run_checks(outcome, lexicon, scope, rules)[1]
