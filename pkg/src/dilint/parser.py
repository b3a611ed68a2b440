"""Parser for D&I user stories written in the tailored template.

Grammar, tolerant of the variation seen in real focus-group output::

    story      := "As" article role [context] [","] "I want" subject "to" predicate
                  [[","] "so that" rationale] ["."] [annotation]
    article    := "a" | "an" | "the"
    annotation := "[" label (sep label)* ["," "Theme" int ("," int)*] "]"
    sep        := "," | "&" | "/"

The role ends at the first top-level comma or at "I want"; anything between
that comma and "I want" is kept verbatim as the context clause.
"""

from __future__ import annotations

import io
import re
from collections.abc import Iterable
from dataclasses import replace
from typing import TextIO

from dilint.model import (
    AttributeTag,
    Diagnostic,
    Origin,
    ParseOutcome,
    Rule,
    Severity,
    Span,
    THEME_IDS,
    UserStory,
    normalize,
)
from dilint.taxonomy import AttributeLexicon, infer_attributes

_PREFIX_RE = re.compile(r"^As\s+(a|an|the)\s+", re.IGNORECASE)
_WANT_RE = re.compile(r"(?<!\w)I want(?!\w)")
_TO_RE = re.compile(r"(?<!\w)to(?!\w)")
_SO_THAT_RE = re.compile(r",?\s*(?<!\w)so that(?!\w)", re.IGNORECASE)
_THEME_RE = re.compile(r"(?<!\w)themes?(?!\w)", re.IGNORECASE)
_LABEL_SEP_RE = re.compile(r"[,&/]")


class ParseError(ValueError):
    """A story block that does not fit the template.

    ``keyword`` names the first missing keyword (or ``None`` for annotation
    problems) and ``column`` is the 1-based offset in the normalized text where
    it was expected.
    """

    def __init__(self, message: str, keyword: str | None = None, column: int = 1):
        super().__init__(message)
        self.keyword = keyword
        self.column = column


class CorpusError(OSError):
    pass


def parse_annotation(text: str, lexicon: AttributeLexicon) -> tuple[list[AttributeTag], list[int]]:
    text = normalize(text)
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"annotation must be bracketed: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        raise ParseError("empty annotation '[]'")

    m = _THEME_RE.search(inner)
    label_part, theme_part = (inner[: m.start()], inner[m.end() :]) if m else (inner, "")

    tags: list[AttributeTag] = []
    for label in _LABEL_SEP_RE.split(label_part):
        label = label.strip()
        if not label:
            continue
        dimension = lexicon.resolve(label)
        if dimension is None:
            raise ParseError(f"unknown attribute dimension {label!r} in annotation {text!r}")
        tags.append(AttributeTag(dimension, None, Origin.EXPLICIT_ANNOTATION))

    themes: list[int] = []
    if m:
        tokens = [t for t in re.split(r"[,\s]+", theme_part) if t]
        if not tokens:
            raise ParseError(f"'Theme' without any theme id in {text!r}")
        for token in tokens:
            if not token.isdigit():
                raise ParseError(f"theme id {token!r} is not an integer in {text!r}")
            theme_id = int(token)
            if theme_id not in THEME_IDS:
                raise ParseError(f"theme id {theme_id} is outside 1..23 in {text!r}")
            themes.append(theme_id)
    return tags, themes


def _split_annotation(text: str) -> tuple[str, str | None]:
    if not text.endswith("]"):
        return text, None
    start = text.rfind("[")
    if start < 0:
        return text, None
    return text[:start].rstrip(), text[start:]


def _top_level_comma(text: str) -> int:
    depth = 0
    for i, ch in enumerate(text):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth = max(0, depth - 1)
        elif ch == "," and depth == 0:
            return i
    return -1


def _strip_end(text: str) -> str:
    return text.strip().rstrip(".").rstrip(",").strip()


def parse_story(
    text: str, lexicon: AttributeLexicon, span: Span | None = None
) -> UserStory:
    raw = text
    text = normalize(text)
    body, annotation = _split_annotation(text)

    prefix = _PREFIX_RE.match(body)
    if not prefix:
        raise ParseError("missing 'As a/an/the' at the start of the story", "As", 1)
    rest = body[prefix.end() :]
    offset = prefix.end()

    want = _WANT_RE.search(rest)
    if not want:
        raise ParseError("missing 'I want' after the role", "I want", offset + len(rest) + 1)
    head = rest[: want.start()]
    comma = _top_level_comma(head)
    if comma >= 0:
        role = head[:comma].strip()
        context = head[comma + 1 :].strip().rstrip(",").strip()
    else:
        role, context = head.strip(), ""
    if not role:
        raise ParseError("empty role after 'As a'", "role", offset + 1)

    tail = rest[want.end() :]
    tail_offset = offset + want.end()
    to = _TO_RE.search(tail)
    if not to:
        raise ParseError("missing 'to' after the subject", "to", tail_offset + len(tail) + 1)
    subject = tail[: to.start()].strip()
    if not subject:
        raise ParseError("empty subject after 'I want'", "subject", tail_offset + 1)

    remainder = tail[to.end() :]
    so_that = _SO_THAT_RE.search(remainder)
    if so_that:
        predicate = _strip_end(remainder[: so_that.start()])
        rationale = _strip_end(remainder[so_that.end() :]) or None
    else:
        predicate, rationale = _strip_end(remainder), None
    if not predicate:
        raise ParseError("empty predicate after 'to'", "predicate", tail_offset + to.end() + 1)

    explicit: list[AttributeTag] = []
    theme_list: list[int] = []
    if annotation is not None:
        explicit, theme_list = parse_annotation(annotation, lexicon)
    explicit = list({tag.dimension: tag for tag in explicit}.values())
    seen = {tag.dimension for tag in explicit}
    inferred = [
        tag for tag in infer_attributes(f"{role} {predicate}", lexicon) if tag.dimension not in seen
    ]

    themes = tuple(dict.fromkeys(theme_list))
    duplicates = tuple(dict.fromkeys(t for i, t in enumerate(theme_list) if t in theme_list[:i]))

    return UserStory(
        raw_text=raw,
        role_phrase=role,
        context_clause=context or None,
        subject_phrase=subject,
        predicate=predicate,
        rationale=rationale,
        attributes=tuple(explicit + inferred),
        themes=themes,
        duplicate_themes=duplicates,
        span=span or Span("<string>", 1, 1),
    )


def _blocks(lines: Iterable[str]) -> Iterable[tuple[int, int, list[str]]]:
    block: list[str] = []
    start = end = 0
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            if block:
                yield start, end, block
                block = []
            continue
        if not block:
            start = lineno
        block.append(stripped)
        end = lineno
    if block:
        yield start, end, block


def parse_corpus(
    source: str | TextIO, lexicon: AttributeLexicon, filename: str = "<string>"
) -> ParseOutcome:
    stream = io.StringIO(source) if isinstance(source, str) else source
    try:
        lines = stream.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"{filename}: cannot read story file: {exc}") from exc

    stories: list[UserStory] = []
    diagnostics: list[Diagnostic] = []
    for start, end, block in _blocks(lines):
        span = Span(filename, start, end)
        text = " ".join(block)
        try:
            stories.append(parse_story(text, lexicon, span))
        except ParseError as exc:
            diagnostics.append(
                Diagnostic(Rule.P0_PARSE_ERROR, Severity.ERROR, span, f"{exc} in {text!r}")
            )
    return ParseOutcome(tuple(stories), tuple(diagnostics))


def render_story(story: UserStory) -> str:
    """Canonical text form; parsing it gives back the same slots."""
    article = "an" if story.role_phrase[:1].lower() in "aeiou" else "a"
    parts = [f"As {article} {story.role_phrase},"]
    if story.context_clause:
        parts.append(story.context_clause)
    parts.append(f"I want {story.subject_phrase} to {story.predicate}")
    text = " ".join(parts)
    if story.rationale:
        text += f" so that {story.rationale}"
    text += "."
    labels = [t.dimension for t in story.attributes if t.origin is Origin.EXPLICIT_ANNOTATION]
    items = list(dict.fromkeys(labels))
    if story.themes:
        items.append("Theme " + ", ".join(str(t) for t in story.themes))
    if items:
        text += " [" + ", ".join(items) + "]"
    return text


def same_slots(a: UserStory, b: UserStory) -> bool:
    """Structural equality ignoring the raw text and source location."""
    blank = Span("", 0, 0)
    return replace(a, raw_text="", span=blank) == replace(b, raw_text="", span=blank)
