import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dilint.config import ConfigError
from dilint.model import Origin, Pillar
from dilint.taxonomy import (
    DEFAULT_TERMS,
    THEMES,
    ConflictRegistry,
    LexiconEntry,
    AttributeLexicon,
    default_lexicon,
    infer_attributes,
    load_lexicon,
    pillar_of,
    theme_by_id,
)

# Theme table rows as published, one per line.
TABLE_ROWS = """\
Humans\t1\tAI Lifecycle: Representation, Diversity, and Inclusion
\t2\tAI Stakeholder: Engagement and Collaboration
\t3\tAI Context: Awareness and Conflict Management
\t4\tAI Foundations: Socio-technical Approach
\t5\tAI Education: Inclusive Infrastructure and Training
\t6\tAI Opportunities: Equitable Practices and Challenges
\t7\tAI Challenges: Inclusion Aspects
Data\t8\tAI Data: Transparency and Explainability
\t9\tAI Data Security: Privacy, Sovereignty, and Infrastructure
\t10\tAI Data Modelling: Selection and Development
\t11\tAI Data Management: Documentation and Examination
\t12\tAI Data Analysis: Bias and Inequity
\t13\tAI Data Traits: Demographic Considerations
Process\t14\tAI Analysis: Bias and Marginalization
\t15\tAI Performance: Evaluation, Monitoring, and Refinement
\t16\tAI Design: Trade-offs Considerations
System\t17\tAI System Design: Inclusive Design and Development
\t18\tAI Awareness: Bias Recognition and Understanding
\t19\tAI Tools Evaluation: Bias and Representation
Governance\t20\tAI System Usability: Accessibility Assessment
\t21\tAI Strategy: Policy and Governance
\t22\tAI Safety Protocols: Risk Management and Standards
\t23\tAI Ethical Directives: Equity, Diversity, and Inclusion Principles
"""


def _table():
    pillar = None
    for row in TABLE_ROWS.splitlines():
        p, num, title = row.split("\t")
        pillar = p or pillar
        yield int(num), Pillar(pillar), title


def test_registry_matches_table_byte_for_byte():
    assert [(t.id, t.pillar, t.title) for t in THEMES] == list(_table())


@pytest.mark.parametrize(
    "theme_id, pillar, title",
    [
        (1, Pillar.HUMANS, "AI Lifecycle: Representation, Diversity, and Inclusion"),
        (23, Pillar.GOVERNANCE, "AI Ethical Directives: Equity, Diversity, and Inclusion Principles"),
    ],
)
def test_theme_by_id(theme_id, pillar, title):
    theme = theme_by_id(theme_id)
    assert (theme.id, theme.pillar, theme.title) == (theme_id, pillar, title)


@pytest.mark.parametrize("bad", [0, 24, -1, True])
def test_theme_by_id_out_of_range(bad):
    with pytest.raises(ValueError, match=re.escape(repr(bad))):
        theme_by_id(bad)


@pytest.mark.parametrize(
    "theme_id, pillar",
    [(13, Pillar.DATA), (16, Pillar.PROCESS), (20, Pillar.GOVERNANCE), (7, Pillar.HUMANS), (19, Pillar.SYSTEM)],
)
def test_pillar_of(theme_id, pillar):
    assert pillar_of(theme_id) is pillar


def test_pillar_of_agrees_with_registry():
    for i in range(1, 24):
        assert pillar_of(theme_by_id(i).id) is theme_by_id(i).pillar
    with pytest.raises(ValueError):
        pillar_of(24)


def test_default_lexicon_dimensions():
    required = """Race, Color, Sex, Language, Religion, National Origin, Social Origin, Property,
    Birth, Gender, Gender Identity, Age, Disability, Ethnicity, Accent, Occupation, Lifestyle,
    Physical Appearance, Health Condition, Culture, Parenthood, Personality Trait, Environment"""
    names = {n.strip() for n in required.split(",")}
    lexicon = default_lexicon()
    assert names <= set(lexicon.dimensions)
    assert set(lexicon.protected_dimensions) == set(lexicon.dimensions)
    assert all(t for entry in lexicon.entries.values() for t in entry.terms)


@pytest.mark.parametrize(
    "phrase, expected",
    [
        ("person with a visual impairment", [("Disability", "visual impairment")]),
        ("developer of FRASS", [("Occupation", "developer")]),
        ("the quick brown fox", []),
        ("non-binary user of the system", [("Gender Identity", "non-binary")]),
        ("two Developers", [("Occupation", "Developers")]),
    ],
)
def test_infer_attributes(lexicon, phrase, expected):
    tags = infer_attributes(phrase, lexicon)
    assert [(t.dimension, t.value) for t in tags] == expected
    assert all(t.origin is Origin.LEXICON_INFERRED for t in tags)


def test_infer_attributes_whole_words_only(lexicon):
    # "man" must not fire inside "manager" or "woman" must not yield "man"
    dims = [t.dimension for t in infer_attributes("manager", lexicon)]
    assert dims == ["Occupation"]
    assert infer_attributes("usage", lexicon) == []


def test_infer_attributes_sorted_by_dimension(lexicon):
    tags = infer_attributes("elderly Muslim doctor", lexicon)
    assert [t.dimension for t in tags] == sorted(t.dimension for t in tags)
    assert {t.dimension for t in tags} == {"Age", "Religion", "Occupation"}


_term_words = st.sampled_from(sorted({t for terms in DEFAULT_TERMS.values() for t in terms}))


@given(
    phrase=st.lists(st.sampled_from(["a", "the", "user", "doctor", "elderly", "blind", "x"]), max_size=6).map(" ".join),
    extra=st.lists(_term_words, max_size=3),
)
def test_infer_attributes_monotone_in_lexicon(phrase, extra):
    base = default_lexicon()
    entries = dict(base.entries)
    entries["Age"] = LexiconEntry(True, entries["Age"].terms + tuple(extra))
    grown = AttributeLexicon(entries)
    before = {t.dimension for t in infer_attributes(phrase, base)}
    after = {t.dimension for t in infer_attributes(phrase, grown)}
    assert before <= after


def test_load_lexicon_empty_is_default():
    assert load_lexicon({}) == default_lexicon()
    assert load_lexicon(None) == default_lexicon()


def test_load_lexicon_adds_dimension():
    base = default_lexicon()
    grown = load_lexicon({"lexicon": {"Neurodivergence": {"protected": True, "terms": ["autistic", "ADHD"]}}})
    assert len(grown) == len(list(base.dimensions)) + 1
    assert "Neurodivergence" in grown


def test_load_lexicon_override_age():
    custom = load_lexicon({"lexicon": {"Age": {"terms": ["elderly"]}}})
    base = default_lexicon()
    assert "Age" in {t.dimension for t in infer_attributes("elderly employee", custom)}
    # oracle: the default lexicon matches "young", the override does not
    assert "Age" in {t.dimension for t in infer_attributes("young employee", base)}
    assert "Age" not in {t.dimension for t in infer_attributes("young employee", custom)}


@pytest.mark.parametrize(
    "doc, location",
    [
        ({"lexicon": {"X": {"terms": []}}}, "$.lexicon.X.terms"),
        ({"lexicon": {"X": {"terms": [""]}}}, "$.lexicon.X.terms"),
        ({"lexicon": {"X": {"terms": "abc"}}}, "$.lexicon.X.terms"),
        ({"lexicon": {"X": {"terms": ["a"], "protected": "yes"}}}, "$.lexicon.X.protected"),
        ({"lexicon": []}, "$.lexicon"),
        ({"aliases": {"Job": "Nope"}}, "$.aliases"),
    ],
)
def test_load_lexicon_errors(doc, location):
    with pytest.raises(ConfigError) as info:
        load_lexicon(doc)
    assert info.value.location == location


def test_alias_resolution():
    lexicon = default_lexicon()
    assert lexicon.resolve("Profession") == "Occupation"
    assert lexicon.resolve("Health condition") == "Health Condition"
    assert lexicon.resolve("personality trait") == "Personality Trait"
    assert lexicon.resolve("Sex") == "Sex"
    assert lexicon.resolve("Favourite colour") is None
    custom = load_lexicon({"aliases": {"Job": "Occupation"}})
    assert custom.resolve("job") == "Occupation"


def test_default_conflicts():
    registry = ConflictRegistry.default()
    assert set(registry.pairs) == {frozenset({8, 9}), frozenset({2, 3}), frozenset({17, 20})}
    assert [p for p, _ in registry.ordered()] == [(2, 3), (8, 9), (17, 20)]


@given(st.integers(1, 23), st.integers(1, 23))
def test_conflict_registry_symmetric(a, b):
    registry = ConflictRegistry.default()
    assert registry.contains(a, b) == registry.contains(b, a)


@pytest.mark.parametrize("pair", [(4, 4), (0, 3), (3, 24)])
def test_conflict_registry_rejects_bad_pairs(pair):
    with pytest.raises(ValueError):
        ConflictRegistry.from_pairs([pair])
