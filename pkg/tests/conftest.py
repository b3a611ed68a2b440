from __future__ import annotations

import pytest

from dilint.config import Config, load_config
from dilint.corpus import bundled_config, golden_path
from dilint.parser import parse_corpus
from dilint.taxonomy import default_lexicon

# Bracket annotations of every bulleted case-study story, typed in by hand in
# file order: (labels as written, theme ids).
CASE_STUDY_ANNOTATIONS = {
    "frass_human": [
        (["Disability"], [20]),
        (["Lifestyle"], [1]),
        (["Occupation"], [3]),
        (["Religion", "Gender"], [1]),
        (["Physical Appearance"], [13]),
        (["Race"], [14]),
        (["Occupation"], [21]),
        (["Gender"], [1]),
        (["Occupation"], [1]),
        (["Occupation"], [3]),
        (["Physical Appearance"], [6]),
        (["Occupation"], [2]),
    ],
    "frass_gpt4": [
        (["Race"], [1, 12, 18]),
        (["Religion", "Gender"], [1, 12, 18]),
        (["Disability"], [1, 20]),
        (["Age"], [5, 20]),
        (["Gender Identity"], [1, 12, 18]),
        (["Physical Appearance"], [10, 15]),
        (["Race", "Gender", "Age"], [1, 2, 15]),
    ],
    "vrima_human": [
        (["Gender", "Profession"], [17]),
        (["Health condition", "Profession"], [20]),
        (["Ethnicity", "Accent", "Profession"], [13]),
        (["Gender", "Profession", "Accent", "Ethnicity"], [13]),
        (["Health condition", "Profession"], [20]),
        (["Profession", "Environment"], [18]),
        (["Health condition", "Profession"], [20]),
        (["Personality trait", "Profession"], [1]),
        (["Disability"], [20]),
        (["Parenthood", "Profession"], [4]),
        (["Profession", "Ethnicity"], [13]),
        (["Profession", "Personality trait"], [21]),
    ],
    "vrima_gpt4": [
        (["Language", "Accent"], [13]),
        (["Culture", "Ethnicity"], [3]),
        (["Gender", "Sex"], [7]),
        (["Disability"], [20]),
        (["Culture", "Ethnicity"], [1]),
        (["Religion", "Culture"], [1, 23]),
    ],
}


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def golden_outcomes(lexicon):
    return {
        name: parse_corpus(golden_path(name).read_text(encoding="utf-8"), lexicon, f"{name}.distories")
        for name in CASE_STUDY_ANNOTATIONS
    }


@pytest.fixture(scope="session")
def frass_config() -> Config:
    return load_config(bundled_config("frass"))


@pytest.fixture(scope="session")
def vrima_config() -> Config:
    return load_config(bundled_config("vrima"))


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
