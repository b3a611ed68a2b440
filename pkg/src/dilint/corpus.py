"""Access to the bundled golden corpus and its scope configs."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

GOLDEN_FILES = ("frass_human", "frass_gpt4", "vrima_human", "vrima_gpt4")
STORY_SUFFIX = ".distories"


def data_dir() -> Path:
    return Path(str(resources.files("dilint") / "data"))


def golden_paths() -> list[Path]:
    return [data_dir() / f"{name}{STORY_SUFFIX}" for name in GOLDEN_FILES]


def golden_path(name: str) -> Path:
    if name not in GOLDEN_FILES:
        raise KeyError(f"no bundled corpus named {name!r}")
    return data_dir() / f"{name}{STORY_SUFFIX}"


def bundled_config(name: str) -> Path:
    """``frass``, ``vrima`` or ``golden`` (the union of both scopes)."""
    path = data_dir() / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"no bundled config named {name!r}")
    return path
