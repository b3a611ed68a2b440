"""``dilint`` command line: lint story files, list themes, scaffold a project."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from dilint.config import Config, ConfigError, load_config, starter_config
from dilint.corpus import golden_path
from dilint.model import Diagnostic, Severity, UserStory
from dilint.parser import CorpusError, parse_corpus, render_story
from dilint.report import build_report, render_json, render_text
from dilint.taxonomy import THEMES
from dilint.validator import run_checks

EXIT_OK = 0
EXIT_ERRORS = 1
EXIT_USAGE = 2

CONFIG_ENV = "DILINT_CONFIG"
CONFIG_NAME = "dilint.json"
EXAMPLE_NAME = "example.distories"


def exit_status(diagnostics: list[Diagnostic]) -> int:
    return EXIT_ERRORS if any(d.severity is Severity.ERROR for d in diagnostics) else EXIT_OK


def _lint_file(path: str, config: Config) -> tuple[list[UserStory], list[Diagnostic]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"{path}: cannot read story file: {exc}") from exc
    outcome = parse_corpus(text, config.lexicon, filename=path)
    return run_checks(outcome, config.lexicon, config.scope, config.rules)


def cmd_lint(paths: list[str], config_path: str | None = None, fmt: str = "text") -> int:
    config_path = config_path or os.environ.get(CONFIG_ENV) or None
    try:
        config = load_config(config_path) if config_path else Config()
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda p: _lint_file(p, config), paths))
    except (ConfigError, CorpusError) as exc:
        print(f"dilint: {exc}", file=sys.stderr)
        return EXIT_USAGE

    stories = [s for file_stories, _ in results for s in file_stories]
    diagnostics = [d for _, file_diags in results for d in file_diags]
    report = build_report(stories, diagnostics, config.conflicts)
    sys.stdout.write(render_json(report) if fmt == "json" else render_text(report))
    return exit_status(diagnostics)


def themes_listing() -> str:
    return "".join(f"{t.id:>2}  {t.pillar.value:<10}  {t.title}\n" for t in THEMES)


def cmd_themes() -> int:
    sys.stdout.write(themes_listing())
    return EXIT_OK


def _example_stories() -> str:
    text = golden_path("frass_gpt4").read_text(encoding="utf-8")
    outcome = parse_corpus(text, Config().lexicon)
    picked = [s for s in outcome.stories if s.themes][:2]
    body = "\n\n".join(render_story(s) for s in picked)
    return "# D&I user stories, one per blank-line-separated block.\n\n" + body + "\n"


def cmd_init(target_dir: str, force: bool = False) -> int:
    target = Path(target_dir)
    config_file = target / CONFIG_NAME
    if config_file.exists() and not force:
        print(f"dilint: {config_file} already exists (use --force to overwrite)", file=sys.stderr)
        return EXIT_USAGE
    try:
        target.mkdir(parents=True, exist_ok=True)
        config_file.write_text(json.dumps(starter_config(), indent=2) + "\n", encoding="utf-8")
        (target / EXAMPLE_NAME).write_text(_example_stories(), encoding="utf-8")
    except OSError as exc:
        print(f"dilint: cannot initialise {target}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {config_file} and {target / EXAMPLE_NAME}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dilint", description="Lint D&I user stories for AI systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    lint = sub.add_parser("lint", help="parse, validate and analyse story files")
    lint.add_argument("files", nargs="+", metavar="FILE")
    lint.add_argument("--config", metavar="PATH", help=f"JSON config (falls back to ${CONFIG_ENV})")
    lint.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("themes", help="list the 23 themes by pillar")

    init = sub.add_parser("init", help="scaffold a starter config and example story file")
    init.add_argument("dir", metavar="DIR")
    init.add_argument("--force", action="store_true", help="overwrite an existing config")
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "lint":
        return cmd_lint(args.files, args.config, args.format)
    if args.command == "themes":
        return cmd_themes()
    return cmd_init(args.dir, args.force)


if __name__ == "__main__":
    sys.exit(main())
