"""Shipped character tables (A5, A6, A7, S5, S7) and their principal-block line data."""

from __future__ import annotations

from importlib import resources

from ..tables import CharacterTable, parse_table

NAMES = ("a5", "a6", "a7", "s5", "s7")


def fixture_path(name: str):
    return resources.files(__name__) / f"{name.lower()}.json"


def blocks_path(name: str):
    return resources.files(__name__) / f"{name.lower()}.blocks.json"


def load_fixture(name: str) -> CharacterTable:
    return parse_table(fixture_path(name).read_text())


def load_fixture_blocks(name: str) -> list:
    from ..tree_criterion import parse_blocks

    path = blocks_path(name)
    if not path.is_file():
        return []
    return parse_blocks(path.read_text())
