"""Regenerate the published invariant tables and diff them against fixtures.

A fixture file holds ``{"tables": [...]}``; each table names its rows by
invariant keys and its columns by generator words, so every cell is
recomputed from scratch.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List

from .invariants import evaluate, parse_descriptor
from .normal_form import parse_word, realize

ENV_VAR = "WELDEDCALC_FIXTURES"


@dataclass(frozen=True)
class CellDiff:
    table: str
    row: str
    col: str
    expected: int
    computed: int

    def line(self) -> str:
        return (f"{self.table}: {self.row} on {self.col}: "
                f"fixture {self.expected}, computed {self.computed}")


def fixture_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("weldedcalc") / "fixtures"))


def load_tables(directory: Path | None = None) -> List[dict]:
    directory = fixture_dir() if directory is None else Path(directory)
    files = sorted(directory.glob("*.json"))
    if not files:
        raise FileNotFoundError(f"no fixture files in {directory}")
    out = []
    for f in files:
        out.extend(json.loads(f.read_text())["tables"])
    return out


def compute(table: dict) -> List[List[int]]:
    n = table["n"]
    rows = [parse_descriptor(r) for r in table["rows"]]
    diagrams = [realize(parse_word(c, n)) for c in table["cols"]]
    return [[evaluate(D, r) for D in diagrams] for r in rows]


def diff_table(table: dict) -> List[CellDiff]:
    got = compute(table)
    rl = table.get("row_labels", table["rows"])
    cl = table.get("col_labels", table["cols"])
    out = []
    for r, (want_row, got_row) in enumerate(zip(table["values"], got)):
        for c, (w, g) in enumerate(zip(want_row, got_row)):
            if w != g:
                out.append(CellDiff(table["name"], rl[r], f"{cl[c]} ({table['cols'][c]})", w, g))
    return out


def regenerate(directory: Path | None = None) -> Dict[str, List[CellDiff]]:
    """Map each table name to its mismatching cells (empty list = exact match)."""
    return {t["name"]: diff_table(t) for t in load_tables(directory)}
