"""Knot table lookup.

The table is a CSV file with the header ``name,gauss,signs``; Gauss codes hold
commas and must be quoted. An optional ``braid`` column holds a space separated
braid word; rows that fill it leave ``gauss`` and ``signs`` empty and are closed on
max|g| + 1 strands. Names are matched after trimming whitespace.
"""

import csv
import logging
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple

from cordaug.config import resolve_table_path
from cordaug.core.exceptions import MalformedCodeError, UnknownKnotError
from cordaug.core.models import KnotDiagram
from cordaug.diagram.braid import parse_braid
from cordaug.diagram.gauss import parse_gauss

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("name", "gauss", "signs")


class TableEntry(NamedTuple):
    """One knot table row."""

    name: str
    gauss: str
    signs: str
    braid: str = ""


def _parse_word(entry: TableEntry) -> list[int]:
    try:
        return [int(token) for token in entry.braid.split()]
    except ValueError as e:
        raise MalformedCodeError(
            f"braid word '{entry.braid}' is not a list of integers",
            field="braid",
            knot=entry.name,
        ) from e


@lru_cache(maxsize=8)
def _read_table(path: Path) -> dict[str, TableEntry]:
    entries: dict[str, TableEntry] = {}
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        missing = [column for column in TABLE_COLUMNS if column not in (reader.fieldnames or [])]
        if missing:
            raise MalformedCodeError(
                f"knot table {path} lacks columns {missing}",
                field="table",
                details={"path": str(path)},
            )
        for row in reader:
            name = (row["name"] or "").strip()
            if not name or name.startswith("#"):
                continue
            entries[name] = TableEntry(
                name,
                (row["gauss"] or "").strip(),
                (row["signs"] or "").strip(),
                (row.get("braid") or "").strip(),
            )
    logger.debug("Loaded %d knots from %s", len(entries), path)
    return entries


def load_table(table: str | None = None) -> dict[str, TableEntry]:
    """Load the knot table resolved from an explicit path, env, .env or the bundle."""
    source = resolve_table_path(table)
    return _read_table(source.path)


def table_names(table: str | None = None) -> list[str]:
    """Knot names in table order."""
    return list(load_table(table))


def lookup(name: str, table: str | None = None) -> KnotDiagram:
    """Parse the diagram of a named knot.

    Raises:
        UnknownKnotError: Name not present in the table
        MalformedCodeError: Braid column holds something other than integers
    """
    source = resolve_table_path(table)
    entries = _read_table(source.path)
    key = name.strip()
    if key not in entries:
        raise UnknownKnotError(
            f"knot '{key}' not found in table", table=str(source.path), knot=key
        )
    entry = entries[key]
    if entry.braid:
        word = _parse_word(entry)
        strands = max(abs(generator) for generator in word) + 1
        return parse_braid(word, strands, name=entry.name)
    return parse_gauss(entry.gauss, entry.signs, name=entry.name)
