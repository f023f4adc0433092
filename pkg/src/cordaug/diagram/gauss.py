"""Signed Gauss code ingestion.

A code lists the crossings met along the knot: ``+c`` passes crossing c over,
``-c`` passes it under. Crossing signs come in a separate string, one character
per crossing in increasing crossing-id order. Arcs are numbered along the
orientation and change at every under-passage; arc 1 ends at the first one.
"""

import logging
import re
from collections import Counter

from cordaug.core.exceptions import MalformedCodeError
from cordaug.core.models import Crossing, KnotDiagram

logger = logging.getLogger(__name__)

_SIGN_CHARS = {"+": 1, "-": -1, "−": -1, "–": -1}
_SEPARATORS = re.compile(r"[,\s]+")


def parse_signs(signs: str, n: int, knot: str | None = None) -> list[int]:
    """Parse a sign string such as '+-+' or '+, -, +' into a list of +-1.

    Raises:
        MalformedCodeError: Unknown character or wrong length
    """
    cleaned = _SEPARATORS.sub("", signs or "")
    parsed = []
    for char in cleaned:
        if char not in _SIGN_CHARS:
            raise MalformedCodeError(f"invalid sign character {char!r}", field="signs", knot=knot)
        parsed.append(_SIGN_CHARS[char])
    if len(parsed) != n:
        raise MalformedCodeError(
            f"expected {n} crossing signs, got {len(parsed)}", field="signs", knot=knot
        )
    return parsed


def _parse_entries(code: str, knot: str | None) -> list[int]:
    stripped = (code or "").strip().strip("[]()")
    if not stripped:
        raise MalformedCodeError("empty Gauss code", field="code", knot=knot)
    try:
        entries = [int(token.replace("−", "-")) for token in _SEPARATORS.split(stripped) if token]
    except ValueError as e:
        raise MalformedCodeError(
            f"non-integer entry in Gauss code: {e}", field="code", knot=knot
        ) from e
    if any(entry == 0 for entry in entries):
        raise MalformedCodeError("crossing id 0 is not allowed", field="code", knot=knot)
    if len(entries) % 2:
        raise MalformedCodeError(
            f"Gauss code has odd length {len(entries)}", field="code", knot=knot
        )
    over = Counter(entry for entry in entries if entry > 0)
    under = Counter(-entry for entry in entries if entry < 0)
    for crossing in set(over) | set(under):
        if over[crossing] != 1 or under[crossing] != 1:
            raise MalformedCodeError(
                f"crossing {crossing} passed over {over[crossing]}x and under {under[crossing]}x",
                field="code",
                knot=knot,
                details={"crossing": crossing},
            )
    return entries


def parse_gauss(code: str, signs: str, name: str | None = None) -> KnotDiagram:
    """Build a diagram from a signed Gauss code and a crossing-sign string.

    Args:
        code: 2n comma- or space-separated signed crossing ids
        signs: n characters in {'+', '-'}, ordered by crossing id
        name: Optional knot name

    Returns:
        Validated KnotDiagram with crossings renumbered 1..n by increasing id

    Raises:
        MalformedCodeError: Wrong arity, repeated passes or bad signs
        NotAKnotError: Under-arc successor map is not a single cycle
    """
    entries = _parse_entries(code, name)
    ids = sorted({abs(entry) for entry in entries})
    renumber = {old: new for new, old in enumerate(ids, start=1)}
    n = len(ids)
    sign_list = parse_signs(signs, n, knot=name)

    passages = [renumber[abs(e)] if e > 0 else -renumber[abs(e)] for e in entries]

    over_arc: dict[int, int] = {}
    under_arcs: dict[int, tuple[int, int]] = {}
    unders_seen = 0
    for passage in passages:
        if passage > 0:
            over_arc[passage] = unders_seen + 1 if unders_seen < n else 1
        else:
            unders_seen += 1
            under_arcs[-passage] = (unders_seen, unders_seen % n + 1)

    crossings = [
        Crossing(
            over=over_arc[c],
            under_in=under_arcs[c][0],
            under_out=under_arcs[c][1],
            sign=sign_list[c - 1],  # type: ignore[arg-type]
        )
        for c in range(1, n + 1)
    ]
    diagram = KnotDiagram(n=n, crossings=crossings, passages=passages, name=name)
    logger.debug("Parsed Gauss code for %s: %d crossings", name or "<unnamed>", n)
    return diagram
