"""Braid closures as knot diagrams.

Positions 1..N run top to bottom. Generator ``i`` crosses the strands at positions
i and i+1 with the upper strand passing over; ``-i`` is its inverse, where the lower
strand passes over. The under strand starts a new arc at every crossing. Closing the
braid glues the arc leaving position p at the right to the arc entering position p
at the left; those N strands through the disk keep labels 1..N.
"""

import logging

from cordaug.core.exceptions import BadGeneratorError, NotAKnotError
from cordaug.core.models import BraidWord, Crossing, KnotDiagram

logger = logging.getLogger(__name__)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, item: int) -> int:
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def closure_components(word: list[int], strands: int) -> int:
    """Number of components of the closure of a braid word."""
    permutation = list(range(strands))
    for generator in word:
        i = abs(generator) - 1
        permutation[i], permutation[i + 1] = permutation[i + 1], permutation[i]
    seen: set[int] = set()
    components = 0
    for start in range(strands):
        if start in seen:
            continue
        components += 1
        position = start
        while position not in seen:
            seen.add(position)
            position = permutation.index(position)
    return components


def _check_word(word: list[int], strands: int, name: str | None) -> None:
    if strands < 1:
        raise BadGeneratorError(f"strand count must be positive, got {strands}", knot=name)
    for generator in word:
        if generator == 0 or abs(generator) > strands - 1:
            raise BadGeneratorError(
                f"generator {generator} outside +-1..{strands - 1}",
                generator=generator,
                strands=strands,
                knot=name,
            )


def braid_passages(word: list[int], strands: int) -> list[int]:
    """Traversal of the closed braid from position 1 as signed crossing numbers."""
    passages: list[int] = []
    if not word:
        return passages
    position = 0
    while True:
        for t, generator in enumerate(word, start=1):
            i = abs(generator) - 1
            if position not in (i, i + 1):
                continue
            upper = position == i
            over = upper if generator > 0 else not upper
            passages.append(t if over else -t)
            position = i + 1 if upper else i
        if position == 0:
            return passages


def parse_braid(word: list[int], strands: int, name: str | None = None) -> KnotDiagram:
    """Build the closure diagram of a braid word.

    Args:
        word: Signed Artin generator indices
        strands: Strand count N
        name: Optional knot name

    Returns:
        KnotDiagram with arcs = crossings = len(word) and braid_origin set

    Raises:
        BadGeneratorError: Generator index outside 1..N-1
        NotAKnotError: Closure has more than one component
    """
    word = list(word)
    _check_word(word, strands, name)
    components = closure_components(word, strands)
    if components != 1:
        raise NotAKnotError(
            f"braid closure has {components} components", components=components, knot=name
        )
    origin = BraidWord(word=word, strands=strands)
    if not word:
        return KnotDiagram(n=0, name=name, braid_origin=origin)

    # Raw labels: 1..N for the disk strands, N+1.. for arcs born at crossings.
    current = list(range(1, strands + 1))
    raw: list[tuple[int, int, int, int]] = []
    next_label = strands + 1
    for generator in word:
        i = abs(generator) - 1
        if generator > 0:
            over, under_in = current[i], current[i + 1]
            current[i + 1], current[i] = over, next_label
        else:
            over, under_in = current[i + 1], current[i]
            current[i], current[i + 1] = over, next_label
        raw.append((over, under_in, next_label, 1 if generator > 0 else -1))
        next_label += 1

    forest = _UnionFind(next_label)
    for position, label in enumerate(current, start=1):
        forest.union(label, position)

    roots: dict[int, int] = {}
    for label in range(1, next_label):
        root = forest.find(label)
        if root not in roots:
            roots[root] = len(roots) + 1

    def relabel(label: int) -> int:
        return roots[forest.find(label)]

    crossings = [
        Crossing(
            over=relabel(over),
            under_in=relabel(under_in),
            under_out=relabel(under_out),
            sign=sign,  # type: ignore[arg-type]
        )
        for over, under_in, under_out, sign in raw
    ]
    diagram = KnotDiagram(
        n=len(word),
        crossings=crossings,
        passages=braid_passages(word, strands),
        name=name,
        braid_origin=origin,
    )
    logger.debug("Closed braid %s on %d strands: %d arcs", word, strands, diagram.n)
    return diagram


def strand_arcs(diagram: KnotDiagram) -> list[int]:
    """Arc labels of the N strands through the disk (the braid generating set)."""
    if diagram.braid_origin is None:
        return []
    return list(range(1, min(diagram.braid_origin.strands, diagram.n) + 1))
