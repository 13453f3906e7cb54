"""

Braid words, their closures and cables.

A braid on n strands is a sequence of signed letters. Letter g > 0 is the
generator sigma_g in which the strand at position g - 1 crosses over the
strand at position g (positions are 0-based, generators 1-based); g < 0 is
its inverse. Closures carry the blackboard framing.

"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from knot.skein.homfly._errors import (
    GeneratorIndexError,
    ParseError,
    WidthMismatch,
)
from knot.skein.homfly._logger import get_homfly_logger

logger = get_homfly_logger()

STANDARD_LINKS: Dict[str, str] = {
    "unknot": "BR[1; ]",
    "hopf": "BR[2; 1 1]",
    "trefoil": "BR[2; 1 1 1]",
    "figure-eight": "BR[3; 1 -2 1 -2]",
    "torus-2-4": "BR[2; 1 1 1 1]",
}

_INTEGER = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class BraidWord:
    """A braid word on ``strands`` strands.

    Args:
        strands: number of strands, at least 1.
        letters: nonzero integers with absolute value below ``strands``.

    Raises:
        GeneratorIndexError: if a letter names a generator outside
            1..strands-1.
    """

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"A braid needs at least one strand: {self.strands}")
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        for g in self.letters:
            if g == 0:
                raise ValueError("0 is not a braid generator")
            if abs(g) >= self.strands:
                raise GeneratorIndexError(
                    f"generator {g} out of range for {self.strands} strands"
                )

    @property
    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    @property
    def permutation(self) -> Tuple[int, ...]:
        """Top label of the strand that ends at each bottom position."""
        labels = list(range(self.strands))
        for g in self.letters:
            i = abs(g) - 1
            labels[i], labels[i + 1] = labels[i + 1], labels[i]
        return tuple(labels)

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in self.letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("braids on different numbers of strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return f"BR[{self.strands}; {' '.join(str(g) for g in self.letters)}]"

    def to_json(self) -> dict:
        return {"n": self.strands, "word": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["n"]), tuple(data["word"]))


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str):
        self.skip()
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip()
        match = _INTEGER.match(self.text, self.pos)
        if match is None:
            raise ParseError("expected an integer", self.pos)
        self.pos = match.end()
        return int(match.group())


def parse_braid(text: str) -> BraidWord:
    """Parse ``BR[<n>; <g1> <g2> ...]``.

    Whitespace is ignored and letters may also be separated by commas.

    Raises:
        ParseError: for malformed text, with the offending position.
        GeneratorIndexError: if a letter is out of range.
    """
    scanner = _Scanner(text)
    scanner.expect("BR")
    scanner.expect("[")
    start = scanner.pos
    strands = scanner.integer()
    if strands < 1:
        raise ParseError("a braid needs at least one strand", start)
    scanner.expect(";")
    letters: List[int] = []
    while scanner.peek() not in ("]", ""):
        if scanner.peek() == ",":
            scanner.pos += 1
            continue
        start = scanner.pos
        g = scanner.integer()
        if g == 0:
            raise ParseError("0 is not a braid generator", start)
        letters.append(g)
    scanner.expect("]")
    if scanner.peek():
        raise ParseError("unexpected trailing characters", scanner.pos)
    return BraidWord(strands, tuple(letters))


def resolve_link(text: str) -> BraidWord:
    """A braid from its text or from a standard link name."""
    name = text.strip().lower()
    if name in STANDARD_LINKS:
        return parse_braid(STANDARD_LINKS[name])
    return parse_braid(text)


@dataclass(frozen=True)
class LinkPresentation:
    """The closure of a braid with its component bookkeeping.

    ``components`` lists the 0-based strands of each component, components
    ordered by their smallest strand. ``linking_matrix`` holds the writhe of
    each component on the diagonal and linking numbers elsewhere.
    """

    braid: BraidWord
    components: Tuple[Tuple[int, ...], ...]
    linking_matrix: Tuple[Tuple[int, ...], ...]
    fdeg: int

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    @property
    def strand_components(self) -> Tuple[int, ...]:
        """Component index of each strand."""
        owner = [0] * self.braid.strands
        for c, strands in enumerate(self.components):
            for j in strands:
                owner[j] = c
        return tuple(owner)

    def framing_form(self, weights: Sequence[int]) -> int:
        """The quadratic form w^t . lk . w."""
        k = len(self.components)
        return sum(
            weights[i] * self.linking_matrix[i][j] * weights[j]
            for i in range(k)
            for j in range(k)
        )

    def to_json(self) -> dict:
        return {
            "components": [[j + 1 for j in c] for c in self.components],
            "lk": [list(row) for row in self.linking_matrix],
            "fdeg": self.fdeg,
        }


def analyze_closure(b: BraidWord) -> LinkPresentation:
    """Components, linking matrix and framing degree of a braid closure."""
    perm = b.permutation
    seen = [False] * b.strands
    components = []
    for start in range(b.strands):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = perm[j]
        components.append(tuple(sorted(cycle)))
    owner = [0] * b.strands
    for c, strands in enumerate(components):
        for j in strands:
            owner[j] = c

    k = len(components)
    counts = [[0] * k for _ in range(k)]
    labels = list(range(b.strands))
    for g in b.letters:
        i = abs(g) - 1
        sign = 1 if g > 0 else -1
        c1, c2 = owner[labels[i]], owner[labels[i + 1]]
        if c1 == c2:
            counts[c1][c1] += sign
        else:
            counts[c1][c2] += sign
            counts[c2][c1] += sign
        labels[i], labels[i + 1] = labels[i + 1], labels[i]

    lk = tuple(
        tuple(counts[i][j] if i == j else counts[i][j] // 2 for j in range(k))
        for i in range(k)
    )
    return LinkPresentation(b, tuple(components), lk, b.writhe)


def _strand_widths(link: LinkPresentation, widths: Sequence[int]):
    k = link.num_components
    n = link.braid.strands
    owner = link.strand_components
    widths = [int(w) for w in widths]
    if any(w < 1 for w in widths):
        raise ValueError(f"Cable widths must be positive: {widths}")
    if len(widths) == k:
        return [widths[owner[j]] for j in range(n)]
    if len(widths) == n:
        for c, strands in enumerate(link.components):
            if len({widths[j] for j in strands}) > 1:
                raise WidthMismatch(
                    f"strands {[j + 1 for j in strands]} of component "
                    f"{c + 1} have different widths"
                )
        return widths
    raise ValueError(
        f"Expected {k} component widths or {n} strand widths, "
        f"got {len(widths)}"
    )


def _block_word(p: int, q: int, offset: int) -> List[int]:
    # positive crossing of a p-block over the q-block to its right
    return [
        offset + p - j + k for j in range(p) for k in range(q)
    ]


def cable_braid(link: LinkPresentation, widths: Sequence[int]) -> BraidWord:
    """The blackboard cable of a braid closure.

    Args:
        link: the closure to cable.
        widths: one width per component, or one per strand.

    Returns:
        A braid on sum-of-widths strands in which each crossing becomes a
        block crossing of p*q letters.

    Raises:
        WidthMismatch: if two strands of a component get different widths.
    """
    current = _strand_widths(link, widths)
    total = sum(current)
    letters: List[int] = []
    for g in link.braid.letters:
        i = abs(g) - 1
        offset = sum(current[:i])
        p, q = current[i], current[i + 1]
        if g > 0:
            letters.extend(_block_word(p, q, offset))
        else:
            letters.extend(-h for h in reversed(_block_word(q, p, offset)))
        current[i], current[i + 1] = q, p
    logger.debug(
        "Cabled %s letters on %s strands into %s letters on %s strands",
        len(link.braid), link.braid.strands, len(letters), total,
    )
    return BraidWord(total, tuple(letters))


def split_union(b1: BraidWord, b2: BraidWord) -> BraidWord:
    """The distant union: b2 placed to the right of b1."""
    shift = b1.strands
    return BraidWord(
        b1.strands + b2.strands,
        b1.letters + tuple(g + shift if g > 0 else g - shift for g in b2.letters),
    )
