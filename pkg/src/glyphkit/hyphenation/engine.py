"""Break positions from interletter values: a gap may break when its value is odd."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Protocol, Sequence

from .patterns import BOUNDARY, fold_word


class Matcher(Protocol):
    def match_values(self, codes: Sequence[int]) -> list[int]: ...


@dataclass(frozen=True)
class HyphenationResult:
    word: str
    gap_values: tuple[int, ...]
    breaks: frozenset[int]
    """Break positions, counted as the number of letters before the hyphen."""

    def pieces(self) -> list[str]:
        cuts = [0, *sorted(self.breaks), len(self.word)]
        return [self.word[a:b] for a, b in zip(cuts, cuts[1:])]

    def marked(self, marker: str = "-") -> str:
        return marker.join(self.pieces())


def interletter_values(word: str | Sequence[int], trie: Matcher) -> list[int]:
    """Gap values between adjacent letters of an already folded ``word``."""
    codes = [ord(ch) for ch in word] if isinstance(word, str) else list(word)
    n = len(codes)
    if n == 0:
        return []
    points = trie.match_values([BOUNDARY, *codes, BOUNDARY])
    # points[p] is the gap before position p of the boundary-wrapped word
    return points[2 : n + 1]


def hyphenate(
    word: str,
    trie: Matcher,
    left_min: int = 2,
    right_min: int = 3,
    exceptions: Mapping[str, frozenset[int]] | None = None,
    fold: Mapping[int, int] | None = None,
) -> HyphenationResult:
    if left_min < 1 or right_min < 1:
        raise ValueError("left_min and right_min must be at least 1")
    n = len(word)
    if n == 0:
        return HyphenationResult(word, (), frozenset())
    folded = fold_word(word, fold)
    if exceptions and folded in exceptions:
        breaks = frozenset(exceptions[folded])
        gaps = tuple(int(i + 1 in breaks) for i in range(n - 1))
        return HyphenationResult(word, gaps, breaks)

    gaps = tuple(interletter_values(folded, trie))
    breaks = frozenset(
        i + 1
        for i, v in enumerate(gaps)
        if v % 2 == 1 and i + 1 >= left_min and n - i - 1 >= right_min
    )
    return HyphenationResult(word, gaps, breaks)


class Hyphenator:
    """Patterns, exceptions, margins and folding bundled for one language."""

    def __init__(self, trie, exceptions=None, left_min=2, right_min=3, fold=None):
        self.trie = trie
        self.exceptions = exceptions or {}
        self.left_min = left_min
        self.right_min = right_min
        self.fold = fold

    def __call__(self, word: str) -> HyphenationResult:
        return hyphenate(
            word, self.trie, self.left_min, self.right_min, self.exceptions, self.fold
        )
