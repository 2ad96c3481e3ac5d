"""Reading hyphenation pattern and exception files.

A pattern token such as ``hen5at`` interleaves letters with digits; a digit
votes on the gap it sits in, an omitted digit counts as zero.  A leading or
trailing ``.`` ties the pattern to the start or end of the word.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from typing import Iterator, Mapping

# Key symbol for the word boundary written as '.' in pattern files.
BOUNDARY = -1

_EXTRA_LETTERS = frozenset("'’")


class PatternParseError(ValueError):
    def __init__(self, message: str, line: int, token: str):
        super().__init__(f"line {line}: {message}: {token!r}")
        self.line = line
        self.token = token


@dataclass(frozen=True)
class Pattern:
    letters: tuple[int, ...]
    values: tuple[int, ...]
    anchored_start: bool = False
    anchored_end: bool = False

    def __post_init__(self):
        if not self.letters:
            raise ValueError("pattern needs at least one letter")
        if len(self.values) != len(self.letters) + 1:
            raise ValueError("pattern needs one value per gap, len(letters) + 1")
        if any(not 0 <= v <= 9 for v in self.values):
            raise ValueError("pattern values must be single digits")

    @classmethod
    def from_string(cls, token: str) -> "Pattern":
        return parse_token(token)

    def key(self) -> tuple[int, ...]:
        """Letter codes with BOUNDARY added at anchored ends."""
        return ((BOUNDARY,) if self.anchored_start else ()) + self.letters + (
            (BOUNDARY,) if self.anchored_end else ()
        )

    def key_values(self) -> tuple[int, ...]:
        """Values aligned with :meth:`key`, one per gap including both ends."""
        return ((0,) if self.anchored_start else ()) + self.values + (
            (0,) if self.anchored_end else ()
        )

    def __str__(self):
        out = ["."] if self.anchored_start else []
        for value, letter in zip(self.values, self.letters):
            if value:
                out.append(str(value))
            out.append(chr(letter))
        if self.values[-1]:
            out.append(str(self.values[-1]))
        if self.anchored_end:
            out.append(".")
        return "".join(out)


def is_letter(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "LM" or ch in _EXTRA_LETTERS


def _tokens(text: str) -> Iterator[tuple[int, str]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("%", 1)[0]
        for token in line.split():
            yield lineno, token


def parse_token(token: str, line: int = 1) -> Pattern:
    if re.match(r"\d\.", token) or re.search(r"\.\d$", token):
        raise PatternParseError("digit in anchor position", line, token)
    anchored_start = token.startswith(".")
    body = token[1:] if anchored_start else token
    anchored_end = body.endswith(".")
    if anchored_end:
        body = body[:-1]

    letters: list[int] = []
    values = [0]
    pending_digit = False
    for ch in body:
        if ch in "0123456789":
            if pending_digit:
                raise PatternParseError("two adjacent digits", line, token)
            values[-1] = int(ch)
            pending_digit = True
        elif ch == ".":
            raise PatternParseError("'.' allowed only at the ends", line, token)
        elif is_letter(ch):
            letters.append(ord(ch))
            values.append(0)
            pending_digit = False
        else:
            raise PatternParseError(f"malformed character {ch!r}", line, token)
    if not letters:
        raise PatternParseError("pattern has no letters", line, token)
    return Pattern(tuple(letters), tuple(values), anchored_start, anchored_end)


def parse_patterns(text: str) -> list[Pattern]:
    """Parse a whitespace-separated pattern list; '%' comments to end of line."""
    return [parse_token(token, lineno) for lineno, token in _tokens(text)]


def parse_fold_table(text: str) -> dict[int, int]:
    """Read lines of ``Upper lower`` character pairs into a folding table."""
    table = {}
    for lineno, token_line in enumerate(text.splitlines(), 1):
        fields = token_line.split("%", 1)[0].split()
        if not fields:
            continue
        if len(fields) != 2 or len(fields[0]) != 1 or len(fields[1]) != 1:
            raise PatternParseError("expected two single characters", lineno, token_line)
        table[ord(fields[0])] = ord(fields[1])
    return table


def fold_word(word: str, table: Mapping[int, int] | None = None) -> str:
    """Case-fold ``word`` letter by letter.

    Without a table only ASCII capitals are lowered; codes of 128 and above
    are kept as they are, since casing outside ASCII is language specific.
    """
    if table is not None:
        return "".join(chr(table.get(ord(ch), ord(ch))) for ch in word)
    return "".join(ch.lower() if ord(ch) < 128 else ch for ch in word)


def parse_exceptions(
    text: str, fold: Mapping[int, int] | None = None
) -> dict[str, frozenset[int]]:
    """Read words like ``ta-ble`` into ``{"table": {2}}``.

    Break positions count the letters before the hyphen.
    """
    exceptions: dict[str, frozenset[int]] = {}
    for lineno, token in _tokens(text):
        if token.startswith("-") or token.endswith("-") or "--" in token:
            raise PatternParseError("misplaced hyphen", lineno, token)
        pieces = token.split("-")
        breaks = []
        pos = 0
        for piece in pieces[:-1]:
            pos += len(piece)
            breaks.append(pos)
        exceptions[fold_word("".join(pieces), fold)] = frozenset(breaks)
    return exceptions
