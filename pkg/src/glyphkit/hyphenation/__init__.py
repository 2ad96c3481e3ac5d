from .engine import HyphenationResult, Hyphenator, hyphenate, interletter_values
from .patterns import (
    BOUNDARY,
    Pattern,
    PatternParseError,
    fold_word,
    parse_exceptions,
    parse_fold_table,
    parse_patterns,
)
from .trie import DuplicatePatternWarning, PackedTrie, PatternTrie, build_trie, pack_trie

__all__ = [
    "BOUNDARY",
    "DuplicatePatternWarning",
    "HyphenationResult",
    "Hyphenator",
    "PackedTrie",
    "Pattern",
    "PatternParseError",
    "PatternTrie",
    "build_trie",
    "fold_word",
    "hyphenate",
    "interletter_values",
    "pack_trie",
    "parse_exceptions",
    "parse_fold_table",
    "parse_patterns",
]
