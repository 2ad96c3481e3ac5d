import random
import warnings

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import DEMO_TOKENS
from oracles import brute_force_gaps

from glyphkit.hyphenation import (
    BOUNDARY,
    DuplicatePatternWarning,
    Pattern,
    PatternParseError,
    build_trie,
    fold_word,
    hyphenate,
    interletter_values,
    pack_trie,
    parse_exceptions,
    parse_fold_table,
    parse_patterns,
)

DEMO_GAPS = [0, 3, 0, 0, 2, 5, 4, 2, 0, 2]


def codes(s):
    return tuple(ord(c) for c in s)


@pytest.mark.parametrize(
    "token, letters, values, start, end",
    [
        ("hy3ph", "hyph", (0, 0, 3, 0, 0), False, False),
        ("1na", "na", (1, 0, 0), False, False),
        (".ach4", "ach", (0, 0, 0, 4), True, False),
        ("ab1c.", "abc", (0, 0, 1, 0), False, True),
        (".é2è.", "éè", (0, 2, 0), True, True),
    ],
)
def test_parse_token(token, letters, values, start, end):
    (p,) = parse_patterns(token)
    assert p == Pattern(codes(letters), values, start, end)
    assert str(p) == token


def test_parse_comments_and_lines():
    pats = parse_patterns("% header\nhy3ph he2n % trailing\n\n  1na\n")
    assert [str(p) for p in pats] == ["hy3ph", "he2n", "1na"]


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("1.ach", 1, "anchor"),
        ("ab\nach.4", 2, "anchor"),
        ("a12b", 1, "adjacent"),
        (".", 1, "no letters"),
        ("..", 1, "no letters"),
        ("3", 1, "no letters"),
        ("a.b", 1, "ends"),
        ("ab$", 1, "malformed"),
    ],
)
def test_parse_errors(text, line, message):
    with pytest.raises(PatternParseError) as err:
        parse_patterns(text)
    assert err.value.line == line
    assert message in str(err.value)


def test_pattern_invariants():
    with pytest.raises(ValueError):
        Pattern((), (0,))
    with pytest.raises(ValueError):
        Pattern(codes("ab"), (0, 0))
    with pytest.raises(ValueError):
        Pattern(codes("a"), (0, 10))


def test_key_adds_boundaries():
    (p,) = parse_patterns(".ach4")
    assert p.key() == (BOUNDARY, *codes("ach"))
    assert p.key_values() == (0, 0, 0, 0, 4)


def test_empty_trie():
    trie = build_trie([])
    assert trie.lookup(codes("a")) is None
    assert interletter_values("hyphenation", trie) == [0] * 10
    packed = pack_trie(trie)
    assert len(packed) == 1
    assert interletter_values("hyphenation", packed) == [0] * 10


def test_single_insertion_lookup():
    trie = build_trie(parse_patterns("hy3ph"))
    assert trie.lookup(codes("hyph")) == (0, 0, 3, 0, 0)
    assert trie.lookup(codes("hyp")) is None


def test_duplicate_last_wins_with_warning():
    with pytest.warns(DuplicatePatternWarning):
        trie = build_trie(parse_patterns("a1 a2"))
    assert trie.lookup(codes("a")) == (0, 2)
    assert trie.stats()["patterns"] == 1


def test_anchors_are_distinct_keys():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        trie = build_trie(parse_patterns("a1b .a2b a3b."))
    assert trie.stats()["patterns"] == 3


def test_demo_gap_values(demo_text):
    trie = build_trie(parse_patterns(demo_text))
    assert interletter_values("hyphenation", trie) == DEMO_GAPS
    assert brute_force_gaps("hyphenation", DEMO_TOKENS) == DEMO_GAPS
    assert interletter_values("hyphenation", pack_trie(trie)) == DEMO_GAPS


def test_demo_hyphenate(demo_text):
    trie = build_trie(parse_patterns(demo_text))
    result = hyphenate("hyphenation", trie, left_min=2, right_min=3)
    assert result.breaks == {2, 6}
    assert result.marked() == "hy-phen-ation"
    assert result.pieces() == ["hy", "phen", "ation"]


def test_boundary_value_is_not_a_gap():
    trie = build_trie(parse_patterns("1na"))
    assert interletter_values("na", trie) == [0]


def test_anchored_patterns_only_match_at_ends():
    trie = build_trie(parse_patterns(".ab1c c1d."))
    assert interletter_values("abcd", trie) == [0, 1, 1]
    assert interletter_values("xabcdx", trie) == [0] * 5


def test_short_word_has_no_breaks():
    trie = build_trie(parse_patterns("1a 1b 1c 1d"))
    result = hyphenate("abcd", trie, left_min=2, right_min=3)
    assert result.gap_values == (1, 1, 1)
    assert result.breaks == frozenset()


def test_exception_bypasses_patterns():
    exc = parse_exceptions("ta-ble")
    assert exc == {"table": frozenset({2})}
    result = hyphenate("table", build_trie([]), exceptions=exc)
    assert result.breaks == {2}
    assert result.marked() == "ta-ble"


def test_exceptions_fold_and_multiple():
    assert parse_exceptions("") == {}
    exc = parse_exceptions("a-b c-d\nHy-phen-ation")
    assert exc == {"ab": {1}, "cd": {1}, "hyphenation": {2, 6}}


@pytest.mark.parametrize("bad", ["-ab", "ab-", "a--b"])
def test_exception_errors(bad):
    with pytest.raises(PatternParseError):
        parse_exceptions(bad)


def test_empty_word():
    result = hyphenate("", build_trie([]))
    assert result.breaks == frozenset() and result.gap_values == ()


def test_margins_validated():
    with pytest.raises(ValueError):
        hyphenate("abc", build_trie([]), left_min=0)


def test_case_folding_default_and_table(demo_text):
    trie = build_trie(parse_patterns(demo_text))
    result = hyphenate("HyPhenation", trie)
    assert result.word == "HyPhenation"
    assert result.marked() == "Hy-Phen-ation"
    assert fold_word("ÄB") == "Äb"
    table = parse_fold_table("Ä ä\n% comment\nB b")
    assert fold_word("ÄB", table) == "äb"


def test_large_code_points():
    trie = build_trie(parse_patterns("\U0001d4d0" + "1" + "\U0001d4d1"))
    assert interletter_values("\U0001d4d0\U0001d4d1", pack_trie(trie)) == [1]


def test_english_packed_matches_linked(english_text):
    pats = parse_patterns(english_text)
    trie = build_trie(pats)
    packed = pack_trie(trie)
    stats = packed.stats()
    assert stats["patterns"] == len(pats)
    assert stats["packed_length"] >= stats["nodes"]
    for p in pats:
        word = "".join(chr(c) for c in p.letters)
        assert packed.match_values([BOUNDARY, *p.letters, BOUNDARY]) == trie.match_values(
            [BOUNDARY, *p.letters, BOUNDARY]
        ), word


@pytest.mark.parametrize(
    "word, expected",
    [("hyphenation", "hy-phen-ation"), ("typesetting", "type-set-ting"), ("computers", "com-put-ers")],
)
def test_english_samples(english_packed, word, expected):
    packed = english_packed
    assert hyphenate(word, packed).marked() == expected


def test_demo_packed_random_strings(demo_text):
    trie = build_trie(parse_patterns(demo_text))
    packed = pack_trie(trie)
    rng = random.Random(16)
    alphabet = "hypenatio"
    for _ in range(10_000):
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 12)))
        assert interletter_values(word, packed) == interletter_values(word, trie)


def test_packed_cells_do_not_collide(english_packed):
    packed = english_packed
    live = [i for i, tag in enumerate(packed.tags) if tag]
    # every live cell is reachable from exactly one base
    owners = {}
    stack = [packed.root_base]
    while stack:
        base = stack.pop()
        for c in range(1, len(packed.codes) + 1):
            slot = base + c
            if slot < len(packed.tags) and packed.tags[slot] == c and slot not in owners:
                owners[slot] = base
                if packed.bases[slot] >= 0:
                    stack.append(packed.bases[slot])
    assert sorted(owners) == live


# -- properties -------------------------------------------------------------

letters = st.sampled_from("abcd")
pattern_tokens = st.builds(
    lambda start, body, digits, end: (
        ("." if start else "")
        + "".join(f"{d or ''}{ch}" for d, ch in zip(digits, body))
        + (str(digits[-1]) if digits[-1] else "")
        + ("." if end else "")
    ),
    st.booleans(),
    st.text(alphabet="abcd", min_size=1, max_size=4),
    st.lists(st.integers(0, 9), min_size=5, max_size=5),
    st.booleans(),
)
words = st.text(alphabet="abcd", min_size=1, max_size=10)


def _dedupe(tokens):
    seen = {}
    for t in tokens:
        seen[parse_patterns(t)[0].key()] = t
    return list(seen.values())


@settings(max_examples=200, deadline=None)
@given(st.lists(pattern_tokens, max_size=12), words)
def test_trie_matches_brute_force(tokens, word):
    tokens = _dedupe(tokens)
    trie = build_trie(parse_patterns(" ".join(tokens)))
    assert interletter_values(word, trie) == brute_force_gaps(word, tokens)
    assert interletter_values(word, pack_trie(trie)) == brute_force_gaps(word, tokens)


@settings(max_examples=200, deadline=None)
@given(st.lists(pattern_tokens, max_size=12), words, st.integers(1, 4), st.integers(1, 4))
def test_breaks_odd_and_margins_only_shrink(tokens, word, left, right):
    trie = build_trie(parse_patterns(" ".join(_dedupe(tokens))))
    result = hyphenate(word, trie, left, right)
    loose = hyphenate(word, trie, 1, 1)
    assert result.word == word
    assert all(result.gap_values[b - 1] % 2 == 1 for b in result.breaks)
    assert result.breaks <= loose.breaks
    assert all(left <= b <= len(word) - right for b in result.breaks)


@settings(max_examples=200, deadline=None)
@given(st.lists(pattern_tokens, max_size=8), st.text(alphabet="abcd", min_size=1, max_size=4), words)
def test_zero_pattern_is_inert(tokens, zero_letters, word):
    patterns = parse_patterns(" ".join(_dedupe(tokens)))
    zero = Pattern(codes(zero_letters), (0,) * (len(zero_letters) + 1))
    assume(zero.key() not in {p.key() for p in patterns})
    base = build_trie(patterns)
    with_zero = build_trie([*patterns, zero])
    assert interletter_values(word, with_zero) == interletter_values(word, base)
