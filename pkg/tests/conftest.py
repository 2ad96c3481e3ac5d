import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from glyphkit import data_path  # noqa: E402

DEMO_TOKENS = "hy3ph he2n hena4 hen5at 1na n2at 1tio 2io o2n".split()


@pytest.fixture(scope="session")
def demo_text():
    return data_path("demo.pat").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def english_text():
    return data_path("en-us.pat").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def english_packed(english_text):
    from glyphkit.hyphenation import build_trie, pack_trie, parse_patterns

    return pack_trie(build_trie(parse_patterns(english_text)))
