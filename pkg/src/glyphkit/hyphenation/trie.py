"""Pattern tries: a linked form for building and a packed single-array form."""

from __future__ import annotations

import warnings
from array import array
from collections import deque
from typing import Iterable, Sequence

from .patterns import Pattern


class DuplicatePatternWarning(UserWarning):
    pass


class _Node:
    __slots__ = ("children", "values", "ops")

    def __init__(self):
        self.children: dict[int, _Node] = {}
        self.values: tuple[int, ...] | None = None
        self.ops: tuple[tuple[int, int], ...] = ()


def _sparse(values: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Nonzero entries as (offset, value); zeros never raise a gap."""
    return tuple((k, v) for k, v in enumerate(values) if v)


class PatternTrie:
    """Trie keyed by letter codes; nodes that end a pattern hold its values.

    Treat the trie as read-only once queries start; it is then safe to share
    between threads.
    """

    def __init__(self):
        self.root = _Node()
        self.pattern_count = 0
        self.node_count = 1
        self.max_depth = 0

    def insert(self, pattern: Pattern) -> None:
        key = pattern.key()
        node = self.root
        for code in key:
            child = node.children.get(code)
            if child is None:
                child = node.children[code] = _Node()
                self.node_count += 1
            node = child
        if node.values is not None:
            warnings.warn(
                f"duplicate pattern {pattern}; the later one wins",
                DuplicatePatternWarning,
                stacklevel=3,
            )
        else:
            self.pattern_count += 1
        node.values = pattern.key_values()
        node.ops = _sparse(node.values)
        self.max_depth = max(self.max_depth, len(key))

    def lookup(self, key: Sequence[int]) -> tuple[int, ...] | None:
        node = self.root
        for code in key:
            node = node.children.get(code)
            if node is None:
                return None
        return node.values

    def match_values(self, codes: Sequence[int]) -> list[int]:
        """Max of aligned pattern values at every gap of ``codes``.

        Position ``p`` of the result is the gap just before ``codes[p]``.
        """
        n = len(codes)
        points = [0] * (n + 1)
        root = self.root
        for start in range(n):
            node = root
            for code in codes[start:]:
                node = node.children.get(code)
                if node is None:
                    break
                for k, v in node.ops:
                    if v > points[start + k]:
                        points[start + k] = v
        return points

    def nodes(self) -> Iterable[_Node]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(node.children.values())

    def stats(self) -> dict:
        return {
            "patterns": self.pattern_count,
            "nodes": self.node_count,
            "max_depth": self.max_depth,
        }


def build_trie(patterns: Iterable[Pattern]) -> PatternTrie:
    trie = PatternTrie()
    for pattern in patterns:
        trie.insert(pattern)
    return trie


class PackedTrie:
    """All child arrays of a :class:`PatternTrie` interleaved in one array.

    Letters are renumbered densely from 1.  A node owns a base offset; its
    child for dense code ``c`` lives at cell ``base + c`` and carries ``c``
    as a tag, so a lookup checks the tag to see whether the cell really
    belongs to the node.  Cell 0 is the root sentinel.  A cell that ends a
    pattern points into ``ops``, the pattern's nonzero (offset, value) pairs.
    """

    def __init__(self, codes, tags, value_refs, bases, ops, root_base, stats, length=None):
        self.codes = codes
        self.tags = tags
        self.value_refs = value_refs
        self.bases = bases
        self.ops = ops
        self.root_base = root_base
        self._stats = stats
        self.missing = len(codes) + 1
        self.length = len(tags) if length is None else length
        # The same cells as (tag, ops, base) tuples: one index per lookup step.
        self._cells = [
            (t, ops[r] if r >= 0 else (), b) for t, r, b in zip(tags, value_refs, bases)
        ]

    def __len__(self):
        return self.length

    def match_values(self, codes: Sequence[int]) -> list[int]:
        n = len(codes)
        points = [0] * (n + 1)
        # Unknown letters get a code no cell carries; the arrays are padded
        # so base + code never runs past the end.
        missing = self.missing
        dense = [self.codes.get(c, missing) for c in codes]
        cells = self._cells
        for start in range(n):
            base = self.root_base
            for c in dense[start:]:
                tag, ops, base = cells[base + c]
                if tag != c:
                    break
                for k, v in ops:
                    if v > points[start + k]:
                        points[start + k] = v
                if base < 0:
                    break
        return points

    def stats(self) -> dict:
        return dict(self._stats, packed_length=self.length)


def pack_trie(trie: PatternTrie) -> PackedTrie:
    """Pack ``trie`` with first-fit placement of each node's child array."""
    alphabet = sorted({code for node in trie.nodes() for code in node.children})
    dense = {code: i + 1 for i, code in enumerate(alphabet)}

    tags = array("l", [0])
    refs = array("l", [-1])
    bases = array("l", [-1])
    occupied = bytearray(b"\x01")
    used_bases: set[int] = set()
    ops: list[tuple[tuple[int, int], ...]] = []
    first_free = 1

    def grow(to):
        extra = to - len(tags)
        if extra > 0:
            tags.extend([0] * extra)
            refs.extend([-1] * extra)
            bases.extend([-1] * extra)
            occupied.extend(bytes(extra))

    def place(offsets):
        # Smallest unused base whose slots are all free.  Candidates are
        # taken from free slots for the first child, scanned in C via find().
        nonlocal first_free
        first_free = occupied.find(0, first_free)
        if first_free < 0:
            first_free = len(occupied)
        lead = offsets[0]
        f = first_free
        while True:
            base = f - lead
            if base >= 0 and base not in used_bases and all(
                base + c >= len(occupied) or not occupied[base + c] for c in offsets[1:]
            ):
                return base
            f = occupied.find(0, f + 1) if f + 1 < len(occupied) else f + 1
            if f < 0:
                f = len(occupied)

    root_base = 0
    queue = deque([(trie.root, None)])
    while queue:
        node, cell = queue.popleft()
        if not node.children:
            continue
        items = sorted((dense[code], child) for code, child in node.children.items())
        offsets = [c for c, _ in items]
        base = place(offsets)
        used_bases.add(base)
        grow(base + offsets[-1] + 1)
        for c, child in items:
            slot = base + c
            occupied[slot] = 1
            tags[slot] = c
            if child.ops:
                refs[slot] = len(ops)
                ops.append(child.ops)
            queue.append((child, slot))
        if cell is None:
            root_base = base
        else:
            bases[cell] = base

    length = len(tags)
    # Padding so that any base plus any code, known or not, stays in range.
    grow(length + len(dense) + 2)
    return PackedTrie(dense, tags, refs, bases, ops, root_base, trie.stats(), length)
