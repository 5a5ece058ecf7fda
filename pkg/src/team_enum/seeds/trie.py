"""
Binary trie over fixed-width integer keys.

Keys are read from the most significant bit, so in-order traversal visits keys in
ascending integer order. A k-team over n variables is stored under the k*n bit
concatenation of its ascending members, which makes the trie order the lexicographic
team order. Each edge traversal ticks the step counter.
"""

from collections.abc import Iterator
from typing import cast

from team_enum.team.cost import NO_STEPS, StepCounter

from .exceptions import KeyWidthError


class _Node[V]:
    __slots__ = ("children", "terminal", "value")

    def __init__(self) -> None:
        self.children: list[_Node[V] | None] = [None, None]
        self.terminal = False
        self.value: V | None = None


class BitTrie[V]:
    """Map from ``key_bits``-wide integers to values, ordered by key."""

    def __init__(self, key_bits: int, counter: StepCounter = NO_STEPS) -> None:
        """Create an empty trie for keys of exactly ``key_bits`` bits."""
        self.key_bits = key_bits
        self._counter = counter
        self._root: _Node[V] = _Node()
        self._size = 0

    def __len__(self) -> int:
        """Return the number of stored keys."""
        return self._size

    def _bits(self, key: int) -> Iterator[int]:
        if not 0 <= key < (1 << self.key_bits):
            raise KeyWidthError(key, self.key_bits)
        for shift in range(self.key_bits - 1, -1, -1):
            yield (key >> shift) & 1

    def _find(self, key: int) -> _Node[V] | None:
        node: _Node[V] | None = self._root
        for bit in self._bits(key):
            if node is None:
                return None
            self._counter.tick()
            node = node.children[bit]
        return node

    def __contains__(self, key: object) -> bool:
        """Return True if the key is stored."""
        if not isinstance(key, int):
            return False
        node = self._find(key)
        return node is not None and node.terminal

    def get(self, key: int) -> V | None:
        """Return the value stored under a key, or None."""
        node = self._find(key)
        if node is None or not node.terminal:
            return None
        return node.value

    def insert(self, key: int, value: V) -> None:
        """Store a value under a key, replacing any previous value."""
        node = self._root
        for bit in self._bits(key):
            self._counter.tick()
            child = node.children[bit]
            if child is None:
                child = node.children[bit] = _Node()
            node = child
        if not node.terminal:
            self._size += 1
        node.terminal = True
        node.value = value

    def delete(self, key: int) -> bool:
        """Remove a key and prune branches left empty. Return True if it existed."""
        path: list[tuple[_Node[V], int]] = []
        node: _Node[V] | None = self._root
        for bit in self._bits(key):
            if node is None:
                return False
            self._counter.tick()
            path.append((node, bit))
            node = node.children[bit]
        if node is None or not node.terminal:
            return False
        node.terminal = False
        node.value = None
        self._size -= 1
        for parent, bit in reversed(path):
            child = parent.children[bit]
            if child is None or child.terminal or any(child.children):
                break
            parent.children[bit] = None
        return True

    def items(self) -> Iterator[tuple[int, V]]:
        """Yield ``(key, value)`` pairs in ascending key order."""
        stack: list[tuple[_Node[V], int, int]] = [(self._root, 0, 0)]
        while stack:
            node, key, depth = stack.pop()
            if depth == self.key_bits:
                if node.terminal:
                    yield key, cast("V", node.value)
                continue
            for bit in (1, 0):
                child = node.children[bit]
                if child is not None:
                    self._counter.tick()
                    stack.append((child, (key << 1) | bit, depth + 1))

    def first(self) -> tuple[int, V] | None:
        """Return the pair with the smallest key, or None when empty."""
        if not self._size:
            return None
        node, key = self._root, 0
        for _ in range(self.key_bits):
            self._counter.tick()
            bit = 0 if node.children[0] is not None else 1
            child = node.children[bit]
            if child is None:
                return None
            node, key = child, (key << 1) | bit
        return key, cast("V", node.value)
