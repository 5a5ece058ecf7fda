"""Unit tests for the bitwise trie and the containers built on it."""

import pytest

from team_enum.seeds.exceptions import KeyWidthError, UnsortedInsertError
from team_enum.seeds.index import AssignmentList, SeedIndex, SeedSet, team_key
from team_enum.seeds.trie import BitTrie
from team_enum.team.assignment import Assignment
from team_enum.team.cost import StepCounter
from team_enum.team.exceptions import WidthMismatchError
from tests.oracle import team


def test_insert_get_contains() -> None:
    """Stored keys are found and others are not."""
    trie: BitTrie[str] = BitTrie(4)
    trie.insert(0b1010, "a")
    trie.insert(0b0011, "b")
    assert len(trie) == 2
    assert trie.get(0b1010) == "a"
    assert trie.get(0b1011) is None
    assert 0b0011 in trie
    assert 0b0010 not in trie
    assert "0011" not in trie
    trie.insert(0b1010, "c")
    assert len(trie) == 2
    assert trie.get(0b1010) == "c"


def test_ordered_items_and_first() -> None:
    """Traversal visits keys in ascending order."""
    trie: BitTrie[int] = BitTrie(3)
    for key in (6, 1, 7, 0, 4):
        trie.insert(key, key * 10)
    assert list(trie.items()) == [(0, 0), (1, 10), (4, 40), (6, 60), (7, 70)]
    assert trie.first() == (0, 0)
    assert BitTrie[int](3).first() is None


def test_delete_prunes() -> None:
    """Deleting the smallest key moves ``first`` to the next one."""
    trie: BitTrie[int] = BitTrie(3)
    for key in (2, 3, 5):
        trie.insert(key, key)
    assert trie.delete(2)
    assert not trie.delete(2)
    assert not trie.delete(4)
    assert trie.first() == (3, 3)
    assert trie.delete(3)
    assert trie.first() == (5, 5)
    assert list(trie.items()) == [(5, 5)]
    assert len(trie) == 1


def test_key_width() -> None:
    """Keys must fit the trie width; zero-width tries hold one key."""
    trie: BitTrie[int] = BitTrie(2)
    with pytest.raises(KeyWidthError):
        trie.insert(4, 0)
    empty_key: BitTrie[str] = BitTrie(0)
    empty_key.insert(0, "only")
    assert list(empty_key.items()) == [(0, "only")]


def test_edges_are_metered() -> None:
    """Every edge traversal is one step."""
    counter = StepCounter()
    trie: BitTrie[int] = BitTrie(5, counter)
    trie.insert(3, 3)
    assert counter.steps == 5
    assert 3 in trie
    assert counter.steps == 10


def test_assignment_list() -> None:
    """Extension lists only grow at the top."""
    items = AssignmentList(3)
    items.append(Assignment.parse("010"))
    items.append(Assignment.parse("110"))
    assert len(items) == 2
    assert str(items[1]) == "110"
    assert Assignment.parse("010") in items
    assert Assignment.parse("100") not in items
    with pytest.raises(UnsortedInsertError):
        items.append(Assignment.parse("100"))
    with pytest.raises(WidthMismatchError):
        items.append(Assignment.parse("1111"))


def test_team_key_order() -> None:
    """Concatenated member bits order teams lexicographically."""
    teams = [team(x) for x in ("000,011", "000,010,100", "001,010")]
    assert [team_key(t) for t in teams] == [0b000011, 0b000010100, 0b001010]
    assert team_key(teams[0]) < team_key(teams[2])


def test_seed_set() -> None:
    """Seed sets iterate lexicographically and support deletion."""
    seeds = SeedSet(2, 3)
    for text in ("000,110", "000,010", "000,111", "000,100"):
        seeds.add(team(text))
    assert [str(x) for x in seeds] == ["000,010", "000,100", "000,110", "000,111"]
    assert team("000,100") in seeds
    assert team("000") not in seeds
    assert seeds.discard(team("000,010"))
    assert seeds.first() == team("000,100")
    assert len(seeds) == 3
    with pytest.raises(WidthMismatchError):
        seeds.add(team("000"))


def test_seed_index() -> None:
    """Extensions are grouped under their key team."""
    index = SeedIndex(3, 3)
    index.extend(team("000,010"), Assignment.parse("100"))
    index.extend(team("000,010"), Assignment.parse("110"))
    index.extend(team("000,100"), Assignment.parse("110"))
    assert len(index) == 2
    assert [str(e.team) for e in index.entries()] == ["000,010", "000,100"]
    found = index.extensions(team("000,010"))
    assert found is not None
    assert [str(x) for x in found] == ["100", "110"]
    assert index.extensions(team("000,001")) is None
