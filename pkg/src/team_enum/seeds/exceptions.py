"""Exceptions to throw when constructing seed teams."""


class LevelCompleteError(RuntimeError):
    """Flag when a finished level is advanced again."""

    def __init__(self, level: int) -> None:
        """Pass message to RuntimeError exception."""
        msg = f"Seed construction for level {level} is already complete."
        super().__init__(msg)


class LevelIncompleteError(RuntimeError):
    """Flag when the results of an unfinished level are requested."""

    def __init__(self, level: int) -> None:
        """Pass message to RuntimeError exception."""
        msg = f"Seed construction for level {level} has not finished yet."
        super().__init__(msg)


class UnsortedInsertError(ValueError):
    """Flag when an extension list would lose its ascending order."""

    def __init__(self, item: object, last: object) -> None:
        """Pass message to ValueError exception."""
        msg = f"Cannot append '{item}' after '{last}'; extensions must ascend."
        super().__init__(msg)


class KeyWidthError(ValueError):
    """Flag when a trie key does not fit the trie's key width."""

    def __init__(self, key: int, key_bits: int) -> None:
        """Pass message to ValueError exception."""
        msg = f"Invalid trie key '{key}'. Must fit into {key_bits} bits."
        super().__init__(msg)
