"""Team enumeration for Poor Man's propositional dependence logic."""

from team_enum.version import __version__

__all__ = ["__version__"]
