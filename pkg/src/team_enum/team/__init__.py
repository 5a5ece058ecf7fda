"""Assignments, teams and the flipping-bits group action."""
