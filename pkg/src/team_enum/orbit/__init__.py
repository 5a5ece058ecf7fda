"""Orbit enumeration under the flipping-bits group action."""
