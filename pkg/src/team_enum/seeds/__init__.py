"""Incremental construction of zero-containing satisfying teams."""
