"""End-to-end enumeration strategies for satisfying teams."""
