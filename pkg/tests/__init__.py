"""Team enumeration test suite."""
