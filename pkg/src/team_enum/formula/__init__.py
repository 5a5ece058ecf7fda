"""Formula parsing, reduction and reference semantics."""
