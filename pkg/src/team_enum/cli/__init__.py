"""Command line interface module for Team Enum."""
