"""Subcommand registration helpers."""
