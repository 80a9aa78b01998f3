"""Errors raised by the figure scripts."""


class MissingInput(FileNotFoundError):
    """No usable input files were found under the given directory."""
