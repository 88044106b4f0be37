"""
Command-line presentation layer (``ssbcov``).
"""

from .router import cli

__all__ = ["cli"]
