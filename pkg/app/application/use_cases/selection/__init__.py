"""
Selection Use Cases Module.
"""

from .select_beams import SelectBeamsUseCase

__all__ = ["SelectBeamsUseCase"]
