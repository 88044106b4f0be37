from .compare import compare_command
from .coverage import coverage_command
from .field import field_command
from .fringe import fringe_command
from .selection import select_command

__all__ = [
    "field_command",
    "compare_command",
    "coverage_command",
    "fringe_command",
    "select_command",
]
