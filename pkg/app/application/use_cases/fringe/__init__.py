from .trace_fringe import TraceFringeUseCase, sampling_line

__all__ = ["TraceFringeUseCase", "sampling_line"]
