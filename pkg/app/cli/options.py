"""
Shared click options.
"""

from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
import numpy as np

from app.domain.entities import IndependentBeamPolicy, SnrScheme


class ThresholdsType(click.ParamType):
    """``start:step:stop`` (inclusive) or a comma separated list, strictly increasing."""

    name = "thresholds"

    def convert(self, value: Any, param, ctx) -> list[float]:
        if isinstance(value, list):
            return value
        text = str(value).strip()
        try:
            if ":" in text:
                start, step, stop = (float(part) for part in text.split(":"))
                if step <= 0:
                    self.fail("step must be positive", param, ctx)
                if stop < start:
                    self.fail("stop must not be below start", param, ctx)
                count = int(np.floor((stop - start) / step + 1e-9)) + 1
                values = np.round(start + step * np.arange(count), 9).tolist()
            else:
                values = [float(part) for part in text.split(",") if part.strip()]
        except ValueError:
            self.fail(f"cannot parse '{text}'", param, ctx)
        if not values:
            self.fail("at least one threshold is required", param, ctx)
        if not all(np.isfinite(values)):
            self.fail("thresholds must be finite", param, ctx)
        if any(b <= a for a, b in zip(values, values[1:])):
            self.fail("thresholds must be strictly increasing", param, ctx)
        return values


THRESHOLDS = ThresholdsType()


config_option = click.option(
    "--config",
    "config_path",
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
    help="Scenario TOML file.",
)
out_option = click.option(
    "--out",
    "output_dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Output directory [default: $SSBCOV_OUTPUT_DIR or ./results].",
)
threads_option = click.option(
    "--threads",
    type=click.IntRange(min=1),
    default=None,
    help="Worker cap [default: $SSBCOV_THREADS or 1]. Results do not depend on it.",
)
gamma_ref_option = click.option(
    "--gamma-ref",
    "gamma_ref_db",
    type=float,
    default=None,
    help="Reference SNR in dB used by the beam selection [default: 10].",
)
alpha_option = click.option(
    "--alpha",
    type=click.FloatRange(min=0.0, max=1.0, min_open=True),
    default=None,
    help="Dominance threshold of the enhanced scheme; enables it when given.",
)
n_select_option = click.option(
    "--n-select",
    type=click.IntRange(min=1),
    default=None,
    help="Number of joint beam tuples [default: scenario n_select or N].",
)
independent_beam_option = click.option(
    "--independent-beam",
    "policy",
    type=click.Choice([p.value for p in IndependentBeamPolicy]),
    default=IndependentBeamPolicy.SERVING.value,
    show_default=True,
    help="Beam of the closest BS in the independent baseline.",
)
scheme_option = click.option(
    "--scheme",
    type=click.Choice([s.value for s in SnrScheme]),
    default=SnrScheme.JOINT_FIXED.value,
    show_default=True,
)
thresholds_option = click.option(
    "--thresholds",
    type=THRESHOLDS,
    default="0:0.5:20",
    show_default=True,
    help="SNR thresholds in dB: start:step:stop or a comma separated list.",
)
ppm_option = click.option(
    "--ppm", is_flag=True, default=False, help="Also write a grayscale PPM heatmap."
)
samples_option = click.option(
    "--samples-per-wavelength",
    type=click.IntRange(min=2),
    default=None,
    help="Fringe sampling density [default: 128].",
)


def common_options(func: Callable) -> Callable:
    """--config, --out and --threads."""
    for option in (threads_option, out_option, config_option):
        func = option(func)
    return func
