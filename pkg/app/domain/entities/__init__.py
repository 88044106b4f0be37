"""
Domain entities module.

This module contains all domain entities of the simulator.
Each entity validates its invariants on construction.
"""

from .beam_power_table import BeamPowerTable
from .channel_field import ChannelField, ChannelVector
from .coverage_report import CoverageReport
from .grid import Grid, make_grid
from .joint_beam_plan import GreedyTrace, JointBeamPlan, PlanScheme
from .network_scenario import NetworkScenario
from .run_manifest import RunManifest
from .snr_field import IndependentBeamPolicy, SnrField, SnrScheme

__all__ = [
    "NetworkScenario",
    "Grid",
    "make_grid",
    "ChannelVector",
    "ChannelField",
    "BeamPowerTable",
    "JointBeamPlan",
    "PlanScheme",
    "GreedyTrace",
    "SnrField",
    "SnrScheme",
    "IndependentBeamPolicy",
    "CoverageReport",
    "RunManifest",
]
