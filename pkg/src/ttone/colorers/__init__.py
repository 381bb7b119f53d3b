"""Constructive 2-tone edge colorers, one per graph class."""

from .base import ColorerOutcome, Recorder, TraceStep, replay, sequence_labels
from .dispatch import COLORERS, applicable, auto_color, color_paths_and_cycles, color_with
from .greedy import color_general, color_outerplanar, color_planar
from .extensions import extend_degree_two, extend_diamond, extend_pendant_edge
from .sp import color_sp_subcubic
from .subcubic import color_2degenerate_subcubic, color_clawfree_subcubic
from .subcubic_outerplanar import CounterexampleFound, color_subcubic_outerplanar
from .tree import color_tree

__all__ = [
    "COLORERS", "ColorerOutcome", "CounterexampleFound", "Recorder", "TraceStep", "applicable",
    "auto_color", "color_2degenerate_subcubic", "color_clawfree_subcubic", "color_general",
    "color_outerplanar", "color_paths_and_cycles", "color_planar", "color_sp_subcubic",
    "color_subcubic_outerplanar", "color_tree", "color_with", "extend_degree_two",
    "extend_diamond", "extend_pendant_edge", "replay", "sequence_labels",
]
