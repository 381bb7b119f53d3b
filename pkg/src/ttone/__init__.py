"""t-tone edge colorings: verification, exact indices, bounds and constructive colorers."""

from .coloring import PartialColoring, label, verify
from .errors import (
    ColoringDefect,
    HypothesisViolated,
    InputError,
    LimitReached,
    ParseError,
    TToneError,
    UnsupportedInput,
)
from .graph import Multigraph

__version__ = "0.1.0"

__all__ = [
    "ColoringDefect", "HypothesisViolated", "InputError", "LimitReached", "Multigraph",
    "ParseError", "PartialColoring", "TToneError", "UnsupportedInput", "label", "verify",
]
