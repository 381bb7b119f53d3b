"""Closed-form values and upper bounds for the t-tone chromatic index."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, isqrt
from typing import Optional

from .errors import InputError
from .graph import Multigraph
from .structure import ClassReport, classify

BOUND_NAMES = (
    "lower_tdelta", "general_t", "cc2", "t1_6d4", "planar", "outerplanar",
    "clawfree_subcubic", "degen2_subcubic", "sp_subcubic", "subcubic_outerplanar", "tree_exact",
)


def path_index(n: int, t: int) -> int:
    """Exact index of the path on n >= 2 vertices."""
    if n < 2:
        raise InputError("path_index needs n >= 2")
    if t < 1:
        raise InputError("t must be at least 1")
    return sum(max(0, t - comb(i, 2)) for i in range(n - 1))


def cycle_index_2tone(n: int) -> int:
    if n < 3:
        raise InputError("cycle_index_2tone needs n >= 3")
    return 6 if n in (3, 4, 7) else 5


def star_index(n: int, t: int) -> int:
    return t * n


def ceil_half_one_plus_sqrt(x: int) -> int:
    """ceil((1 + sqrt(x)) / 2) in exact integer arithmetic."""
    if x < 0:
        raise InputError("negative radicand")
    s = isqrt(x)
    if s * s == x:
        return (s + 2) // 2
    return (s + 1) // 2 + 1


def general_t_bound(delta: int, t: int) -> int:
    return (t * t + t) * (2 * delta - 2)


def cc2_bound(delta: int) -> int:
    return 4 * delta - 5 + ceil_half_one_plus_sqrt(1 + 8 * (2 * delta - 2) * (2 * delta - 3))


def greedy_bound(delta: int) -> int:
    return 6 * delta - 4


def planar_bound(delta: int) -> int:
    return max(41, 3 * delta + 5)


def outerplanar_bound(delta: int) -> int:
    return max(14, 3 * delta)


def chain_lower(t_minus_1_value: int) -> int:
    """Lower bound for tone t from the index at tone t - 1.

    Holds when the graph has two adjacent edges.  A matching has index t at
    every tone, so there the gap is only 1.
    """
    return t_minus_1_value + 2


@dataclass
class BoundReport:
    lower: int
    uppers: dict[str, int] = field(default_factory=dict)
    exact_known: Optional[int] = None
    exact_source: Optional[str] = None

    def best_upper(self) -> Optional[int]:
        return min(self.uppers.values(), default=None)

    def as_dict(self) -> dict:
        return {
            "lower_tdelta": self.lower,
            "uppers": dict(self.uppers),
            "exact_known": self.exact_known,
            "exact_source": self.exact_source,
        }

    def table(self) -> str:
        rows = [("lower_tdelta", str(self.lower))]
        rows += [(name, str(v)) for name, v in self.uppers.items()]
        if self.exact_known is not None:
            rows.append(("exact_known", f"{self.exact_known} ({self.exact_source})"))
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{a.ljust(width)}  {b}" for a, b in rows) + "\n"


def _path_or_cycle(g: Multigraph) -> tuple[str, int] | None:
    h = g.without_isolated()
    if h.edge_count == 0 or not h.is_connected() or not h.is_simple():
        return None
    if h.max_degree() > 2:
        return None
    if h.edge_count == h.vertex_count:
        return "cycle", h.vertex_count
    return "path", h.vertex_count


def upper_bounds(
    g: Multigraph, t: int = 2, classes: ClassReport | None = None, planar: bool = False
) -> BoundReport:
    """Lower bound tΔ and every upper bound whose hypotheses hold for ``g``."""
    if t < 1:
        raise InputError("t must be at least 1")
    if g.edge_count == 0:
        return BoundReport(lower=0)
    classes = classes or classify(g)
    delta = g.max_degree()
    rep = BoundReport(lower=t * delta)
    if delta >= 2:
        rep.uppers["general_t"] = general_t_bound(delta, t)
    if t == 2 and delta >= 2:
        rep.uppers["cc2"] = cc2_bound(delta)
        rep.uppers["t1_6d4"] = greedy_bound(delta)
        simple = g.is_simple()
        if planar and simple:
            rep.uppers["planar"] = planar_bound(delta)
        if classes.is_outerplanar:
            rep.uppers["outerplanar"] = outerplanar_bound(delta)
        if classes.is_subcubic and simple:
            if classes.is_claw_free:
                rep.uppers["clawfree_subcubic"] = 11
            if classes.is_2_degenerate:
                rep.uppers["degen2_subcubic"] = 10
            if classes.is_outerplanar:
                rep.uppers["subcubic_outerplanar"] = 8
        if classes.is_series_parallel_subcubic:
            rep.uppers["sp_subcubic"] = 9
        if classes.is_tree and delta >= 3:
            rep.uppers["tree_exact"] = 2 * delta
            rep.exact_known, rep.exact_source = 2 * delta, "tree"
    if rep.exact_known is None:
        shape = _path_or_cycle(g)
        if shape and shape[0] == "path":
            rep.exact_known, rep.exact_source = path_index(shape[1], t), "path"
        elif shape and shape[0] == "cycle" and t == 2:
            rep.exact_known, rep.exact_source = cycle_index_2tone(shape[1]), "cycle"
        elif classes.is_tree and g.edge_count == delta:
            rep.exact_known, rep.exact_source = star_index(delta, t), "star"
    return rep
