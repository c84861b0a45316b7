"""Colouring temporal graphs: verification, constructive bounds, exact solvers and gadgets."""

from .coloring import ColoringSeq, Verdict, colors_used, is_compatible, verify
from .constructive import (
    OnlineStepper,
    SnapshotColorings,
    color_bounded_degree,
    color_bounded_degree_duplicated,
    color_cube,
    color_double,
    color_growpace1,
    color_square_duplicated,
)
from .enumeration import EnumerationResult, enumerate_growpace1
from .errors import BudgetExceeded, ContractError, FormatError, ShapeError
from .exact import (
    BoundReport,
    SearchConfig,
    bound_report,
    chi_static,
    chi_temporal,
    extendable,
    solve_temporal,
)
from .gadgets import GADGETS, GadgetInstance, build
from .graph import (
    StaticGraph,
    TemporalGraph,
    degeneracy,
    grow_pace,
    is_bipartite,
    max_degree,
    smash,
    snapshot,
)
from .reduction import Col2Reduction, StaticReduction, decide_2colorable, to_col2, to_static

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetExceeded",
    "Col2Reduction",
    "ColoringSeq",
    "ContractError",
    "EnumerationResult",
    "FormatError",
    "GADGETS",
    "GadgetInstance",
    "OnlineStepper",
    "SearchConfig",
    "ShapeError",
    "SnapshotColorings",
    "StaticGraph",
    "StaticReduction",
    "TemporalGraph",
    "Verdict",
    "bound_report",
    "build",
    "chi_static",
    "chi_temporal",
    "color_bounded_degree",
    "color_bounded_degree_duplicated",
    "color_cube",
    "color_double",
    "color_growpace1",
    "color_square_duplicated",
    "colors_used",
    "decide_2colorable",
    "degeneracy",
    "enumerate_growpace1",
    "extendable",
    "grow_pace",
    "is_bipartite",
    "is_compatible",
    "max_degree",
    "smash",
    "snapshot",
    "solve_temporal",
    "to_col2",
    "to_static",
    "verify",
]
