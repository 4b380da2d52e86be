"""Exact colouring oracles: lists, covers, choosability, DP-colouring, painting games."""

from .base import NodeCounter, OracleBudgetExceeded, OracleResult, bfs_order, peel_surplus
from .choosability import is_f_choosable
from .covers import Cover, CoverFormatError, induced_cover, is_cover_colouring, solve_cover_colouring
from .dp import is_dp_f_colourable, maximal_covers
from .lists import ListAssignment, ListAssignmentError, is_proper_list_colouring, solve_list_colouring
from .painting import PaintingGame, decide_dp_paintable, decide_paintable
from .parameters import ParameterUndecidedError, parameter

__all__ = [
    "NodeCounter",
    "OracleBudgetExceeded",
    "OracleResult",
    "bfs_order",
    "peel_surplus",
    "is_f_choosable",
    "Cover",
    "CoverFormatError",
    "induced_cover",
    "is_cover_colouring",
    "solve_cover_colouring",
    "is_dp_f_colourable",
    "maximal_covers",
    "ListAssignment",
    "ListAssignmentError",
    "is_proper_list_colouring",
    "solve_list_colouring",
    "PaintingGame",
    "decide_dp_paintable",
    "decide_paintable",
    "ParameterUndecidedError",
    "parameter",
]
