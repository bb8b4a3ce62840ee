"""Triangulations of polygons, their quivers and module categories, and the
type A cluster algebra they index."""

from .polygon import (Diagonal, PolygonError, Triangulation, all_diagonals, crosses,
                      enumerate_triangulations, fan, flip, snake, support)
from .quiver import QuiverWithRelations, b_matrix, mutate_quiver, quiver_from_triangulation

__version__ = "0.1.0"

__all__ = [
    "Diagonal", "PolygonError", "Triangulation", "all_diagonals", "crosses",
    "enumerate_triangulations", "fan", "flip", "snake", "support",
    "QuiverWithRelations", "b_matrix", "mutate_quiver", "quiver_from_triangulation",
]
