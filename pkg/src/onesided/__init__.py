"""Moebius band tree of one-sided surfaces in a solid torus, and one-sided
splittings of even fillings of figure-8 knot space."""

from .errors import (AmbiguousParent, InternalInconsistency, InvalidSpec, NonPrimitive,
                     NotAVertex, NotOneSidedSlope, RootHasNoParent, SlopeError,
                     UnknownFormat, ZeroCurve)
from .fig8_filling import (FillingReport, FillingSpec, Surface, TransitionMatrix, classify,
                           genus_order_check, intermediate_slopes, knot_to_torus,
                           total_genus, transition_matrix)
from .moebius_tree import (children, export_tree, genus, is_vertex, parent,
                           passes_through_41, path_to_root)
from .slope_core import QuadrantSlope, Slope, intersection_number, make_slope, quadrant_project

__version__ = "0.1.0"
