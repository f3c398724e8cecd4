"""Valid distance drawings of weighted graphs on the real line.

A drawing places vertices on the line so that, around every vertex, heavier
edges are strictly shorter than lighter ones. A drawing can only exist if the
similarity matrix has a Robinson ordering. Given such an ordering, a drawing
exists iff a small linear system is feasible, which is decided here in exact
rational arithmetic.
"""

from .core import (Drawing, Ordering, SimilarityMatrix, WeightedGraph, induced_ordering,
                   matrix_from_graph, permute)
from .lp import FarkasCertificate, FeasibilityResult, check_certificate, solve_feasibility
from .polyhedron import ConstraintSystem, build_constraints, scale_system
from .robinson import (RecognitionResult, enumerate_robinson_orderings, find_robinson_ordering,
                       find_robinson_ordering_complete, good_elements, is_robinson)
from .verify import SolveReport, Violation, is_valid_drawing, solve_scfe

__all__ = [
    "ConstraintSystem", "Drawing", "FarkasCertificate", "FeasibilityResult", "Ordering",
    "RecognitionResult", "SimilarityMatrix", "SolveReport", "Violation", "WeightedGraph",
    "build_constraints", "check_certificate", "enumerate_robinson_orderings",
    "find_robinson_ordering", "find_robinson_ordering_complete", "good_elements",
    "induced_ordering", "is_robinson", "is_valid_drawing", "matrix_from_graph", "permute",
    "scale_system", "solve_feasibility", "solve_scfe",
]
