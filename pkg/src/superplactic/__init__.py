"""Combinatorics of the super plactic monoid of type A."""
from .alphabet import Letter, SignedAlphabet, degree, parse_alphabet, star_word
from .errors import BudgetExceeded, InvariantViolation, ParseError, TableauError
from .evacuation import duality_check, evacuate, opposite_via_congruence
from .growth import build_diagram, dual_equivalent, grw, grw_inverse, local_rule, psi
from .insertion import insert_left, insert_right, product, skew_product, tableau_of_word
from .lr import TableauSum, lr_coefficient, rectification_fibers, schur_sum, verify_lr_identity
from .plactic import equivalent, equivalent_bfs, greene_col, greene_row, knuth_neighbors, shape_from_greene
from .shapes import SkewShape, conjugate, contains, inner_corners, outer_corners
from .tableau import (
    SkewTableau,
    enumerate_tableaux,
    parse_tableau,
    read_col,
    read_row,
    standardization_chain,
    validate,
)
from .taquin import concat, forward_slide, rectify, reverse_slide

__version__ = "0.1.0"
