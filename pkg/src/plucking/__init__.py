"""Plucking polynomials of rooted trees and shapes of q-binomial products."""

from .qcalc import Poly, gauss, lattice_gf, poly_divexact, poly_mul, q_factorial, q_int, q_multinomial
from .shape import classify, dominates, is_symmetric, is_unimodal, predict_product_shape, row_decompose, top_type
from .tree import PlaneTree, branching_number, canonical, parse_tree, pluck_product, pluck_recursive, wedge
from .realize import QFraction, count_realizations, from_binomials, from_tree, is_realizable, realize_qints

__version__ = "0.1.0"
