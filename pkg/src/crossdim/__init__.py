"""Cross-dimensional matrix algebra.

Semi-tensor products and additions, equivalence classes of matrices and
vectors across dimensions, cross-order permutations, the squaring map,
geometry of R^infinity, the Lie algebra gl(m x n) under the dimension-keeping
product, and dimension-varying linear systems.
"""
from .equivalence import equivalent, reduce_mat, reduce_vec
from .errors import (
    CrossDimError,
    DimensionNotInvariant,
    LatticeOverflow,
    NonConvergent,
    NotInvertible,
    ShapeError,
)
from .geometry import inner, norm, norm_dist, project, projection_matrix
from .hypergroup import box, s_char_poly, s_spectrum, sym_alt
from .lattice import Shape, lcm, lcm_gcd
from .lie import ExtMat, bracket, char_poly, ext_exp, ext_invert, ext_log, hyper_gl_mul, restricted_form
from .perm import Perm, perm_matrix, perm_product, perm_sign
from .stp import badd, bsub, circ, dk_stp, hadd, hsub, ltimes, mv_stp, pseudo_stp, rtimes, sta, vv_stp
from .weights import bridge

__version__ = "0.1.0"
