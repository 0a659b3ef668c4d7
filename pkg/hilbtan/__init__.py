"""
# hilbtan

hilbtan computes tangent spaces to Hilbert schemes of points in affine
three-space with exact rational arithmetic. It ships its own Groebner basis
engine, graded linear algebra for Hom(I, S/I), checks on framed quiver
representations and one-form identities for semi-invariant functions.
"""
from .errors import ParseError
from .errors import UnknownVariableError
from .errors import NegativeExponentError
from .errors import NotHomogeneousError
from .errors import NoHeftVectorError
from .errors import InfiniteQuotientError
from .errors import DegenerateIdealError
from .errors import UnsupportedSubstitutionError
from .errors import BidegreeMismatchError
from .errors import VerificationError
from .logger import logger, set_logging_level, log_to_file, log_to_console
from .definitions import ROOT_DIR
from .definitions import MODULE_DIR
from .definitions import IDEAL_DIR
from .definitions import GOLDEN_DIR
from .linalg import Rational
from .linalg import RationalMatrix
from .linalg import EchelonForm
from .linalg import echelon
from .linalg import rank
from .linalg import kernel_basis
from .linalg import is_consistent
from .linalg import solve_particular
from .polynomials import MultiGrading
from .polynomials import MonomialOrder
from .polynomials import RingContext
from .polynomials import Polynomial
from .polynomials import ANY_DEGREE
from .polynomials import multidegree
from .polynomials import compare
from .polynomials import is_homogeneous
from .polynomials import heft_check
from .polynomials import monomials_of_degree
from .parser import parse_polynomial
from .groebner import GroebnerBasis
from .groebner import Ideal
from .groebner import normal_form
from .groebner import buchberger
from .groebner import ideal_member
from .groebner import ideal_equal
from .groebner import ideal_product
from .groebner import ideal_sum
from .groebner import min_gens
from .groebner import irredundant_generators
from .groebner import Localization
from .groebner import localize_invert
from .groebner import points_ideal
from .quotient import QuotientBasis
from .quotient import standard_monomials
from .quotient import colength
from .quotient import bidegree_support
from .quotient import GradedPiece
from .quotient import GradedPieces
from .quotient import graded_piece_of_ideal
from .tangent import HomAssignment
from .tangent import GradedHomSummary
from .tangent import GradedHomSolver
from .tangent import ConormalSolver
from .tangent import hom_dim_graded
from .tangent import hom_dim_conormal
from .tangent import tangent_dimension
from .tangent import weight_marginal
from .tangent import hom_element_check
from .tangent import hom_dim_taylor
from .tangent import extend_by_points
from .partitions import addable_cells
from .partitions import enumerate_staircases
from .partitions import staircase_ideal
from .partitions import enumerate_monomial_ideals
from .scans import scan_staircase
from .scans import GenericActor
from .scans import RayActor
from .scans import SerialScanManager
from .scans import RayScanManager
from .scans import parity_scan
from .quiver import TorusWeights
from .quiver import TORUS_T0
from .quiver import TORUS_G
from .quiver import TORUS_H
from .quiver import QuiverRep
from .quiver import commutator
from .quiver import rep_from_ideal
from .quiver import is_cyclic
from .quiver import superpotential
from .quiver import gradient_superpotential
from .quiver import check_torus_weights
from .quiver import random_reps
from .quiver import coordinate_ring
from .quiver import superpotential_polynomial
from .quiver import symbolic_gradient
from .quiver import critical_tangent_dim
from .theory import SymbolicOneForm
from .theory import differential
from .theory import WeightedFunction
from .theory import check_splitting_identity
from .theory import CriticalLocusResult
from .theory import check_critical_locus_prop
from .theory import check_smooth_pullback
from .theory import random_weighted_functions
from .ideal_utils import IdealInputFile
from .ideal_utils import read_ideal
from .ideal_utils import write_ideal
from .verification import BIGRADED_DEGREES
from .verification import NONNEG_DEGREES
from .verification import EXPECTED
from .verification import counterexample_ideal
from .verification import VerificationReport
from .verification import build_report
from .verification import verify_counterexample
from .verification import compare_golden
from .verification import save_report

__version__ = "0.1.0"
