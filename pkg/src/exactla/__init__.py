"""Exact linear algebra over commutative domains.

Works over the integers and over polynomials with coefficients in GF(p).
Determinants and adjugates come from fraction-free elimination and a
recursive block factorization, determined systems can be solved by p-adic
lifting, and solution bases are available both over the fraction field and
(for Euclidean domains) over the domain itself.
"""
from . import kernels
from .adjoint import AdjointResult, adjoint, assemble_factors, scaled_adjoint, schur_update
from .basis import (
    RationalBasis,
    SystemInstance,
    basis_homogeneous,
    basis_nonhomogeneous,
    consistency_check,
    rational_basis,
    verify_basis,
)
from .bench import bench_report, predicted_block_mults
from .diophantine import (
    DiophantineBasis,
    Inconclusive,
    NoSolution,
    diophantine_basis,
    diophantine_solution,
    solve_diophantine,
    unit_ideal_witness,
)
from .elimination import EliminationResult, bareiss_eliminate, determinant, rank, rank_profile
from . import errors
from .errors import ExactLAError, InconsistentSystem, NotDivisible, ParseError, SingularMatrix
from .matrix import Matrix, OpCounter, Permutation, mat_mul
from .padic import DixonSolver, dixon_solve, hadamard_bound, rational_reconstruct
from .rings import ZZ, Poly, PolyFraction, PolyRing, PrimeField, Residue, exact_div, gcd_ext, lcm_many, parse_ring

__version__ = "0.1.0"
