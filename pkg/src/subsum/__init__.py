"""Subspace sum graphs of finite vector spaces.

The graph on the nontrivial proper subspaces of GF(q)^n, with two subspaces
adjacent when they sum to the whole space, built exactly and audited
against closed-form predictions.
"""

from .gf import FieldSpec, factor_prime_power, field_new
from .graph import BitGraph, SubspaceGraph, build_graph
from .invariants import InvariantReport, compute_invariants, fingerprint
from .linalg import MatrixGF, RrefResult, Subspace, extend_to_basis, rank, rref, subspace_intersection, subspace_sum
from .solvers import Budget
from .subspaces import enumerate_proper_nontrivial, enumerate_subspaces, galois_number, gaussian_binomial
from .verify import VerificationReport, verify_case, verify_grid

__version__ = "0.1.0"

__all__ = [
    "BitGraph",
    "Budget",
    "FieldSpec",
    "InvariantReport",
    "MatrixGF",
    "RrefResult",
    "Subspace",
    "SubspaceGraph",
    "VerificationReport",
    "build_graph",
    "compute_invariants",
    "enumerate_proper_nontrivial",
    "enumerate_subspaces",
    "extend_to_basis",
    "factor_prime_power",
    "field_new",
    "fingerprint",
    "galois_number",
    "gaussian_binomial",
    "rank",
    "rref",
    "subspace_intersection",
    "subspace_sum",
    "verify_case",
    "verify_grid",
]
