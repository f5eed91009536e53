"""Generalized covering radius bounds and covering algorithms for chained codes."""

from .chain import ChainedMatrix, bound_mu, canonicalize_chained, mu_from_d, validate_chained
from .cover import CoverResult, cover_recursive_rm, cover_t, pigeonhole_scalar, recursive_bound
from .errors import BudgetError, ChainError, DomainError
from .field import FieldElement, FieldSpec, decompose, embed, field_for_order, make_field
from .linalg import CodeMatrix, joint_support, parity_check, row_reduce, support, weight
from .oracle import exact_covering_radius, exact_generalized_radius, exact_ghw, exact_nearest
from .rm import canonical_rep, chained_rm, ghw_binary, ghw_rm, rho, rm_generator_blocks

__version__ = "0.1.0"
