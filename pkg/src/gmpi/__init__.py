"""Generalized mixed product ideals: construction, minimal multigraded free
resolutions via a double complex of tensor-product resolutions, and exact
verification of the structural identities against independent oracles."""

from .monomials import (
    ContextMismatchError,
    MonomialIdeal,
    VariableContext,
    block_degree,
    divides,
    ideal,
    lcm,
    minimalize,
    simple_context,
)
from .complexes import (
    BettiTable,
    ChainMap,
    FreeComplex,
    MonomialMatrix,
    SizeCapError,
    betti_table,
    exactness_check,
    ideal_resolution,
    is_linear_resolution,
    lift_chain_map,
    minimalize_complex,
    projective_dimension,
    regularity,
    scalar_complex_exactness,
    scalar_matrices,
    strand,
    taylor_complex,
)
from .builder import (
    DoubleComplex,
    FamilyValidationError,
    GmpiInstance,
    StarComplex,
    SubstitutionFamily,
    build_double_complex,
    build_star_complex,
    gmpi_linearity,
    gmpi_projdim,
    gmpi_regularity,
    star_acyclicity,
    total_complex,
    validate_family,
)
from .families import (
    lex_segment_stable,
    mixed_product_instance,
    path_ideal_complete_multipartite,
    power_of_maximal,
    random_instance,
    squarefree_veronese,
    veronese_type,
)
from .verify import koszul_betti, oracle_betti, run_instance_checks, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
