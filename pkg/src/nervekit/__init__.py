"""Finite simplicial complexes with exact homology over fields, nerve and
Helly-type checkers, and rainbow/colourful simplex results."""

from .complex import SimplicialComplex, Subdivision, barycentric_subdivision
from .constructive import (
    CarrierAssignment, ChainMap, build_Ai, build_chain_map, kill_homology, nerve_chain_map,
    sd_chain_map, union_nerve_witness,
)
from .document import ComplexDocument, emit_complex, emit_cover, parse_complex, parse_cover
from .errors import (
    CarrierError, ComplexError, DimensionError, DocumentError, FieldError, NervekitError,
    NotACycleError, PreconditionError, TheoremViolation,
)
from .homology import BettiVector, Chain, betti, boundary, boundary_matrix, fill, fundamental_class, reduced_betti
from .linalg import F2, Q, ColumnSpan, Field, Fp, SparseMatrix, rank
from .nerve import (
    Cover, aux_union_check, check_mixed_hypotheses, helly_check, helly_embedded, mixed_nerve_check,
    nerve, union_nerve_check, verify_mixed_conclusion,
)
from .pseudomanifold import is_pseudomanifold
from .sperner import (
    ColouredComplex, check_discrete, check_isolated, check_meshulam, check_remixed,
    colourful_simplices, count_lemma_check, polytopal_meshulam, rainbow_simplices,
    sub_by_colours, tilde_K,
)

__version__ = "0.1.0"
