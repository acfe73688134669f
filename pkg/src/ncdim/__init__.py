"""Growth, global dimension, and Hilbert series of algebras presented by
finite noncommutative Groebner bases, plus the Rees algebra of the degree
filtration.  All arithmetic is exact (rational coefficients, integer series).
"""

from .chains import (
    ChainGraph,
    ChainSets,
    HilbertSeries,
    build_chain_graph,
    chain_sets,
    global_dimension_monomial,
    hilbert_series,
    product_form_decomposition,
)
from .errors import (
    CrossCheckError,
    GroebnerVerificationError,
    InputError,
    NcdimError,
    ParseError,
)
from .freealg import (
    Alphabet,
    MonomialOrder,
    Poly,
    homogeneous_components,
    leading_data,
    leading_homogeneous,
    leading_word,
    parse_polynomial,
    weighted_degree,
)
from .growth import (
    GrowthClass,
    UfnarovskiGraph,
    build_ufnarovski,
    classify_growth,
    count_paths,
    gk_dimension,
)
from .pipeline import (
    AnalysisReport,
    Presentation,
    analyze,
    load_presentation,
    load_presentation_data,
    pbw_check,
    render_report,
    report_to_dict,
)
from .rees import (
    ExtendedAlphabet,
    ReesInvariants,
    ReesPresentation,
    dehomogenize,
    extend_alphabet,
    extend_order,
    homogenize,
    rees_invariants,
    tilde_basis,
)
from .rewrite import (
    GroebnerBasis,
    MonomialSet,
    OverlapAmbiguity,
    VerificationResult,
    count_normal_words,
    ensure_verified,
    interreduce_monomials,
    is_normal,
    normal_form,
    overlap_ambiguities,
    s_element,
    verify_groebner,
)

__version__ = "0.1.0"
