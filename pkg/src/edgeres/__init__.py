"""Exact-arithmetic toolkit for edge ideals with linear resolution.

Computes total Betti numbers, projective dimension, Hilbert series and
multiplicity of Stanley-Reisner rings of graphs and uniform hypergraphs
whose edge ideals have linear resolution, verifies the alternating-sum
identities and inequalities satisfied by f-vectors of clique complexes
of chordal graphs, and cross-checks everything against an independent
homological oracle based on Hochster's formula.
"""

from .analysis import NotLinearError, analyze_graph, analyze_hypergraph
from .betti import (
    BadUniformityError,
    BettiVector,
    EquationCheck,
    InequalityCheck,
    LengthMismatchError,
    PureResolutionType,
    VerificationReport,
    ZeroIdealError,
    betti_complete_bipartite,
    betti_complete_graph,
    betti_linear_graph,
    betti_linear_uniform,
    betti_vector,
    chordal_equation_residuals,
    chordal_inequality_slacks,
    herzog_kuhl_residuals,
    multiplicity_chordal,
    multiplicity_pure,
    multiplicity_pure_codim,
    projective_dimension,
)
from .complexes import (
    ComplexTooLargeError,
    FaceComplex,
    FVector,
    clique_complex,
    clique_fvector_direct,
    f_vector,
    independence_complex,
    induced_subcomplex,
)
from .graphs import (
    EliminationOrder,
    Graph,
    LeafOrder,
    NotChordalError,
    ParseError,
    UniformHypergraph,
    complement,
    format_graph,
    format_hypergraph,
    graph_as_hypergraph,
    is_chordal,
    is_perfect_elimination,
    leaf_order,
    lex_bfs,
    maximal_cliques,
    parse_graph,
    parse_hypergraph,
    parse_input,
    verify_leaf_order,
)
from .hilbert import (
    HilbertSeries,
    IntPolynomial,
    ZeroDimensionalModuleError,
    ZeroPolynomialError,
    divisibility_order,
    hilbert_function_from_fvector,
    hilbert_function_from_resolution,
    hilbert_series_from_fvector,
    multiplicity_from_series,
)
from .oracle import (
    DEFAULT_ORACLE_CAP,
    HARD_ORACLE_CAP,
    GradedBettiTable,
    HomologyRanks,
    TooLargeError,
    certify_linear_resolution,
    hochster_graded_betti,
    reduced_homology_ranks,
)
from .util import binom

__version__ = "0.1.0"
