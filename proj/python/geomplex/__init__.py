"""Filtered geometric complexes, persistent homology, and diagram distances."""

from ._core import (
    Correspondence,
    CrossDissimilarity,
    DiagramPoint,
    DissimilarityMatrix,
    FilteredComplex,
    ParseError,
    PersistenceDiagram,
    Simplex,
    SizeCapError,
    ValidationError,
    ambient_cech_filtration,
    betti_at,
    bottleneck,
    bottleneck_bruteforce,
    bottleneck_with_certificate,
    cech_filtration,
    distortion,
    dowker_filtration,
    gen_circle,
    gen_open_rips,
    gen_parallel_segments,
    gen_tree,
    gen_two_rectangles,
    gh_exact,
    gh_upper_bound,
    hausdorff,
    matrix_from_points,
    persistence,
    rank_of_inclusion,
    rips_complex_at,
    rips_filtration,
    verification_names,
    verify,
    witness_filtration,
)

__all__ = [
    "Correspondence",
    "CrossDissimilarity",
    "DiagramPoint",
    "DissimilarityMatrix",
    "FilteredComplex",
    "ParseError",
    "PersistenceDiagram",
    "Simplex",
    "SizeCapError",
    "ValidationError",
    "ambient_cech_filtration",
    "betti_at",
    "bottleneck",
    "bottleneck_bruteforce",
    "bottleneck_with_certificate",
    "cech_filtration",
    "distortion",
    "dowker_filtration",
    "gen_circle",
    "gen_open_rips",
    "gen_parallel_segments",
    "gen_tree",
    "gen_two_rectangles",
    "gh_exact",
    "gh_upper_bound",
    "hausdorff",
    "matrix_from_points",
    "persistence",
    "rank_of_inclusion",
    "rips_complex_at",
    "rips_filtration",
    "verification_names",
    "verify",
    "witness_filtration",
]

__version__ = "0.1.0"
