//! Exact and numeric spectral analysis of graphs through the normalized
//! Laplacian, centered on deciding whether a connected graph has exactly
//! three distinct normalized Laplacian eigenvalues.
//!
//! Exact rational arithmetic is authoritative for every verdict; floating
//! point routines exist for advisory numerics only. The crate also builds
//! the graph families known to produce three eigenvalues (complete
//! bipartite graphs, cones over clique unions, conference cones, designs
//! with strongly regular block structure) and enumerates small graphs to
//! census everything with the property.

pub mod canon;
pub mod characterization;
pub mod designs;
pub mod error;
pub mod families;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod lemma;
pub mod poly;
pub mod spectral;
pub mod rmatrix;

pub use canon::{canonical_certificate, isomorphic};
pub use characterization::{
    check_lintegral, check_three_eigenvalues, classify, detect_srg, multiplicity_pattern_check,
    CharStatus, CharacterizationVerdict, Classification, FailureWitness, SRGParams,
};
pub use designs::{
    biplane_residual, block_graph, design_to_text, load_design, multiple_design, paley_graph,
    point_block_counts, projective_plane, qs_parameters, steiner_system, verify_2design, Design,
    QSParameters, SteinerKind, TwoDesignParams,
};
pub use error::{Error, Graph6Error, Result};
pub use exact::{
    distinct_count_exact, eigen_structure_exact, EigenStructureExact, ExactEigen, Rational, Surd,
};
pub use graph::{Graph, NormalizedStats, StructuralProfile, ValencyPartition};
pub use graph6::{encode_graph6, parse_graph6};
pub use lemma::{validate_basic_lemma, LemmaChecklist, LemmaItem};
pub use poly::{minimal_poly, square_free_decomposition, RationalPolynomial};
pub use spectral::{
    normalized_laplacian, spectrum_report, spectrum_report_any, symmetric_eigenvalues,
    SpectrumReport, SpectrumSource,
};
pub use rmatrix::{char_poly, transition_matrix, RationalMatrix};
