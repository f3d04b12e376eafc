//! Finite prees satisfying Axioms A(4) and A(5), the rewriting and van
//! Kampen diagram machinery of triangular small cancellation theory, and
//! finite-automaton constructions of the geodesic and combing languages of
//! their universal groups.

pub mod diagram;
pub mod fsa;
pub mod group;
pub mod pree;
pub mod presentation;
pub mod report;
pub mod word;

pub use pree::{check_axiom, load_pree, validate_pree, AxiomOutcome, AxiomWitness, Elem, Pree, PreeBuilder, PreeError};
pub use report::{Check, Status, VerificationReport};
pub use word::{
    equals_identity, is_geodesic_word, is_irreducible, parse_word, reduce_once, strip2_reduce_once,
    strip_reduce_once, strongly_reduce, ReductionTrace, Step, StripWitness, Word,
};
pub use diagram::{
    find_minimal_diagram, reduce_internal_vertex, Attachment, Curvature, Diagram, DiagramError, DiagramSearch,
    DiagramStats, SearchOutcome,
};
pub use fsa::{
    combing_acceptor, geodesic_acceptor, word_difference_machine, Alphabet, CombingPredicateTable, CombingReading,
    Dfa, Nfa, WordDifferenceMachine,
};
pub use group::{
    cayley_ball, fellow_traveler_check, AbelianInvariant, CayleyBall, FellowTravelerReport, IdentityOracle,
    OracleConfig, OracleVerdict, WordProblem,
};
