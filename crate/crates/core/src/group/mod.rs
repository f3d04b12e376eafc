//! The universal group `U(P)` at desk scale: identity oracles, the word
//! problem, Cayley balls and the verification sweeps built on them.

pub mod abelian;
pub mod ball;
pub mod fellow;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use abelian::AbelianInvariant;
pub use ball::{cayley_ball, BallError, CayleyBall, DEFAULT_ELEMENT_CAP};
pub use fellow::{fellow_traveler_check, FellowTravelerReport};
pub use oracle::{bfs_identity_oracle, ComponentTable, Evidence, IdentityOracle, OracleConfig, OracleVerdict};
pub use solver::WordProblem;
pub use verify::{verify_embedding, verify_short_trivial_words, verify_surjectivity};
