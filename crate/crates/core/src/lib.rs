//! Plane partitions, their hourglass plabic webs, separation labels, and the lattice
//! words of the symmetry classes.

pub mod error;
pub mod geometry;
pub mod invariants;
pub mod plane_partitions;
pub mod projection;
pub mod symmetry_words;
pub mod tableaux;
pub mod trips;
pub mod web;
pub mod word;

pub use error::{PpError, ProjectionError, TripError, WebError, WordError};
pub use plane_partitions::{enumerate_box, enumerate_class, macmahon_count, Box3, PlanePartition, SymmetryClass, SymmetryOp};
pub use web::{Color, EdgeKind, HourglassWeb};
pub use trips::{boundary_word, separation_labels, trip_path, trip_permutation, Labeling};
pub use word::{LatticeWord, Token};
pub use symmetry_words::{census, count_words_formula, generate_words, validate_word, ClassWordSpec};
pub use tableaux::{tableau_to_word, word_to_tableau, OscillatingTableau};
pub use projection::{matching_validate, project_plane_partition, project_word, sl2_growth, Matching};
pub use invariants::{coinv, enumerate_colorings, invariant_at_q1};
