//! Shifted tableau combinatorics: Haiman mixed insertion, a deterministic
//! mixed jeu de taquin that reproduces it, extended Sagan–Worley
//! rectification of Q-tableaux, and skew plactic Schur P-functions.

pub mod exec;
pub mod hole;
pub mod insertion;
pub mod mixed_jdt;
pub mod sagan_worley;
pub mod shapes;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use shapes::{Cell, Letter, Marker, SkewShape, StrictPartition};
pub use tableau::ShiftedTableau;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Shape(#[from] shapes::ShapeError),
    #[error(transparent)]
    Tableau(#[from] tableau::TableauError),
    #[error(transparent)]
    Parse(#[from] tableau::ParseError),
    #[error(transparent)]
    Insertion(#[from] insertion::InsertionError),
    #[error(transparent)]
    Jdt(#[from] mixed_jdt::JdtError),
    #[error(transparent)]
    SaganWorley(#[from] sagan_worley::SwError),
    #[error(transparent)]
    Symfunc(#[from] symfunc::SymError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
