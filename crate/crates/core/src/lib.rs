pub mod coeff;
pub mod error;
pub mod forest;
pub mod fraction;
pub mod group;
pub mod labeled;
pub mod linalg;
pub mod literal;
pub mod oracle;
pub mod perm;
pub mod scalar;
pub mod suites;
pub mod sweep;
pub mod words;

pub use error::{Error, Result};
pub use forest::{Forest, ForestLayout, LeafPath, PathEdge, RootedSubtree, Shape, SymmetricForest, Tree};
pub use fraction::{ElementClass, ForestPair, FractionV, GroupoidMorphism, PLMap};
pub use perm::Perm;
