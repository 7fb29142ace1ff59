//! Approximation operators, relation-derived groupoids, image algebras and
//! lattices over finite relations, with exhaustive audits of their laws.

pub mod approx;
pub mod claims;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod imgalg;
pub mod latfca;
pub mod magma;
pub mod powgrp;
pub mod quotient;
pub mod registry;
pub mod relcore;
pub mod shell;
pub mod subset;

pub use error::{Error, Result};
pub use relcore::{classify, FiniteRelationSpace, RelationProfile};
pub use subset::Subset;
