//! Fuzzy homomorphisms, fuzzy automorphisms and fuzzy inner automorphisms
//! of finite groups, with exhaustive exact-arithmetic verification.
//!
//! Groups are Cayley tables over dense indices, grades are reduced
//! rationals in `[0, 1]`, and fuzzy maps are dense grade matrices. Every
//! structural claim about these objects is checked by exhaustive scans
//! rather than sampling.
//!
//! ```
//! use std::sync::Arc;
//! use fuzzaut::{builtin_group, induced::make_induced, MuStrategy};
//!
//! let q8 = Arc::new(builtin_group("quaternion8").unwrap());
//! let mu = Arc::new(MuStrategy::Class.generate(&q8));
//! let f = make_induced(2, &mu).unwrap();
//! assert_eq!(f.map().skeleton(), q8.conjugation(2).as_slice());
//! ```

pub mod aut;
pub mod cli;
pub mod error;
pub mod files;
pub mod grade;
pub mod group;
pub mod harness;
pub mod hom;
pub mod induced;
pub mod map;
pub mod subset;

pub use error::{AutError, FileError, GradeError, GroupError, HarnessError, HomError, InducedError, MapError, SubsetError};
pub use grade::Grade;
pub use group::{builtin_group, is_group_isomorphism, make_group, ElementSubset, FiniteGroup};
pub use map::{FuzzyMap, FuzzyRelation};
pub use subset::{FuzzySubset, MuStrategy};
