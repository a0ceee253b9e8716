use thiserror::Error;

use crate::hom::HomWitness;
use crate::subset::SubgroupViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradeError {
    #[error("grade has a zero denominator")]
    ZeroDenominator,
    #[error("grade {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("malformed grade {0:?}; expected \"p/q\", \"0\" or \"1\"")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("Cayley table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry at row {row}, column {col} is {value}, outside 0..{order}")]
    IndexOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("declared order {declared} does not match a table of {actual} rows")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not a Latin square: value {value} repeats in {line} {index}")]
    NotLatinSquare { line: &'static str, index: usize, value: usize },
    #[error("unknown builtin group {0:?}")]
    UnknownGroup(String),
    #[error("group of order {order} exceeds the exhaustive search bound {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("subset is not a normal subgroup")]
    NotNormal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubsetError {
    #[error("expected {expected} grades, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("chain must start at the trivial subgroup and end at the whole group")]
    ChainEnds,
    #[error("chain has {chain} terms but {grades} grades")]
    ChainGradeCount { chain: usize, grades: usize },
    #[error("chain term {index} is not contained in term {}", index + 1)]
    NotNested { index: usize },
    #[error("chain term {index} is not a subgroup")]
    NotSubgroup { index: usize },
    #[error("grades must start at 1 and strictly decrease (violated at position {index})")]
    GradesNotDecreasing { index: usize },
    #[error("expected {expected} class grades, got {actual}")]
    ClassCount { expected: usize, actual: usize },
    #[error("identity class must have grade 1 and every other class a grade below 1 (class {class})")]
    ClassGrades { class: usize },
    #[error("not a fuzzy subgroup: {0}")]
    NotFuzzySubgroup(SubgroupViolation),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("row {0} has no grade-1 entry")]
    NoUnitEntry(usize),
    #[error("row {0} has more than one grade-1 entry")]
    MultipleUnitEntries(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("fuzzy map is not bijective")]
    NotBijective,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("not a fuzzy homomorphism: {0}")]
    NotHomomorphism(HomWitness),
    #[error("crisp map is not multiplicative at ({a}, {b})")]
    NotCrispHomomorphism { a: usize, b: usize },
    #[error("codomain grade vector is not a normal fuzzy subgroup")]
    MuNotNormal,
    #[error("codomain grade vector is not pointed")]
    MuNotPointed,
    #[error("lifted map rejected by the homomorphism oracle: {0}")]
    OracleRejected(HomWitness),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("domain and codomain differ")]
    NotEndomorphism,
    #[error("not a fuzzy homomorphism: {0}")]
    NotHomomorphism(HomWitness),
    #[error("not one-one")]
    NotInjective,
    #[error("not onto")]
    NotSurjective,
    #[error("automorphism is not inner")]
    NotInner,
    #[error("classes {left} and {right} compose outside the set")]
    NotClosed { left: usize, right: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InducedError {
    #[error("mu is not a fuzzy subgroup: {0}")]
    MuNotSubgroup(SubgroupViolation),
    #[error("mu is not normal: mu({x}*{y}) != mu({y}*{x})")]
    MuNotNormal { x: usize, y: usize },
    #[error("mu is not pointed")]
    MuNotPointed,
    #[error("induced maps use different mu")]
    MuMismatch,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("{claim} violated: {detail}")]
    Assertion { claim: &'static str, detail: String },
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid campaign configuration: {0}")]
    ConfigInvalid(String),
    #[error("unknown token {0:?}")]
    UnknownToken(String),
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Grade(#[from] GradeError),
    #[error(transparent)]
    Subset(#[from] SubsetError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("file names group {found:?} but {expected:?} was supplied")]
    GroupMismatch { expected: String, found: String },
}
