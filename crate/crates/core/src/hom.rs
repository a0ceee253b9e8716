//! The fuzzy homomorphism predicate, kernels, and the structural facts
//! every fuzzy homomorphism satisfies.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::HomError;
use crate::grade::Grade;
use crate::group::{is_crisp_homomorphism, ElementSubset, FiniteGroup};
use crate::map::{FuzzyMap, FuzzyRelation};
use crate::subset::FuzzySubset;

/// A triple where `f(x1 x2, y)` differs from the supremum over
/// factorizations `y = y1 y2` of `f(x1, y1) ∧ f(x2, y2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    pub x1: usize,
    pub x2: usize,
    pub y: usize,
    pub lhs: Grade,
    pub rhs: Grade,
}

impl fmt::Display for HomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f({}*{}, {}) = {} but the supremum over factorizations is {}",
            self.x1, self.x2, self.y, self.lhs, self.rhs
        )
    }
}

/// Verdict of [`is_fuzzy_homomorphism`]; `witness` is present iff the
/// verdict is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomCheckReport {
    pub verdict: bool,
    pub witness: Option<HomWitness>,
}

/// Checks `f(x1 x2, y) = sup { f(x1, y1) ∧ f(x2, y2) : y = y1 y2 }` for
/// every triple. Rows are scanned in parallel; the reported witness is the
/// lexicographically smallest `(x1, x2, y)`.
pub fn is_fuzzy_homomorphism(f: &FuzzyMap) -> HomCheckReport {
    let witness = hom_violation(f.relation());
    HomCheckReport { verdict: witness.is_none(), witness }
}

/// The homomorphism scan on a bare relation.
pub(crate) fn hom_violation(f: &FuzzyRelation) -> Option<HomWitness> {
    let dom = f.domain();
    let cod = f.codomain();
    let m = cod.order();

    // Only order matters in min/max, so grades are replaced by their ranks.
    let mut levels: Vec<Grade> = f.grades().to_vec();
    levels.sort_unstable();
    levels.dedup();
    let rank: Vec<u32> = f
        .grades()
        .iter()
        .map(|g| levels.binary_search(g).expect("grade present") as u32)
        .collect();
    let cell = |x: usize, y: usize| rank[x * m + y];
    // factor[y1 * m + y] = y1⁻¹ y
    let factor: Vec<usize> =
        (0..m * m).map(|i| cod.mul(cod.inverse(i / m), i % m)).collect();

    dom.elements().into_par_iter().find_map_first(|x1| {
        for x2 in dom.elements() {
            let x12 = dom.mul(x1, x2);
            for y in 0..m {
                let lhs = cell(x12, y);
                let rhs = (0..m)
                    .map(|y1| cell(x1, y1).min(cell(x2, factor[y1 * m + y])))
                    .max()
                    .expect("codomain is nonempty");
                if lhs != rhs {
                    return Some(HomWitness {
                        x1,
                        x2,
                        y,
                        lhs: levels[lhs as usize],
                        rhs: levels[rhs as usize],
                    });
                }
            }
        }
        None
    })
}

/// `{x : f(x, e') = 1}`.
pub fn kernel(f: &FuzzyMap) -> Result<ElementSubset, HomError> {
    if let Some(w) = is_fuzzy_homomorphism(f).witness {
        return Err(HomError::NotHomomorphism(w));
    }
    Ok(kernel_unchecked(f))
}

pub(crate) fn kernel_unchecked(f: &FuzzyMap) -> ElementSubset {
    let e = f.codomain().identity();
    ElementSubset::from_elements(f.domain().order(), f.domain().elements().filter(|&x| f.get(x, e).is_one()))
}

/// The four structural facts about a fuzzy homomorphism, each checked
/// exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// `y_{x1 x2} = y_{x1} y_{x2}`.
    pub images_multiply: bool,
    /// `f(e, e') = 1`.
    pub identity_to_identity: bool,
    /// `y_x⁻¹ = y_{x⁻¹}`.
    pub images_invert: bool,
    /// `f(x, y) = 1 ⟹ f(x⁻¹, y⁻¹) = 1`.
    pub unit_entries_invert: bool,
}

impl StructureReport {
    pub fn all(&self) -> bool {
        self.images_multiply && self.identity_to_identity && self.images_invert && self.unit_entries_invert
    }
}

pub fn check_structure(f: &FuzzyMap) -> StructureReport {
    let (dom, cod) = (f.domain(), f.codomain());
    let y = f.skeleton();
    StructureReport {
        images_multiply: dom
            .elements()
            .all(|a| dom.elements().all(|b| y[dom.mul(a, b)] == cod.mul(y[a], y[b]))),
        identity_to_identity: f.get(dom.identity(), cod.identity()).is_one(),
        images_invert: dom.elements().all(|x| cod.inverse(y[x]) == y[dom.inverse(x)]),
        unit_entries_invert: dom.elements().all(|x| {
            cod.elements()
                .all(|v| !f.get(x, v).is_one() || f.get(dom.inverse(x), cod.inverse(v)).is_one())
        }),
    }
}

/// Kernel normality and the injectivity criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub kernel: ElementSubset,
    pub kernel_is_normal: bool,
    pub one_one: bool,
    pub kernel_is_trivial: bool,
}

impl KernelReport {
    /// Normal kernel, and one-one exactly when the kernel is trivial.
    pub fn holds(&self) -> bool {
        self.kernel_is_normal && self.one_one == self.kernel_is_trivial
    }
}

pub fn check_kernel(f: &FuzzyMap) -> KernelReport {
    let kernel = kernel_unchecked(f);
    KernelReport {
        kernel_is_normal: f.domain().is_normal_subgroup(&kernel),
        one_one: f.is_one_one(),
        kernel_is_trivial: kernel.elements() == [f.domain().identity()],
        kernel,
    }
}

/// `f(x, y) = μ'(φ(x)⁻¹ y)` for a crisp homomorphism `φ: G → G'` and a
/// pointed normal fuzzy subgroup `μ'` of `G'`. The result is certified by
/// [`is_fuzzy_homomorphism`] before it is returned.
pub fn lift_hom(domain: Arc<FiniteGroup>, phi: &[usize], mu: &FuzzySubset) -> Result<FuzzyMap, HomError> {
    let cod = mu.group().clone();
    if let Some((a, b)) = is_crisp_homomorphism(&domain, &cod, phi) {
        return Err(HomError::NotCrispHomomorphism { a, b });
    }
    if !mu.is_fuzzy_subgroup() || !mu.is_normal_fuzzy_subgroup() {
        return Err(HomError::MuNotNormal);
    }
    if !mu.is_pointed() {
        return Err(HomError::MuNotPointed);
    }
    let rel = FuzzyRelation::from_fn(domain, cod.clone(), |x, y| mu.grade(cod.mul(cod.inverse(phi[x]), y)));
    let f = FuzzyMap::new(rel)?;
    match is_fuzzy_homomorphism(&f).witness {
        Some(w) => Err(HomError::OracleRejected(w)),
        None => Ok(f),
    }
}
