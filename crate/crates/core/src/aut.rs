//! Fuzzy automorphisms of a single group.
//!
//! Composition of fuzzy automorphisms is associative, unital and invertible
//! only up to fuzzy-image equivalence, so the group structure lives on
//! [`AutClass`] values: one class per skeleton permutation.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::AutError;
use crate::group::FiniteGroup;
use crate::hom::is_fuzzy_homomorphism;
use crate::map::FuzzyMap;

/// A one-one, onto fuzzy homomorphism `G ⋯→ G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyAutomorphism(FuzzyMap);

pub fn make_automorphism(f: FuzzyMap) -> Result<FuzzyAutomorphism, AutError> {
    if !f.domain().same_structure(f.codomain()) {
        return Err(AutError::NotEndomorphism);
    }
    if let Some(w) = is_fuzzy_homomorphism(&f).witness {
        return Err(AutError::NotHomomorphism(w));
    }
    if !f.is_one_one() {
        return Err(AutError::NotInjective);
    }
    if !f.is_onto() {
        return Err(AutError::NotSurjective);
    }
    Ok(FuzzyAutomorphism(f))
}

impl FuzzyAutomorphism {
    pub fn map(&self) -> &FuzzyMap {
        &self.0
    }

    pub fn into_map(self) -> FuzzyMap {
        self.0
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.0.domain()
    }

    pub fn skeleton(&self) -> &[usize] {
        self.0.skeleton()
    }
}

/// `f ∘ g` (apply `g` first). Panics if the composite fails validation,
/// since closure under composition is a theorem the library relies on.
pub fn compose_aut(f: &FuzzyAutomorphism, g: &FuzzyAutomorphism) -> FuzzyAutomorphism {
    let composite = f.0.after(&g.0).expect("automorphisms of the same group compose");
    make_automorphism(composite.clone())
        .unwrap_or_else(|e| panic!("composite of fuzzy automorphisms rejected ({e}): {composite:?}"))
}

/// The transpose of `f`, revalidated as an automorphism. Panics on failure.
pub fn inverse_aut(f: &FuzzyAutomorphism) -> FuzzyAutomorphism {
    let inv = f.0.inverse_map().expect("automorphisms are bijective");
    make_automorphism(inv.clone())
        .unwrap_or_else(|e| panic!("inverse of a fuzzy automorphism rejected ({e}): {inv:?}"))
}

/// Crisp indicator of the identity permutation: grade 1 on the diagonal,
/// 0 elsewhere.
pub fn identity_aut(group: &Arc<FiniteGroup>) -> FuzzyAutomorphism {
    let id: Vec<usize> = group.elements().collect();
    FuzzyAutomorphism(FuzzyMap::crisp(group.clone(), group.clone(), &id))
}

/// Every fuzzy image is conjugate to its argument.
pub fn is_class_preserving(f: &FuzzyMap) -> bool {
    let class = f.domain().class_index();
    f.domain().elements().all(|x| class[x] == class[f.fuzzy_image(x)])
}

/// The least `g` whose conjugation `x ↦ g⁻¹ x g` is the skeleton of `f`.
pub fn is_inner(f: &FuzzyMap) -> Option<usize> {
    let group = f.domain();
    if !group.same_structure(f.codomain()) {
        return None;
    }
    group.elements().find(|&g| group.elements().all(|x| group.conjugate(g, x) == f.fuzzy_image(x)))
}

/// `f⁻¹ ∘ f_g ∘ f` for an inner `f_g`. The result is inner with witness
/// `a` where `a` is the fuzzy image of `g` under `f⁻¹`; a violation of that
/// postcondition panics.
pub fn conjugate_aut(f: &FuzzyAutomorphism, inner: &FuzzyAutomorphism) -> Result<FuzzyAutomorphism, AutError> {
    let g = is_inner(inner.map()).ok_or(AutError::NotInner)?;
    let f_inv = inverse_aut(f);
    let result = compose_aut(&f_inv, &compose_aut(inner, f));
    let a = f_inv.map().fuzzy_image(g);
    let group = f.group();
    assert!(
        group.elements().all(|x| result.map().fuzzy_image(x) == group.conjugate(a, x)),
        "conjugate of inner automorphism by {g} is not conjugation by {a}"
    );
    Ok(result)
}

/// A fuzzy-image equivalence class of automorphisms.
#[derive(Debug, Clone)]
pub struct AutClass {
    skeleton: Vec<usize>,
    representative: FuzzyAutomorphism,
}

impl AutClass {
    pub fn of(f: &FuzzyAutomorphism) -> Self {
        AutClass { skeleton: f.skeleton().to_vec(), representative: f.clone() }
    }

    pub fn skeleton(&self) -> &[usize] {
        &self.skeleton
    }

    pub fn representative(&self) -> &FuzzyAutomorphism {
        &self.representative
    }

    /// Class of `self ∘ other`, well defined because skeletons compose.
    pub fn compose(&self, other: &AutClass) -> AutClass {
        AutClass::of(&compose_aut(&self.representative, &other.representative))
    }
}

impl PartialEq for AutClass {
    fn eq(&self, other: &Self) -> bool {
        self.skeleton == other.skeleton
    }
}

impl Eq for AutClass {}

/// Distinct classes among `autos`, ordered by skeleton.
pub fn distinct_classes<'a>(autos: impl IntoIterator<Item = &'a FuzzyAutomorphism>) -> Vec<AutClass> {
    let mut by_skeleton: BTreeMap<Vec<usize>, AutClass> = BTreeMap::new();
    for f in autos {
        by_skeleton.entry(f.skeleton().to_vec()).or_insert_with(|| AutClass::of(f));
    }
    by_skeleton.into_values().collect()
}

/// Cayley table of a set of classes under composition, validated as a
/// group. Fails if the set is not closed.
pub fn class_group(classes: &[AutClass]) -> Result<FiniteGroup, AutError> {
    let index: BTreeMap<&[usize], usize> = classes.iter().enumerate().map(|(i, c)| (c.skeleton(), i)).collect();
    let mut rows = Vec::with_capacity(classes.len());
    for (left, a) in classes.iter().enumerate() {
        let mut row = Vec::with_capacity(classes.len());
        for (right, b) in classes.iter().enumerate() {
            let composed: Vec<usize> = b.skeleton.iter().map(|&x| a.skeleton[x]).collect();
            row.push(*index.get(composed.as_slice()).ok_or(AutError::NotClosed { left, right })?);
        }
        rows.push(row);
    }
    Ok(FiniteGroup::from_table(rows)?.with_name("Aut_F classes"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::Grade;
    use crate::group::builtin_group;
    use crate::hom::lift_hom;
    use crate::map::FuzzyRelation;
    use crate::subset::{FuzzySubset, MuStrategy};

    fn g(t: &str) -> Arc<FiniteGroup> {
        Arc::new(builtin_group(t).unwrap())
    }

    fn lifted(group: &Arc<FiniteGroup>, mu: &FuzzySubset, sigma: &[usize]) -> FuzzyAutomorphism {
        make_automorphism(lift_hom(group.clone(), sigma, mu).unwrap()).unwrap()
    }

    #[test]
    fn identity_is_valid() {
        let s3 = g("symmetric(3)");
        let id = identity_aut(&s3);
        assert_eq!(id.skeleton(), &[0, 1, 2, 3, 4, 5]);
        assert!(is_fuzzy_homomorphism(id.map()).verdict);
        assert!(is_class_preserving(id.map()));
        assert_eq!(is_inner(id.map()), Some(0));
        let mu = MuStrategy::Chain.generate(&s3);
        let ie = lift_hom(s3.clone(), id.skeleton(), &mu).unwrap();
        assert!(id.map().equiv(&ie).unwrap());
    }

    #[test]
    fn rejects_non_automorphisms() {
        let s3 = g("symmetric(3)");
        let z2 = g("cyclic(2)");
        let mu2 = FuzzySubset::new(z2, vec![Grade::ONE, "1/2".parse().unwrap()]).unwrap();
        let sign = lift_hom(s3.clone(), &[0, 1, 1, 0, 0, 1], &mu2).unwrap();
        assert_eq!(make_automorphism(sign), Err(AutError::NotEndomorphism));

        // sign map composed into S3 via the transposition subgroup {0, 1}
        let to_s3 = FuzzyMap::crisp(s3.clone(), s3.clone(), &[0, 1, 1, 0, 0, 1]);
        assert_eq!(make_automorphism(to_s3), Err(AutError::NotInjective));

        let z2 = g("cyclic(2)");
        let swapped = FuzzyMap::crisp(z2.clone(), z2.clone(), &[1, 0]);
        assert!(matches!(make_automorphism(swapped), Err(AutError::NotHomomorphism(_))));
    }

    #[test]
    fn laws_up_to_equivalence() {
        let q8 = g("quaternion8");
        let mu = MuStrategy::Class.generate(&q8);
        let auts: Vec<FuzzyAutomorphism> =
            q8.crisp_automorphisms().unwrap().iter().map(|s| lifted(&q8, &mu, s)).collect();
        let id = identity_aut(&q8);
        for f in &auts {
            assert!(compose_aut(f, &id).map().equiv(f.map()).unwrap());
            assert!(compose_aut(&id, f).map().equiv(f.map()).unwrap());
            let inv = inverse_aut(f);
            assert!(compose_aut(f, &inv).map().equiv(id.map()).unwrap());
            assert!(compose_aut(&inv, f).map().equiv(id.map()).unwrap());
        }
        let classes = distinct_classes(&auts);
        assert_eq!(classes.len(), 24);
        assert_eq!(class_group(&classes).unwrap().order(), 24);
    }

    #[test]
    fn inner_composition() {
        let s3 = g("symmetric(3)");
        let mu = MuStrategy::Class.generate(&s3);
        for g1 in s3.elements() {
            for g2 in s3.elements() {
                let f1 = lifted(&s3, &mu, &s3.conjugation(g1));
                let f2 = lifted(&s3, &mu, &s3.conjugation(g2));
                let c = compose_aut(&f1, &f2);
                assert_eq!(c.skeleton(), s3.conjugation(s3.mul(g2, g1)).as_slice());
            }
        }
    }

    #[test]
    fn klein_swap_is_not_class_preserving_or_inner() {
        let v4 = g("klein4");
        let mu = MuStrategy::Chain.generate(&v4);
        let swap = lifted(&v4, &mu, &[0, 2, 1, 3]);
        assert!(!is_class_preserving(swap.map()));
        assert_eq!(is_inner(swap.map()), None);
        let id = identity_aut(&v4);
        let conj = conjugate_aut(&swap, &id).unwrap();
        assert!(conj.map().equiv(id.map()).unwrap());
        assert_eq!(conjugate_aut(&id, &swap), Err(AutError::NotInner));
    }

    #[test]
    fn conjugating_inner_by_inner() {
        let d4 = g("dihedral(4)");
        let mu = MuStrategy::Chain.generate(&d4);
        for h in d4.elements() {
            for gg in d4.elements() {
                let f = lifted(&d4, &mu, &d4.conjugation(h));
                let inner = lifted(&d4, &mu, &d4.conjugation(gg));
                let r = conjugate_aut(&f, &inner).unwrap();
                assert!(is_inner(r.map()).is_some());
            }
        }
        // identity conjugator leaves the inner skeleton alone
        let id = identity_aut(&d4);
        let inner = lifted(&d4, &mu, &d4.conjugation(2));
        assert!(conjugate_aut(&id, &inner).unwrap().map().equiv(inner.map()).unwrap());
    }

    #[test]
    fn class_group_detects_missing_elements() {
        let z3 = g("cyclic(3)");
        let shift = FuzzyRelation::from_fn(z3.clone(), z3.clone(), |x, y| if y == (2 * x) % 3 { Grade::ONE } else { Grade::ZERO });
        let neg = make_automorphism(FuzzyMap::new(shift).unwrap()).unwrap();
        let classes = vec![AutClass::of(&neg)];
        assert_eq!(class_group(&classes).unwrap_err(), AutError::NotClosed { left: 0, right: 0 });
    }
}
