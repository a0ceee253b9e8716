//! Fuzzy inner automorphisms induced by a pointed normal fuzzy subgroup:
//! `f_g(x, y) = μ(x⁻¹ g y g⁻¹)`, the group they form, and its relation to
//! `G / Z(G)` and to `G` itself.

use std::sync::Arc;

use serde::Serialize;

use crate::aut::is_class_preserving;
use crate::error::InducedError;
use crate::group::{is_group_isomorphism, ElementSubset, FiniteGroup};
use crate::hom::{hom_violation, is_fuzzy_homomorphism, HomCheckReport};
use crate::map::{compose, FuzzyMap, FuzzyRelation};
use crate::subset::FuzzySubset;

/// Which standing hypotheses on `μ` a construction enforces. Dropping one
/// lets the construction be attempted anyway, for hypothesis-necessity
/// experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    pub pointed: bool,
    pub normal: bool,
}

impl Hypotheses {
    pub const ALL: Hypotheses = Hypotheses { pointed: true, normal: true };
}

/// Checks that `μ` is a pointed normal fuzzy subgroup, within `hyp`.
/// Class constancy is checked before the subgroup inequalities.
pub fn check_mu(mu: &FuzzySubset, hyp: Hypotheses) -> Result<(), InducedError> {
    if hyp.normal {
        if let Some((x, y)) = mu.normality_violation() {
            return Err(InducedError::MuNotNormal { x, y });
        }
        if let Some(w) = mu.subgroup_violation() {
            return Err(InducedError::MuNotSubgroup(w));
        }
    }
    if hyp.pointed && !mu.is_pointed() {
        return Err(InducedError::MuNotPointed);
    }
    Ok(())
}

/// `f_g^μ` together with its label `g`.
#[derive(Debug, Clone)]
pub struct InducedInner {
    label: usize,
    mu: Arc<FuzzySubset>,
    map: FuzzyMap,
}

impl InducedInner {
    pub fn label(&self) -> usize {
        self.label
    }

    pub fn mu(&self) -> &Arc<FuzzySubset> {
        &self.mu
    }

    pub fn map(&self) -> &FuzzyMap {
        &self.map
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.mu.group()
    }
}

/// The grade matrix `(x, y) ↦ μ(x⁻¹ g y g⁻¹)`.
pub fn induced_relation(mu: &FuzzySubset, g: usize) -> FuzzyRelation {
    let group = mu.group().clone();
    let g_inv = group.inverse(g);
    FuzzyRelation::from_fn(group.clone(), group.clone(), |x, y| {
        mu.grade(group.mul(group.mul(group.mul(group.inverse(x), g), y), g_inv))
    })
}

/// Builds `f_g^μ` and asserts that it is a one-one, onto, class-preserving
/// fuzzy homomorphism whose skeleton is conjugation by `g`.
pub fn make_induced(g: usize, mu: &Arc<FuzzySubset>) -> Result<InducedInner, InducedError> {
    let f = make_induced_with(g, mu, Hypotheses::ALL)?;
    if let Some(w) = is_fuzzy_homomorphism(&f.map).witness {
        return Err(InducedError::Assertion { claim: "induced map is a fuzzy homomorphism", detail: w.to_string() });
    }
    if !f.map.is_one_one() || !f.map.is_onto() {
        return Err(InducedError::Assertion { claim: "induced map is bijective", detail: format!("{:?}", f.map.skeleton()) });
    }
    if !is_class_preserving(&f.map) {
        return Err(InducedError::Assertion { claim: "induced map is class preserving", detail: format!("{:?}", f.map.skeleton()) });
    }
    Ok(f)
}

/// Builds `f_g^μ` enforcing only the hypotheses in `hyp`, with no
/// postcondition checks beyond fuzzy-map validity.
pub fn make_induced_with(g: usize, mu: &Arc<FuzzySubset>, hyp: Hypotheses) -> Result<InducedInner, InducedError> {
    check_mu(mu, hyp)?;
    let map = FuzzyMap::new(induced_relation(mu, g))?;
    Ok(InducedInner { label: g, mu: mu.clone(), map })
}

fn same_mu(a: &InducedInner, b: &InducedInner) -> bool {
    Arc::ptr_eq(&a.mu, &b.mu) || a.mu == b.mu
}

/// `f_{g1} ∘ f_{g2} = f_{g2 g1}`, asserted pointwise against the generic
/// sup-composition.
pub fn compose_induced(a: &InducedInner, b: &InducedInner) -> Result<InducedInner, InducedError> {
    compose_induced_with(a, b, Hypotheses::ALL)
}

pub(crate) fn compose_induced_with(
    a: &InducedInner,
    b: &InducedInner,
    hyp: Hypotheses,
) -> Result<InducedInner, InducedError> {
    if !same_mu(a, b) {
        return Err(InducedError::MuMismatch);
    }
    let group = a.group();
    let label = group.mul(b.label, a.label);
    let expected = make_induced_with(label, &a.mu, hyp)?;
    let generic = compose(a.map.relation(), b.map.relation())?;
    if let Some((x, y)) = generic.first_difference(expected.map.relation()) {
        return Err(InducedError::Assertion {
            claim: "pointwise composition law",
            detail: format!(
                "g1={} g2={} at ({x}, {y}): composite {} vs f_(g2 g1) {}",
                a.label,
                b.label,
                generic.get(x, y),
                expected.map.get(x, y)
            ),
        });
    }
    Ok(expected)
}

/// `I_e^μ(x, y) = μ(x⁻¹ y)`, asserted to be a two-sided pointwise identity
/// for every `f_g^μ`.
pub fn identity_induced(mu: &Arc<FuzzySubset>) -> Result<InducedInner, InducedError> {
    let group = mu.group().clone();
    let id = make_induced(group.identity(), mu)?;
    for g in group.elements() {
        let f = make_induced_with(g, mu, Hypotheses::ALL)?;
        for (side, composite) in [("right", compose(f.map.relation(), id.map.relation())?), ("left", compose(id.map.relation(), f.map.relation())?)] {
            if let Some((x, y)) = composite.first_difference(f.map.relation()) {
                return Err(InducedError::Assertion {
                    claim: "identity law",
                    detail: format!("{side} identity fails for g={g} at ({x}, {y})"),
                });
            }
        }
    }
    Ok(id)
}

/// `f_{g⁻¹}^μ`, asserted to compose with `a` to `I_e^μ` pointwise on both
/// sides.
pub fn inverse_induced(a: &InducedInner) -> Result<InducedInner, InducedError> {
    let group = a.group().clone();
    let inv = make_induced_with(group.inverse(a.label), &a.mu, Hypotheses::ALL)?;
    let id = induced_relation(&a.mu, group.identity());
    for composite in [compose(a.map.relation(), inv.map.relation())?, compose(inv.map.relation(), a.map.relation())?] {
        if let Some((x, y)) = composite.first_difference(&id) {
            return Err(InducedError::Assertion {
                claim: "inverse law",
                detail: format!("g={} at ({x}, {y})", a.label),
            });
        }
    }
    Ok(inv)
}

/// The group of induced inner automorphisms for a fixed `μ`.
///
/// Members are labelled by `g ∈ G`; labels with equal skeletons (equal
/// cosets of the center) form one class, and the class table is the group.
#[derive(Debug, Clone)]
pub struct InnGroup {
    mu: Arc<FuzzySubset>,
    members: Vec<InducedInner>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    table: FiniteGroup,
}

pub fn build_inn_group(mu: &Arc<FuzzySubset>) -> Result<InnGroup, InducedError> {
    build_inn_group_with(mu, Hypotheses::ALL)
}

/// [`build_inn_group`] enforcing only the hypotheses in `hyp`.
pub fn build_inn_group_with(mu: &Arc<FuzzySubset>, hyp: Hypotheses) -> Result<InnGroup, InducedError> {
    let group = mu.group().clone();
    let members = group
        .elements()
        .map(|g| make_induced_with(g, mu, hyp))
        .collect::<Result<Vec<_>, _>>()?;

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; group.order()];
    for g in group.elements() {
        let skeleton = members[g].map.skeleton();
        match classes.iter().position(|c| members[c[0]].map.skeleton() == skeleton) {
            Some(c) => {
                classes[c].push(g);
                class_of[g] = c;
            }
            None => {
                class_of[g] = classes.len();
                classes.push(vec![g]);
            }
        }
    }

    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let rows = (0..classes.len())
        .map(|i| (0..classes.len()).map(|j| class_of[group.mul(reps[j], reps[i])]).collect())
        .collect();
    let table = FiniteGroup::from_table(rows)
        .map_err(|e| InducedError::Assertion { claim: "class table is a group", detail: e.to_string() })?
        .with_name(format!("Inn_F({})", group.name()));
    Ok(InnGroup { mu: mu.clone(), members, classes, class_of, table })
}

impl InnGroup {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.mu.group()
    }

    pub fn mu(&self) -> &Arc<FuzzySubset> {
        &self.mu
    }

    /// `f_g^μ` for every label `g`.
    pub fn members(&self) -> &[InducedInner] {
        &self.members
    }

    /// Labels grouped by fuzzy-image equivalence, ordered by least label.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, label: usize) -> usize {
        self.class_of[label]
    }

    /// `table.mul(i, j)` is the class of `class i ∘ class j`.
    pub fn table(&self) -> &FiniteGroup {
        &self.table
    }

    /// The group on labels with `x ⋆ y` the label of `f_x ∘ f_y = f_{yx}`.
    pub fn label_group(&self) -> FiniteGroup {
        self.group().opposite(format!("Inn_F labels({})", self.group().name()))
    }

    pub fn report(&self) -> InnReport {
        InnReport {
            classes: self.classes.clone(),
            table: self.table.rows(),
            iso_with_quotient: zeta(self).holds(),
        }
    }
}

/// Serialized form of an [`InnGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnReport {
    pub classes: Vec<Vec<usize>>,
    pub table: Vec<Vec<usize>>,
    pub iso_with_quotient: bool,
}

/// The crisp map `g ↦ class of f_{g⁻¹}` and its checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaReport {
    pub images: Vec<usize>,
    pub multiplicative: bool,
    pub surjective: bool,
    pub kernel: ElementSubset,
    pub kernel_is_center: bool,
    /// The map induced on `G / Z(G)` is a group isomorphism onto the class table.
    pub quotient_iso: bool,
}

impl ZetaReport {
    pub fn holds(&self) -> bool {
        self.multiplicative && self.surjective && self.kernel_is_center && self.quotient_iso
    }
}

pub fn zeta(inn: &InnGroup) -> ZetaReport {
    let group = inn.group();
    let table = &inn.table;
    let images: Vec<usize> = group.elements().map(|g| inn.class_of(group.inverse(g))).collect();
    let multiplicative = group
        .elements()
        .all(|a| group.elements().all(|b| images[group.mul(a, b)] == table.mul(images[a], images[b])));
    let mut hit = vec![false; table.order()];
    images.iter().for_each(|&c| hit[c] = true);
    let surjective = hit.iter().all(|&b| b);
    let identity_class = inn.class_of(group.identity());
    let kernel = ElementSubset::from_elements(group.order(), group.elements().filter(|&g| images[g] == identity_class));
    let center = group.center();
    let kernel_is_center = kernel == center;

    let quotient_iso = match group.quotient(&center) {
        Ok(q) => {
            let well_defined = group.elements().all(|g| images[g] == images[q.cosets[q.coset_of[g]][0]]);
            let induced: Vec<usize> = q.cosets.iter().map(|c| images[c[0]]).collect();
            well_defined && is_group_isomorphism(&q.group, table, &induced)
        }
        Err(_) => false,
    };
    ZetaReport { images, multiplicative, surjective, kernel, kernel_is_center, quotient_iso }
}

/// `θ(a, f_b) = μ(a⁻¹ b⁻¹)` over `G × labels`, with its checks.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    /// `None` when the matrix is not a fuzzy map.
    pub map: Option<FuzzyMap>,
    pub images_are_inverses: bool,
    pub homomorphism: HomCheckReport,
    pub kernel_is_trivial: bool,
    pub one_one: bool,
    pub onto: bool,
}

impl ThetaReport {
    pub fn holds(&self) -> bool {
        self.map.is_some()
            && self.images_are_inverses
            && self.homomorphism.verdict
            && self.kernel_is_trivial
            && self.one_one
            && self.onto
    }
}

pub fn theta(inn: &InnGroup) -> ThetaReport {
    let group = inn.group().clone();
    let labels = Arc::new(inn.label_group());
    let mu = inn.mu.clone();
    let rel = FuzzyRelation::from_fn(group.clone(), labels, |a, b| {
        mu.grade(group.mul(group.inverse(a), group.inverse(b)))
    });
    let homomorphism = match hom_violation(&rel) {
        Some(w) => HomCheckReport { verdict: false, witness: Some(w) },
        None => HomCheckReport { verdict: true, witness: None },
    };
    match FuzzyMap::new(rel) {
        Ok(map) => {
            let images_are_inverses = group.elements().all(|a| map.fuzzy_image(a) == group.inverse(a));
            let e = group.identity();
            let kernel: Vec<usize> = group.elements().filter(|&x| map.get(x, e).is_one()).collect();
            ThetaReport {
                images_are_inverses,
                homomorphism,
                kernel_is_trivial: kernel == [e],
                one_one: map.is_one_one(),
                onto: map.is_onto(),
                map: Some(map),
            }
        }
        Err(_) => ThetaReport {
            map: None,
            images_are_inverses: false,
            homomorphism,
            kernel_is_trivial: false,
            one_one: false,
            onto: false,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::Grade;
    use crate::group::builtin_group;
    use crate::map::FuzzyMap;
    use crate::subset::{gen_mu_class, MuStrategy};

    fn g(t: &str) -> Arc<FiniteGroup> {
        Arc::new(builtin_group(t).unwrap())
    }

    fn mu_of(t: &str, s: MuStrategy) -> Arc<FuzzySubset> {
        Arc::new(s.generate(&g(t)))
    }

    fn gr(s: &str) -> Grade {
        s.parse().unwrap()
    }

    #[test]
    fn identity_label_is_mu_identity() {
        let mu = mu_of("cyclic(4)", MuStrategy::Chain);
        let z4 = mu.group().clone();
        let f = make_induced(0, &mu).unwrap();
        for x in z4.elements() {
            for y in z4.elements() {
                assert_eq!(f.map().get(x, y), mu.grade(z4.mul(z4.inverse(x), y)));
            }
        }
        assert_eq!(f.map().get(1, 3), gr("1/2"));
        assert_eq!(identity_induced(&mu).unwrap().map(), f.map());
    }

    #[test]
    fn unit_entry_at_conjugate() {
        let mu = mu_of("symmetric(3)", MuStrategy::Class);
        let s3 = mu.group().clone();
        for gg in s3.elements() {
            let f = make_induced(gg, &mu).unwrap();
            for x in s3.elements() {
                assert!(f.map().get(x, s3.conjugate(gg, x)).is_one());
            }
            assert_eq!(f.map().skeleton(), s3.conjugation(gg).as_slice());
        }
    }

    #[test]
    fn quaternion_cells() {
        let q8 = g("quaternion8");
        let mu = Arc::new(gen_mu_class(q8.clone(), &["1", "1/2", "1/4", "1/4", "1/4"].map(gr)).unwrap());
        let i = 2;
        let f = make_induced(i, &mu).unwrap();
        for x in q8.elements() {
            for y in q8.elements() {
                let expected = mu.grade(q8.product(&[q8.inverse(x), i, y, q8.inverse(i)]));
                assert_eq!(f.map().get(x, y), expected);
            }
        }
        assert_eq!(inverse_induced(&f).unwrap().label(), 3);
    }

    #[test]
    fn precondition_errors() {
        let s3 = g("symmetric(3)");
        let flat = Arc::new(FuzzySubset::constant(s3.clone(), Grade::ONE));
        assert_eq!(make_induced(1, &flat).unwrap_err(), InducedError::MuNotPointed);
        let skew = Arc::new(FuzzySubset::new(s3.clone(), ["1", "1/2", "1/2", "1/4", "1/4", "1/2"].map(gr).to_vec()).unwrap());
        assert!(matches!(make_induced(1, &skew), Err(InducedError::MuNotSubgroup(_))));
        let non_normal = Arc::new(crate::subset::non_normal_chain_mu(&s3).unwrap());
        assert!(matches!(make_induced(1, &non_normal), Err(InducedError::MuNotNormal { .. })));
        let unpointed = make_induced_with(1, &flat, Hypotheses { pointed: false, normal: true });
        assert_eq!(unpointed.unwrap_err(), InducedError::Map(crate::error::MapError::MultipleUnitEntries(0)));
    }

    #[test]
    fn composition_and_inverses() {
        let mu = mu_of("symmetric(3)", MuStrategy::Chain);
        let s3 = mu.group().clone();
        let (t, c) = (1, 3);
        let a = make_induced(t, &mu).unwrap();
        let b = make_induced(c, &mu).unwrap();
        let ab = compose_induced(&a, &b).unwrap();
        assert_eq!(ab.label(), s3.mul(c, t));
        assert_eq!(ab.map().relation(), &compose(a.map().relation(), b.map().relation()).unwrap());

        let e = make_induced(0, &mu).unwrap();
        assert_eq!(compose_induced(&e, &e).unwrap().label(), 0);
        let inv = inverse_induced(&b).unwrap();
        assert_eq!(inv.label(), s3.inverse(c));
        let back = compose_induced(&b, &inv).unwrap();
        assert_eq!(back.map(), e.map());
        assert_eq!(inverse_induced(&e).unwrap().label(), 0);

        // transpose agrees with f_(g^-1) under equivalence
        let transposed = b.map().inverse_map().unwrap();
        assert!(transposed.equiv(inv.map()).unwrap());

        let other = mu_of("symmetric(3)", MuStrategy::Random(3));
        let foreign = make_induced(0, &other).unwrap();
        assert_eq!(compose_induced(&a, &foreign).unwrap_err(), InducedError::MuMismatch);
    }

    #[test]
    fn central_labels_are_equivalent() {
        let mu = mu_of("quaternion8", MuStrategy::Class);
        let q8 = mu.group().clone();
        for gg in q8.elements() {
            let f = make_induced(gg, &mu).unwrap();
            let h = make_induced(q8.mul(gg, 1), &mu).unwrap();
            assert!(f.map().equiv(h.map()).unwrap());
        }
    }

    #[test]
    fn inn_group_sizes() {
        let inn = build_inn_group(&mu_of("cyclic(6)", MuStrategy::Class)).unwrap();
        assert_eq!(inn.classes().len(), 1);
        let inn = build_inn_group(&mu_of("symmetric(3)", MuStrategy::Class)).unwrap();
        assert_eq!(inn.classes().len(), 6);
        let inn = build_inn_group(&mu_of("quaternion8", MuStrategy::Class)).unwrap();
        assert_eq!(inn.classes().len(), 4);
        let t = inn.table();
        assert!(t.elements().all(|x| t.mul(x, x) == t.identity()));
        assert_eq!(inn.classes()[0], vec![0, 1]);
        assert!(inn.report().iso_with_quotient);
    }

    #[test]
    fn zeta_on_quaternions() {
        let inn = build_inn_group(&mu_of("quaternion8", MuStrategy::Chain)).unwrap();
        let z = zeta(&inn);
        assert_eq!(z.kernel.elements(), vec![0, 1]);
        assert!(z.holds());
        assert_eq!(z.images[0], inn.class_of(0));
    }

    #[test]
    fn theta_values() {
        let inn = build_inn_group(&mu_of("cyclic(4)", MuStrategy::Chain)).unwrap();
        let t = theta(&inn);
        assert!(t.holds(), "{t:?}");
        let map: &FuzzyMap = t.map.as_ref().unwrap();
        assert_eq!(map.get(1, 1), gr("1/2"));
        for a in 0..4 {
            assert!(map.get(a, (4 - a) % 4).is_one());
        }

        let inn = build_inn_group(&mu_of("symmetric(3)", MuStrategy::Class)).unwrap();
        assert!(theta(&inn).holds());
    }
}
