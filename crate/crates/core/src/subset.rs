//! Fuzzy subsets of a finite group and the generators that produce valid
//! pointed normal fuzzy subgroups.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::SubsetError;
use crate::grade::Grade;
use crate::group::{ElementSubset, FiniteGroup};

/// First counterexample to the fuzzy-subgroup inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupViolation {
    /// `μ(xy) < μ(x) ∧ μ(y)`.
    Product { x: usize, y: usize },
    /// `μ(x⁻¹) < μ(x)`.
    Inverse { x: usize },
}

impl fmt::Display for SubgroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupViolation::Product { x, y } => write!(f, "mu({x}*{y}) < mu({x}) ^ mu({y})"),
            SubgroupViolation::Inverse { x } => write!(f, "mu({x}^-1) < mu({x})"),
        }
    }
}

/// A grade for every element of a group.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzySubset {
    group: Arc<FiniteGroup>,
    grades: Vec<Grade>,
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FuzzySubset({}, {:?})", self.group.name(), self.grades)
    }
}

impl FuzzySubset {
    pub fn new(group: Arc<FiniteGroup>, grades: Vec<Grade>) -> Result<Self, SubsetError> {
        if grades.len() != group.order() {
            return Err(SubsetError::LengthMismatch { expected: group.order(), actual: grades.len() });
        }
        Ok(FuzzySubset { group, grades })
    }

    pub fn constant(group: Arc<FiniteGroup>, grade: Grade) -> Self {
        let grades = vec![grade; group.order()];
        FuzzySubset { group, grades }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    #[inline]
    pub fn grade(&self, x: usize) -> Grade {
        self.grades[x]
    }

    /// Scans pairs `(x, y)` lexicographically for `μ(xy) ≥ μ(x) ∧ μ(y)`,
    /// then elements for `μ(x⁻¹) ≥ μ(x)`.
    pub fn subgroup_violation(&self) -> Option<SubgroupViolation> {
        let g = &self.group;
        for x in g.elements() {
            for y in g.elements() {
                if self.grade(g.mul(x, y)) < self.grade(x).meet(self.grade(y)) {
                    return Some(SubgroupViolation::Product { x, y });
                }
            }
        }
        g.elements()
            .find(|&x| self.grade(g.inverse(x)) < self.grade(x))
            .map(|x| SubgroupViolation::Inverse { x })
    }

    pub fn is_fuzzy_subgroup(&self) -> bool {
        self.subgroup_violation().is_none()
    }

    /// First pair with `μ(xy) ≠ μ(yx)`.
    pub fn normality_violation(&self) -> Option<(usize, usize)> {
        let g = &self.group;
        g.elements()
            .flat_map(|x| g.elements().map(move |y| (x, y)))
            .find(|&(x, y)| self.grade(g.mul(x, y)) != self.grade(g.mul(y, x)))
    }

    /// `μ(xy) = μ(yx)` for all `x, y`. Fuzzy-subgroup membership is a
    /// separate predicate.
    pub fn is_normal_fuzzy_subgroup(&self) -> bool {
        self.normality_violation().is_none()
    }

    /// Constant on every conjugacy class; equivalent to
    /// [`FuzzySubset::is_normal_fuzzy_subgroup`].
    pub fn is_class_constant(&self) -> bool {
        self.group
            .conjugacy_classes()
            .iter()
            .all(|class| class.iter().all(|&x| self.grade(x) == self.grade(class[0])))
    }

    /// Grade 1 is attained exactly at the identity.
    pub fn is_pointed(&self) -> bool {
        let e = self.group.identity();
        self.group.elements().all(|x| self.grade(x).is_one() == (x == e))
    }

    /// `{x : μ(x) ≥ t}`.
    pub fn level_set(&self, t: Grade) -> ElementSubset {
        ElementSubset::from_elements(self.grades.len(), self.group.elements().filter(|&x| self.grade(x) >= t))
    }

    /// Distinct grades in decreasing order.
    pub fn attained_grades(&self) -> Vec<Grade> {
        let mut v = self.grades.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.dedup();
        v
    }
}

/// `μ(x) = grades[i]` for the first chain term containing `x`.
///
/// The chain must run from `{e}` to the whole group through nested
/// subgroups, and `grades` must start at 1 and strictly decrease.
pub fn gen_mu_chain(
    group: Arc<FiniteGroup>,
    chain: &[ElementSubset],
    grades: &[Grade],
) -> Result<FuzzySubset, SubsetError> {
    if chain.len() != grades.len() {
        return Err(SubsetError::ChainGradeCount { chain: chain.len(), grades: grades.len() });
    }
    let n = group.order();
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return Err(SubsetError::ChainEnds);
    };
    if first.group_order() != n
        || first.elements() != [group.identity()]
        || *last != ElementSubset::full(n)
    {
        return Err(SubsetError::ChainEnds);
    }
    for (index, term) in chain.iter().enumerate() {
        if term.group_order() != n || !group.is_subgroup(term) {
            return Err(SubsetError::NotSubgroup { index });
        }
    }
    for (index, pair) in chain.windows(2).enumerate() {
        if !pair[0].is_subset_of(&pair[1]) {
            return Err(SubsetError::NotNested { index });
        }
    }
    if !grades[0].is_one() {
        return Err(SubsetError::GradesNotDecreasing { index: 0 });
    }
    if let Some(index) = grades.windows(2).position(|w| w[1] >= w[0]) {
        return Err(SubsetError::GradesNotDecreasing { index: index + 1 });
    }

    let values = group
        .elements()
        .map(|x| grades[chain.iter().position(|term| term.contains(x)).expect("last term is the group")])
        .collect();
    let mu = FuzzySubset::new(group, values)?;
    assert!(mu.is_fuzzy_subgroup(), "chain generator produced a non-subgroup: {mu:?}");
    assert!(mu.is_pointed(), "chain generator produced a non-pointed mu: {mu:?}");
    Ok(mu)
}

/// Class-constant `μ` from one grade per conjugacy class (canonical class
/// order). Rejected with a witness when it is not a fuzzy subgroup.
pub fn gen_mu_class(group: Arc<FiniteGroup>, class_grades: &[Grade]) -> Result<FuzzySubset, SubsetError> {
    let classes = group.conjugacy_classes();
    if classes.len() != class_grades.len() {
        return Err(SubsetError::ClassCount { expected: classes.len(), actual: class_grades.len() });
    }
    let e = group.identity();
    for (class, members) in classes.iter().enumerate() {
        if members.contains(&e) != class_grades[class].is_one() {
            return Err(SubsetError::ClassGrades { class });
        }
    }
    let mut values = vec![Grade::ZERO; group.order()];
    for (members, &grade) in classes.iter().zip(class_grades) {
        for &x in members {
            values[x] = grade;
        }
    }
    let mu = FuzzySubset::new(group, values)?;
    match mu.subgroup_violation() {
        Some(w) => Err(SubsetError::NotFuzzySubgroup(w)),
        None => Ok(mu),
    }
}

/// Deterministic recipes for pointed normal fuzzy subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MuStrategy {
    /// Grades `1, 1/2, 1/4, …` along [`normal_chain`].
    Chain,
    /// Grades `1, 1/2, 1/4, …` assigned class by class, see [`class_ladder`].
    Class,
    /// [`normal_chain`] with seeded random strictly decreasing grades.
    Random(u64),
}

impl MuStrategy {
    pub fn token(&self) -> String {
        match self {
            MuStrategy::Chain => "chain".into(),
            MuStrategy::Class => "class".into(),
            MuStrategy::Random(seed) => format!("random:{seed}"),
        }
    }

    pub fn generate(&self, group: &Arc<FiniteGroup>) -> FuzzySubset {
        let built = match *self {
            MuStrategy::Chain => {
                let chain = normal_chain(group);
                let grades: Vec<Grade> = (0..chain.len() as u32).map(Grade::half_pow).collect();
                gen_mu_chain(group.clone(), &chain, &grades)
            }
            MuStrategy::Class => gen_mu_class(group.clone(), &class_ladder(group)),
            MuStrategy::Random(seed) => {
                let chain = normal_chain(group);
                let grades = random_ladder(chain.len(), seed ^ (group.order() as u64).rotate_left(32));
                gen_mu_chain(group.clone(), &chain, &grades)
            }
        };
        built.unwrap_or_else(|e| panic!("{} strategy failed on {}: {e}", self.token(), group.name()))
    }
}

/// Maximal-length chain of normal subgroups from `{e}` to the group; each
/// step takes the smallest normal subgroup properly containing the last
/// (ties broken by element list).
pub fn normal_chain(group: &FiniteGroup) -> Vec<ElementSubset> {
    let normals = group.normal_subgroups();
    let mut chain = vec![normals[0].clone()];
    while chain.last().map(ElementSubset::len) != Some(group.order()) {
        let current = chain.last().expect("nonempty");
        let next = normals
            .iter()
            .find(|n| n.len() > current.len() && current.is_subset_of(n))
            .expect("the whole group is normal");
        chain.push(next.clone());
    }
    chain
}

/// Class grades for [`MuStrategy::Class`]: the identity class gets 1; then,
/// step by step, the first class (canonical order) whose union with the
/// classes already graded is a subgroup receives the next grade `1/2^k`.
/// When no single class extends the subgroup, the first remaining class and
/// everything in the normal closure it generates share the grade.
pub fn class_ladder(group: &FiniteGroup) -> Vec<Grade> {
    let classes = group.conjugacy_classes();
    let n = group.order();
    let mut grades: Vec<Option<Grade>> = vec![None; classes.len()];
    let mut covered = ElementSubset::from_elements(n, [group.identity()]);
    let id_class = classes.iter().position(|c| c.contains(&group.identity())).expect("identity class");
    grades[id_class] = Some(Grade::ONE);
    let mut step = 1;
    while covered.len() < n {
        let extension = (0..classes.len()).filter(|&c| grades[c].is_none()).find(|&c| {
            let candidate = covered.union(&ElementSubset::from_elements(n, classes[c].iter().copied()));
            group.is_subgroup(&candidate)
        });
        let target = match extension {
            Some(c) => covered.union(&ElementSubset::from_elements(n, classes[c].iter().copied())),
            None => {
                let first = (0..classes.len()).find(|&c| grades[c].is_none()).expect("uncovered class");
                let mut gens = covered.elements();
                gens.push(classes[first][0]);
                group.normal_closure(&gens)
            }
        };
        let grade = Grade::half_pow(step);
        for (c, members) in classes.iter().enumerate() {
            if grades[c].is_none() && target.contains(members[0]) {
                grades[c] = Some(grade);
            }
        }
        covered = target;
        step += 1;
    }
    grades.into_iter().map(|g| g.expect("every class graded")).collect()
}

fn random_ladder(len: usize, seed: u64) -> Vec<Grade> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut below_one: Vec<Grade> = Vec::new();
    while below_one.len() + 1 < len {
        let denom = rng.gen_range(2..=32u64);
        let numer = rng.gen_range(1..denom);
        let g = Grade::new(numer, denom).expect("numer < denom");
        if !below_one.contains(&g) {
            below_one.push(g);
        }
    }
    below_one.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![Grade::ONE];
    out.extend(below_one);
    out
}

/// A chain `{e} ⊂ ⟨x⟩ ⊂ G` through the first non-normal cyclic subgroup,
/// graded `1, 1/2, 1/4`. `None` when every cyclic subgroup is normal.
pub fn non_normal_chain_mu(group: &Arc<FiniteGroup>) -> Option<FuzzySubset> {
    let n = group.order();
    let sub = group
        .elements()
        .map(|x| group.generated(&[x]))
        .find(|h| !group.is_normal_subgroup(h))?;
    let chain = [ElementSubset::from_elements(n, [group.identity()]), sub, ElementSubset::full(n)];
    let grades = [Grade::ONE, Grade::half_pow(1), Grade::half_pow(2)];
    gen_mu_chain(group.clone(), &chain, &grades).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    fn g(t: &str) -> Arc<FiniteGroup> {
        Arc::new(builtin_group(t).unwrap())
    }

    fn grades(s: &[&str]) -> Vec<Grade> {
        s.iter().map(|x| x.parse().unwrap()).collect()
    }

    fn mu(t: &str, s: &[&str]) -> FuzzySubset {
        FuzzySubset::new(g(t), grades(s)).unwrap()
    }

    #[test]
    fn fuzzy_subgroup_examples() {
        assert!(FuzzySubset::constant(g("symmetric(3)"), Grade::ONE).is_fuzzy_subgroup());
        assert!(mu("cyclic(4)", &["1", "1/4", "1/2", "1/4"]).is_fuzzy_subgroup());
        assert_eq!(
            mu("cyclic(4)", &["1", "1/2", "1/4", "1/2"]).subgroup_violation(),
            Some(SubgroupViolation::Product { x: 1, y: 1 })
        );
    }

    #[test]
    fn unequal_generator_grades_on_z3() {
        // in a finite group the product inequality already forces mu(x^-1) = mu(x)
        let m = mu("cyclic(3)", &["1", "1/2", "1/4"]);
        assert!(m.subgroup_violation().is_some());
        assert_eq!(FuzzySubset::new(g("cyclic(3)"), grades(&["1"])).unwrap_err(),
            SubsetError::LengthMismatch { expected: 3, actual: 1 });
    }

    #[test]
    fn normality_examples() {
        assert!(mu("cyclic(4)", &["1", "1/3", "0", "1"]).is_normal_fuzzy_subgroup());
        // S3: e=0, transpositions 1,2,5, 3-cycles 3,4
        let class_mu = mu("symmetric(3)", &["1", "1/4", "1/4", "1/2", "1/2", "1/4"]);
        assert!(class_mu.is_normal_fuzzy_subgroup());
        assert!(class_mu.is_class_constant());
        let split = mu("symmetric(3)", &["1", "1/2", "1/4", "1/2", "1/2", "1/4"]);
        assert!(split.normality_violation().is_some());
        assert!(!split.is_class_constant());
    }

    #[test]
    fn pointedness() {
        assert!(!FuzzySubset::constant(g("cyclic(2)"), Grade::ONE).is_pointed());
        assert!(FuzzySubset::constant(g("cyclic(1)"), Grade::ONE).is_pointed());
        assert!(mu("cyclic(4)", &["1", "1/4", "1/2", "1/4"]).is_pointed());
        assert!(!mu("cyclic(4)", &["1/2", "1/4", "1/2", "1/4"]).is_pointed());
    }

    #[test]
    fn level_sets() {
        let m = mu("cyclic(4)", &["1", "1/4", "1/2", "1/4"]);
        assert_eq!(m.level_set(Grade::ZERO).len(), 4);
        assert_eq!(m.level_set("1/2".parse().unwrap()).elements(), vec![0, 2]);
        assert_eq!(m.level_set(Grade::ONE).elements(), vec![0]);
    }

    #[test]
    fn chain_generator() {
        let z4 = g("cyclic(4)");
        let chain = [
            ElementSubset::from_elements(4, [0]),
            ElementSubset::from_elements(4, [0, 2]),
            ElementSubset::full(4),
        ];
        let m = gen_mu_chain(z4.clone(), &chain, &grades(&["1", "1/2", "1/4"])).unwrap();
        assert_eq!(m.grades(), grades(&["1", "1/4", "1/2", "1/4"]).as_slice());

        let two = gen_mu_chain(z4.clone(), &[chain[0].clone(), chain[2].clone()], &grades(&["1", "1/2"])).unwrap();
        assert_eq!(two.attained_grades(), grades(&["1", "1/2"]));

        let s3 = g("symmetric(3)");
        let a3 = [ElementSubset::from_elements(6, [0]), ElementSubset::from_elements(6, [0, 3, 4]), ElementSubset::full(6)];
        let m = gen_mu_chain(s3, &a3, &grades(&["1", "1/2", "1/4"])).unwrap();
        assert!(m.is_class_constant());
    }

    #[test]
    fn chain_generator_errors() {
        let z4 = g("cyclic(4)");
        let e = ElementSubset::from_elements(4, [0]);
        let full = ElementSubset::full(4);
        let half = grades(&["1", "1/2", "1/4"]);
        assert_eq!(
            gen_mu_chain(z4.clone(), &[e.clone(), ElementSubset::from_elements(4, [0, 1]), full.clone()], &half),
            Err(SubsetError::NotSubgroup { index: 1 })
        );
        let c4 = g("cyclic(6)");
        let chain6 = [
            ElementSubset::from_elements(6, [0]),
            ElementSubset::from_elements(6, [0, 2, 4]),
            ElementSubset::from_elements(6, [0, 3]),
            ElementSubset::full(6),
        ];
        assert_eq!(
            gen_mu_chain(c4, &chain6, &grades(&["1", "1/2", "1/3", "1/4"])),
            Err(SubsetError::NotNested { index: 1 })
        );
        let chain = [e.clone(), ElementSubset::from_elements(4, [0, 2]), full.clone()];
        assert_eq!(
            gen_mu_chain(z4.clone(), &chain, &grades(&["1", "1/2", "1/2"])),
            Err(SubsetError::GradesNotDecreasing { index: 2 })
        );
        assert_eq!(
            gen_mu_chain(z4.clone(), &chain, &grades(&["1/2", "1/3", "1/4"])),
            Err(SubsetError::GradesNotDecreasing { index: 0 })
        );
        assert_eq!(gen_mu_chain(z4.clone(), &[full.clone()], &grades(&["1"])), Err(SubsetError::ChainEnds));
        assert_eq!(gen_mu_chain(z4, &chain, &grades(&["1"])), Err(SubsetError::ChainGradeCount { chain: 3, grades: 1 }));
    }

    #[test]
    fn class_generator() {
        let s3 = g("symmetric(3)");
        // classes: {0}, {1,2,5} transpositions, {3,4} 3-cycles
        let half = gen_mu_class(s3.clone(), &grades(&["1", "1/2", "1/2"])).unwrap();
        assert!(half.is_fuzzy_subgroup());
        let err = gen_mu_class(s3.clone(), &grades(&["1", "1/2", "1/4"])).unwrap_err();
        match err {
            SubsetError::NotFuzzySubgroup(SubgroupViolation::Product { x, y }) => {
                assert!([1, 2, 5].contains(&x) && [1, 2, 5].contains(&y));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(gen_mu_class(s3.clone(), &grades(&["1/2", "1/2", "1/2"])), Err(SubsetError::ClassGrades { class: 0 }));
        assert_eq!(gen_mu_class(s3, &grades(&["1"])), Err(SubsetError::ClassCount { expected: 3, actual: 1 }));

        let q8 = g("quaternion8");
        let m = gen_mu_class(q8, &grades(&["1", "1/2", "1/4", "1/4", "1/4"])).unwrap();
        assert!(m.is_pointed() && m.is_normal_fuzzy_subgroup());
    }

    #[test]
    fn strategies() {
        let z4 = g("cyclic(4)");
        assert_eq!(MuStrategy::Chain.generate(&z4).grades(), grades(&["1", "1/4", "1/2", "1/4"]).as_slice());
        assert_eq!(MuStrategy::Chain.generate(&g("cyclic(1)")).grades(), grades(&["1"]).as_slice());
        let s3 = g("symmetric(3)");
        assert_eq!(MuStrategy::Class.generate(&s3).grades(), grades(&["1", "1/4", "1/4", "1/2", "1/2", "1/4"]).as_slice());
        let q8 = g("quaternion8");
        assert_eq!(
            MuStrategy::Class.generate(&q8).grades(),
            grades(&["1", "1/2", "1/4", "1/4", "1/8", "1/8", "1/8", "1/8"]).as_slice()
        );
        let r1 = MuStrategy::Random(7).generate(&q8);
        assert_eq!(r1, MuStrategy::Random(7).generate(&q8));
        assert!(r1.is_pointed() && r1.is_normal_fuzzy_subgroup() && r1.is_fuzzy_subgroup());
    }

    #[test]
    fn non_normal_chain() {
        let s3 = g("symmetric(3)");
        let m = non_normal_chain_mu(&s3).unwrap();
        assert!(m.is_fuzzy_subgroup() && m.is_pointed() && !m.is_normal_fuzzy_subgroup());
        assert!(non_normal_chain_mu(&g("quaternion8")).is_none());
        assert!(non_normal_chain_mu(&g("cyclic(6)")).is_none());
    }
}
