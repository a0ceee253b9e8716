//! Fuzzy relations and fuzzy maps between finite groups.
//!
//! A [`FuzzyRelation`] is a dense grade matrix over `domain × codomain`. A
//! [`FuzzyMap`] additionally has exactly one grade-1 entry per row; the
//! column of that entry is the fuzzy image of the row, and the array of
//! fuzzy images is the map's skeleton.

use std::fmt;
use std::sync::Arc;

use crate::error::MapError;
use crate::grade::Grade;
use crate::group::FiniteGroup;

#[derive(Clone)]
pub struct FuzzyRelation {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    /// Row-major, `grades[x * |codomain| + y]`.
    grades: Vec<Grade>,
}

impl FuzzyRelation {
    pub fn new(domain: Arc<FiniteGroup>, codomain: Arc<FiniteGroup>, rows: Vec<Vec<Grade>>) -> Result<Self, MapError> {
        let (n, m) = (domain.order(), codomain.order());
        if rows.len() != n {
            return Err(MapError::ShapeMismatch(format!("{} rows for a domain of order {n}", rows.len())));
        }
        if let Some((x, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != m) {
            return Err(MapError::ShapeMismatch(format!(
                "row {x} has {} entries for a codomain of order {m}",
                row.len()
            )));
        }
        Ok(FuzzyRelation { domain, codomain, grades: rows.concat() })
    }

    pub fn from_fn(domain: Arc<FiniteGroup>, codomain: Arc<FiniteGroup>, f: impl Fn(usize, usize) -> Grade) -> Self {
        let m = codomain.order();
        let grades = (0..domain.order() * m).map(|i| f(i / m, i % m)).collect();
        FuzzyRelation { domain, codomain, grades }
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Grade {
        self.grades[x * self.codomain.order() + y]
    }

    pub fn row(&self, x: usize) -> &[Grade] {
        let m = self.codomain.order();
        &self.grades[x * m..(x + 1) * m]
    }

    pub fn rows(&self) -> Vec<Vec<Grade>> {
        self.grades.chunks(self.codomain.order().max(1)).map(<[Grade]>::to_vec).collect()
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    /// `t(y, x) = r(x, y)`.
    pub fn transpose(&self) -> FuzzyRelation {
        FuzzyRelation::from_fn(self.codomain.clone(), self.domain.clone(), |y, x| self.get(x, y))
    }

    /// First cell where the grades differ, for pointwise comparisons.
    pub fn first_difference(&self, other: &FuzzyRelation) -> Option<(usize, usize)> {
        if !self.same_shape(other) {
            return Some((0, 0));
        }
        let m = self.codomain.order();
        self.grades.iter().zip(&other.grades).position(|(a, b)| a != b).map(|i| (i / m, i % m))
    }

    fn same_shape(&self, other: &FuzzyRelation) -> bool {
        self.domain.same_structure(&other.domain) && self.codomain.same_structure(&other.codomain)
    }
}

impl PartialEq for FuzzyRelation {
    fn eq(&self, other: &Self) -> bool {
        self.same_shape(other) && self.grades == other.grades
    }
}

impl Eq for FuzzyRelation {}

impl fmt::Debug for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FuzzyRelation({} -> {})", self.domain.name(), self.codomain.name())?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// `(f ∘ g)(z, y) = sup { f(a, y) : g(z, a) = 1 }`, with an empty supremum
/// equal to 0. `g` relates `Z × X` and `f` relates `X × Y`.
pub fn compose(f: &FuzzyRelation, g: &FuzzyRelation) -> Result<FuzzyRelation, MapError> {
    if !g.codomain.same_structure(&f.domain) {
        return Err(MapError::ShapeMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            f.domain.name(),
            f.codomain.name(),
            g.domain.name(),
            g.codomain.name()
        )));
    }
    let m = f.codomain.order();
    let mut grades = Vec::with_capacity(g.domain.order() * m);
    for z in g.domain.elements() {
        let through: Vec<usize> = f.domain.elements().filter(|&a| g.get(z, a).is_one()).collect();
        for y in 0..m {
            grades.push(through.iter().map(|&a| f.get(a, y)).max().unwrap_or(Grade::ZERO));
        }
    }
    Ok(FuzzyRelation { domain: g.domain.clone(), codomain: f.codomain.clone(), grades })
}

/// A fuzzy relation with a unique grade-1 entry in every row.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzyMap {
    relation: FuzzyRelation,
    images: Vec<usize>,
}

impl fmt::Debug for FuzzyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FuzzyMap(skeleton {:?}) {:?}", self.images, self.relation)
    }
}

/// Validates `relation` as a fuzzy map.
pub fn make_fuzzy_map(relation: FuzzyRelation) -> Result<FuzzyMap, MapError> {
    FuzzyMap::new(relation)
}

impl FuzzyMap {
    pub fn new(relation: FuzzyRelation) -> Result<Self, MapError> {
        let mut images = Vec::with_capacity(relation.domain.order());
        for x in relation.domain.elements() {
            let mut units = relation.row(x).iter().enumerate().filter(|(_, g)| g.is_one()).map(|(y, _)| y);
            let y = units.next().ok_or(MapError::NoUnitEntry(x))?;
            if units.next().is_some() {
                return Err(MapError::MultipleUnitEntries(x));
            }
            images.push(y);
        }
        Ok(FuzzyMap { relation, images })
    }

    /// Crisp indicator of `images`: grade 1 at `(x, images[x])`, 0 elsewhere.
    pub fn crisp(domain: Arc<FiniteGroup>, codomain: Arc<FiniteGroup>, images: &[usize]) -> Self {
        assert_eq!(images.len(), domain.order(), "one image per domain element");
        let relation =
            FuzzyRelation::from_fn(domain, codomain, |x, y| if images[x] == y { Grade::ONE } else { Grade::ZERO });
        FuzzyMap { relation, images: images.to_vec() }
    }

    pub fn relation(&self) -> &FuzzyRelation {
        &self.relation
    }

    pub fn into_relation(self) -> FuzzyRelation {
        self.relation
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.relation.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.relation.codomain
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Grade {
        self.relation.get(x, y)
    }

    /// The unique `y` with `f(x, y) = 1`.
    #[inline]
    pub fn fuzzy_image(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Fuzzy images of every domain element.
    pub fn skeleton(&self) -> &[usize] {
        &self.images
    }

    pub fn is_one_one(&self) -> bool {
        let mut hit = vec![false; self.codomain().order()];
        self.images.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    pub fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.codomain().order()];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_one_one() && self.is_onto()
    }

    /// Fuzzy-image equality; grades below 1 are not compared.
    pub fn equiv(&self, other: &FuzzyMap) -> Result<bool, MapError> {
        if !self.relation.same_shape(&other.relation) {
            return Err(MapError::ShapeMismatch("equivalence needs equal domains and codomains".into()));
        }
        Ok(self.images == other.images)
    }

    /// The transpose, which is a fuzzy map exactly when `self` is bijective.
    pub fn inverse_map(&self) -> Result<FuzzyMap, MapError> {
        if !self.is_bijective() {
            return Err(MapError::NotBijective);
        }
        FuzzyMap::new(self.relation.transpose())
    }

    /// `self ∘ g`: apply `g` first. The result is again a fuzzy map.
    pub fn after(&self, g: &FuzzyMap) -> Result<FuzzyMap, MapError> {
        let relation = compose(&self.relation, &g.relation)?;
        let images = g.images.iter().map(|&a| self.images[a]).collect();
        Ok(FuzzyMap { relation, images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;
    use crate::subset::FuzzySubset;

    fn g(t: &str) -> Arc<FiniteGroup> {
        Arc::new(builtin_group(t).unwrap())
    }

    fn gr(s: &str) -> Grade {
        s.parse().unwrap()
    }

    fn identity(group: &Arc<FiniteGroup>) -> FuzzyMap {
        let id: Vec<usize> = group.elements().collect();
        FuzzyMap::crisp(group.clone(), group.clone(), &id)
    }

    fn z4_chain() -> FuzzySubset {
        FuzzySubset::new(g("cyclic(4)"), ["1", "1/4", "1/2", "1/4"].iter().map(|s| gr(s)).collect()).unwrap()
    }

    #[test]
    fn crisp_identity_is_a_map() {
        let z3 = g("cyclic(3)");
        let rel = FuzzyRelation::from_fn(z3.clone(), z3.clone(), |x, y| if x == y { Grade::ONE } else { Grade::ZERO });
        let f = make_fuzzy_map(rel).unwrap();
        assert_eq!(f.skeleton(), &[0, 1, 2]);
        assert!(f.is_one_one() && f.is_onto());
        assert_eq!(f.inverse_map().unwrap(), f);
    }

    #[test]
    fn unit_entry_errors() {
        let z2 = g("cyclic(2)");
        let two_units = FuzzyRelation::new(z2.clone(), z2.clone(), vec![vec![Grade::ONE, Grade::ZERO], vec![Grade::ONE, Grade::ONE]]).unwrap();
        assert_eq!(make_fuzzy_map(two_units), Err(MapError::MultipleUnitEntries(1)));
        let none = FuzzyRelation::new(z2.clone(), z2.clone(), vec![vec![gr("1/2"), gr("1/3")], vec![Grade::ONE, Grade::ZERO]]).unwrap();
        assert_eq!(make_fuzzy_map(none), Err(MapError::NoUnitEntry(0)));
        assert!(matches!(FuzzyRelation::new(z2.clone(), z2, vec![vec![Grade::ONE]]), Err(MapError::ShapeMismatch(_))));
    }

    #[test]
    fn identity_mu_matrix_is_a_map() {
        // entry (x, y) = mu(x^-1 y)
        let mu = z4_chain();
        let z4 = mu.group().clone();
        let rel = FuzzyRelation::from_fn(z4.clone(), z4.clone(), |x, y| mu.grade(z4.mul(z4.inverse(x), y)));
        let f = make_fuzzy_map(rel).unwrap();
        assert_eq!(f.skeleton(), &[0, 1, 2, 3]);
        assert_eq!(f.get(1, 3), gr("1/2"));
    }

    #[test]
    fn composition_with_identity_and_empty_sup() {
        let mu = z4_chain();
        let z4 = mu.group().clone();
        let f = FuzzyRelation::from_fn(z4.clone(), z4.clone(), |x, y| mu.grade(z4.mul(z4.inverse(x), y)));
        assert_eq!(compose(&f, identity(&z4).relation()).unwrap(), f);

        // row 2 of g has no unit entry, so the composed row is all zeros
        let g_rel = FuzzyRelation::from_fn(z4.clone(), z4.clone(), |z, a| {
            if z != 2 && z == a {
                Grade::ONE
            } else {
                gr("1/2")
            }
        });
        let c = compose(&f, &g_rel).unwrap();
        assert!(c.row(2).iter().all(Grade::is_zero));
        assert_eq!(c.row(1), f.row(1));

        let z3 = g("cyclic(3)");
        assert!(matches!(compose(&f, identity(&z3).relation()), Err(MapError::ShapeMismatch(_))));
    }

    #[test]
    fn bijectivity_predicates() {
        let s3 = g("symmetric(3)");
        let constant = FuzzyMap::crisp(s3.clone(), s3.clone(), &[0; 6]);
        assert!(!constant.is_one_one() && !constant.is_onto());
        assert_eq!(constant.inverse_map(), Err(MapError::NotBijective));
        let id = identity(&s3);
        assert!(id.is_one_one() && id.is_onto());
    }

    #[test]
    fn equivalence_ignores_sub_unit_grades() {
        let s3 = g("symmetric(3)");
        let id = identity(&s3);
        let rel = FuzzyRelation::from_fn(s3.clone(), s3.clone(), |x, y| if x == y { Grade::ONE } else { gr("1/3") });
        let other = FuzzyMap::new(rel).unwrap();
        assert!(id.equiv(&other).unwrap());
        assert_ne!(id, other);
        let moved = FuzzyMap::crisp(s3.clone(), s3.clone(), &[1, 0, 2, 3, 4, 5]);
        assert!(!id.equiv(&moved).unwrap());
        let z6 = g("cyclic(6)");
        assert!(id.equiv(&identity(&z6)).is_err());
    }

    #[test]
    fn after_matches_generic_compose() {
        let s3 = g("symmetric(3)");
        let a = FuzzyMap::crisp(s3.clone(), s3.clone(), &s3.conjugation(1));
        let b = FuzzyMap::crisp(s3.clone(), s3.clone(), &s3.conjugation(3));
        let ab = a.after(&b).unwrap();
        assert_eq!(ab.relation(), &compose(a.relation(), b.relation()).unwrap());
        let expected: Vec<usize> = b.skeleton().iter().map(|&x| a.fuzzy_image(x)).collect();
        assert_eq!(ab.skeleton(), expected.as_slice());
    }
}
