//! Center, conjugacy classes, subgroups and quotients.

use std::collections::BTreeSet;

use super::{ElementSubset, FiniteGroup};
use crate::error::GroupError;

/// A quotient group together with the canonical surjection onto it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `coset_of[x]` is the index of the coset containing `x`.
    pub coset_of: Vec<usize>,
    /// Cosets as element lists, ordered by smallest member.
    pub cosets: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// `{z : zx = xz for all x}`.
    pub fn center(&self) -> ElementSubset {
        ElementSubset::from_elements(
            self.order,
            self.elements().filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z))),
        )
    }

    /// Orbits of `x ↦ a⁻¹ x a`, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if assigned[x] {
                continue;
            }
            let class: BTreeSet<usize> = self.elements().map(|a| self.conjugate(a, x)).collect();
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// `class_of[x]` indexes into [`FiniteGroup::conjugacy_classes`].
    pub fn class_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order];
        for (c, class) in self.conjugacy_classes().iter().enumerate() {
            for &x in class {
                idx[x] = c;
            }
        }
        idx
    }

    /// Nonempty and closed under products and inverses.
    pub fn is_subgroup(&self, s: &ElementSubset) -> bool {
        s.group_order() == self.order
            && s.contains(self.identity)
            && s.iter().all(|a| s.contains(self.inverse(a)) && s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    pub fn is_normal_subgroup(&self, s: &ElementSubset) -> bool {
        self.is_subgroup(s) && s.iter().all(|x| self.elements().all(|a| s.contains(self.conjugate(a, x))))
    }

    /// The subgroup generated by `generators`.
    pub fn generated(&self, generators: &[usize]) -> ElementSubset {
        let mut s = ElementSubset::from_elements(self.order, [self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if s.insert(y) {
                    frontier.push(y);
                }
            }
        }
        s
    }

    /// The smallest normal subgroup containing `elements`.
    pub fn normal_closure(&self, elements: &[usize]) -> ElementSubset {
        let conjugates: BTreeSet<usize> =
            elements.iter().flat_map(|&x| self.elements().map(move |a| self.conjugate(a, x))).collect();
        self.generated(&conjugates.into_iter().collect::<Vec<_>>())
    }

    /// All normal subgroups, sorted by size and then by element list.
    pub fn normal_subgroups(&self) -> Vec<ElementSubset> {
        let closures: Vec<ElementSubset> = self.elements().map(|x| self.normal_closure(&[x])).collect();
        let mut found: Vec<ElementSubset> = vec![ElementSubset::from_elements(self.order, [self.identity])];
        let mut i = 0;
        while i < found.len() {
            for c in &closures {
                let join = self.generated(&found[i].union(c).elements());
                if !found.contains(&join) {
                    found.push(join);
                }
            }
            i += 1;
        }
        found.sort_by_key(|s| (s.len(), s.elements()));
        found
    }

    /// `G / N` with cosets ordered by smallest representative, so the
    /// coset of the identity has index 0 whenever the identity is element 0.
    pub fn quotient(&self, normal: &ElementSubset) -> Result<Quotient, GroupError> {
        if !self.is_normal_subgroup(normal) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in self.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = normal.iter().map(|k| self.mul(x, k)).collect();
            coset.sort_unstable();
            for &y in &coset {
                coset_of[y] = cosets.len();
            }
            cosets.push(coset);
        }
        let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
        let group = FiniteGroup::from_law(
            format!("quotient({},{})", self.name, normal.len()),
            cosets.len(),
            |a, b| coset_of[self.mul(reps[a], reps[b])],
        );
        Ok(Quotient { group, coset_of, cosets })
    }
}
