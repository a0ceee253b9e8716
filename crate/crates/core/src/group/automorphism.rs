//! Crisp homomorphisms, isomorphisms and the automorphism group.

use super::{ElementSubset, FiniteGroup};
use crate::error::GroupError;

/// Largest order for which [`FiniteGroup::crisp_automorphisms`] searches.
pub const AUTOMORPHISM_SEARCH_LIMIT: usize = 24;

/// First pair `(a, b)` with `map[ab] != map[a] map[b]`, or `None` when `map`
/// is a homomorphism `domain → codomain`. Maps of the wrong length or with
/// out-of-range images report `(0, 0)`.
pub fn is_crisp_homomorphism(domain: &FiniteGroup, codomain: &FiniteGroup, map: &[usize]) -> Option<(usize, usize)> {
    if map.len() != domain.order() || map.iter().any(|&y| y >= codomain.order()) {
        return Some((0, 0));
    }
    for a in domain.elements() {
        for b in domain.elements() {
            if map[domain.mul(a, b)] != codomain.mul(map[a], map[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// True iff `map` is a bijective homomorphism `g → h`.
pub fn is_group_isomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) -> bool {
    if g.order() != h.order() || is_crisp_homomorphism(g, h, map).is_some() {
        return false;
    }
    let mut hit = vec![false; h.order()];
    map.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
}

impl FiniteGroup {
    /// A generating set chosen greedily by smallest index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElementSubset::from_elements(self.order(), [self.identity()]);
        for x in self.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// Every automorphism as an image array, sorted lexicographically.
    ///
    /// Backtracks over generator images of matching element order and
    /// extends each assignment along the Cayley graph, rejecting it on the
    /// first inconsistency.
    pub fn crisp_automorphisms(&self) -> Result<Vec<Vec<usize>>, GroupError> {
        if self.order() > AUTOMORPHISM_SEARCH_LIMIT {
            return Err(GroupError::GroupTooLarge { order: self.order(), limit: AUTOMORPHISM_SEARCH_LIMIT });
        }
        let gens = self.generators();
        let orders: Vec<usize> = self.elements().map(|x| self.element_order(x)).collect();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| self.elements().filter(|&y| orders[y] == orders[g]).collect())
            .collect();

        let mut found = Vec::new();
        let mut images = Vec::with_capacity(gens.len());
        self.search_images(&gens, &candidates, &mut images, &mut found);
        found.sort();
        Ok(found)
    }

    fn search_images(
        &self,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if images.len() == gens.len() {
            if let Some(map) = self.extend_from_generators(gens, images) {
                found.push(map);
            }
            return;
        }
        for &y in &candidates[images.len()] {
            if images.contains(&y) {
                continue;
            }
            images.push(y);
            self.search_images(gens, candidates, images, found);
            images.pop();
        }
    }

    fn extend_from_generators(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut map = vec![UNSET; self.order()];
        map[self.identity()] = self.identity();
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let target = self.mul(map[x], img);
                if map[y] == UNSET {
                    map[y] = target;
                    frontier.push(y);
                } else if map[y] != target {
                    return None;
                }
            }
        }
        is_group_isomorphism(self, self, &map).then_some(map)
    }
}
