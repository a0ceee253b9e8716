//! Finite groups given by Cayley tables over dense indices `0..n`.
//!
//! Everything is table driven: an element is a `usize`, products are table
//! lookups, and every derived structure (center, classes, quotients,
//! automorphisms) is computed by exhaustive scans.

mod automorphism;
mod builtin;
mod structure;

use std::fmt;

pub use automorphism::{is_crisp_homomorphism, is_group_isomorphism, AUTOMORPHISM_SEARCH_LIMIT};
pub use builtin::{builtin_catalog, builtin_group, symmetric_sign};
pub use structure::Quotient;

use crate::error::GroupError;

/// A validated finite group.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    /// Row-major `order * order` table, `table[a * order + b] = a * b`.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

/// Validates a Cayley table and returns the group it defines.
pub fn make_group(rows: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_table(rows)
}

impl FiniteGroup {
    /// Validates `rows` as a Cayley table.
    ///
    /// Checks run in a fixed order and report the first violation found:
    /// shape and index range, associativity, identity, inverses, and
    /// finally the Latin square property.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, cells) in rows.iter().enumerate() {
            if cells.len() != n {
                return Err(GroupError::NotSquare { row, len: cells.len(), expected: n });
            }
            for (col, &value) in cells.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::IndexOutOfRange { row, col, value, order: n });
                }
            }
            table.extend_from_slice(cells);
        }
        let at = |a: usize, b: usize| table[a * n + b];

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse { element: a })?;
            inverses.push(inv);
        }

        for index in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for other in 0..n {
                let r = at(index, other);
                if std::mem::replace(&mut seen_row[r], true) {
                    return Err(GroupError::NotLatinSquare { line: "row", index, value: r });
                }
                let c = at(other, index);
                if std::mem::replace(&mut seen_col[c], true) {
                    return Err(GroupError::NotLatinSquare { line: "column", index, value: c });
                }
            }
        }

        Ok(FiniteGroup { name: format!("table({n})"), order: n, table, identity, inverses })
    }

    /// Builds a group from a product closure the caller already knows to be
    /// a group law. Validation still runs; a failure is a construction bug.
    pub(crate) fn from_law(name: impl Into<String>, n: usize, law: impl Fn(usize, usize) -> usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| law(a, b)).collect()).collect();
        let name = name.into();
        match FiniteGroup::from_table(rows) {
            Ok(g) => g.with_name(name),
            Err(e) => panic!("builtin law for {name} is not a group: {e}"),
        }
    }

    /// Same Cayley table, ignoring names.
    pub fn same_structure(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other) || (self.order == other.order && self.table == other.table)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Left-to-right product of a word.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    /// The permutation `x ↦ g⁻¹ x g`.
    pub fn conjugation(&self, g: usize) -> Vec<usize> {
        self.elements().map(|x| self.conjugate(g, x)).collect()
    }

    /// The opposite group: same elements, `a ⋆ b = b a`.
    pub fn opposite(&self, name: impl Into<String>) -> FiniteGroup {
        FiniteGroup::from_law(name, self.order, |a, b| self.mul(b, a))
    }

    /// Cartesian product with element `(a, b)` at index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order;
        FiniteGroup::from_law(
            format!("direct_product({},{})", self.name, other.name),
            self.order * m,
            |x, y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m),
        )
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// A crisp subset of a group's elements, stored as a membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    mask: Vec<bool>,
}

impl ElementSubset {
    pub fn empty(n: usize) -> Self {
        ElementSubset { mask: vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        ElementSubset { mask: vec![true; n] }
    }

    /// Panics if an element is outside `0..n`.
    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ElementSubset::empty(n);
        for x in elements {
            assert!(x < n, "element {x} outside 0..{n}");
            s.mask[x] = true;
        }
        s
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        ElementSubset { mask }
    }

    pub fn group_order(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, x: usize) -> bool {
        !std::mem::replace(&mut self.mask[x], true)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset { mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a || *b).collect() }
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
