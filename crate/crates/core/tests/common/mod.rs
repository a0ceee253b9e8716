//! Naive oracles written directly from the definitions, sharing nothing with
//! the library beyond group tables and grade values.

#![allow(dead_code)]

use fuzzaut::{FiniteGroup, FuzzySubset, Grade};

/// Dense matrix `m[x][y]`.
pub type Matrix = Vec<Vec<Grade>>;

pub fn mul(g: &FiniteGroup, a: usize, b: usize) -> usize {
    g.rows()[a][b]
}

/// Inverse found by scanning the table for the identity.
pub fn inv(g: &FiniteGroup, a: usize) -> usize {
    let e = identity(g);
    (0..g.order()).find(|&b| g.rows()[a][b] == e).expect("inverse exists")
}

pub fn identity(g: &FiniteGroup) -> usize {
    let rows = g.rows();
    (0..g.order()).find(|&e| (0..g.order()).all(|x| rows[e][x] == x)).expect("identity exists")
}

pub fn center_size(g: &FiniteGroup) -> usize {
    let rows = g.rows();
    (0..g.order()).filter(|&z| (0..g.order()).all(|x| rows[z][x] == rows[x][z])).count()
}

/// `f(x1 x2, y) = max over y1 y2 = y of min(f(x1, y1), f(x2, y2))`, with the
/// supremum over all pairs rather than a single solved factor.
pub fn hom_holds(dom: &FiniteGroup, cod: &FiniteGroup, f: &Matrix) -> bool {
    let (n, m) = (dom.order(), cod.order());
    let (dr, cr) = (dom.rows(), cod.rows());
    for x1 in 0..n {
        for x2 in 0..n {
            for y in 0..m {
                let mut sup = Grade::ZERO;
                for y1 in 0..m {
                    for y2 in 0..m {
                        if cr[y1][y2] == y {
                            sup = sup.max(f[x1][y1].min(f[x2][y2]));
                        }
                    }
                }
                if f[dr[x1][x2]][y] != sup {
                    return false;
                }
            }
        }
    }
    true
}

/// `(f ∘ g)(z, y) = sup { f(a, y) : g(z, a) = 1 }`, 0 when empty.
pub fn compose(f: &Matrix, g: &Matrix) -> Matrix {
    g.iter()
        .map(|grow| {
            (0..f[0].len())
                .map(|y| {
                    (0..grow.len())
                        .filter(|&a| grow[a] == Grade::ONE)
                        .map(|a| f[a][y])
                        .fold(Grade::ZERO, Grade::max)
                })
                .collect()
        })
        .collect()
}

/// `μ(x⁻¹ g y g⁻¹)` evaluated with the scanning inverse.
pub fn induced(g: &FiniteGroup, mu: &FuzzySubset, label: usize) -> Matrix {
    let n = g.order();
    (0..n)
        .map(|x| (0..n).map(|y| mu.grade(mul(g, mul(g, mul(g, inv(g, x), label), y), inv(g, label)))).collect())
        .collect()
}

/// Indices of grade-1 entries in a row.
pub fn units(row: &[Grade]) -> Vec<usize> {
    (0..row.len()).filter(|&i| row[i] == Grade::ONE).collect()
}
