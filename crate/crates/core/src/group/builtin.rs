//! Builtin groups with fixed, documented element orderings.
//!
//! | token | order | element `i` |
//! |---|---|---|
//! | `cyclic(n)`, `Zn` (n ≤ 16) | n | residue `i` under addition |
//! | `dihedral(n)`, `Dn` (n ≤ 8) | 2n | `r^(i/2) s^(i%2)` |
//! | `symmetric(n)`, `Sn` (n ≤ 4) | n! | `i`-th permutation in lexicographic one-line order; `(a*b)(k) = a(b(k))` |
//! | `quaternion8`, `Q8` | 8 | `1, -1, i, -i, j, -j, k, -k` |
//! | `klein4`, `V4` | 4 | bit pairs under xor: `e, a, b, ab` |
//! | `direct_product(A,B)` | \|A\|\|B\| | pair `(i / \|B\|, i % \|B\|)` |

use super::FiniteGroup;
use crate::error::GroupError;

const MAX_CYCLIC: usize = 16;
const MAX_DIHEDRAL: usize = 8;
const MAX_SYMMETRIC: usize = 4;

/// Resolves a builtin group token such as `symmetric(3)`, `Q8` or
/// `direct_product(cyclic(2),klein4)`.
pub fn builtin_group(token: &str) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownGroup(token.to_string());
    let t: String = token.chars().filter(|c| !c.is_whitespace()).collect();

    if let Some(args) = call_args(&t, "direct_product") {
        let (a, b) = split_top_level(args).ok_or_else(unknown)?;
        return Ok(builtin_group(a)?.direct_product(&builtin_group(b)?));
    }
    match t.as_str() {
        "quaternion8" | "Q8" => return Ok(quaternion8()),
        "klein4" | "V4" => return Ok(klein4()),
        _ => {}
    }
    let (family, n) = if let Some(arg) = call_args(&t, "cyclic") {
        ("cyclic", arg.parse::<usize>().map_err(|_| unknown())?)
    } else if let Some(arg) = call_args(&t, "dihedral") {
        ("dihedral", arg.parse().map_err(|_| unknown())?)
    } else if let Some(arg) = call_args(&t, "symmetric") {
        ("symmetric", arg.parse().map_err(|_| unknown())?)
    } else {
        let family = match t.chars().next() {
            Some('Z') | Some('C') => "cyclic",
            Some('D') => "dihedral",
            Some('S') => "symmetric",
            _ => return Err(unknown()),
        };
        (family, t[1..].parse().map_err(|_| unknown())?)
    };
    match family {
        "cyclic" if (1..=MAX_CYCLIC).contains(&n) => Ok(cyclic(n)),
        "dihedral" if (1..=MAX_DIHEDRAL).contains(&n) => Ok(dihedral(n)),
        "symmetric" if (1..=MAX_SYMMETRIC).contains(&n) => Ok(symmetric(n)),
        _ => Err(unknown()),
    }
}

/// Builtin groups of order at most `max_order`, in a fixed order: every
/// cyclic, dihedral and symmetric token in range, klein4, quaternion8, then
/// a fixed set of direct products.
pub fn builtin_catalog(max_order: usize) -> Vec<FiniteGroup> {
    let mut tokens: Vec<String> = (1..=MAX_CYCLIC).map(|n| format!("cyclic({n})")).collect();
    tokens.extend((1..=MAX_DIHEDRAL).map(|n| format!("dihedral({n})")));
    tokens.extend((1..=MAX_SYMMETRIC).map(|n| format!("symmetric({n})")));
    tokens.push("klein4".into());
    tokens.push("quaternion8".into());
    for p in [
        "direct_product(cyclic(2),cyclic(4))",
        "direct_product(klein4,cyclic(2))",
        "direct_product(cyclic(2),cyclic(6))",
        "direct_product(cyclic(3),cyclic(3))",
        "direct_product(symmetric(3),cyclic(2))",
        "direct_product(cyclic(2),cyclic(8))",
        "direct_product(cyclic(4),cyclic(4))",
        "direct_product(klein4,cyclic(4))",
        "direct_product(klein4,klein4)",
        "direct_product(dihedral(4),cyclic(2))",
        "direct_product(quaternion8,cyclic(2))",
    ] {
        tokens.push(p.into());
    }
    tokens
        .iter()
        .map(|t| builtin_group(t).expect("catalog tokens are valid"))
        .filter(|g| g.order() <= max_order)
        .collect()
}

fn call_args<'a>(t: &'a str, head: &str) -> Option<&'a str> {
    t.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

fn split_top_level(args: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&args[..i], &args[i + 1..])),
            _ => {}
        }
    }
    None
}

fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_law(format!("cyclic({n})"), n, |a, b| (a + b) % n)
}

fn dihedral(n: usize) -> FiniteGroup {
    // r^i s^j * r^k s^l = r^(i + (-1)^j k) s^(j + l)
    FiniteGroup::from_law(format!("dihedral({n})"), 2 * n, |x, y| {
        let (i, j) = (x / 2, x % 2);
        let (k, l) = (y / 2, y % 2);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        2 * rot + (j + l) % 2
    })
}

fn symmetric(n: usize) -> FiniteGroup {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
    FiniteGroup::from_law(format!("symmetric({n})"), perms.len(), |a, b| {
        let composed: Vec<usize> = (0..n).map(|k| perms[a][perms[b][k]]).collect();
        index(&composed)
    })
}

/// Parity of each element of `symmetric(n)` as an index into `cyclic(2)`:
/// the sign homomorphism in canonical element order.
pub fn symmetric_sign(n: usize) -> Vec<usize> {
    permutations(n)
        .iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            inversions % 2
        })
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn quaternion8() -> FiniteGroup {
    // unit u in {1, i, j, k} = {0, 1, 2, 3}; element index 2u + (negative as usize)
    // unit products as (sign, unit): row = left factor
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    FiniteGroup::from_law("quaternion8", 8, |x, y| {
        let (neg, u) = UNIT[x / 2][y / 2];
        let negative = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
        2 * u + negative as usize
    })
}

fn klein4() -> FiniteGroup {
    FiniteGroup::from_law("klein4", 4, |a, b| a ^ b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_aliases() {
        assert_eq!(builtin_group("Z4").unwrap(), builtin_group("cyclic(4)").unwrap());
        assert_eq!(builtin_group("S3").unwrap(), builtin_group("symmetric(3)").unwrap());
        assert_eq!(builtin_group("D4").unwrap().order(), 8);
        assert_eq!(builtin_group("Q8").unwrap().name(), "quaternion8");
        assert_eq!(builtin_group(" direct_product( Z2 , Z3 ) ").unwrap().order(), 6);
    }

    #[test]
    fn unknown_tokens() {
        for t in ["cyclic(0)", "cyclic(17)", "symmetric(5)", "dihedral(9)", "foo", "", "direct_product(Z2)"] {
            assert!(matches!(builtin_group(t), Err(GroupError::UnknownGroup(_))), "{t}");
        }
    }

    #[test]
    fn cyclic_one_is_trivial() {
        let g = builtin_group("cyclic(1)").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn symmetric3_is_nonabelian_with_identity_first() {
        let g = builtin_group("symmetric(3)").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        // exhaustive commutativity scan finds a failing pair
        let found = (0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a)));
        assert!(found);
    }

    #[test]
    fn quaternion_relations() {
        let q = builtin_group("quaternion8").unwrap();
        let (one, minus_one, i, j, k) = (0, 1, 2, 4, 6);
        assert_eq!(q.identity(), one);
        for u in [i, j, k] {
            assert_eq!(q.mul(u, u), minus_one);
        }
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, k), i);
        assert_eq!(q.mul(k, i), j);
        assert_eq!(q.mul(j, i), k + 1);
        assert_eq!(q.inverse(i), i + 1);
    }

    #[test]
    fn dihedral_relations() {
        let d = builtin_group("dihedral(4)").unwrap();
        let (r, s) = (2, 1);
        assert_eq!(d.element_order(r), 4);
        assert_eq!(d.element_order(s), 2);
        // s r s = r^-1
        assert_eq!(d.product(&[s, r, s]), d.inverse(r));
        assert_eq!(d.mul(r, s), 3);
    }

    #[test]
    fn catalog_respects_bound() {
        let cat = builtin_catalog(16);
        assert!(cat.iter().all(|g| g.order() <= 16));
        assert!(cat.iter().any(|g| g.name() == "quaternion8"));
        assert!(!cat.iter().any(|g| g.name() == "symmetric(4)"));
        assert!(builtin_catalog(24).iter().any(|g| g.name() == "symmetric(4)"));
    }
}
