//! Small named groups and the worked-example braces built from explicit data.

use crate::brace::SkewBrace;
use crate::group::FiniteGroup;
use crate::perm;

/// Permutation group on `1..=degree` from cycle-notation generators, with its elements.
pub fn perm_group(degree: usize, gens: &[&str]) -> (FiniteGroup, Vec<Vec<usize>>) {
    let symbols: String = "123456789abcdefghijklmnopqrstuvwxyz".chars().take(degree).collect();
    let gens: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| perm::parse_cycles(g, degree, &symbols).expect("generator in cycle notation"))
        .collect();
    FiniteGroup::from_permutations(&gens)
}

fn index_of(elems: &[Vec<usize>], cycles: &str, symbols: &str) -> usize {
    let p = perm::parse_cycles(cycles, elems[0].len(), symbols).expect("cycle notation");
    elems.iter().position(|e| *e == p).expect("element of the group")
}

pub fn s3() -> FiniteGroup {
    perm_group(3, &["(123)", "(12)"]).0
}

pub fn s3_with_elements() -> (FiniteGroup, Vec<Vec<usize>>) {
    perm_group(3, &["(123)", "(12)"])
}

pub fn a4_with_elements() -> (FiniteGroup, Vec<Vec<usize>>) {
    perm_group(4, &["(123)", "(12)(34)"])
}

/// Dihedral group of order `2m` with `r^i s^j` at index `i + m·j`.
pub fn dihedral(m: usize) -> FiniteGroup {
    let g = FiniteGroup::from_fn(2 * m, |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let e = if j == 0 { (i + k) % m } else { (i + m - k) % m };
        e + m * ((j + l) % 2)
    })
    .expect("dihedral group");
    let labels = (0..2 * m)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => format!("r^{i}"),
                (0, _) => "s".to_string(),
                (i, _) => format!("r^{i}s"),
            }
        })
        .collect();
    g.with_labels(labels)
}

/// Quaternion group in the order `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion8() -> FiniteGroup {
    // product of basis units 1, i, j, k as (sign, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let g = FiniteGroup::from_fn(8, |x, y| {
        let (u, s) = (x / 2, x % 2);
        let (v, t) = (y / 2, y % 2);
        let (sign, w) = UNIT[u][v];
        2 * w + (s + t + sign) % 2
    })
    .expect("quaternion group");
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
    g.with_labels(labels)
}

/// Transports the group structure of `source` to `carrier` through the bijection
/// `pi: source → carrier`: `x∘y = π(π⁻¹(x)π⁻¹(y))`.
pub fn transported(source: &FiniteGroup, pi: &[usize]) -> FiniteGroup {
    let inv = perm::inverse(pi);
    FiniteGroup::from_fn(source.order(), |x, y| pi[source.mul(inv[x], inv[y])]).expect("transported group")
}

/// Brace on `S3` whose `λ` is trivial on `A3` and conjugation by `(23)` on transpositions.
pub fn s3c6() -> SkewBrace {
    let (g, elems) = s3_with_elements();
    let t = index_of(&elems, "(23)", "123");
    let lambda: Vec<Vec<usize>> = (0..6)
        .map(|a| {
            if g.element_order(a) == 2 {
                (0..6).map(|b| g.mul(g.mul(t, b), t)).collect()
            } else {
                (0..6).collect()
            }
        })
        .collect();
    SkewBrace::from_lambda(&g, &lambda).expect("s3c6 data")
}

/// The bijection `Q8 → D8` of the worked example, as indices of [`quaternion8`]
/// and [`dihedral`]`(4)`.
pub const D8Q8_PI: [usize; 8] = [0, 2, 4, 6, 3, 1, 5, 7];

/// Brace with additive group `D8` and multiplication transported from `Q8`.
pub fn d8q8() -> SkewBrace {
    let d8 = dihedral(4);
    let mul = transported(&quaternion8(), &D8Q8_PI);
    SkewBrace::new(d8, mul).expect("d8q8 data")
}

const A4_SYMBOLS: &str = "123456789abc";
const A4_G_GENS: [&str; 2] = ["(1263)(48ba)(57c9)", "(145)(278)(39a)(6bc)"];
const A4_PI: [(&str, &str); 12] = [
    ("()", "()"),
    ("(16)(23)(4b)(5c)(79)(8a)", "(14)(23)"),
    ("(145)(278)(39a)(6bc)", "(234)"),
    ("(1b564c)(29837a)", "(143)"),
    ("(154)(287)(3a9)(6cb)", "(243)"),
    ("(1c465b)(2a7389)", "(142)"),
    ("(1362)(4ab8)(59c7)", "(13)(24)"),
    ("(1263)(48ba)(57c9)", "(12)(34)"),
    ("(1a68)(253c)(49b7)", "(132)"),
    ("(186a)(2c35)(47b9)", "(124)"),
    ("(1967)(243b)(5ac8)", "(134)"),
    ("(1769)(2b34)(58ca)", "(123)"),
];

/// The group `G ≅ C3 ⋊ C4` on 12 points used for the simple brace, with its elements.
pub fn a4_brace_source() -> (FiniteGroup, Vec<Vec<usize>>) {
    perm_group(12, &A4_G_GENS)
}

/// Brace with additive group `A4` and multiplication transported from `C3 ⋊ C4`.
pub fn a4_brace() -> SkewBrace {
    let (a4, a4_elems) = a4_with_elements();
    let (g, g_elems) = a4_brace_source();
    let mut pi = vec![usize::MAX; 12];
    for (src, dst) in A4_PI {
        pi[index_of(&g_elems, src, A4_SYMBOLS)] = index_of(&a4_elems, dst, "1234");
    }
    let mul = transported(&g, &pi);
    SkewBrace::new(a4, mul).expect("A4 brace data")
}

/// Carrier index of an element of the A4 brace given in cycle notation on `1..4`.
pub fn a4_element(cycles: &str) -> usize {
    index_of(&a4_with_elements().1, cycles, "1234")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    #[test]
    fn named_groups() {
        let q8 = quaternion8();
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 4).count(), 6);
        let d8 = dihedral(4);
        assert_eq!(d8.element_orders().iter().filter(|&&o| o == 2).count(), 5);
        let (g, _) = a4_brace_source();
        assert_eq!(g.order(), 12);
        assert!(are_isomorphic(&g, &a4_with_elements().0).is_none());
    }

    #[test]
    fn worked_examples_verify() {
        let b = s3c6();
        assert_eq!(b.order(), 6);
        assert!(b.mul_group().is_abelian());
        let b = d8q8();
        assert!(are_isomorphic(b.mul_group(), &quaternion8()).is_some());
        let b = a4_brace();
        assert_eq!(b.order(), 12);
    }
}
