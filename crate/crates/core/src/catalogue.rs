//! Complete lists of groups of each order up to 31, in a fixed order with fixed
//! names. Within an order the groups follow the usual small-group numbering.
//!
//! Setting `BRACEFORGE_CATALOGUE` to a directory makes [`groups_of_order`] read
//! `<dir>/<n>.txt` (a group collection, see [`crate::io::parse_group_collection`])
//! instead, when that file exists.

use crate::error::EnumerationError;
use crate::gallery;
use crate::group::{FiniteGroup, Subgroup};
use crate::io;

/// Largest order with a built-in catalogue.
pub const MAX_ORDER: usize = 31;

pub const CATALOGUE_ENV: &str = "BRACEFORGE_CATALOGUE";

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub name: String,
    pub group: FiniteGroup,
}

fn c(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

fn prod(gs: &[FiniteGroup]) -> FiniteGroup {
    gs.iter().skip(1).fold(gs[0].clone(), |acc, g| acc.direct_product(g))
}

/// `C_n ⋊ C_m` where the generator of `C_m` acts by `x ↦ u·x`.
fn semi_cyclic(n: usize, m: usize, u: usize) -> FiniteGroup {
    let action: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let ui = (0..i).fold(1, |acc, _| acc * u % n);
            (0..n).map(|x| x * ui % n).collect()
        })
        .collect();
    FiniteGroup::semidirect(&c(n), &c(m), &action).expect("u^m = 1 mod n")
}

fn dihedral(n: usize) -> FiniteGroup {
    semi_cyclic(n, 2, n - 1)
}

/// Dicyclic group of order `4m`.
fn dicyclic(m: usize) -> FiniteGroup {
    let n = 2 * m;
    let inversion: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
    FiniteGroup::cyclic_extension(&c(n), &inversion, 2, m).expect("dicyclic data")
}

fn symmetric3() -> FiniteGroup {
    dihedral(3)
}

fn a4() -> FiniteGroup {
    gallery::a4_with_elements().0
}

fn s4() -> FiniteGroup {
    gallery::perm_group(4, &["(1234)", "(12)"]).0
}

fn quaternion() -> FiniteGroup {
    dicyclic(2)
}

/// `Q8 ⋊ C3` with the generator cycling `i → j → k`.
fn sl23() -> FiniteGroup {
    let q8 = gallery::quaternion8();
    let rot = |x: usize| {
        let (u, s) = (x / 2, x % 2);
        let v = if u == 0 { 0 } else { u % 3 + 1 };
        2 * v + s
    };
    let r1: Vec<usize> = (0..8).map(rot).collect();
    let r2: Vec<usize> = (0..8).map(|x| rot(rot(x))).collect();
    FiniteGroup::semidirect(&q8, &c(3), &[(0..8).collect(), r1, r2]).expect("SL(2,3) data")
}

/// `N ⋊ C2` where the involution acts by the given automorphism of `N`.
fn by_involution(n: &FiniteGroup, f: Vec<usize>) -> FiniteGroup {
    FiniteGroup::semidirect(n, &c(2), &[(0..n.order()).collect(), f]).expect("involutive automorphism")
}

/// `N ⋊ C3` where the generator acts by the order-3 automorphism `f`.
fn by_order_three(n: &FiniteGroup, f: Vec<usize>) -> FiniteGroup {
    let f2: Vec<usize> = (0..n.order()).map(|x| f[f[x]]).collect();
    FiniteGroup::semidirect(n, &c(3), &[(0..n.order()).collect(), f, f2]).expect("order-3 automorphism")
}

fn built_in(n: usize) -> Vec<(&'static str, FiniteGroup)> {
    match n {
        1 => vec![("C1", FiniteGroup::trivial())],
        4 => vec![("C4", c(4)), ("C2^2", prod(&[c(2), c(2)]))],
        6 => vec![("S3", symmetric3()), ("C6", c(6))],
        8 => vec![
            ("C8", c(8)),
            ("C4xC2", prod(&[c(4), c(2)])),
            ("C4:C2", dihedral(4)),
            ("Q8", quaternion()),
            ("C2^3", prod(&[c(2), c(2), c(2)])),
        ],
        9 => vec![("C9", c(9)), ("C3^2", prod(&[c(3), c(3)]))],
        10 => vec![("D10", dihedral(5)), ("C10", c(10))],
        12 => vec![
            ("C3:C4", semi_cyclic(3, 4, 2)),
            ("C12", c(12)),
            ("A4", a4()),
            ("C6:C2", dihedral(6)),
            ("C6xC2", prod(&[c(6), c(2)])),
        ],
        14 => vec![("D14", dihedral(7)), ("C14", c(14))],
        16 => {
            // C4 × C2 with a at index 2x + y for a^x b^y
            let c4c2 = prod(&[c(4), c(2)]);
            let ab = |x: usize, y: usize| 2 * (x % 4) + y % 2;
            // a ↦ ab, b ↦ b
            let f3: Vec<usize> = (0..8).map(|p| ab(p / 2, p % 2 + p / 2)).collect();
            // a ↦ a, b ↦ a²b
            let f13: Vec<usize> = (0..8).map(|p| ab(p / 2 + 2 * (p % 2), p % 2)).collect();
            vec![
                ("C16", c(16)),
                ("C4^2", prod(&[c(4), c(4)])),
                ("(C4xC2):C2", by_involution(&c4c2, f3)),
                ("C4:C4", semi_cyclic(4, 4, 3)),
                ("C8xC2", prod(&[c(8), c(2)])),
                ("C8:C2", semi_cyclic(8, 2, 5)),
                ("D16", dihedral(8)),
                ("QD16", semi_cyclic(8, 2, 3)),
                ("Q16", dicyclic(4)),
                ("C4xC2^2", prod(&[c(4), c(2), c(2)])),
                ("C2xD8", prod(&[c(2), dihedral(4)])),
                ("C2xQ8", prod(&[c(2), quaternion()])),
                ("C4oD8", by_involution(&c4c2, f13)),
                ("C2^4", prod(&[c(2), c(2), c(2), c(2)])),
            ]
        }
        18 => {
            let c3c3 = prod(&[c(3), c(3)]);
            let inv: Vec<usize> = (0..9).map(|p| c3c3.inv(p)).collect();
            vec![
                ("D18", dihedral(9)),
                ("C18", c(18)),
                ("C3xS3", prod(&[c(3), symmetric3()])),
                ("C3^2:C2", by_involution(&c3c3, inv)),
                ("C6xC3", prod(&[c(6), c(3)])),
            ]
        }
        20 => vec![
            ("C5:C4", dicyclic(5)),
            ("C20", c(20)),
            ("F20", semi_cyclic(5, 4, 2)),
            ("D20", dihedral(10)),
            ("C10xC2", prod(&[c(10), c(2)])),
        ],
        21 => vec![("C7:C3", semi_cyclic(7, 3, 2)), ("C21", c(21))],
        22 => vec![("D22", dihedral(11)), ("C22", c(22))],
        24 => {
            let d8 = dihedral(4);
            // D8 → C2 with kernel {1, r², s, r²s}; r^i s^j has index 2i + j
            let action: Vec<Vec<usize>> = (0..8).map(|h| if (h / 2) % 2 == 1 { vec![0, 2, 1] } else { vec![0, 1, 2] }).collect();
            let c3d8 = FiniteGroup::semidirect(&c(3), &d8, &action).expect("C3:D8 data");
            vec![
                ("C3:C8", semi_cyclic(3, 8, 2)),
                ("C24", c(24)),
                ("SL(2,3)", sl23()),
                ("C3:Q8", dicyclic(6)),
                ("C4xS3", prod(&[c(4), symmetric3()])),
                ("D24", dihedral(12)),
                ("C2x(C3:C4)", prod(&[c(2), semi_cyclic(3, 4, 2)])),
                ("C3:D8", c3d8),
                ("C12xC2", prod(&[c(12), c(2)])),
                ("C3xD8", prod(&[c(3), dihedral(4)])),
                ("C3xQ8", prod(&[c(3), quaternion()])),
                ("S4", s4()),
                ("C2xA4", prod(&[c(2), a4()])),
                ("C2^2xS3", prod(&[c(2), c(2), symmetric3()])),
                ("C6xC2^2", prod(&[c(6), c(2), c(2)])),
            ]
        }
        25 => vec![("C25", c(25)), ("C5^2", prod(&[c(5), c(5)]))],
        26 => vec![("D26", dihedral(13)), ("C26", c(26))],
        27 => {
            let c3c3 = prod(&[c(3), c(3)]);
            // (x, y) ↦ (x + y, y)
            let shear: Vec<usize> = (0..9).map(|p| 3 * ((p / 3 + p % 3) % 3) + p % 3).collect();
            vec![
                ("C27", c(27)),
                ("C9xC3", prod(&[c(9), c(3)])),
                ("C3^2:C3", by_order_three(&c3c3, shear)),
                ("C9:C3", semi_cyclic(9, 3, 4)),
                ("C3^3", prod(&[c(3), c(3), c(3)])),
            ]
        }
        28 => vec![("C7:C4", dicyclic(7)), ("C28", c(28)), ("D28", dihedral(14)), ("C14xC2", prod(&[c(14), c(2)]))],
        30 => vec![
            ("C5xS3", prod(&[c(5), symmetric3()])),
            ("C3xD10", prod(&[c(3), dihedral(5)])),
            ("D30", dihedral(15)),
            ("C30", c(30)),
        ],
        // remaining orders up to 31 admit only the cyclic group
        2 | 3 | 5 | 7 | 11 | 13 | 15 | 17 | 19 | 23 | 29 | 31 => vec![("", c(n))],
        _ => Vec::new(),
    }
}

fn from_env(n: usize) -> Result<Option<Vec<CatalogueEntry>>, EnumerationError> {
    let Some(dir) = std::env::var_os(CATALOGUE_ENV) else { return Ok(None) };
    let path = std::path::Path::new(&dir).join(format!("{n}.txt"));
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path).map_err(|e| EnumerationError::BadCatalogue { order: n, msg: format!("{}: {e}", path.display()) })?;
    let groups = io::parse_group_collection(&text).map_err(|e| EnumerationError::BadCatalogue { order: n, msg: format!("{}: {e}", path.display()) })?;
    if let Some((name, g)) = groups.iter().find(|(_, g)| g.order() != n) {
        return Err(EnumerationError::BadCatalogue { order: n, msg: format!("{name} has order {}", g.order()) });
    }
    Ok(Some(groups.into_iter().map(|(name, group)| CatalogueEntry { name, group }).collect()))
}

/// All groups of order `n`, one per isomorphism class.
pub fn groups_of_order(n: usize) -> Result<Vec<CatalogueEntry>, EnumerationError> {
    if let Some(entries) = from_env(n)? {
        return Ok(entries);
    }
    let list = built_in(n);
    if list.is_empty() {
        return Err(EnumerationError::CatalogueMissing(n));
    }
    Ok(list
        .into_iter()
        .map(|(name, group)| CatalogueEntry { name: if name.is_empty() { format!("C{n}") } else { name.to_string() }, group })
        .collect())
}

/// Position of the catalogue group isomorphic to `g`.
pub fn identify(entries: &[CatalogueEntry], g: &FiniteGroup) -> Option<usize> {
    let fp = crate::group::fingerprint(g);
    let candidates: Vec<usize> = (0..entries.len()).filter(|&i| crate::group::fingerprint(&entries[i].group) == fp).collect();
    if candidates.len() == 1 {
        return Some(candidates[0]);
    }
    candidates.into_iter().find(|&i| crate::group::are_isomorphic(&entries[i].group, g).is_some())
}

/// Group by name: any catalogue name, `C<n>`, `S4`, `A5`, `PSL27`, or a product `GxH`
/// of such names.
pub fn named_group(name: &str) -> Option<FiniteGroup> {
    let name = name.trim();
    let perms = |degree: usize, gens: &[&str]| gallery::perm_group(degree, gens).0;
    match name {
        "S4" => return Some(perms(4, &["(1234)", "(12)"])),
        "A5" => return Some(perms(5, &["(12345)", "(123)"])),
        "S5" => return Some(perms(5, &["(12345)", "(12)"])),
        "PSL27" | "PSL(2,7)" => return Some(psl27()),
        _ => {}
    }
    if let Some(n) = name.strip_prefix('C').and_then(|r| r.parse::<usize>().ok()) {
        if n > 0 {
            return Some(c(n));
        }
    }
    for n in 1..=MAX_ORDER {
        if let Some(e) = built_in(n).into_iter().find(|(e, _)| *e == name) {
            return Some(e.1);
        }
    }
    for (i, _) in name.match_indices('x') {
        if let (Some(a), Some(b)) = (named_group(&name[..i]), named_group(&name[i + 1..])) {
            return Some(a.direct_product(&b));
        }
    }
    None
}

/// `PSL(2,7)` acting on the projective line over `F_7`, with `∞` as point 7.
fn psl27() -> FiniteGroup {
    let inf = 7;
    let shift: Vec<usize> = (0..8).map(|x| if x == inf { inf } else { (x + 1) % 7 }).collect();
    let inv = |x: usize| (1..7).find(|&y| x * y % 7 == 1).unwrap();
    let flip: Vec<usize> = (0..8)
        .map(|x| match x {
            7 => 0,
            0 => inf,
            _ => (7 - inv(x)) % 7,
        })
        .collect();
    FiniteGroup::from_permutations(&[shift, flip]).0
}

/// Subgroups of `g` isomorphic to `target`, found among subgroups generated by at most
/// two elements.
pub fn two_generated_subgroups_isomorphic_to(g: &FiniteGroup, target: &FiniteGroup) -> Vec<Subgroup> {
    let k = target.order();
    if g.order() % k != 0 {
        return Vec::new();
    }
    let orders = g.element_orders();
    let allowed: Vec<usize> = g.elements().filter(|&x| k % orders[x] == 0).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (i, &x) in allowed.iter().enumerate() {
        for &y in &allowed[i..] {
            let h = Subgroup::generated(g, &[x, y]);
            if h.order() != k || !seen.insert(h.elements().to_vec()) {
                continue;
            }
            if crate::group::are_isomorphic(&h.as_group(g).0, target).is_some() {
                out.push(h);
            }
        }
    }
    out
}
