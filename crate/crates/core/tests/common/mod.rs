#![allow(dead_code)]

use braceforge::enumeration::{self, LONG_RUN_ORDER_BOUND};
use braceforge::SkewBrace;

/// One representative per isomorphism class of skew braces of order `n`.
pub struct CensusBrace {
    pub order: usize,
    pub add: String,
    pub mul: String,
    pub brace: SkewBrace,
}

pub fn braces_of_order(n: usize) -> Vec<CensusBrace> {
    let (table, runs) = enumeration::census_details(n, LONG_RUN_ORDER_BOUND).expect("census");
    let mut out = Vec::new();
    for (a, run) in runs.into_iter().enumerate() {
        for o in run.orbits {
            out.push(CensusBrace {
                order: n,
                add: table.names[a].clone(),
                mul: table.names[o.mul_type].clone(),
                brace: o.representative,
            });
        }
    }
    out
}

pub fn braces_up_to(n: usize) -> Vec<CensusBrace> {
    (1..=n).flat_map(braces_of_order).collect()
}

/// Least `k > 0` with `x^k` central, for every `x`, combined by lcm.
pub fn central_exponent(b: &SkewBrace) -> usize {
    let g = b.add_group();
    let central: Vec<bool> = g.elements().map(|z| g.elements().all(|y| g.mul(z, y) == g.mul(y, z))).collect();
    g.elements().fold(1, |acc, x| {
        let mut p = x;
        let mut k = 1;
        while !central[p] {
            p = g.mul(p, x);
            k += 1;
        }
        braceforge::perm::lcm(acc, k)
    })
}
