use super::{automorphism_group, AutomorphismGroup, FiniteGroup, Subgroup};
use crate::error::GroupError;

/// Largest holomorph we are willing to tabulate.
pub const HOLOMORPH_LIMIT: usize = 4096;

/// `Hol(A) = A ⋊ Aut(A)` with `(a,f)(b,g) = (a·f(b), f∘g)`.
///
/// The pair `(a, f)` has index `a * |Aut(A)| + f`.
#[derive(Clone, Debug)]
pub struct Holomorph {
    pub hol: FiniteGroup,
    pub aut: AutomorphismGroup,
    pub base_order: usize,
    pub translations: Subgroup,
}

impl Holomorph {
    pub fn pair_of(&self, x: usize) -> (usize, usize) {
        (x / self.aut.len(), x % self.aut.len())
    }

    pub fn index_of(&self, a: usize, f: usize) -> usize {
        a * self.aut.len() + f
    }

    /// Image of the point `b ∈ A` under the holomorph element `x`: `a·f(b)`.
    pub fn act(&self, base: &FiniteGroup, x: usize, b: usize) -> usize {
        let (a, f) = self.pair_of(x);
        base.mul(a, self.aut.map(f)[b])
    }
}

pub fn holomorph(a: &FiniteGroup) -> Result<Holomorph, GroupError> {
    let aut = automorphism_group(a);
    let (n, k) = (a.order(), aut.len());
    let size = n * k;
    if size > HOLOMORPH_LIMIT {
        return Err(GroupError::TooLarge { order: size, limit: HOLOMORPH_LIMIT });
    }
    let comp: Vec<usize> = (0..k * k).map(|i| aut.compose(i / k, i % k)).collect();
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        let (p, f) = (x / k, x % k);
        let fm = aut.map(f);
        for y in 0..size {
            let (q, g) = (y / k, y % k);
            table[x * size + y] = (a.mul(p, fm[q]) * k + comp[f * k + g]) as u32;
        }
    }
    let hol = FiniteGroup::from_flat_unchecked(size, table);
    let translations = Subgroup::from_sorted_unchecked((0..n).map(|p| p * k).collect());
    Ok(Holomorph { hol, aut, base_order: n, translations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;
    use crate::perm;

    #[test]
    fn hol_c3_is_s3() {
        let h = holomorph(&FiniteGroup::cyclic(3)).unwrap();
        assert_eq!(h.hol.order(), 6);
        let a = perm::parse_cycles("(123)", 3, "123").unwrap();
        let b = perm::parse_cycles("(12)", 3, "123").unwrap();
        let s3 = FiniteGroup::from_permutations(&[a, b]).0;
        assert!(are_isomorphic(&h.hol, &s3).is_some());
    }

    #[test]
    fn trivial_and_translation_regularity() {
        let h = holomorph(&FiniteGroup::trivial()).unwrap();
        assert_eq!(h.hol.order(), 1);

        let c2 = FiniteGroup::cyclic(2);
        let base = c2.direct_product(&c2).direct_product(&c2);
        let h = holomorph(&base).unwrap();
        assert_eq!(h.hol.order(), 1344);
        for g in 0..8 {
            for t in 0..8 {
                let hits = h.translations.elements().iter().filter(|&&x| h.act(&base, x, g) == t).count();
                assert_eq!(hits, 1);
            }
        }
    }
}
