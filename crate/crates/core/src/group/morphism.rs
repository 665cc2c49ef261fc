use super::{FiniteGroup, Subgroup};
use crate::error::GroupError;

/// A homomorphism given by its image array. Source and target are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMorphism {
    map: Vec<usize>,
}

impl GroupMorphism {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::Invalid(format!(
                "map has length {}, source has order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.order()) {
            return Err(GroupError::EntryOutOfRange { row: 0, col: 0, value: v });
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(GroupError::NotHomomorphism(x, y));
                }
            }
        }
        Ok(GroupMorphism { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        GroupMorphism { map }
    }

    pub fn identity(n: usize) -> Self {
        GroupMorphism { map: (0..n).collect() }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &GroupMorphism) -> GroupMorphism {
        GroupMorphism { map: other.map.iter().map(|&x| self.map[x]).collect() }
    }

    pub fn is_injective(&self) -> bool {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v.len() == self.map.len()
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked((0..self.map.len()).filter(|&x| self.map[x] == 0).collect())
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_unsorted_unchecked(self.map.clone())
    }
}

/// Isomorphism invariants used to screen candidate pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    /// Sorted multiset of (element order, centralizer size).
    pub profile: Vec<(usize, usize)>,
    pub center: usize,
    pub derived: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut profile: Vec<(usize, usize)> = element_invariants(g);
    profile.sort_unstable();
    Fingerprint {
        order: g.order(),
        profile,
        center: g.center().order(),
        derived: g.derived_subgroup().order(),
    }
}

fn element_invariants(g: &FiniteGroup) -> Vec<(usize, usize)> {
    g.elements().map(|x| (g.element_order(x), g.centralizer_size(x))).collect()
}

/// Greedy small generating set: repeatedly adds the element that enlarges the
/// generated subgroup most, preferring high order and low index on ties.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let orders = g.element_orders();
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial();
    while current.order() < g.order() {
        let mut best: Option<(usize, usize, usize)> = None;
        for x in g.elements() {
            if current.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x);
            let size = Subgroup::generated(g, &trial).order();
            let key = (size, orders[x]);
            if best.is_none_or(|(s, o, _)| key > (s, o)) {
                best = Some((size, orders[x], x));
            }
            if size == g.order() && orders[x] == g.order() {
                break;
            }
        }
        let x = best.unwrap().2;
        gens.push(x);
        current = Subgroup::generated(g, &gens);
    }
    gens
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism on `⟨gens⟩`.
///
/// Entries outside `⟨gens⟩` are `usize::MAX`. Returns `None` when the
/// assignment is inconsistent, or not injective when `injective` is set.
pub fn extend_generators(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    injective: bool,
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = if injective { vec![false; h.order()] } else { Vec::new() };
    map[0] = 0;
    if injective {
        used[0] = true;
    }
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let v = h.mul(map[x], images[k]);
            if map[y] == usize::MAX {
                if injective {
                    if used[v] {
                        return None;
                    }
                    used[v] = true;
                }
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

/// Some isomorphism `g → h`, or `None`.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupMorphism> {
    if g.order() != h.order() {
        return None;
    }
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    let gens = generating_set(g);
    let ig = element_invariants(g);
    let ih = element_invariants(h);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| h.elements().filter(|&y| ih[y] == ig[s]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search_iso(g, h, &gens, &candidates, &mut images).map(GroupMorphism::from_map_unchecked)
}

fn search_iso(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        let map = extend_generators(g, h, gens, images, true)?;
        return Some(map);
    }
    for &y in &candidates[k] {
        images.push(y);
        if extend_generators(g, h, &gens[..=k], images, true).is_some() {
            if let Some(m) = search_iso(g, h, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

/// All homomorphisms `g → h`, sorted lexicographically by image array.
pub fn homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<GroupMorphism> {
    let gens = generating_set(g);
    let go = g.element_orders();
    let ho = h.element_orders();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| h.elements().filter(|&y| go[s] % ho[y] == 0).collect())
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::new();
    collect_homs(g, h, &gens, &candidates, &mut images, &mut out);
    out.sort();
    out
}

fn collect_homs(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    out: &mut Vec<GroupMorphism>,
) {
    let k = images.len();
    if k == gens.len() {
        if let Some(map) = extend_generators(g, h, gens, images, false) {
            out.push(GroupMorphism { map });
        }
        return;
    }
    for &y in &candidates[k] {
        images.push(y);
        if extend_generators(g, h, &gens[..=k], images, false).is_some() {
            collect_homs(g, h, gens, candidates, images, out);
        }
        images.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    fn s3() -> FiniteGroup {
        let a = perm::parse_cycles("(123)", 3, "123").unwrap();
        let b = perm::parse_cycles("(12)", 3, "123").unwrap();
        FiniteGroup::from_permutations(&[a, b]).0
    }

    #[test]
    fn crt_isomorphism() {
        let c6 = FiniteGroup::cyclic(6);
        let c2c3 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3));
        let f = are_isomorphic(&c6, &c2c3).unwrap();
        GroupMorphism::new(&c6, &c2c3, f.map().to_vec()).unwrap();
        assert!(are_isomorphic(&c6, &s3()).is_none());
    }

    #[test]
    fn dihedral_vs_quaternion() {
        let c4 = FiniteGroup::cyclic(4);
        let inv: Vec<usize> = (0..4).map(|x| c4.inv(x)).collect();
        let q8 = FiniteGroup::cyclic_extension(&c4, &inv, 2, 2).unwrap();
        let d8 = FiniteGroup::cyclic_extension(&c4, &inv, 2, 0).unwrap();
        let count = |g: &FiniteGroup| g.element_orders().iter().filter(|&&o| o == 2).count();
        assert_eq!((count(&q8), count(&d8)), (1, 5));
        assert!(are_isomorphic(&q8, &d8).is_none());
    }

    #[test]
    fn homomorphisms_c4_to_c2() {
        let homs = homomorphisms(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2));
        assert_eq!(homs.len(), 2);
        assert_eq!(homs[1].kernel().elements(), &[0, 2]);
        let homs = homomorphisms(&s3(), &FiniteGroup::cyclic(3));
        assert_eq!(homs.len(), 1);
    }

    #[test]
    fn generating_set_generates() {
        let g = s3();
        let gens = generating_set(&g);
        assert_eq!(gens.len(), 2);
        assert_eq!(Subgroup::generated(&g, &gens).order(), 6);
        assert_eq!(generating_set(&FiniteGroup::cyclic(9)).len(), 1);
    }
}
