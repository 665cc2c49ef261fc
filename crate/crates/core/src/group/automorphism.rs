use std::collections::HashMap;

use super::morphism::{extend_generators, generating_set};
use super::{FiniteGroup, GroupMorphism};
use crate::perm;

/// All automorphisms of a group, sorted lexicographically by image array.
///
/// Index 0 is the identity map.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl AutomorphismGroup {
    fn from_maps(mut maps: Vec<Vec<usize>>) -> Self {
        maps.sort();
        maps.dedup();
        let index = maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        AutomorphismGroup { maps, index }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn map(&self, i: usize) -> &[usize] {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).copied()
    }

    /// Index of `maps[i] ∘ maps[j]` (apply `j` first).
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.index[&perm::after(&self.maps[i], &self.maps[j])]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&perm::inverse(&self.maps[i])]
    }

    pub fn order_of(&self, i: usize) -> usize {
        perm::order(&self.maps[i])
    }

    pub fn morphisms(&self) -> Vec<GroupMorphism> {
        self.maps.iter().cloned().map(GroupMorphism::from_map_unchecked).collect()
    }

    /// Full composition table, `table[i][j] = index(maps[i] ∘ maps[j])`.
    pub fn as_group(&self) -> FiniteGroup {
        let k = self.len();
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = self.compose(i, j) as u32;
            }
        }
        FiniteGroup::from_flat_unchecked(k, table)
    }
}

pub fn automorphism_group(g: &FiniteGroup) -> AutomorphismGroup {
    let n = g.order();
    if n == 1 {
        return AutomorphismGroup::from_maps(vec![vec![0]]);
    }
    let gens = generating_set(g);
    let inv: Vec<(usize, usize)> = g.elements().map(|x| (g.element_order(x), g.centralizer_size(x))).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&y| inv[y] == inv[s]).collect())
        .collect();
    let mut maps = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, &gens, &candidates, &mut images, &mut maps);
    AutomorphismGroup::from_maps(maps)
}

fn search(
    g: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let k = images.len();
    for &y in &candidates[k] {
        images.push(y);
        if let Some(map) = extend_generators(g, g, &gens[..=k], images, true) {
            if k + 1 == gens.len() {
                out.push(map);
            } else {
                search(g, gens, candidates, images, out);
            }
        }
        images.pop();
    }
}
