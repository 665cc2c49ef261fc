use std::collections::BTreeSet;

use super::{FiniteGroup, GroupMorphism};
use crate::error::GroupError;

/// A subgroup, stored as the strictly increasing list of its element indices.
///
/// The parent group is not referenced; operations take it as an argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_sorted_unchecked(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub(crate) fn from_unsorted_unchecked(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup { elements: g.elements().collect() }
    }

    /// Checks that `elements` is a subgroup of `g`.
    pub fn new(g: &FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let mut member = vec![false; g.order()];
        for &x in elements {
            if x >= g.order() {
                return Err(GroupError::EntryOutOfRange { row: 0, col: 0, value: x });
            }
            member[x] = true;
        }
        if !member[0] {
            return Err(GroupError::MissingIdentity);
        }
        let elems: Vec<usize> = (0..g.order()).filter(|&x| member[x]).collect();
        for &a in &elems {
            for &b in &elems {
                if !member[g.mul(a, b)] {
                    return Err(GroupError::NotClosed(a, b));
                }
            }
        }
        Ok(Subgroup { elements: elems })
    }

    /// Subgroup generated by `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        let mut member = vec![false; g.order()];
        member[0] = true;
        let mut elems = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in gens {
                let y = g.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        Self::from_unsorted_unchecked(elems)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    pub fn check_normal(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        let member = self.membership(g.order());
        for &x in &self.elements {
            for c in g.elements() {
                if !member[g.conjugate(x, c)] {
                    return Err(GroupError::NotNormal { element: x, conjugator: c });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.check_normal(g).is_ok()
    }

    /// The subgroup as an abstract group, with `embedding[i]` the parent index of element `i`.
    pub fn as_group(&self, g: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
        let k = self.order();
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            pos[x] = i;
        }
        let mut table = vec![0u32; k * k];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                table[i * k + j] = pos[g.mul(a, b)] as u32;
            }
        }
        let mut sub = FiniteGroup::from_flat_unchecked(k, table);
        if let Some(labels) = g.labels() {
            sub = sub.with_labels(self.elements.iter().map(|&x| labels[x].clone()).collect());
        }
        (sub, self.elements.clone())
    }

    /// Intersection with another subgroup of the same parent.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { elements: self.elements.iter().copied().filter(|&x| other.contains(x)).collect() }
    }

    /// Left coset representatives, each the least element of its coset.
    pub fn left_transversal(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        for x in g.elements() {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for &h in &self.elements {
                seen[g.mul(x, h)] = true;
            }
        }
        reps
    }
}

/// Quotient `G/N` with its projection. Coset of `x` is indexed by the rank of
/// its least element among all coset minima.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupMorphism), GroupError> {
    n.check_normal(g)?;
    let reps = n.left_transversal(g);
    let mut coset = vec![usize::MAX; g.order()];
    for (i, &r) in reps.iter().enumerate() {
        for &h in n.elements() {
            coset[g.mul(r, h)] = i;
        }
    }
    let k = reps.len();
    let mut table = vec![0u32; k * k];
    for i in 0..k {
        for j in 0..k {
            table[i * k + j] = coset[g.mul(reps[i], reps[j])] as u32;
        }
    }
    let q = FiniteGroup::from_flat_unchecked(k, table);
    let proj = GroupMorphism::new(g, &q, coset)?;
    Ok((q, proj))
}

/// All normal subgroups, sorted by order then lexicographically.
///
/// Every normal subgroup is a join of normal closures of single elements, so
/// we close that set under products.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut closures: BTreeSet<Subgroup> = BTreeSet::new();
    let mut done = vec![false; g.order()];
    for x in g.elements() {
        if done[x] {
            continue;
        }
        let class: Vec<usize> = g.elements().map(|c| g.conjugate(x, c)).collect();
        for &y in &class {
            done[y] = true;
        }
        closures.insert(Subgroup::generated(g, &class));
    }
    let closures: Vec<Subgroup> = closures.into_iter().collect();
    let mut all: BTreeSet<Subgroup> = closures.iter().cloned().collect();
    all.insert(Subgroup::trivial());
    let mut frontier: Vec<Subgroup> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &closures {
                if b.elements.iter().all(|&x| a.contains(x)) {
                    continue;
                }
                let mut gens = a.elements.clone();
                gens.extend_from_slice(&b.elements);
                let j = Subgroup::generated(g, &gens);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = all.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    out
}
