//! Finite groups given by multiplication tables.
//!
//! Elements are the indices `0..n`; index `0` is always the identity.

mod automorphism;
mod holomorph;
mod morphism;
mod subgroup;

pub use automorphism::{automorphism_group, AutomorphismGroup};
pub use holomorph::{holomorph, Holomorph};
pub use morphism::{
    are_isomorphic, extend_generators, fingerprint, generating_set, homomorphisms, Fingerprint,
    GroupMorphism,
};
pub use subgroup::{normal_subgroups, quotient, Subgroup};

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::GroupError;
use crate::perm;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table and relabels so that the identity is index 0.
    ///
    /// When the identity sits at index `e != 0`, indices `0` and `e` are swapped.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: r, len: row.len(), expected: n });
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v });
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let swap = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[swap(a) * n + swap(b)] = swap(rows[a][b]) as u32;
            }
        }
        Self::validate_flat(n, table)
    }

    /// Builds and validates a group whose identity is already index 0.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: a, col: b, value: v });
                }
                table[a * n + b] = v as u32;
            }
        }
        if (0..n).any(|x| table[x] as usize != x || table[x * n] as usize != x) {
            return Err(GroupError::NoIdentity);
        }
        Self::validate_flat(n, table)
    }

    fn validate_flat(n: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        let mut inv = vec![u32::MAX; n];
        for x in 0..n {
            let y = (0..n).find(|&y| table[x * n + y] == 0 && table[y * n + x] == 0);
            match y {
                Some(y) => inv[x] = y as u32,
                None => return Err(GroupError::NoInverse(x)),
            }
        }
        let g = FiniteGroup { order: n, table, inv, labels: None };
        g.check_associativity()?;
        Ok(g)
    }

    /// Wraps a table known to be a group with identity 0 (internal constructions).
    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u32>) -> Self {
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let row = &table[x * n..(x + 1) * n];
            inv[x] = row.iter().position(|&v| v == 0).expect("group table without inverse") as u32;
        }
        let g = FiniteGroup { order: n, table, inv, labels: None };
        debug_assert!(n > 48 || g.check_associativity().is_ok());
        g
    }

    pub fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::from_flat_unchecked(1, vec![0])
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        let mut g = Self::from_flat_unchecked(n, table);
        g.labels = Some((0..n).map(|k| format!("a^{k}")).collect());
        g
    }

    /// Direct product; the pair `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order, other.order);
        let size = n * m;
        let mut table = vec![0u32; size * size];
        for x in 0..size {
            for y in 0..size {
                let g = self.mul(x / m, y / m);
                let h = other.mul(x % m, y % m);
                table[x * size + y] = (g * m + h) as u32;
            }
        }
        Self::from_flat_unchecked(size, table)
    }

    /// Semidirect product `N ⋊ H` with `(n,h)(n',h') = (n·φ_h(n'), hh')`.
    ///
    /// `action[h]` is the automorphism `φ_h` of `N` as an image array; the pair
    /// `(n, h)` has index `n * |H| + h`.
    pub fn semidirect(normal: &FiniteGroup, acting: &FiniteGroup, action: &[Vec<usize>]) -> Result<Self, GroupError> {
        let (n, m) = (normal.order, acting.order);
        if action.len() != m || action.iter().any(|a| a.len() != n) {
            return Err(GroupError::Invalid("action has the wrong shape".into()));
        }
        for h in 0..m {
            for k in 0..m {
                let hk = acting.mul(h, k);
                for x in 0..n {
                    if action[hk][x] != action[h][action[k][x]] {
                        return Err(GroupError::NotHomomorphism(h, k));
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if action[h][normal.mul(x, y)] != normal.mul(action[h][x], action[h][y]) {
                        return Err(GroupError::Invalid(format!("action of {h} is not an automorphism")));
                    }
                }
            }
        }
        let size = n * m;
        let mut table = vec![0u32; size * size];
        for x in 0..size {
            let (a, h) = (x / m, x % m);
            for y in 0..size {
                let (b, k) = (y / m, y % m);
                table[x * size + y] = (normal.mul(a, action[h][b]) * m + acting.mul(h, k)) as u32;
            }
        }
        Ok(Self::from_flat_unchecked(size, table))
    }

    /// Cyclic extension `<N, t | t^k = z, t x t⁻¹ = φ(x)>`.
    ///
    /// Elements are `x t^i` with index `i * |N| + x`. Requires `φ(z) = z` and
    /// `φ^k = conjugation by z`; both are checked.
    pub fn cyclic_extension(normal: &FiniteGroup, phi: &[usize], k: usize, z: usize) -> Result<Self, GroupError> {
        let n = normal.order;
        if phi.len() != n || k == 0 || z >= n {
            return Err(GroupError::Invalid("bad cyclic extension data".into()));
        }
        for x in 0..n {
            for y in 0..n {
                if phi[normal.mul(x, y)] != normal.mul(phi[x], phi[y]) {
                    return Err(GroupError::Invalid("phi is not an endomorphism".into()));
                }
            }
        }
        if !perm::is_permutation(phi) {
            return Err(GroupError::Invalid("phi is not bijective".into()));
        }
        if phi[z] != z {
            return Err(GroupError::Invalid("phi does not fix z".into()));
        }
        // powers of phi
        let mut powers = vec![perm::identity(n)];
        for i in 1..=k {
            let next = perm::after(phi, &powers[i - 1]);
            powers.push(next);
        }
        for x in 0..n {
            if powers[k][x] != normal.mul(normal.mul(z, x), normal.inv(z)) {
                return Err(GroupError::Invalid("phi^k is not conjugation by z".into()));
            }
        }
        let size = n * k;
        let mut table = vec![0u32; size * size];
        for p in 0..size {
            let (i, x) = (p / n, p % n);
            for q in 0..size {
                let (j, y) = (q / n, q % n);
                // x t^i y t^j = x φ^i(y) t^(i+j)
                let mut v = normal.mul(x, powers[i][y]);
                let mut e = i + j;
                if e >= k {
                    v = normal.mul(v, z);
                    e -= k;
                }
                table[p * size + q] = (e * n + v) as u32;
            }
        }
        let g = Self::from_flat_unchecked(size, table);
        Ok(g)
    }

    /// Closure of `gens` under `mul`, enumerated breadth-first from `identity`.
    ///
    /// Returns the group together with the concrete element for every index.
    pub fn generated_by<T, F>(identity: T, gens: &[T], mul: F) -> (Self, Vec<T>)
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let y = mul(&elems[i], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&mul(&elems[a], &elems[b])] as u32;
            }
        }
        (Self::from_flat_unchecked(n, table), elems)
    }

    /// Permutation group generated by image arrays, composed left to right.
    pub fn from_permutations(gens: &[Vec<usize>]) -> (Self, Vec<Vec<usize>>) {
        let degree = gens.first().map_or(0, |g| g.len());
        let (mut g, elems) = Self::generated_by(perm::identity(degree), gens, |p, q| perm::compose(p, q));
        g.labels = Some(elems.iter().map(|p| perm::format_cycles(p)).collect());
        (g, elems)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub(crate) fn flat_table(&self) -> &[u32] {
        &self.table
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let (mut result, mut b) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    /// `g⁻¹ a g`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn centralizer_size(&self, a: usize) -> usize {
        self.elements().filter(|&b| self.commutes(a, b)).count()
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.elements().filter(|&a| self.elements().all(|b| self.commutes(a, b))).collect())
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, perm::lcm)
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.order];
        for x in self.elements() {
            for y in self.elements() {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        Subgroup::generated(self, &comms)
    }

    /// Upper central series `Z_0 = 1 ⊆ Z_1 = Z(G) ⊆ ...` until it stabilizes.
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![Subgroup::trivial()];
        loop {
            let last = series.last().unwrap();
            let next: Vec<usize> = self
                .elements()
                .filter(|&a| self.elements().all(|b| last.contains(self.commutator(a, b))))
                .collect();
            if next.len() == last.order() {
                return series;
            }
            series.push(Subgroup::from_sorted_unchecked(next));
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series().last().unwrap().order() == self.order
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![Subgroup::whole(self)];
        loop {
            let last = series.last().unwrap();
            let sub = last.as_group(self);
            let d = sub.0.derived_subgroup();
            if d.order() == last.order() {
                return series;
            }
            let elems: Vec<usize> = d.elements().iter().map(|&i| sub.1[i]).collect();
            series.push(Subgroup::from_unsorted_unchecked(elems));
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    pub fn structure_queries(&self) -> StructureInfo {
        StructureInfo {
            center: self.center(),
            exponent: self.exponent(),
            is_nilpotent: self.is_nilpotent(),
            is_solvable: self.is_solvable(),
        }
    }

    /// Relabels elements: the element `x` of `self` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm[0], 0);
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u32;
            }
        }
        let mut g = Self::from_flat_unchecked(n, table);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); n];
            for a in 0..n {
                nl[perm[a]] = l[a].clone();
            }
            g.labels = Some(nl);
        }
        g
    }
}

/// Result of [`FiniteGroup::structure_queries`].
#[derive(Clone, Debug)]
pub struct StructureInfo {
    pub center: Subgroup,
    pub exponent: usize,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
}
