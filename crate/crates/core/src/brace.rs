//! Skew braces: one carrier with an additive group `·` and a multiplicative group `∘`.

use rayon::prelude::*;

use crate::error::{BraceError, GroupError};
use crate::group::{generating_set, normal_subgroups, quotient, FiniteGroup, Subgroup};
use crate::perm;

#[derive(Clone, Debug)]
pub struct SkewBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
    lambda: Vec<u32>,
}

impl PartialEq for SkewBrace {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.mul == other.mul
    }
}

impl Eq for SkewBrace {}

/// The family `λ_a`, one image array per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMap {
    pub maps: Vec<Vec<usize>>,
}

/// The family `μ_b`, one image array per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuMap {
    pub maps: Vec<Vec<usize>>,
}

fn raw_identity(rows: &[Vec<usize>]) -> Option<usize> {
    let n = rows.len();
    (0..n).find(|&e| (0..n).all(|x| rows[e].get(x) == Some(&x) && rows[x].get(e) == Some(&x)))
}

/// Validates a pair of Cayley tables as a skew brace.
///
/// Both tables are relabeled the same way, so the shared identity ends up at 0.
pub fn verify_skew_brace(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<SkewBrace, BraceError> {
    if add.len() != mul.len() {
        return Err(BraceError::SizeMismatch { add: add.len(), mul: mul.len() });
    }
    let ea = raw_identity(add).ok_or(GroupError::NoIdentity)?;
    let em = raw_identity(mul).ok_or(GroupError::NoIdentity)?;
    if ea != em {
        return Err(BraceError::IdentityMismatch { add: ea, mul: em });
    }
    let add = FiniteGroup::from_table(add)?;
    let mul = FiniteGroup::from_table(mul)?;
    SkewBrace::new(add, mul)
}

impl SkewBrace {
    /// Checks the compatibility law `a∘(bc) = (a∘b)a⁻¹(a∘c)` and returns the brace.
    pub fn new(add: FiniteGroup, mul: FiniteGroup) -> Result<Self, BraceError> {
        if add.order() != mul.order() {
            return Err(BraceError::SizeMismatch { add: add.order(), mul: mul.order() });
        }
        let n = add.order();
        let failure = (0..n).into_par_iter().find_map_first(|a| {
            let ai = add.inv(a);
            for b in 0..n {
                let ab = mul.mul(a, b);
                let left = add.mul(ab, ai);
                for c in 0..n {
                    if mul.mul(a, add.mul(b, c)) != add.mul(left, mul.mul(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        if let Some((a, b, c)) = failure {
            return Err(BraceError::CompatibilityFailure { a, b, c });
        }
        Ok(Self::new_unchecked(add, mul))
    }

    /// Builds the brace without the compatibility scan; callers guarantee it holds.
    pub(crate) fn new_unchecked(add: FiniteGroup, mul: FiniteGroup) -> Self {
        let n = add.order();
        let mut lambda = vec![0u32; n * n];
        for a in 0..n {
            let ai = add.inv(a);
            for b in 0..n {
                lambda[a * n + b] = add.mul(ai, mul.mul(a, b)) as u32;
            }
        }
        SkewBrace { add, mul, lambda }
    }

    /// The trivial brace `a∘b = ab`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::new_unchecked(g.clone(), g.clone())
    }

    /// The almost-trivial brace `a∘b = ba`.
    pub fn almost_trivial(g: &FiniteGroup) -> Self {
        let mul = FiniteGroup::from_fn(g.order(), |a, b| g.mul(b, a)).expect("opposite group");
        Self::new_unchecked(g.clone(), mul)
    }

    /// `a∘b = a·λ_a(b)` for a map `λ: A → Aut(A)` satisfying `λ_{aλ_a(b)} = λ_a λ_b`.
    pub fn from_lambda(g: &FiniteGroup, lambda: &[Vec<usize>]) -> Result<Self, BraceError> {
        let n = g.order();
        if lambda.len() != n {
            return Err(BraceError::SizeMismatch { add: n, mul: lambda.len() });
        }
        for (a, l) in lambda.iter().enumerate() {
            if l.len() != n || !perm::is_permutation(l) {
                return Err(BraceError::NotAutomorphism(a));
            }
            for x in 0..n {
                for y in 0..n {
                    if l[g.mul(x, y)] != g.mul(l[x], l[y]) {
                        return Err(BraceError::NotAutomorphism(a));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let c = g.mul(a, lambda[a][b]);
                if (0..n).any(|x| lambda[c][x] != lambda[a][lambda[b][x]]) {
                    return Err(BraceError::CompositionLawFailure { a, b });
                }
            }
        }
        let mul = FiniteGroup::from_fn(n, |a, b| g.mul(a, lambda[a][b]))?;
        Ok(Self::new_unchecked(g.clone(), mul))
    }

    /// `ab = a∘λ_a⁻¹(b)` for a homomorphism `λ: (A,∘) → Sym(A)` fixing the identity.
    pub fn from_dual_lambda(mul: &FiniteGroup, lambda: &[Vec<usize>]) -> Result<Self, BraceError> {
        let n = mul.order();
        if lambda.len() != n {
            return Err(BraceError::SizeMismatch { add: lambda.len(), mul: n });
        }
        for (a, l) in lambda.iter().enumerate() {
            if l.len() != n || !perm::is_permutation(l) {
                return Err(BraceError::NotAutomorphism(a));
            }
            if l[0] != 0 {
                return Err(BraceError::IdentityNotFixed(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul.mul(a, b);
                if (0..n).any(|x| lambda[ab][x] != lambda[a][lambda[b][x]]) {
                    return Err(BraceError::NotHomomorphism { a, b });
                }
            }
        }
        let inv: Vec<Vec<usize>> = lambda.iter().map(|l| perm::inverse(l)).collect();
        for a in 0..n {
            for b in 0..n {
                let lb = lambda[a][b];
                for c in 0..n {
                    let left = lambda[a][mul.mul(b, inv[b][c])];
                    let right = mul.mul(lb, inv[lb][lambda[a][c]]);
                    if left != right {
                        return Err(BraceError::HypothesisFailure { a, b, c });
                    }
                }
            }
        }
        let add = FiniteGroup::from_fn(n, |a, b| mul.mul(a, inv[a][b]))?;
        Ok(Self::new_unchecked(add, mul.clone()))
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn mul_group(&self) -> &FiniteGroup {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.mul.mul(a, b)
    }

    /// Additive inverse `a⁻¹`.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// `λ_a(b) = a⁻¹(a∘b)`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order() + b] as usize
    }

    /// `μ_b(a) = \overline{λ_a(b)}∘a∘b`.
    pub fn mu(&self, b: usize, a: usize) -> usize {
        let l = self.lambda(a, b);
        self.circ(self.circ(self.mul.inv(l), a), b)
    }

    pub fn lambda_row(&self, a: usize) -> &[u32] {
        let n = self.order();
        &self.lambda[a * n..(a + 1) * n]
    }

    pub fn lambda_map(&self) -> LambdaMap {
        let n = self.order();
        let maps: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| self.lambda(a, b)).collect()).collect();
        for a in 0..n {
            for b in 0..n {
                let ab = self.circ(a, b);
                assert!((0..n).all(|x| maps[ab][x] == maps[a][maps[b][x]]), "lambda is not a homomorphism");
            }
        }
        LambdaMap { maps }
    }

    pub fn mu_map(&self) -> MuMap {
        let n = self.order();
        let maps: Vec<Vec<usize>> = (0..n).map(|b| (0..n).map(|a| self.mu(b, a)).collect()).collect();
        assert!((0..n).all(|a| maps[0][a] == a), "mu_1 is not the identity");
        for a in 0..n {
            for b in 0..n {
                let ab = self.circ(a, b);
                assert!((0..n).all(|x| maps[ab][x] == maps[b][maps[a][x]]), "mu is not an anti-homomorphism");
            }
        }
        MuMap { maps }
    }

    /// The `∘`-inverse, computed as `λ_a⁻¹(a⁻¹)`.
    pub fn bar_inverse(&self, a: usize) -> usize {
        let target = self.neg(a);
        let row = self.lambda_row(a);
        row.iter().position(|&v| v as usize == target).unwrap()
    }

    pub fn is_classical(&self) -> bool {
        self.add.is_abelian()
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.mul
    }

    /// `None` when `(ab)∘c = (a∘c)c⁻¹(b∘c)` holds everywhere, else the first failing triple.
    pub fn two_sided_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.add(a, b);
                for c in 0..n {
                    let right = self.add(self.add(self.circ(a, c), self.neg(c)), self.circ(b, c));
                    if self.circ(ab, c) != right {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    pub fn is_two_sided(&self) -> bool {
        self.two_sided_witness().is_none()
    }

    /// `Γ(A)` on pairs `(a, x)` (index `a·n + x`) with `(a,x)(b,y) = (aλ_x(b), x∘y)`.
    pub fn crossed_group(&self) -> FiniteGroup {
        let n = self.order();
        let size = n * n;
        let mut table = vec![0u32; size * size];
        for p in 0..size {
            let (a, x) = (p / n, p % n);
            for q in 0..size {
                let (b, y) = (q / n, q % n);
                table[p * size + q] = (self.add(a, self.lambda(x, b)) * n + self.circ(x, y)) as u32;
            }
        }
        let g = FiniteGroup::from_flat_unchecked(size, table);
        debug_assert!(g.check_associativity().is_ok());
        g
    }

    /// Relabels the carrier: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> SkewBrace {
        SkewBrace::new_unchecked(self.add.relabel(perm), self.mul.relabel(perm))
    }

    /// Lexicographically least multiplicative table over relabelings by additive
    /// automorphisms. Two braces with equal additive tables are isomorphic iff
    /// their canonical tables agree.
    pub fn canonical_mul_table(&self, aut: &[Vec<usize>]) -> Vec<u32> {
        let n = self.order();
        let mut best: Option<Vec<u32>> = None;
        let mut buf = vec![0u32; n * n];
        for f in aut {
            for a in 0..n {
                for b in 0..n {
                    buf[f[a] * n + f[b]] = f[self.circ(a, b)] as u32;
                }
            }
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.unwrap_or_else(|| self.mul.flat_table().to_vec())
    }

    /// Checks that `elements` is closed under both operations and returns it as a brace
    /// together with the embedding into `self`.
    pub fn sub_brace(&self, elements: &[usize]) -> Result<(SkewBrace, Vec<usize>), BraceError> {
        let sa = Subgroup::new(&self.add, elements).map_err(|e| BraceError::NotSubBrace(format!("additive: {e}")))?;
        let sm = Subgroup::new(&self.mul, elements).map_err(|e| BraceError::NotSubBrace(format!("multiplicative: {e}")))?;
        let (add, emb) = sa.as_group(&self.add);
        let (mul, emb2) = sm.as_group(&self.mul);
        debug_assert_eq!(emb, emb2);
        Ok((SkewBrace::new_unchecked(add, mul), emb))
    }

    /// Quotient `A/I` by an ideal, with the projection array.
    pub fn quotient(&self, ideal: &[usize]) -> Result<(SkewBrace, Vec<usize>), BraceError> {
        let sub = Subgroup::new(&self.add, ideal)?;
        let (add, proj) = quotient(&self.add, &sub).map_err(|e| BraceError::NotIdeal(e.to_string()))?;
        let proj = proj.into_map();
        let k = add.order();
        let mut rep = vec![usize::MAX; k];
        for x in (0..self.order()).rev() {
            rep[proj[x]] = x;
        }
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = proj[self.circ(rep[i], rep[j])] as u32;
            }
        }
        // the multiplication must be well defined on cosets
        for x in 0..self.order() {
            for y in 0..self.order() {
                if proj[self.circ(x, y)] != table[proj[x] * k + proj[y]] as usize {
                    return Err(BraceError::NotIdeal(format!("∘ is not well defined on cosets at ({x}, {y})")));
                }
            }
        }
        let mul = FiniteGroup::from_flat_unchecked(k, table);
        Ok((SkewBrace::new(add, mul)?, proj))
    }

    /// Normal subgroups of the multiplicative group.
    pub(crate) fn mul_normal_subgroups(&self) -> Vec<Subgroup> {
        normal_subgroups(&self.mul)
    }
}

/// An isomorphism `A → B` preserving both operations, if one exists.
pub fn brace_isomorphism(a: &SkewBrace, b: &SkewBrace) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    if a == b {
        return Some((0..a.order()).collect());
    }
    let inv = |s: &SkewBrace| -> Vec<(usize, usize, usize, usize)> {
        (0..s.order())
            .map(|x| {
                let fixed = (0..s.order()).filter(|&y| s.lambda(x, y) == y).count();
                (s.add.element_order(x), s.mul.element_order(x), s.add.centralizer_size(x), fixed)
            })
            .collect()
    };
    let (ia, ib) = (inv(a), inv(b));
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let gens = generating_set(&a.add);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..b.order()).filter(|&y| ib[y] == ia[s]).collect())
        .collect();
    let mut images = Vec::new();
    search_brace_iso(a, b, &gens, &candidates, &mut images)
}

fn search_brace_iso(
    a: &SkewBrace,
    b: &SkewBrace,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    for &y in &candidates[k] {
        images.push(y);
        if let Some(map) = crate::group::extend_generators(&a.add, &b.add, &gens[..=k], images, true) {
            if k + 1 == gens.len() {
                let n = a.order();
                let ok = (0..n).all(|x| (0..n).all(|z| map[a.circ(x, z)] == b.circ(map[x], map[z])));
                if ok {
                    return Some(map);
                }
            } else if let Some(m) = search_brace_iso(a, b, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    #[test]
    fn trivial_c2() {
        let c2 = FiniteGroup::cyclic(2).table_rows();
        let b = verify_skew_brace(&c2, &c2).unwrap();
        assert!(b.is_trivial());
        assert_eq!(b.bar_inverse(1), 1);
    }

    #[test]
    fn identity_mismatch() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(verify_skew_brace(&add, &mul).unwrap_err(), BraceError::IdentityMismatch { add: 0, mul: 1 });
    }

    #[test]
    fn lambda_identities() {
        let s3 = crate::gallery::s3();
        let b = SkewBrace::almost_trivial(&s3);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(b.lambda(x, y), s3.conjugate(y, x));
                assert_eq!(b.circ(x, y), b.add(x, b.lambda(x, y)));
            }
            assert_eq!(b.bar_inverse(x), b.mul_group().inv(x));
        }
        b.lambda_map();
        b.mu_map();
    }

    #[test]
    fn crossed_group_of_trivial_c2() {
        let b = SkewBrace::trivial(&FiniteGroup::cyclic(2));
        let g = b.crossed_group();
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert!(are_isomorphic(&g, &v4).is_some());
    }

    #[test]
    fn dual_lambda_identity() {
        let c4 = FiniteGroup::cyclic(4);
        let id: Vec<Vec<usize>> = (0..4).map(|_| (0..4).collect()).collect();
        let b = SkewBrace::from_dual_lambda(&c4, &id).unwrap();
        assert!(b.is_trivial());
    }

    #[test]
    fn trivial_vs_almost_trivial() {
        let s3 = crate::gallery::s3();
        let t = SkewBrace::trivial(&s3);
        let at = SkewBrace::almost_trivial(&s3);
        assert!(brace_isomorphism(&t, &at).is_none());
        let id = brace_isomorphism(&t, &t).unwrap();
        assert_eq!(id.len(), 6);
    }
}
