//! Skew cycle sets and self-matched pairs of groups as alternative descriptions of
//! skew braces, with conversions in both directions on the same carrier.

use crate::brace::SkewBrace;
use crate::error::EquivalenceError;
use crate::group::FiniteGroup;
use crate::perm;

/// `(A, ·, •)` with every `φ_a = a•(-)` bijective, `a•(bc) = (a•b)(a•c)` and
/// `(ab)•c = (a•b)•(a•c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCycleSet {
    group: FiniteGroup,
    bullet: Vec<Vec<usize>>,
    star: Vec<Vec<usize>>,
}

impl SkewCycleSet {
    /// `bullet[a][b] = a•b`.
    pub fn new(group: FiniteGroup, bullet: Vec<Vec<usize>>) -> Result<Self, EquivalenceError> {
        let n = group.order();
        let fail = |tag, a, b, c| Err(EquivalenceError::CycleSetAxiomFailure { tag, a, b, c });
        if bullet.len() != n {
            return fail("shape", n, 0, 0);
        }
        for (a, row) in bullet.iter().enumerate() {
            if row.len() != n || !perm::is_permutation(row) {
                return fail("bijectivity", a, 0, 0);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = group.mul(a, b);
                for c in 0..n {
                    if bullet[a][group.mul(b, c)] != group.mul(bullet[a][b], bullet[a][c]) {
                        return fail("a•(bc)", a, b, c);
                    }
                    if bullet[ab][c] != bullet[bullet[a][b]][bullet[a][c]] {
                        return fail("(ab)•c", a, b, c);
                    }
                }
            }
        }
        let star = bullet.iter().map(|row| perm::inverse(row)).collect();
        Ok(SkewCycleSet { group, bullet, star })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn bullet(&self, a: usize, b: usize) -> usize {
        self.bullet[a][b]
    }

    /// `a∗c = b` iff `a•b = c`.
    pub fn star(&self, a: usize, c: usize) -> usize {
        self.star[a][c]
    }

    /// Checks `a∗(bc) = (a∗b)(a∗c)` and `(ab)∗c = a∗((a•b)∗c)`.
    pub fn check_star_identities(&self) -> Result<(), EquivalenceError> {
        let g = &self.group;
        for a in 0..self.order() {
            for b in 0..self.order() {
                for c in 0..self.order() {
                    if self.star(a, g.mul(b, c)) != g.mul(self.star(a, b), self.star(a, c)) {
                        return Err(EquivalenceError::CycleSetAxiomFailure { tag: "a∗(bc)", a, b, c });
                    }
                    if self.star(g.mul(a, b), c) != self.star(a, self.star(self.bullet(a, b), c)) {
                        return Err(EquivalenceError::CycleSetAxiomFailure { tag: "(ab)∗c", a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Group homomorphism `f` with `f(a•b) = f(a)•f(b)`.
    pub fn is_morphism_to(&self, other: &SkewCycleSet, f: &[usize]) -> bool {
        (0..self.order()).all(|a| {
            (0..self.order()).all(|b| {
                f[self.group.mul(a, b)] == other.group.mul(f[a], f[b]) && f[self.bullet(a, b)] == other.bullet(f[a], f[b])
            })
        })
    }
}

/// `a•b = λ_a⁻¹(b)` on `Add(A)`.
pub fn cycle_set_from_brace(x: &SkewBrace) -> SkewCycleSet {
    let n = x.order();
    let bullet = (0..n).map(|a| (0..n).map(|b| x.lambda(x.bar_inverse(a), b)).collect()).collect();
    let s = SkewCycleSet::new(x.add_group().clone(), bullet).expect("a brace gives a skew cycle set");
    debug_assert!(s.check_star_identities().is_ok());
    s
}

/// Brace on the cycle set's group with `λ_a(b) = a∗b`.
pub fn brace_from_cycle_set(s: &SkewCycleSet) -> Result<SkewBrace, EquivalenceError> {
    s.check_star_identities()?;
    Ok(SkewBrace::from_lambda(&s.group, &s.star)?)
}

/// Matched pair `(Mul(A), Mul(A), ⇀, ↼)` with `a∘b = (a⇀b)∘(a↼b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceMatchedPair {
    group: FiniteGroup,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
}

impl BraceMatchedPair {
    /// `right[a][b] = a⇀b`, `left[a][b] = a↼b`.
    pub fn new(group: FiniteGroup, right: Vec<Vec<usize>>, left: Vec<Vec<usize>>) -> Result<Self, EquivalenceError> {
        let n = group.order();
        let fail = |tag: &str, a: usize, b: usize, c: usize| {
            Err(EquivalenceError::MatchedPairAxiomFailure(format!("{tag} at ({a}, {b}, {c})")))
        };
        if right.len() != n || left.len() != n || right.iter().chain(&left).any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return fail("shape", 0, 0, 0);
        }
        let g = &group;
        for a in 0..n {
            if right[0][a] != a {
                return fail("1⇀a = a", a, 0, 0);
            }
            if left[a][0] != a {
                return fail("a↼1 = a", a, 0, 0);
            }
            for b in 0..n {
                if g.mul(a, b) != g.mul(right[a][b], left[a][b]) {
                    return fail("a∘b = (a⇀b)∘(a↼b)", a, b, 0);
                }
                for c in 0..n {
                    if right[g.mul(a, b)][c] != right[a][right[b][c]] {
                        return fail("left action", a, b, c);
                    }
                    if left[a][g.mul(b, c)] != left[left[a][b]][c] {
                        return fail("right action", a, b, c);
                    }
                    // a⇀(b∘c) = (a⇀b)∘((a↼b)⇀c)
                    if right[a][g.mul(b, c)] != g.mul(right[a][b], right[left[a][b]][c]) {
                        return fail("a⇀(b∘b')", a, b, c);
                    }
                    // (a∘b)↼c = (a↼(b⇀c))∘(b↼c)
                    if left[g.mul(a, b)][c] != g.mul(left[a][right[b][c]], left[b][c]) {
                        return fail("(a∘a')↼b", a, b, c);
                    }
                }
            }
        }
        Ok(BraceMatchedPair { group, right, left })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn right(&self, a: usize, b: usize) -> usize {
        self.right[a][b]
    }

    pub fn left(&self, a: usize, b: usize) -> usize {
        self.left[a][b]
    }

    /// Group homomorphism preserving both actions.
    pub fn is_morphism_to(&self, other: &BraceMatchedPair, f: &[usize]) -> bool {
        (0..self.order()).all(|a| {
            (0..self.order()).all(|b| {
                f[self.group.mul(a, b)] == other.group.mul(f[a], f[b])
                    && f[self.right(a, b)] == other.right(f[a], f[b])
                    && f[self.left(a, b)] == other.left(f[a], f[b])
            })
        })
    }
}

/// `a⇀b = λ_a(b)`, `a↼b = μ_b(a)` on `Mul(A)`.
pub fn matched_pair_from_brace(x: &SkewBrace) -> BraceMatchedPair {
    let n = x.order();
    let right = (0..n).map(|a| (0..n).map(|b| x.lambda(a, b)).collect()).collect();
    let left = (0..n).map(|a| (0..n).map(|b| x.mu(b, a)).collect()).collect();
    BraceMatchedPair::new(x.mul_group().clone(), right, left).expect("a brace gives a matched pair")
}

/// Brace on the pair's group with `ab = a∘(ā⇀b)`.
pub fn brace_from_matched_pair(m: &BraceMatchedPair) -> Result<SkewBrace, EquivalenceError> {
    let g = &m.group;
    let add = FiniteGroup::from_fn(g.order(), |a, b| g.mul(a, m.right(g.inv(a), b)))
        .map_err(|e| EquivalenceError::MatchedPairAxiomFailure(format!("additive structure: {e}")))?;
    Ok(SkewBrace::new(add, g.clone())?)
}
