//! Group-theoretic brace factories: exact factorizations, bijective 1-cocycles,
//! matched pairs, semidirect and wreath products, and triply factorized groups.

use crate::brace::SkewBrace;
use crate::error::ConstructionError;
use crate::group::{are_isomorphic, automorphism_group, homomorphisms, FiniteGroup, Subgroup};
use crate::perm;

/// `A × B` with both operations componentwise; `(a, b)` has index `a·|B| + b`.
pub fn direct_product(a: &SkewBrace, b: &SkewBrace) -> SkewBrace {
    SkewBrace::new_unchecked(
        a.add_group().direct_product(b.add_group()),
        a.mul_group().direct_product(b.mul_group()),
    )
}

/// `G = BC` with `B ∩ C = 1`, together with the decomposition of every element.
#[derive(Clone, Debug)]
pub struct ExactFactorization {
    pub group: FiniteGroup,
    pub left: Subgroup,
    pub right: Subgroup,
    /// `decomposition[g] = (b, c)` with `g = b·c`.
    pub decomposition: Vec<(usize, usize)>,
}

impl ExactFactorization {
    pub fn new(group: FiniteGroup, left: Subgroup, right: Subgroup) -> Result<Self, ConstructionError> {
        let n = group.order();
        if left.intersection(&right).order() != 1 {
            return Err(ConstructionError::NotExact("the subgroups intersect nontrivially".into()));
        }
        if left.order() * right.order() != n {
            return Err(ConstructionError::NotExact(format!(
                "|B|·|C| = {} but |G| = {n}",
                left.order() * right.order()
            )));
        }
        let mut decomposition = vec![(usize::MAX, usize::MAX); n];
        for &b in left.elements() {
            for &c in right.elements() {
                decomposition[group.mul(b, c)] = (b, c);
            }
        }
        debug_assert!(decomposition.iter().all(|d| d.0 != usize::MAX));
        Ok(ExactFactorization { group, left, right, decomposition })
    }
}

/// `a∘a' = b·a'·c` where `a = bc`.
///
/// Panics if the multiplicative group is not isomorphic to `B × C`.
pub fn brace_from_exact_factorization(f: &ExactFactorization) -> Result<SkewBrace, ConstructionError> {
    let g = &f.group;
    let mul = FiniteGroup::from_fn(g.order(), |x, y| {
        let (b, c) = f.decomposition[x];
        g.mul(g.mul(b, y), c)
    })?;
    let brace = SkewBrace::new(g.clone(), mul)?;
    let bc = f.left.as_group(g).0.direct_product(&f.right.as_group(g).0);
    assert!(are_isomorphic(brace.mul_group(), &bc).is_some(), "multiplicative group is not B × C");
    Ok(brace)
}

/// An invertible map `π: G → A` with `π(gh) = π(g)(g·π(h))`.
#[derive(Clone, Debug)]
pub struct BijectiveCocycle {
    pub g: FiniteGroup,
    pub a: FiniteGroup,
    /// `action[g]` is the automorphism `x ↦ g·x` of `A`.
    pub action: Vec<Vec<usize>>,
    pub pi: Vec<usize>,
}

fn check_automorphism(a: &FiniteGroup, f: &[usize]) -> bool {
    f.len() == a.order()
        && perm::is_permutation(f)
        && a.elements().all(|x| a.elements().all(|y| f[a.mul(x, y)] == a.mul(f[x], f[y])))
}

impl BijectiveCocycle {
    pub fn new(g: FiniteGroup, a: FiniteGroup, action: Vec<Vec<usize>>, pi: Vec<usize>) -> Result<Self, ConstructionError> {
        if action.len() != g.order() || pi.len() != g.order() || g.order() != a.order() {
            return Err(ConstructionError::BadAction("sizes do not match".into()));
        }
        if let Some(x) = (0..g.order()).find(|&x| !check_automorphism(&a, &action[x])) {
            return Err(ConstructionError::BadAction(format!("{x} does not act by an automorphism")));
        }
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                if (0..a.order()).any(|t| action[xy][t] != action[x][action[y][t]]) {
                    return Err(ConstructionError::BadAction(format!("not an action at ({x}, {y})")));
                }
            }
        }
        if !perm::is_permutation(&pi) {
            return Err(ConstructionError::BadAction("pi is not bijective".into()));
        }
        for x in g.elements() {
            for y in g.elements() {
                if pi[g.mul(x, y)] != a.mul(pi[x], action[x][pi[y]]) {
                    return Err(ConstructionError::CocycleLawFailure { g: x, h: y });
                }
            }
        }
        Ok(BijectiveCocycle { g, a, action, pi })
    }
}

/// Brace on `A` with `a∘b = π(π⁻¹(a)π⁻¹(b))`.
pub fn brace_from_cocycle(c: &BijectiveCocycle) -> Result<SkewBrace, ConstructionError> {
    let inv = perm::inverse(&c.pi);
    let mul = FiniteGroup::from_fn(c.a.order(), |x, y| c.pi[c.g.mul(inv[x], inv[y])])?;
    Ok(SkewBrace::new(c.a.clone(), mul)?)
}

/// `id: (A,∘) → (A,·)` with `Mul(A)` acting through `λ`.
pub fn cocycle_from_brace(x: &SkewBrace) -> BijectiveCocycle {
    let n = x.order();
    let action = (0..n).map(|a| (0..n).map(|b| x.lambda(a, b)).collect()).collect();
    BijectiveCocycle::new(x.mul_group().clone(), x.add_group().clone(), action, (0..n).collect())
        .expect("lambda gives a bijective 1-cocycle")
}

/// Matched pair of groups. Tables are indexed by `b·|A| + a`.
#[derive(Clone, Debug)]
pub struct MatchedPairGroups {
    pub a: FiniteGroup,
    pub b: FiniteGroup,
    /// `b ⇀ a ∈ A`.
    pub right: Vec<usize>,
    /// `b ↼ a ∈ B`.
    pub left: Vec<usize>,
}

impl MatchedPairGroups {
    pub fn new(a: FiniteGroup, b: FiniteGroup, right: Vec<usize>, left: Vec<usize>) -> Result<Self, ConstructionError> {
        let p = MatchedPairGroups { a, b, right, left };
        p.validate()?;
        Ok(p)
    }

    pub fn act_right(&self, b: usize, a: usize) -> usize {
        self.right[b * self.a.order() + a]
    }

    pub fn act_left(&self, b: usize, a: usize) -> usize {
        self.left[b * self.a.order() + a]
    }

    fn validate(&self) -> Result<(), ConstructionError> {
        let (na, nb) = (self.a.order(), self.b.order());
        if self.right.len() != na * nb || self.left.len() != na * nb {
            return Err(ConstructionError::BadAction("action tables have the wrong size".into()));
        }
        if self.right.iter().any(|&v| v >= na) || self.left.iter().any(|&v| v >= nb) {
            return Err(ConstructionError::BadAction("action value out of range".into()));
        }
        let fail = |tag: &'static str, w: String| Err(ConstructionError::MatchedPairFailure { tag, witness: w });
        for x in 0..na {
            if self.act_right(0, x) != x {
                return fail("left action identity", format!("a={x}"));
            }
        }
        for y in 0..nb {
            if self.act_left(y, 0) != y {
                return fail("right action identity", format!("b={y}"));
            }
        }
        for b in 0..nb {
            for b2 in 0..nb {
                for a in 0..na {
                    let bb = self.b.mul(b, b2);
                    if self.act_right(bb, a) != self.act_right(b, self.act_right(b2, a)) {
                        return fail("left action", format!("b={b}, b'={b2}, a={a}"));
                    }
                    let lhs = self.act_left(bb, a);
                    let rhs = self.b.mul(self.act_left(b, self.act_right(b2, a)), self.act_left(b2, a));
                    if lhs != rhs {
                        return fail("(bb')↼a", format!("b={b}, b'={b2}, a={a}"));
                    }
                }
            }
            for a in 0..na {
                for a2 in 0..na {
                    let aa = self.a.mul(a, a2);
                    if self.act_left(b, aa) != self.act_left(self.act_left(b, a), a2) {
                        return fail("right action", format!("b={b}, a={a}, a'={a2}"));
                    }
                    let lhs = self.act_right(b, aa);
                    let rhs = self.a.mul(self.act_right(b, a), self.act_right(self.act_left(b, a), a2));
                    if lhs != rhs {
                        return fail("b⇀(aa')", format!("b={b}, a={a}, a'={a2}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `ba = (b⇀a)(b↼a)` in an exact factorization `G = AB`.
    pub fn from_factorization(f: &ExactFactorization) -> Result<Self, ConstructionError> {
        let g = &f.group;
        let (ag, aemb) = f.left.as_group(g);
        let (bg, bemb) = f.right.as_group(g);
        let (na, nb) = (ag.order(), bg.order());
        let apos = |x: usize| aemb.binary_search(&x).unwrap();
        let bpos = |x: usize| bemb.binary_search(&x).unwrap();
        let mut right = vec![0; na * nb];
        let mut left = vec![0; na * nb];
        for b in 0..nb {
            for a in 0..na {
                let (x, y) = f.decomposition[g.mul(bemb[b], aemb[a])];
                right[b * na + a] = apos(x);
                left[b * na + a] = bpos(y);
            }
        }
        MatchedPairGroups::new(ag, bg, right, left)
    }

    /// `(Mul(A), Mul(A))` with `x⇀y = λ_x(y)` and `x↼y = μ_y(x)`.
    pub fn from_brace(x: &SkewBrace) -> Self {
        let n = x.order();
        let mut right = vec![0; n * n];
        let mut left = vec![0; n * n];
        for b in 0..n {
            for a in 0..n {
                right[b * n + a] = x.lambda(b, a);
                left[b * n + a] = x.mu(a, b);
            }
        }
        MatchedPairGroups::new(x.mul_group().clone(), x.mul_group().clone(), right, left)
            .expect("lambda and mu form a matched pair")
    }
}

/// Brace on `A ⋈ B` (index `a·|B| + b`) with `(a,b)(a',b') = (a(b⇀a'), (b↼a')b')`
/// and `(a,b)∘(a',b') = (aa', b'b)`.
pub fn biproduct_group(p: &MatchedPairGroups) -> Result<SkewBrace, ConstructionError> {
    let nb = p.b.order();
    let n = p.a.order() * nb;
    let add = FiniteGroup::from_fn(n, |x, y| {
        let (a, b, a2, b2) = (x / nb, x % nb, y / nb, y % nb);
        p.a.mul(a, p.act_right(b, a2)) * nb + p.b.mul(p.act_left(b, a2), b2)
    })?;
    let mul = FiniteGroup::from_fn(n, |x, y| {
        let (a, b, a2, b2) = (x / nb, x % nb, y / nb, y % nb);
        p.a.mul(a, a2) * nb + p.b.mul(b2, b)
    })?;
    Ok(SkewBrace::new(add, mul)?)
}

fn check_brace_automorphism(x: &SkewBrace, f: &[usize]) -> bool {
    let n = x.order();
    f.len() == n
        && perm::is_permutation(f)
        && (0..n).all(|a| (0..n).all(|b| f[x.add(a, b)] == x.add(f[a], f[b]) && f[x.circ(a, b)] == x.circ(f[a], f[b])))
}

fn check_action_hom(x: &SkewBrace, action: &[Vec<usize>]) -> Result<(), ConstructionError> {
    let n = x.order();
    for a in 0..n {
        for b in 0..n {
            let ab = x.circ(a, b);
            if action[ab] != perm::after(&action[a], &action[b]) {
                return Err(ConstructionError::BadAction(format!("not a homomorphism at ({a}, {b})")));
            }
        }
    }
    Ok(())
}

/// `A ⋉ B`: `(a,b)∘(a',b') = (a∘a', b∘α_a(b'))` with `α: Mul(A) → Aut_Br(B)`.
pub fn semidirect_product_braces(a: &SkewBrace, b: &SkewBrace, alpha: &[Vec<usize>]) -> Result<SkewBrace, ConstructionError> {
    if alpha.len() != a.order() {
        return Err(ConstructionError::BadAction("alpha needs one map per element of A".into()));
    }
    if let Some(x) = (0..a.order()).find(|&x| !check_brace_automorphism(b, &alpha[x])) {
        return Err(ConstructionError::NotBraceAutomorphism(x));
    }
    check_action_hom(a, alpha)?;
    let nb = b.order();
    let n = a.order() * nb;
    let add = a.add_group().direct_product(b.add_group());
    let mul = FiniteGroup::from_fn(n, |x, y| {
        let (p, q, p2, q2) = (x / nb, x % nb, y / nb, y % nb);
        a.circ(p, p2) * nb + b.circ(q, alpha[p][q2])
    })?;
    Ok(SkewBrace::new(add, mul)?)
}

/// `A ⋊ B`: `(a,b)∘(a',b') = (a∘β_b(a'), b∘b')` with `β: Mul(B) → Aut_Br(A)`.
pub fn semidirect_product_braces_right(a: &SkewBrace, b: &SkewBrace, beta: &[Vec<usize>]) -> Result<SkewBrace, ConstructionError> {
    if beta.len() != b.order() {
        return Err(ConstructionError::BadAction("beta needs one map per element of B".into()));
    }
    if let Some(x) = (0..b.order()).find(|&x| !check_brace_automorphism(a, &beta[x])) {
        return Err(ConstructionError::NotBraceAutomorphism(x));
    }
    check_action_hom(b, beta)?;
    let nb = b.order();
    let n = a.order() * nb;
    let add = a.add_group().direct_product(b.add_group());
    let mul = FiniteGroup::from_fn(n, |x, y| {
        let (p, q, p2, q2) = (x / nb, x % nb, y / nb, y % nb);
        a.circ(p, beta[q][p2]) * nb + b.circ(q, q2)
    })?;
    Ok(SkewBrace::new(add, mul)?)
}

/// Checks `λ_a λ_b = λ_{λ_a(b)} λ_a`, the condition for `A` to act on itself through `λ`.
pub fn double_condition(x: &SkewBrace) -> Result<(), ConstructionError> {
    let n = x.order();
    for a in 0..n {
        for b in 0..n {
            let c = x.lambda(a, b);
            if (0..n).any(|t| x.lambda(a, x.lambda(b, t)) != x.lambda(c, x.lambda(a, t))) {
                return Err(ConstructionError::DoubleUndefined { a, b });
            }
        }
    }
    Ok(())
}

/// The double `D(A) = A ⋉ A` with `α = λ`.
pub fn double(x: &SkewBrace) -> Result<SkewBrace, ConstructionError> {
    double_condition(x)?;
    let n = x.order();
    let alpha: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| x.lambda(a, b)).collect()).collect();
    semidirect_product_braces(x, x, &alpha)
}

/// `A ≀ B = A^m ⋊ B` where `rep` is a degree-`m` permutation representation of `Mul(B)`.
///
/// Permutations compose left to right: `rep[b∘c] = rep[b]` followed by `rep[c]`.
/// Then `δ_b(a_1, …, a_m) = (a_{b(1)}, …, a_{b(m)})` is a left action. The tuple
/// `(a_1, …, a_m)` is encoded in base `|A|` with `a_1` most significant.
pub fn wreath_product(a: &SkewBrace, b: &SkewBrace, rep: &[Vec<usize>]) -> Result<SkewBrace, ConstructionError> {
    if rep.len() != b.order() {
        return Err(ConstructionError::NotPermutationRep("one permutation per element of B is required".into()));
    }
    let m = rep.first().map_or(0, |p| p.len());
    if m == 0 || rep.iter().any(|p| p.len() != m || !perm::is_permutation(p)) {
        return Err(ConstructionError::NotPermutationRep("entries must be permutations of one degree".into()));
    }
    for x in 0..b.order() {
        for y in 0..b.order() {
            if rep[b.circ(x, y)] != perm::compose(&rep[x], &rep[y]) {
                return Err(ConstructionError::NotPermutationRep(format!("not a homomorphism at ({x}, {y})")));
            }
        }
    }
    let mut power = a.clone();
    for _ in 1..m {
        power = direct_product(&power, a);
    }
    let na = a.order();
    let size = power.order();
    let digits = |mut t: usize| -> Vec<usize> {
        let mut d = vec![0; m];
        for i in (0..m).rev() {
            d[i] = t % na;
            t /= na;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * na + x);
    let delta: Vec<Vec<usize>> = rep
        .iter()
        .map(|p| {
            (0..size)
                .map(|t| {
                    let d = digits(t);
                    let moved: Vec<usize> = (0..m).map(|i| d[p[i]]).collect();
                    encode(&moved)
                })
                .collect()
        })
        .collect();
    semidirect_product_braces_right(&power, b, &delta)
}

/// `(G, A, B, M)` with `G = AM = BM = AB` and `A ∩ M = B ∩ M = 1`.
#[derive(Clone, Debug)]
pub struct TriplyFactorizedGroup {
    pub g: FiniteGroup,
    pub a: Subgroup,
    pub b: Subgroup,
    pub m: Subgroup,
}

fn product_is_everything(g: &FiniteGroup, x: &Subgroup, y: &Subgroup) -> bool {
    let mut hit = vec![false; g.order()];
    for &p in x.elements() {
        for &q in y.elements() {
            hit[g.mul(p, q)] = true;
        }
    }
    hit.into_iter().all(|h| h)
}

impl TriplyFactorizedGroup {
    pub fn new(g: FiniteGroup, a: Subgroup, b: Subgroup, m: Subgroup) -> Result<Self, ConstructionError> {
        let fail = |s: &str| Err(ConstructionError::NotTriplyFactorized(s.to_string()));
        if a.intersection(&m).order() != 1 {
            return fail("A ∩ M is nontrivial");
        }
        if b.intersection(&m).order() != 1 {
            return fail("B ∩ M is nontrivial");
        }
        if !product_is_everything(&g, &a, &m) {
            return fail("G != AM");
        }
        if !product_is_everything(&g, &b, &m) {
            return fail("G != BM");
        }
        if !product_is_everything(&g, &a, &b) {
            return fail("G != AB");
        }
        Ok(TriplyFactorizedGroup { g, a, b, m })
    }

    pub fn a_meets_b_trivially(&self) -> bool {
        self.a.intersection(&self.b).order() == 1
    }

    pub fn m_is_normal(&self) -> bool {
        self.m.is_normal(&self.g)
    }
}

/// `Γ(X)` with `A = Add×1`, `M = 1×Mul` and the diagonal `B`.
pub fn triply_factorized_from_brace(x: &SkewBrace) -> TriplyFactorizedGroup {
    let n = x.order();
    let g = x.crossed_group();
    let a = Subgroup::from_sorted_unchecked((0..n).map(|p| p * n).collect());
    let m = Subgroup::from_sorted_unchecked((0..n).collect());
    let b = Subgroup::from_unsorted_unchecked((0..n).map(|p| p * n + p).collect());
    let t = TriplyFactorizedGroup::new(g, a, b, m).expect("crossed group is triply factorized");
    assert!(t.a_meets_b_trivially());
    t
}

/// `Γ(X)` with the normal factor `Add×1` in the role of `M` and `1×Mul` in the role of `A`.
///
/// `1×Mul` is not normal in `Γ(X)` in general, while `Add×1` always is; this is the
/// triple that the reverse construction accepts.
pub fn normal_triple_from_brace(x: &SkewBrace) -> TriplyFactorizedGroup {
    let t = triply_factorized_from_brace(x);
    let swapped = TriplyFactorizedGroup::new(t.g, t.m, t.b, t.a).expect("roles of A and M can be exchanged");
    assert!(swapped.m_is_normal() && swapped.a_meets_b_trivially());
    swapped
}

/// Brace on `M` (indexed by position in `M`'s element list) with
/// `m∘m' = γ⁻¹(γ(m)γ(m'))`, where `γ(m)` is the unique `a ∈ A` with `ma ∈ B`.
pub fn sysak_brace(t: &TriplyFactorizedGroup) -> Result<SkewBrace, ConstructionError> {
    if !t.m_is_normal() {
        return Err(ConstructionError::NotTriplyFactorized("M is not normal".into()));
    }
    if !t.a_meets_b_trivially() {
        return Err(ConstructionError::NotTriplyFactorized("A ∩ B is nontrivial".into()));
    }
    let g = &t.g;
    let in_b = t.b.membership(g.order());
    let ms = t.m.elements();
    let k = ms.len();
    let mut gamma = vec![0; k];
    for (i, &m) in ms.iter().enumerate() {
        let hits: Vec<usize> = t.a.elements().iter().copied().filter(|&a| in_b[g.mul(m, a)]).collect();
        if hits.len() != 1 {
            return Err(ConstructionError::GammaUndefined(m));
        }
        gamma[i] = hits[0];
    }
    let mut gamma_inv = vec![usize::MAX; g.order()];
    for (i, &a) in gamma.iter().enumerate() {
        if gamma_inv[a] != usize::MAX {
            return Err(ConstructionError::GammaUndefined(ms[i]));
        }
        gamma_inv[a] = i;
    }
    let (add, _) = t.m.as_group(g);
    let mul = FiniteGroup::from_fn(k, |i, j| gamma_inv[g.mul(gamma[i], gamma[j])])?;
    let brace = SkewBrace::new(add, mul)?;
    // Δ: Γ(M) → G, (m, x) ↦ m·γ(x) must be an isomorphism
    let crossed = brace.crossed_group();
    let delta: Vec<usize> = (0..k * k).map(|p| g.mul(ms[p / k], gamma[p % k])).collect();
    assert!(perm::is_permutation(&delta) || k * k != g.order(), "Δ is not bijective");
    if k * k == g.order() {
        for p in 0..k * k {
            for q in 0..k * k {
                assert_eq!(delta[crossed.mul(p, q)], g.mul(delta[p], delta[q]), "Δ is not a homomorphism");
            }
        }
    }
    Ok(brace)
}

/// Matched pair of braces: `α: Mul(A) → Aut(B,·)`, `β: Mul(B) → Aut(A,·)`.
#[derive(Clone, Debug)]
pub struct MatchedPairBraces {
    pub a: SkewBrace,
    pub b: SkewBrace,
    pub alpha: Vec<Vec<usize>>,
    pub beta: Vec<Vec<usize>>,
}

impl MatchedPairBraces {
    pub fn new(a: SkewBrace, b: SkewBrace, alpha: Vec<Vec<usize>>, beta: Vec<Vec<usize>>) -> Result<Self, ConstructionError> {
        let p = MatchedPairBraces { a, b, alpha, beta };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), ConstructionError> {
        let (a, b) = (&self.a, &self.b);
        let (na, nb) = (a.order(), b.order());
        let fail = |tag: &'static str, w: String| Err(ConstructionError::CompatibilityFailure { tag, witness: w });
        if self.alpha.len() != na || self.beta.len() != nb {
            return fail("shape", "one map per element is required".into());
        }
        if let Some(x) = (0..na).find(|&x| !check_automorphism(b.add_group(), &self.alpha[x])) {
            return fail("alpha automorphism", format!("a={x}"));
        }
        if let Some(y) = (0..nb).find(|&y| !check_automorphism(a.add_group(), &self.beta[y])) {
            return fail("beta automorphism", format!("b={y}"));
        }
        for x in 0..na {
            for y in 0..na {
                if self.alpha[a.circ(x, y)] != perm::after(&self.alpha[x], &self.alpha[y]) {
                    return fail("alpha homomorphism", format!("a={x}, a'={y}"));
                }
            }
        }
        for x in 0..nb {
            for y in 0..nb {
                if self.beta[b.circ(x, y)] != perm::after(&self.beta[x], &self.beta[y]) {
                    return fail("beta homomorphism", format!("b={x}, b'={y}"));
                }
            }
        }
        let alpha_inv: Vec<Vec<usize>> = self.alpha.iter().map(|f| perm::inverse(f)).collect();
        let beta_inv: Vec<Vec<usize>> = self.beta.iter().map(|f| perm::inverse(f)).collect();
        for x in 0..na {
            for y in 0..nb {
                // λ^A_a β_b = β_{α_a(b)} λ^A_{β⁻¹_{α_a(b)}(a)}
                let ab = self.alpha[x][y];
                let l = beta_inv[ab][x];
                if (0..na).any(|t| a.lambda(x, self.beta[y][t]) != self.beta[ab][a.lambda(l, t)]) {
                    return fail("matched braces (1)", format!("a={x}, b={y}"));
                }
                // λ^B_b α_a = α_{β_b(a)} λ^B_{α⁻¹_{β_b(a)}(b)}
                let ba = self.beta[y][x];
                let l = alpha_inv[ba][y];
                if (0..nb).any(|t| b.lambda(y, self.alpha[x][t]) != self.alpha[ba][b.lambda(l, t)]) {
                    return fail("matched braces (2)", format!("a={x}, b={y}"));
                }
            }
        }
        Ok(())
    }
}

/// Brace on `A × B` (index `a·|B| + b`) with componentwise `·` and
/// `(a,b)∘(a',b') = (β_b(β_b⁻¹(a)∘a'), α_a(α_a⁻¹(b)∘b'))`.
pub fn matched_pair_biproduct_braces(p: &MatchedPairBraces) -> Result<SkewBrace, ConstructionError> {
    let (a, b) = (&p.a, &p.b);
    let (na, nb) = (a.order(), b.order());
    let alpha_inv: Vec<Vec<usize>> = p.alpha.iter().map(|f| perm::inverse(f)).collect();
    let beta_inv: Vec<Vec<usize>> = p.beta.iter().map(|f| perm::inverse(f)).collect();
    for x in 0..na {
        for y in 0..nb {
            for t in 0..nb {
                // α_a(α_a⁻¹(b)∘y) = b∘α_{β_b⁻¹(a)}(y)
                let lhs = p.alpha[x][b.circ(alpha_inv[x][y], t)];
                let rhs = b.circ(y, p.alpha[beta_inv[y][x]][t]);
                if lhs != rhs {
                    return Err(ConstructionError::CompatibilityFailure { tag: "alpha identity", witness: format!("a={x}, b={y}, y={t}") });
                }
            }
            for t in 0..na {
                let lhs = p.beta[y][a.circ(beta_inv[y][x], t)];
                let rhs = a.circ(x, p.beta[alpha_inv[x][y]][t]);
                if lhs != rhs {
                    return Err(ConstructionError::CompatibilityFailure { tag: "beta identity", witness: format!("a={x}, b={y}, x={t}") });
                }
            }
        }
    }
    let add = a.add_group().direct_product(b.add_group());
    let mul = FiniteGroup::from_fn(na * nb, |u, v| {
        let (x, y, x2, y2) = (u / nb, u % nb, v / nb, v % nb);
        let first = p.beta[y][a.circ(beta_inv[y][x], x2)];
        let second = p.alpha[x][b.circ(alpha_inv[x][y], y2)];
        first * nb + second
    })
    .map_err(|e| ConstructionError::CompatibilityFailure { tag: "multiplicative group", witness: e.to_string() })?;
    SkewBrace::new(add, mul).map_err(|e| ConstructionError::CompatibilityFailure { tag: "brace compatibility", witness: e.to_string() })
}

/// Every lawful `(α, β)` between two braces, by exhaustive search over
/// homomorphisms into the additive automorphism groups.
pub fn lawful_matched_pairs(a: &SkewBrace, b: &SkewBrace) -> Vec<MatchedPairBraces> {
    let aut_b = automorphism_group(b.add_group());
    let aut_a = automorphism_group(a.add_group());
    let alphas = homomorphisms(a.mul_group(), &aut_b.as_group());
    let betas = homomorphisms(b.mul_group(), &aut_a.as_group());
    let mut out = Vec::new();
    for al in &alphas {
        let alpha: Vec<Vec<usize>> = al.map().iter().map(|&i| aut_b.map(i).to_vec()).collect();
        for be in &betas {
            let beta: Vec<Vec<usize>> = be.map().iter().map(|&i| aut_a.map(i).to_vec()).collect();
            if let Ok(p) = MatchedPairBraces::new(a.clone(), b.clone(), alpha.clone(), beta) {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::brace_isomorphism;
    use crate::gallery;

    #[test]
    fn trivial_factorization() {
        let g = gallery::s3();
        let f = ExactFactorization::new(g.clone(), Subgroup::whole(&g), Subgroup::trivial()).unwrap();
        let b = brace_from_exact_factorization(&f).unwrap();
        assert!(b.is_trivial());
    }

    #[test]
    fn s3_factorization_gives_c6() {
        let g = gallery::s3();
        let a3 = Subgroup::generated(&g, &[(0..6).find(|&x| g.element_order(x) == 3).unwrap()]);
        let t = Subgroup::generated(&g, &[(0..6).find(|&x| g.element_order(x) == 2).unwrap()]);
        let f = ExactFactorization::new(g.clone(), a3, t).unwrap();
        let b = brace_from_exact_factorization(&f).unwrap();
        assert!(are_isomorphic(b.mul_group(), &FiniteGroup::cyclic(6)).is_some());
        let mp = MatchedPairGroups::from_factorization(&f).unwrap();
        let bp = biproduct_group(&mp).unwrap();
        assert!(brace_isomorphism(&bp, &b).is_some());
    }

    #[test]
    fn not_exact() {
        let g = FiniteGroup::cyclic(4);
        let h = Subgroup::generated(&g, &[2]);
        assert!(matches!(ExactFactorization::new(g.clone(), h.clone(), h), Err(ConstructionError::NotExact(_))));
    }

    #[test]
    fn semidirect_by_inversion() {
        let c2 = SkewBrace::trivial(&FiniteGroup::cyclic(2));
        let c3 = SkewBrace::trivial(&FiniteGroup::cyclic(3));
        let alpha = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let b = semidirect_product_braces(&c2, &c3, &alpha).unwrap();
        assert_eq!(b.order(), 6);
        assert!(!b.mul_group().is_abelian());
        let bad = vec![vec![0, 1, 2], vec![0, 1, 2]];
        assert!(semidirect_product_braces(&c2, &c3, &vec![vec![0, 2, 1], bad[0].clone()]).is_err());
        // the same data as a matched pair with trivial β
        let p = MatchedPairBraces::new(c2.clone(), c3.clone(), alpha, vec![vec![0, 1]; 3]).unwrap();
        let m = matched_pair_biproduct_braces(&p).unwrap();
        assert!(brace_isomorphism(&m, &b).is_some());
    }

    #[test]
    fn wreath_products() {
        let c2 = SkewBrace::trivial(&FiniteGroup::cyclic(2));
        let w = wreath_product(&c2, &c2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(w.order(), 8);
        assert!(w.add_group().is_abelian());
        assert_eq!(w.add_group().exponent(), 2);
        let one = wreath_product(&c2, &c2, &[vec![0], vec![0]]).unwrap();
        assert_eq!(one, direct_product(&c2, &c2));
        let c3 = SkewBrace::trivial(&FiniteGroup::cyclic(3));
        assert_eq!(wreath_product(&c3, &c2, &[vec![0, 1], vec![1, 0]]).unwrap().order(), 18);
        assert!(wreath_product(&c3, &c2, &[vec![1, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn sysak_roundtrip_small() {
        for x in [gallery::s3c6(), gallery::d8q8()] {
            let t = triply_factorized_from_brace(&x);
            assert_eq!(t.g.order(), x.order() * x.order());
            let y = sysak_brace(&normal_triple_from_brace(&x)).unwrap();
            assert_eq!(y, x);
        }
    }

    #[test]
    fn cocycle_roundtrip() {
        let x = gallery::d8q8();
        let c = cocycle_from_brace(&x);
        assert_eq!(brace_from_cocycle(&c).unwrap(), x);
    }
}
