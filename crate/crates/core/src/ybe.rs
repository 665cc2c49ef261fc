//! Set-theoretic solutions of the Yang–Baxter equation.

use rayon::prelude::*;

use crate::brace::SkewBrace;
use crate::perm;

/// `r(x,y) = (σ_x(y), τ_y(x))` on `0..n`; the pair `(x,y)` has index `x·n + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    n: usize,
    sigma: Vec<Vec<usize>>,
    tau: Vec<Vec<usize>>,
    r: Vec<usize>,
}

/// First failure found by [`verify_solution`] for each property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    /// A triple where the braid relation fails.
    pub ybe_failure: Option<(usize, usize, usize)>,
    /// `(true, x)` when `σ_x` is not bijective, `(false, y)` when `τ_y` is not.
    pub degenerate_at: Option<(bool, usize)>,
    /// A pair with `r²(x,y) ≠ (x,y)`.
    pub involutive_failure: Option<(usize, usize)>,
}

impl SolutionReport {
    pub fn ybe(&self) -> bool {
        self.ybe_failure.is_none()
    }

    pub fn nondegenerate(&self) -> bool {
        self.degenerate_at.is_none()
    }

    pub fn involutive(&self) -> bool {
        self.involutive_failure.is_none()
    }
}

impl Solution {
    /// Builds `r` from the two families. `σ_x(y)` is `sigma[x][y]` and `τ_y(x)` is `tau[y][x]`.
    pub fn new(sigma: Vec<Vec<usize>>, tau: Vec<Vec<usize>>) -> Result<Self, String> {
        let n = sigma.len();
        if tau.len() != n || sigma.iter().chain(&tau).any(|p| p.len() != n || p.iter().any(|&v| v >= n)) {
            return Err(format!("families must be {n} maps of {n} points"));
        }
        let mut r = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                r[x * n + y] = sigma[x][y] * n + tau[y][x];
            }
        }
        Ok(Solution { n, sigma, tau, r })
    }

    /// Parses families given in cycle notation over the symbols `1..=n`.
    pub fn from_cycles(n: usize, sigma: &[&str], tau: &[&str]) -> Result<Self, String> {
        let symbols: String = "123456789abcdefghijklmnopqrstuvwxyz".chars().take(n).collect();
        let parse = |v: &[&str]| -> Result<Vec<Vec<usize>>, String> {
            v.iter()
                .map(|c| perm::parse_cycles(c, n, &symbols).map_err(|e| e.to_string()))
                .collect()
        };
        Solution::new(parse(sigma)?, parse(tau)?)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn sigma(&self, x: usize) -> &[usize] {
        &self.sigma[x]
    }

    pub fn tau(&self, y: usize) -> &[usize] {
        &self.tau[y]
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let p = self.r[x * self.n + y];
        (p / self.n, p % self.n)
    }

    /// `r` as a map on pair indices.
    pub fn pair_map(&self) -> &[usize] {
        &self.r
    }

    /// `r(x,y) = (y,x)`.
    pub fn swap(n: usize) -> Self {
        let id: Vec<Vec<usize>> = (0..n).map(|_| (0..n).collect()).collect();
        Solution::new(id.clone(), id).unwrap()
    }
}

/// `r_A(a,b) = (λ_a(b), μ_b(a))`.
///
/// Panics if the result violates the braid relation, non-degeneracy, or
/// `u∘v = a∘b` for `r(a,b) = (u,v)`; any of these indicates an engine bug.
pub fn solution_from_brace(a: &SkewBrace) -> Solution {
    let n = a.order();
    let sigma: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| a.lambda(x, y)).collect()).collect();
    let tau: Vec<Vec<usize>> = (0..n).map(|y| (0..n).map(|x| a.mu(y, x)).collect()).collect();
    let s = Solution::new(sigma, tau).expect("well-formed families");
    for x in 0..n {
        for y in 0..n {
            let (u, v) = s.apply(x, y);
            assert_eq!(a.circ(u, v), a.circ(x, y), "r_A does not preserve the product at ({x}, {y})");
        }
    }
    let report = verify_solution(&s);
    assert!(report.ybe(), "r_A violates the braid relation at {:?}", report.ybe_failure);
    assert!(report.nondegenerate(), "r_A is degenerate at {:?}", report.degenerate_at);
    s
}

pub fn verify_solution(s: &Solution) -> SolutionReport {
    let n = s.n;
    let ybe_failure = (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            for z in 0..n {
                // (r×id)(id×r)(r×id)
                let (a1, b1) = s.apply(x, y);
                let (b2, c2) = s.apply(b1, z);
                let (a3, b3) = s.apply(a1, b2);
                let left = (a3, b3, c2);
                // (id×r)(r×id)(id×r)
                let (y1, z1) = s.apply(y, z);
                let (x2, y2) = s.apply(x, y1);
                let (y3, z3) = s.apply(y2, z1);
                if left != (x2, y3, z3) {
                    return Some((x, y, z));
                }
            }
        }
        None
    });
    let degenerate_at = (0..n)
        .find(|&x| !perm::is_permutation(&s.sigma[x]))
        .map(|x| (true, x))
        .or_else(|| (0..n).find(|&y| !perm::is_permutation(&s.tau[y])).map(|y| (false, y)));
    let mut involutive_failure = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let (u, v) = s.apply(x, y);
            if s.apply(u, v) != (x, y) {
                involutive_failure = Some((x, y));
                break 'outer;
            }
        }
    }
    SolutionReport { ybe_failure, degenerate_at, involutive_failure }
}

/// A bijection `t` with `r(t(x), x) = (t(x), x)` for all `x`, if one exists.
///
/// Candidates `{y : r(y,x) = (y,x)}` are matched to points by augmenting paths.
pub fn is_biquandle(s: &Solution) -> Option<Vec<usize>> {
    let n = s.n;
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| s.apply(y, x) == (y, x)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(x: usize, cands: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &y in &cands[x] {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            if owner[y].is_none_or(|x2| augment(x2, cands, owner, seen)) {
                owner[y] = Some(x);
                return true;
            }
        }
        false
    }
    for x in 0..n {
        let mut seen = vec![false; n];
        if !augment(x, &candidates, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut t = vec![0; n];
    for (y, x) in owner.iter().enumerate() {
        t[x.unwrap()] = y;
    }
    Some(t)
}

/// Order of `r` as a permutation of `X × X`; `None` when `r` is not bijective.
pub fn solution_order(s: &Solution) -> Option<usize> {
    if perm::is_permutation(&s.r) {
        Some(perm::order(&s.r))
    } else {
        None
    }
}

/// Exponent of `Add/Z(Add)`.
pub fn depth(a: &SkewBrace) -> usize {
    let g = a.add_group();
    let center = g.center();
    let mut d = 1;
    for x in g.elements() {
        let (mut y, mut k) = (x, 1);
        while !center.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        d = perm::lcm(d, k);
    }
    d
}

/// A bijection `f` of points with `(f×f)∘r = r'∘(f×f)`, if one exists.
pub fn solution_isomorphism(s: &Solution, t: &Solution) -> Option<Vec<usize>> {
    let n = s.n;
    if t.n != n {
        return None;
    }
    let key = |sol: &Solution, x: usize| -> (Vec<usize>, Vec<usize>, usize) {
        let mut a = perm::cycle_lengths(&sol.sigma[x]);
        let mut b = perm::cycle_lengths(&sol.tau[x]);
        a.sort_unstable();
        b.sort_unstable();
        let fixed = (0..n).filter(|&y| sol.apply(x, y) == (x, y)).count();
        (a, b, fixed)
    };
    let ks: Vec<_> = (0..n).map(|x| key(s, x)).collect();
    let kt: Vec<_> = (0..n).map(|x| key(t, x)).collect();
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    iso_search(s, t, &ks, &kt, &mut f, &mut used)
}

type PointKey = (Vec<usize>, Vec<usize>, usize);

fn iso_search(
    s: &Solution,
    t: &Solution,
    ks: &[PointKey],
    kt: &[PointKey],
    f: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<Vec<usize>> {
    let n = s.n;
    let Some(x) = (0..n).find(|&x| f[x] == usize::MAX) else {
        return Some(f.clone());
    };
    for y in 0..n {
        if used[y] || ks[x] != kt[y] {
            continue;
        }
        let (saved_f, saved_used) = (f.clone(), used.clone());
        if assign_and_propagate(s, t, f, used, x, y) {
            if let Some(r) = iso_search(s, t, ks, kt, f, used) {
                return Some(r);
            }
        }
        *f = saved_f;
        *used = saved_used;
    }
    None
}

/// Sets `f(x) = y` and closes under the forced images `f(σ_a(b)) = σ'_{f a}(f b)`
/// and `f(τ_b(a)) = τ'_{f b}(f a)`. Returns `false` on a contradiction.
fn assign_and_propagate(s: &Solution, t: &Solution, f: &mut [usize], used: &mut [bool], x: usize, y: usize) -> bool {
    let n = s.n;
    let mut pending = vec![(x, y)];
    while let Some((p, q)) = pending.pop() {
        if f[p] != usize::MAX {
            if f[p] != q {
                return false;
            }
            continue;
        }
        if used[q] {
            return false;
        }
        f[p] = q;
        used[q] = true;
        for a in 0..n {
            if f[a] == usize::MAX {
                continue;
            }
            for (u, v) in [(a, p), (p, a)] {
                let (su, tv) = s.apply(u, v);
                let (tu, tt) = t.apply(f[u], f[v]);
                pending.push((su, tu));
                pending.push((tv, tt));
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn swap_is_everything() {
        let s = Solution::swap(4);
        let rep = verify_solution(&s);
        assert!(rep.ybe() && rep.nondegenerate() && rep.involutive());
        assert_eq!(is_biquandle(&s).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(solution_order(&s), Some(2));
    }

    #[test]
    fn almost_trivial_s3() {
        let g = gallery::s3();
        let b = SkewBrace::almost_trivial(&g);
        let s = solution_from_brace(&b);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(s.apply(x, y), (g.conjugate(y, x), x));
            }
        }
        assert_eq!(solution_order(&s), Some(12));
        assert_eq!(depth(&b), 6);
    }

    #[test]
    fn four_point_solution() {
        let sigma = vec!["(12)"; 4];
        let tau = vec!["(34)"; 4];
        let s = Solution::from_cycles(4, &sigma, &tau).unwrap();
        let rep = verify_solution(&s);
        assert!(rep.ybe() && rep.nondegenerate());
        assert!(!rep.involutive());
    }

    #[test]
    fn isomorphism_of_relabeled_solution() {
        let s = solution_from_brace(&gallery::s3c6());
        let p = vec![3, 1, 5, 0, 2, 4];
        let pinv = perm::inverse(&p);
        let sigma = (0..6).map(|x| (0..6).map(|y| p[s.sigma(pinv[x])[pinv[y]]]).collect()).collect();
        let tau = (0..6).map(|y| (0..6).map(|x| p[s.tau(pinv[y])[pinv[x]]]).collect()).collect();
        let t = Solution::new(sigma, tau).unwrap();
        let f = solution_isomorphism(&s, &t).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let (u, v) = s.apply(x, y);
                assert_eq!(t.apply(f[x], f[y]), (f[u], f[v]));
            }
        }
    }
}
