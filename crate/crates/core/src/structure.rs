//! Ideals, socle, socle series, simplicity and Sylow sub-braces.

use std::fmt;

use crate::brace::{brace_isomorphism, SkewBrace};
use crate::error::BraceError;
use crate::group::Subgroup;
use crate::ybe;

/// Why a subset fails to be an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealFailure {
    NotMulSubgroup,
    NotMulNormal { element: usize, conjugator: usize },
    /// `aI ≠ Ia` in the additive group.
    NotAddNormal { a: usize },
    /// `λ_a(x) ∉ I`.
    NotLambdaInvariant { a: usize, x: usize },
}

impl fmt::Display for IdealFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealFailure::NotMulSubgroup => write!(f, "not a subgroup of the multiplicative group"),
            IdealFailure::NotMulNormal { element, conjugator } => {
                write!(f, "not normal in the multiplicative group ({element} conjugated by {conjugator})")
            }
            IdealFailure::NotAddNormal { a } => write!(f, "aI != Ia for a = {a}"),
            IdealFailure::NotLambdaInvariant { a, x } => write!(f, "lambda_{a}({x}) leaves the subset"),
        }
    }
}

pub fn check_ideal(a: &SkewBrace, elements: &[usize]) -> Result<(), IdealFailure> {
    let n = a.order();
    let sub = Subgroup::new(a.mul_group(), elements).map_err(|_| IdealFailure::NotMulSubgroup)?;
    let member = sub.membership(n);
    for &x in sub.elements() {
        for c in 0..n {
            if !member[a.mul_group().conjugate(x, c)] {
                return Err(IdealFailure::NotMulNormal { element: x, conjugator: c });
            }
        }
    }
    for y in 0..n {
        // aI = Ia holds iff a⁻¹ x a ∈ I for all x ∈ I
        if sub.elements().iter().any(|&x| !member[a.add_group().conjugate(x, y)]) {
            return Err(IdealFailure::NotAddNormal { a: y });
        }
        if let Some(&x) = sub.elements().iter().find(|&&x| !member[a.lambda(y, x)]) {
            return Err(IdealFailure::NotLambdaInvariant { a: y, x });
        }
    }
    Ok(())
}

pub fn is_ideal(a: &SkewBrace, elements: &[usize]) -> bool {
    check_ideal(a, elements).is_ok()
}

/// All ideals, sorted by size then lexicographically.
pub fn all_ideals(a: &SkewBrace) -> Vec<Subgroup> {
    a.mul_normal_subgroups()
        .into_iter()
        .filter(|s| is_ideal(a, s.elements()))
        .collect()
}

pub fn is_simple(a: &SkewBrace) -> bool {
    a.order() > 1 && all_ideals(a).len() == 2
}

/// `{a : a∘b = ab and b(b∘a) = (b∘a)b for all b}`.
pub fn socle_by_definition(a: &SkewBrace) -> Subgroup {
    let n = a.order();
    let elems = (0..n)
        .filter(|&x| {
            (0..n).all(|b| {
                let ba = a.circ(b, x);
                a.circ(x, b) == a.add(x, b) && a.add(b, ba) == a.add(ba, b)
            })
        })
        .collect();
    Subgroup::from_sorted_unchecked(elems)
}

/// `ker λ ∩ Z(A,·)`.
pub fn socle_kernel_center(a: &SkewBrace) -> Subgroup {
    let n = a.order();
    let center = a.add_group().center();
    let elems = (0..n)
        .filter(|&x| center.contains(x) && (0..n).all(|b| a.lambda(x, b) == b))
        .collect();
    Subgroup::from_sorted_unchecked(elems)
}

/// The socle, computed both ways; panics if they disagree.
pub fn socle(a: &SkewBrace) -> Subgroup {
    let s = socle_by_definition(a);
    assert_eq!(s, socle_kernel_center(a), "socle descriptions disagree");
    s
}

#[derive(Clone, Debug)]
pub struct SocleSeries {
    /// `A_1 = A, A_{k+1} = A_k / Soc(A_k)`, stopping at one element or a trivial socle.
    pub quotients: Vec<SkewBrace>,
    /// `S_k(A)` as the kernel of `A → A_{k+1}`, for each computed step.
    pub s_chain: Vec<Subgroup>,
    /// Least `k` with `|A_k| = 1`.
    pub level: Option<usize>,
}

pub fn socle_series(a: &SkewBrace) -> SocleSeries {
    let n = a.order();
    let mut quotients = vec![a.clone()];
    let mut s_chain = Vec::new();
    let mut proj: Vec<usize> = (0..n).collect();
    loop {
        let current = quotients.last().unwrap();
        if current.order() == 1 {
            let level = quotients.len();
            return SocleSeries { quotients, s_chain, level: Some(level) };
        }
        let soc = socle(current);
        if soc.order() == 1 {
            return SocleSeries { quotients, s_chain, level: None };
        }
        let (next, p) = current.quotient(soc.elements()).expect("socle is an ideal");
        proj = proj.iter().map(|&x| p[x]).collect();
        s_chain.push(Subgroup::from_sorted_unchecked((0..n).filter(|&x| proj[x] == 0).collect()));
        quotients.push(next);
    }
}

pub fn multipermutation_level(a: &SkewBrace) -> Option<usize> {
    socle_series(a).level
}

/// `S_{k+1}(A) = {a : (a∘b)⁻¹ab ∈ S_k, [b, b∘a] ∈ S_k for all b}` from `S_1 = Soc(A)`,
/// computed directly until it stabilizes.
pub fn s_chain_direct(a: &SkewBrace) -> Vec<Subgroup> {
    let n = a.order();
    let g = a.add_group();
    let mut chain = vec![socle(a)];
    loop {
        let last = chain.last().unwrap();
        let next: Vec<usize> = (0..n)
            .filter(|&x| {
                (0..n).all(|b| {
                    let t = g.mul(g.inv(a.circ(x, b)), g.mul(x, b));
                    last.contains(t) && last.contains(g.commutator(b, a.circ(b, x)))
                })
            })
            .collect();
        if next.len() == last.order() {
            return chain;
        }
        chain.push(Subgroup::from_sorted_unchecked(next));
    }
}

#[derive(Clone, Debug)]
pub struct SylowSubBrace {
    pub prime: usize,
    pub elements: Vec<usize>,
    pub brace: SkewBrace,
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The Sylow subgroups of a nilpotent additive group, each verified as a sub-brace.
///
/// Products over every subset of primes are verified as sub-braces too.
pub fn sylow_subbraces(a: &SkewBrace) -> Result<Vec<SylowSubBrace>, BraceError> {
    let g = a.add_group();
    if !g.is_nilpotent() {
        return Err(BraceError::AddNotNilpotent);
    }
    let primes = prime_factors(a.order());
    let orders = g.element_orders();
    let only = |mask: usize| -> Vec<usize> {
        (0..a.order())
            .filter(|&x| {
                prime_factors(orders[x])
                    .iter()
                    .all(|p| primes.iter().position(|q| q == p).is_some_and(|i| mask & (1 << i) != 0))
            })
            .collect()
    };
    for mask in 1..(1usize << primes.len()) {
        a.sub_brace(&only(mask))?;
    }
    primes
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let elements = only(1 << i);
            let (brace, _) = a.sub_brace(&elements)?;
            Ok(SylowSubBrace { prime: p, elements, brace })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Vacuous,
    Fail(String),
}

#[derive(Clone, Debug)]
pub struct StructuralReport {
    pub checks: Vec<(&'static str, CheckOutcome)>,
}

impl StructuralReport {
    pub fn failures(&self) -> Vec<(&'static str, String)> {
        self.checks
            .iter()
            .filter_map(|(name, o)| match o {
                CheckOutcome::Fail(msg) => Some((*name, msg.clone())),
                _ => None,
            })
            .collect()
    }

    pub fn outcome(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|(n, _)| *n == name).map(|(_, o)| o)
    }
}

fn implication(hypothesis: bool, conclusion: impl FnOnce() -> Result<(), String>) -> CheckOutcome {
    if !hypothesis {
        return CheckOutcome::Vacuous;
    }
    match conclusion() {
        Ok(()) => CheckOutcome::Pass,
        Err(m) => CheckOutcome::Fail(m),
    }
}

/// Evaluates the structural implications on one brace.
pub fn structural_theorem_checks(a: &SkewBrace) -> StructuralReport {
    let g = a.add_group();
    let nilpotent = g.is_nilpotent();
    let level = multipermutation_level(a);
    let mut checks = Vec::new();

    checks.push((
        "sylow subgroups are sub-braces",
        implication(nilpotent, || sylow_subbraces(a).map(|_| ()).map_err(|e| e.to_string())),
    ));
    checks.push((
        "nilpotent additive group gives solvable multiplicative group",
        implication(nilpotent, || {
            if a.mul_group().is_solvable() {
                Ok(())
            } else {
                Err("multiplicative group is not solvable".into())
            }
        }),
    ));
    checks.push((
        "finite multipermutation level gives nilpotent additive group",
        implication(level.is_some(), || if nilpotent { Ok(()) } else { Err("additive group is not nilpotent".into()) }),
    ));
    let soc = socle(a);
    let index = a.order() / soc.order();
    checks.push((
        "power map by the socle index is additive",
        implication(true, || {
            let n = a.order();
            for x in 0..n {
                for y in 0..n {
                    let lhs = g.pow(g.mul(x, y), index as i64);
                    if lhs != g.mul(g.pow(x, index as i64), g.pow(y, index as i64)) {
                        return Err(format!("(xy)^{index} != x^{index} y^{index} at ({x}, {y})"));
                    }
                }
            }
            Ok(())
        }),
    ));
    checks.push((
        "multiplicative group factors through Sylow sub-braces",
        implication(nilpotent && prime_factors(a.order()).len() > 1, || sylow_factorization(a)),
    ));
    let doubles = a.order() <= 16 && crate::constructions::double_condition(a).is_ok();
    checks.push((
        "double of a finite-level brace has finite level",
        implication(doubles && level.is_some(), || {
            let d = crate::constructions::double(a).map_err(|e| e.to_string())?;
            if multipermutation_level(&d).is_some() {
                Ok(())
            } else {
                Err("the double has no finite multipermutation level".into())
            }
        }),
    ));
    StructuralReport { checks }
}

/// With `B` a Sylow sub-brace and `C` the product of the others, every element is
/// uniquely `b∘c`.
fn sylow_factorization(a: &SkewBrace) -> Result<(), String> {
    let n = a.order();
    let g = a.add_group();
    let orders = g.element_orders();
    for p in prime_factors(n) {
        let b: Vec<usize> = (0..n).filter(|&x| prime_factors(orders[x]).iter().all(|&q| q == p)).collect();
        let c: Vec<usize> = (0..n).filter(|&x| orders[x] % p != 0).collect();
        let mut hit = vec![false; n];
        for &x in &b {
            for &y in &c {
                let z = a.circ(x, y);
                if hit[z] {
                    return Err(format!("{z} has two factorizations for p = {p}"));
                }
                hit[z] = true;
            }
        }
        if hit.iter().any(|h| !h) {
            return Err(format!("Mul(A) != Mul(B)∘Mul(C) for p = {p}"));
        }
    }
    Ok(())
}

/// One-line summary: size, types, socle, level, simplicity, two-sidedness, depth, order of r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceSummary {
    pub order: usize,
    pub socle: usize,
    pub level: Option<usize>,
    pub simple: bool,
    pub two_sided: bool,
    pub depth: usize,
    pub solution_order: usize,
}

pub fn summarize(a: &SkewBrace) -> BraceSummary {
    let s = ybe::solution_from_brace(a);
    BraceSummary {
        order: a.order(),
        socle: socle(a).order(),
        level: multipermutation_level(a),
        simple: is_simple(a),
        two_sided: a.is_two_sided(),
        depth: ybe::depth(a),
        solution_order: ybe::solution_order(&s).expect("r_A is bijective"),
    }
}

impl BraceSummary {
    pub fn line(&self, add_type: &str, mul_type: &str) -> String {
        let level = self.level.map_or("inf".to_string(), |l| l.to_string());
        format!(
            "order={} add={} mul={} soc={} mpl={} simple={} two_sided={} depth={} ord_r={}",
            self.order, add_type, mul_type, self.socle, level, self.simple, self.two_sided, self.depth, self.solution_order
        )
    }
}

/// Checks `A/S_k ≅ A_{k+1}` for every step of the socle series.
pub fn check_s_chain(a: &SkewBrace) -> Result<(), String> {
    let series = socle_series(a);
    let direct = s_chain_direct(a);
    for (k, s) in series.s_chain.iter().enumerate() {
        if direct.get(k) != Some(s) {
            return Err(format!("S_{} differs between the series and the direct formula", k + 1));
        }
        let (q, _) = a.quotient(s.elements()).map_err(|e| e.to_string())?;
        if brace_isomorphism(&q, &series.quotients[k + 1]).is_none() {
            return Err(format!("A/S_{} is not isomorphic to A_{}", k + 1, k + 2));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::group::FiniteGroup;

    #[test]
    fn trivial_braces() {
        let one = SkewBrace::trivial(&FiniteGroup::trivial());
        assert_eq!(multipermutation_level(&one), Some(1));
        let c4 = SkewBrace::trivial(&FiniteGroup::cyclic(4));
        assert_eq!(socle(&c4).order(), 4);
        assert!(!is_simple(&c4));
        assert_eq!(all_ideals(&c4).len(), 3);
        let c5 = SkewBrace::trivial(&FiniteGroup::cyclic(5));
        assert!(is_simple(&c5));
    }

    #[test]
    fn d8q8_series() {
        let a = gallery::d8q8();
        assert_eq!(socle(&a).order(), 2);
        let s = socle_series(&a);
        assert_eq!(s.level, Some(3));
        assert!(s.quotients[1].is_trivial());
        assert_eq!(s.quotients[1].order(), 4);
        check_s_chain(&a).unwrap();
        let r = structural_theorem_checks(&a);
        assert!(r.failures().is_empty(), "{:?}", r.failures());
        assert_eq!(r.outcome("power map by the socle index is additive"), Some(&CheckOutcome::Pass));
    }

    #[test]
    fn a4_brace_is_simple() {
        let a = gallery::a4_brace();
        assert!(is_simple(&a));
        assert_eq!(socle(&a).order(), 1);
        assert_eq!(multipermutation_level(&a), None);
    }

    #[test]
    fn sylow_of_trivial_c6() {
        let a = SkewBrace::trivial(&FiniteGroup::cyclic(6));
        let s = sylow_subbraces(&a).unwrap();
        let orders: Vec<usize> = s.iter().map(|x| x.brace.order()).collect();
        assert_eq!(orders, vec![2, 3]);
        assert_eq!(sylow_subbraces(&gallery::s3c6()).unwrap_err(), BraceError::AddNotNilpotent);
    }
}
