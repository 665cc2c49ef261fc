use braceforge::constructions::{brace_from_exact_factorization, sysak_brace};
use braceforge::rings::{self, FiniteRing, NilpotentAlgebra};
use braceforge::{structure, verify_skew_brace, RingError};

/// `R = [[N, N], [0, 0]]` for `N = tF_2[t]/(t^3)`. The corner `{(0, b)}` is a
/// two-sided ideal, the diagonal `{(a, a)}` only a left ideal.
#[test]
fn ring_triple_from_upper_matrix_ring() {
    let alg = NilpotentAlgebra::truncated_polynomial(2, 2).unwrap();
    let n = alg.nil_ring();
    let k = n.order();
    let r = FiniteRing::upper_matrix_ring(&n, n.add_group(), |a, m| n.times(a, m)).unwrap();
    assert_eq!(r.order(), k * k);
    let s: Vec<usize> = (0..k).map(|a| a * k).collect();
    let i1: Vec<usize> = (0..k).collect();
    let i2: Vec<usize> = (0..k).map(|a| a * k + a).collect();
    assert!(!rings::ring_triple(&r, &s, &i1, &i2).unwrap().m_is_normal());
    let t = rings::ring_triple(&r, &s, &i2, &i1).unwrap();
    assert!(t.m_is_normal());
    assert!(t.a_meets_b_trivially());
    let b = sysak_brace(&t).unwrap();
    assert_eq!(b.order(), k);
    assert!(verify_skew_brace(&b.add_group().table_rows(), &b.mul_group().table_rows()).is_ok());
}

#[test]
fn ring_triple_rejects_a_non_ideal() {
    let alg = NilpotentAlgebra::truncated_polynomial(2, 2).unwrap();
    let n = alg.nil_ring();
    let k = n.order();
    let r = FiniteRing::upper_matrix_ring(&n, n.add_group(), |a, m| n.times(a, m)).unwrap();
    let s: Vec<usize> = (0..k).map(|a| a * k).collect();
    let i1: Vec<usize> = (0..k).collect();
    // S is a subring but not a left ideal
    assert!(rings::ring_triple(&r, &s, &i1, &s).is_err());
}

#[test]
fn noncommutative_free_algebra() {
    let alg = NilpotentAlgebra::truncated_free(2, 2, 2).unwrap();
    assert!(!alg.is_commutative());
    assert!(matches!(rings::poly_brace_additive(&alg), Err(RingError::NotCommutative)));
    let r = alg.nil_ring();
    let all: Vec<usize> = (0..r.order()).collect();
    let b = rings::circle_brace(&r).unwrap();
    assert_eq!(b.order(), 64);
    // x1·x2 != x2·x1, so (R, ∘) is not abelian
    assert!(!b.mul_group().is_abelian());
    assert_eq!(rings::circle_group(&r, &all).unwrap().order(), 64);
}

#[test]
fn circle_brace_from_exact_factorization_of_free_algebra() {
    let alg = NilpotentAlgebra::truncated_free(2, 2, 2).unwrap();
    let r = alg.nil_ring();
    let s = alg.span(&[vec![1, 0, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0], vec![0, 0, 0, 0, 1, 0]]);
    let i = alg.span(&[vec![0, 1, 0, 0, 0, 0], vec![0, 0, 0, 1, 0, 0], vec![0, 0, 0, 0, 0, 1]]);
    let f = rings::ring_exact_factorization(&r, &s, &i).unwrap();
    let b = brace_from_exact_factorization(&f).unwrap();
    assert_eq!(b.order(), 64);
    assert!(structure::socle(&b).order() >= 1);
    // I is not a subring complement of itself
    assert!(rings::ring_exact_factorization(&r, &i, &i).is_err());
}
