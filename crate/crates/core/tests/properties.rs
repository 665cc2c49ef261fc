mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use braceforge::constructions::{self, direct_product};
use braceforge::equivalences::{brace_from_cycle_set, brace_from_matched_pair, cycle_set_from_brace, matched_pair_from_brace};
use braceforge::rings::NilpotentAlgebra;
use braceforge::{brace_isomorphism, io, perm, structure, verify_skew_brace, ybe, SkewBrace};

fn corpus() -> &'static [common::CensusBrace] {
    static CORPUS: OnceLock<Vec<common::CensusBrace>> = OnceLock::new();
    CORPUS.get_or_init(|| common::braces_up_to(12))
}

fn brace_index() -> impl Strategy<Value = usize> {
    0..corpus().len()
}

/// A permutation of `0..n` fixing 0.
fn relabeling(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|rest| {
        let mut p = vec![0];
        p.extend(rest);
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeled_brace_is_isomorphic((i, p) in brace_index().prop_flat_map(|i| (Just(i), relabeling(corpus()[i].order)))) {
        let b = &corpus()[i].brace;
        let r = b.relabel(&p);
        let v = verify_skew_brace(&r.add_group().table_rows(), &r.mul_group().table_rows()).unwrap();
        let iso = brace_isomorphism(b, &v).expect("relabeling is an isomorphism");
        for x in 0..b.order() {
            for y in 0..b.order() {
                prop_assert_eq!(iso[b.add(x, y)], v.add(iso[x], iso[y]));
                prop_assert_eq!(iso[b.circ(x, y)], v.circ(iso[x], iso[y]));
            }
        }
    }

    #[test]
    fn lambda_is_an_action_by_automorphisms(i in brace_index(), x in 0usize..12, y in 0usize..12, z in 0usize..12) {
        let b = &corpus()[i].brace;
        let n = b.order();
        let (x, y, z) = (x % n, y % n, z % n);
        prop_assert_eq!(b.lambda(b.circ(x, y), z), b.lambda(x, b.lambda(y, z)));
        prop_assert_eq!(b.lambda(x, b.add(y, z)), b.add(b.lambda(x, y), b.lambda(x, z)));
        // a∘b = a·λ_a(b)
        prop_assert_eq!(b.circ(x, y), b.add(x, b.lambda(x, y)));
    }

    #[test]
    fn brace_files_roundtrip(i in brace_index()) {
        let b = &corpus()[i].brace;
        let (add, mul) = io::parse_brace(&io::format_brace(b)).unwrap();
        prop_assert_eq!(&verify_skew_brace(&add, &mul).unwrap(), b);
        let s = ybe::solution_from_brace(b);
        prop_assert_eq!(io::parse_solution(&io::format_solution(&s)).unwrap(), s);
    }

    #[test]
    fn equivalences_roundtrip(i in brace_index()) {
        let b = &corpus()[i].brace;
        prop_assert_eq!(&brace_from_cycle_set(&cycle_set_from_brace(b)).unwrap(), b);
        prop_assert_eq!(&brace_from_matched_pair(&matched_pair_from_brace(b)).unwrap(), b);
    }

    #[test]
    fn socle_is_an_ideal_in_the_kernel_of_lambda(i in brace_index()) {
        let b = &corpus()[i].brace;
        let soc = structure::socle(b);
        prop_assert!(structure::is_ideal(b, soc.elements()));
        for &s in soc.elements() {
            prop_assert!((0..b.order()).all(|t| b.lambda(s, t) == t));
        }
    }

    #[test]
    fn direct_products_of_small_braces_verify(i in 0usize..20, j in 0usize..20) {
        let (a, b) = (&corpus()[i].brace, &corpus()[j].brace);
        let p = direct_product(a, b);
        prop_assert_eq!(p.order(), a.order() * b.order());
        let v = verify_skew_brace(&p.add_group().table_rows(), &p.mul_group().table_rows());
        prop_assert!(v.is_ok());
        prop_assert_eq!(p.is_classical(), a.is_classical() && b.is_classical());
    }

    #[test]
    fn permutation_inverse_and_order(p in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let id: Vec<usize> = (0..9).collect();
        prop_assert_eq!(perm::compose(&p, &perm::inverse(&p)), id.clone());
        let k = perm::order(&p);
        let mut q = id.clone();
        for _ in 0..k {
            q = perm::compose(&q, &p);
        }
        prop_assert_eq!(q, id);
        let lens = perm::cycle_lengths(&p);
        prop_assert_eq!(lens.iter().sum::<usize>(), 9);
        prop_assert_eq!(lens.iter().fold(1, |a, &b| perm::lcm(a, b)), k);
    }

    #[test]
    fn circle_operation_is_a_group_law(x in 0usize..8, y in 0usize..8, z in 0usize..8) {
        let alg = NilpotentAlgebra::truncated_polynomial(2, 3).unwrap();
        prop_assert_eq!(alg.circle(alg.circle(x, y), z), alg.circle(x, alg.circle(y, z)));
        prop_assert_eq!(alg.circle(x, 0), x);
        prop_assert!((0..8).any(|w| alg.circle(x, w) == 0));
        // x∘y = x + y + xy
        prop_assert_eq!(alg.circle(x, y), alg.plus(alg.plus(x, y), alg.times(x, y)));
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct((i, j) in (0usize..12, 0usize..12)) {
        let (a, b): (&SkewBrace, &SkewBrace) = (&corpus()[i].brace, &corpus()[j].brace);
        let id: Vec<Vec<usize>> = (0..a.order()).map(|_| (0..b.order()).collect()).collect();
        let s = constructions::semidirect_product_braces(a, b, &id).unwrap();
        prop_assert_eq!(s, direct_product(a, b));
    }
}
