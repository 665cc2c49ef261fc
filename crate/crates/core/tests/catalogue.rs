use braceforge::catalogue::{self, MAX_ORDER};
use braceforge::group::{are_isomorphic, automorphism_group};

/// Number of groups of order n, n = 1..=31.
const GROUP_COUNTS: [usize; 31] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1];

#[test]
fn every_order_is_complete_and_irredundant() {
    for n in 1..=MAX_ORDER {
        let cat = catalogue::groups_of_order(n).unwrap();
        assert_eq!(cat.len(), GROUP_COUNTS[n - 1], "order {n}");
        for (i, a) in cat.iter().enumerate() {
            assert_eq!(a.group.order(), n);
            assert!(a.group.check_associativity().is_ok(), "{}", a.name);
            for b in &cat[..i] {
                assert!(are_isomorphic(&a.group, &b.group).is_none(), "{} ≅ {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn automorphism_orders_of_table_groups() {
    let orders = |n| -> Vec<usize> { catalogue::groups_of_order(n).unwrap().iter().map(|e| automorphism_group(&e.group).len()).collect() };
    assert_eq!(orders(8), [4, 8, 8, 24, 168]);
    assert_eq!(orders(12), [12, 4, 24, 12, 12]);
}

#[test]
fn identify_recovers_each_entry() {
    for n in [8, 12, 16, 24] {
        let cat = catalogue::groups_of_order(n).unwrap();
        for (i, e) in cat.iter().enumerate() {
            let shuffled = e.group.relabel(&(0..n).map(|x| if x == 0 { 0 } else { n - x }).collect::<Vec<_>>());
            assert_eq!(catalogue::identify(&cat, &shuffled), Some(i), "{}", e.name);
        }
    }
}
