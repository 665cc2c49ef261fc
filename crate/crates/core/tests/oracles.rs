//! Brute-force checks of the enumeration against definitions, independent of the
//! λ-map search.

use std::collections::{BTreeSet, HashSet};

use braceforge::catalogue::{self, CatalogueEntry};
use braceforge::enumeration::{self, DEFAULT_ORDER_BOUND};
use braceforge::group::{automorphism_group, FiniteGroup};

type Perm = Vec<usize>;

/// `p` then `q`.
fn then(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

fn closure(gens: &[&Perm]) -> BTreeSet<Perm> {
    let n = gens[0].len();
    let id: Perm = (0..n).collect();
    let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = then(&p, g);
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen
}

/// Every permutation of `0..n` fixing 0, by Heap's algorithm on `1..n`.
fn perms_fixing_zero(n: usize) -> Vec<Perm> {
    let mut a: Perm = (0..n).collect();
    let mut out = vec![a.clone()];
    let k = n.saturating_sub(1);
    let mut c = vec![0; k];
    let mut i = 0;
    while i < k {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            a.swap(1 + j, 1 + i);
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn brute_automorphisms(g: &FiniteGroup) -> usize {
    let n = g.order();
    perms_fixing_zero(n)
        .into_iter()
        .filter(|f| (0..n).all(|a| (0..n).all(|b| f[g.mul(a, b)] == g.mul(f[a], f[b]))))
        .count()
}

#[test]
fn automorphism_counts_by_brute_force() {
    let c2 = FiniteGroup::cyclic(2);
    let c2_3 = c2.direct_product(&c2).direct_product(&c2);
    assert_eq!(brute_automorphisms(&c2_3), 168);
    assert_eq!(automorphism_group(&c2_3).len(), 168);
    for entry in catalogue::groups_of_order(8).unwrap().iter().chain(&catalogue::groups_of_order(6).unwrap()) {
        assert_eq!(brute_automorphisms(&entry.group), automorphism_group(&entry.group).len(), "{}", entry.name);
    }
}

/// Regular subgroups of `Hol(A)`, with `Hol(A)` realised as the permutations
/// `x ↦ a·φ(x)` and subgroups found as closures of pairs. `Aut(A)` itself is
/// checked against brute force above.
fn brute_regular_subgroups(a: &FiniteGroup) -> Vec<BTreeSet<Perm>> {
    let n = a.order();
    let auts: Vec<Perm> = automorphism_group(a).maps().to_vec();
    let hol: Vec<Perm> = (0..n).flat_map(|t| auts.iter().map(move |f| (0..n).map(|x| a.mul(t, f[x])).collect())).collect();
    // elements of a regular subgroup other than 1 have no fixed points
    let fpf: Vec<&Perm> = hol.iter().filter(|p| p.iter().enumerate().all(|(i, &x)| x != i)).collect();
    let mut found: HashSet<BTreeSet<Perm>> = HashSet::new();
    for (i, p) in fpf.iter().enumerate() {
        for q in &fpf[i..] {
            let h = closure(&[p, q]);
            if h.len() == n && h.iter().map(|g| g[0]).collect::<HashSet<_>>().len() == n {
                found.insert(h);
            }
        }
    }
    found.into_iter().collect()
}

fn as_group(set: &BTreeSet<Perm>) -> FiniteGroup {
    let gens: Vec<Perm> = set.iter().cloned().collect();
    FiniteGroup::from_permutations(&gens).0
}

#[test]
fn regular_subgroups_match_brute_force() {
    // orders where every group is generated by two elements
    for n in [4, 6, 9, 10, 12] {
        let cat = catalogue::groups_of_order(n).unwrap();
        for entry in &cat {
            let brute = brute_regular_subgroups(&entry.group);
            let run = enumeration::enumerate_add_type(&entry.group, &cat, DEFAULT_ORDER_BOUND).unwrap();
            assert_eq!(run.records.len(), brute.len(), "order {n}, {}", entry.name);
            let mut by_type = vec![0; cat.len()];
            for h in &brute {
                by_type[catalogue::identify(&cat, &as_group(h)).unwrap()] += 1;
            }
            let mut ours = vec![0; cat.len()];
            for r in &run.records {
                ours[r.iso_type] += 1;
            }
            assert_eq!(ours, by_type, "order {n}, {}", entry.name);
        }
    }
}

/// `e(G, N)`: regular subgroups of `Perm(G)` isomorphic to `N` and normalised by
/// the left regular representation of `G`.
fn brute_e(g: &FiniteGroup, n: &CatalogueEntry) -> usize {
    let k = g.order();
    let left: Vec<Perm> = (0..k).map(|x| (0..k).map(|y| g.mul(x, y)).collect()).collect();
    let derangements: Vec<Perm> = perms_fixing_zero(k)
        .into_iter()
        .flat_map(|p| (0..k).map(move |s| p.iter().map(|&x| (x + s) % k).collect::<Perm>()))
        .filter(|p: &Perm| p.iter().enumerate().all(|(i, &x)| x != i))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut found: HashSet<BTreeSet<Perm>> = HashSet::new();
    for (i, p) in derangements.iter().enumerate() {
        for q in &derangements[i..] {
            let h = closure(&[p, q]);
            if h.len() != k || h.iter().map(|s| s[0]).collect::<HashSet<_>>().len() != k {
                continue;
            }
            let normalised = left.iter().all(|l| {
                let l_inv = {
                    let mut v = vec![0; k];
                    for (a, &b) in l.iter().enumerate() {
                        v[b] = a;
                    }
                    v
                };
                h.iter().all(|s| h.contains(&then(&then(&l_inv, s), l)))
            });
            if normalised {
                found.insert(h);
            }
        }
    }
    found.iter().filter(|h| braceforge::group::are_isomorphic(&as_group(h), &n.group).is_some()).count()
}

#[test]
fn hopf_galois_counts_by_definition_order_six() {
    let cat = catalogue::groups_of_order(6).unwrap();
    let t = enumeration::census(6).unwrap();
    for (gi, g) in cat.iter().enumerate() {
        for (ai, a) in cat.iter().enumerate() {
            assert_eq!(t.e[gi][ai], brute_e(&g.group, a), "e({}, {})", g.name, a.name);
        }
    }
}

#[test]
fn order_eight_total_matches_orbit_sizes() {
    let (t, runs) = enumeration::census_details(8, DEFAULT_ORDER_BOUND).unwrap();
    for (a, run) in runs.iter().enumerate() {
        let total: usize = (0..t.names.len()).map(|g| t.f[g][a]).sum();
        assert_eq!(total, run.records.len());
        let aut = run.aut.len();
        for o in &run.orbits {
            // orbit-stabiliser: orbit sizes divide |Aut(A)|
            assert_eq!(aut % o.members.len(), 0);
        }
    }
}
