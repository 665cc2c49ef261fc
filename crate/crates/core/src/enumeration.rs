//! Regular subgroups of `Hol(A)`, their `Aut(A)`-orbits (skew brace isomorphism
//! classes with additive group `A`), and the counts `e(G, A)`, `f(G, A)`, `h(n)`.
//!
//! A regular subgroup of `Hol(A)` is `{(a, λ_a) : a ∈ A}` for a map
//! `λ: A → Aut(A)` with `λ_{a·λ_a(b)} = λ_a λ_b`; the search runs over such maps.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::brace::SkewBrace;
use crate::catalogue::{self, CatalogueEntry};
use crate::error::EnumerationError;
use crate::group::{automorphism_group, AutomorphismGroup, FiniteGroup, Holomorph};
use crate::perm;
use crate::structure;

/// Default bound on `|A|` for [`regular_subgroups`].
pub const DEFAULT_ORDER_BOUND: usize = 24;
/// Bound used when long runs are enabled.
pub const LONG_RUN_ORDER_BOUND: usize = 31;
/// Cyclic groups have small automorphism groups, so reports go further.
pub const CYCLIC_REPORT_BOUND: usize = 125;

/// Automorphisms with a composition table when it fits in memory.
struct AutTable {
    n: usize,
    maps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
    table: Option<Vec<u32>>,
}

impl AutTable {
    fn new(aut: &AutomorphismGroup) -> Self {
        let maps: Vec<Vec<u32>> = aut.maps().iter().map(|m| m.iter().map(|&x| x as u32).collect()).collect();
        let index = maps.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        let n = maps[0].len();
        let k = maps.len();
        let mut t = AutTable { n, maps, index, table: None };
        if k <= 2048 {
            let table = (0..k * k).into_par_iter().map(|p| t.compose_slow(p / k, p % k)).collect();
            t.table = Some(table);
        }
        t
    }

    fn len(&self) -> usize {
        self.maps.len()
    }

    fn compose_slow(&self, i: usize, j: usize) -> u32 {
        let (f, g) = (&self.maps[i], &self.maps[j]);
        let h: Vec<u32> = (0..self.n).map(|x| f[g[x] as usize]).collect();
        self.index[&h]
    }

    /// `maps[i] ∘ maps[j]`.
    fn compose(&self, i: u32, j: u32) -> u32 {
        match &self.table {
            Some(t) => t[i as usize * self.len() + j as usize],
            None => self.compose_slow(i as usize, j as usize),
        }
    }

    fn apply(&self, i: u32, x: usize) -> usize {
        self.maps[i as usize][x] as usize
    }

    fn inverse(&self, i: u32) -> u32 {
        let f = &self.maps[i as usize];
        let mut inv = vec![0u32; self.n];
        for (x, &y) in f.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        self.index[&inv]
    }
}

const UNSET: u32 = u32::MAX;

struct Search<'a> {
    a: &'a FiniteGroup,
    aut: &'a AutTable,
    /// `allowed[x]` lists automorphisms `f` such that `(x, f)` has order dividing `|A|`.
    allowed: Vec<Vec<u32>>,
    allowed_set: Vec<Vec<bool>>,
}

#[derive(Clone)]
struct State {
    lam: Vec<u32>,
    assigned: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(a: &'a FiniteGroup, aut: &'a AutTable) -> Self {
        let n = a.order();
        let k = aut.len();
        let allowed: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|x| (0..k as u32).filter(|&f| hol_order_divides(a, aut, x, f, n)).collect())
            .collect();
        let allowed_set = allowed
            .iter()
            .map(|l| {
                let mut s = vec![false; k];
                for &f in l {
                    s[f as usize] = true;
                }
                s
            })
            .collect();
        Search { a, aut, allowed, allowed_set }
    }

    fn initial(&self) -> State {
        let n = self.a.order();
        let mut st = State { lam: vec![UNSET; n], assigned: Vec::new() };
        assert!(self.assign(&mut st, 0, 0));
        st
    }

    /// Sets `λ_x = f` and closes under `λ_{x·λ_x(y)} = λ_x λ_y`.
    fn assign(&self, st: &mut State, x: usize, f: u32) -> bool {
        let mut queue = vec![(x, f)];
        while let Some((x, f)) = queue.pop() {
            match st.lam[x] {
                UNSET => {}
                g if g == f => continue,
                _ => return false,
            }
            if !self.allowed_set[x][f as usize] {
                return false;
            }
            st.lam[x] = f;
            st.assigned.push(x);
            for i in 0..st.assigned.len() {
                let y = st.assigned[i];
                let g = st.lam[y];
                let c1 = self.a.mul(x, self.aut.apply(f, y));
                let h1 = self.aut.compose(f, g);
                let c2 = self.a.mul(y, self.aut.apply(g, x));
                let h2 = self.aut.compose(g, f);
                for (c, h) in [(c1, h1), (c2, h2)] {
                    match st.lam[c] {
                        UNSET => queue.push((c, h)),
                        v if v == h => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    fn dfs(&self, st: State, out: &mut Vec<Vec<u32>>) {
        let Some(x) = st.lam.iter().position(|&v| v == UNSET) else {
            out.push(st.lam);
            return;
        };
        for &f in &self.allowed[x] {
            let mut next = st.clone();
            if self.assign(&mut next, x, f) {
                self.dfs(next, out);
            }
        }
    }

    fn run(&self) -> Vec<Vec<u32>> {
        let st = self.initial();
        let Some(x) = st.lam.iter().position(|&v| v == UNSET) else {
            return vec![st.lam];
        };
        let mut out: Vec<Vec<u32>> = self.allowed[x]
            .par_iter()
            .flat_map_iter(|&f| {
                let mut next = st.clone();
                let mut found = Vec::new();
                if self.assign(&mut next, x, f) {
                    self.dfs(next, &mut found);
                }
                found
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Whether `(x, f) ∈ Hol(A)` has order dividing `n`.
fn hol_order_divides(a: &FiniteGroup, aut: &AutTable, x: usize, f: u32, n: usize) -> bool {
    let (mut p, mut g) = (x, f);
    for k in 1..=n {
        if p == 0 && g == 0 {
            return n % k == 0;
        }
        p = a.mul(p, aut.apply(g, x));
        g = aut.compose(g, f);
    }
    false
}

/// A regular subgroup `{(a, λ_a)}` of `Hol(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSubgroupRecord {
    /// `lambda[a]` is the index of `λ_a` in the automorphism group of `A`.
    pub lambda: Vec<usize>,
    /// Index of `Mul` in the order-`n` catalogue.
    pub iso_type: usize,
    pub orbit_id: usize,
}

impl RegularSubgroupRecord {
    /// Brace with `a∘b = a·λ_a(b)`.
    pub fn brace(&self, a: &FiniteGroup, aut: &AutomorphismGroup) -> SkewBrace {
        let lambda: Vec<Vec<usize>> = self.lambda.iter().map(|&f| aut.map(f).to_vec()).collect();
        SkewBrace::from_lambda(a, &lambda).expect("regular subgroup gives a brace")
    }

    /// The subgroup as sorted element indices of the holomorph.
    pub fn holomorph_elements(&self, hol: &Holomorph) -> Vec<usize> {
        let mut e: Vec<usize> = self.lambda.iter().enumerate().map(|(a, &f)| hol.index_of(a, f)).collect();
        e.sort_unstable();
        e
    }
}

#[derive(Clone, Debug)]
pub struct BraceOrbit {
    /// Record indices, sorted; the first is the representative.
    pub members: Vec<usize>,
    pub representative: SkewBrace,
    pub mul_type: usize,
}

/// Everything found for one additive group.
#[derive(Clone, Debug)]
pub struct AddTypeEnumeration {
    pub add: FiniteGroup,
    pub aut: AutomorphismGroup,
    pub records: Vec<RegularSubgroupRecord>,
    pub orbits: Vec<BraceOrbit>,
}

/// All `λ`-maps of `A`, sorted, as automorphism indices.
pub fn lambda_maps(a: &FiniteGroup, aut: &AutomorphismGroup) -> Vec<Vec<usize>> {
    let table = AutTable::new(aut);
    Search::new(a, &table).run().into_iter().map(|l| l.into_iter().map(|x| x as usize).collect()).collect()
}

/// All regular subgroups of `Hol(A)` as `λ`-maps (orbit and type fields unset).
pub fn regular_subgroups(a: &FiniteGroup, bound: usize) -> Result<Vec<RegularSubgroupRecord>, EnumerationError> {
    if a.order() > bound {
        return Err(EnumerationError::OrderBoundExceeded { order: a.order(), bound });
    }
    let aut = automorphism_group(a);
    Ok(lambda_maps(a, &aut)
        .into_iter()
        .map(|lambda| RegularSubgroupRecord { lambda, iso_type: usize::MAX, orbit_id: usize::MAX })
        .collect())
}

/// Partition of the maps into orbits under `λ ↦ φλ_{φ⁻¹(-)}φ⁻¹`, ordered by least member.
pub fn classify_orbits(a: &FiniteGroup, aut: &AutomorphismGroup, maps: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let table = AutTable::new(aut);
    let n = a.order();
    let index: HashMap<&[usize], usize> = maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut orbit_of = vec![usize::MAX; maps.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let inverses: Vec<u32> = (0..table.len() as u32).map(|p| table.inverse(p)).collect();
    for start in 0..maps.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let m = &maps[start];
        let images: Vec<usize> = (0..table.len() as u32)
            .into_par_iter()
            .map(|phi| {
                let pinv = inverses[phi as usize];
                let mut img = vec![0usize; n];
                for (x, &f) in m.iter().enumerate() {
                    let c = table.compose(table.compose(phi, f as u32), pinv);
                    img[table.apply(phi, x)] = c as usize;
                }
                *index.get(img.as_slice()).expect("conjugate of a regular subgroup is regular")
            })
            .collect();
        let mut members: Vec<usize> = images;
        members.sort_unstable();
        members.dedup();
        for &j in &members {
            orbit_of[j] = id;
        }
        orbits.push(members);
    }
    orbits
}

/// Regular subgroups, orbits and multiplicative types for one additive group.
pub fn enumerate_add_type(a: &FiniteGroup, catalogue: &[CatalogueEntry], bound: usize) -> Result<AddTypeEnumeration, EnumerationError> {
    if a.order() > bound {
        return Err(EnumerationError::OrderBoundExceeded { order: a.order(), bound });
    }
    let aut = automorphism_group(a);
    let maps = lambda_maps(a, &aut);
    let orbit_sets = classify_orbits(a, &aut, &maps);
    let mut records: Vec<RegularSubgroupRecord> =
        maps.into_iter().map(|lambda| RegularSubgroupRecord { lambda, iso_type: usize::MAX, orbit_id: usize::MAX }).collect();
    let orbits: Vec<BraceOrbit> = orbit_sets
        .into_par_iter()
        .map(|members| {
            let representative = records[members[0]].brace(a, &aut);
            let mul_type = catalogue::identify(catalogue, representative.mul_group())
                .ok_or_else(|| EnumerationError::BadCatalogue { order: a.order(), msg: "multiplicative group not in catalogue".into() })?;
            Ok(BraceOrbit { members, representative, mul_type })
        })
        .collect::<Result<_, EnumerationError>>()?;
    for (id, o) in orbits.iter().enumerate() {
        for &m in &o.members {
            records[m].orbit_id = id;
            records[m].iso_type = o.mul_type;
        }
    }
    Ok(AddTypeEnumeration { add: a.clone(), aut, records, orbits })
}

/// Rows and columns indexed by the order-`n` catalogue; `x[g][a]` has
/// multiplicative type `g` and additive type `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub order: usize,
    pub names: Vec<String>,
    pub aut_orders: Vec<usize>,
    pub e: Vec<Vec<usize>>,
    pub f: Vec<Vec<usize>>,
    pub brace_classes: Vec<Vec<usize>>,
    pub h: usize,
}

impl CensusTable {
    fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `e(G, A)` by catalogue names.
    pub fn e_by_name(&self, g: &str, a: &str) -> Option<usize> {
        Some(self.e[self.position(g)?][self.position(a)?])
    }

    pub fn total_brace_classes(&self) -> usize {
        self.brace_classes.iter().flatten().sum()
    }

    /// Aligned table of `e(G, A)`, rows `G`, columns `A`.
    pub fn format_text(&self) -> String {
        let w = self.names.iter().map(|s| s.len()).max().unwrap_or(1).max(5);
        let mut out = format!("order {}: e(G, A), rows G (multiplicative), columns A (additive)\n", self.order);
        let _ = write!(out, "{:<w$}", "");
        for name in &self.names {
            let _ = write!(out, " {name:>w$}");
        }
        out.push('\n');
        for (i, name) in self.names.iter().enumerate() {
            let _ = write!(out, "{name:<w$}");
            for v in &self.e[i] {
                let _ = write!(out, " {v:>w$}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "h({}) = {}", self.order, self.h);
        out
    }

    /// `order,add_type,mul_type,e,f,brace_classes`, one line per cell.
    pub fn rows_csv(&self) -> String {
        let mut out = String::from("order,add_type,mul_type,e,f,brace_classes\n");
        for a in 0..self.names.len() {
            for g in 0..self.names.len() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    self.order, self.names[a], self.names[g], self.e[g][a], self.f[g][a], self.brace_classes[g][a]
                );
            }
        }
        out
    }
}

/// Full census of order `n` with the default bound.
pub fn census(n: usize) -> Result<CensusTable, EnumerationError> {
    census_with_bound(n, DEFAULT_ORDER_BOUND)
}

pub fn census_with_bound(n: usize, bound: usize) -> Result<CensusTable, EnumerationError> {
    Ok(census_details(n, bound)?.0)
}

/// Census together with the per-additive-type enumerations.
pub fn census_details(n: usize, bound: usize) -> Result<(CensusTable, Vec<AddTypeEnumeration>), EnumerationError> {
    if n > bound {
        return Err(EnumerationError::OrderBoundExceeded { order: n, bound });
    }
    let cat = catalogue::groups_of_order(n)?;
    let m = cat.len();
    let aut_orders: Vec<usize> = cat.iter().map(|e| automorphism_group(&e.group).len()).collect();
    let mut f = vec![vec![0; m]; m];
    let mut classes = vec![vec![0; m]; m];
    let mut runs = Vec::with_capacity(m);
    for (a, entry) in cat.iter().enumerate() {
        let run = enumerate_add_type(&entry.group, &cat, bound)?;
        for o in &run.orbits {
            f[o.mul_type][a] += o.members.len();
            classes[o.mul_type][a] += 1;
        }
        runs.push(run);
    }
    let mut e = vec![vec![0; m]; m];
    for g in 0..m {
        for a in 0..m {
            let num = aut_orders[g] * f[g][a];
            if num % aut_orders[a] != 0 {
                return Err(EnumerationError::Invalid(format!(
                    "|Aut({})|·f = {num} is not divisible by |Aut({})| = {}",
                    cat[g].name, cat[a].name, aut_orders[a]
                )));
            }
            e[g][a] = num / aut_orders[a];
        }
    }
    let h = e.iter().flatten().sum();
    let table = CensusTable {
        order: n,
        names: cat.iter().map(|c| c.name.clone()).collect(),
        aut_orders,
        e,
        f,
        brace_classes: classes,
        h,
    };
    Ok((table, runs))
}

/// Both sides of the uniqueness criterion for order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub order: usize,
    /// Whether exactly one skew brace of order `n` exists.
    pub unique: bool,
    /// Number of brace classes when it was computed; `None` when several
    /// groups of order `n` already give several trivial braces.
    pub brace_classes: Option<usize>,
    pub coprime: bool,
}

impl UniquenessReport {
    pub fn agrees(&self) -> bool {
        self.unique == self.coprime
    }
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| perm::gcd(k, n) == 1).count()
}

pub fn uniqueness_check(n: usize) -> Result<UniquenessReport, EnumerationError> {
    let coprime = perm::gcd(n, euler_phi(n)) == 1;
    let cat = catalogue::groups_of_order(n)?;
    if cat.len() > 1 {
        return Ok(UniquenessReport { order: n, unique: false, brace_classes: None, coprime });
    }
    let run = enumerate_add_type(&cat[0].group, &cat, DEFAULT_ORDER_BOUND.max(n))?;
    let k = run.orbits.len();
    Ok(UniquenessReport { order: n, unique: k == 1, brace_classes: Some(k), coprime })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicReport {
    pub p: usize,
    pub k: usize,
    /// Hopf–Galois structures of cyclic type on a cyclic extension.
    pub hgs: usize,
    pub brace_classes: usize,
    /// Socle size per class, largest first.
    pub socle_sizes: Vec<usize>,
    /// Orbit size per class, in the same order.
    pub orbit_sizes: Vec<usize>,
}

/// Report for the cyclic group of order `p^k`.
pub fn cyclic_prime_power_report(p: usize, k: u32) -> Result<CyclicReport, EnumerationError> {
    let n = p.pow(k);
    if n > CYCLIC_REPORT_BOUND {
        return Err(EnumerationError::OrderBoundExceeded { order: n, bound: CYCLIC_REPORT_BOUND });
    }
    let g = FiniteGroup::cyclic(n);
    let cat = vec![CatalogueEntry { name: format!("C{n}"), group: g.clone() }];
    let aut = automorphism_group(&g);
    let maps = lambda_maps(&g, &aut);
    let orbits = classify_orbits(&g, &aut, &maps);
    let mut rows: Vec<(usize, usize)> = Vec::new();
    let mut hgs = 0;
    for o in &orbits {
        let rec = RegularSubgroupRecord { lambda: maps[o[0]].clone(), iso_type: 0, orbit_id: 0 };
        let b = rec.brace(&g, &aut);
        if catalogue::identify(&cat, b.mul_group()).is_some() {
            hgs += o.len();
        }
        rows.push((structure::socle(&b).order(), o.len()));
    }
    rows.sort_by(|x, y| y.0.cmp(&x.0));
    Ok(CyclicReport {
        p,
        k: k as usize,
        hgs,
        brace_classes: orbits.len(),
        socle_sizes: rows.iter().map(|r| r.0).collect(),
        orbit_sizes: rows.iter().map(|r| r.1).collect(),
    })
}
