//! Braces from rings: circle groups of nil rings, factorizations through a subring
//! and a left ideal, construction subgroups of near-rings, and brace structures on
//! polynomial functions over `A = F + N` with `N` nilpotent.

use std::collections::HashMap;
use std::hash::Hash;

use crate::brace::SkewBrace;
use crate::constructions::{ExactFactorization, TriplyFactorizedGroup};
use crate::error::RingError;
use crate::group::{FiniteGroup, Subgroup};

/// Largest ring carrier with a materialized multiplication table.
pub const RING_LIMIT: usize = 1024;
/// Largest polynomial function set.
pub const FUNCTION_LIMIT: usize = 4096;

/// `GF(q)` for `q ∈ {2, 3, 4, 5, 7, 8}`; elements are polynomials over `GF(p)` in base `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self, RingError> {
        // modulus as coefficients of x^0..x^{e-1} (monic, leading term implicit)
        let (p, e, modulus): (usize, usize, &[usize]) = match q {
            2 | 3 | 5 | 7 => (q, 1, &[0]),
            4 => (2, 2, &[1, 1]),
            8 => (2, 3, &[1, 1, 0]),
            _ => return Err(RingError::UnsupportedField(q)),
        };
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; e];
            for c in d.iter_mut() {
                *c = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let s: Vec<usize> = (0..e).map(|i| (da[i] + db[i]) % p).collect();
                add[a * q + b] = encode(&s);
                let mut prod = vec![0; 2 * e];
                for i in 0..e {
                    for j in 0..e {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for k in (e..2 * e).rev() {
                    let c = prod[k];
                    if c != 0 && e > 1 {
                        prod[k] = 0;
                        for (i, &m) in modulus.iter().enumerate() {
                            prod[k - e + i] = (prod[k - e + i] + p - (c * m) % p) % p;
                        }
                    }
                }
                mul[a * q + b] = encode(&prod[..e]);
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap()).collect();
        Ok(FiniteField { q, p, add, mul, neg })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }
}

/// A finite ring, or a left near-ring when `left_only` is set. Zero is index 0.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    add: FiniteGroup,
    mult: Vec<u32>,
    one: Option<usize>,
    left_only: bool,
}

impl FiniteRing {
    /// Validates associativity of `mult` and distributivity (left only for near-rings).
    pub fn new(add: FiniteGroup, mult: Vec<usize>, one: Option<usize>, left_only: bool) -> Result<Self, RingError> {
        let n = add.order();
        if n > RING_LIMIT {
            return Err(RingError::TooLarge { size: n, cap: RING_LIMIT });
        }
        if mult.len() != n * n || mult.iter().any(|&x| x >= n) {
            return Err(RingError::Hypothesis("multiplication table has the wrong shape".into()));
        }
        let r = FiniteRing { add, mult: mult.into_iter().map(|x| x as u32).collect(), one, left_only };
        for a in 0..n {
            for b in 0..n {
                let ab = r.times(a, b);
                for c in 0..n {
                    if r.times(ab, c) != r.times(a, r.times(b, c)) {
                        return Err(RingError::NotAssociative(a, b, c));
                    }
                    let bc = r.plus(b, c);
                    if r.times(a, bc) != r.plus(r.times(a, b), r.times(a, c)) {
                        return Err(RingError::NotDistributive(a, b, c));
                    }
                    if !left_only && r.times(bc, a) != r.plus(r.times(b, a), r.times(c, a)) {
                        return Err(RingError::NotDistributive(b, c, a));
                    }
                }
            }
        }
        if let Some(e) = one {
            if (0..n).any(|a| r.times(e, a) != a || r.times(a, e) != a) {
                return Err(RingError::Hypothesis(format!("{e} is not a multiplicative identity")));
            }
        }
        Ok(r)
    }

    /// Ring with `ab = 0` on the group `g`.
    pub fn zero_ring(g: &FiniteGroup) -> Result<Self, RingError> {
        let n = g.order();
        FiniteRing::new(g.clone(), vec![0; n * n], None, false)
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn is_near_ring(&self) -> bool {
        self.left_only
    }

    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    pub fn times(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b] as usize
    }

    /// `a + b + ab`.
    pub fn circle(&self, a: usize, b: usize) -> usize {
        self.plus(self.plus(a, b), self.times(a, b))
    }

    pub fn is_nilpotent_element(&self, a: usize) -> bool {
        let mut x = a;
        for _ in 0..=self.order() {
            if x == 0 {
                return true;
            }
            x = self.times(x, a);
        }
        false
    }

    fn check_closed(&self, set: &[usize], left_ideal: bool) -> Result<Vec<bool>, RingError> {
        let n = self.order();
        let mut member = vec![false; n];
        for &x in set {
            member[x] = true;
        }
        if !member[0] {
            return Err(RingError::NotClosed { op: "zero", a: 0, b: 0 });
        }
        for &a in set {
            if !member[self.neg(a)] {
                return Err(RingError::NotClosed { op: "negation", a, b: a });
            }
            for &b in set {
                if !member[self.plus(a, b)] {
                    return Err(RingError::NotClosed { op: "+", a, b });
                }
                if !member[self.times(a, b)] {
                    return Err(RingError::NotClosed { op: "·", a, b });
                }
            }
            if left_ideal {
                if let Some(r) = (0..n).find(|&r| !member[self.times(r, a)]) {
                    return Err(RingError::NotClosed { op: "left multiplication", a: r, b: a });
                }
            }
        }
        Ok(member)
    }

    /// Checks that `set` is a subring.
    pub fn check_subring(&self, set: &[usize]) -> Result<(), RingError> {
        self.check_closed(set, false).map(|_| ())
    }

    /// Checks that `set` is a left ideal.
    pub fn check_left_ideal(&self, set: &[usize]) -> Result<(), RingError> {
        self.check_closed(set, true).map(|_| ())
    }

    /// Elements of the additive subgroup generated by `gens`.
    pub fn additive_span(&self, gens: &[usize]) -> Vec<usize> {
        Subgroup::generated(&self.add, gens).elements().to_vec()
    }

    /// `[[N, M], [0, 0]]` for a left `N`-module `M` with `act(n, m) = n·m`;
    /// `(n, m)` has index `n·|M| + m`.
    pub fn upper_matrix_ring(n: &FiniteRing, module: &FiniteGroup, act: impl Fn(usize, usize) -> usize) -> Result<Self, RingError> {
        let k = module.order();
        let add = n.add_group().direct_product(module);
        let size = n.order() * k;
        let mut mult = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let (a, b, m2) = (x / k, y / k, y % k);
                mult[x * size + y] = n.times(a, b) * k + act(a, m2);
            }
        }
        FiniteRing::new(add, mult, None, false)
    }
}

/// `(S, ∘)` with `a∘b = a + b + ab`, indexed by position in the sorted `subset`.
pub fn circle_group(r: &FiniteRing, subset: &[usize]) -> Result<FiniteGroup, RingError> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    r.check_closed(&s, false)?;
    let pos: HashMap<usize, usize> = s.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    for &a in &s {
        if !s.iter().any(|&b| r.circle(a, b) == 0 && r.circle(b, a) == 0) {
            return Err(RingError::NotCircleInvertible(a));
        }
    }
    Ok(FiniteGroup::from_fn(s.len(), |i, j| pos[&r.circle(s[i], s[j])])?)
}

/// The brace `(R, +, ∘)` of a ring in which every element is circle-invertible.
pub fn circle_brace(r: &FiniteRing) -> Result<SkewBrace, RingError> {
    let all: Vec<usize> = (0..r.order()).collect();
    let mul = circle_group(r, &all)?;
    Ok(SkewBrace::new(r.add_group().clone(), mul)?)
}

/// `R = S∘I` for a subring `S` and a left ideal `I` with `S ∩ I = 0` and `R = S + I`.
pub fn ring_exact_factorization(r: &FiniteRing, s: &[usize], i: &[usize]) -> Result<ExactFactorization, RingError> {
    r.check_subring(s).map_err(|e| RingError::Hypothesis(format!("S is not a subring: {e}")))?;
    r.check_left_ideal(i).map_err(|e| RingError::Hypothesis(format!("I is not a left ideal: {e}")))?;
    let (s, i) = (Subgroup::from_unsorted_unchecked(s.to_vec()), Subgroup::from_unsorted_unchecked(i.to_vec()));
    if s.intersection(&i).order() != 1 {
        return Err(RingError::Hypothesis("S ∩ I is nonzero".into()));
    }
    if s.order() * i.order() != r.order() {
        return Err(RingError::Hypothesis("R != S + I".into()));
    }
    if let Some(&a) = s.elements().iter().chain(i.elements()).find(|&&a| !r.is_nilpotent_element(a)) {
        return Err(RingError::Hypothesis(format!("{a} is not nilpotent")));
    }
    let all: Vec<usize> = (0..r.order()).collect();
    let g = circle_group(r, &all)?;
    Ok(ExactFactorization::new(g, s, i)?)
}

/// `(R, ∘)` with `A = S`, `B = I₁`, `M = I₂` for a subring and two left ideals.
pub fn ring_triple(r: &FiniteRing, s: &[usize], i1: &[usize], i2: &[usize]) -> Result<TriplyFactorizedGroup, RingError> {
    r.check_subring(s)?;
    r.check_left_ideal(i1)?;
    r.check_left_ideal(i2)?;
    let all: Vec<usize> = (0..r.order()).collect();
    let g = circle_group(r, &all)?;
    let sub = |x: &[usize]| Subgroup::new(&g, x);
    Ok(TriplyFactorizedGroup::new(g.clone(), sub(s)?, sub(i1)?, sub(i2)?)?)
}

/// Brace on a construction subgroup `M` with `mm' = m + m'` and `m∘m' = m + (1+m)·m'`,
/// for near-ring elements of any representation. `M[0]` must be zero.
fn construction_brace<T: Clone + Eq + Hash>(
    m: &[T],
    one: &T,
    add: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
) -> Result<SkewBrace, RingError> {
    let k = m.len();
    let pos: HashMap<&T, usize> = m.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if pos.len() != k || add(&m[0], &m[0]) != m[0] {
        return Err(RingError::Hypothesis("M must list distinct elements, zero first".into()));
    }
    let units: Vec<T> = m.iter().map(|x| add(one, x)).collect();
    let unit_pos: HashMap<&T, usize> = units.iter().enumerate().map(|(i, x)| (x, i)).collect();
    for i in 0..k {
        for j in 0..k {
            if !unit_pos.contains_key(&mul(&units[i], &units[j])) {
                return Err(RingError::NotConstructionSubgroup(i, j));
            }
        }
        if !(0..k).any(|j| mul(&units[i], &units[j]) == *one && mul(&units[j], &units[i]) == *one) {
            return Err(RingError::NotConstructionSubgroup(i, i));
        }
    }
    let mut add_t = vec![0; k * k];
    let mut mul_t = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            add_t[i * k + j] = *pos.get(&add(&m[i], &m[j])).ok_or(RingError::NotClosed { op: "+", a: i, b: j })?;
        }
    }
    for i in 0..k {
        for j in 0..k {
            let lifted = mul(&units[i], &m[j]);
            let p = *pos.get(&lifted).ok_or(RingError::NotConstructionSubgroup(i, j))?;
            mul_t[i * k + j] = add_t[i * k + p];
        }
    }
    let addg = FiniteGroup::from_fn(k, |i, j| add_t[i * k + j])?;
    let mulg = FiniteGroup::from_fn(k, |i, j| mul_t[i * k + j])?;
    Ok(SkewBrace::new(addg, mulg)?)
}

/// Brace on a construction subgroup `m` (element indices, zero first) of a unital near-ring.
pub fn construction_subgroup_brace(n: &FiniteRing, m: &[usize]) -> Result<SkewBrace, RingError> {
    let one = n.one().ok_or_else(|| RingError::Hypothesis("near-ring has no identity".into()))?;
    construction_brace(m, &one, |&a, &b| n.plus(a, b), |&a, &b| n.times(a, b))
}

/// Brace on a set of maps `G → G` (value tables, zero map first) inside the near-ring
/// `M(G)` with `(f+g)(x) = f(x)+g(x)` and `(f·g)(x) = g(f(x))`.
pub fn map_near_ring_brace(g: &FiniteGroup, maps: &[Vec<usize>]) -> Result<SkewBrace, RingError> {
    let one: Vec<usize> = g.elements().collect();
    construction_brace(
        maps,
        &one,
        |f, h| f.iter().zip(h).map(|(&a, &b)| g.mul(a, b)).collect(),
        |f, h| f.iter().map(|&a| h[a]).collect(),
    )
}

/// `A = F + N` over `GF(q)` with `N` spanned by `e_1, …, e_d`. An element of `A` is
/// `c + v` with index `c·q^d + code(v)`, so `N` occupies the indices `0..q^d`.
#[derive(Clone, Debug)]
pub struct NilpotentAlgebra {
    field: FiniteField,
    dim: usize,
    /// `consts[i·d + j][k]` is the coefficient of `e_k` in `e_i e_j` (0-based).
    consts: Vec<Vec<usize>>,
    nilpotency: usize,
    commutative: bool,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl NilpotentAlgebra {
    /// `triples` lists `(i, j, k, c)` with 0-based basis indices: `e_i e_j` gains `c·e_k`.
    pub fn new(q: usize, dim: usize, triples: &[(usize, usize, usize, usize)]) -> Result<Self, RingError> {
        let field = FiniteField::new(q)?;
        let size = q.checked_pow(dim as u32 + 1).filter(|&s| s <= RING_LIMIT).ok_or(RingError::TooLarge {
            size: q.saturating_pow(dim as u32 + 1),
            cap: RING_LIMIT,
        })?;
        let mut consts = vec![vec![0; dim]; dim * dim];
        for &(i, j, k, c) in triples {
            if i >= dim || j >= dim || k >= dim || c >= q {
                return Err(RingError::BadStructureConstant(format!("({i}, {j}, {k}, {c})")));
            }
            let slot = &mut consts[i * dim + j][k];
            *slot = field.add(*slot, c);
        }
        let mut alg = NilpotentAlgebra { field, dim, consts, nilpotency: 0, commutative: true, add: Vec::new(), mul: Vec::new() };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let (ei, ej, ek) = (alg.basis(i), alg.basis(j), alg.basis(k));
                    if alg.n_mul(&alg.n_mul(&ei, &ej), &ek) != alg.n_mul(&ei, &alg.n_mul(&ej, &ek)) {
                        return Err(RingError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        alg.commutative = (0..dim).all(|i| (0..dim).all(|j| alg.consts[i * dim + j] == alg.consts[j * dim + i]));
        alg.nilpotency = alg.compute_nilpotency().ok_or(RingError::NotNilpotent)?;
        alg.add = vec![0; size * size];
        alg.mul = vec![0; size * size];
        for x in 0..size {
            let vx = alg.decode(x);
            for y in 0..size {
                let vy = alg.decode(y);
                let s: Vec<usize> = vx.iter().zip(&vy).map(|(&a, &b)| alg.field.add(a, b)).collect();
                alg.add[x * size + y] = alg.encode(&s) as u32;
                alg.mul[x * size + y] = alg.encode(&alg.a_mul(&vx, &vy)) as u32;
            }
        }
        Ok(alg)
    }

    /// `F⟨x_1, …, x_v⟩` modulo words of length `> len`, without constant term.
    /// Basis: nonempty words of length `≤ len` in shortlex order.
    pub fn truncated_free(q: usize, vars: usize, len: usize) -> Result<Self, RingError> {
        let mut words: Vec<Vec<usize>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..len {
            layer = layer.iter().flat_map(|w| (0..vars).map(move |v| [w.clone(), vec![v]].concat())).collect();
            words.extend(layer.iter().cloned());
        }
        let index: HashMap<&Vec<usize>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut triples = Vec::new();
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                if let Some(&k) = index.get(&[u.clone(), v.clone()].concat()) {
                    triples.push((i, j, k, 1));
                }
            }
        }
        NilpotentAlgebra::new(q, words.len(), &triples)
    }

    /// `t·F[t]/(t^{k+1})` as the nilpotent part, basis `t, t², …, t^k`.
    pub fn truncated_polynomial(q: usize, k: usize) -> Result<Self, RingError> {
        let mut triples = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i + j + 1 < k {
                    triples.push((i, j, i + j + 1, 1));
                }
            }
        }
        NilpotentAlgebra::new(q, k, &triples)
    }

    fn basis(&self, i: usize) -> Vec<usize> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    fn n_mul(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        let f = &self.field;
        let mut out = vec![0; self.dim];
        for (i, &a) in u.iter().enumerate().filter(|p| *p.1 != 0) {
            for (j, &b) in v.iter().enumerate().filter(|p| *p.1 != 0) {
                let ab = f.mul(a, b);
                for (k, &c) in self.consts[i * self.dim + j].iter().enumerate() {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// Product in `A`; vectors carry the scalar part at position 0.
    fn a_mul(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        let f = &self.field;
        let (c, u) = (x[0], &x[1..]);
        let (d, v) = (y[0], &y[1..]);
        let uv = self.n_mul(u, v);
        let mut out = vec![f.mul(c, d)];
        for k in 0..self.dim {
            out.push(f.add(f.add(f.mul(c, v[k]), f.mul(d, u[k])), uv[k]));
        }
        out
    }

    fn decode(&self, mut x: usize) -> Vec<usize> {
        let q = self.field.order();
        let mut v = vec![0; self.dim + 1];
        for k in (1..=self.dim).rev() {
            v[k] = x % q;
            x /= q;
        }
        v[0] = x;
        v
    }

    fn encode(&self, v: &[usize]) -> usize {
        let q = self.field.order();
        v.iter().fold(0, |acc, &c| acc * q + c)
    }

    fn compute_nilpotency(&self) -> Option<usize> {
        let size_n = self.field.order().pow(self.dim as u32);
        let vecs: Vec<Vec<usize>> = (0..size_n).map(|x| self.decode(x)[1..].to_vec()).collect();
        // N^k as a set of coefficient vectors, closed under addition
        let mut power: Vec<Vec<usize>> = vecs.clone();
        for k in 1..=self.dim + 1 {
            if power.iter().all(|v| v.iter().all(|&c| c == 0)) {
                return Some(k);
            }
            let mut next: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
            next.insert(vec![0; self.dim]);
            let gens: Vec<Vec<usize>> = power
                .iter()
                .flat_map(|u| (0..self.dim).map(move |i| (u, i)))
                .map(|(u, i)| self.n_mul(u, &self.basis(i)))
                .collect();
            loop {
                let before = next.len();
                let cur: Vec<Vec<usize>> = next.iter().cloned().collect();
                for a in &cur {
                    for g in &gens {
                        let s: Vec<usize> = a.iter().zip(g).map(|(&x, &y)| self.field.add(x, y)).collect();
                        next.insert(s);
                    }
                }
                if next.len() == before {
                    break;
                }
            }
            power = next.into_iter().collect();
        }
        None
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Least `ν` with `N^ν = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// `|A| = q^{d+1}`.
    pub fn ambient_size(&self) -> usize {
        self.field.order().pow(self.dim as u32 + 1)
    }

    /// `|N| = q^d`.
    pub fn nil_size(&self) -> usize {
        self.field.order().pow(self.dim as u32)
    }

    /// Index of the scalar `c ∈ F` in `A`.
    pub fn scalar(&self, c: usize) -> usize {
        c * self.nil_size()
    }

    /// Index in `N` of `Σ c_k e_k`.
    pub fn element(&self, coeffs: &[usize]) -> usize {
        let mut v = vec![0];
        v.extend_from_slice(coeffs);
        v.resize(self.dim + 1, 0);
        self.encode(&v)
    }

    pub fn plus(&self, x: usize, y: usize) -> usize {
        self.add[x * self.ambient_size() + y] as usize
    }

    pub fn times(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.ambient_size() + y] as usize
    }

    pub fn neg(&self, x: usize) -> usize {
        let v: Vec<usize> = self.decode(x).iter().map(|&c| self.field.neg(c)).collect();
        self.encode(&v)
    }

    /// `a∘b = a + b + ab` in `A`.
    pub fn circle(&self, x: usize, y: usize) -> usize {
        self.plus(self.plus(x, y), self.times(x, y))
    }

    /// `N` as a ring without identity.
    pub fn nil_ring(&self) -> FiniteRing {
        let n = self.nil_size();
        let add = FiniteGroup::from_fn(n, |x, y| self.plus(x, y)).expect("vector space");
        let mult = (0..n * n).map(|p| self.times(p / n, p % n)).collect();
        FiniteRing::new(add, mult, None, false).expect("structure constants were validated")
    }

    /// `A = F + N` as a unital ring.
    pub fn ambient_ring(&self) -> FiniteRing {
        let n = self.ambient_size();
        let add = FiniteGroup::from_fn(n, |x, y| self.plus(x, y)).expect("vector space");
        let mult = (0..n * n).map(|p| self.times(p / n, p % n)).collect();
        FiniteRing::new(add, mult, Some(self.scalar(1)), false).expect("structure constants were validated")
    }

    /// Indices in `N` of the span of the given coefficient vectors.
    pub fn span(&self, vectors: &[Vec<usize>]) -> Vec<usize> {
        let r = self.nil_ring();
        let gens: Vec<usize> = vectors
            .iter()
            .flat_map(|v| (1..self.field.order()).map(move |c| (v, c)))
            .map(|(v, c)| {
                let scaled: Vec<usize> = v.iter().map(|&a| self.field.mul(a, c)).collect();
                self.element(&scaled)
            })
            .collect();
        r.additive_span(&gens)
    }
}

/// Functions `A → A` given by polynomials with coefficients in `N`, as value tables.
/// The zero function is first.
#[derive(Clone, Debug)]
pub struct PolyFunctionSet {
    pub functions: Vec<Vec<usize>>,
}

impl PolyFunctionSet {
    /// Closure of the constants in `N` under pointwise `+` and multiplication on
    /// either side by `x` and by the basis of `N` and the scalars. For commutative
    /// `A` this is exactly the set of functions of `N[x]`.
    pub fn new(alg: &NilpotentAlgebra) -> Result<Self, RingError> {
        let size = alg.ambient_size();
        let identity: Vec<usize> = (0..size).collect();
        let mut multipliers: Vec<Vec<usize>> = vec![identity];
        for i in 0..alg.dimension() {
            let mut v = vec![0; alg.dimension()];
            v[i] = 1;
            multipliers.push(vec![alg.element(&v); size]);
        }
        for c in 2..alg.field().order() {
            multipliers.push(vec![alg.scalar(c); size]);
        }
        let zero = vec![0; size];
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        let mut functions: Vec<Vec<usize>> = vec![zero.clone()];
        seen.insert(zero, ());
        let mut queue: Vec<Vec<usize>> = (1..alg.nil_size()).map(|c| vec![c; size]).collect();
        while let Some(f) = queue.pop() {
            if seen.contains_key(&f) {
                continue;
            }
            seen.insert(f.clone(), ());
            functions.push(f.clone());
            if functions.len() > FUNCTION_LIMIT {
                return Err(RingError::TooLarge { size: functions.len(), cap: FUNCTION_LIMIT });
            }
            for h in &functions {
                let s: Vec<usize> = f.iter().zip(h).map(|(&a, &b)| alg.plus(a, b)).collect();
                if !seen.contains_key(&s) {
                    queue.push(s);
                }
            }
            for m in &multipliers {
                let left: Vec<usize> = (0..size).map(|x| alg.times(m[x], f[x])).collect();
                let right: Vec<usize> = (0..size).map(|x| alg.times(f[x], m[x])).collect();
                for g in [left, right] {
                    if !seen.contains_key(&g) {
                        queue.push(g);
                    }
                }
            }
        }
        // sums discovered before later elements were added must be revisited
        loop {
            let k = functions.len();
            let mut fresh = Vec::new();
            for i in 0..k {
                for j in i..k {
                    let s: Vec<usize> = functions[i].iter().zip(&functions[j]).map(|(&a, &b)| alg.plus(a, b)).collect();
                    if !seen.contains_key(&s) {
                        seen.insert(s.clone(), ());
                        fresh.push(s);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            functions.extend(fresh);
            if functions.len() > FUNCTION_LIMIT {
                return Err(RingError::TooLarge { size: functions.len(), cap: FUNCTION_LIMIT });
            }
        }
        functions[1..].sort();
        Ok(PolyFunctionSet { functions })
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    fn index(&self) -> HashMap<&[usize], usize> {
        self.functions.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect()
    }

    /// `f(x) + g(x + f(x))`.
    pub fn bullet(alg: &NilpotentAlgebra, f: &[usize], g: &[usize]) -> Vec<usize> {
        (0..f.len()).map(|x| alg.plus(f[x], g[alg.plus(x, f[x])])).collect()
    }

    /// `f(x) ∘ g(x ∘ f(x))`.
    pub fn odot(alg: &NilpotentAlgebra, f: &[usize], g: &[usize]) -> Vec<usize> {
        (0..f.len()).map(|x| alg.circle(f[x], g[alg.circle(x, f[x])])).collect()
    }

    /// Indices of `{f : f(1) = 0}`.
    pub fn vanishing_at_one(&self, alg: &NilpotentAlgebra) -> Vec<usize> {
        let one = alg.scalar(1);
        (0..self.len()).filter(|&i| self.functions[i][one] == 0).collect()
    }
}

fn function_table(
    set: &PolyFunctionSet,
    op: impl Fn(&[usize], &[usize]) -> Vec<usize>,
) -> Result<Vec<usize>, RingError> {
    let k = set.len();
    let index = set.index();
    let mut out = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            let r = op(&set.functions[i], &set.functions[j]);
            out[i * k + j] = *index.get(r.as_slice()).ok_or(RingError::NotClosed { op: "function operation", a: i, b: j })?;
        }
    }
    Ok(out)
}

/// Classical brace on the polynomial functions with pointwise `+` and `•`.
pub fn poly_brace_additive(alg: &NilpotentAlgebra) -> Result<(SkewBrace, PolyFunctionSet), RingError> {
    if !alg.is_commutative() {
        return Err(RingError::NotCommutative);
    }
    let set = PolyFunctionSet::new(alg)?;
    let add = function_table(&set, |f, g| f.iter().zip(g).map(|(&a, &b)| alg.plus(a, b)).collect())?;
    let mul = function_table(&set, |f, g| PolyFunctionSet::bullet(alg, f, g))?;
    let k = set.len();
    let brace = SkewBrace::new(FiniteGroup::from_fn(k, |i, j| add[i * k + j])?, FiniteGroup::from_fn(k, |i, j| mul[i * k + j])?)?;
    assert!(brace.is_classical());
    Ok((brace, set))
}

/// Skew brace on the polynomial functions with pointwise `∘` and `⊙`.
pub fn poly_brace_circle(alg: &NilpotentAlgebra) -> Result<(SkewBrace, PolyFunctionSet), RingError> {
    let set = PolyFunctionSet::new(alg)?;
    let add = function_table(&set, |f, g| f.iter().zip(g).map(|(&a, &b)| alg.circle(a, b)).collect())?;
    let mul = function_table(&set, |f, g| PolyFunctionSet::odot(alg, f, g))?;
    let k = set.len();
    let brace = SkewBrace::new(FiniteGroup::from_fn(k, |i, j| add[i * k + j])?, FiniteGroup::from_fn(k, |i, j| mul[i * k + j])?)?;
    Ok((brace, set))
}

/// Left `•`-inverse of `g` by iterating `f ↦ -g(x + f)` from `f = 0`.
/// Returns the fixed point and the number of iterations.
pub fn nested_bullet_inverse(alg: &NilpotentAlgebra, g: &[usize]) -> (Vec<usize>, usize) {
    let size = g.len();
    let mut f = vec![0; size];
    for step in 1..=alg.nilpotency_index() + 1 {
        let next: Vec<usize> = (0..size).map(|x| alg.neg(g[alg.plus(x, f[x])])).collect();
        if next == f {
            return (f, step - 1);
        }
        f = next;
    }
    (f, alg.nilpotency_index() + 1)
}

/// Left `⊙`-inverse of `g`: with `t = Σ_{i≥1} (-1)^i g^i`, iterate `f ↦ t(x ∘ f)` from `f = 0`.
pub fn nested_odot_inverse(alg: &NilpotentAlgebra, g: &[usize]) -> (Vec<usize>, usize) {
    let size = g.len();
    let nu = alg.nilpotency_index();
    let t: Vec<usize> = (0..size)
        .map(|x| {
            let mut acc = 0;
            let mut power = alg.scalar(1);
            for i in 1..=nu {
                power = alg.times(power, g[x]);
                acc = if i % 2 == 1 { alg.plus(acc, alg.neg(power)) } else { alg.plus(acc, power) };
            }
            acc
        })
        .collect();
    let mut f = vec![0; size];
    for step in 1..=nu + 1 {
        let next: Vec<usize> = (0..size).map(|x| t[alg.circle(x, f[x])]).collect();
        if next == f {
            return (f, step - 1);
        }
        f = next;
    }
    (f, nu + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    #[test]
    fn fields() {
        for q in [2, 3, 4, 5, 7, 8] {
            let f = FiniteField::new(q).unwrap();
            for a in 1..q {
                assert!((1..q).any(|b| f.mul(a, b) == 1), "no inverse of {a} in GF({q})");
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
        }
        assert!(FiniteField::new(6).is_err());
    }

    #[test]
    fn truncated_polynomials() {
        let a = NilpotentAlgebra::truncated_polynomial(2, 2).unwrap();
        assert_eq!(a.nilpotency_index(), 3);
        assert!(a.is_commutative());
        let g = circle_group(&a.nil_ring(), &(0..4).collect::<Vec<_>>()).unwrap();
        // 1 + t has order 4 in the unit group of F2[t]/(t³)
        assert!(are_isomorphic(&g, &FiniteGroup::cyclic(4)).is_some());
    }

    #[test]
    fn zero_ring_circle_is_additive() {
        let g = FiniteGroup::cyclic(6);
        let r = FiniteRing::zero_ring(&g).unwrap();
        let b = circle_brace(&r).unwrap();
        assert!(b.is_trivial());
    }

    #[test]
    fn free_algebra_factorization() {
        let a = NilpotentAlgebra::truncated_free(2, 2, 2).unwrap();
        assert_eq!(a.nil_size(), 64);
        let r = a.nil_ring();
        // basis: x1, x2, x1x1, x1x2, x2x1, x2x2
        let s = a.span(&[vec![1, 0, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0], vec![0, 0, 0, 0, 1, 0]]);
        let i = a.span(&[vec![0, 1, 0, 0, 0, 0], vec![0, 0, 0, 1, 0, 0], vec![0, 0, 0, 0, 0, 1]]);
        let f = ring_exact_factorization(&r, &s, &i).unwrap();
        let b = crate::constructions::brace_from_exact_factorization(&f).unwrap();
        assert_eq!(b.order(), 64);
    }

    #[test]
    fn nil_ring_with_identity_gives_circle_brace() {
        let a = NilpotentAlgebra::truncated_polynomial(3, 2).unwrap();
        let amb = a.ambient_ring();
        let m: Vec<usize> = (0..a.nil_size()).collect();
        let b = construction_subgroup_brace(&amb, &m).unwrap();
        let c = circle_brace(&a.nil_ring()).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn poly_functions_small() {
        let a = NilpotentAlgebra::truncated_polynomial(2, 2).unwrap();
        let (b, set) = poly_brace_additive(&a).unwrap();
        assert_eq!(b.order(), set.len());
        for i in 0..set.len() {
            let (f, steps) = nested_bullet_inverse(&a, &set.functions[i]);
            assert!(steps <= a.nilpotency_index());
            let j = set.functions.iter().position(|h| *h == f).unwrap();
            assert_eq!(b.circ(j, i), 0);
        }
    }
}
