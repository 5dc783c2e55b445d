//! Finite left modules presented as direct sums of cyclic groups with a
//! validated ring action, plus submodule lattices, quotients, sums and
//! subgroup presentations.

use crate::bitset::{ElemSet, MAX_ELEMS};
use crate::error::{Error, Result};
use crate::hom::Morphism;
use crate::ring::FiniteRing;
use crate::snf::smith;
use std::collections::HashMap;
use std::sync::Arc;

/// A finite left module. Elements are mixed-radix indices over the
/// generator coordinates; all operation tables are precomputed.
#[derive(Clone)]
pub struct FiniteModule {
    pub ring: Arc<FiniteRing>,
    /// Cyclic orders of the generators, each >= 2. Canonical modules carry
    /// an ascending divisibility chain; the empty list is the zero module.
    pub orders: Vec<u32>,
    pub size: usize,
    strides: Vec<usize>,
    add_t: Vec<u32>,
    neg_t: Vec<u32>,
    act_t: Vec<u32>,
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders && self.act_t == other.act_t && self.ring == other.ring
    }
}
impl Eq for FiniteModule {}

impl std::fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module({} over {})", group_name(&self.orders), self.ring.tag)
    }
}

/// Additive-group display name, e.g. `Z2+Z4`, or `0`.
pub fn group_name(orders: &[u32]) -> String {
    if orders.is_empty() {
        "0".to_string()
    } else {
        orders
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl FiniteModule {
    /// Build and validate a module. `action[r]` is a k x k integer matrix
    /// whose column `j` gives the coordinates of `r * e_j`.
    pub fn new(
        ring: Arc<FiniteRing>,
        orders: Vec<u32>,
        action: &[Vec<Vec<i64>>],
    ) -> Result<Arc<Self>> {
        let k = orders.len();
        if orders.iter().any(|&d| d < 2) {
            return Err(Error::Module("cyclic orders must be >= 2".into()));
        }
        let mut size = 1usize;
        for &d in &orders {
            size = size.saturating_mul(d as usize);
            if size > MAX_ELEMS {
                return Err(Error::SizeGuard(format!(
                    "module order exceeds {MAX_ELEMS}"
                )));
            }
        }
        if action.len() != ring.n {
            return Err(Error::Module("one action matrix per ring element required".into()));
        }
        let mut strides = vec![0usize; k];
        let mut acc = 1usize;
        for j in (0..k).rev() {
            strides[j] = acc;
            acc *= orders[j] as usize;
        }

        let mut m = FiniteModule {
            ring: ring.clone(),
            orders,
            size,
            strides,
            add_t: Vec::new(),
            neg_t: Vec::new(),
            act_t: Vec::new(),
        };

        // addition / negation tables
        let mut add_t = vec![0u32; size * size];
        let mut neg_t = vec![0u32; size];
        for a in 0..size {
            let ca = m.coords(a as u32);
            neg_t[a] = m.index(&ca.iter().map(|&c| -(c as i64)).collect::<Vec<_>>());
            for b in 0..size {
                let cb = m.coords(b as u32);
                let sum: Vec<i64> = ca
                    .iter()
                    .zip(cb.iter())
                    .map(|(&x, &y)| x as i64 + y as i64)
                    .collect();
                add_t[a * size + b] = m.index(&sum);
            }
        }
        m.add_t = add_t;
        m.neg_t = neg_t;

        // action table
        let mut act_t = vec![0u32; ring.n * size];
        for r in 0..ring.n {
            let mat = &action[r];
            if mat.len() != k || mat.iter().any(|row| row.len() != k) {
                return Err(Error::Module(format!("action matrix for ring element {r} is not {k}x{k}")));
            }
            for x in 0..size {
                let cx = m.coords(x as u32);
                let out: Vec<i64> = (0..k)
                    .map(|i| (0..k).map(|j| mat[i][j] * cx[j] as i64).sum())
                    .collect();
                act_t[r * size + x] = m.index(&out);
            }
        }
        m.act_t = act_t;

        // well-defined: the order of e_j kills r * e_j
        for j in 0..k {
            let ej = m.generator(j);
            for r in 0..ring.n {
                if m.smul(m.orders[j] as i64, m.act(r, ej)) != 0 {
                    return Err(Error::Module(format!(
                        "action of ring element {r} is not well defined on generator {j}"
                    )));
                }
            }
        }
        // unit acts as identity; action is additive and multiplicative in R
        for j in 0..k {
            let ej = m.generator(j);
            if m.act(ring.one, ej) != ej {
                return Err(Error::Module(format!("1 does not fix generator {j}")));
            }
            for r in 0..ring.n {
                for s in 0..ring.n {
                    if m.act(ring.add(r, s), ej) != m.add(m.act(r, ej), m.act(s, ej)) {
                        return Err(Error::Module(format!(
                            "action not additive in the ring at ({r},{s}) on generator {j}"
                        )));
                    }
                    if m.act(ring.mul(r, s), ej) != m.act(r, m.act(s, ej)) {
                        return Err(Error::Module(format!(
                            "action not multiplicative at ({r},{s}) on generator {j}"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(m))
    }

    pub fn zero_module(ring: Arc<FiniteRing>) -> Arc<Self> {
        let n = ring.n;
        FiniteModule::new(ring, vec![], &vec![vec![]; n]).expect("zero module is valid")
    }

    /// Cyclic module Z_d over zn-style rings: the ring must act through
    /// reduction mod d, which `new` validates.
    pub fn diagonal_module(ring: &Arc<FiniteRing>, orders: Vec<u32>) -> Result<Arc<Self>> {
        // only meaningful when ring elements are residues 0..n-1 (zn:n)
        let k = orders.len();
        let action: Vec<Vec<Vec<i64>>> = (0..ring.n)
            .map(|r| {
                (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| if i == j { r as i64 } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        FiniteModule::new(ring.clone(), orders, &action)
    }

    pub fn num_gens(&self) -> usize {
        self.orders.len()
    }

    pub fn generator(&self, j: usize) -> u32 {
        self.strides[j] as u32
    }

    pub fn coords(&self, x: u32) -> Vec<u32> {
        let mut x = x as usize;
        let mut out = Vec::with_capacity(self.orders.len());
        for j in 0..self.orders.len() {
            out.push((x / self.strides[j]) as u32);
            x %= self.strides[j];
        }
        out
    }

    pub fn index(&self, coords: &[i64]) -> u32 {
        let mut idx = 0usize;
        for (j, &c) in coords.iter().enumerate() {
            let d = self.orders[j] as i64;
            idx += (c.rem_euclid(d)) as usize * self.strides[j];
        }
        idx as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add_t[a as usize * self.size + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg_t[a as usize]
    }
    #[inline]
    pub fn act(&self, r: usize, a: u32) -> u32 {
        self.act_t[r * self.size + a as usize]
    }

    pub fn smul(&self, c: i64, a: u32) -> u32 {
        let mut c = c;
        if c < 0 {
            c = -c;
            return self.smul(c, self.neg(a));
        }
        let mut acc = 0u32;
        let mut base = a;
        let mut c = c as u64 % (self.size.max(1) as u64 * 2);
        // double-and-add; orders are tiny but entries from SNF lifts can be large
        while c > 0 {
            if c & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            c >>= 1;
        }
        acc
    }

    pub fn add_order(&self, a: u32) -> u32 {
        let mut n = 1u32;
        let mut x = a;
        while x != 0 {
            x = self.add(x, a);
            n += 1;
        }
        n
    }

    pub fn is_zero_module(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size as u32
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.size)
    }
}

/// A submodule, stored as its element set plus a generator witness.
/// Equality is by element set.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub elems: ElemSet,
    pub gens: Vec<u32>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}
impl Eq for Submodule {}

impl Submodule {
    pub fn len(&self) -> usize {
        self.elems.len()
    }
    pub fn is_zero(&self) -> bool {
        self.elems.len() == 1
    }
    pub fn contains(&self, x: u32) -> bool {
        self.elems.contains(x as usize)
    }
    pub fn is_full(&self, m: &FiniteModule) -> bool {
        self.elems.len() == m.size
    }
}

/// Smallest submodule of `m` containing `gens`.
pub fn closure(m: &FiniteModule, gens: &[u32]) -> Submodule {
    let mut set = ElemSet::singleton(0);
    for &g in gens {
        set.insert(g as usize);
    }
    loop {
        let mut next = set;
        let elems: Vec<usize> = set.iter().collect();
        for &x in &elems {
            for &y in &elems {
                next.insert(m.add(x as u32, y as u32) as usize);
            }
            for r in 0..m.ring.n {
                next.insert(m.act(r, x as u32) as usize);
            }
        }
        if next == set {
            break;
        }
        set = next;
    }
    let gens = minimize_gens(m, &set, gens);
    Submodule { elems: set, gens }
}

fn minimize_gens(m: &FiniteModule, target: &ElemSet, gens: &[u32]) -> Vec<u32> {
    let mut kept: Vec<u32> = Vec::new();
    for &g in gens {
        let cur = raw_closure(m, &kept);
        if !cur.contains(g as usize) {
            kept.push(g);
        }
    }
    debug_assert_eq!(&raw_closure(m, &kept), target);
    kept
}

fn raw_closure(m: &FiniteModule, gens: &[u32]) -> ElemSet {
    let mut set = ElemSet::singleton(0);
    for &g in gens {
        set.insert(g as usize);
    }
    loop {
        let mut next = set;
        let elems: Vec<usize> = set.iter().collect();
        for &x in &elems {
            for &y in &elems {
                next.insert(m.add(x as u32, y as u32) as usize);
            }
            for r in 0..m.ring.n {
                next.insert(m.act(r, x as u32) as usize);
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

pub fn zero_submodule(_m: &FiniteModule) -> Submodule {
    Submodule {
        elems: ElemSet::singleton(0),
        gens: vec![],
    }
}

pub fn full_submodule(m: &FiniteModule) -> Submodule {
    let gens = (0..m.num_gens()).map(|j| m.generator(j)).collect();
    Submodule {
        elems: m.full_set(),
        gens,
    }
}

/// Interpret an element set as a submodule, verifying closure.
pub fn submodule_from_set(m: &FiniteModule, set: ElemSet) -> Result<Submodule> {
    let gens: Vec<u32> = set.iter().map(|x| x as u32).collect();
    let closed = closure(m, &gens);
    if closed.elems != set {
        return Err(Error::NotSubmodule(format!(
            "set of size {} is not closed under the module operations",
            set.len()
        )));
    }
    Ok(closed)
}

pub fn sum_submodules(m: &FiniteModule, a: &Submodule, b: &Submodule) -> Submodule {
    let gens: Vec<u32> = a.gens.iter().chain(b.gens.iter()).copied().collect();
    closure(m, &gens)
}

pub fn intersect_submodules(m: &FiniteModule, a: &Submodule, b: &Submodule) -> Submodule {
    submodule_from_set(m, a.elems.intersect(&b.elems))
        .expect("intersection of submodules is a submodule")
}

/// All submodules of `m`, ordered by (size, element set).
pub fn enumerate_submodules(m: &FiniteModule) -> Vec<Submodule> {
    let mut found: Vec<Submodule> = vec![zero_submodule(m)];
    let mut seen: std::collections::HashSet<ElemSet> =
        found.iter().map(|s| s.elems).collect();
    let mut i = 0;
    while i < found.len() {
        let base = found[i].clone();
        for x in 0..m.size as u32 {
            if base.contains(x) {
                continue;
            }
            let mut gens = base.gens.clone();
            gens.push(x);
            let bigger = closure(m, &gens);
            if seen.insert(bigger.elems) {
                found.push(bigger);
            }
        }
        i += 1;
    }
    found.sort_by_key(|s| (s.len(), s.elems));
    found
}

/// Is `n` superfluous (small) in `m`: `n + k` proper for every proper `k`.
pub fn superfluous(m: &FiniteModule, n: &Submodule) -> bool {
    for k in enumerate_submodules(m) {
        if k.is_full(m) {
            continue;
        }
        if sum_submodules(m, n, &k).is_full(m) {
            return false;
        }
    }
    true
}

pub fn maximal_submodules(m: &FiniteModule) -> Vec<Submodule> {
    let subs = enumerate_submodules(m);
    subs.iter()
        .filter(|s| !s.is_full(m))
        .filter(|s| {
            !subs
                .iter()
                .any(|t| !t.is_full(m) && s.elems != t.elems && s.elems.is_subset(&t.elems))
        })
        .cloned()
        .collect()
}

/// Jacobson radical of the module: intersection of the maximal submodules
/// (the whole module when there are none, i.e. only for the zero module).
pub fn radical_submodule(m: &FiniteModule) -> Submodule {
    let maxes = maximal_submodules(m);
    let mut set = m.full_set();
    for s in &maxes {
        set = set.intersect(&s.elems);
    }
    submodule_from_set(m, set).expect("intersection of submodules")
}

/// Socle: sum of the minimal nonzero submodules.
pub fn socle_submodule(m: &FiniteModule) -> Submodule {
    let subs = enumerate_submodules(m);
    let minimal: Vec<&Submodule> = subs
        .iter()
        .filter(|s| !s.is_zero())
        .filter(|s| {
            !subs
                .iter()
                .any(|t| !t.is_zero() && t.elems != s.elems && t.elems.is_subset(&s.elems))
        })
        .collect();
    let mut acc = zero_submodule(m);
    for s in minimal {
        acc = sum_submodules(m, &acc, s);
    }
    acc
}

pub fn is_semisimple(m: &FiniteModule) -> bool {
    socle_submodule(m).is_full(m)
}

pub fn is_simple(m: &FiniteModule) -> bool {
    !m.is_zero_module() && enumerate_submodules(m).len() == 2
}

/// Quotient `m / n` in canonical cyclic form, with the projection.
pub fn quotient(m: &Arc<FiniteModule>, n: &Submodule) -> Result<(Arc<FiniteModule>, Morphism)> {
    // verify n really is a submodule of m
    let n = submodule_from_set(m, n.elems)?;
    let k = m.num_gens();
    if k == 0 {
        let q = FiniteModule::zero_module(m.ring.clone());
        let proj = Morphism::new(m.clone(), q.clone(), vec![])?;
        return Ok((q, proj));
    }
    // relation lattice: generator orders plus (all) elements of n
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for j in 0..k {
        let mut c = vec![0i64; k];
        c[j] = m.orders[j] as i64;
        cols.push(c);
    }
    for x in n.elems.iter() {
        cols.push(m.coords(x as u32).iter().map(|&c| c as i64).collect());
    }
    let a: Vec<Vec<i64>> = (0..k)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    let snf = smith(a);
    let expected = (m.size / n.len()) as i64;
    let got: i64 = snf.diag.iter().product();
    debug_assert_eq!(got, expected, "quotient order mismatch");

    let kept: Vec<usize> = (0..k).filter(|&i| snf.diag[i] >= 2).collect();
    let q_orders: Vec<u32> = kept.iter().map(|&i| snf.diag[i] as u32).collect();

    let project = |x: u32| -> Vec<i64> {
        let cx = m.coords(x);
        kept.iter()
            .map(|&i| {
                (0..k)
                    .map(|j| snf.u[i][j] * cx[j] as i64)
                    .sum::<i64>()
                    .rem_euclid(snf.diag[i])
            })
            .collect()
    };

    // lifts of the quotient generators back into m
    let lifts: Vec<u32> = kept
        .iter()
        .map(|&p| {
            let col: Vec<i64> = (0..k).map(|s| snf.u_inv[s][p]).collect();
            m.index(&col)
        })
        .collect();

    let action: Vec<Vec<Vec<i64>>> = (0..m.ring.n)
        .map(|r| {
            let cols: Vec<Vec<i64>> = lifts.iter().map(|&l| project(m.act(r, l))).collect();
            (0..kept.len())
                .map(|i| (0..kept.len()).map(|j| cols[j][i]).collect())
                .collect()
        })
        .collect();
    let q = FiniteModule::new(m.ring.clone(), q_orders, &action)?;
    let gen_images: Vec<u32> = (0..k).map(|j| q.index(&project(m.generator(j)))).collect();
    let proj = Morphism::new(m.clone(), q.clone(), gen_images)?;
    Ok((q, proj))
}

/// Canonical form of `m` (ascending divisibility chain), with the
/// isomorphism onto it.
pub fn canonicalize(m: &Arc<FiniteModule>) -> (Arc<FiniteModule>, Morphism) {
    quotient(m, &zero_submodule(m)).expect("quotient by zero always exists")
}

/// External direct sum in canonical form, with both injections.
pub fn direct_sum(
    a: &Arc<FiniteModule>,
    b: &Arc<FiniteModule>,
) -> Result<(Arc<FiniteModule>, Morphism, Morphism)> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    if a.size.saturating_mul(b.size) > MAX_ELEMS {
        return Err(Error::SizeGuard(format!(
            "direct sum order {} exceeds {MAX_ELEMS}",
            a.size * b.size
        )));
    }
    let ka = a.num_gens();
    let kb = b.num_gens();
    let k = ka + kb;
    let orders: Vec<u32> = a.orders.iter().chain(b.orders.iter()).copied().collect();
    let action: Vec<Vec<Vec<i64>>> = (0..a.ring.n)
        .map(|r| {
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            if i < ka && j < ka {
                                let ca = a.coords(a.act(r, a.generator(j)));
                                ca[i] as i64
                            } else if i >= ka && j >= ka {
                                let cb = b.coords(b.act(r, b.generator(j - ka)));
                                cb[i - ka] as i64
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let concat = FiniteModule::new(a.ring.clone(), orders, &action)?;
    let emb_a = Morphism::new(
        a.clone(),
        concat.clone(),
        (0..ka).map(|j| concat.generator(j)).collect(),
    )?;
    let emb_b = Morphism::new(
        b.clone(),
        concat.clone(),
        (0..kb).map(|j| concat.generator(ka + j)).collect(),
    )?;
    let (q, iso) = canonicalize(&concat);
    Ok((q, emb_a.then(&iso)?, emb_b.then(&iso)?))
}

/// Present a closed subset (with ambient operations) as a module of its
/// own. Returns the module, the map ambient-element -> new index, and the
/// ambient lifts of the new generators.
fn present_group(
    ring: &Arc<FiniteRing>,
    elems: &[usize],
    add: &dyn Fn(usize, usize) -> usize,
    act: &dyn Fn(usize, usize) -> usize,
) -> Result<(Arc<FiniteModule>, HashMap<usize, u32>, Vec<usize>)> {
    let zero_id = *elems.first().ok_or_else(|| Error::Internal("empty carrier".into()))?;
    debug_assert_eq!(add(zero_id, zero_id), zero_id);
    // greedy generators with coordinate bookkeeping
    let mut gens: Vec<usize> = Vec::new();
    let mut coords: HashMap<usize, Vec<i64>> = HashMap::new();
    coords.insert(zero_id, vec![]);
    for &e in elems {
        if coords.contains_key(&e) {
            continue;
        }
        gens.push(e);
        let t = gens.len();
        for c in coords.values_mut() {
            c.resize(t, 0);
        }
        let mut c = vec![0i64; t];
        c[t - 1] = 1;
        coords.insert(e, c);
        // close under all generators so far
        let mut wl: Vec<usize> = coords.keys().copied().collect();
        while let Some(x) = wl.pop() {
            for (s, &g) in gens.iter().enumerate() {
                let y = add(x, g);
                if !coords.contains_key(&y) {
                    let mut cy = coords[&x].clone();
                    cy[s] += 1;
                    coords.insert(y, cy);
                    wl.push(y);
                }
            }
        }
    }
    let t = gens.len();
    if t == 0 {
        let q = FiniteModule::zero_module(ring.clone());
        let mut phi = HashMap::new();
        phi.insert(zero_id, 0u32);
        return Ok((q, phi, vec![]));
    }
    // relations: c(x) + e_s - c(x + g_s), over all x
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for &x in elems {
        for (s, &g) in gens.iter().enumerate() {
            let y = add(x, g);
            let mut rel = coords[&x].clone();
            rel[s] += 1;
            for (i, v) in coords[&y].iter().enumerate() {
                rel[i] -= v;
            }
            if rel.iter().any(|&v| v != 0) {
                cols.push(rel);
            }
        }
    }
    let a: Vec<Vec<i64>> = (0..t)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    let snf = smith(a);
    let order: i64 = snf.diag.iter().product();
    if order != elems.len() as i64 {
        return Err(Error::Internal(format!(
            "presentation order {} != carrier size {}",
            order,
            elems.len()
        )));
    }
    let kept: Vec<usize> = (0..t).filter(|&i| snf.diag[i] >= 2).collect();
    let q_orders: Vec<u32> = kept.iter().map(|&i| snf.diag[i] as u32).collect();

    let reduce = |c: &[i64]| -> Vec<i64> {
        kept.iter()
            .map(|&i| {
                (0..t)
                    .map(|j| snf.u[i][j] * c[j])
                    .sum::<i64>()
                    .rem_euclid(snf.diag[i])
            })
            .collect()
    };

    // ambient lifts of the new generators
    let exponent: i64 = order.max(1);
    let lifts: Vec<usize> = kept
        .iter()
        .map(|&p| {
            let mut acc = zero_id;
            for s in 0..t {
                let mut c = snf.u_inv[s][p].rem_euclid(exponent);
                while c > 0 {
                    acc = add(acc, gens[s]);
                    c -= 1;
                }
            }
            acc
        })
        .collect();

    let k = kept.len();
    let action: Vec<Vec<Vec<i64>>> = (0..ring.n)
        .map(|r| {
            let acted: Vec<Vec<i64>> = lifts.iter().map(|&l| reduce(&coords[&act(r, l)])).collect();
            (0..k)
                .map(|i| (0..k).map(|j| acted[j][i]).collect())
                .collect()
        })
        .collect();
    let q = FiniteModule::new(ring.clone(), q_orders, &action)?;
    let phi: HashMap<usize, u32> = elems
        .iter()
        .map(|&e| (e, q.index(&reduce(&coords[&e]))))
        .collect();
    Ok((q, phi, lifts))
}

/// A submodule as a module of its own, with the embedding into the parent.
pub fn sub_as_module(
    m: &Arc<FiniteModule>,
    s: &Submodule,
) -> Result<(Arc<FiniteModule>, Morphism)> {
    let elems: Vec<usize> = {
        let mut v: Vec<usize> = s.elems.iter().collect();
        // zero first (it is index 0 in the parent, so already smallest)
        v.sort_unstable();
        v
    };
    if !s.elems.contains(0) {
        return Err(Error::NotSubmodule("set does not contain zero".into()));
    }
    let ring = m.ring.clone();
    let madd = |x: usize, y: usize| m.add(x as u32, y as u32) as usize;
    let mact = |r: usize, x: usize| m.act(r, x as u32) as usize;
    let (q, phi, lifts) = present_group(&ring, &elems, &madd, &mact)?;
    let gen_images: Vec<u32> = lifts.iter().map(|&l| l as u32).collect();
    let emb = Morphism::new(q.clone(), m.clone(), gen_images)?;
    // phi inverts emb on the carrier; sanity-check one direction
    debug_assert!(elems.iter().all(|&e| emb.apply(phi[&e]) == e as u32));
    Ok((q, emb))
}

/// The regular left module, with both directions of the correspondence
/// between ring elements and module elements.
pub fn regular_module(ring: &Arc<FiniteRing>) -> Result<(Arc<FiniteModule>, Vec<u32>, Vec<u32>)> {
    let mut elems: Vec<usize> = (0..ring.n).collect();
    // zero first
    elems.swap(0, ring.zero);
    let radd = |x: usize, y: usize| ring.add(x, y);
    let ract = |r: usize, x: usize| ring.mul(r, x);
    let (q, phi, _lifts) = present_group(ring, &elems, &radd, &ract)?;
    let ring_to_mod: Vec<u32> = (0..ring.n).map(|e| phi[&e]).collect();
    let mut mod_to_ring = vec![0u32; ring.n];
    for (e, &i) in ring_to_mod.iter().enumerate() {
        mod_to_ring[i as usize] = e as u32;
    }
    Ok((q, ring_to_mod, mod_to_ring))
}

/// `I * M` for a two-sided ideal `I` (given as ring-element set).
pub fn ideal_times_module(m: &FiniteModule, ideal: &ElemSet) -> Submodule {
    let mut gens: Vec<u32> = Vec::new();
    for r in ideal.iter() {
        for x in 0..m.size as u32 {
            gens.push(m.act(r, x));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    closure(m, &gens)
}
