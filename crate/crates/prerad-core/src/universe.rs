//! Bounded module universes: quotient-closed sets of isomorphism classes
//! with precomputed submodule lattices, quotient maps and hom-sets.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::hom::{find_isomorphism, hom_set, is_fully_invariant, Morphism};
use crate::module::{
    direct_sum, enumerate_submodules, group_name, quotient, regular_module, sub_as_module,
    FiniteModule, Submodule,
};
use crate::ring::FiniteRing;
use std::sync::Arc;

/// Universe class count cap; class subsets are stored in a `u64` bitset.
pub const MAX_CLASSES: usize = 64;

/// Quotient of a universe member by one of its submodules, normalized to a
/// universe representative.
#[derive(Clone, Debug)]
pub struct QuotientInfo {
    pub class: usize,
    /// surjection from the parent onto `classes[class]`
    pub proj: Morphism,
}

/// A submodule of a universe member viewed as a module of its own, when its
/// iso-class happens to lie in the universe.
#[derive(Clone, Debug)]
pub struct SubInfo {
    pub class: usize,
    /// injection of `classes[class]` into the parent with the submodule as image
    pub emb: Morphism,
}

pub struct ModuleUniverse {
    pub ring: Arc<FiniteRing>,
    /// pairwise non-isomorphic representatives, sorted by (size, orders)
    pub classes: Vec<Arc<FiniteModule>>,
    pub names: Vec<String>,
    pub zero_class: usize,
    pub regular_class: usize,
    /// ring element -> element of `classes[regular_class]`, and back
    pub ring_to_mod: Vec<u32>,
    pub mod_to_ring: Vec<u32>,
    pub max_order: usize,
    pub sum_arity: usize,
    /// per class: full submodule lattice, sorted by (size, element set)
    pub submods: Vec<Vec<Submodule>>,
    /// per class, parallel to `submods`: fully invariant?
    pub fi: Vec<Vec<bool>>,
    /// per class, parallel to `submods`: the quotient by that submodule
    pub quot: Vec<Vec<QuotientInfo>>,
    /// per class, parallel to `submods`: the submodule as a universe member
    pub sub_info: Vec<Vec<Option<SubInfo>>>,
    homs: Vec<Vec<Arc<Vec<Morphism>>>>,
}

impl ModuleUniverse {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn hom(&self, src: usize, dst: usize) -> &Arc<Vec<Morphism>> {
        &self.homs[src][dst]
    }

    pub fn find_class(&self, m: &Arc<FiniteModule>) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| find_isomorphism(c, m).is_some())
    }

    /// Index of `set` inside the submodule lattice of `class`.
    pub fn find_submodule(&self, class: usize, set: &ElemSet) -> Option<usize> {
        self.submods[class].iter().position(|s| &s.elems == set)
    }

    pub fn find_class_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all_mask(&self) -> u64 {
        if self.classes.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.classes.len()) - 1
        }
    }

    /// Classes reachable as quotients of `class` (including itself and 0).
    pub fn quotient_reach(&self, class: usize) -> u64 {
        let mut mask = 0u64;
        for q in &self.quot[class] {
            mask |= 1 << q.class;
        }
        mask
    }
}

fn push_if_new(classes: &mut Vec<Arc<FiniteModule>>, m: Arc<FiniteModule>) -> bool {
    if classes.iter().any(|c| find_isomorphism(c, &m).is_some()) {
        false
    } else {
        classes.push(m);
        true
    }
}

fn quotient_close(classes: &mut Vec<Arc<FiniteModule>>) -> Result<()> {
    let mut i = 0;
    while i < classes.len() {
        let m = classes[i].clone();
        for s in enumerate_submodules(&m) {
            let (q, _) = quotient(&m, &s)?;
            push_if_new(classes, q);
            if classes.len() > MAX_CLASSES {
                return Err(Error::CapExceeded(format!(
                    "universe exceeds {MAX_CLASSES} iso-classes"
                )));
            }
        }
        i += 1;
    }
    Ok(())
}

/// Closure of `seeds` under quotients, then direct sums of up to `sum_arity`
/// summands (bounded by `max_order`), then quotients again.
pub fn build_universe(
    ring: &Arc<FiniteRing>,
    seeds: &[Arc<FiniteModule>],
    max_order: usize,
    sum_arity: usize,
) -> Result<ModuleUniverse> {
    if max_order < ring.n {
        return Err(Error::Config {
            path: "universe.max_order".into(),
            msg: format!("max_order {} is below the ring order {}", max_order, ring.n),
        });
    }
    if sum_arity == 0 {
        return Err(Error::Config {
            path: "universe.sum_arity".into(),
            msg: "sum_arity must be positive".into(),
        });
    }
    let (reg, reg_to_mod, _) = regular_module(ring)?;
    if !seeds.iter().any(|s| find_isomorphism(s, &reg).is_some()) {
        return Err(Error::Config {
            path: "universe.seeds".into(),
            msg: "seeds must include the regular module".into(),
        });
    }
    for s in seeds {
        if s.ring != *ring {
            return Err(Error::RingMismatch);
        }
        if s.size > max_order {
            return Err(Error::SizeGuard(format!(
                "seed of order {} exceeds max_order {max_order}",
                s.size
            )));
        }
    }

    let mut classes: Vec<Arc<FiniteModule>> = vec![FiniteModule::zero_module(ring.clone())];
    for s in seeds {
        let (c, _) = crate::module::canonicalize(s);
        push_if_new(&mut classes, c);
    }
    quotient_close(&mut classes)?;

    // direct sums of 2..=sum_arity base members
    let base = classes.clone();
    let mut sums: Vec<(usize, Arc<FiniteModule>)> =
        base.iter().map(|m| (m.size, m.clone())).collect();
    for _ in 2..=sum_arity {
        let mut next = Vec::new();
        for (sz, m) in &sums {
            for b in &base {
                let total = sz * b.size;
                if total <= max_order {
                    let (s, _, _) = direct_sum(m, b)?;
                    next.push((total, s));
                }
            }
        }
        for (_, s) in &next {
            push_if_new(&mut classes, s.clone());
            if classes.len() > MAX_CLASSES {
                return Err(Error::CapExceeded(format!(
                    "universe exceeds {MAX_CLASSES} iso-classes"
                )));
            }
        }
        sums = next;
    }
    quotient_close(&mut classes)?;

    // close under submodules-as-modules so hat/idempotency questions about
    // any member stay decidable inside the universe
    loop {
        let mut added = false;
        let snapshot = classes.clone();
        for m in &snapshot {
            for s in enumerate_submodules(m) {
                let (sm, _) = sub_as_module(m, &s)?;
                if push_if_new(&mut classes, sm) {
                    added = true;
                    if classes.len() > MAX_CLASSES {
                        return Err(Error::CapExceeded(format!(
                            "universe exceeds {MAX_CLASSES} iso-classes"
                        )));
                    }
                }
            }
        }
        if !added {
            break;
        }
        quotient_close(&mut classes)?;
    }

    // deterministic order: by size, then cyclic orders, then action table
    classes.sort_by(|a, b| {
        (a.size, &a.orders)
            .cmp(&(b.size, &b.orders))
            .then_with(|| act_key(a).cmp(&act_key(b)))
    });

    let mut names: Vec<String> = Vec::new();
    for m in &classes {
        let base = group_name(&m.orders);
        let clash = names.iter().filter(|n| trim_tag(n) == base).count();
        names.push(if clash == 0 {
            base
        } else {
            format!("{base}#{}", clash + 1)
        });
    }
    // retag earlier entries of a clashing family
    let clash_bases: Vec<String> = names
        .iter()
        .map(|n| trim_tag(n).to_string())
        .collect::<std::collections::HashSet<_>>()
        .into_iter()
        .filter(|b| names.iter().filter(|n| trim_tag(n) == b).count() > 1)
        .collect();
    for b in clash_bases {
        if let Some(first) = names.iter().position(|n| n == &b) {
            names[first] = format!("{b}#1");
        }
    }

    let zero_class = classes.iter().position(|m| m.is_zero_module()).unwrap();
    let regular_class = classes
        .iter()
        .position(|m| find_isomorphism(m, &reg).is_some())
        .expect("regular module survives closure");
    let reg_iso = find_isomorphism(&reg, &classes[regular_class]).unwrap();
    let ring_to_mod: Vec<u32> = reg_to_mod.iter().map(|&x| reg_iso.apply(x)).collect();
    let mut mod_to_ring = vec![0u32; ring.n];
    for (e, &x) in ring_to_mod.iter().enumerate() {
        mod_to_ring[x as usize] = e as u32;
    }

    let submods: Vec<Vec<Submodule>> = classes.iter().map(|m| enumerate_submodules(m)).collect();
    let fi: Vec<Vec<bool>> = classes
        .iter()
        .zip(submods.iter())
        .map(|(m, subs)| subs.iter().map(|s| is_fully_invariant(m, s)).collect())
        .collect();

    let mut quot: Vec<Vec<QuotientInfo>> = Vec::new();
    let mut sub_info: Vec<Vec<Option<SubInfo>>> = Vec::new();
    for (m, subs) in classes.iter().zip(submods.iter()) {
        let mut qrow = Vec::new();
        let mut srow = Vec::new();
        for s in subs {
            let (q, proj) = quotient(m, s)?;
            let class = classes
                .iter()
                .position(|c| find_isomorphism(&q, c).is_some())
                .ok_or_else(|| Error::Internal("universe is not quotient-closed".into()))?;
            let norm = find_isomorphism(&q, &classes[class]).unwrap();
            qrow.push(QuotientInfo {
                class,
                proj: proj.then(&norm)?,
            });

            let (sm, emb) = sub_as_module(m, s)?;
            srow.push(
                classes
                    .iter()
                    .position(|c| find_isomorphism(c, &sm).is_some())
                    .map(|class| {
                        let norm = find_isomorphism(&classes[class], &sm).unwrap();
                        SubInfo {
                            class,
                            emb: norm.then(&emb).unwrap(),
                        }
                    }),
            );
        }
        quot.push(qrow);
        sub_info.push(srow);
    }

    let homs: Vec<Vec<Arc<Vec<Morphism>>>> = classes
        .iter()
        .map(|a| classes.iter().map(|b| Arc::new(hom_set(a, b))).collect())
        .collect();

    Ok(ModuleUniverse {
        ring: ring.clone(),
        classes,
        names,
        zero_class,
        regular_class,
        ring_to_mod,
        mod_to_ring,
        max_order,
        sum_arity,
        submods,
        fi,
        quot,
        sub_info,
        homs,
    })
}

fn act_key(m: &FiniteModule) -> Vec<u32> {
    (0..m.ring.n)
        .flat_map(|r| (0..m.size as u32).map(move |x| m.act(r, x)))
        .collect()
}

fn trim_tag(name: &str) -> &str {
    name.split('#').next().unwrap()
}

/// Universe with default seeds {R}.
pub fn default_universe(
    ring: &Arc<FiniteRing>,
    max_order: usize,
    sum_arity: usize,
) -> Result<ModuleUniverse> {
    let (reg, _, _) = regular_module(ring)?;
    build_universe(ring, &[reg], max_order, sum_arity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_ring;

    #[test]
    fn zn4_universe_has_six_classes() {
        let r = make_ring("zn:4").unwrap();
        let u = default_universe(&r, 16, 2).unwrap();
        let mut orders: Vec<Vec<u32>> = u.classes.iter().map(|m| m.orders.clone()).collect();
        orders.sort();
        assert_eq!(
            orders,
            vec![
                vec![],
                vec![2],
                vec![2, 2],
                vec![2, 4],
                vec![4],
                vec![4, 4]
            ]
        );
        assert_eq!(u.names[u.zero_class], "0");
        assert_eq!(u.classes[u.regular_class].orders, vec![4]);
    }

    #[test]
    fn zn2_universe() {
        let r = make_ring("zn:2").unwrap();
        let u = default_universe(&r, 4, 2).unwrap();
        assert_eq!(u.num_classes(), 3);
    }

    #[test]
    fn zn6_universe_with_wide_bound() {
        let r = make_ring("zn:6").unwrap();
        let u = default_universe(&r, 36, 2).unwrap();
        assert_eq!(u.num_classes(), 9);
    }

    #[test]
    fn matrix_ring_universe() {
        let r = make_ring("matrix:2:2").unwrap();
        let u = default_universe(&r, 16, 2).unwrap();
        // 0, the simple column space, and R itself (= simple^2)
        assert_eq!(u.num_classes(), 3);
        let sizes: Vec<usize> = u.classes.iter().map(|m| m.size).collect();
        assert_eq!(sizes, vec![1, 4, 16]);
    }

    #[test]
    fn triangular_universe_has_two_distinct_simples() {
        let r = make_ring("triangular:2:2").unwrap();
        let u = default_universe(&r, 16, 2).unwrap();
        let simples: Vec<usize> = (0..u.num_classes())
            .filter(|&i| u.submods[i].len() == 2)
            .collect();
        assert_eq!(simples.len(), 2, "two non-isomorphic simple modules");
        let (a, b) = (simples[0], simples[1]);
        assert_eq!(u.classes[a].orders, u.classes[b].orders);
        assert!(u.hom(a, b).iter().all(|f| f.image_set().len() == 1));
        assert!(u.names[a].contains('#') && u.names[b].contains('#'));
    }

    #[test]
    fn seeds_without_regular_rejected() {
        let r = make_ring("zn:4").unwrap();
        let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
        assert!(build_universe(&r, &[z2], 16, 2).is_err());
    }

    #[test]
    fn quotient_closure_and_markers() {
        let r = make_ring("zn:4").unwrap();
        let u = default_universe(&r, 16, 2).unwrap();
        for i in 0..u.num_classes() {
            for (j, q) in u.quot[i].iter().enumerate() {
                assert!(q.proj.is_surjective());
                assert_eq!(q.proj.kernel().elems, u.submods[i][j].elems);
                assert_eq!(q.proj.dst, u.classes[q.class]);
            }
            for (j, s) in u.sub_info[i].iter().enumerate() {
                let s = s.as_ref().expect("zn universes are submodule-closed");
                assert!(s.emb.is_injective());
                assert_eq!(s.emb.image_set(), u.submods[i][j].elems);
            }
        }
        // regular correspondence respects multiplication
        for a in 0..4 {
            for b in 0..4 {
                let m = &u.classes[u.regular_class];
                assert_eq!(
                    u.ring_to_mod[r.mul(a, b)],
                    m.act(a, u.ring_to_mod[b])
                );
            }
        }
    }
}
