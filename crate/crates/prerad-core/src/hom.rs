//! Module homomorphisms, hom-set enumeration and isomorphism testing.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{FiniteModule, Submodule, submodule_from_set};
use std::sync::Arc;

/// An R-linear map, stored by its images on the source generators with the
/// full element map precomputed.
#[derive(Clone)]
pub struct Morphism {
    pub src: Arc<FiniteModule>,
    pub dst: Arc<FiniteModule>,
    pub gen_images: Vec<u32>,
    map: Vec<u32>,
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.dst == other.dst && self.map == other.map
    }
}
impl Eq for Morphism {}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Morphism({:?} -> {:?}, gens -> {:?})", self.src, self.dst, self.gen_images)
    }
}

fn build_map(src: &FiniteModule, dst: &FiniteModule, gen_images: &[u32]) -> Vec<u32> {
    (0..src.size as u32)
        .map(|x| {
            let c = src.coords(x);
            let mut acc = 0u32;
            for (j, &cj) in c.iter().enumerate() {
                acc = dst.add(acc, dst.smul(cj as i64, gen_images[j]));
            }
            acc
        })
        .collect()
}

impl Morphism {
    /// Validates that the generator images define an R-linear map.
    pub fn new(
        src: Arc<FiniteModule>,
        dst: Arc<FiniteModule>,
        gen_images: Vec<u32>,
    ) -> Result<Self> {
        if src.ring != dst.ring {
            return Err(Error::RingMismatch);
        }
        if gen_images.len() != src.num_gens() {
            return Err(Error::Module("one image per source generator required".into()));
        }
        for (j, &y) in gen_images.iter().enumerate() {
            if dst.smul(src.orders[j] as i64, y) != 0 {
                return Err(Error::Module(format!(
                    "image of generator {j} is not killed by its order {}",
                    src.orders[j]
                )));
            }
        }
        let map = build_map(&src, &dst, &gen_images);
        for r in 0..src.ring.n {
            for j in 0..src.num_gens() {
                let lhs = map[src.act(r, src.generator(j)) as usize];
                let rhs = dst.act(r, gen_images[j]);
                if lhs != rhs {
                    return Err(Error::Module(format!(
                        "not R-linear: ring element {r} on generator {j}"
                    )));
                }
            }
        }
        Ok(Morphism { src, dst, gen_images, map })
    }

    pub fn identity(m: &Arc<FiniteModule>) -> Self {
        let gen_images = (0..m.num_gens()).map(|j| m.generator(j)).collect();
        Morphism::new(m.clone(), m.clone(), gen_images).expect("identity is linear")
    }

    pub fn zero(src: &Arc<FiniteModule>, dst: &Arc<FiniteModule>) -> Result<Self> {
        Morphism::new(src.clone(), dst.clone(), vec![0; src.num_gens()])
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.map[x as usize]
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        if self.dst != g.src {
            return Err(Error::Module("composition domain mismatch".into()));
        }
        let gen_images = self.gen_images.iter().map(|&y| g.apply(y)).collect();
        Morphism::new(self.src.clone(), g.dst.clone(), gen_images)
    }

    pub fn image_set(&self) -> ElemSet {
        let mut s = ElemSet::empty();
        for x in 0..self.src.size as u32 {
            s.insert(self.apply(x) as usize);
        }
        s
    }

    pub fn image(&self) -> Submodule {
        submodule_from_set(&self.dst, self.image_set()).expect("image is a submodule")
    }

    pub fn kernel_set(&self) -> ElemSet {
        let mut s = ElemSet::empty();
        for x in 0..self.src.size as u32 {
            if self.apply(x) == 0 {
                s.insert(x as usize);
            }
        }
        s
    }

    pub fn kernel(&self) -> Submodule {
        submodule_from_set(&self.src, self.kernel_set()).expect("kernel is a submodule")
    }

    pub fn preimage_set(&self, target: &ElemSet) -> ElemSet {
        let mut s = ElemSet::empty();
        for x in 0..self.src.size as u32 {
            if target.contains(self.apply(x) as usize) {
                s.insert(x as usize);
            }
        }
        s
    }

    pub fn push_set(&self, source: &ElemSet) -> ElemSet {
        let mut s = ElemSet::empty();
        for x in source.iter() {
            s.insert(self.apply(x as u32) as usize);
        }
        s
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_set().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.dst.size
    }

    pub fn is_bijective(&self) -> bool {
        self.src.size == self.dst.size && self.is_injective()
    }

    /// Inverse of a bijective morphism.
    pub fn inverse(&self) -> Result<Morphism> {
        if !self.is_bijective() {
            return Err(Error::Module("morphism is not bijective".into()));
        }
        let mut back = vec![0u32; self.src.size];
        for x in 0..self.src.size as u32 {
            back[self.apply(x) as usize] = x;
        }
        let gen_images = (0..self.dst.num_gens())
            .map(|j| back[self.dst.generator(j) as usize])
            .collect();
        Morphism::new(self.dst.clone(), self.src.clone(), gen_images)
    }
}

/// All R-linear maps `src -> dst`, in a deterministic order.
pub fn hom_set(src: &Arc<FiniteModule>, dst: &Arc<FiniteModule>) -> Vec<Morphism> {
    assert_eq!(src.ring, dst.ring, "hom over mismatched rings");
    let k = src.num_gens();
    // candidate images per generator: elements killed by the generator order
    let cands: Vec<Vec<u32>> = (0..k)
        .map(|j| {
            (0..dst.size as u32)
                .filter(|&y| dst.smul(src.orders[j] as i64, y) == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = vec![0u32; k];
    search_homs(src, dst, &cands, 0, &mut images, &mut out);
    out
}

fn search_homs(
    src: &Arc<FiniteModule>,
    dst: &Arc<FiniteModule>,
    cands: &[Vec<u32>],
    j: usize,
    images: &mut Vec<u32>,
    out: &mut Vec<Morphism>,
) {
    let k = src.num_gens();
    if j == k {
        if let Ok(f) = Morphism::new(src.clone(), dst.clone(), images.clone()) {
            out.push(f);
        }
        return;
    }
    'cand: for &y in &cands[j] {
        images[j] = y;
        // prune: linearity constraints whose coordinates are already fixed
        for r in 0..src.ring.n {
            let acted = src.coords(src.act(r, src.generator(j)));
            if acted.iter().skip(j + 1).all(|&c| c == 0) {
                let mut lhs = 0u32;
                for (t, &c) in acted.iter().enumerate().take(j + 1) {
                    lhs = dst.add(lhs, dst.smul(c as i64, images[t]));
                }
                if lhs != dst.act(r, y) {
                    continue 'cand;
                }
            }
        }
        search_homs(src, dst, cands, j + 1, images, out);
    }
}

pub fn hom_is_zero(src: &Arc<FiniteModule>, dst: &Arc<FiniteModule>) -> bool {
    hom_set(src, dst).iter().all(|f| f.image_set().len() == 1)
}

/// Isomorphism test with an order-histogram prefilter.
pub fn find_isomorphism(a: &Arc<FiniteModule>, b: &Arc<FiniteModule>) -> Option<Morphism> {
    if a.ring != b.ring || a.size != b.size {
        return None;
    }
    let hist = |m: &FiniteModule| {
        let mut h = std::collections::BTreeMap::new();
        for x in 0..m.size as u32 {
            *h.entry(m.add_order(x)).or_insert(0usize) += 1;
        }
        h
    };
    if hist(a) != hist(b) {
        return None;
    }
    hom_set(a, b).into_iter().find(|f| f.is_bijective())
}

pub fn are_isomorphic(a: &Arc<FiniteModule>, b: &Arc<FiniteModule>) -> bool {
    find_isomorphism(a, b).is_some()
}

pub fn is_fully_invariant(m: &Arc<FiniteModule>, s: &Submodule) -> bool {
    hom_set(m, m)
        .iter()
        .all(|f| f.push_set(&s.elems).is_subset(&s.elems))
}

pub fn fully_invariant_submodules(m: &Arc<FiniteModule>) -> Vec<Submodule> {
    let endos = hom_set(m, m);
    crate::module::enumerate_submodules(m)
        .into_iter()
        .filter(|s| endos.iter().all(|f| f.push_set(&s.elems).is_subset(&s.elems)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::*;
    use crate::ring::make_ring;

    fn zn(n: usize) -> Arc<crate::ring::FiniteRing> {
        make_ring(&format!("zn:{n}")).unwrap()
    }

    #[test]
    fn hom_counts_over_z4() {
        let r = zn(4);
        let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
        let z4 = FiniteModule::diagonal_module(&r, vec![4]).unwrap();
        assert_eq!(hom_set(&z2, &z4).len(), 2);
        assert_eq!(hom_set(&z4, &z2).len(), 2);
        assert_eq!(hom_set(&z4, &z4).len(), 4);
        assert!(!hom_is_zero(&z2, &z4));
    }

    #[test]
    fn no_hom_between_coprime_parts() {
        let r = zn(6);
        let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
        let z3 = FiniteModule::diagonal_module(&r, vec![3]).unwrap();
        assert!(hom_is_zero(&z2, &z3));
        assert!(hom_is_zero(&z3, &z2));
    }

    #[test]
    fn iso_and_non_iso() {
        let r = zn(8);
        let a = FiniteModule::diagonal_module(&r, vec![2, 4]).unwrap();
        let b = FiniteModule::diagonal_module(&r, vec![4, 2]).unwrap();
        let c = FiniteModule::diagonal_module(&r, vec![8]).unwrap();
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&a, &c));
        let f = find_isomorphism(&a, &b).unwrap();
        let inv = f.inverse().unwrap();
        let round = f.then(&inv).unwrap();
        assert_eq!(round, Morphism::identity(&a));
    }

    #[test]
    fn quotient_of_z4_by_2z4() {
        let r = zn(4);
        let z4 = FiniteModule::diagonal_module(&r, vec![4]).unwrap();
        let two = closure(&z4, &[2]);
        assert_eq!(two.len(), 2);
        let (q, proj) = quotient(&z4, &two).unwrap();
        assert_eq!(q.orders, vec![2]);
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel(), two);
    }

    #[test]
    fn quotient_noncyclic() {
        let r = zn(4);
        let m = FiniteModule::diagonal_module(&r, vec![4, 4]).unwrap();
        // diagonal subgroup generated by (2,2)
        let g = m.index(&[2, 2]);
        let d = closure(&m, &[g]);
        assert_eq!(d.len(), 2);
        let (q, proj) = quotient(&m, &d).unwrap();
        assert_eq!(q.size, 8);
        assert_eq!(q.orders, vec![2, 4]);
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel(), d);
    }

    #[test]
    fn regular_module_of_z6() {
        let r = zn(6);
        let (m, to_mod, to_ring) = regular_module(&r).unwrap();
        assert_eq!(m.orders, vec![6]);
        for e in 0..6 {
            assert_eq!(to_ring[to_mod[e] as usize] as usize, e);
        }
        // ring multiplication matches module action through the correspondence
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(to_mod[r.mul(a, b)], m.act(a, to_mod[b]));
            }
        }
    }

    #[test]
    fn regular_module_of_triangular_ring() {
        let r = make_ring("triangular:2:2").unwrap();
        let (m, to_mod, _) = regular_module(&r).unwrap();
        assert_eq!(m.size, 8);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(to_mod[r.add(a, b)], m.add(to_mod[a], to_mod[b]));
                assert_eq!(to_mod[r.mul(a, b)], m.act(a, to_mod[b]));
            }
        }
    }

    #[test]
    fn sub_as_module_of_ideal() {
        let r = zn(6);
        let z6 = FiniteModule::diagonal_module(&r, vec![6]).unwrap();
        let s = closure(&z6, &[2]);
        assert_eq!(s.len(), 3);
        let (sm, emb) = sub_as_module(&z6, &s).unwrap();
        assert_eq!(sm.orders, vec![3]);
        assert!(emb.is_injective());
        assert_eq!(emb.image(), s);
    }

    #[test]
    fn direct_sum_z2_z3_is_z6() {
        let r = zn(6);
        let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
        let z3 = FiniteModule::diagonal_module(&r, vec![3]).unwrap();
        let (s, ia, ib) = direct_sum(&z2, &z3).unwrap();
        assert_eq!(s.orders, vec![6]);
        assert!(ia.is_injective() && ib.is_injective());
        assert!(ia.image_set().intersect(&ib.image_set()).len() == 1);
    }

    #[test]
    fn submodule_lattice_of_z12_like() {
        let r = zn(4);
        let m = FiniteModule::diagonal_module(&r, vec![2, 2]).unwrap();
        // Klein four group over Z4: 3 proper nonzero subgroups, all submodules
        assert_eq!(enumerate_submodules(&m).len(), 5);
        let z4 = FiniteModule::diagonal_module(&r, vec![4]).unwrap();
        assert_eq!(enumerate_submodules(&z4).len(), 3);
    }

    #[test]
    fn radical_socle_superfluous() {
        let r = zn(4);
        let z4 = FiniteModule::diagonal_module(&r, vec![4]).unwrap();
        let rad = radical_submodule(&z4);
        let soc = socle_submodule(&z4);
        assert_eq!(rad.len(), 2);
        assert_eq!(soc.len(), 2);
        assert_eq!(rad, soc);
        assert!(superfluous(&z4, &rad));
        assert!(!superfluous(&z4, &full_submodule(&z4)));
        assert!(!is_semisimple(&z4));
        let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
        assert!(is_semisimple(&z2) && is_simple(&z2));
    }

    #[test]
    fn fully_invariant_in_z2_plus_z4() {
        let r = zn(4);
        let m = FiniteModule::diagonal_module(&r, vec![2, 4]).unwrap();
        let all = enumerate_submodules(&m);
        assert_eq!(all.len(), 8);
        let fi = fully_invariant_submodules(&m);
        // 0, soc cap image(2)=0+2Z4... the fully invariant ones of Z2+Z4
        assert!(fi.len() < all.len());
        for s in &fi {
            assert!(is_fully_invariant(&m, s));
        }
    }

    #[test]
    fn ideal_times_module_matches_scaling() {
        let r = zn(6);
        let z6 = FiniteModule::diagonal_module(&r, vec![6]).unwrap();
        let ideals = r.two_sided_ideals();
        let two = ideals.iter().find(|i| i.len() == 3).unwrap();
        let im = ideal_times_module(&z6, two);
        assert_eq!(im.len(), 3);
    }
}
