//! Preradical expressions: constructors, evaluation, classification flags,
//! comparison, and torsion/torsion-free classes over a universe.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::hom::{hom_set, is_fully_invariant};
use crate::module::{
    closure, full_submodule, ideal_times_module, intersect_submodules, quotient,
    radical_submodule, socle_submodule, sub_as_module, submodule_from_set, sum_submodules,
    zero_submodule, FiniteModule, Submodule,
};
use crate::ring::FiniteRing;
use crate::universe::ModuleUniverse;
use std::sync::Arc;

/// An expression tree denoting a preradical. Leaves pin down concrete
/// modules/ideals over one ring; `eval` works on any module over that ring.
#[derive(Clone, Debug)]
pub enum Preradical {
    Zero,
    One,
    /// U -> sum of f(N) over f : M -> U (requires N fully invariant)
    Alpha { m: Arc<FiniteModule>, n: Submodule },
    /// U -> intersection of f^{-1}(N) over f : U -> M (requires N fully invariant)
    Omega { m: Arc<FiniteModule>, n: Submodule },
    /// same formula as Omega but N may be arbitrary
    Gamma { m: Arc<FiniteModule>, n: Submodule },
    /// U -> sum of images of M -> U
    Trace(Arc<FiniteModule>),
    /// U -> intersection of kernels of U -> M
    Reject(Arc<FiniteModule>),
    /// U -> I*U for a two-sided ideal I
    IdealTRad {
        ring: Arc<FiniteRing>,
        ideal: ElemSet,
    },
    Rad,
    Soc,
    Meet(Vec<Preradical>),
    Join(Vec<Preradical>),
    /// (sigma . tau)(U) = sigma(tau(U))
    Compose(Box<Preradical>, Box<Preradical>),
    /// (sigma : tau)(U) = preimage in U of sigma(U / tau(U))
    Colon(Box<Preradical>, Box<Preradical>),
    /// largest idempotent preradical below sigma (descending iteration)
    Hat(Box<Preradical>),
    /// least radical above sigma (ascending colon iteration)
    Bar(Box<Preradical>),
}

impl Preradical {
    pub fn alpha(m: Arc<FiniteModule>, n: Submodule) -> Result<Self> {
        if !is_fully_invariant(&m, &n) {
            return Err(Error::NotFullyInvariant(
                "alpha requires a fully invariant submodule".into(),
            ));
        }
        Ok(Preradical::Alpha { m, n })
    }

    pub fn omega(m: Arc<FiniteModule>, n: Submodule) -> Result<Self> {
        if !is_fully_invariant(&m, &n) {
            return Err(Error::NotFullyInvariant(
                "omega requires a fully invariant submodule".into(),
            ));
        }
        Ok(Preradical::Omega { m, n })
    }

    pub fn gamma(m: Arc<FiniteModule>, n: Submodule) -> Self {
        Preradical::Gamma { m, n }
    }

    pub fn trace(m: Arc<FiniteModule>) -> Self {
        Preradical::Trace(m)
    }

    pub fn reject(m: Arc<FiniteModule>) -> Self {
        Preradical::Reject(m)
    }

    pub fn ideal_trad(ring: Arc<FiniteRing>, ideal: ElemSet) -> Result<Self> {
        if !ring.is_two_sided_ideal(&ideal) {
            return Err(Error::NotIdeal(format!("{ideal:?}")));
        }
        Ok(Preradical::IdealTRad { ring, ideal })
    }

    fn leaf_ring(&self) -> Option<Arc<FiniteRing>> {
        match self {
            Preradical::Alpha { m, .. }
            | Preradical::Omega { m, .. }
            | Preradical::Gamma { m, .. }
            | Preradical::Trace(m)
            | Preradical::Reject(m) => Some(m.ring.clone()),
            Preradical::IdealTRad { ring, .. } => Some(ring.clone()),
            Preradical::Meet(xs) | Preradical::Join(xs) => {
                xs.iter().find_map(|x| x.leaf_ring())
            }
            Preradical::Compose(a, b) | Preradical::Colon(a, b) => {
                a.leaf_ring().or_else(|| b.leaf_ring())
            }
            Preradical::Hat(a) | Preradical::Bar(a) => a.leaf_ring(),
            _ => None,
        }
    }

    /// The submodule sigma(U), always fully invariant in U.
    pub fn eval(&self, u: &Arc<FiniteModule>) -> Result<Submodule> {
        if let Some(r) = self.leaf_ring() {
            if r != u.ring {
                return Err(Error::RingMismatch);
            }
        }
        self.eval_inner(u)
    }

    fn eval_inner(&self, u: &Arc<FiniteModule>) -> Result<Submodule> {
        Ok(match self {
            Preradical::Zero => zero_submodule(u),
            Preradical::One => full_submodule(u),
            Preradical::Alpha { m, n } => {
                let mut gens = Vec::new();
                for f in hom_set(m, u) {
                    for &g in &n.gens {
                        gens.push(f.apply(g));
                    }
                }
                closure(u, &gens)
            }
            Preradical::Trace(m) => {
                let mut gens = Vec::new();
                for f in hom_set(m, u) {
                    for j in 0..m.num_gens() {
                        gens.push(f.apply(m.generator(j)));
                    }
                }
                closure(u, &gens)
            }
            Preradical::Omega { m, n } | Preradical::Gamma { m, n } => {
                let mut set = u.full_set();
                for f in hom_set(u, m) {
                    set = set.intersect(&f.preimage_set(&n.elems));
                }
                submodule_from_set(u, set)?
            }
            Preradical::Reject(m) => {
                let mut set = u.full_set();
                for f in hom_set(u, m) {
                    set = set.intersect(&f.kernel_set());
                }
                submodule_from_set(u, set)?
            }
            Preradical::IdealTRad { ideal, .. } => ideal_times_module(u, ideal),
            Preradical::Rad => radical_submodule(u),
            Preradical::Soc => socle_submodule(u),
            Preradical::Meet(xs) => {
                let mut acc = full_submodule(u);
                for x in xs {
                    acc = intersect_submodules(u, &acc, &x.eval_inner(u)?);
                }
                acc
            }
            Preradical::Join(xs) => {
                let mut acc = zero_submodule(u);
                for x in xs {
                    acc = sum_submodules(u, &acc, &x.eval_inner(u)?);
                }
                acc
            }
            Preradical::Compose(sig, tau) => {
                let t = tau.eval_inner(u)?;
                eval_on_sub(sig, u, &t)?
            }
            Preradical::Colon(sig, tau) => {
                let t = tau.eval_inner(u)?;
                colon_step(sig, u, &t)?
            }
            Preradical::Hat(sig) => {
                let mut cur = sig.eval_inner(u)?;
                loop {
                    let next = eval_on_sub(sig, u, &cur)?;
                    if next == cur {
                        break cur;
                    }
                    cur = next;
                }
            }
            Preradical::Bar(sig) => {
                let mut cur = sig.eval_inner(u)?;
                loop {
                    let next = colon_step(sig, u, &cur)?;
                    if next == cur {
                        break cur;
                    }
                    cur = next;
                }
            }
        })
    }
}

/// sigma(N) viewed inside U, for N <= U.
fn eval_on_sub(sig: &Preradical, u: &Arc<FiniteModule>, n: &Submodule) -> Result<Submodule> {
    let (sm, emb) = sub_as_module(u, n)?;
    let v = sig.eval_inner(&sm)?;
    submodule_from_set(u, emb.push_set(&v.elems))
}

/// preimage in U of sigma(U/N).
fn colon_step(sig: &Preradical, u: &Arc<FiniteModule>, n: &Submodule) -> Result<Submodule> {
    let (q, proj) = quotient(u, n)?;
    let v = sig.eval_inner(&q)?;
    submodule_from_set(u, proj.preimage_set(&v.elems))
}

/// Classifier flags, each decided exhaustively over a universe. `None`
/// marks a flag that could not be decided within the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PreradFlags {
    pub natural: bool,
    pub idempotent: Option<bool>,
    pub radical: Option<bool>,
    pub t_radical: Option<bool>,
    pub left_exact: Option<bool>,
}

/// Evaluate on every universe class and decide all flags.
pub fn classify(sig: &Preradical, uv: &ModuleUniverse) -> Result<PreradFlags> {
    let vals: Vec<Submodule> = uv
        .classes
        .iter()
        .map(|c| sig.eval(c))
        .collect::<Result<_>>()?;

    let mut natural = true;
    'nat: for i in 0..uv.num_classes() {
        for j in 0..uv.num_classes() {
            for f in uv.hom(i, j).iter() {
                if !f.push_set(&vals[i].elems).is_subset(&vals[j].elems) {
                    natural = false;
                    break 'nat;
                }
            }
        }
    }

    let mut idempotent = true;
    for (c, v) in uv.classes.iter().zip(vals.iter()) {
        let vv = eval_on_sub(sig, c, v)?;
        if vv != *v {
            idempotent = false;
            break;
        }
    }

    let mut radical = true;
    for (c, v) in uv.classes.iter().zip(vals.iter()) {
        let (q, _) = quotient(c, v)?;
        if !sig.eval(&q)?.is_zero() {
            radical = false;
            break;
        }
    }

    // sigma(R) as a set of ring elements, then compare sigma(U) with I*U
    let sigma_r = &vals[uv.regular_class];
    let mut ideal = ElemSet::empty();
    for x in sigma_r.elems.iter() {
        ideal.insert(uv.mod_to_ring[x] as usize);
    }
    let mut t_radical = uv.ring.is_two_sided_ideal(&ideal);
    if t_radical {
        for (c, v) in uv.classes.iter().zip(vals.iter()) {
            if ideal_times_module(c, &ideal) != *v {
                t_radical = false;
                break;
            }
        }
    }

    let mut left_exact = true;
    'le: for (i, c) in uv.classes.iter().enumerate() {
        for s in &uv.submods[i] {
            let restricted = eval_on_sub(sig, c, s)?;
            if restricted.elems != vals[i].elems.intersect(&s.elems) {
                left_exact = false;
                break 'le;
            }
        }
    }

    Ok(PreradFlags {
        natural,
        idempotent: Some(idempotent),
        radical: Some(radical),
        t_radical: Some(t_radical),
        left_exact: Some(left_exact),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareResult {
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// Order relation restricted to the universe.
pub fn compare(a: &Preradical, b: &Preradical, uv: &ModuleUniverse) -> Result<CompareResult> {
    let mut le = true;
    let mut ge = true;
    for c in &uv.classes {
        let va = a.eval(c)?;
        let vb = b.eval(c)?;
        le &= va.elems.is_subset(&vb.elems);
        ge &= vb.elems.is_subset(&va.elems);
    }
    Ok(match (le, ge) {
        (true, true) => CompareResult::Equal,
        (true, false) => CompareResult::Less,
        (false, true) => CompareResult::Greater,
        (false, false) => CompareResult::Incomparable,
    })
}

/// {U | sigma(U) = U} as a class bitmask.
pub fn torsion_class(sig: &Preradical, uv: &ModuleUniverse) -> Result<u64> {
    let mut mask = 0u64;
    for (i, c) in uv.classes.iter().enumerate() {
        if sig.eval(c)?.is_full(c) {
            mask |= 1 << i;
        }
    }
    Ok(mask)
}

/// {U | sigma(U) = 0} as a class bitmask.
pub fn torsion_free_class(sig: &Preradical, uv: &ModuleUniverse) -> Result<u64> {
    let mut mask = 0u64;
    for (i, c) in uv.classes.iter().enumerate() {
        if sig.eval(c)?.is_zero() {
            mask |= 1 << i;
        }
    }
    Ok(mask)
}

/// Does a finite direct sum of copies of M surject onto K? For finite
/// modules this is equivalent to tr_M(K) = K (see docs/derived-facts.md).
pub fn xi_contains(m: &Arc<FiniteModule>, k: &Arc<FiniteModule>) -> Result<bool> {
    if m.ring != k.ring {
        return Err(Error::RingMismatch);
    }
    Ok(Preradical::trace(m.clone()).eval(k)?.is_full(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;
    use crate::ring::make_ring;
    use crate::universe::default_universe;

    fn zn(n: usize) -> Arc<FiniteRing> {
        make_ring(&format!("zn:{n}")).unwrap()
    }

    fn ideal_of(r: &Arc<FiniteRing>, gen: usize) -> ElemSet {
        r.ideal_closure(&[gen])
    }

    #[test]
    fn reject_of_z6_on_z2_vanishes() {
        let r = zn(6);
        let z6 = FiniteModule::diagonal_module(&r, vec![6]).unwrap();
        let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
        // Z2 embeds in Z6, so the reject of Z6 kills Z2
        assert!(Preradical::reject(z6).eval(&z2).unwrap().is_zero());
    }

    #[test]
    fn extremes() {
        let r = zn(4);
        let z4 = FiniteModule::diagonal_module(&r, vec![4]).unwrap();
        assert!(Preradical::Zero.eval(&z4).unwrap().is_zero());
        assert!(Preradical::One.eval(&z4).unwrap().is_full(&z4));
    }

    #[test]
    fn ideal_trad_on_z4() {
        let r = zn(4);
        let z4 = FiniteModule::diagonal_module(&r, vec![4]).unwrap();
        let sig = Preradical::ideal_trad(r.clone(), ideal_of(&r, 2)).unwrap();
        let v = sig.eval(&z4).unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.contains(2));
    }

    #[test]
    fn reject_is_radical_everywhere() {
        for spec in ["zn:4", "zn:6"] {
            let r = make_ring(spec).unwrap();
            let max = if spec == "zn:6" { 36 } else { 16 };
            let uv = default_universe(&r, max, 2).unwrap();
            for c in &uv.classes {
                let f = classify(&Preradical::reject(c.clone()), &uv).unwrap();
                assert!(f.natural);
                assert_eq!(f.radical, Some(true), "reject of {c:?}");
            }
        }
    }

    #[test]
    fn ideal_trad_flag() {
        let r = zn(4);
        let uv = default_universe(&r, 16, 2).unwrap();
        let sig = Preradical::ideal_trad(r.clone(), ideal_of(&r, 2)).unwrap();
        let f = classify(&sig, &uv).unwrap();
        assert_eq!(f.t_radical, Some(true));
        assert_eq!(f.radical, Some(true));
        assert_eq!(f.idempotent, Some(false));
    }

    #[test]
    fn soc_flags_over_z4() {
        let r = zn(4);
        let uv = default_universe(&r, 16, 2).unwrap();
        let f = classify(&Preradical::Soc, &uv).unwrap();
        assert!(f.natural);
        assert_eq!(f.left_exact, Some(true));
        // soc(Z4 / soc Z4) = soc(Z2) = Z2, not zero
        assert_eq!(f.radical, Some(false));
        assert_eq!(f.idempotent, Some(true));
    }

    #[test]
    fn rad_flags_over_z4() {
        let r = zn(4);
        let uv = default_universe(&r, 16, 2).unwrap();
        let f = classify(&Preradical::Rad, &uv).unwrap();
        assert!(f.natural);
        assert_eq!(f.radical, Some(true));
        assert_eq!(f.t_radical, Some(true), "rad = (2)(_) over Z4");
    }

    #[test]
    fn compare_trace_vs_ideal() {
        let r = zn(6);
        let uv = default_universe(&r, 36, 2).unwrap();
        let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
        let tr = Preradical::trace(z2);
        // (2)*_ kills Z3... no: (2)Z3 = Z3, (2)Z2 = 0 -- opposite of tr_{Z2}
        let it = Preradical::ideal_trad(r.clone(), ideal_of(&r, 2)).unwrap();
        assert_eq!(compare(&tr, &it, &uv).unwrap(), CompareResult::Incomparable);
        assert_eq!(
            compare(&Preradical::Zero, &tr, &uv).unwrap(),
            CompareResult::Less
        );
        assert_eq!(
            compare(&tr, &Preradical::One, &uv).unwrap(),
            CompareResult::Less
        );
    }

    #[test]
    fn torsion_classes() {
        let r = zn(4);
        let uv = default_universe(&r, 16, 2).unwrap();
        let it = Preradical::ideal_trad(r.clone(), ideal_of(&r, 2)).unwrap();
        // 2M = M forces M = 0 over Z4
        assert_eq!(torsion_class(&it, &uv).unwrap(), 1 << uv.zero_class);
        assert_eq!(torsion_class(&Preradical::One, &uv).unwrap(), uv.all_mask());
        assert_eq!(
            torsion_free_class(&Preradical::One, &uv).unwrap(),
            1 << uv.zero_class
        );

        let r6 = zn(6);
        let uv6 = default_universe(&r6, 36, 2).unwrap();
        let z2 = FiniteModule::diagonal_module(&r6, vec![2]).unwrap();
        let t = torsion_class(&Preradical::trace(z2), &uv6).unwrap();
        // exactly the Z2-vector-space members: 0, Z2, Z2+Z2
        let expected: u64 = (0..uv6.num_classes())
            .filter(|&i| uv6.classes[i].orders.iter().all(|&d| d == 2))
            .map(|i| 1 << i)
            .sum();
        assert_eq!(t, expected);
    }

    #[test]
    fn xi_examples() {
        let r4 = zn(4);
        let z2 = FiniteModule::diagonal_module(&r4, vec![2]).unwrap();
        let z4 = FiniteModule::diagonal_module(&r4, vec![4]).unwrap();
        assert!(!xi_contains(&z2, &z4).unwrap());
        assert!(xi_contains(&z4, &z4).unwrap());
        let r6 = zn(6);
        let z6 = FiniteModule::diagonal_module(&r6, vec![6]).unwrap();
        let z2b = FiniteModule::diagonal_module(&r6, vec![2]).unwrap();
        assert!(xi_contains(&z6, &z2b).unwrap());
    }

    #[test]
    fn colon_of_reject_is_reject() {
        let r = zn(4);
        let uv = default_universe(&r, 16, 2).unwrap();
        for c in &uv.classes {
            let rej = Preradical::reject(c.clone());
            let col = Preradical::Colon(Box::new(rej.clone()), Box::new(rej.clone()));
            assert_eq!(compare(&rej, &col, &uv).unwrap(), CompareResult::Equal);
        }
    }

    #[test]
    fn hat_and_bar_of_ideal_trad() {
        let r = zn(4);
        let uv = default_universe(&r, 16, 2).unwrap();
        let sig = Preradical::ideal_trad(r.clone(), ideal_of(&r, 2)).unwrap();
        let hat = Preradical::Hat(Box::new(sig.clone()));
        let bar = Preradical::Bar(Box::new(sig.clone()));
        let fh = classify(&hat, &uv).unwrap();
        assert_eq!(fh.idempotent, Some(true));
        assert_eq!(compare(&hat, &sig, &uv).unwrap(), CompareResult::Less);
        assert_eq!(
            torsion_class(&hat, &uv).unwrap(),
            torsion_class(&sig, &uv).unwrap()
        );
        let fb = classify(&bar, &uv).unwrap();
        assert_eq!(fb.radical, Some(true));
        // sigma is already a radical here, so bar changes nothing
        assert_eq!(compare(&bar, &sig, &uv).unwrap(), CompareResult::Equal);
    }

    #[test]
    fn alpha_omega_require_fully_invariant() {
        let r = zn(6);
        let m = FiniteModule::diagonal_module(&r, vec![2, 2]).unwrap();
        // a line in Z2^2 is not fully invariant (coordinate swap moves it)
        let line = closure(&m, &[m.generator(0)]);
        assert!(Preradical::alpha(m.clone(), line.clone()).is_err());
        assert!(Preradical::omega(m.clone(), line.clone()).is_err());
        // gamma takes it anyway
        let g = Preradical::gamma(m.clone(), line);
        let uv = default_universe(&r, 36, 2).unwrap();
        let f = classify(&g, &uv).unwrap();
        assert!(f.natural);
    }
}
