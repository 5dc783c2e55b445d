//! Submodule products: the box product, comultiplication, the totalizer,
//! and four independently-computed coprimeness criteria.

use crate::error::{Error, Result};
use crate::hom::hom_is_zero;
use crate::module::{
    enumerate_submodules, quotient, submodule_from_set, FiniteModule, Submodule,
};
use crate::prerad::{xi_contains, Preradical};
use std::sync::Arc;

fn check_parent(m: &FiniteModule, s: &Submodule) -> Result<()> {
    if !s.elems.iter().all(|x| x < m.size) {
        return Err(Error::NotSubmodule("submodule exceeds parent".into()));
    }
    Ok(())
}

/// (A box B) is the submodule of M with (A box B)/B = gamma_A^M(M/B).
pub fn box_product(m: &Arc<FiniteModule>, a: &Submodule, b: &Submodule) -> Result<Submodule> {
    check_parent(m, a)?;
    check_parent(m, b)?;
    let (q, proj) = quotient(m, b)?;
    let v = Preradical::gamma(m.clone(), a.clone()).eval(&q)?;
    submodule_from_set(m, proj.preimage_set(&v.elems))
}

/// (A : B) is the submodule of M with (A:B)/B = reject of M/A evaluated on M/B.
pub fn comultiplication(m: &Arc<FiniteModule>, a: &Submodule, b: &Submodule) -> Result<Submodule> {
    check_parent(m, a)?;
    check_parent(m, b)?;
    let (qa, _) = quotient(m, a)?;
    let (qb, proj) = quotient(m, b)?;
    let v = Preradical::reject(qa).eval(&qb)?;
    submodule_from_set(m, proj.preimage_set(&v.elems))
}

/// Least U <= M with (U : N) = M, computed as the intersection of all B
/// with Hom(M/N, M/B) = 0.
pub fn totalizer(m: &Arc<FiniteModule>, n: &Submodule) -> Result<Submodule> {
    check_parent(m, n)?;
    let (qn, _) = quotient(m, n)?;
    let mut set = m.full_set();
    for b in enumerate_submodules(m) {
        let (qb, _) = quotient(m, &b)?;
        if hom_is_zero(&qn, &qb) {
            set = set.intersect(&b.elems);
        }
    }
    submodule_from_set(m, set)
}

/// Totalizer plus explicit re-verification of its universal property:
/// `(Tot : N) = M` and no strictly smaller submodule achieves that.
pub fn totalizer_check(m: &Arc<FiniteModule>, n: &Submodule) -> Result<(Submodule, bool, bool)> {
    let tot = totalizer(m, n)?;
    let universal = comultiplication(m, &tot, n)?.is_full(m);
    let mut minimal = true;
    for b in enumerate_submodules(m) {
        if b.elems != tot.elems && b.elems.is_subset(&tot.elems) {
            if comultiplication(m, &b, n)?.is_full(m) {
                minimal = false;
                break;
            }
        }
    }
    Ok((tot, universal, minimal))
}

/// Four independently computed coprimeness criteria with first-failure
/// witnesses (submodule generator lists).
#[derive(Clone, Debug)]
pub struct CoprimeVerdict {
    pub by_xi: bool,
    pub by_box: bool,
    pub by_comult: bool,
    pub by_hom: bool,
    pub witness_xi: Option<Vec<u32>>,
    pub witness_box: Option<(Vec<u32>, Vec<u32>)>,
    pub witness_comult: Option<(Vec<u32>, Vec<u32>)>,
    pub witness_hom: Option<(Vec<u32>, Vec<u32>)>,
}

pub fn coprime_verdict(m: &Arc<FiniteModule>) -> Result<CoprimeVerdict> {
    let subs = enumerate_submodules(m);
    let proper: Vec<&Submodule> = subs.iter().filter(|s| !s.is_full(m)).collect();
    let quots: Vec<Arc<FiniteModule>> = proper
        .iter()
        .map(|s| quotient(m, s).map(|(q, _)| q))
        .collect::<Result<_>>()?;

    let mut v = CoprimeVerdict {
        by_xi: true,
        by_box: true,
        by_comult: true,
        by_hom: true,
        witness_xi: None,
        witness_box: None,
        witness_comult: None,
        witness_hom: None,
    };

    for (s, q) in proper.iter().zip(quots.iter()) {
        if v.by_xi && !xi_contains(q, m)? {
            v.by_xi = false;
            v.witness_xi = Some(s.gens.clone());
        }
    }
    for (l, ql) in proper.iter().zip(quots.iter()) {
        for (nn, qn) in proper.iter().zip(quots.iter()) {
            let pair = || (l.gens.clone(), nn.gens.clone());
            if v.by_box && box_product(m, l, nn)?.is_full(m) {
                v.by_box = false;
                v.witness_box = Some(pair());
            }
            if v.by_comult && comultiplication(m, l, nn)?.is_full(m) {
                v.by_comult = false;
                v.witness_comult = Some(pair());
            }
            if v.by_hom && hom_is_zero(ql, qn) {
                v.by_hom = false;
                v.witness_hom = Some(pair());
            }
        }
    }
    Ok(v)
}
