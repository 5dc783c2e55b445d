//! Projective covers over finite rings, via principal indecomposable
//! modules found by brute-force primitive-idempotent search.

use crate::bitset::MAX_ELEMS;
use crate::error::{Error, Result};
use crate::hom::{find_isomorphism, hom_set, Morphism};
use crate::module::{
    closure, direct_sum, regular_module, sub_as_module, superfluous, FiniteModule,
};
use crate::ring::FiniteRing;
use std::sync::Arc;

/// Nonzero idempotents admitting no decomposition into two nonzero
/// orthogonal idempotents.
pub fn primitive_idempotents(ring: &Arc<FiniteRing>) -> Vec<usize> {
    let idems = ring.idempotents();
    idems
        .iter()
        .copied()
        .filter(|&e| e != ring.zero)
        .filter(|&e| {
            !idems.iter().any(|&f| {
                if f == ring.zero || f == e {
                    return false;
                }
                let g = ring.add(e, ring.neg(f));
                g != ring.zero
                    && ring.mul(g, g) == g
                    && ring.mul(f, g) == ring.zero
                    && ring.mul(g, f) == ring.zero
            })
        })
        .collect()
}

/// The principal indecomposable projectives Re, pairwise non-isomorphic,
/// sorted by size.
pub fn principal_indecomposables(ring: &Arc<FiniteRing>) -> Result<Vec<Arc<FiniteModule>>> {
    let (reg, to_mod, _) = regular_module(ring)?;
    let mut out: Vec<Arc<FiniteModule>> = Vec::new();
    for e in primitive_idempotents(ring) {
        let gens: Vec<u32> = (0..ring.n).map(|r| to_mod[ring.mul(r, e)]).collect();
        let re = closure(&reg, &gens);
        let (m, _) = sub_as_module(&reg, &re)?;
        if !out.iter().any(|p| find_isomorphism(p, &m).is_some()) {
            out.push(m);
        }
    }
    out.sort_by_key(|m| m.size);
    Ok(out)
}

/// Smallest direct sum of principal indecomposables admitting a surjection
/// onto `m` with superfluous kernel, together with that surjection.
pub fn projective_cover(m: &Arc<FiniteModule>) -> Result<(Arc<FiniteModule>, Morphism)> {
    if m.is_zero_module() {
        let p = FiniteModule::zero_module(m.ring.clone());
        let epi = Morphism::new(p.clone(), m.clone(), vec![])?;
        return Ok((p, epi));
    }
    let pis = principal_indecomposables(&m.ring)?;
    if pis.is_empty() {
        return Err(Error::Internal("ring has no primitive idempotents".into()));
    }
    // candidates by increasing size: sums of up to 8 indecomposables
    let mut level: Vec<Arc<FiniteModule>> = pis.clone();
    for _ in 0..8 {
        let mut candidates: Vec<&Arc<FiniteModule>> = level.iter().collect();
        candidates.sort_by_key(|p| p.size);
        for p in candidates {
            if p.size < m.size {
                continue; // no surjection possible
            }
            for f in hom_set(p, m) {
                if f.is_surjective() && superfluous(p, &f.kernel()) {
                    return Ok((p.clone(), f));
                }
            }
        }
        let mut next = Vec::new();
        for p in &level {
            for q in &pis {
                if p.size.saturating_mul(q.size) <= MAX_ELEMS {
                    let (s, _, _) = direct_sum(p, q)?;
                    if !next.iter().any(|n| find_isomorphism(n, &s).is_some()) {
                        next.push(s);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Err(Error::CapExceeded(
        "projective cover search exhausted the size budget".into(),
    ))
}
