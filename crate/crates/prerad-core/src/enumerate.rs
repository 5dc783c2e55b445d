//! Exhaustive enumeration of universe preradicals: assignments of a fully
//! invariant submodule to every iso-class, natural across every morphism
//! between universe members. This is the decidable stand-in for
//! quantification over all preradicals at universe scale.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::module::ideal_times_module;
use crate::prerad::{PreradFlags, Preradical};
use crate::universe::ModuleUniverse;

/// A preradical given pointwise on a universe. `assignment[c]` indexes into
/// `uv.submods[c]`; index 0 is always the zero submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversePreradical {
    pub assignment: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreradFilter {
    All,
    Idempotent,
    Radical,
    TRadical,
    IdempotentRadical,
}

impl UniversePreradical {
    pub fn value<'u>(&self, uv: &'u ModuleUniverse, class: usize) -> &'u crate::module::Submodule {
        &uv.submods[class][self.assignment[class]]
    }

    pub fn torsion_mask(&self, uv: &ModuleUniverse) -> u64 {
        (0..uv.num_classes())
            .filter(|&c| self.value(uv, c).is_full(&uv.classes[c]))
            .map(|c| 1u64 << c)
            .sum()
    }

    pub fn torsion_free_mask(&self, uv: &ModuleUniverse) -> u64 {
        (0..uv.num_classes())
            .filter(|&c| self.value(uv, c).is_zero())
            .map(|c| 1u64 << c)
            .sum()
    }

    /// sigma(R) pulled back to a set of ring elements.
    pub fn sigma_r_ideal(&self, uv: &ModuleUniverse) -> ElemSet {
        let mut ideal = ElemSet::empty();
        for x in self.value(uv, uv.regular_class).elems.iter() {
            ideal.insert(uv.mod_to_ring[x] as usize);
        }
        ideal
    }

    /// Classifier flags on the universe. A flag is `None` when deciding it
    /// needs a submodule-as-module whose iso-class lies outside the universe.
    pub fn flags(&self, uv: &ModuleUniverse) -> PreradFlags {
        let n = uv.num_classes();

        let mut idempotent = Some(true);
        for c in 0..n {
            let a = self.assignment[c];
            match &uv.sub_info[c][a] {
                Some(si) => {
                    let inner = self.value(uv, si.class);
                    if si.emb.push_set(&inner.elems) != uv.submods[c][a].elems {
                        idempotent = Some(false);
                        break;
                    }
                }
                None => idempotent = None,
            }
        }

        let radical = Some((0..n).all(|c| {
            let q = uv.quot[c][self.assignment[c]].class;
            self.assignment[q] == 0
        }));

        let ideal = self.sigma_r_ideal(uv);
        let t_radical = Some(
            uv.ring.is_two_sided_ideal(&ideal)
                && (0..n).all(|c| {
                    ideal_times_module(&uv.classes[c], &ideal).elems == self.value(uv, c).elems
                }),
        );

        let mut left_exact = Some(true);
        'le: for c in 0..n {
            let sigma_c = &self.value(uv, c).elems;
            for (j, s) in uv.submods[c].iter().enumerate() {
                match &uv.sub_info[c][j] {
                    Some(si) => {
                        let restricted = si.emb.push_set(&self.value(uv, si.class).elems);
                        if restricted != sigma_c.intersect(&s.elems) {
                            left_exact = Some(false);
                            break 'le;
                        }
                    }
                    None => left_exact = None,
                }
            }
        }

        PreradFlags {
            natural: true,
            idempotent,
            radical,
            t_radical,
            left_exact,
        }
    }

    fn passes(&self, uv: &ModuleUniverse, filter: PreradFilter) -> bool {
        match filter {
            PreradFilter::All => true,
            PreradFilter::Idempotent => self.flags(uv).idempotent == Some(true),
            PreradFilter::Radical => self.flags(uv).radical == Some(true),
            PreradFilter::TRadical => self.flags(uv).t_radical == Some(true),
            PreradFilter::IdempotentRadical => {
                let f = self.flags(uv);
                f.idempotent == Some(true) && f.radical == Some(true)
            }
        }
    }
}

/// All natural assignments, DFS with incremental naturality pruning.
/// `cap` bounds the number of search nodes.
pub fn enumerate_universe_preradicals(
    uv: &ModuleUniverse,
    filter: PreradFilter,
    cap: usize,
) -> Result<Vec<UniversePreradical>> {
    let n = uv.num_classes();
    let fi_indices: Vec<Vec<usize>> = (0..n)
        .map(|c| {
            (0..uv.submods[c].len())
                .filter(|&j| uv.fi[c][j])
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut asg = vec![0usize; n];
    let mut nodes = 0usize;
    dfs(uv, &fi_indices, 0, &mut asg, &mut nodes, cap, &mut out)?;
    out.retain(|p| p.passes(uv, filter));
    Ok(out)
}

fn dfs(
    uv: &ModuleUniverse,
    fi_indices: &[Vec<usize>],
    c: usize,
    asg: &mut Vec<usize>,
    nodes: &mut usize,
    cap: usize,
    out: &mut Vec<UniversePreradical>,
) -> Result<()> {
    let n = uv.num_classes();
    if c == n {
        out.push(UniversePreradical {
            assignment: asg.clone(),
        });
        return Ok(());
    }
    'cand: for &j in &fi_indices[c] {
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::CapExceeded(format!(
                "universe-preradical search exceeded {cap} nodes"
            )));
        }
        let val_c = &uv.submods[c][j].elems;
        // naturality against all previously assigned classes (both directions)
        for p in 0..=c {
            let val_p = &uv.submods[p][asg[p]].elems;
            let vp = if p == c { val_c } else { val_p };
            for f in uv.hom(p, c).iter() {
                if !f.push_set(vp).is_subset(val_c) {
                    continue 'cand;
                }
            }
            if p < c {
                for f in uv.hom(c, p).iter() {
                    if !f.push_set(val_c).is_subset(val_p) {
                        continue 'cand;
                    }
                }
            }
        }
        asg[c] = j;
        dfs(uv, fi_indices, c + 1, asg, nodes, cap, out)?;
    }
    asg[c] = 0;
    Ok(())
}

/// Restriction of a preradical expression to the universe.
pub fn restrict(sig: &Preradical, uv: &ModuleUniverse) -> Result<UniversePreradical> {
    let assignment = uv
        .classes
        .iter()
        .enumerate()
        .map(|(c, m)| {
            let v = sig.eval(m)?;
            uv.find_submodule(c, &v.elems)
                .ok_or_else(|| Error::Internal("eval returned a non-submodule".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniversePreradical { assignment })
}

/// The ideal-induced t-radical family {U -> I*U}, one per two-sided ideal.
pub fn ideal_family(uv: &ModuleUniverse) -> Result<Vec<(ElemSet, UniversePreradical)>> {
    uv.ring
        .two_sided_ideals()
        .into_iter()
        .map(|ideal| {
            let sig = Preradical::ideal_trad(uv.ring.clone(), ideal)?;
            Ok((ideal, restrict(&sig, uv)?))
        })
        .collect()
}
