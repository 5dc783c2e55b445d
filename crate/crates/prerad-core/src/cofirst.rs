//! Co-first, second and dihollow predicates over a universe, and the class
//! triple (P, P-bar, S, T, F) of a preradical.

use crate::enumerate::UniversePreradical;
use crate::hom::fully_invariant_submodules;
use crate::module::{superfluous, FiniteModule};
use crate::universe::ModuleUniverse;
use std::sync::Arc;

/// Three-valued verdict: predicates never answer yes/no on the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    Yes,
    No,
}

impl Verdict {
    pub fn holds_or_zero(self) -> bool {
        self != Verdict::No
    }
}

/// sigma(M) is 0 or M.
pub fn is_second(uv: &ModuleUniverse, p: &UniversePreradical, class: usize) -> Verdict {
    if class == uv.zero_class {
        return Verdict::Zero;
    }
    let v = p.value(uv, class);
    if v.is_zero() || v.is_full(&uv.classes[class]) {
        Verdict::Yes
    } else {
        Verdict::No
    }
}

/// No nonzero quotient of M is sigma-torsion (M itself included).
pub fn is_fully_co_first(uv: &ModuleUniverse, p: &UniversePreradical, class: usize) -> Verdict {
    if class == uv.zero_class {
        return Verdict::Zero;
    }
    for q in &uv.quot[class] {
        if q.class != uv.zero_class && p.value(uv, q.class).is_full(&uv.classes[q.class]) {
            return Verdict::No;
        }
    }
    Verdict::Yes
}

/// M is sigma-torsion, or no nonzero quotient of M is.
pub fn is_co_first(uv: &ModuleUniverse, p: &UniversePreradical, class: usize) -> Verdict {
    if class == uv.zero_class {
        return Verdict::Zero;
    }
    if p.value(uv, class).is_full(&uv.classes[class]) {
        return Verdict::Yes;
    }
    is_fully_co_first(uv, p, class)
}

/// Every proper fully invariant submodule is superfluous.
pub fn is_dihollow(m: &Arc<FiniteModule>) -> Verdict {
    if m.is_zero_module() {
        return Verdict::Zero;
    }
    for s in fully_invariant_submodules(m) {
        if !s.is_full(m) && !superfluous(m, &s) {
            return Verdict::No;
        }
    }
    Verdict::Yes
}

/// Same predicate using the universe's precomputed lattice data.
pub fn is_dihollow_class(uv: &ModuleUniverse, class: usize) -> Verdict {
    if class == uv.zero_class {
        return Verdict::Zero;
    }
    let m = &uv.classes[class];
    for (j, s) in uv.submods[class].iter().enumerate() {
        if uv.fi[class][j] && !s.is_full(m) && !superfluous(m, s) {
            return Verdict::No;
        }
    }
    Verdict::Yes
}

/// The five classes of one preradical, as universe bitmasks. The zero class
/// belongs to each by convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassTriple {
    pub p: u64,
    pub p_bar: u64,
    pub s: u64,
    pub t: u64,
    pub f: u64,
}

pub fn class_triple(uv: &ModuleUniverse, sig: &UniversePreradical) -> ClassTriple {
    let t = sig.torsion_mask(uv);
    let f = sig.torsion_free_mask(uv);
    let mut p = 1u64 << uv.zero_class;
    let mut s = 1u64 << uv.zero_class;
    for c in 0..uv.num_classes() {
        if is_fully_co_first(uv, sig, c) == Verdict::Yes {
            p |= 1 << c;
        }
        if is_second(uv, sig, c) == Verdict::Yes {
            s |= 1 << c;
        }
    }
    ClassTriple {
        p,
        p_bar: p | t,
        s,
        t,
        f,
    }
}

/// First member of `fam` for which `class` is not co-first, if any.
pub fn family_co_first_witness(
    uv: &ModuleUniverse,
    fam: &[UniversePreradical],
    class: usize,
) -> Option<usize> {
    fam.iter()
        .position(|p| is_co_first(uv, p, class) == Verdict::No)
}
