//! Quotient-closed classes of a universe, pseudocomplements, condition
//! (CN), and conatural classes. Classes are bitmasks over iso-classes.

use crate::error::{Error, Result};
use crate::universe::ModuleUniverse;

/// Every quotient of a member is a member.
pub fn is_quotient_closed(uv: &ModuleUniverse, class_mask: u64) -> bool {
    (0..uv.num_classes())
        .filter(|&i| class_mask & (1 << i) != 0)
        .all(|i| uv.quotient_reach(i) & !class_mask == 0)
}

/// Pseudocomplement within the quotient-closed classes: all modules with no
/// nonzero quotient in the given class.
pub fn perp(uv: &ModuleUniverse, class_mask: u64) -> Result<u64> {
    if !is_quotient_closed(uv, class_mask) {
        return Err(Error::Module("perp requires a quotient-closed class".into()));
    }
    let zero = 1u64 << uv.zero_class;
    let mut out = 0u64;
    for i in 0..uv.num_classes() {
        if uv.quotient_reach(i) & class_mask & !zero == 0 {
            out |= 1 << i;
        }
    }
    Ok(out)
}

/// Fixed point of the double pseudocomplement.
pub fn is_conatural(uv: &ModuleUniverse, class_mask: u64) -> bool {
    is_quotient_closed(uv, class_mask)
        && perp(uv, perp(uv, class_mask).unwrap()).unwrap() == class_mask
}

/// Does some nonzero quotient of `i` coincide with a quotient of a member
/// of the class?
fn shares_nonzero_quotient(uv: &ModuleUniverse, i: usize, class_mask: u64) -> bool {
    let zero = 1u64 << uv.zero_class;
    let mut class_reach = 0u64;
    for c in 0..uv.num_classes() {
        if class_mask & (1 << c) != 0 {
            class_reach |= uv.quotient_reach(c);
        }
    }
    uv.quotient_reach(i) & class_reach & !zero != 0
}

/// Condition (CN), computed straight from its definition and independently
/// of `perp`: whenever every nonzero quotient of M shares a nonzero
/// quotient with the class, M must belong to it.
pub fn satisfies_cn(uv: &ModuleUniverse, class_mask: u64) -> bool {
    let zero = 1u64 << uv.zero_class;
    for i in 0..uv.num_classes() {
        let all_quotients_share = (0..uv.num_classes())
            .filter(|&q| uv.quotient_reach(i) & (1 << q) != 0 && (1 << q) & zero == 0)
            .all(|q| shares_nonzero_quotient(uv, q, class_mask));
        if all_quotients_share && class_mask & (1 << i) == 0 {
            return false;
        }
    }
    true
}

/// All quotient-closed classes containing the zero module, ascending by
/// bitmask.
pub fn quotient_closed_classes(uv: &ModuleUniverse) -> Result<Vec<u64>> {
    let n = uv.num_classes();
    if n > 20 {
        return Err(Error::CapExceeded(format!(
            "class enumeration over {n} iso-classes"
        )));
    }
    let zero = 1u64 << uv.zero_class;
    let mut out = Vec::new();
    for m in 0..(1u64 << n) {
        if m & zero != 0 && is_quotient_closed(uv, m) {
            out.push(m);
        }
    }
    Ok(out)
}

pub fn conatural_classes(uv: &ModuleUniverse) -> Result<Vec<u64>> {
    Ok(quotient_closed_classes(uv)?
        .into_iter()
        .filter(|&m| is_conatural(uv, m))
        .collect())
}
