//! Finite unital rings as explicit operation tables, with preset
//! constructors and two-sided ideal enumeration.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use std::sync::Arc;

/// Largest ring the workbench accepts.
pub const MAX_RING: usize = 64;

/// A finite unital ring on element indices `0..n`.
#[derive(Clone)]
pub struct FiniteRing {
    pub tag: String,
    pub n: usize,
    add: Vec<u16>, // flattened n*n
    mul: Vec<u16>,
    neg: Vec<u16>,
    pub zero: usize,
    pub one: usize,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        // structural equality; the tag is a display label only
        self.n == other.n
            && self.add == other.add
            && self.mul == other.mul
            && self.zero == other.zero
            && self.one == other.one
    }
}
impl Eq for FiniteRing {}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, n={})", self.tag, self.n)
    }
}

impl FiniteRing {
    /// Build and validate a ring from explicit tables. All ring axioms are
    /// checked on every element triple; violations are collected and
    /// reported together.
    pub fn from_tables(
        tag: impl Into<String>,
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
    ) -> Result<Arc<Self>> {
        let tag = tag.into();
        if n == 0 || n > MAX_RING {
            return Err(Error::RingSpec(format!(
                "ring size {n} outside supported range 1..={MAX_RING}"
            )));
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::RingSpec("table dimensions do not match n".into()));
        }
        let range_ok = add.iter().chain(mul.iter()).all(|&x| (x as usize) < n);
        if !range_ok {
            return Err(Error::RingSpec("table entry out of range".into()));
        }

        let a = |x: usize, y: usize| add[x * n + y] as usize;
        let m = |x: usize, y: usize| mul[x * n + y] as usize;

        let mut bad = Vec::new();
        let mut note = |s: String| {
            if bad.len() < 16 {
                bad.push(s);
            }
        };
        for x in 0..n {
            if a(zero, x) != x || a(x, zero) != x {
                note(format!("0 is not an additive identity at {x}"));
            }
            if m(one, x) != x || m(x, one) != x {
                note(format!("1 is not a multiplicative identity at {x}"));
            }
        }
        let mut neg = vec![u16::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| a(x, y) == zero) {
                Some(y) => neg[x] = y as u16,
                None => note(format!("no additive inverse for {x}")),
            }
        }
        for x in 0..n {
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    note(format!("addition not commutative at ({x},{y})"));
                }
                for z in 0..n {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        note(format!("addition not associative at ({x},{y},{z})"));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        note(format!("multiplication not associative at ({x},{y},{z})"));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                        note(format!("left distributivity fails at ({x},{y},{z})"));
                    }
                    if m(a(x, y), z) != a(m(x, z), m(y, z)) {
                        note(format!("right distributivity fails at ({x},{y},{z})"));
                    }
                }
            }
        }
        if !bad.is_empty() {
            return Err(Error::RingAxioms(bad));
        }
        Ok(Arc::new(FiniteRing {
            tag,
            n,
            add,
            mul,
            neg,
            zero,
            one,
        }))
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y] as usize
    }
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    /// All two-sided ideals, as element sets, ordered by (size, contents).
    pub fn two_sided_ideals(&self) -> Vec<ElemSet> {
        let mut found: Vec<ElemSet> = vec![ElemSet::singleton(self.zero)];
        let mut i = 0;
        while i < found.len() {
            let base = found[i];
            for x in 0..self.n {
                if base.contains(x) {
                    continue;
                }
                let mut gens: Vec<usize> = base.iter().collect();
                gens.push(x);
                let closed = self.ideal_closure(&gens);
                if !found.contains(&closed) {
                    found.push(closed);
                }
            }
            i += 1;
        }
        found.sort_by_key(|s| (s.len(), *s));
        found
    }

    /// Smallest two-sided ideal containing the given elements.
    pub fn ideal_closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::singleton(self.zero);
        for &g in gens {
            set.insert(g);
        }
        loop {
            let mut next = set;
            for x in set.iter() {
                for y in set.iter() {
                    next.insert(self.add(x, y));
                }
                for r in 0..self.n {
                    next.insert(self.mul(r, x));
                    next.insert(self.mul(x, r));
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    pub fn is_two_sided_ideal(&self, set: &ElemSet) -> bool {
        set.contains(self.zero) && self.ideal_closure(&set.iter().collect::<Vec<_>>()) == *set
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.mul(e, e) == e).collect()
    }
}

/// Parse a ring preset spec: `zn:<n>`, `product(<spec>,<spec>,...)`,
/// `triangular:2:<p>` (upper triangular 2x2 over F_p), `matrix:2:<p>`.
pub fn make_ring(spec: &str) -> Result<Arc<FiniteRing>> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("zn:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::RingSpec(format!("bad modulus in {spec:?}")))?;
        if n < 2 {
            return Err(Error::RingSpec(format!("zn:{n}: n >= 2 required")));
        }
        return zn(n);
    }
    if let Some(inner) = spec
        .strip_prefix("product(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let parts = split_top_level(inner);
        if parts.len() < 2 {
            return Err(Error::RingSpec(
                "product(...) needs at least two factors".into(),
            ));
        }
        let rings = parts
            .iter()
            .map(|p| make_ring(p))
            .collect::<Result<Vec<_>>>()?;
        return rings
            .into_iter()
            .reduce(|a, b| product(&a, &b).expect("sizes validated"))
            .ok_or_else(|| Error::RingSpec("empty product".into()));
    }
    if let Some(rest) = spec.strip_prefix("triangular:2:") {
        let p: usize = rest
            .parse()
            .map_err(|_| Error::RingSpec(format!("bad prime in {spec:?}")))?;
        return triangular2(p);
    }
    if let Some(rest) = spec.strip_prefix("matrix:2:") {
        let p: usize = rest
            .parse()
            .map_err(|_| Error::RingSpec(format!("bad prime in {spec:?}")))?;
        return matrix2(p);
    }
    Err(Error::RingSpec(format!("unknown ring spec {spec:?}")))
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        parts.push(cur);
    }
    parts
}

fn zn(n: usize) -> Result<Arc<FiniteRing>> {
    if n > MAX_RING {
        return Err(Error::RingSpec(format!("zn:{n} exceeds ring bound {MAX_RING}")));
    }
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            add[x * n + y] = ((x + y) % n) as u16;
            mul[x * n + y] = ((x * y) % n) as u16;
        }
    }
    FiniteRing::from_tables(format!("zn:{n}"), n, add, mul, 0, 1 % n)
}

fn product(a: &FiniteRing, b: &FiniteRing) -> Result<Arc<FiniteRing>> {
    let n = a.n * b.n;
    if n > MAX_RING {
        return Err(Error::RingSpec(format!(
            "product size {n} exceeds ring bound {MAX_RING}"
        )));
    }
    let idx = |x: usize, y: usize| x * b.n + y;
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x1 in 0..a.n {
        for y1 in 0..b.n {
            for x2 in 0..a.n {
                for y2 in 0..b.n {
                    let i = idx(x1, y1) * n + idx(x2, y2);
                    add[i] = idx(a.add(x1, x2), b.add(y1, y2)) as u16;
                    mul[i] = idx(a.mul(x1, x2), b.mul(y1, y2)) as u16;
                }
            }
        }
    }
    FiniteRing::from_tables(
        format!("product({},{})", a.tag, b.tag),
        n,
        add,
        mul,
        idx(a.zero, b.zero),
        idx(a.one, b.one),
    )
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).all(|d| p % d != 0)
}

/// Upper triangular 2x2 matrices over F_p, encoded as (a, b, d) for
/// [[a, b], [0, d]] with index a*p^2 + b*p + d.
fn triangular2(p: usize) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(Error::RingSpec(format!("triangular:2:{p}: p must be prime")));
    }
    let n = p * p * p;
    if n > MAX_RING {
        return Err(Error::RingSpec(format!(
            "triangular:2:{p} has {n} elements, exceeds bound {MAX_RING}"
        )));
    }
    let dec = |i: usize| (i / (p * p), (i / p) % p, i % p);
    let enc = |a: usize, b: usize, d: usize| a * p * p + b * p + d;
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for i in 0..n {
        let (a1, b1, d1) = dec(i);
        for j in 0..n {
            let (a2, b2, d2) = dec(j);
            add[i * n + j] = enc((a1 + a2) % p, (b1 + b2) % p, (d1 + d2) % p) as u16;
            mul[i * n + j] = enc((a1 * a2) % p, (a1 * b2 + b1 * d2) % p, (d1 * d2) % p) as u16;
        }
    }
    FiniteRing::from_tables(
        format!("triangular:2:{p}"),
        n,
        add,
        mul,
        enc(0, 0, 0),
        enc(1, 0, 1),
    )
}

/// Full 2x2 matrix ring over F_p, encoded as (a, b, c, d) row-major.
fn matrix2(p: usize) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(Error::RingSpec(format!("matrix:2:{p}: p must be prime")));
    }
    let n = p * p * p * p;
    if n > MAX_RING {
        return Err(Error::RingSpec(format!(
            "matrix:2:{p} has {n} elements, exceeds bound {MAX_RING}"
        )));
    }
    let dec = |i: usize| {
        (
            i / (p * p * p),
            (i / (p * p)) % p,
            (i / p) % p,
            i % p,
        )
    };
    let enc = |a: usize, b: usize, c: usize, d: usize| ((a * p + b) * p + c) * p + d;
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for i in 0..n {
        let (a1, b1, c1, d1) = dec(i);
        for j in 0..n {
            let (a2, b2, c2, d2) = dec(j);
            add[i * n + j] =
                enc((a1 + a2) % p, (b1 + b2) % p, (c1 + c2) % p, (d1 + d2) % p) as u16;
            mul[i * n + j] = enc(
                (a1 * a2 + b1 * c2) % p,
                (a1 * b2 + b1 * d2) % p,
                (c1 * a2 + d1 * c2) % p,
                (c1 * b2 + d1 * d2) % p,
            ) as u16;
        }
    }
    FiniteRing::from_tables(
        format!("matrix:2:{p}"),
        n,
        add,
        mul,
        enc(0, 0, 0, 0),
        enc(1, 0, 0, 1),
    )
}
