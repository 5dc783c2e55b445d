//! Compact textual syntax for preradical expressions, e.g. `reject(Z6)`,
//! `colon(soc,soc)`, `idealtrad(2)`, `alpha(Z4,2)`. Parsed trees also
//! serialize to JSON for machine consumption.

use anyhow::{anyhow, bail, Result};
use prerad_core::config::parse_seed;
use prerad_core::module::{closure, group_name, FiniteModule, Submodule};
use prerad_core::prerad::Preradical;
use prerad_core::ring::FiniteRing;
use serde_json::{json, Value};
use std::sync::Arc;

/// Split on commas at paren depth zero.
fn split_top(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

fn parse_module(ring: &Arc<FiniteRing>, spec: &str) -> Result<Arc<FiniteModule>> {
    parse_seed(ring, spec).map_err(|e| anyhow!("module spec {spec:?}: {e}"))
}

/// Comma-separated module elements.
pub fn parse_gens(spec: &str) -> Result<Vec<u32>> {
    spec.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| anyhow!("bad element {p:?} in generator list"))
        })
        .collect()
}

pub fn submodule_of(m: &Arc<FiniteModule>, spec: &str) -> Result<Submodule> {
    let gens = parse_gens(spec)?;
    for &g in &gens {
        if g as usize >= m.size {
            bail!("element {g} is outside the module (size {})", m.size);
        }
    }
    Ok(closure(m, &gens))
}

pub fn parse_expr(ring: &Arc<FiniteRing>, src: &str) -> Result<Preradical> {
    let src = src.trim();
    let (head, inner) = match src.find('(') {
        Some(i) => {
            if !src.ends_with(')') {
                bail!("unbalanced parentheses in {src:?}");
            }
            (&src[..i], &src[i + 1..src.len() - 1])
        }
        None => (src, ""),
    };
    let args = split_top(inner);
    let arity = |want: usize| -> Result<()> {
        if args.len() != want {
            bail!("{head} takes {want} argument(s), got {}", args.len());
        }
        Ok(())
    };
    Ok(match head {
        "zero" => {
            arity(0)?;
            Preradical::Zero
        }
        "one" => {
            arity(0)?;
            Preradical::One
        }
        "rad" => {
            arity(0)?;
            Preradical::Rad
        }
        "soc" => {
            arity(0)?;
            Preradical::Soc
        }
        "trace" => {
            arity(1)?;
            Preradical::trace(parse_module(ring, args[0])?)
        }
        "reject" => {
            arity(1)?;
            Preradical::reject(parse_module(ring, args[0])?)
        }
        "idealtrad" => {
            if args.is_empty() {
                bail!("idealtrad needs ideal generators");
            }
            let gens = args
                .iter()
                .map(|a| {
                    a.parse::<usize>()
                        .ok()
                        .filter(|&x| x < ring.n)
                        .ok_or_else(|| anyhow!("bad ring element {a:?}"))
                })
                .collect::<Result<Vec<_>>>()?;
            let ideal = ring.ideal_closure(&gens);
            Preradical::ideal_trad(ring.clone(), ideal)?
        }
        "alpha" | "omega" | "gamma" => {
            if args.len() < 2 {
                bail!("{head} takes a module and submodule generators");
            }
            let m = parse_module(ring, args[0])?;
            let n = submodule_of(&m, &args[1..].join(","))?;
            match head {
                "alpha" => Preradical::alpha(m, n)?,
                "omega" => Preradical::omega(m, n)?,
                _ => Preradical::gamma(m, n),
            }
        }
        "meet" | "join" => {
            if args.is_empty() {
                bail!("{head} needs at least one argument");
            }
            let xs = args
                .iter()
                .map(|a| parse_expr(ring, a))
                .collect::<Result<Vec<_>>>()?;
            if head == "meet" {
                Preradical::Meet(xs)
            } else {
                Preradical::Join(xs)
            }
        }
        "comp" | "colon" => {
            arity(2)?;
            let a = Box::new(parse_expr(ring, args[0])?);
            let b = Box::new(parse_expr(ring, args[1])?);
            if head == "comp" {
                Preradical::Compose(a, b)
            } else {
                Preradical::Colon(a, b)
            }
        }
        "hat" | "bar" => {
            arity(1)?;
            let a = Box::new(parse_expr(ring, args[0])?);
            if head == "hat" {
                Preradical::Hat(a)
            } else {
                Preradical::Bar(a)
            }
        }
        other => bail!("unknown preradical {other:?}"),
    })
}

pub fn expr_to_json(e: &Preradical) -> Value {
    match e {
        Preradical::Zero => json!({"op": "zero"}),
        Preradical::One => json!({"op": "one"}),
        Preradical::Rad => json!({"op": "rad"}),
        Preradical::Soc => json!({"op": "soc"}),
        Preradical::Trace(m) => json!({"op": "trace", "module": group_name(&m.orders)}),
        Preradical::Reject(m) => json!({"op": "reject", "module": group_name(&m.orders)}),
        Preradical::IdealTRad { ideal, .. } => {
            json!({"op": "idealtrad", "ideal": ideal.iter().collect::<Vec<_>>()})
        }
        Preradical::Alpha { m, n } => {
            json!({"op": "alpha", "module": group_name(&m.orders), "submodule": n.gens})
        }
        Preradical::Omega { m, n } => {
            json!({"op": "omega", "module": group_name(&m.orders), "submodule": n.gens})
        }
        Preradical::Gamma { m, n } => {
            json!({"op": "gamma", "module": group_name(&m.orders), "submodule": n.gens})
        }
        Preradical::Meet(xs) => {
            json!({"op": "meet", "args": xs.iter().map(expr_to_json).collect::<Vec<_>>()})
        }
        Preradical::Join(xs) => {
            json!({"op": "join", "args": xs.iter().map(expr_to_json).collect::<Vec<_>>()})
        }
        Preradical::Compose(a, b) => {
            json!({"op": "comp", "args": [expr_to_json(a), expr_to_json(b)]})
        }
        Preradical::Colon(a, b) => {
            json!({"op": "colon", "args": [expr_to_json(a), expr_to_json(b)]})
        }
        Preradical::Hat(a) => json!({"op": "hat", "args": [expr_to_json(a)]}),
        Preradical::Bar(a) => json!({"op": "bar", "args": [expr_to_json(a)]}),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use prerad_core::ring::make_ring;

    #[test]
    fn parses_the_documented_examples() {
        let r6 = make_ring("zn:6").unwrap();
        let e = parse_expr(&r6, "reject(Z6)").unwrap();
        assert!(matches!(e, Preradical::Reject(_)));
        let z2 = parse_seed(&r6, "Z2").unwrap();
        assert!(e.eval(&z2).unwrap().is_zero());

        let r4 = make_ring("zn:4").unwrap();
        for src in [
            "zero",
            "one",
            "rad",
            "soc",
            "trace(Z2)",
            "idealtrad(2)",
            "alpha(Z4,2)",
            "omega(Z4,2)",
            "gamma(Z2+Z2,1)",
            "meet(rad,soc)",
            "join(rad, trace(Z2))",
            "comp(soc,soc)",
            "colon(reject(Z4),reject(Z4))",
            "hat(idealtrad(2))",
            "bar(soc)",
        ] {
            parse_expr(&r4, src).unwrap_or_else(|e| panic!("{src}: {e}"));
        }
    }

    #[test]
    fn rejects_malformed_input() {
        let r = make_ring("zn:4").unwrap();
        for src in [
            "frobnicate",
            "trace",
            "trace(Z2",
            "trace(Z3)",
            "alpha(Z4)",
            "alpha(Z2+Z2,1)", // a line is not fully invariant
            "colon(rad)",
            "idealtrad(9)",
        ] {
            assert!(parse_expr(&r, src).is_err(), "{src} should fail");
        }
    }

    #[test]
    fn json_tree_roundtrips_the_shape() {
        let r = make_ring("zn:4").unwrap();
        let e = parse_expr(&r, "colon(reject(Z4),idealtrad(2))").unwrap();
        let v = expr_to_json(&e);
        assert_eq!(v["op"], "colon");
        assert_eq!(v["args"][0]["op"], "reject");
        assert_eq!(v["args"][0]["module"], "Z4");
        assert_eq!(v["args"][1]["ideal"], json!([0, 2]));
    }

    #[test]
    fn submodule_specs() {
        let r = make_ring("zn:4").unwrap();
        let z4 = parse_seed(&r, "Z4").unwrap();
        assert_eq!(submodule_of(&z4, "2").unwrap().len(), 2);
        assert_eq!(submodule_of(&z4, "").unwrap().len(), 1);
        assert!(submodule_of(&z4, "7").is_err());
        assert!(submodule_of(&z4, "x").is_err());
    }
}
