//! Workbench configuration: a small JSON document selecting a ring preset,
//! universe bounds, caps and suites. Parsing is manual over the JSON tree so
//! every rejection carries the path that caused it.

use crate::error::{Error, Result};
use crate::module::{regular_module, FiniteModule};
use crate::report::SuiteReport;
use crate::ring::{make_ring, FiniteRing};
use crate::suites::{run_suites, SUITE_IDS};
use crate::universe::{build_universe, ModuleUniverse};
use serde_json::Value;
use std::sync::Arc;

pub const DEFAULT_MAX_ORDER: usize = 16;
/// zn:6 needs its regular square (order 36) to exercise the hom-rich cases.
pub const DEFAULT_MAX_ORDER_ZN6: usize = 36;
pub const DEFAULT_SUM_ARITY: usize = 2;
pub const DEFAULT_PRERADICAL_NODES: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkbenchConfig {
    pub ring: String,
    pub seeds: Vec<String>,
    pub max_order: usize,
    pub sum_arity: usize,
    /// search-node cap for the exhaustive universe-preradical quantifier
    pub preradical_nodes: usize,
    pub suites: Vec<String>,
    pub out: Option<String>,
}

pub fn default_max_order(ring_spec: &str) -> usize {
    if ring_spec == "zn:6" {
        DEFAULT_MAX_ORDER_ZN6
    } else {
        DEFAULT_MAX_ORDER
    }
}

fn bad(path: &str, msg: impl Into<String>) -> Error {
    Error::Config {
        path: path.to_string(),
        msg: msg.into(),
    }
}

fn as_object<'v>(
    v: &'v Value,
    path: &str,
) -> Result<&'v serde_json::Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(path, "expected an object"))
}

fn get_string(obj: &serde_json::Map<String, Value>, key: &str, path: &str) -> Result<String> {
    obj[key]
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| bad(&format!("{path}.{key}"), "expected a string"))
}

fn get_usize(obj: &serde_json::Map<String, Value>, key: &str, path: &str) -> Result<usize> {
    obj[key]
        .as_u64()
        .filter(|&x| x > 0)
        .map(|x| x as usize)
        .ok_or_else(|| bad(&format!("{path}.{key}"), "expected a positive integer"))
}

fn check_keys(
    obj: &serde_json::Map<String, Value>,
    allowed: &[&str],
    path: &str,
) -> Result<()> {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(bad(&format!("{path}.{k}"), "unknown field"));
        }
    }
    Ok(())
}

/// Parse and validate a config document, applying defaults.
pub fn parse_config(text: &str) -> Result<WorkbenchConfig> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| bad("$", format!("invalid JSON: {e}")))?;
    let obj = as_object(&v, "$")?;
    check_keys(obj, &["ring", "universe", "caps", "suites", "out"], "$")?;

    if !obj.contains_key("ring") {
        return Err(bad("$.ring", "missing required field"));
    }
    let ring = get_string(obj, "ring", "$")?;
    // reject bad presets at parse time, with the config path attached
    make_ring(&ring).map_err(|e| bad("$.ring", e.to_string()))?;

    let mut cfg = WorkbenchConfig {
        max_order: default_max_order(&ring),
        sum_arity: DEFAULT_SUM_ARITY,
        preradical_nodes: DEFAULT_PRERADICAL_NODES,
        seeds: vec!["R".to_string()],
        suites: vec!["all".to_string()],
        out: None,
        ring,
    };

    if let Some(u) = obj.get("universe") {
        let uo = as_object(u, "$.universe")?;
        check_keys(uo, &["seeds", "max_order", "sum_arity"], "$.universe")?;
        if uo.contains_key("max_order") {
            cfg.max_order = get_usize(uo, "max_order", "$.universe")?;
        }
        if uo.contains_key("sum_arity") {
            cfg.sum_arity = get_usize(uo, "sum_arity", "$.universe")?;
        }
        if let Some(s) = uo.get("seeds") {
            let arr = s
                .as_array()
                .ok_or_else(|| bad("$.universe.seeds", "expected an array of module specs"))?;
            cfg.seeds = arr
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    e.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| bad(&format!("$.universe.seeds[{i}]"), "expected a string"))
                })
                .collect::<Result<_>>()?;
        }
    }

    if let Some(c) = obj.get("caps") {
        let co = as_object(c, "$.caps")?;
        check_keys(co, &["preradical_nodes"], "$.caps")?;
        if co.contains_key("preradical_nodes") {
            cfg.preradical_nodes = get_usize(co, "preradical_nodes", "$.caps")?;
        }
    }

    if let Some(s) = obj.get("suites") {
        let arr = s
            .as_array()
            .ok_or_else(|| bad("$.suites", "expected an array of suite ids"))?;
        cfg.suites = arr
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let path = format!("$.suites[{i}]");
                let id = e
                    .as_str()
                    .ok_or_else(|| bad(&path, "expected a string"))?;
                if id != "all" && !SUITE_IDS.contains(&id) {
                    return Err(bad(&path, format!("unknown suite {id:?}")));
                }
                Ok(id.to_string())
            })
            .collect::<Result<_>>()?;
    }

    if let Some(o) = obj.get("out") {
        cfg.out = Some(
            o.as_str()
                .map(str::to_string)
                .ok_or_else(|| bad("$.out", "expected a string path"))?,
        );
    }

    // validate seed specs against the ring without building the universe yet
    let r = make_ring(&cfg.ring)?;
    for (i, s) in cfg.seeds.iter().enumerate() {
        parse_seed(&r, s).map_err(|e| bad(&format!("$.universe.seeds[{i}]"), e.to_string()))?;
    }

    Ok(cfg)
}

/// Module spec for seeds: "R" (regular), "0", or "Zd+Zd+..." (diagonal,
/// residue rings only).
pub fn parse_seed(ring: &Arc<FiniteRing>, spec: &str) -> Result<Arc<FiniteModule>> {
    match spec {
        "R" => Ok(regular_module(ring)?.0),
        "0" => Ok(FiniteModule::zero_module(ring.clone())),
        _ => {
            if !ring.tag.starts_with("zn:") {
                return Err(Error::Module(format!(
                    "diagonal module spec {spec:?} needs a residue ring; use \"R\" or \"0\""
                )));
            }
            let orders = spec
                .split('+')
                .map(|part| {
                    part.strip_prefix('Z')
                        .and_then(|d| d.parse::<u32>().ok())
                        .ok_or_else(|| {
                            Error::Module(format!("bad module spec component {part:?}"))
                        })
                })
                .collect::<Result<Vec<u32>>>()?;
            FiniteModule::diagonal_module(ring, orders)
        }
    }
}

/// Build the ring and universe a config describes.
pub fn build_from_config(cfg: &WorkbenchConfig) -> Result<(Arc<FiniteRing>, ModuleUniverse)> {
    let ring = make_ring(&cfg.ring)?;
    let seeds = cfg
        .seeds
        .iter()
        .map(|s| parse_seed(&ring, s))
        .collect::<Result<Vec<_>>>()?;
    let uv = build_universe(&ring, &seeds, cfg.max_order, cfg.sum_arity)?;
    Ok((ring, uv))
}

/// End-to-end run: equal configs give byte-identical canonical reports.
pub fn run_config(cfg: &WorkbenchConfig) -> Result<SuiteReport> {
    let (_, uv) = build_from_config(cfg)?;
    run_suites(&cfg.ring, &uv, &cfg.suites, cfg.preradical_nodes)
}
