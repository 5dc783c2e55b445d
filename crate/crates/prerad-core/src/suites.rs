//! Proposition registry and suite runners. Every statement the workbench
//! checks has one registry entry; suites evaluate them over a universe and
//! emit deterministic reports.
//!
//! Quantifier regimes:
//! - "exhaustive-universe": all natural submodule assignments on the universe;
//! - "ideal-family": the t-radicals U -> I*U, one per two-sided ideal
//!   (complete for finite rings);
//! - "expression-family": concrete preradical expressions (trace, reject,
//!   alpha, rad, ...);
//! - "bounded-coproduct": direct sums truncated by the universe bounds.

use crate::bitset::ElemSet;
use crate::cofirst::{class_triple, is_dihollow_class, ClassTriple, Verdict};
use crate::conat::{is_conatural, is_quotient_closed, perp, quotient_closed_classes, satisfies_cn};
use crate::cover::projective_cover;
use crate::enumerate::{
    enumerate_universe_preradicals, ideal_family, restrict, PreradFilter, UniversePreradical,
};
use crate::error::{Error, Result};
use crate::module::{direct_sum, is_semisimple, radical_submodule, superfluous, Submodule};
use crate::prerad::{compare, classify, CompareResult, PreradFlags, Preradical};
use crate::products::{comultiplication, coprime_verdict, totalizer_check, CoprimeVerdict};
use crate::report::{PropResult, Status, SuiteReport, UniverseParams, SCHEMA_VERSION};
use crate::universe::ModuleUniverse;
use serde_json::{json, Value};
use std::time::Instant;

pub struct RegistryEntry {
    pub id: &'static str,
    pub suite: &'static str,
    pub anchor: &'static str,
    /// true: a "fails" status should break the build; false: findings are
    /// informational (known tensions, examples, vacuous statements)
    pub assert: bool,
}

pub const SUITE_IDS: [&str; 5] = [
    "section1",
    "section2",
    "section3",
    "section4",
    "section5",
];

const REGISTRY: &[RegistryEntry] = &[
    RegistryEntry {
        id: "S1.remark-interval",
        suite: "section1",
        anchor: "alpha/omega are the least/greatest preradicals fixing a fully invariant submodule",
        assert: true,
    },
    RegistryEntry {
        id: "S1.remark-trace-reject",
        suite: "section1",
        anchor: "trace is idempotent; reject is a radical and equals its own colon square",
        assert: true,
    },
    RegistryEntry {
        id: "S2.prop-comult-monotone",
        suite: "section2",
        anchor: "comultiplication is monotone in its second argument",
        assert: true,
    },
    RegistryEntry {
        id: "S2.cor-comult-intersection",
        suite: "section2",
        anchor: "comultiplication at an intersection is below the intersection of comultiplications",
        assert: true,
    },
    RegistryEntry {
        id: "S2.lemma-tot",
        suite: "section2",
        anchor: "a least submodule U with U:N = M exists (the totalizer)",
        assert: true,
    },
    RegistryEntry {
        id: "S2.example-reject",
        suite: "section2",
        anchor: "the reject of the 6-element cyclic regular module kills its simple summands",
        assert: true,
    },
    RegistryEntry {
        id: "S2.lemma-BJKNco.1v3",
        suite: "section2",
        anchor: "proper comultiplications coincide with nonvanishing homs between proper quotients",
        assert: true,
    },
    RegistryEntry {
        id: "S2.lemma-BJKNco.xi-box",
        suite: "section2",
        anchor: "the generation criterion and the box-product criterion for coprimeness coincide",
        assert: true,
    },
    RegistryEntry {
        id: "S2.lemma-BJKNco.2v3",
        suite: "section2",
        anchor: "claimed equivalence of coprimeness with nonvanishing homs between proper quotients",
        assert: false,
    },
    RegistryEntry {
        id: "S3.prop-pf",
        suite: "section3",
        anchor: "co-first for every preradical is equivalent to coprime",
        assert: true,
    },
    RegistryEntry {
        id: "S3.P-rad-cofirst",
        suite: "section3",
        anchor: "co-first for every radical is equivalent to coprime",
        assert: false,
    },
    RegistryEntry {
        id: "S3.lemma-simple",
        suite: "section3",
        anchor: "simple modules are co-first for every preradical",
        assert: true,
    },
    RegistryEntry {
        id: "S3.lemma-5",
        suite: "section3",
        anchor: "a semisimple module is co-first for every preradical iff it is isotypic",
        assert: true,
    },
    RegistryEntry {
        id: "S3.prop-6",
        suite: "section3",
        anchor: "co-first for every preradical implies dihollow",
        assert: true,
    },
    RegistryEntry {
        id: "S3.prop-6-nonconverse",
        suite: "section3",
        anchor: "dihollow does not imply co-first for every preradical",
        assert: false,
    },
    RegistryEntry {
        id: "S3.example-zp2",
        suite: "section3",
        anchor: "the cyclic module of prime-square order is t-radical-co-first but not coprime",
        assert: true,
    },
    RegistryEntry {
        id: "S4.pseudocomplement",
        suite: "section4",
        anchor: "quotient-closed classes have a pseudocomplement: no nonzero quotient inside",
        assert: true,
    },
    RegistryEntry {
        id: "S4.CNCNC",
        suite: "section4",
        anchor: "conatural = satisfies (CN) = double-pseudocomplement fixpoint = a pseudocomplement",
        assert: true,
    },
    RegistryEntry {
        id: "S4.conat-boolean",
        suite: "section4",
        anchor: "trivial classes are conatural; double perp is the conatural closure; Boolean lattice",
        assert: true,
    },
    RegistryEntry {
        id: "S4.propPsig",
        suite: "section4",
        anchor: "the fully-co-first class is the pseudocomplement of the torsion class",
        assert: true,
    },
    RegistryEntry {
        id: "S4.P-hat",
        suite: "section4",
        anchor: "the fully-co-first class is unchanged under the idempotent core",
        assert: true,
    },
    RegistryEntry {
        id: "S4.conatp",
        suite: "section4",
        anchor: "every fully-co-first class is conatural",
        assert: true,
    },
    RegistryEntry {
        id: "S4.alpha-superfluous",
        suite: "section4",
        anchor: "fully co-first for the least preradical fixing N forces N superfluous",
        assert: true,
    },
    RegistryEntry {
        id: "S4.cor-24",
        suite: "section4",
        anchor: "everything fully co-first = trivial idempotent core = trivial torsion class",
        assert: true,
    },
    RegistryEntry {
        id: "S4.V-ring",
        suite: "section4",
        anchor: "no nonzero preradical with trivial torsion class iff the radical vanishes everywhere",
        assert: true,
    },
    RegistryEntry {
        id: "S4.prop-8.3",
        suite: "section4",
        anchor: "for t-radicals, fully co-first means the value is superfluous",
        assert: true,
    },
    RegistryEntry {
        id: "S4.cftrad",
        suite: "section4",
        anchor: "for t-radicals the torsion class is conatural and the perp of the co-first class",
        assert: true,
    },
    RegistryEntry {
        id: "S4.coroL",
        suite: "section4",
        anchor: "for t-radicals the torsion-free class sits inside the fully-co-first class",
        assert: true,
    },
    RegistryEntry {
        id: "S4.rid-trad",
        suite: "section4",
        anchor: "an idempotent radical is a t-radical iff torsion-free implies fully co-first",
        assert: true,
    },
    RegistryEntry {
        id: "S4.propseudo",
        suite: "section4",
        anchor: "conatural classes whose perp is the co-first class of an idempotent t-radical are closed under coproducts",
        assert: true,
    },
    RegistryEntry {
        id: "S4.ECNCUC",
        suite: "section4",
        anchor: "conatural classes are torsion classes exactly over rings where every nonzero module has a maximal submodule",
        assert: false,
    },
    RegistryEntry {
        id: "S4.MAXRing",
        suite: "section4",
        anchor: "if every conatural class is a t-radical co-first class then every nonzero module has a maximal submodule",
        assert: false,
    },
    RegistryEntry {
        id: "S4.tpcfq",
        suite: "section4",
        anchor: "torsion closed under projective covers iff torsion-free closed under quotients",
        assert: true,
    },
    RegistryEntry {
        id: "S4.conatperfect1",
        suite: "section4",
        anchor: "over perfect rings the conatural classes are exactly the t-radical torsion classes",
        assert: true,
    },
    RegistryEntry {
        id: "S4.conatforleftperfect",
        suite: "section4",
        anchor: "over perfect rings the conatural classes are exactly the t-radical co-first classes",
        assert: true,
    },
    RegistryEntry {
        id: "S5.remark-8s",
        suite: "section5",
        anchor: "the second class is the union of the torsion and torsion-free classes",
        assert: true,
    },
    RegistryEntry {
        id: "S5.tsvc1",
        suite: "section5",
        anchor: "second implies co-first for families of t-radicals",
        assert: true,
    },
    RegistryEntry {
        id: "S5.ejemsvc",
        suite: "section5",
        anchor: "the cyclic module of prime-square order is t-radical-co-first but not t-radical-second",
        assert: true,
    },
    RegistryEntry {
        id: "S5.ejem4.17",
        suite: "section5",
        anchor: "a co-first module outside the torsion-free class (undefined class symbol read as torsion-free)",
        assert: false,
    },
    RegistryEntry {
        id: "S5.psvc1",
        suite: "section5",
        anchor: "a radical whose co-first and second classes agree is a t-radical",
        assert: true,
    },
    RegistryEntry {
        id: "S5.radsec-radcop",
        suite: "section5",
        anchor: "co-first and second classes of the radical agree iff the radical vanishes everywhere",
        assert: true,
    },
    RegistryEntry {
        id: "S5.final-prop",
        suite: "section5",
        anchor: "co-first and second classes agree for every preradical iff the ring is semisimple",
        assert: true,
    },
];

pub fn registry() -> &'static [RegistryEntry] {
    REGISTRY
}

/// Shared precomputation for one universe.
struct Data<'a> {
    uv: &'a ModuleUniverse,
    /// all natural assignments, or None when the search cap was exceeded
    all: Option<Vec<UniversePreradical>>,
    all_triples: Vec<ClassTriple>,
    all_flags: Vec<PreradFlags>,
    fam: Vec<(ElemSet, UniversePreradical)>,
    fam_triples: Vec<ClassTriple>,
    coprime: Vec<CoprimeVerdict>,
    qcl: Vec<u64>,
    conat: Vec<u64>,
    /// universe class of the projective cover, when it fits in the universe
    cover_class: Vec<Option<usize>>,
    /// per class of order <= 16: comultiplication table over submodule pairs
    comult_tab: Vec<Option<Vec<Vec<Submodule>>>>,
}

impl<'a> Data<'a> {
    fn build(uv: &'a ModuleUniverse, cap: usize) -> Result<Data<'a>> {
        let all = match enumerate_universe_preradicals(uv, PreradFilter::All, cap) {
            Ok(v) => Some(v),
            Err(Error::CapExceeded(_)) => None,
            Err(e) => return Err(e),
        };
        let (all_triples, all_flags) = match &all {
            Some(v) => (
                v.iter().map(|p| class_triple(uv, p)).collect(),
                v.iter().map(|p| p.flags(uv)).collect(),
            ),
            None => (Vec::new(), Vec::new()),
        };
        let fam = ideal_family(uv)?;
        let fam_triples = fam.iter().map(|(_, p)| class_triple(uv, p)).collect();
        let coprime = uv
            .classes
            .iter()
            .map(coprime_verdict)
            .collect::<Result<Vec<_>>>()?;
        let qcl = quotient_closed_classes(uv)?;
        let conat: Vec<u64> = qcl
            .iter()
            .copied()
            .filter(|&c| is_conatural(uv, c))
            .collect();
        let cover_class = uv
            .classes
            .iter()
            .map(|m| match projective_cover(m) {
                Ok((p, _)) => uv.find_class(&p),
                Err(_) => None,
            })
            .collect();
        let mut comult_tab = Vec::new();
        for (c, m) in uv.classes.iter().enumerate() {
            if m.size > 16 {
                comult_tab.push(None);
                continue;
            }
            let subs = &uv.submods[c];
            let mut tab = Vec::with_capacity(subs.len());
            for a in subs {
                let mut row = Vec::with_capacity(subs.len());
                for b in subs {
                    row.push(comultiplication(m, a, b)?);
                }
                tab.push(row);
            }
            comult_tab.push(Some(tab));
        }
        Ok(Data {
            uv,
            all,
            all_triples,
            all_flags,
            fam,
            fam_triples,
            coprime,
            qcl,
            conat,
            cover_class,
            comult_tab,
        })
    }

    fn zero_mask(&self) -> u64 {
        1u64 << self.uv.zero_class
    }

    fn class_json(&self, c: usize) -> Value {
        json!(self.uv.names[c])
    }

    fn mask_json(&self, mask: u64) -> Value {
        let names: Vec<&str> = (0..self.uv.num_classes())
            .filter(|&c| mask & (1 << c) != 0)
            .map(|c| self.uv.names[c].as_str())
            .collect();
        json!(names)
    }

    fn sigma_json(&self, p: &UniversePreradical) -> Value {
        let values: Vec<String> = (0..self.uv.num_classes())
            .map(|c| {
                format!(
                    "{}:{}",
                    self.uv.names[c],
                    p.value(self.uv, c).len()
                )
            })
            .collect();
        json!(values)
    }

    /// Is `c` co-first for every enumerated preradical?
    fn co_first_for_all(&self, c: usize) -> bool {
        self.all_triples.iter().all(|t| t.p_bar & (1 << c) != 0)
    }

    /// Largest idempotent assignment below `p` (descending iteration); None
    /// when an intermediate submodule has no iso-class in the universe.
    fn hat(&self, p: &UniversePreradical) -> Option<UniversePreradical> {
        let uv = self.uv;
        let mut asg = p.assignment.clone();
        for c in 0..uv.num_classes() {
            loop {
                let j = asg[c];
                let si = uv.sub_info[c][j].as_ref()?;
                let inner = p.value(uv, si.class);
                let pushed = si.emb.push_set(&inner.elems);
                let nj = uv.find_submodule(c, &pushed)?;
                if nj == j {
                    break;
                }
                asg[c] = nj;
            }
        }
        Some(UniversePreradical { assignment: asg })
    }

    /// Semisimple with a single simple summand type.
    fn is_isotypic(&self, c: usize) -> bool {
        let uv = self.uv;
        if c == uv.zero_class || !is_semisimple(&uv.classes[c]) {
            return false;
        }
        let simple_quots = (0..uv.num_classes())
            .filter(|&q| uv.quotient_reach(c) & (1 << q) != 0 && uv.submods[q].len() == 2)
            .count();
        simple_quots == 1
    }
}

struct Outcome {
    status: Status,
    regime: &'static str,
    witnesses: Vec<Value>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(regime: &'static str) -> Self {
        Outcome {
            status: Status::Holds,
            regime,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, w: Value) {
        self.status = Status::Fails;
        if self.witnesses.len() < 8 {
            self.witnesses.push(w);
        }
    }

    fn degraded(regime: &'static str, why: &str) -> Self {
        Outcome {
            status: Status::Degraded,
            regime,
            witnesses: Vec::new(),
            notes: vec![why.to_string()],
        }
    }
}

const CAP_NOTE: &str = "exhaustive preradical enumeration exceeded its cap";

fn eval_prop(id: &str, d: &Data) -> Result<Outcome> {
    let uv = d.uv;
    let n = uv.num_classes();
    let zero = d.zero_mask();
    let all_mask = uv.all_mask();
    Ok(match id {
        "S1.remark-interval" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for c in 0..n {
                let m = &uv.classes[c];
                for (j, s) in uv.submods[c].iter().enumerate() {
                    if !uv.fi[c][j] {
                        continue;
                    }
                    let ra = restrict(&Preradical::alpha(m.clone(), s.clone())?, uv)?;
                    let ro = restrict(&Preradical::omega(m.clone(), s.clone())?, uv)?;
                    if ra.assignment[c] != j || ro.assignment[c] != j {
                        o.fail(json!({
                            "module": d.class_json(c),
                            "issue": "alpha/omega do not fix their defining value",
                        }));
                        continue;
                    }
                    for p in all {
                        if p.assignment[c] != j {
                            continue;
                        }
                        let between = (0..n).all(|k| {
                            ra.value(uv, k).elems.is_subset(&p.value(uv, k).elems)
                                && p.value(uv, k).elems.is_subset(&ro.value(uv, k).elems)
                        });
                        if !between {
                            o.fail(json!({
                                "module": d.class_json(c),
                                "submodule_size": s.len(),
                                "sigma": d.sigma_json(p),
                            }));
                        }
                    }
                }
            }
            o
        }
        "S1.remark-trace-reject" => {
            let mut o = Outcome::new("expression-family");
            for c in 0..n {
                let m = uv.classes[c].clone();
                let tr = Preradical::trace(m.clone());
                if classify(&tr, uv)?.idempotent != Some(true) {
                    o.fail(json!({"module": d.class_json(c), "issue": "trace not idempotent"}));
                }
                let rej = Preradical::reject(m.clone());
                if classify(&rej, uv)?.radical != Some(true) {
                    o.fail(json!({"module": d.class_json(c), "issue": "reject not a radical"}));
                }
                let col = Preradical::Colon(Box::new(rej.clone()), Box::new(rej.clone()));
                if compare(&rej, &col, uv)? != CompareResult::Equal {
                    o.fail(json!({"module": d.class_json(c), "issue": "reject differs from its colon square"}));
                }
            }
            o
        }
        "S2.prop-comult-monotone" => {
            let mut o = Outcome::new("exhaustive pairs on members of order <= 16");
            for c in 0..n {
                let Some(tab) = &d.comult_tab[c] else { continue };
                let subs = &uv.submods[c];
                for a in 0..subs.len() {
                    for b in 0..subs.len() {
                        for cc in 0..subs.len() {
                            if subs[b].elems.is_subset(&subs[cc].elems)
                                && !tab[a][b].elems.is_subset(&tab[a][cc].elems)
                            {
                                o.fail(json!({
                                    "module": d.class_json(c),
                                    "a": subs[a].gens, "b": subs[b].gens, "c": subs[cc].gens,
                                }));
                            }
                        }
                    }
                }
            }
            o
        }
        "S2.cor-comult-intersection" => {
            let mut o = Outcome::new("exhaustive pairs on members of order <= 16");
            for c in 0..n {
                let Some(tab) = &d.comult_tab[c] else { continue };
                let subs = &uv.submods[c];
                for a in 0..subs.len() {
                    for b in 0..subs.len() {
                        for cc in 0..subs.len() {
                            let meet_set = subs[b].elems.intersect(&subs[cc].elems);
                            let meet = uv
                                .find_submodule(c, &meet_set)
                                .ok_or_else(|| Error::Internal("lattice not meet-closed".into()))?;
                            let lhs = &tab[a][meet].elems;
                            let rhs = tab[a][b].elems.intersect(&tab[a][cc].elems);
                            if !lhs.is_subset(&rhs) {
                                o.fail(json!({
                                    "module": d.class_json(c),
                                    "a": subs[a].gens, "b": subs[b].gens, "c": subs[cc].gens,
                                }));
                            }
                        }
                    }
                }
            }
            o
        }
        "S2.lemma-tot" => {
            let mut o = Outcome::new("exhaustive pairs");
            for c in 0..n {
                let m = &uv.classes[c];
                for s in &uv.submods[c] {
                    let (tot, universal, minimal) = totalizer_check(m, s)?;
                    if !universal || !minimal {
                        o.fail(json!({
                            "module": d.class_json(c),
                            "n": s.gens,
                            "tot": tot.gens,
                            "universal": universal,
                            "minimal": minimal,
                        }));
                    }
                }
            }
            o
        }
        "S2.example-reject" => {
            if uv.ring.n != 6 {
                let mut o = Outcome::new("expression-family");
                o.status = Status::Vacuous;
                o.notes
                    .push("the example lives over the 6-element cyclic ring".into());
                return Ok(o);
            }
            let mut o = Outcome::new("expression-family");
            let reg = uv.classes[uv.regular_class].clone();
            let rej = Preradical::reject(reg);
            for c in 0..n {
                if uv.submods[c].len() == 2 {
                    // simple summands of the regular module must be killed
                    let v = rej.eval(&uv.classes[c])?;
                    if !v.is_zero() {
                        o.fail(json!({"module": d.class_json(c), "reject_size": v.len()}));
                    }
                }
            }
            o
        }
        "S2.lemma-BJKNco.1v3" => {
            let mut o = Outcome::new("exhaustive pairs");
            for c in 0..n {
                if c == uv.zero_class {
                    continue;
                }
                let v = &d.coprime[c];
                if v.by_comult != v.by_hom {
                    o.fail(json!({
                        "module": d.class_json(c),
                        "by_comult": v.by_comult,
                        "by_hom": v.by_hom,
                    }));
                }
            }
            o
        }
        "S2.lemma-BJKNco.xi-box" => {
            let mut o = Outcome::new("exhaustive pairs");
            for c in 0..n {
                if c == uv.zero_class {
                    continue;
                }
                let v = &d.coprime[c];
                if v.by_xi != v.by_box {
                    o.fail(json!({
                        "module": d.class_json(c),
                        "by_xi": v.by_xi,
                        "by_box": v.by_box,
                    }));
                }
            }
            o
        }
        "S2.lemma-BJKNco.2v3" => {
            // the (2)<=>(3) direction is emitted as a disagreement matrix and
            // never asserted: the two criteria can split (see the witnesses)
            let mut o = Outcome::new("exhaustive pairs");
            o.status = Status::Reported;
            let mut matrix = [[0usize; 2]; 2];
            for c in 0..n {
                if c == uv.zero_class {
                    continue;
                }
                let v = &d.coprime[c];
                matrix[v.by_hom as usize][v.by_xi as usize] += 1;
                if v.by_hom != v.by_xi {
                    o.witnesses.push(json!({
                        "module": d.class_json(c),
                        "by_hom": v.by_hom,
                        "by_xi": v.by_xi,
                        "xi_failure_submodule": v.witness_xi,
                        "box_failure_pair": v.witness_box,
                    }));
                }
            }
            o.notes.push(format!(
                "disagreement matrix [hom][xi]: ff={} ft={} tf={} tt={}",
                matrix[0][0], matrix[0][1], matrix[1][0], matrix[1][1]
            ));
            if matrix[1][0] + matrix[0][1] == 0 {
                o.notes
                    .push("the two criteria agree on every member of this universe".into());
            } else {
                o.notes.push(
                    "the two criteria split on this universe; the claimed equivalence does not hold here"
                        .into(),
                );
            }
            o
        }
        "S3.prop-pf" => {
            let Some(_) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for c in 0..n {
                if c == uv.zero_class {
                    continue;
                }
                let lhs = d.co_first_for_all(c);
                let rhs = d.coprime[c].by_xi;
                if lhs != rhs {
                    o.fail(json!({
                        "module": d.class_json(c),
                        "co_first_for_all": lhs,
                        "coprime_by_xi": rhs,
                    }));
                }
            }
            o
        }
        "S3.P-rad-cofirst" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            o.status = Status::Reported;
            let radicals: Vec<usize> = (0..all.len())
                .filter(|&i| d.all_flags[i].radical == Some(true))
                .collect();
            let mut split = 0usize;
            for c in 0..n {
                if c == uv.zero_class {
                    continue;
                }
                let lhs = radicals
                    .iter()
                    .all(|&i| d.all_triples[i].p_bar & (1 << c) != 0);
                let rhs = d.coprime[c].by_xi;
                if lhs != rhs {
                    split += 1;
                    if o.witnesses.len() < 8 {
                        o.witnesses.push(json!({
                            "module": d.class_json(c),
                            "co_first_for_all_radicals": lhs,
                            "coprime_by_xi": rhs,
                        }));
                    }
                }
            }
            if split == 0 {
                o.notes
                    .push("the radical-quantified predicate matches coprimeness on this universe".into());
            } else {
                o.notes.push(format!(
                    "{split} member(s) are co-first for every radical yet not coprime; \
                     the claimed equivalence does not hold on this universe"
                ));
            }
            o
        }
        "S3.lemma-simple" => {
            let Some(_) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for c in 0..n {
                if uv.submods[c].len() == 2 && !d.co_first_for_all(c) {
                    o.fail(json!({"module": d.class_json(c)}));
                }
            }
            o
        }
        "S3.lemma-5" => {
            let Some(_) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for c in 0..n {
                if c == uv.zero_class || !is_semisimple(&uv.classes[c]) {
                    continue;
                }
                let lhs = d.co_first_for_all(c);
                let rhs = d.is_isotypic(c);
                if lhs != rhs {
                    o.fail(json!({
                        "module": d.class_json(c),
                        "co_first_for_all": lhs,
                        "isotypic": rhs,
                    }));
                }
            }
            o
        }
        "S3.prop-6" => {
            let Some(_) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for c in 0..n {
                if c == uv.zero_class {
                    continue;
                }
                if d.co_first_for_all(c) && is_dihollow_class(uv, c) != Verdict::Yes {
                    o.fail(json!({"module": d.class_json(c)}));
                }
            }
            o
        }
        "S3.prop-6-nonconverse" => {
            let Some(_) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            let mut found = false;
            for c in 0..n {
                if c == uv.zero_class {
                    continue;
                }
                if is_dihollow_class(uv, c) == Verdict::Yes && !d.co_first_for_all(c) {
                    found = true;
                    if o.witnesses.len() < 4 {
                        o.witnesses.push(json!({"module": d.class_json(c)}));
                    }
                }
            }
            if !found {
                o.status = Status::Vacuous;
                o.notes
                    .push("no dihollow non-co-first member in this universe".into());
            }
            o
        }
        "S3.example-zp2" => {
            let p2 = (2..=8).find(|p| p * p == uv.ring.n && uv.ring.tag.starts_with("zn:"));
            let Some(_) = p2 else {
                let mut o = Outcome::new("ideal-family");
                o.status = Status::Vacuous;
                o.notes
                    .push("the example needs a cyclic ring of prime-square order".into());
                return Ok(o);
            };
            let mut o = Outcome::new("ideal-family");
            let r = uv.regular_class;
            let co_first_all_trad = d.fam_triples.iter().all(|t| t.p_bar & (1 << r) != 0);
            let coprime = d.coprime[r].by_xi;
            if !co_first_all_trad || coprime {
                o.fail(json!({
                    "module": d.class_json(r),
                    "co_first_for_ideal_family": co_first_all_trad,
                    "coprime_by_xi": coprime,
                }));
            }
            o
        }
        "S4.pseudocomplement" => {
            let mut o = Outcome::new("exhaustive quotient-closed classes");
            for &c in &d.qcl {
                let p = perp(uv, c)?;
                let mut ok = is_quotient_closed(uv, p) && c & p == zero;
                if ok {
                    for &e in &d.qcl {
                        if c & e == zero && e & !p != 0 {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    o.fail(json!({"class": d.mask_json(c), "perp": d.mask_json(p)}));
                }
            }
            o
        }
        "S4.CNCNC" => {
            let mut o = Outcome::new("exhaustive quotient-closed classes");
            for &c in &d.qcl {
                let conat = is_conatural(uv, c);
                let cn = satisfies_cn(uv, c);
                let is_a_perp = d.qcl.iter().any(|&e| perp(uv, e).unwrap() == c);
                if conat != cn || conat != is_a_perp {
                    o.fail(json!({
                        "class": d.mask_json(c),
                        "conatural": conat,
                        "cn": cn,
                        "is_a_pseudocomplement": is_a_perp,
                    }));
                }
            }
            o
        }
        "S4.conat-boolean" => {
            let mut o = Outcome::new("exhaustive quotient-closed classes");
            if !d.conat.contains(&zero) || !d.conat.contains(&all_mask) {
                o.fail(json!({"issue": "trivial classes are not conatural"}));
            }
            for &c in &d.qcl {
                let dp = perp(uv, perp(uv, c)?)?;
                let minimal = is_conatural(uv, dp)
                    && c & !dp == 0
                    && d.conat.iter().all(|&e| c & !e != 0 || dp & !e == 0);
                if !minimal {
                    o.fail(json!({
                        "class": d.mask_json(c),
                        "issue": "double perp is not the least conatural superclass",
                    }));
                }
            }
            for &a in &d.conat {
                let comp = perp(uv, a)?;
                let join_all = perp(uv, perp(uv, a | comp)?)?;
                if !d.conat.contains(&comp) || a & comp != zero || join_all != all_mask {
                    o.fail(json!({"class": d.mask_json(a), "issue": "complementation fails"}));
                }
                for &b in &d.conat {
                    if !d.conat.contains(&(a & b)) {
                        o.fail(json!({"issue": "meet is not intersection"}));
                    }
                    for &c in &d.conat {
                        // distributivity with join = conatural closure of the union
                        let join_bc = perp(uv, perp(uv, b | c)?)?;
                        let lhs = a & join_bc;
                        let rhs = perp(uv, perp(uv, (a & b) | (a & c))?)?;
                        if lhs != rhs {
                            o.fail(json!({"issue": "distributivity fails"}));
                        }
                    }
                }
            }
            o
        }
        "S4.propPsig" => {
            let Some(_) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for (i, t) in d.all_triples.iter().enumerate() {
                if t.p != perp(uv, t.t)? {
                    o.fail(json!({
                        "sigma": d.sigma_json(&d.all.as_ref().unwrap()[i]),
                        "p": d.mask_json(t.p),
                        "perp_t": d.mask_json(perp(uv, t.t)?),
                    }));
                }
            }
            o
        }
        "S4.P-hat" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            let mut undecided = 0usize;
            for (i, p) in all.iter().enumerate() {
                match d.hat(p) {
                    Some(h) => {
                        let th = class_triple(uv, &h);
                        if th.p != d.all_triples[i].p {
                            o.fail(json!({"sigma": d.sigma_json(p)}));
                        }
                    }
                    None => undecided += 1,
                }
            }
            if undecided > 0 {
                o.notes.push(format!(
                    "{undecided} assignment(s) skipped: an iterate leaves the universe"
                ));
                if o.status == Status::Holds {
                    o.status = Status::Degraded;
                }
            }
            o
        }
        "S4.conatp" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for (i, t) in d.all_triples.iter().enumerate() {
                if !is_conatural(uv, t.p) {
                    o.fail(json!({"sigma": d.sigma_json(&all[i]), "p": d.mask_json(t.p)}));
                }
            }
            o
        }
        "S4.alpha-superfluous" => {
            let mut o = Outcome::new("expression-family");
            for c in 0..n {
                let m = &uv.classes[c];
                for (j, s) in uv.submods[c].iter().enumerate() {
                    if !uv.fi[c][j] || s.is_full(m) {
                        continue;
                    }
                    let ra = restrict(&Preradical::alpha(m.clone(), s.clone())?, uv)?;
                    let fully = crate::cofirst::is_fully_co_first(uv, &ra, c) == Verdict::Yes;
                    if fully && !superfluous(m, s) {
                        o.fail(json!({"module": d.class_json(c), "submodule": s.gens}));
                    }
                }
            }
            o
        }
        "S4.cor-24" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            let mut undecided = 0usize;
            for (i, p) in all.iter().enumerate() {
                let t = &d.all_triples[i];
                let c1 = t.p == all_mask;
                let c3 = t.t == zero;
                match d.hat(p) {
                    Some(h) => {
                        let c2 = h.assignment.iter().all(|&a| a == 0);
                        if c1 != c2 || c2 != c3 {
                            o.fail(json!({
                                "sigma": d.sigma_json(p),
                                "p_everything": c1,
                                "hat_zero": c2,
                                "torsion_trivial": c3,
                            }));
                        }
                    }
                    None => {
                        undecided += 1;
                        if c1 != c3 {
                            o.fail(json!({"sigma": d.sigma_json(p)}));
                        }
                    }
                }
            }
            if undecided > 0 {
                o.notes.push(format!(
                    "{undecided} assignment(s): idempotent core left the universe; only the outer equivalence checked"
                ));
            }
            o
        }
        "S4.V-ring" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            o.notes.push(
                "the V-ring property is detected as a vanishing radical on every universe member"
                    .into(),
            );
            let v_ring = uv
                .classes
                .iter()
                .all(|m| radical_submodule(m).is_zero());
            let nonzero: Vec<usize> = (0..all.len())
                .filter(|&i| all[i].assignment.iter().any(|&a| a != 0))
                .collect();
            let no_sigma_with_full_p = !nonzero
                .iter()
                .any(|&i| d.all_triples[i].p == all_mask);
            let all_torsion_nontrivial = nonzero
                .iter()
                .all(|&i| d.all_triples[i].t != zero);
            if no_sigma_with_full_p != all_torsion_nontrivial
                || all_torsion_nontrivial != v_ring
            {
                o.fail(json!({
                    "no_nonzero_sigma_with_everything_co_first": no_sigma_with_full_p,
                    "every_nonzero_sigma_has_torsion": all_torsion_nontrivial,
                    "v_ring": v_ring,
                }));
            }
            o
        }
        "S4.prop-8.3" => {
            let mut o = Outcome::new("ideal-family");
            for ((_, p), t) in d.fam.iter().zip(d.fam_triples.iter()) {
                let small: u64 = (0..n)
                    .filter(|&c| superfluous(&uv.classes[c], p.value(uv, c)))
                    .map(|c| 1u64 << c)
                    .sum();
                if t.p != small {
                    o.fail(json!({
                        "sigma": d.sigma_json(p),
                        "p": d.mask_json(t.p),
                        "superfluous_value_class": d.mask_json(small),
                    }));
                }
            }
            o
        }
        "S4.cftrad" => {
            let mut o = Outcome::new("ideal-family");
            for ((_, p), t) in d.fam.iter().zip(d.fam_triples.iter()) {
                if !is_conatural(uv, t.t) || perp(uv, t.p)? != t.t {
                    o.fail(json!({
                        "sigma": d.sigma_json(p),
                        "t": d.mask_json(t.t),
                        "perp_p": d.mask_json(perp(uv, t.p)?),
                    }));
                }
            }
            o
        }
        "S4.coroL" => {
            let mut o = Outcome::new("ideal-family");
            for ((_, p), t) in d.fam.iter().zip(d.fam_triples.iter()) {
                if t.f & !t.p != 0 {
                    o.fail(json!({
                        "sigma": d.sigma_json(p),
                        "f": d.mask_json(t.f),
                        "p": d.mask_json(t.p),
                    }));
                } else if o.witnesses.is_empty() {
                    // record a strictness witness when the inclusion is proper
                    if let Some(c) = (0..n).find(|&c| t.p & !t.f & (1 << c) != 0) {
                        o.witnesses.push(json!({
                            "strictness": "proper inclusion",
                            "sigma": d.sigma_json(p),
                            "module_in_p_not_f": d.class_json(c),
                        }));
                    }
                }
            }
            o
        }
        "S4.rid-trad" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            let mut undecided = 0usize;
            for (i, p) in all.iter().enumerate() {
                let f = &d.all_flags[i];
                if f.radical != Some(true) {
                    continue;
                }
                let (Some(idem), Some(trad)) = (f.idempotent, f.t_radical) else {
                    undecided += 1;
                    continue;
                };
                if !idem {
                    continue;
                }
                let t = &d.all_triples[i];
                let f_in_p = t.f & !t.p == 0;
                if trad != f_in_p {
                    o.fail(json!({
                        "sigma": d.sigma_json(p),
                        "t_radical": trad,
                        "torsion_free_inside_co_first": f_in_p,
                    }));
                }
            }
            if undecided > 0 {
                o.notes
                    .push(format!("{undecided} assignment(s) with undecidable flags skipped"));
                if o.status == Status::Holds {
                    o.status = Status::Degraded;
                }
            }
            o
        }
        "S4.propseudo" => {
            let mut o = Outcome::new("bounded-coproduct");
            o.notes.push(format!(
                "coproducts truncated to direct sums of order <= {}",
                uv.max_order
            ));
            let mut skipped = 0usize;
            for &cmask in &d.conat {
                let hyp = d.fam.iter().zip(d.fam_triples.iter()).any(|((_, p), t)| {
                    p.flags(uv).idempotent == Some(true) && perp(uv, cmask).unwrap() == t.p
                });
                if !hyp {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        if cmask & (1 << a) == 0 || cmask & (1 << b) == 0 {
                            continue;
                        }
                        let total = uv.classes[a].size * uv.classes[b].size;
                        if total > uv.max_order {
                            skipped += 1;
                            continue;
                        }
                        let (s, _, _) = direct_sum(&uv.classes[a], &uv.classes[b])?;
                        let Some(sc) = uv.find_class(&s) else {
                            // sums of sums can outgrow the sum_arity closure
                            skipped += 1;
                            continue;
                        };
                        if cmask & (1 << sc) == 0 {
                            o.fail(json!({
                                "class": d.mask_json(cmask),
                                "summands": [d.class_json(a), d.class_json(b)],
                            }));
                        }
                    }
                }
            }
            if skipped > 0 {
                o.notes
                    .push(format!("{skipped} coproduct(s) beyond the universe bounds skipped"));
            }
            o
        }
        "S4.ECNCUC" => {
            let mut o = Outcome::new("not applicable at desk scale");
            o.status = Status::Vacuous;
            o.notes.push(
                "every finite ring already has maximal submodules in every nonzero module; \
                 the equivalence cannot be falsified here"
                    .into(),
            );
            o
        }
        "S4.MAXRing" => {
            let mut o = Outcome::new("not applicable at desk scale");
            o.status = Status::Vacuous;
            o.notes.push(
                "hypothesis and conclusion are both automatic for finite rings".into(),
            );
            o
        }
        "S4.tpcfq" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            let mut skipped = 0usize;
            let mut decided = 0usize;
            for (i, p) in all.iter().enumerate() {
                let f = &d.all_flags[i];
                if f.radical != Some(true) || f.idempotent != Some(true) {
                    continue;
                }
                let t = &d.all_triples[i];
                // torsion class closed under projective covers?
                let mut t_closed = Some(true);
                for c in 0..n {
                    if t.t & (1 << c) == 0 {
                        continue;
                    }
                    match d.cover_class[c] {
                        Some(pc) => {
                            if t.t & (1 << pc) == 0 {
                                t_closed = Some(false);
                                break;
                            }
                        }
                        None => {
                            t_closed = None;
                            break;
                        }
                    }
                }
                let f_closed = (0..n)
                    .filter(|&c| t.f & (1 << c) != 0)
                    .all(|c| uv.quotient_reach(c) & !t.f == 0);
                match t_closed {
                    Some(tc) => {
                        decided += 1;
                        if tc != f_closed {
                            o.fail(json!({
                                "sigma": d.sigma_json(p),
                                "torsion_closed_under_covers": tc,
                                "torsion_free_closed_under_quotients": f_closed,
                            }));
                        }
                    }
                    None => skipped += 1,
                }
            }
            if skipped > 0 {
                o.notes.push(format!(
                    "{skipped} assignment(s) skipped: a projective cover leaves the universe"
                ));
                if decided == 0 && o.status == Status::Holds {
                    o.status = Status::Degraded;
                }
            }
            o
        }
        "S4.conatperfect1" => {
            let mut o = Outcome::new("ideal-family");
            o.notes
                .push("finite rings are left perfect (see docs/derived-facts.md)".into());
            let mut t_masks: Vec<u64> = d.fam_triples.iter().map(|t| t.t).collect();
            t_masks.sort_unstable();
            t_masks.dedup();
            let mut conat = d.conat.clone();
            conat.sort_unstable();
            if t_masks != conat {
                o.fail(json!({
                    "conatural": conat.iter().map(|&m| d.mask_json(m)).collect::<Vec<_>>(),
                    "t_radical_torsion": t_masks.iter().map(|&m| d.mask_json(m)).collect::<Vec<_>>(),
                }));
            }
            o
        }
        "S4.conatforleftperfect" => {
            let mut o = Outcome::new("ideal-family");
            let mut p_masks: Vec<u64> = d.fam_triples.iter().map(|t| t.p).collect();
            p_masks.sort_unstable();
            p_masks.dedup();
            let mut conat = d.conat.clone();
            conat.sort_unstable();
            if p_masks != conat {
                o.fail(json!({
                    "conatural": conat.iter().map(|&m| d.mask_json(m)).collect::<Vec<_>>(),
                    "t_radical_co_first": p_masks.iter().map(|&m| d.mask_json(m)).collect::<Vec<_>>(),
                }));
            }
            o
        }
        "S5.remark-8s" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            for (i, t) in d.all_triples.iter().enumerate() {
                if t.s != t.t | t.f || t.t & !t.s != 0 || t.f & !t.s != 0 {
                    o.fail(json!({"sigma": d.sigma_json(&all[i])}));
                }
            }
            o
        }
        "S5.tsvc1" => {
            let mut o = Outcome::new("ideal-family");
            for ((_, p), t) in d.fam.iter().zip(d.fam_triples.iter()) {
                if t.s & !t.p_bar != 0 {
                    o.fail(json!({
                        "sigma": d.sigma_json(p),
                        "s": d.mask_json(t.s),
                        "p_bar": d.mask_json(t.p_bar),
                    }));
                } else if o.witnesses.is_empty() {
                    if let Some(c) = (0..n).find(|&c| t.p_bar & !t.s & (1 << c) != 0) {
                        o.witnesses.push(json!({
                            "strictness": "co-first but not second",
                            "sigma": d.sigma_json(p),
                            "module": d.class_json(c),
                        }));
                    }
                }
            }
            o
        }
        "S5.ejemsvc" => {
            let applies = (2..=8).any(|p| p * p == uv.ring.n && uv.ring.tag.starts_with("zn:"));
            if !applies {
                let mut o = Outcome::new("ideal-family");
                o.status = Status::Vacuous;
                o.notes
                    .push("the example needs a cyclic ring of prime-square order".into());
                return Ok(o);
            }
            let mut o = Outcome::new("ideal-family");
            let r = uv.regular_class;
            // the maximal-ideal t-radical: largest proper ideal
            let witness = d
                .fam
                .iter()
                .zip(d.fam_triples.iter())
                .filter(|((i, _), _)| i.len() < uv.ring.n && i.len() > 1)
                .find(|(_, t)| t.p_bar & (1 << r) != 0 && t.s & (1 << r) == 0);
            match witness {
                Some(((_, p), _)) => o.witnesses.push(json!({
                    "module": d.class_json(r),
                    "sigma": d.sigma_json(p),
                })),
                None => o.fail(json!({
                    "module": d.class_json(r),
                    "issue": "no proper ideal t-radical separates co-first from second",
                })),
            }
            o
        }
        "S5.ejem4.17" => {
            let mut o = Outcome::new("ideal-family");
            o.status = Status::Reported;
            o.notes.push(
                "the source states this with a class symbol it never defines; \
                 it is read here as the torsion-free class"
                    .into(),
            );
            let witness = d.fam.iter().zip(d.fam_triples.iter()).find_map(|((_, p), t)| {
                (0..n)
                    .find(|&c| t.p_bar & !t.f & !t.t & (1 << c) != 0)
                    .map(|c| (p, c))
            });
            match witness {
                Some((p, c)) => o.witnesses.push(json!({
                    "module": d.class_json(c),
                    "sigma": d.sigma_json(p),
                    "co_first": true,
                    "torsion_free": false,
                })),
                None => o
                    .notes
                    .push("no separating witness in this universe".into()),
            }
            o
        }
        "S5.psvc1" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            let mut undecided = 0usize;
            for (i, p) in all.iter().enumerate() {
                let f = &d.all_flags[i];
                if f.radical != Some(true) {
                    continue;
                }
                let t = &d.all_triples[i];
                if t.p_bar != t.s {
                    continue;
                }
                match f.t_radical {
                    Some(true) => {}
                    Some(false) => o.fail(json!({"sigma": d.sigma_json(p)})),
                    None => undecided += 1,
                }
            }
            if undecided > 0 {
                o.notes
                    .push(format!("{undecided} assignment(s) with undecidable t-radical flag"));
                if o.status == Status::Holds {
                    o.status = Status::Degraded;
                }
            }
            o
        }
        "S5.radsec-radcop" => {
            let mut o = Outcome::new("expression-family");
            let rad = restrict(&Preradical::Rad, uv)?;
            let t = class_triple(uv, &rad);
            let agree = t.p_bar == t.s;
            let v_ring = uv
                .classes
                .iter()
                .all(|m| radical_submodule(m).is_zero());
            if agree != v_ring {
                o.fail(json!({
                    "rad_co_first_equals_second": agree,
                    "v_ring": v_ring,
                }));
            }
            o
        }
        "S5.final-prop" => {
            let Some(all) = &d.all else {
                return Ok(Outcome::degraded("exhaustive-universe", CAP_NOTE));
            };
            let mut o = Outcome::new("exhaustive-universe");
            let violators: Vec<usize> = (0..all.len())
                .filter(|&i| d.all_triples[i].p_bar != d.all_triples[i].s)
                .collect();
            let lhs = violators.is_empty();
            let rhs = is_semisimple(&uv.classes[uv.regular_class]);
            if lhs != rhs {
                o.fail(json!({
                    "classes_agree_for_all_sigma": lhs,
                    "ring_semisimple": rhs,
                }));
            } else if let Some(&i) = violators.first() {
                o.witnesses.push(json!({
                    "separating_sigma": d.sigma_json(&all[i]),
                    "p_bar": d.mask_json(d.all_triples[i].p_bar),
                    "s": d.mask_json(d.all_triples[i].s),
                }));
            }
            o
        }
        other => return Err(Error::UnknownObject(format!("proposition {other}"))),
    })
}

/// Run the selected suites over one universe. `suites` entries are suite ids
/// or "all"; unknown ids are an error. Results follow registry order.
pub fn run_suites(
    ring_spec: &str,
    uv: &ModuleUniverse,
    suites: &[String],
    cap: usize,
) -> Result<SuiteReport> {
    let mut selected: Vec<&str> = Vec::new();
    for s in suites {
        if s == "all" {
            for id in SUITE_IDS {
                if !selected.contains(&id) {
                    selected.push(id);
                }
            }
        } else if SUITE_IDS.contains(&s.as_str()) {
            if !selected.contains(&s.as_str()) {
                selected.push(s.as_str());
            }
        } else {
            return Err(Error::UnknownObject(format!("suite {s}")));
        }
    }

    let mut propositions = Vec::new();
    if !selected.is_empty() {
        let data = Data::build(uv, cap)?;
        for entry in REGISTRY {
            if !selected.contains(&entry.suite) {
                continue;
            }
            let start = Instant::now();
            let o = eval_prop(entry.id, &data)?;
            propositions.push(PropResult {
                proposition_id: entry.id.to_string(),
                paper_anchor: entry.anchor.to_string(),
                status: o.status,
                regime: o.regime.to_string(),
                witnesses: o.witnesses,
                notes: o.notes,
                runtime_ms: start.elapsed().as_millis() as u64,
            });
        }
    }

    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION.to_string(),
        ring: ring_spec.to_string(),
        universe: UniverseParams {
            max_order: uv.max_order,
            sum_arity: uv.sum_arity,
            num_classes: uv.num_classes(),
            class_names: uv.names.clone(),
        },
        suites: selected.iter().map(|s| s.to_string()).collect(),
        propositions,
    })
}
