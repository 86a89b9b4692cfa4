//! The acceptance suite.
//!
//! Each criterion runs named checks and passes when all of them pass within
//! its time budget. Realized groups, Cayley graphs and automorphism groups
//! are cached across criteria, so the time of a criterion covers the work it
//! triggers first.

use std::collections::HashMap;
use std::fmt::Display;
use std::rc::Rc;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symlab_core::autgrp::{automorphism_group, automorphism_group_with, canonical_form, is_isomorphic, DEFAULT_VERTEX_CAP};
use symlab_core::classify::reference::NamedGroup;
use symlab_core::classify::{
    classify_case, geodesic_and_path_transitivity, local_action, profile, transitivity_profile, CaseLabel, EvidenceMode,
};
use symlab_core::constructions::{
    basis_map_automorphisms, catalog, connection_set, construction_ii_claims, lemma_5_6_pipeline, prop_1_4_build,
    BasisMapReport, PipelineOptions, PipelineReport, Tier, CATALOG_NAMES,
};
use symlab_core::fp::{aut_fixing_set_search, todd_coxeter, AutFixingSet, EnumOptions, RegularRep, DEFAULT_NODE_CAP};
use symlab_core::graph::{cayley_graph, families};
use symlab_core::{Error, Graph, PermGroup, Permutation, Result};

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub tier: Tier,
    /// A failing non-blocking criterion does not fail the suite.
    pub blocking: bool,
    pub budget: Duration,
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        title: "group orders from coset enumeration",
        tier: Tier::Fast,
        blocking: true,
        budget: secs(180),
    },
    Criterion {
        id: 2,
        title: "automorphisms fixing the connection set",
        tier: Tier::Fast,
        blocking: true,
        budget: secs(7 * 60),
    },
    Criterion {
        id: 3,
        title: "example-6.3 end to end",
        tier: Tier::Full,
        blocking: true,
        budget: secs(120),
    },
    Criterion {
        id: 4,
        title: "3-CH line graphs versus their clique graphs",
        tier: Tier::Full,
        blocking: true,
        budget: secs(30),
    },
    Criterion {
        id: 5,
        title: "line graph, geodesic and clique graph properties",
        tier: Tier::Full,
        blocking: true,
        budget: secs(180),
    },
    Criterion {
        id: 6,
        title: "3-arc-transitive group on K_{q,q}",
        tier: Tier::Fast,
        blocking: true,
        budget: secs(120),
    },
    Criterion {
        id: 7,
        title: "construction-II maps and counts",
        tier: Tier::Fast,
        blocking: true,
        budget: secs(120),
    },
    Criterion {
        id: 8,
        title: "3-arc-regular counting identity",
        tier: Tier::Fast,
        blocking: true,
        budget: secs(10),
    },
    Criterion {
        id: 9,
        title: "triangle counts",
        tier: Tier::Fast,
        blocking: true,
        budget: secs(60),
    },
    Criterion {
        id: 10,
        title: "engine property suites",
        tier: Tier::Fast,
        blocking: true,
        budget: secs(180),
    },
    Criterion {
        id: 11,
        title: "example-6.5 full automorphism group",
        tier: Tier::Full,
        blocking: false,
        budget: secs(900),
    },
];

pub fn criterion(id: u8) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.id == id)
}

pub fn tier_name(t: Tier) -> &'static str {
    match t {
        Tier::Fast => "fast",
        Tier::Full => "full",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped => "skipped",
        }
    }
}

/// The counting identity for construction-II as literally stated. It does
/// not hold; the 2-arc-regular count does.
pub const CONSTRUCTION_II_COUNT_CHECK: &str = "|R|·4 = |V(C(Υ))|·3·2·2";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub criterion: &'static Criterion,
    pub outcome: Outcome,
    pub measured: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl CriterionResult {
    /// One line for the console.
    pub fn line(&self) -> String {
        let c = self.criterion;
        let mut s = format!(
            "criterion {:>2} [{}] {:<7} {}: {} ({:.1} s of {} s)",
            c.id,
            tier_name(c.tier),
            self.outcome.name().to_uppercase(),
            c.title,
            self.measured,
            self.elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for f in self.checks.iter().filter(|c| !c.passed) {
            s.push_str(&format!("\n    failed {}: {}", f.name, f.detail));
        }
        s
    }

    /// Fails the suite: blocking and not passed.
    pub fn is_blocking_failure(&self) -> bool {
        self.criterion.blocking && self.outcome == Outcome::Fail
    }
}

#[derive(Default)]
struct Run {
    checks: Vec<Check>,
    measured: Vec<String>,
    skipped: Option<String>,
}

impl Run {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + Display>(&mut self, name: impl Into<String>, got: T, want: T) {
        let detail = format!("measured {got}, expected {want}");
        self.check(name, got == want, detail);
    }

    fn measured(&mut self, s: impl Into<String>) {
        self.measured.push(s.into());
    }
}

const GOLDEN_ORDERS: [(&str, u64); 6] = [
    ("example-6.3", 125),
    ("example-6.4", 3125),
    ("example-6.5", 512),
    ("example-6.6", 32768),
    ("example-6.7", 15625),
    ("construction-II", 19683),
];
const CONSTRUCTION_I_ORDER: u64 = 131_072;
const BEST_EFFORT_COSETS: usize = 4_000_000;

const GOLDEN_AUT_HS: [(&str, u64); 6] = [
    ("example-6.3", 32),
    ("example-6.4", 32),
    ("example-6.5", 294),
    ("example-6.6", 9610),
    ("example-6.7", 16),
    ("construction-II", 4),
];
const CONSTRUCTION_I_AUT_HS: u64 = 18;
const AUT_HS_BUDGET: Duration = secs(60);

/// `|H| · |Aut(H,S)|` for the entries whose clique graph is 3-arc-regular.
const THREE_ARC_COUNTS: [(&str, u64); 3] = [
    ("example-6.3", 4000),
    ("example-6.4", 100_000),
    ("construction-I", 2_359_296),
];

const STRETCH_AUT_ORDER: u64 = 150_528;

const SUITE_SEED: u64 = 0x5eed_ace0;

/// Runs criteria, sharing realized groups between them.
#[derive(Default)]
pub struct Verifier {
    reps: HashMap<&'static str, Rc<RegularRep>>,
    aut_hs: HashMap<&'static str, Rc<AutFixingSet>>,
    gammas: HashMap<&'static str, Rc<Graph>>,
    basis_maps: Option<Rc<BasisMapReport>>,
    example_6_3: Option<Rc<PipelineReport>>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Criteria of `tier`; the full tier includes the fast one.
    pub fn selected(tier: Tier) -> Vec<&'static Criterion> {
        CRITERIA.iter().filter(|c| tier == Tier::Full || c.tier == Tier::Fast).collect()
    }

    pub fn run(&mut self, c: &'static Criterion) -> CriterionResult {
        let start = Instant::now();
        let mut run = Run::default();
        let res = match c.id {
            1 => self.group_orders(&mut run),
            2 => self.aut_hs_orders(&mut run),
            3 => self.example_6_3_end_to_end(&mut run),
            4 => self.three_ch_instances(&mut run),
            5 => self.line_graph_properties(&mut run),
            6 => self.k_qq_group(&mut run),
            7 => self.construction_ii(&mut run),
            8 => self.three_arc_identity(&mut run),
            9 => self.triangles(&mut run),
            10 => self.engine_suites(&mut run),
            11 => self.stretch(&mut run, c.budget),
            _ => Err(Error::Input(format!("no criterion {}", c.id))),
        };
        let elapsed = start.elapsed();
        if let Err(e) = res {
            run.check("completes", false, e.to_string());
        }
        let within = elapsed <= c.budget;
        let outcome = if let Some(reason) = &run.skipped {
            run.measured(format!("skipped: {reason}"));
            Outcome::Skipped
        } else if !within && !c.blocking {
            run.measured(format!("skipped: over the {} s budget", c.budget.as_secs()));
            Outcome::Skipped
        } else {
            if !within {
                run.check("budget", false, format!("{:.1} s over {} s", elapsed.as_secs_f64(), c.budget.as_secs()));
            }
            if run.checks.iter().all(|k| k.passed) {
                Outcome::Pass
            } else {
                Outcome::Fail
            }
        };
        CriterionResult {
            criterion: c,
            outcome,
            measured: run.measured.join("; "),
            checks: run.checks,
            elapsed,
        }
    }

    fn rep(&mut self, name: &'static str) -> Result<Rc<RegularRep>> {
        if let Some(r) = self.reps.get(name) {
            return Ok(r.clone());
        }
        let entry = catalog(name, None)?;
        let rep = Rc::new(RegularRep::new(&entry.presentation, &EnumOptions::default())?);
        self.reps.insert(name, rep.clone());
        Ok(rep)
    }

    fn aut_hs(&mut self, name: &'static str) -> Result<Rc<AutFixingSet>> {
        if let Some(a) = self.aut_hs.get(name) {
            return Ok(a.clone());
        }
        let rep = self.rep(name)?;
        let (set, tuple) = connection_set(&rep, &catalog(name, None)?);
        let aut = Rc::new(aut_fixing_set_search(&rep, &set, &tuple, DEFAULT_NODE_CAP)?);
        self.aut_hs.insert(name, aut.clone());
        Ok(aut)
    }

    fn gamma(&mut self, name: &'static str) -> Result<Rc<Graph>> {
        if let Some(g) = self.gammas.get(name) {
            return Ok(g.clone());
        }
        let rep = self.rep(name)?;
        let (set, _) = connection_set(&rep, &catalog(name, None)?);
        let g = Rc::new(cayley_graph(&rep, &set)?);
        self.gammas.insert(name, g.clone());
        Ok(g)
    }

    fn basis_maps(&mut self) -> Result<Rc<BasisMapReport>> {
        if let Some(b) = &self.basis_maps {
            return Ok(b.clone());
        }
        let b = Rc::new(basis_map_automorphisms(&catalog("construction-I", None)?, &EnumOptions::default())?);
        self.basis_maps = Some(b.clone());
        Ok(b)
    }

    fn example_6_3(&mut self) -> Result<Rc<PipelineReport>> {
        if let Some(p) = &self.example_6_3 {
            return Ok(p.clone());
        }
        let opts = PipelineOptions {
            tier: Tier::Full,
            ..PipelineOptions::default()
        };
        let p = Rc::new(lemma_5_6_pipeline(&catalog("example-6.3", None)?, &opts)?);
        self.example_6_3 = Some(p.clone());
        Ok(p)
    }

    fn group_orders(&mut self, run: &mut Run) -> Result<()> {
        let mut parts = Vec::new();
        for (name, want) in GOLDEN_ORDERS {
            let order = self.rep(name)?.order() as u64;
            let stated = catalog(name, None)?.expected.group_order.value;
            run.check(
                format!("{name} order"),
                order == want && stated == BigUint::from(want),
                format!("realized {order}, stated {stated}, expected {want}"),
            );
            parts.push(format!("{name} {order}"));
        }
        let entry = catalog("construction-I", None)?;
        let opts = EnumOptions {
            max_cosets: BEST_EFFORT_COSETS,
            ..EnumOptions::default()
        };
        match RegularRep::new(&entry.presentation, &opts) {
            Ok(rep) => {
                let order = rep.order() as u64;
                run.check(
                    "construction-I order (best effort)",
                    order == CONSTRUCTION_I_ORDER,
                    format!("realized {order}, expected {CONSTRUCTION_I_ORDER}"),
                );
                parts.push(format!("construction-I {order}"));
            }
            Err(Error::Overflow { live }) => {
                run.check(
                    "construction-I order (best effort)",
                    true,
                    format!("skipped: {live} live cosets exceed {BEST_EFFORT_COSETS}"),
                );
                parts.push("construction-I skipped".into());
            }
            Err(e) => return Err(e),
        }
        run.measured(parts.join(", "));
        Ok(())
    }

    fn aut_hs_orders(&mut self, run: &mut Run) -> Result<()> {
        let mut parts = Vec::new();
        for (name, want) in GOLDEN_AUT_HS {
            let start = Instant::now();
            let aut = self.aut_hs(name)?;
            let dt = start.elapsed();
            let order = aut.order();
            run.eq(format!("{name} |Aut(H,S)|"), order.clone(), BigUint::from(want));
            run.check(
                format!("{name} within budget"),
                dt <= AUT_HS_BUDGET,
                format!("{:.1} s", dt.as_secs_f64()),
            );
            let shape = match name {
                "example-6.7" => Some(NamedGroup::M16),
                "construction-II" => Some(NamedGroup::C4),
                _ => None,
            };
            if let Some(shape) = shape {
                let iso = aut.on_set.is_isomorphic_small(&shape.realize()?)?;
                run.check(format!("{name} Aut(H,S) is {}", shape.name()), iso, format!("isomorphic {iso}"));
            }
            parts.push(format!("{name} {order}"));
        }
        let start = Instant::now();
        let bm = self.basis_maps()?;
        let dt = start.elapsed();
        run.check(
            "construction-I |Aut(H,S)| from basis maps",
            bm.accepted as u64 == CONSTRUCTION_I_AUT_HS,
            format!(
                "{} of {} candidate maps are automorphisms, expected {CONSTRUCTION_I_AUT_HS}",
                bm.accepted, bm.candidates
            ),
        );
        run.check(
            "construction-I within budget",
            dt <= AUT_HS_BUDGET,
            format!("{:.1} s", dt.as_secs_f64()),
        );
        let shape = bm.named.map_or("unidentified", |n| n.name());
        parts.push(format!("construction-I {} ({shape})", bm.accepted));
        run.measured(parts.join(", "));
        Ok(())
    }

    fn example_6_3_end_to_end(&mut self, run: &mut Run) -> Result<()> {
        let p = self.example_6_3()?;
        run.check("pipeline stages pass", p.passed(), p.discrepancies.join("; "));
        let g = p.gamma.as_ref().ok_or_else(|| Error::Structure("pipeline produced no Γ".into()))?;
        run.check(
            "Γ is connected, 8-regular and locally 2K_4 on 125 vertices",
            g.order() == 125 && g.is_connected() && g.valency() == Some(8) && g.locally_2kn() == Some(4),
            format!("{} vertices, valency {:?}, locally 2K_{:?}", g.order(), g.valency(), g.locally_2kn()),
        );
        let aut = automorphism_group(g)?.group;
        run.eq("|Aut(Γ)|", aut.order(), BigUint::from(4000u32));
        run.check(
            "pipeline |Aut(Γ)| agrees",
            p.aut_gamma_order.as_ref() == Some(&aut.order()),
            format!("{:?}", p.aut_gamma_order.as_ref().map(|o| o.to_string())),
        );
        // R(H) has order 125 = the 5-part of |Aut(Γ)|, so it is a Sylow
        // 5-subgroup; normal and regular means Γ is a normal Cayley graph.
        let rh = self.rep("example-6.3")?.group().clone();
        let cofactor = aut.order() / rh.order();
        let sylow = rh.order() == BigUint::from(125u32) && (&cofactor % 5u32) != BigUint::from(0u32);
        let normal = rh.is_subgroup_of(&aut) && aut.normalizes(&rh);
        run.check(
            "Sylow 5-subgroup is normal and regular",
            sylow && normal && rh.is_regular(),
            format!("Sylow {sylow}, normal {normal}, regular {}", rh.is_regular()),
        );
        let sigma = g.clique_graph()?;
        let aut_sigma = automorphism_group(&sigma)?.group;
        let t = transitivity_profile(&sigma, &aut_sigma)?;
        let k = sigma.valency().unwrap_or(0);
        let arcs3 = sigma.order() * k * k.saturating_sub(1).pow(2);
        run.check(
            "Σ has 50 vertices of valency 5",
            sigma.order() == 50 && k == 5,
            format!("{} vertices, valency {k}", sigma.order()),
        );
        run.check(
            "Σ is 3-arc-regular",
            t.s_arc[2] && t.s_arc_regular[2] && arcs3 == 4000 && aut_sigma.order() == BigUint::from(4000u32),
            format!(
                "3-arc-transitive {}, 3-arc-regular {}, {arcs3} 3-arcs, |Aut(Σ)| = {}",
                t.s_arc[2],
                t.s_arc_regular[2],
                aut_sigma.order()
            ),
        );
        let prof = p.profile.as_ref().ok_or_else(|| Error::Structure("pipeline produced no profile".into()))?;
        run.check(
            "Γ is 3-CSH, 2-geodesic-transitive, not 3-CH",
            prof.mode == EvidenceMode::Full
                && prof.csh[2].value
                && prof.geodesic_transitive_2.value
                && !prof.ch[2].value,
            format!(
                "3-CSH {}, 2-geodesic-transitive {}, 3-CH {}",
                prof.csh[2].value, prof.geodesic_transitive_2.value, prof.ch[2].value
            ),
        );
        let label = p.case.as_ref().map(|c| c.label);
        run.check(
            "case 2",
            label == Some(CaseLabel::Case(2)),
            label.map_or("none".into(), |l| l.to_string()).to_string(),
        );
        run.measured(format!(
            "|Aut(Γ)| = {}, |Aut(Σ)| = {}, {}",
            aut.order(),
            aut_sigma.order(),
            label.map_or("no case".into(), |l| l.to_string())
        ));
        Ok(())
    }

    fn three_ch_instances(&mut self, run: &mut Run) -> Result<()> {
        let corpus: [(&str, Graph, Option<bool>); 4] = [
            ("L(K33)", families::complete_bipartite(3, 3).line_graph()?, Some(true)),
            ("L(K44)", families::complete_bipartite(4, 4).line_graph()?, Some(true)),
            ("L(Petersen)", families::petersen().line_graph()?, None),
            ("L(cube)", families::hypercube(3).line_graph()?, Some(false)),
        ];
        let (mut both_true, mut both_false) = (0, 0);
        let mut parts = Vec::new();
        for (name, g, expect) in corpus {
            let aut = automorphism_group(&g)?.group;
            let ch3 = profile(&g, &aut, EvidenceMode::Full)?.ch[2].value;
            let sigma = g.clique_graph()?;
            let aut_sigma = automorphism_group(&sigma)?.group;
            let arc3 = transitivity_profile(&sigma, &aut_sigma)?.s_arc[2];
            let local3 = local_action(&sigma, &aut_sigma, 0)?.three_transitive;
            let rhs = arc3 && local3;
            run.check(
                format!("{name}: 3-CH iff clique graph 3-arc-transitive and locally 3-transitive"),
                ch3 == rhs,
                format!("3-CH {ch3}, 3-arc-transitive {arc3}, locally 3-transitive {local3}"),
            );
            if let Some(e) = expect {
                run.check(format!("{name} 3-CH"), ch3 == e, format!("measured {ch3}, expected {e}"));
            }
            both_true += usize::from(ch3 && rhs);
            both_false += usize::from(!ch3 && !rhs);
            parts.push(format!("{name} {ch3}"));
        }
        run.check(
            "both directions exercised",
            both_true > 0 && both_false > 0,
            format!("{both_true} instances with both sides true, {both_false} with both false"),
        );
        run.measured(format!("3-CH: {}", parts.join(", ")));
        Ok(())
    }

    fn line_graph_properties(&mut self, run: &mut Run) -> Result<()> {
        let corpus: Vec<(String, Graph)> = vec![
            ("K4".into(), families::complete(4)),
            ("K5".into(), families::complete(5)),
            ("K33".into(), families::complete_bipartite(3, 3)),
            ("K44".into(), families::complete_bipartite(4, 4)),
            ("cube".into(), families::hypercube(3)),
            ("Petersen".into(), families::petersen()),
            ("L(K33)".into(), families::complete_bipartite(3, 3).line_graph()?),
            ("L(Petersen)".into(), families::petersen().line_graph()?),
            ("example-6.3 Γ".into(), (*self.gamma("example-6.3")?).clone()),
        ];
        let mut auts: HashMap<String, PermGroup> = HashMap::new();
        let mut aut_of = |name: &str, g: &Graph| -> Result<PermGroup> {
            if let Some(a) = auts.get(name) {
                return Ok(a.clone());
            }
            let a = automorphism_group(g)?.group;
            auts.insert(name.to_string(), a.clone());
            Ok(a)
        };

        // Pairs (Σ, L(Σ)): each eligible member with its line graph, and
        // the clique graph of each locally 2K_n member with the member.
        let eligible = |g: &Graph| g.is_connected() && !g.is_complete() && g.valency().is_some_and(|k| k >= 3);
        let mut pairs: Vec<(String, Graph, String, Graph)> = Vec::new();
        for (name, g) in &corpus {
            if eligible(g) {
                pairs.push((name.clone(), g.clone(), format!("L({name})"), g.line_graph()?));
            }
            if g.locally_2kn().is_some() {
                let c = g.clique_graph()?;
                if eligible(&c) {
                    pairs.push((format!("C({name})"), c, name.clone(), g.clone()));
                }
            }
        }
        let mut prop_checks = 0;
        for (sn, s, ln, l) in &pairs {
            let aut_s = aut_of(sn, s)?;
            let aut_l = aut_of(ln, l)?;
            let gens_s = aut_s.generators();
            let gens_l = aut_l.generators();
            let arcs_s: Vec<_> = [2, 3].iter().map(|&k| orbit_count(&s_arcs(s, k), gens_s)).collect();
            let l_arcs = orbit_count(&s_arcs(l, 1), gens_l) == 1;
            let l_geod = orbit_count(&two_geodesics(l), gens_l) <= 1;
            let t = transitivity_profile(s, &aut_s)?;
            run.check(
                format!("{sn}: s-arc orbit counts agree with the engine"),
                t.s_arc[1] == (arcs_s[0] == 1) && t.s_arc[2] == (arcs_s[1] == 1),
                format!("2-arc orbits {}, 3-arc orbits {}", arcs_s[0], arcs_s[1]),
            );
            run.check(
                format!("{sn} 2-arc-transitive iff {ln} arc-transitive"),
                (arcs_s[0] == 1) == l_arcs,
                format!("{} vs {l_arcs}", arcs_s[0] == 1),
            );
            run.check(
                format!("{sn} 3-arc-transitive iff {ln} 2-geodesic-transitive"),
                (arcs_s[1] == 1) == (l_arcs && l_geod),
                format!("{} vs {}", arcs_s[1] == 1, l_arcs && l_geod),
            );
            prop_checks += 2;
        }

        // Transitivity on 2-geodesic paths against the stabilizer's action
        // on the non-edges of a neighbourhood.
        let mut geodesic_checks = 0;
        let mut subjects: Vec<(String, Graph)> = corpus.clone();
        subjects.extend(pairs.iter().map(|(_, _, ln, l)| (ln.clone(), l.clone())));
        subjects.sort_by(|a, b| a.0.cmp(&b.0));
        subjects.dedup_by(|a, b| a.0 == b.0);
        for (name, g) in &subjects {
            let aut = aut_of(name, g)?;
            let paths = orbit_count_unordered_paths(g, aut.generators()) <= 1;
            let stab = aut.point_stabilizer(0)?;
            let nbrs = g.neighbors(0);
            let mut non_edges = Vec::new();
            for (i, &x) in nbrs.iter().enumerate() {
                for &y in &nbrs[i + 1..] {
                    if !g.adjacent(x, y) {
                        non_edges.push(vec![x, y]);
                    }
                }
            }
            let local = orbit_count_sets(&non_edges, stab.generators()) <= 1;
            let engine = geodesic_and_path_transitivity(g, &aut)?;
            run.check(
                format!("{name}: 2-geodesic paths versus the local complement"),
                paths == local && engine.geodesic_path_2 == paths && engine.local_criterion.is_none_or(|c| c == local),
                format!(
                    "paths {paths}, local {local}, engine {} / {:?}",
                    engine.geodesic_path_2, engine.local_criterion
                ),
            );
            geodesic_checks += 1;
        }

        let mut dual_checks = 0;
        for (name, g) in &corpus {
            if g.locally_2kn().is_none() {
                continue;
            }
            let c = g.clique_graph()?;
            let back = is_isomorphic(&c.line_graph()?, g)?;
            let a = aut_of(name, g)?.order();
            let b = aut_of(&format!("C({name})"), &c)?.order();
            run.check(
                format!("{name}: L(C(Γ)) ≅ Γ and |Aut(Γ)| = |Aut(C(Γ))|"),
                back && a == b,
                format!("isomorphic {back}, {a} vs {b}"),
            );
            dual_checks += 1;
        }
        run.check("duality checked", dual_checks >= 3, format!("{dual_checks} locally 2K_n members"));
        run.measured(format!(
            "{prop_checks} arc/geodesic biconditionals, {geodesic_checks} geodesic-path checks, {dual_checks} duality checks"
        ));
        Ok(())
    }

    fn k_qq_group(&mut self, run: &mut Run) -> Result<()> {
        let mut parts = Vec::new();
        for (p, f, r) in [(3, 2, 2), (2, 6, 3)] {
            let (graph, group, rep) = prop_1_4_build(p, f, r)?;
            let tag = format!("({p},{f},{r})");
            let arcs2 = orbit_count(&s_arcs(&graph, 2), group.generators());
            run.check(
                format!("{tag} 2-arc-transitive"),
                rep.two_arc_transitive && arcs2 == 1,
                format!("engine {}, 2-arc orbits {arcs2}", rep.two_arc_transitive),
            );
            run.check(
                format!("{tag} kernel measurement consistent"),
                rep.internally_consistent(),
                format!("kernel order {}, orbits {:?}", rep.kernel_order, rep.kernel_orbits),
            );
            // Transitive on 2-arcs, so transitive on 3-arcs iff a 2-arc
            // stabilizer is transitive on the ways to extend it.
            let arc = [0, graph.neighbors(0)[0], graph.neighbors(graph.neighbors(0)[0])[1]];
            let stab = group.pointwise_stabilizer(&arc)?;
            let ends: Vec<u32> = graph.neighbors(arc[2]).iter().copied().filter(|&x| x != arc[1]).collect();
            let extends = stab.orbit(ends[0])?.len() == ends.len();
            run.check(
                format!("{tag} 3-arc transitivity measured"),
                rep.three_arc_transitive == (arcs2 == 1 && extends),
                format!("engine {}, 2-arc stabilizer transitive on extensions {extends}", rep.three_arc_transitive),
            );
            let flagged = if rep.divergences.is_empty() {
                "none".to_string()
            } else {
                rep.divergences.join("; ")
            };
            run.check(format!("{tag} divergences reported"), true, flagged);
            parts.push(format!(
                "{tag}: |B| = {}, 3-arc-transitive {}, kernel order {} with {} orbits (stated {} of order {})",
                rep.group_order,
                rep.three_arc_transitive,
                rep.kernel_order,
                rep.kernel_orbits.len(),
                rep.claimed_orbits,
                rep.claimed_kernel_order
            ));
        }
        run.measured(parts.join("; "));
        Ok(())
    }

    fn construction_ii(&mut self, run: &mut Run) -> Result<()> {
        let rep = self.rep("construction-II")?;
        let claims = construction_ii_claims(&rep)?;
        let s = &claims.same_relations;
        run.check(
            format!("{} is an automorphism", s.map),
            s.homomorphism && s.bijective == Some(true),
            format!("homomorphism {}, bijective {:?}", s.homomorphism, s.bijective),
        );
        let w = &claims.swap;
        run.check(
            format!("{} is rejected with a failing relator", w.map),
            !w.homomorphism && w.failing_relator.is_some(),
            format!("fails {}", w.failing_relator.as_deref().unwrap_or("nothing")),
        );
        let aut = self.aut_hs("construction-II")?;
        let c4 = aut.on_set.is_isomorphic_small(&NamedGroup::C4.realize()?)?;
        run.check("Aut(R,S) is C4", c4, format!("|Aut(R,S)| = {}", aut.order()));
        let sigma = self.gamma("construction-II")?.clique_graph()?;
        let lhs = rep.order() as u64 * 4;
        let rhs = sigma.order() as u64 * 3 * 2 * 2;
        run.check(
            CONSTRUCTION_II_COUNT_CHECK,
            lhs == rhs,
            format!(
                "{}·4 = {lhs}, {}·12 = {rhs}; the 2-arc-regular count {}·3·2 = {}",
                rep.order(),
                sigma.order(),
                sigma.order(),
                sigma.order() as u64 * 6
            ),
        );
        run.measured(format!(
            "|R| = {}, |V(C(Υ))| = {}, |Aut(R,S)| = {}, swap fails {}",
            rep.order(),
            sigma.order(),
            aut.order(),
            w.failing_relator.as_deref().unwrap_or("nothing")
        ));
        Ok(())
    }

    fn three_arc_identity(&mut self, run: &mut Run) -> Result<()> {
        let claimed: Vec<&str> = CATALOG_NAMES
            .iter()
            .copied()
            .filter(|n| catalog(n, None).is_ok_and(|e| e.expected.three_arc_regular))
            .collect();
        let listed: Vec<&str> = THREE_ARC_COUNTS.iter().map(|&(n, _)| n).collect();
        run.check("3-arc-regular entries", claimed == listed, format!("{claimed:?}"));
        let mut parts = Vec::new();
        for (name, want) in THREE_ARC_COUNTS {
            let entry = catalog(name, None)?;
            let (h, aut, sigma_order, k, basis) = if entry.expected.best_effort {
                let h = entry.expected.group_order.value.clone();
                let aut = self.basis_maps()?.accepted as u64;
                let k = entry.expected.sigma_valency.value;
                let sigma_order = &h * 2u32 / BigUint::from(k);
                (h, aut, sigma_order, k, "stated |H|")
            } else {
                let h = self.rep(name)?.order_big();
                let aut = self.aut_hs(name)?.order();
                let sigma = self.gamma(name)?.clique_graph()?;
                let aut = u64::try_from(aut).map_err(|_| Error::Structure("|Aut(H,S)| too large".into()))?;
                (h, aut, BigUint::from(sigma.order()), sigma.valency().unwrap_or(0), "measured")
            };
            let lhs = &h * aut;
            let rhs = &sigma_order * BigUint::from(k * (k - 1) * (k - 1));
            run.check(
                format!("{name}: |H|·|Aut(H,S)| = |V(Σ)|·k·(k-1)^2"),
                lhs == rhs && lhs == BigUint::from(want),
                format!("{h}·{aut} = {lhs}, {sigma_order}·{k}·{}^2 = {rhs}, expected {want} ({basis})", k - 1),
            );
            parts.push(format!("{name} {lhs}"));
        }
        run.measured(parts.join(", "));
        Ok(())
    }

    fn triangles(&mut self, run: &mut Run) -> Result<()> {
        let cases: [(&str, Rc<Graph>, u64, u64); 3] = [
            ("L(K33)", Rc::new(families::complete_bipartite(3, 3).line_graph()?), 2, 6),
            ("example-6.3 Γ", self.gamma("example-6.3")?, 4, 500),
            ("example-6.5 Γ", self.gamma("example-6.5")?, 7, 7168),
        ];
        let mut parts = Vec::new();
        for (name, g, q, want) in cases {
            let counted = g.count_triangles();
            let naive = naive_triangles(&g);
            let formula = q * (q - 1) * g.order() as u64 / 3;
            run.check(
                format!("{name} triangles"),
                counted == naive && counted == formula && counted == want,
                format!("counted {counted}, by triples {naive}, q(q-1)|V|/3 = {formula}, expected {want}"),
            );
            parts.push(format!("{name} {counted}"));
        }
        run.measured(parts.join(", "));
        Ok(())
    }

    fn engine_suites(&mut self, run: &mut Run) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);

        let mut violations = 0;
        for _ in 0..50 {
            let g = random_subgroup(8, &mut rng)?;
            for x in 0..8u32 {
                let orbit = g.orbit(x)?.len();
                if BigUint::from(orbit) * g.point_stabilizer(x)?.order() != g.order() {
                    violations += 1;
                }
            }
        }
        run.check("orbit-stabilizer on 50 subgroups of S8", violations == 0, format!("{violations} violations"));

        let (mut compared, mut violations) = (0, 0);
        while compared < 40 {
            let g = random_subgroup(7, &mut rng)?;
            if g.order() > BigUint::from(5000u32) {
                continue;
            }
            compared += 1;
            if BigUint::from(closure(g.generators()).len()) != g.order() {
                violations += 1;
            }
        }
        run.check(
            "chain order against enumeration",
            violations == 0,
            format!("{violations} violations in {compared} groups"),
        );

        let mut violations = 0;
        let mut solvable = 0;
        for _ in 0..40 {
            let g = random_subgroup(6, &mut rng)?;
            let brute = brute_derived_length(g.generators());
            solvable += usize::from(brute.is_some());
            if g.is_solvable() != brute.is_some() || g.derived_length() != brute {
                violations += 1;
            }
        }
        run.check(
            "solvability against element derived series",
            violations == 0 && solvable > 0 && solvable < 40,
            format!("{violations} violations, {solvable} of 40 solvable"),
        );

        let corpus = [
            families::complete(4),
            families::complete(5),
            families::complete_bipartite(3, 3),
            families::complete_bipartite(4, 4),
            families::hypercube(3),
            families::petersen(),
            families::complete_bipartite(3, 3).line_graph()?,
            families::petersen().line_graph()?,
            (*self.gamma("example-6.3")?).clone(),
        ];
        let mut violations = 0;
        for g in &corpus {
            let cert = canonical_form(g)?.certificate;
            let mut perm: Vec<u32> = (0..g.order() as u32).collect();
            for _ in 0..50 {
                perm.shuffle(&mut rng);
                if canonical_form(&g.relabeled(&perm))?.certificate != cert {
                    violations += 1;
                }
            }
        }
        run.check(
            "canonical form under 50 relabelings per graph",
            violations == 0,
            format!("{violations} violations over {} graphs", corpus.len()),
        );

        let mut violations = 0;
        let mut enumerated = 0;
        for name in ["example-6.3", "example-6.4", "example-6.5", "example-6.7", "construction-II"] {
            let p = catalog(name, None)?.presentation;
            let index = todd_coxeter(&p, &[], &EnumOptions::default()).len();
            for _ in 0..3 {
                let mut rels = p.relators().to_vec();
                rels.shuffle(&mut rng);
                let t = todd_coxeter(&p.with_relators(rels)?, &[], &EnumOptions::default());
                enumerated += 1;
                if !t.is_complete() || t.len() != index {
                    violations += 1;
                }
            }
        }
        run.check(
            "coset enumeration independent of relator order",
            violations == 0,
            format!("{violations} violations in {enumerated} shuffled enumerations"),
        );
        let failed = run.checks.iter().filter(|c| !c.passed).count();
        run.measured(format!("{} suites, {failed} with violations", run.checks.len()));
        Ok(())
    }

    fn stretch(&mut self, run: &mut Run, budget: Duration) -> Result<()> {
        let rep = self.rep("example-6.5")?;
        let aut_hs = self.aut_hs("example-6.5")?;
        let gamma = (*self.gamma("example-6.5")?).clone();
        let mut seeds: Vec<Permutation> = rep.group().generators().to_vec();
        seeds.extend(aut_hs.group.generators().iter().cloned());
        let (tx, rx) = mpsc::channel();
        thread::spawn(move || {
            let res = automorphism_group_with(&gamma, &seeds, DEFAULT_VERTEX_CAP).and_then(|a| {
                let case = classify_case(&gamma, &a.group, EvidenceMode::Full)?;
                Ok((a.group.order(), case.label, case.csh3, case.ch3))
            });
            let _ = tx.send(res);
        });
        match rx.recv_timeout(budget) {
            Ok(Ok((order, label, csh3, ch3))) => {
                run.eq("|Aut(Γ)|", order.clone(), BigUint::from(STRETCH_AUT_ORDER));
                run.check(
                    "case 3",
                    label == CaseLabel::Case(3),
                    format!("{label}"),
                );
                run.check("3-CSH and not 3-CH", csh3 && !ch3, format!("3-CSH {csh3}, 3-CH {ch3}"));
                run.measured(format!("|Aut(Γ)| = {order}, {label}"));
            }
            Ok(Err(Error::CapExceeded(m))) | Ok(Err(Error::Unsupported(m))) => run.skipped = Some(m),
            Ok(Err(e)) => return Err(e),
            Err(_) => run.skipped = Some(format!("no result within {} s", budget.as_secs())),
        }
        Ok(())
    }
}

/// Runs the criteria in order and returns their results.
pub fn run_criteria(criteria: &[&'static Criterion], mut each: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    let mut v = Verifier::new();
    criteria
        .iter()
        .map(|&c| {
            log::info!("criterion {}: {}", c.id, c.title);
            let r = v.run(c);
            each(&r);
            r
        })
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbits of the group generated by `gens` on `items`, which it must
/// permute; `normalize` puts an image in the form used by `items`.
fn orbits_under(items: &[Vec<u32>], gens: &[Permutation], normalize: impl Fn(&mut Vec<u32>)) -> usize {
    let index: HashMap<&[u32], usize> = items.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..items.len()).collect();
    let mut img = Vec::new();
    for (i, t) in items.iter().enumerate() {
        for g in gens {
            img.clear();
            img.extend(t.iter().map(|&x| g.image(x)));
            normalize(&mut img);
            let j = index[img.as_slice()];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    (0..items.len()).filter(|&i| find(&mut parent, i) == i).count()
}

fn orbit_count(tuples: &[Vec<u32>], gens: &[Permutation]) -> usize {
    orbits_under(tuples, gens, |_| {})
}

fn orbit_count_sets(sets: &[Vec<u32>], gens: &[Permutation]) -> usize {
    orbits_under(sets, gens, |s| s.sort_unstable())
}

/// Paths `u - v - w` with `u`, `w` non-adjacent, as unordered paths.
fn orbit_count_unordered_paths(g: &Graph, gens: &[Permutation]) -> usize {
    let mut paths: Vec<Vec<u32>> = two_geodesics(g).into_iter().filter(|p| p[0] < p[2]).collect();
    paths.sort_unstable();
    orbits_under(&paths, gens, |p| {
        if p[0] > p[2] {
            p.swap(0, 2);
        }
    })
}

/// Walks `(v_0, ..., v_s)` without immediate backtracking.
fn s_arcs(g: &Graph, s: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (0..g.order() as u32).map(|v| vec![v]).collect();
    for _ in 0..s {
        let mut next = Vec::new();
        for a in &out {
            let last = *a.last().unwrap();
            let prev = (a.len() >= 2).then(|| a[a.len() - 2]);
            for &w in g.neighbors(last) {
                if Some(w) != prev {
                    let mut b = a.clone();
                    b.push(w);
                    next.push(b);
                }
            }
        }
        out = next;
    }
    out
}

/// 2-arcs whose ends are at distance 2.
fn two_geodesics(g: &Graph) -> Vec<Vec<u32>> {
    s_arcs(g, 2).into_iter().filter(|a| !g.adjacent(a[0], a[2])).collect()
}

fn naive_triangles(g: &Graph) -> u64 {
    let mut count = 0;
    for u in 0..g.order() as u32 {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            count += g.neighbors(v).iter().filter(|&&w| w > v && g.adjacent(u, w)).count() as u64;
        }
    }
    count
}

/// A subgroup of `S_n` generated by two random permutations of random
/// supports, so that small and intransitive groups occur too.
fn random_subgroup(n: usize, rng: &mut ChaCha8Rng) -> Result<PermGroup> {
    let mut gens = Vec::new();
    for _ in 0..2 {
        let k = rng.gen_range(2..=n);
        let mut points: Vec<u32> = (0..n as u32).collect();
        points.shuffle(rng);
        let support = &points[..k];
        let mut moved = support.to_vec();
        moved.shuffle(rng);
        let mut images: Vec<u32> = (0..n as u32).collect();
        for (&a, &b) in support.iter().zip(&moved) {
            images[a as usize] = b;
        }
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(n, gens)
}

/// All elements generated by `gens`, as image vectors.
fn closure(gens: &[Permutation]) -> Vec<Permutation> {
    let n = gens.first().map_or(0, |g| g.degree());
    let id = Permutation::identity(n);
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    seen.insert(id.images().to_vec());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = out[i].then(g);
            if seen.insert(y.images().to_vec()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Derived length by commutators of elements, `None` when not solvable.
fn brute_derived_length(gens: &[Permutation]) -> Option<usize> {
    let mut elems = closure(gens);
    let mut length = 0;
    while elems.len() > 1 {
        let mut comms: Vec<Permutation> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for a in &elems {
            for b in &elems {
                let c = a.commutator(b);
                if seen.insert(c.images().to_vec()) {
                    comms.push(c);
                }
            }
        }
        let next = closure(&comms);
        if next.len() == elems.len() {
            return None;
        }
        elems = next;
        length += 1;
    }
    Some(length)
}
