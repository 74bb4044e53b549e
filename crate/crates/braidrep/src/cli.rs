//! Command-line entry point: every verification as a subcommand with a
//! machine-readable report.
//!
//! Reports go to standard output (JSON with `--format json`), anything
//! else to standard error. Exit codes: 0 pass, 1 fail, 2 usage error,
//! 3 budget exceeded. The environment variable `BRAIDREP_BUDGET_MS`
//! supplies a default search budget; `--seed` pins the randomized
//! word-sampling checks so identical invocations print identical reports
//! up to the `elapsed_ms` field.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::homsearch::{self, SearchOptions};
use crate::symp::{self, Sign};
use crate::{audit, braid, superelliptic, tss};

pub const DEFAULT_SEED: u64 = 0xB81D;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    BudgetExceeded,
}

/// The report printed for every invocation. A `fail` verdict always
/// carries a concrete witness in the payload.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub payload: Value,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail | Verdict::Inconclusive => 1,
            Verdict::BudgetExceeded => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "braidrep",
    version,
    about = "Exact-arithmetic verification toolkit for braid group representations"
)]
pub struct Cli {
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads for parallel searches (output is identical for any
    /// worker count).
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Seed for the randomized word-sampling checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate homomorphisms into symmetric groups and check rigidity
    Homsearch(HomsearchCmd),
    /// Totally symmetric set and label-counting checks
    Tss {
        #[command(subcommand)]
        action: TssAction,
    },
    /// Homology-level twist identities
    Symp {
        #[command(subcommand)]
        action: SympAction,
    },
    /// Superelliptic monodromy checks
    Superelliptic {
        #[command(subcommand)]
        action: SuperellipticAction,
    },
    /// Integer inequality ledger
    Audit {
        #[command(subcommand)]
        action: AuditAction,
    },
    /// Run the verification suite
    All(AllCmd),
}

#[derive(Debug, Args)]
pub struct HomsearchCmd {
    #[command(subcommand)]
    pub action: Option<HomsearchAction>,
    /// Strand count for a bare enumeration.
    #[arg(long)]
    pub n: Option<usize>,
    /// Target degree for a bare enumeration.
    #[arg(long)]
    pub m: Option<usize>,
    /// Report only transitive orbits.
    #[arg(long)]
    pub transitive_only: bool,
    /// Lift the (n, m) parameter gate.
    #[arg(long)]
    pub allow_large: bool,
    /// Wall-clock budget in milliseconds (default from BRAIDREP_BUDGET_MS).
    #[arg(long)]
    pub budget_ms: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum HomsearchAction {
    /// Every transitive orbit into Σ_n is cyclic or standard (n >= 5)
    VerifyArtin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget_ms: Option<u64>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Every transitive orbit is cyclic in the range 6 < n < m < 2n
    VerifyLinA {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        budget_ms: Option<u64>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Every orbit into a target smaller than the strand count is cyclic
    VerifyCyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        budget_ms: Option<u64>,
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum TssAction {
    /// Allowed label sizes for k labels under the genus-g capacity
    Classify {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        g: u64,
        /// Override the default capacity 3g + 3.
        #[arg(long)]
        capacity: Option<u64>,
    },
    /// Scan Σ_m for totally symmetric sets of size k and audit the
    /// 2^(k-1) order bound
    Scan {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum SympAction {
    /// Exponents k in [-kmax, kmax] whose twist powers satisfy the braid
    /// relation on homology
    BraidPower {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        kmax: u64,
    },
    /// Order and signed powers of the 4-chain twist product
    ChainRelation {
        #[arg(long)]
        g: usize,
    },
    /// The lantern identity on the documented genus-3 configuration
    Lantern,
    /// Closure of the 2g+1 generating twists modulo a small prime
    Humphries {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        p: u64,
    },
    /// Braid and commutation identities for the chain homomorphism
    Relations {
        #[arg(long)]
        n: usize,
        /// Twist sign, 1 or -1.
        #[arg(long, default_value_t = 1)]
        sign: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SuperellipticAction {
    /// Genus, relations, and model comparisons for the degree-d family
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Genus of the degree-d cover over n branch points
    Genus {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum AuditAction {
    /// Run one ledger case, or all of them
    Run {
        #[arg(long)]
        case: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct AllCmd {
    /// Reduced smoke suite.
    #[arg(long)]
    pub quick: bool,
    /// JSON file overriding the suite parameter sets.
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
}

fn env_budget() -> Option<u64> {
    std::env::var("BRAIDREP_BUDGET_MS")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn search_options(budget_ms: Option<u64>, allow_large: bool, workers: usize) -> SearchOptions {
    SearchOptions {
        budget: budget_ms.or_else(env_budget).map(Duration::from_millis),
        allow_large,
        workers,
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn rigidity_payload(report: &homsearch::RigidityReport) -> Value {
    json!({
        "n": report.n,
        "m": report.m,
        "orbits": report.orbit_count,
        "transitive_orbits": report.transitive_count,
        "holds": report.holds,
        "counterexample": report.counterexample.as_ref().map(|h| json!({
            "gens": h.gen_images(),
            "kind": kind_str(h),
            "transitive": h.classify().transitive,
        })),
        "complete": report.complete,
    })
}

fn kind_str(h: &homsearch::SymHomomorphism) -> &'static str {
    match h.classify().kind {
        homsearch::HomKind::Cyclic => "cyclic",
        homsearch::HomKind::Standard => "standard",
        homsearch::HomKind::Other => "other",
    }
}

fn run_homsearch(
    cmd: &HomsearchCmd,
    workers: usize,
) -> Result<(String, BTreeMap<String, Value>, Verdict, Value)> {
    match &cmd.action {
        Some(HomsearchAction::VerifyArtin {
            n,
            budget_ms,
            allow_large,
        }) => {
            let opts = search_options(*budget_ms, *allow_large, workers);
            let report = homsearch::verify_artin(*n, &opts)?;
            let verdict = if report.holds {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "homsearch verify-artin".into(),
                params(&[("n", json!(n))]),
                verdict,
                rigidity_payload(&report),
            ))
        }
        Some(HomsearchAction::VerifyLinA {
            n,
            m,
            budget_ms,
            allow_large,
        }) => {
            let opts = search_options(*budget_ms, *allow_large, workers);
            let report = homsearch::verify_lin_a(*n, *m, &opts)?;
            let verdict = if report.holds {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "homsearch verify-lin-a".into(),
                params(&[("n", json!(n)), ("m", json!(m))]),
                verdict,
                rigidity_payload(&report),
            ))
        }
        Some(HomsearchAction::VerifyCyclic {
            n,
            m,
            budget_ms,
            allow_large,
        }) => {
            let opts = search_options(*budget_ms, *allow_large, workers);
            let report = homsearch::verify_all_cyclic(*n, *m, &opts)?;
            let verdict = if report.holds {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "homsearch verify-cyclic".into(),
                params(&[("n", json!(n)), ("m", json!(m))]),
                verdict,
                rigidity_payload(&report),
            ))
        }
        None => {
            let (n, m) = match (cmd.n, cmd.m) {
                (Some(n), Some(m)) => (n, m),
                _ => {
                    return Err(Error::Precondition(
                        "homsearch needs --n and --m (or a verify subcommand)".into(),
                    ))
                }
            };
            let opts = search_options(cmd.budget_ms, cmd.allow_large, workers);
            let homs = homsearch::enumerate_homs(n, m, &opts)?;
            let orbits: Vec<Value> = homs
                .iter()
                .filter(|h| !cmd.transitive_only || h.classify().transitive)
                .map(|h| {
                    json!({
                        "gens": h.gen_images(),
                        "kind": kind_str(h),
                        "transitive": h.classify().transitive,
                    })
                })
                .collect();
            Ok((
                "homsearch".into(),
                params(&[
                    ("n", json!(n)),
                    ("m", json!(m)),
                    ("transitive_only", json!(cmd.transitive_only)),
                ]),
                Verdict::Pass,
                json!({ "n": n, "m": m, "orbits": orbits, "complete": true }),
            ))
        }
    }
}

fn run_tss(action: &TssAction) -> Result<(String, BTreeMap<String, Value>, Verdict, Value)> {
    match action {
        TssAction::Classify { k, g, capacity } => {
            let cap = capacity.unwrap_or_else(|| tss::surface_capacity(*g));
            let allowed = tss::allowed_label_sizes(*k, cap);
            let prop31 = tss::prop31_holds(*g, *k);
            let verdict = if prop31 { Verdict::Pass } else { Verdict::Fail };
            Ok((
                "tss classify".into(),
                params(&[("k", json!(k)), ("g", json!(g))]),
                verdict,
                json!({ "k": k, "capacity": cap, "allowed": allowed, "prop31": prop31 }),
            ))
        }
        TssAction::Scan { m, k } => {
            let sets = tss::scan_totally_symmetric_sets(*m, *k)?;
            let mut bound_failures = Vec::new();
            for set in &sets {
                if !tss::min_order_bound_check(set)? {
                    bound_failures.push(json!(set
                        .iter()
                        .map(|p| p.one_based_images())
                        .collect::<Vec<_>>()));
                }
            }
            let verdict = if bound_failures.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "tss scan".into(),
                params(&[("m", json!(m)), ("k", json!(k))]),
                verdict,
                json!({
                    "m": m,
                    "k": k,
                    "sets_found": sets.len(),
                    "order_bound_failures": bound_failures,
                }),
            ))
        }
    }
}

fn run_symp(action: &SympAction) -> Result<(String, BTreeMap<String, Value>, Verdict, Value)> {
    match action {
        SympAction::BraidPower { g, kmax } => {
            let set = symp::braid_power_test(*g, *kmax)?;
            let verdict = if set == vec![-1, 0, 1] {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "symp braid-power".into(),
                params(&[("g", json!(g)), ("kmax", json!(kmax))]),
                verdict,
                json!({ "set": set }),
            ))
        }
        SympAction::ChainRelation { g } => {
            let report = symp::verify_chain_relation(*g)?;
            let verdict = if report.tenth_power_is_identity {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "symp chain-relation".into(),
                params(&[("g", json!(g))]),
                verdict,
                json!({
                    "order": report.order,
                    "p5_neg_identity": report.fifth_power_is_neg_identity,
                    "p10_identity": report.tenth_power_is_identity,
                }),
            ))
        }
        SympAction::Lantern => {
            let classes = symp::lantern_genus3_classes();
            let holds = symp::verify_lantern(&classes)?;
            let class_rows: Vec<Vec<i64>> = classes
                .iter()
                .map(|v| v.iter().map(|e| i64::try_from(e).unwrap_or(0)).collect())
                .collect();
            Ok((
                "symp lantern".into(),
                params(&[]),
                if holds { Verdict::Pass } else { Verdict::Fail },
                json!({ "holds": holds, "classes": class_rows }),
            ))
        }
        SympAction::Humphries { g, p } => {
            let report = symp::humphries_generation_check(*g, *p)?;
            Ok((
                "symp humphries".into(),
                params(&[("g", json!(g)), ("p", json!(p))]),
                if report.generates {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
                json!({
                    "closure_size": report.closure_size,
                    "group_order": report.group_order.to_string(),
                    "generates": report.generates,
                }),
            ))
        }
        SympAction::Relations { n, sign } => {
            let rep = symp::standard_rep(*n, Sign::from_int(*sign)?)?;
            rep.verify_relations()?;
            let gens: Vec<Vec<Vec<i64>>> = rep
                .gen_images()
                .iter()
                .map(symp::SympMatrix::to_i64_rows)
                .collect::<Result<_>>()?;
            Ok((
                "symp relations".into(),
                params(&[("n", json!(n)), ("sign", json!(sign))]),
                Verdict::Pass,
                json!({ "n": n, "genus": rep.genus(), "relations_hold": true, "gens": gens }),
            ))
        }
    }
}

fn run_superelliptic(
    action: &SuperellipticAction,
) -> Result<(String, BTreeMap<String, Value>, Verdict, Value)> {
    match action {
        SuperellipticAction::Genus { n, d } => {
            let genus = superelliptic::superelliptic_genus(*d, *n)?;
            Ok((
                "superelliptic genus".into(),
                params(&[("n", json!(n)), ("d", json!(d))]),
                Verdict::Pass,
                json!({ "genus": genus }),
            ))
        }
        SuperellipticAction::Verify { n, d } => {
            let genus = superelliptic::superelliptic_genus(*d as u64, *n as u64)?;
            let gens = superelliptic::burau_rep(*n, *d)?;
            let mut relations_hold = true;
            for i in 0..gens.len() - 1 {
                let aba = gens[i].mul(&gens[i + 1])?.mul(&gens[i])?;
                let bab = gens[i + 1].mul(&gens[i])?.mul(&gens[i + 1])?;
                if aba != bab {
                    relations_hold = false;
                }
            }
            for i in 0..gens.len() {
                for j in i + 2..gens.len() {
                    if gens[i].mul(&gens[j])? != gens[j].mul(&gens[i])? {
                        relations_hold = false;
                    }
                }
            }
            let gen_rows = gens
                .iter()
                .map(superelliptic::BurauMatrix::to_coeff_rows)
                .collect::<Result<Vec<_>>>()?;
            let mut payload = json!({
                "n": n,
                "d": d,
                "genus": genus,
                "relations_hold": relations_hold,
                "gens": gen_rows,
            });
            let mut verdict = if relations_hold {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            if *d == 2 {
                let matches = superelliptic::compare_d2_with_standard(*n)?;
                payload["matches_chain_action"] = json!(matches);
                if !matches {
                    verdict = Verdict::Fail;
                }
            }
            if *d >= 3 && *n >= 6 {
                let report = superelliptic::not_transvection_check(*n, *d)?;
                payload["distinct_from_trivial"] = json!(report.distinct_from_trivial);
                payload["distinct_from_standard"] = json!(report.distinct_from_standard);
                payload["distinct_from_negative_standard"] =
                    json!(report.distinct_from_negative_standard);
                payload["conclusive"] = json!(report.conclusive);
                if !report.conclusive && matches!(verdict, Verdict::Pass) {
                    verdict = Verdict::Inconclusive;
                }
            }
            Ok((
                "superelliptic verify".into(),
                params(&[("n", json!(n)), ("d", json!(d))]),
                verdict,
                payload,
            ))
        }
    }
}

fn run_audit(action: &AuditAction) -> Result<(String, BTreeMap<String, Value>, Verdict, Value)> {
    match action {
        AuditAction::Run { case: Some(id) } => {
            let report = audit::run_case(id)?;
            let verdict = if report.violations.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "audit run".into(),
                params(&[("case", json!(id))]),
                verdict,
                serde_json::to_value(&report).expect("report serializes"),
            ))
        }
        AuditAction::Run { case: None } => {
            let reports = audit::run_all()?;
            let verdict = if reports.iter().all(|r| r.violations.is_empty()) {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            Ok((
                "audit run".into(),
                params(&[]),
                verdict,
                json!({ "cases": reports }),
            ))
        }
    }
}

/// Parameter sets for the composite suite; the quick profile trims the
/// expensive sweeps, the full profile matches the acceptance checks.
#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    pub artin_n: Vec<usize>,
    pub lin_a: Vec<(usize, usize)>,
    pub cyclic_below_n: Vec<usize>,
    pub braid_power_max_genus: usize,
    pub relations_max_n: usize,
    pub scan_degree: usize,
    pub scan_max_k: usize,
    pub soundness_words: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            artin_n: vec![5, 6],
            lin_a: vec![(7, 8)],
            cyclic_below_n: vec![5, 6, 7],
            braid_power_max_genus: 5,
            relations_max_n: 12,
            scan_degree: 6,
            scan_max_k: 3,
            soundness_words: 100,
        }
    }
}

impl SuiteConfig {
    pub fn quick() -> Self {
        SuiteConfig {
            artin_n: vec![5],
            lin_a: vec![],
            cyclic_below_n: vec![5, 6],
            braid_power_max_genus: 3,
            relations_max_n: 8,
            scan_degree: 5,
            scan_max_k: 3,
            soundness_words: 25,
        }
    }
}

#[derive(Debug, Serialize)]
struct SuiteCheck {
    name: String,
    verdict: Verdict,
    detail: Value,
}

fn check(name: impl Into<String>, pass: bool, detail: Value) -> SuiteCheck {
    SuiteCheck {
        name: name.into(),
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        detail,
    }
}

fn run_suite(cfg: &SuiteConfig, workers: usize, seed: u64) -> Result<Vec<SuiteCheck>> {
    let opts = search_options(None, false, workers);
    let mut out = Vec::new();

    for &n in &cfg.artin_n {
        let r = homsearch::verify_artin(n, &opts)?;
        out.push(check(
            format!("artin-rigidity-n{n}"),
            r.holds,
            rigidity_payload(&r),
        ));
    }
    for &(n, m) in &cfg.lin_a {
        let r = homsearch::verify_lin_a(n, m, &opts)?;
        out.push(check(
            format!("transitive-cyclic-n{n}-m{m}"),
            r.holds,
            rigidity_payload(&r),
        ));
    }
    for &n in &cfg.cyclic_below_n {
        for m in 1..n {
            let r = homsearch::verify_all_cyclic(n, m, &opts)?;
            out.push(check(
                format!("all-cyclic-n{n}-m{m}"),
                r.holds,
                rigidity_payload(&r),
            ));
        }
    }

    for g in 1..=cfg.braid_power_max_genus {
        let set = symp::braid_power_test(g, 10)?;
        out.push(check(
            format!("braid-power-g{g}"),
            set == vec![-1, 0, 1],
            json!({ "set": set }),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 3..=cfg.relations_max_n {
        for sign in [Sign::Plus, Sign::Minus] {
            let rep = symp::standard_rep(n, sign)?;
            rep.verify_relations()?;
        }
    }
    out.push(check(
        "chain-action-relations",
        true,
        json!({ "max_n": cfg.relations_max_n }),
    ));
    {
        // Commuting-twist modifications leave zero-exponent-sum words
        // fixed; sample seeded modifiers including ±identity.
        let rep = symp::standard_rep(6, Sign::Plus)?;
        let pool = [
            symp::SympMatrix::identity(rep.genus()),
            symp::SympMatrix::neg_identity(rep.genus()),
        ];
        let word = braid::BraidWord::new(6, vec![1, -3])?;
        let base = rep.evaluate(&word)?;
        let mut ok = true;
        for _ in 0..100 {
            let phi = &pool[(rand::Rng::gen_range(&mut rng, 0..pool.len())) as usize];
            let twisted = symp::transvect_representation(&rep, phi)?;
            if twisted.evaluate(&word)? != base {
                ok = false;
            }
        }
        out.push(check(
            "twist-modification-invariance",
            ok,
            json!({ "samples": 100 }),
        ));
    }

    let chain = symp::verify_chain_relation(2)?;
    out.push(check(
        "chain-relation-g2",
        chain.fifth_power_is_neg_identity && chain.tenth_power_is_identity,
        json!({ "order": chain.order, "p5_neg_identity": chain.fifth_power_is_neg_identity, "p10_identity": chain.tenth_power_is_identity }),
    ));
    let lantern = symp::verify_lantern(&symp::lantern_genus3_classes())?;
    out.push(check(
        "lantern-genus3",
        lantern,
        json!({ "holds": lantern }),
    ));
    for p in [2u64, 3] {
        let r = symp::humphries_generation_check(2, p)?;
        out.push(check(
            format!("generating-twists-g2-p{p}"),
            r.generates,
            json!({ "closure_size": r.closure_size, "group_order": r.group_order.to_string() }),
        ));
    }

    {
        let mut genus_ok = true;
        for n in [6u64, 8, 10] {
            if superelliptic::superelliptic_genus(3, n)? != n - 2 {
                genus_ok = false;
            }
        }
        out.push(check("superelliptic-genus-d3", genus_ok, json!({})));
        let mut cmp_ok = true;
        for n in [4usize, 6, 8] {
            if !superelliptic::compare_d2_with_standard(n)? {
                cmp_ok = false;
            }
        }
        out.push(check("superelliptic-d2-matches-chain", cmp_ok, json!({})));
        let mut d3_ok = true;
        for n in [6usize, 8] {
            if !superelliptic::d3_not_transvection_check(n)?.conclusive {
                d3_ok = false;
            }
        }
        out.push(check("superelliptic-d3-distinct", d3_ok, json!({})));
    }

    {
        let mut ok = true;
        for g in 0..=60u64 {
            for k in 1..=40u64 {
                if !tss::prop31_holds(g, k) {
                    ok = false;
                }
            }
        }
        out.push(check(
            "label-size-gate-sweep",
            ok,
            json!({ "g_max": 60, "k_max": 40 }),
        ));
    }

    {
        let mut sets_found = 0usize;
        let mut ok = true;
        for k in 2..=cfg.scan_max_k {
            for m in 2..=cfg.scan_degree {
                for set in tss::scan_totally_symmetric_sets(m, k)? {
                    sets_found += 1;
                    if !tss::min_order_bound_check(&set)? {
                        ok = false;
                    }
                }
            }
        }
        out.push(check(
            "order-bound-scan",
            ok,
            json!({ "degree_max": cfg.scan_degree, "k_max": cfg.scan_max_k, "sets": sets_found }),
        ));
    }

    {
        let reports = audit::run_all()?;
        let ok = reports.iter().all(|r| r.violations.is_empty());
        out.push(check(
            "inequality-ledger",
            ok,
            json!({ "cases": reports.len() }),
        ));
    }

    {
        let homs = homsearch::enumerate_homs(5, 5, &opts)?;
        let mut ok = true;
        for _ in 0..cfg.soundness_words {
            let word = braid::random_identity_word(5, 3, &mut rng)?;
            if !braid::is_identity(&word)? {
                ok = false;
                continue;
            }
            for h in &homs {
                if !h.evaluate(&word)?.is_identity() {
                    ok = false;
                }
            }
        }
        out.push(check(
            "cross-module-soundness",
            ok,
            json!({ "orbits": homs.len(), "words": cfg.soundness_words }),
        ));
    }

    Ok(out)
}

fn run_all(
    cmd: &AllCmd,
    workers: usize,
    seed: u64,
) -> Result<(String, BTreeMap<String, Value>, Verdict, Value)> {
    let cfg = match (&cmd.config, cmd.quick) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("config {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Precondition(format!("config parse: {e}")))?
        }
        (None, true) => SuiteConfig::quick(),
        (None, false) => SuiteConfig::default(),
    };
    let checks = run_suite(&cfg, workers, seed)?;
    let verdict = if checks.iter().all(|c| matches!(c.verdict, Verdict::Pass)) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !matches!(c.verdict, Verdict::Pass))
        .map(|c| c.name.as_str())
        .collect();
    Ok((
        "all".into(),
        params(&[("quick", json!(cmd.quick))]),
        verdict,
        json!({
            "checks": checks,
            "failed": failed,
        }),
    ))
}

/// Execute a parsed invocation and print its report; returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Homsearch(cmd) => run_homsearch(cmd, cli.workers),
        Command::Tss { action } => run_tss(action),
        Command::Symp { action } => run_symp(action),
        Command::Superelliptic { action } => run_superelliptic(action),
        Command::Audit { action } => run_audit(action),
        Command::All(cmd) => run_all(cmd, cli.workers, cli.seed),
    };
    let (report, code) = match outcome {
        Ok((command, parameters, verdict, payload)) => {
            let report = RunReport {
                command,
                parameters,
                verdict,
                payload,
                elapsed_ms: start.elapsed().as_millis(),
            };
            let code = report.exit_code();
            (report, code)
        }
        Err(Error::BudgetExceeded { completed_fraction }) => {
            let report = RunReport {
                command: "budget".into(),
                parameters: BTreeMap::new(),
                verdict: Verdict::BudgetExceeded,
                payload: json!({ "completed_fraction": completed_fraction }),
                elapsed_ms: start.elapsed().as_millis(),
            };
            (report, 3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        ),
        Format::Text => print_text(&report),
    }
    code
}

fn print_text(report: &RunReport) {
    let verdict = match report.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Inconclusive => "inconclusive",
        Verdict::BudgetExceeded => "budget-exceeded",
    };
    println!("{}: {}", report.command, verdict);
    if let Some(checks) = report.payload.get("checks").and_then(Value::as_array) {
        for c in checks {
            let name = c.get("name").and_then(Value::as_str).unwrap_or("?");
            let v = c.get("verdict").and_then(Value::as_str).unwrap_or("?");
            println!("  {name}: {v}");
        }
    } else {
        println!(
            "  {}",
            serde_json::to_string(&report.payload).expect("payload serializes")
        );
    }
    println!("  elapsed: {} ms", report.elapsed_ms);
}
