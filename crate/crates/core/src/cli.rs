//! Command-line front end. Every command can also be driven in-process through
//! [`run`], which is what the `cyclo` binary calls.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 budget exhausted, 3 bad input.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::equiv::{canonical_key, CanonicalKey, MAX_CANONICAL_N};
use crate::error::{Error, Result};
use crate::families::{catalogue_with_bound, chain, sporadic, CatalogueEntry, DEFAULT_FAMILY_BOUND};
use crate::gram::gram_witness;
use crate::grow::{grow_closure, has_extension, named_seeds, two_vertex_seeds, GrowConfig, GrowReport, SEED_SET_NAMES};
use crate::lgraph::LGraph;
use crate::ring::{label_set, RingElement, RingId};
use crate::sample::random_cyclotomic;
use crate::spectra::{char_poly, eigenvalues_all_pm2, is_cyclotomic, mahler_measure, reciprocal_poly, IntPolynomial};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_BAD_INPUT: i32 = 3;

/// Largest `--max-n` accepted by `verify-theorem`.
pub const MAX_VERIFY_N: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "cyclo", version, about = "Cyclotomic charged L-graphs over imaginary quadratic rings")]
struct Cli {
    /// Worker threads for enumeration; output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the label sets L_0..L_4.
    Lnsets {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        json: bool,
    },
    /// Report cyclotomicity, maximality and the characteristic polynomial of a graph file.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Grow seeds to closure.
    Grow(GrowArgs),
    /// Enumerate small graphs and compare them with the catalogue.
    VerifyTheorem {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_FAMILY_BOUND)]
        family_bound: usize,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Write the catalogue as DOT and/or JSON files.
    Export {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value = "export")]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FAMILY_BOUND)]
        family_bound: usize,
    },
    /// Randomized property checks: interlacing and Mahler measure.
    Props {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Args, Debug)]
struct GrowArgs {
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    /// A seed-set name (two-vertex, weight3, charged-w2, isolated-w2), a
    /// catalogue name, or a JSON file holding a graph or a list of graphs.
    #[arg(long)]
    seed: String,
    #[arg(long, value_delimiter = ',', default_values_t = vec![1u8, 2, 3, 4])]
    norms: Vec<u8>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1i8, 0, 1])]
    charges: Vec<i8>,
    #[arg(long, default_value_t = 16)]
    max_rounds: usize,
    #[arg(long, default_value_t = 16)]
    max_vertices: usize,
    #[arg(long)]
    json_out: Option<PathBuf>,
}

/// Written beside each command's outputs.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub ring: i64,
    pub bounds: serde_json::Value,
    pub seed: String,
    pub outputs: Vec<String>,
    pub wall_time_s: f64,
    /// SHA-256 over the sorted canonical keys (hex, one per line).
    pub digest: String,
}

pub fn digest<'a>(keys: impl IntoIterator<Item = &'a CanonicalKey>) -> String {
    let sorted: BTreeSet<String> = keys.into_iter().map(|k| k.to_hex()).collect();
    let mut h = Sha256::new();
    for k in &sorted {
        h.update(k.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

fn manifest_path(p: &Path) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn write_manifest(path: &Path, m: &RunManifest) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(m)? + "\n")?;
    Ok(())
}

/// `±x` pairs rendered once, e.g. `±2, ±(1+w)`.
pub fn render_label_set(elems: &[RingElement]) -> String {
    if elems.is_empty() {
        return "∅".into();
    }
    let mut reps: Vec<RingElement> = elems.iter().copied().filter(|x| x.a > 0 || (x.a == 0 && x.b >= 0)).collect();
    reps.sort_by_key(|x| (x.b.abs(), -x.b, x.a.abs()));
    reps.dedup();
    let parts: Vec<String> = reps
        .iter()
        .map(|x| {
            let s = x.to_string();
            if x.is_zero() {
                s
            } else if s.contains(['+', '-']) {
                format!("±({s})")
            } else {
                format!("±{s}")
            }
        })
        .collect();
    parts.join(", ")
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    d: i64,
    connected: bool,
    cyclotomic: bool,
    maximal: bool,
    all_pm2: bool,
    char_poly: IntPolynomial,
    char_poly_text: String,
    mahler_measure: f64,
    canonical_key: Option<String>,
    catalogue_match: Option<String>,
    nonmaximal_by: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremStatus {
    Pass,
    Fail,
    Incomplete,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub d: i64,
    pub max_n: usize,
    pub status: TheoremStatus,
    pub classes: usize,
    /// Classes per vertex count.
    pub per_n: BTreeMap<usize, usize>,
    /// Catalogue names of the maximal classes found.
    pub maximal_found: Vec<String>,
    /// Maximal graphs matching no catalogue entry.
    pub unmatched_maximal: Vec<LGraph>,
    /// Nonmaximal graphs contained in no catalogue entry.
    pub uncontained_nonmaximal: Vec<LGraph>,
    /// Catalogue entries within `max_n` vertices that were not enumerated.
    pub missing_catalogue: Vec<String>,
    pub digest: String,
}

/// Connected induced subgraphs with at most `max_n` vertices.
fn connected_subsets(g: &LGraph, max_n: usize) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut layer: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    seen.extend(layer.iter().cloned());
    for _ in 1..max_n {
        let mut next = Vec::new();
        for s in &layer {
            for &v in s {
                for &u in &adj[v] {
                    if !s.contains(&u) {
                        let mut t = s.clone();
                        t.push(u);
                        t.sort_unstable();
                        if seen.insert(t.clone()) {
                            next.push(t);
                        }
                    }
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}

/// Enumerates every connected cyclotomic graph on at most `max_n` vertices
/// with an edge of weight at least 2, then checks that each maximal one is a
/// catalogue entry and each nonmaximal one lies inside a catalogue entry.
/// Containment is enough for the nonmaximal case: a supergraph reached by
/// adding vertices while staying connected is reached by repeated one-vertex
/// extensions.
pub fn verify_theorem(ring: RingId, max_n: usize, family_bound: usize) -> Result<TheoremReport> {
    if !(2..=MAX_VERIFY_N).contains(&max_n) {
        return Err(Error::BadInput(format!("max-n must be in 2..={MAX_VERIFY_N}")));
    }
    let cfg = GrowConfig::full(ring).with_max_vertices(max_n).with_max_rounds(max_n);
    let report = grow_closure(&two_vertex_seeds(ring), &cfg)?;

    // Family members too large for a canonical key cannot be enumerated here,
    // and their small connected subgraphs already sit in smaller members.
    let cat: Vec<CatalogueEntry> = catalogue_with_bound(ring, family_bound.max(max_n / 2 + 2))
        .into_iter()
        .filter(|e| e.graph.n() <= MAX_CANONICAL_N)
        .collect();
    let cat_keys: BTreeMap<CanonicalKey, &CatalogueEntry> =
        cat.iter().map(|e| (canonical_key(&e.graph).expect("within bound"), e)).collect();
    let mut contained: BTreeSet<CanonicalKey> = BTreeSet::new();
    for e in &cat {
        for s in connected_subsets(&e.graph, max_n) {
            contained.insert(canonical_key(&e.graph.induced(&s)).expect("small"));
        }
    }

    let mut per_n = BTreeMap::new();
    let mut maximal_found = Vec::new();
    let mut unmatched_maximal = Vec::new();
    let mut uncontained_nonmaximal = Vec::new();
    let mut found = BTreeSet::new();
    for c in &report.classes {
        *per_n.entry(c.n).or_insert(0) += 1;
        if c.maximal {
            match cat_keys.get(&c.key) {
                Some(e) => {
                    maximal_found.push(e.name.clone());
                    found.insert(c.key.clone());
                }
                None => unmatched_maximal.push(c.graph.clone()),
            }
        } else if !contained.contains(&c.key) {
            uncontained_nonmaximal.push(c.graph.clone());
        }
    }
    let missing_catalogue: Vec<String> = cat_keys
        .iter()
        .filter(|(k, e)| e.graph.n() <= max_n && !found.contains(*k))
        .map(|(_, e)| e.name.clone())
        .collect();
    let status = if report.budget_exhausted {
        TheoremStatus::Incomplete
    } else if unmatched_maximal.is_empty() && uncontained_nonmaximal.is_empty() && missing_catalogue.is_empty() {
        TheoremStatus::Pass
    } else {
        TheoremStatus::Fail
    };
    Ok(TheoremReport {
        d: ring.d(),
        max_n,
        status,
        classes: report.classes.len(),
        per_n,
        maximal_found,
        unmatched_maximal,
        uncontained_nonmaximal,
        missing_catalogue,
        digest: digest(report.classes.iter().map(|c| &c.key)),
    })
}

fn load_graphs(path: &Path) -> Result<Vec<LGraph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
    let v: serde_json::Value = serde_json::from_str(&text)?;
    if v.is_array() {
        Ok(serde_json::from_value(v)?)
    } else {
        Ok(vec![serde_json::from_value(v)?])
    }
}

/// Resolves a `--seed` argument.
fn resolve_seeds(seed: &str, ring: RingId) -> Result<Vec<LGraph>> {
    let path = Path::new(seed);
    if path.exists() {
        return load_graphs(path);
    }
    if let Some(s) = named_seeds(seed, ring) {
        return Ok(s);
    }
    if let Some(k) = seed.strip_prefix("chain-").and_then(|k| k.parse().ok()) {
        return Ok(vec![chain(k, ring)?]);
    }
    if let Ok(g) = sporadic(seed, ring) {
        return Ok(vec![g]);
    }
    if let Some(e) = catalogue_with_bound(ring, DEFAULT_FAMILY_BOUND).into_iter().find(|e| e.name == seed) {
        return Ok(vec![e.graph]);
    }
    Err(Error::BadInput(format!(
        "unknown seed {seed:?}; expected a file, one of {SEED_SET_NAMES:?}, chain-K, or a catalogue name"
    )))
}

fn catalogue_name(g: &LGraph) -> Option<String> {
    let key = canonical_key(g).ok()?;
    catalogue_with_bound(g.ring(), DEFAULT_FAMILY_BOUND)
        .into_iter()
        .find(|e| e.graph.n() == g.n() && canonical_key(&e.graph).ok().as_ref() == Some(&key))
        .map(|e| e.name)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => EXIT_BUDGET,
        _ => EXIT_BAD_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// human-readable output to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_PASS };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return EXIT_BAD_INPUT;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli.command, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run(std::env::args_os(), &mut lock)
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Lnsets { d, json } => cmd_lnsets(RingId::new(d)?, json, out),
        Command::Check { file, json } => cmd_check(&file, json, out),
        Command::Grow(a) => cmd_grow(a, out),
        Command::VerifyTheorem { d, max_n, family_bound, json_out } => {
            cmd_verify_theorem(RingId::new(d)?, max_n, family_bound, json_out, out)
        }
        Command::Export { d, dot, json, out: dir, family_bound } => cmd_export(RingId::new(d)?, dot, json, &dir, family_bound, out),
        Command::Props { d, seed, count, max_n } => cmd_props(RingId::new(d)?, seed, count, max_n, out),
    }
}

fn cmd_lnsets(ring: RingId, json: bool, out: &mut dyn Write) -> Result<i32> {
    let ls = label_set(ring);
    if json {
        let sets: BTreeMap<String, Vec<RingElement>> =
            (0..=4).map(|k| (format!("L{k}"), if k == 0 { vec![ring.zero()] } else { ls.of_norm(k).to_vec() })).collect();
        writeln!(out, "{}", serde_json::json!({ "d": ring.d(), "sets": sets }))?;
        return Ok(EXIT_PASS);
    }
    writeln!(out, "{}", ring.legend())?;
    writeln!(out, "L0: 0")?;
    for k in 1..=4 {
        writeln!(out, "L{k}: {}", render_label_set(ls.of_norm(k)))?;
    }
    Ok(EXIT_PASS)
}

fn cmd_check(file: &Path, json: bool, out: &mut dyn Write) -> Result<i32> {
    let graphs = load_graphs(file)?;
    let mut reports = Vec::new();
    for g in &graphs {
        let p = char_poly(g);
        let cyclotomic = is_cyclotomic(g);
        let connected = g.is_connected();
        let maximal = connected && cyclotomic && !has_extension(g, &GrowConfig::full(g.ring()));
        let nonmaximal_by = if connected && cyclotomic && !maximal && matches!(g.ring(), RingId::NEG2 | RingId::NEG7) {
            gram_witness(g).map(|w| match w {
                crate::gram::GramWitness::Template { template, .. } => template.name().to_string(),
                crate::gram::GramWitness::VertexRule { vertex, .. } => format!("vertex rule at {}", vertex + 1),
                crate::gram::GramWitness::EdgeRule { v, w, .. } => format!("edge rule at ({}, {})", v + 1, w + 1),
                crate::gram::GramWitness::Extension { .. } => "one-vertex extension".to_string(),
            })
        } else {
            None
        };
        let key = canonical_key(g).ok();
        reports.push(CheckReport {
            n: g.n(),
            d: g.ring().d(),
            connected,
            cyclotomic,
            maximal,
            all_pm2: eigenvalues_all_pm2(g),
            char_poly_text: p.to_string(),
            mahler_measure: mahler_measure(&reciprocal_poly(&p)),
            char_poly: p,
            catalogue_match: if maximal { catalogue_name(g) } else { None },
            canonical_key: key.map(|k| k.to_hex()),
            nonmaximal_by,
        });
    }
    if json {
        let v = if reports.len() == 1 { serde_json::to_value(&reports[0])? } else { serde_json::to_value(&reports)? };
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        for r in &reports {
            writeln!(out, "n={} d={}", r.n, r.d)?;
            writeln!(out, "  cyclotomic: {}", r.cyclotomic)?;
            writeln!(out, "  maximal: {}", r.maximal)?;
            writeln!(out, "  all_pm2: {}", r.all_pm2)?;
            writeln!(out, "  char_poly: {}", r.char_poly_text)?;
            writeln!(out, "  mahler_measure(reciprocal): {:.12}", r.mahler_measure)?;
            if let Some(name) = &r.catalogue_match {
                writeln!(out, "  catalogue: {name}")?;
            }
            if let Some(how) = &r.nonmaximal_by {
                writeln!(out, "  nonmaximal by: {how}")?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_grow(a: GrowArgs, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let ring = RingId::new(a.d)?;
    let seeds = resolve_seeds(&a.seed, ring)?;
    let cfg = GrowConfig {
        ring,
        allowed_edge_norms: a.norms.clone(),
        allowed_charges: a.charges.clone(),
        max_rounds: a.max_rounds,
        max_vertices: a.max_vertices,
        reduce_mod_equivalence: true,
        max_classes: GrowConfig::full(ring).max_classes,
    };
    let report: GrowReport = grow_closure(&seeds, &cfg)?;
    writeln!(out, "seeds: {} ({} classes)", a.seed, seeds.len())?;
    writeln!(out, "rounds executed: {}", report.rounds_executed)?;
    writeln!(out, "new classes per round: {:?}", report.new_classes_per_round)?;
    writeln!(out, "terminated: {}", report.terminated)?;
    writeln!(out, "classes: {}", report.classes.len())?;
    writeln!(out, "maximal classes: {}", report.maximal_representatives.len())?;
    for g in &report.maximal_representatives {
        let name = catalogue_name(g).unwrap_or_else(|| "-".into());
        writeln!(out, "  {name}  {}", g.to_json())?;
    }
    let dg = digest(report.classes.iter().map(|c| &c.key));
    writeln!(out, "digest: {dg}")?;
    if let Some(path) = &a.json_out {
        std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
        write_manifest(
            &manifest_path(path),
            &RunManifest {
                command: "grow".into(),
                ring: ring.d(),
                bounds: serde_json::to_value(&cfg)?,
                seed: a.seed.clone(),
                outputs: vec![path.display().to_string()],
                wall_time_s: start.elapsed().as_secs_f64(),
                digest: dg,
            },
        )?;
    }
    Ok(if report.budget_exhausted { EXIT_BUDGET } else { EXIT_PASS })
}

fn cmd_verify_theorem(ring: RingId, max_n: usize, family_bound: usize, json_out: Option<PathBuf>, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let r = verify_theorem(ring, max_n, family_bound)?;
    writeln!(out, "d={} max-n={}: {} classes {:?}", r.d, r.max_n, r.classes, r.per_n)?;
    let names: BTreeSet<&String> = r.maximal_found.iter().collect();
    writeln!(out, "maximal classes found: {names:?}")?;
    let clause = |ok: bool| if ok { "PASS" } else { "FAIL" };
    writeln!(out, "[{}] every maximal graph is a catalogue entry", clause(r.unmatched_maximal.is_empty()))?;
    for g in &r.unmatched_maximal {
        writeln!(out, "  counterexample: {}", g.to_json())?;
    }
    writeln!(out, "[{}] every nonmaximal graph lies in a catalogue entry", clause(r.uncontained_nonmaximal.is_empty()))?;
    for g in &r.uncontained_nonmaximal {
        writeln!(out, "  counterexample: {}", g.to_json())?;
    }
    writeln!(out, "[{}] every catalogue entry on <= max-n vertices was enumerated", clause(r.missing_catalogue.is_empty()))?;
    for name in &r.missing_catalogue {
        writeln!(out, "  missing: {name}")?;
    }
    writeln!(out, "status: {:?}", r.status)?;
    writeln!(out, "digest: {}", r.digest)?;
    if let Some(path) = &json_out {
        std::fs::write(path, serde_json::to_string_pretty(&r)? + "\n")?;
        write_manifest(
            &manifest_path(path),
            &RunManifest {
                command: "verify-theorem".into(),
                ring: ring.d(),
                bounds: serde_json::json!({ "max_n": max_n, "family_bound": family_bound }),
                seed: "two-vertex".into(),
                outputs: vec![path.display().to_string()],
                wall_time_s: start.elapsed().as_secs_f64(),
                digest: r.digest.clone(),
            },
        )?;
    }
    Ok(match r.status {
        TheoremStatus::Pass => EXIT_PASS,
        TheoremStatus::Fail => EXIT_FAIL,
        TheoremStatus::Incomplete => EXIT_BUDGET,
    })
}

/// File-name-safe version of a catalogue name.
pub fn file_stem(name: &str) -> String {
    name.replace('*', "star").replace('†', "dag").replace('\'', "prime").replace('+', "plus").replace('^', "").replace('/', "_")
}

fn cmd_export(ring: RingId, dot: bool, json: bool, dir: &Path, family_bound: usize, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    if !dot && !json {
        return Err(Error::BadInput("pass --dot and/or --json".into()));
    }
    let cat = catalogue_with_bound(ring, family_bound);
    if cat.is_empty() {
        return Err(Error::BadInput(format!("empty catalogue for d={}", ring.d())));
    }
    std::fs::create_dir_all(dir)?;
    let mut outputs = Vec::new();
    for e in &cat {
        let stem = format!("d{}_{}", ring.d().abs(), file_stem(&e.name));
        if dot {
            let p = dir.join(format!("{stem}.dot"));
            std::fs::write(&p, e.graph.to_dot(&e.name))?;
            outputs.push(p.display().to_string());
        }
        if json {
            let p = dir.join(format!("{stem}.json"));
            std::fs::write(&p, e.graph.to_json() + "\n")?;
            outputs.push(p.display().to_string());
        }
    }
    if json {
        let p = dir.join(format!("catalogue_d{}.json", ring.d().abs()));
        std::fs::write(&p, serde_json::to_string_pretty(&cat)? + "\n")?;
        outputs.push(p.display().to_string());
    }
    let keys: Vec<CanonicalKey> = cat.iter().map(|e| canonical_key(&e.graph)).collect::<Result<_>>()?;
    let m = RunManifest {
        command: "export".into(),
        ring: ring.d(),
        bounds: serde_json::json!({ "family_bound": family_bound }),
        seed: "catalogue".into(),
        outputs: outputs.clone(),
        wall_time_s: start.elapsed().as_secs_f64(),
        digest: digest(&keys),
    };
    write_manifest(&dir.join(format!("export_d{}.manifest.json", ring.d().abs())), &m)?;
    writeln!(out, "wrote {} files to {}", outputs.len(), dir.display())?;
    Ok(EXIT_PASS)
}

fn cmd_props(ring: RingId, seed: u64, count: usize, max_n: usize, out: &mut dyn Write) -> Result<i32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for i in 0..count {
        let n = 1 + i % max_n.max(1);
        let g = random_cyclotomic(ring, n, &mut rng);
        for v in (0..g.n()).filter(|_| g.n() > 1) {
            if !is_cyclotomic(&g.delete_vertex(v)?) {
                failures += 1;
                writeln!(out, "interlacing failed at vertex {v}: {}", g.to_json())?;
            }
        }
        let m = mahler_measure(&reciprocal_poly(&char_poly(&g)));
        if (m - 1.0).abs() > 1e-9 {
            failures += 1;
            writeln!(out, "Mahler measure {m} != 1: {}", g.to_json())?;
        }
    }
    writeln!(out, "{count} random cyclotomic graphs, seed {seed}: {failures} failures")?;
    Ok(if failures == 0 { EXIT_PASS } else { EXIT_FAIL })
}
