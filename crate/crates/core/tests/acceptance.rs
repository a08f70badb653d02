//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Runs under `cargo test` with a custom
//! harness so the lines are always shown.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclo_lgraphs::cli::{verify_theorem, TheoremStatus};
use cyclo_lgraphs::equiv::{are_equivalent, canonical_key, conjugate, negate, permute, switch, CanonicalKey};
use cyclo_lgraphs::families::{c2k2plus, catalogue_with_bound, sporadic, t2k4, DEFAULT_FAMILY_BOUND};
use cyclo_lgraphs::gram::{combination_inner_products, template_example, try_gram_extension, GramTemplate};
use cyclo_lgraphs::grow::{
    charged_weight_two_seeds, count_form_instances, grow_closure, has_extension, isolated_weight_two_seeds,
    weight_three_seeds, GrowConfig, GrowReport,
};
use cyclo_lgraphs::lgraph::{ChargePattern, EdgePattern, FormPattern};
use cyclo_lgraphs::sample::{random_cyclotomic, random_mixed};
use cyclo_lgraphs::spectra::{char_poly, is_cyclotomic, mahler_measure, reciprocal_poly, root_multiplicity, IntPolynomial};
use cyclo_lgraphs::{label_set, LGraph, RingElement, RingId};

const MAHLER_LEHMER_TOL: f64 = 1e-4;
const MAHLER_ONE_TOL: f64 = 1e-9;
const ORACLE_THRESHOLD: f64 = 2.0 + 1e-9;
const SEED: u64 = 20_240_901;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn key(g: &LGraph) -> CanonicalKey {
    canonical_key(g).expect("within canonical bound")
}

fn sporadic_keys(names: &[&str], r: RingId) -> BTreeSet<CanonicalKey> {
    names.iter().map(|n| key(&sporadic(n, r).unwrap())).collect()
}

// 1. Label sets.

/// Elements of norm `k`, listed as `(x + y√d)/2` and mapped to the `{1, w}` basis.
fn labels_oracle(r: RingId, k: i64) -> BTreeSet<RingElement> {
    let d = r.d();
    let mut out = BTreeSet::new();
    for x in -8i64..=8 {
        for y in -8i64..=8 {
            let (ok, a, b) = if d == -2 {
                // w = √−2, so (x + y√d)/2 needs x, y even
                (x % 2 == 0 && y % 2 == 0, x / 2, y / 2)
            } else {
                // w = (1 + √d)/2, √d = 2w − 1
                ((x - y) % 2 == 0, (x - y) / 2, y)
            };
            if ok && x * x - d * y * y == 4 * k {
                out.insert(r.elem(a, b));
            }
        }
    }
    out
}

fn half(r: RingId, pairs: &[(i64, i64)]) -> BTreeSet<RingElement> {
    pairs
        .iter()
        .flat_map(|&(x, y)| [(x, y), (-x, -y)])
        .map(|(x, y)| if r.d() == -2 { r.elem(x / 2, y / 2) } else { r.elem((x - y) / 2, y) })
        .collect()
}

fn c1_label_sets() -> Result<String, String> {
    for r in RingId::ALL {
        let ls = label_set(r);
        for k in 1..=4 {
            let got: BTreeSet<RingElement> = ls.of_norm(k).iter().copied().collect();
            ensure(got == labels_oracle(r, k as i64), || format!("d={} L{k}: {got:?}", r.d()))?;
        }
    }
    let l = |d: i64, k: usize| -> BTreeSet<RingElement> { label_set(RingId::new(d).unwrap()).of_norm(k).iter().copied().collect() };
    let (r2, r7, r11, r15) = (RingId::NEG2, RingId::NEG7, RingId::NEG11, RingId::NEG15);
    for r in RingId::ALL {
        ensure(l(r.d(), 1) == half(r, &[(2, 0)]), || format!("L1 for d={}", r.d()))?;
    }
    ensure(l(-2, 4) == half(r2, &[(4, 0)]), || "L4 for -2".into())?;
    ensure(l(-11, 4) == half(r11, &[(4, 0)]), || "L4 for -11".into())?;
    ensure(l(-7, 4) == half(r7, &[(4, 0), (3, 1), (3, -1)]), || "L4 for -7".into())?;
    ensure(l(-15, 4) == half(r15, &[(4, 0), (1, 1), (1, -1)]), || "L4 for -15".into())?;
    ensure(l(-11, 2).is_empty(), || "L2 for -11".into())?;
    ensure(l(-15, 2).is_empty() && l(-15, 3).is_empty(), || "L2, L3 for -15".into())?;
    Ok("4 rings, L1..L4 exact".into())
}

// 2. Catalogue health.

fn c2_catalogue() -> Result<String, String> {
    let mut count = 0;
    for r in RingId::ALL {
        for e in catalogue_with_bound(r, 6) {
            let g = &e.graph;
            ensure(g.is_connected(), || format!("{} d={} disconnected", e.name, r.d()))?;
            ensure(is_cyclotomic(g), || format!("{} d={} not cyclotomic", e.name, r.d()))?;
            ensure(!has_extension(g, &GrowConfig::full(r)), || format!("{} d={} extends", e.name, r.d()))?;
            let p = char_poly(g);
            let (a, b) = (root_multiplicity(&p, 2), root_multiplicity(&p, -2));
            ensure(a + b == g.n(), || format!("{} d={} char poly {p}", e.name, r.d()))?;
            count += 1;
        }
    }
    Ok(format!("{count} entries connected, cyclotomic, maximal, (x-2)^a(x+2)^b"))
}

// 3. Growth from the named seed sets.

fn grown(seeds: &[LGraph], r: RingId, norms: &[u8]) -> Result<GrowReport, String> {
    let rep = grow_closure(seeds, &GrowConfig::full(r).with_norms(norms)).map_err(|e| e.to_string())?;
    ensure(rep.terminated && !rep.budget_exhausted, || format!("d={} did not terminate", r.d()))?;
    Ok(rep)
}

fn c3_growing() -> Result<String, String> {
    for r in [RingId::NEG2, RingId::NEG11] {
        let rep = grown(&weight_three_seeds(r), r, &[1, 2, 3])?;
        ensure(rep.maximal_keys() == sporadic_keys(&["S_2'", "S_4'"], r), || format!("weight-3 d={}", r.d()))?;
        ensure(rep.rounds_executed == 3, || format!("weight-3 d={} ran {} rounds", r.d(), rep.rounds_executed))?;
    }
    for r in [RingId::NEG2, RingId::NEG7] {
        let rep = grown(&charged_weight_two_seeds(r), r, &[1, 2])?;
        let mut expect = sporadic_keys(&["S_4"], r);
        expect.insert(key(&c2k2plus(1, r).unwrap()));
        ensure(rep.maximal_keys() == expect, || format!("charged weight-2 d={}", r.d()))?;
    }
    let iso = |r: RingId, names: &[&str]| -> Result<(), String> {
        let rep = grown(&isolated_weight_two_seeds(r), r, &[1, 2])?;
        ensure(rep.maximal_keys() == sporadic_keys(names, r), || format!("isolated weight-2 d={}", r.d()))
    };
    iso(RingId::NEG2, &["S_8*"])?;
    iso(RingId::NEG7, &["S_8*", "S_6†"])?;
    Ok("weight-3 {S_2', S_4'}; charged w2 {C_2^2+, S_4}; isolated w2 {S_8*} / {S_8*, S_6†}".into())
}

// 4. Excluded forms.

fn excluded_forms() -> Vec<(&'static str, FormPattern, Vec<RingId>)> {
    use ChargePattern::*;
    let w2 = vec![RingId::NEG2, RingId::NEG7];
    vec![
        ("triangle w2,w2,w1", FormPattern::new(3).weight(0, 1, 2).weight(1, 2, 2).weight(0, 2, 1), w2.clone()),
        (
            "charged triangle w1,w1,w2",
            FormPattern::new(3).charge(1, Charged).weight(0, 1, 1).weight(1, 2, 1).weight(0, 2, 2),
            w2.clone(),
        ),
        ("triangle w2,w2,w2", FormPattern::new(3).weight(0, 1, 2).weight(1, 2, 2).weight(0, 2, 2), w2.clone()),
        (
            "w2 path with two pendant neighbours",
            FormPattern::new(5)
                .charge(3, Any)
                .charge(4, Any)
                .weight(0, 1, 2)
                .weight(1, 2, 2)
                .weight(3, 0, 1)
                .weight(0, 4, 1)
                .edge(4, 2, EdgePattern::WeightIn(vec![0, 1]))
                .edge(3, 4, EdgePattern::Unspecified),
            w2.clone(),
        ),
        (
            "w2 path in a 4-cycle with a tail",
            FormPattern::new(6)
                .charge(5, Any)
                .weight(0, 1, 2)
                .weight(1, 2, 2)
                .weight(3, 0, 1)
                .weight(0, 4, 1)
                .weight(4, 2, 1)
                .weight(2, 3, 1)
                .weight(3, 5, 1),
            w2.clone(),
        ),
        (
            "charged path w1,w2,w1",
            FormPattern::new(4)
                .charge(0, Charged)
                .charge(3, Any)
                .weight(0, 1, 1)
                .weight(1, 2, 2)
                .weight(2, 3, 1)
                .edge(0, 3, EdgePattern::Unspecified),
            w2,
        ),
        (
            "opposite charges on a 4-vertex form",
            FormPattern::new(4)
                .charge(0, Exactly(1))
                .charge(2, Exactly(-1))
                .weight(0, 1, 1)
                .weight(0, 2, 1)
                .weight(0, 3, 1)
                .weight(1, 2, 1)
                .weight(2, 3, 1),
            RingId::ALL.to_vec(),
        ),
    ]
}

fn c4_excluded() -> Result<String, String> {
    let mut total = 0;
    for (name, form, rings) in excluded_forms() {
        for r in rings {
            let (n, cyc) = count_form_instances(&form, r);
            ensure(n > 0, || format!("{name} d={}: no instances enumerated", r.d()))?;
            ensure(cyc == 0, || format!("{name} d={}: {cyc} cyclotomic of {n}", r.d()))?;
            total += n;
        }
    }
    Ok(format!("{total} instances, none cyclotomic"))
}

// 5. Inequivalence and closure under the equivalence operations.

fn c5_equivalence() -> Result<String, String> {
    let r = RingId::NEG7;
    for k in 2..=5 {
        let (t, tp) = (t2k4(k, r, false).unwrap(), t2k4(k, r, true).unwrap());
        ensure(key(&t) != key(&tp), || format!("T_{}^4 and its primed twin share a key", 2 * k))?;
        ensure(!are_equivalent(&t, &tp), || format!("T_{}^4 equivalent to its twin", 2 * k))?;
    }
    let mut count = 0;
    for r in RingId::ALL {
        for e in catalogue_with_bound(r, 5) {
            let g = &e.graph;
            let mut images = vec![negate(g), conjugate(g), negate(&conjugate(g))];
            images.extend((0..g.n()).map(|v| switch(g, v)));
            let rev: Vec<usize> = (0..g.n()).rev().collect();
            images.push(permute(g, &rev));
            for h in &images {
                ensure(are_equivalent(g, h), || format!("{} d={} not equivalent to an image", e.name, r.d()))?;
            }
            count += 1;
        }
    }
    Ok(format!("T vs T' inequivalent for k=2..5; {count} graphs closed under switch/negate/conjugate"))
}

// 6. Gram combination values.

fn c6_gram() -> Result<String, String> {
    for r in [RingId::NEG2, RingId::NEG7] {
        let ints = |xs: &[i64]| xs.iter().map(|&x| r.int(x)).collect::<Vec<_>>();
        let expect = [
            (GramTemplate::Gram1, ints(&[1, 0, 0]), 2),
            (GramTemplate::Gram2, ints(&[-1, 0, 0, 1]), 3),
            (GramTemplate::Gram3, ints(&[0, 0, 0, 1]), 2),
            (GramTemplate::Gram4, vec![r.omega().conj(), r.zero(), r.int(-1), r.int(-1)], 2),
        ];
        for (t, row, s) in expect {
            let g = template_example(t, r);
            let id: Vec<usize> = (0..g.n()).collect();
            let spec = t.combination(&g, &id);
            let got = combination_inner_products(&g, &spec);
            ensure(got == (row.clone(), s), || format!("{} d={}: {got:?}", t.name(), r.d()))?;
            let h = try_gram_extension(&g, &spec).map_err(|e| format!("{} d={}: {e}", t.name(), r.d()))?;
            ensure(is_cyclotomic(&h), || format!("{} d={} extension not cyclotomic", t.name(), r.d()))?;
        }
    }
    Ok("gram1..gram4 inner products exact; extensions cyclotomic".into())
}

// 7. Theorem verification.

fn c7_theorem() -> Result<String, String> {
    let mut parts = Vec::new();
    let runs: [(RingId, usize, Option<&[&str]>); 4] = [
        (RingId::NEG11, 5, Some(&["S_2", "S_2'", "S_4'"])),
        (RingId::NEG15, 4, Some(&["S_2", "S_2*"])),
        (RingId::NEG2, 6, None),
        (RingId::NEG7, 6, None),
    ];
    for (r, n, expect) in runs {
        let rep = verify_theorem(r, n, DEFAULT_FAMILY_BOUND).map_err(|e| e.to_string())?;
        ensure(rep.status == TheoremStatus::Pass, || {
            format!(
                "d={} max-n {n}: {:?}, {} unmatched maximal, {} uncontained, missing {:?}",
                r.d(),
                rep.status,
                rep.unmatched_maximal.len(),
                rep.uncontained_nonmaximal.len(),
                rep.missing_catalogue
            )
        })?;
        let found: BTreeSet<&str> = rep.maximal_found.iter().map(String::as_str).collect();
        if let Some(names) = expect {
            ensure(found == names.iter().copied().collect(), || format!("d={} maximal set {found:?}", r.d()))?;
        }
        parts.push(format!("d={} n<={n}: {} classes", r.d(), rep.classes));
    }
    Ok(parts.join("; "))
}

// 8. Interlacing.

fn c8_interlacing() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    for r in RingId::ALL {
        let mut graphs: Vec<LGraph> = catalogue_with_bound(r, DEFAULT_FAMILY_BOUND).into_iter().map(|e| e.graph).collect();
        graphs.extend((0..500).map(|i| random_cyclotomic(r, 1 + i % 6, &mut rng)));
        for g in &graphs {
            ensure(is_cyclotomic(g), || format!("sample not cyclotomic: {}", g.to_json()))?;
            // Deleting the only vertex leaves the empty graph.
            if g.n() == 1 {
                continue;
            }
            for v in 0..g.n() {
                let h = g.delete_vertex(v).map_err(|e| e.to_string())?;
                ensure(is_cyclotomic(&h), || format!("deleting {v} from {} breaks cyclotomicity", g.to_json()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} vertex deletions stay cyclotomic"))
}

// 9. Mahler measure.

fn c9_mahler() -> Result<String, String> {
    let mut c = vec![0i64; 15];
    for (k, v) in [(14, 1), (12, -1), (7, 1), (2, -1), (0, 1)] {
        c[k] = v;
    }
    let m = mahler_measure(&IntPolynomial::from_i64s(&c));
    ensure((m - 1.20261).abs() < MAHLER_LEHMER_TOL, || format!("M = {m}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let rings = RingId::ALL;
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let g = random_cyclotomic(rings[i % 4], 1 + i % 6, &mut rng);
        let mg = mahler_measure(&reciprocal_poly(&char_poly(&g)));
        worst = worst.max((mg - 1.0).abs());
        ensure((mg - 1.0).abs() < MAHLER_ONE_TOL, || format!("M = {mg} for {}", g.to_json()))?;
    }
    Ok(format!("M = {m:.6}; 100 graphs |M - 1| <= {worst:.1e}"))
}

// 10. Floating-point oracle.

/// Largest |eigenvalue| of the Hermitian matrix of `g`, via the real
/// symmetric embedding [[X, -Y], [Y, X]] of X + iY.
fn spectral_radius(g: &LGraph) -> f64 {
    let n = g.n();
    let d = g.ring().d() as f64;
    let (wre, wim) = if g.ring().d() == -2 { (0.0, 2f64.sqrt()) } else { (0.5, (-d).sqrt() / 2.0) };
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = if i == j {
                (g.charge(i) as f64, 0.0)
            } else {
                let e = g.entry(i, j);
                (e.a as f64 + e.b as f64 * wre, e.b as f64 * wim)
            };
            m[(i, j)] = x;
            m[(n + i, n + j)] = x;
            m[(i, n + j)] = -y;
            m[(n + i, j)] = y;
        }
    }
    m.symmetric_eigen().eigenvalues.iter().fold(0.0, |acc: f64, x| acc.max(x.abs()))
}

fn c10_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let mut positives = 0;
    for r in RingId::ALL {
        for _ in 0..1000 {
            let g = random_mixed(r, 6, &mut rng);
            let exact = is_cyclotomic(&g);
            let float = spectral_radius(&g) <= ORACLE_THRESHOLD;
            ensure(exact == float, || format!("exact {exact}, float {float}: {}", g.to_json()))?;
            positives += exact as usize;
        }
    }
    Ok(format!("4000 graphs agree ({positives} cyclotomic)"))
}

fn main() {
    // `cargo test -- <filter>` style arguments are accepted and ignored, except
    // for `--list`, which the test runner may pass.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let criteria: [(&str, Duration, Check); 10] = [
        ("1 label sets", Duration::from_secs(1), c1_label_sets),
        ("2 catalogue health", Duration::from_secs(30), c2_catalogue),
        ("3 seed-set growth", Duration::from_secs(300), c3_growing),
        ("4 excluded forms", Duration::from_secs(60), c4_excluded),
        ("5 inequivalence", Duration::from_secs(60), c5_equivalence),
        ("6 gram combinations", Duration::from_secs(1), c6_gram),
        ("7 theorem verification", Duration::from_secs(1800), c7_theorem),
        ("8 interlacing", Duration::from_secs(120), c8_interlacing),
        ("9 mahler measure", Duration::from_secs(10), c9_mahler),
        ("10 float oracle", Duration::from_secs(120), c10_oracle),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > budget => Err(format!("took {took:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {name} ({took:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({took:.2?}): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
