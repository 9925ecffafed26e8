//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if
//! any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mct_core::constructions::{
    avoiding_set, c4_lower_bound_instance, cycle_blowup_decomposition, prime_blowup_decomposition,
    ruzsa_host, theorem1_host,
};
use mct_core::graph::{enumerate_copies, Edge, EdgeColoredGraph, SimpleGraph};
use mct_core::packing::{
    ex_multicolor_exact, ex_multicolor_unpruned, fractional_packing_lp, max_packing_exact,
    OracleLimits, PackingLimits, PackingProblem,
};
use mct_core::verify::{
    contains_rainbow_copy, lemma53_check, pair_census, rainbow_cherry_count, verify_packing,
};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Wall-clock budgets.
const DECOMPOSITION_BUDGET: Duration = Duration::from_secs(1);
const RUZSA_BUDGET: Duration = Duration::from_secs(30);
const ORACLE_BUDGET: Duration = Duration::from_secs(300);
/// Random hosts for the packing sandwich.
const SANDWICH_HOSTS: usize = 50;
const SANDWICH_SEED: u64 = 20_240_501;
/// Verified mutations for the pair sweep.
const MUTATIONS: usize = 100;
const MUTATION_SEED: u64 = 7;
const MUTATION_ATTEMPTS: usize = 20_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Edge set of an embedding, for independent disjointness checks.
fn edge_set(pattern: &SimpleGraph, images: &[usize]) -> Vec<Edge> {
    pattern.edges().iter().map(|e| Edge::new(images[e.0], images[e.1])).collect()
}

fn colored_from_cycles(n: usize, cycles: &[Vec<usize>]) -> EdgeColoredGraph {
    let mut triples = Vec::new();
    for (c, cyc) in cycles.iter().enumerate() {
        for i in 0..cyc.len() {
            triples.push((cyc[i], cyc[(i + 1) % cyc.len()], c));
        }
    }
    EdgeColoredGraph::from_colored_edges(n, triples).expect("edge-disjoint cycles")
}

fn cycle_decompositions() -> Outcome {
    let mut slowest = Duration::ZERO;
    for k in 3..=7 {
        for t in 1..=5 {
            let start = Instant::now();
            let d = cycle_blowup_decomposition(k, t).map_err(|e| e.to_string())?;
            let ck = SimpleGraph::cycle(k);
            let mut seen = BTreeSet::new();
            for part in d.parts() {
                ensure(part.is_valid_in(&ck, d.host()), || format!("C{k}({t}): copy not in host"))?;
                for e in edge_set(&ck, &part.images) {
                    ensure(seen.insert(e), || format!("C{k}({t}): edge {e} used twice"))?;
                }
            }
            let all: BTreeSet<Edge> = d.host().edges().into_iter().collect();
            ensure(d.parts().len() == t * t, || format!("C{k}({t}): {} copies", d.parts().len()))?;
            ensure(d.host().edge_count() == k * t * t && seen == all, || {
                format!("C{k}({t}): union is not the whole blow-up")
            })?;
            let took = start.elapsed();
            ensure(took < DECOMPOSITION_BUDGET, || format!("C{k}({t}) took {took:?}"))?;
            slowest = slowest.max(took);
        }
    }
    Ok(format!("25 cases, slowest {slowest:?} < {DECOMPOSITION_BUDGET:?}"))
}

fn prime_decompositions() -> Outcome {
    let c4_pendant = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
    let patterns = [
        ("K3", SimpleGraph::complete(3)),
        ("C5", SimpleGraph::cycle(5)),
        ("K4", SimpleGraph::complete(4)),
        ("C4", SimpleGraph::cycle(4)),
        ("P3", SimpleGraph::path(3)),
        ("P4", SimpleGraph::path(4)),
        ("P5", SimpleGraph::path(5)),
        ("C4+pendant", c4_pendant),
    ];
    let mut cases = 0;
    for (name, f) in &patterns {
        for s in [5, 7] {
            let d = prime_blowup_decomposition(f, s).map_err(|e| format!("{name}, s={s}: {e}"))?;
            ensure(d.is_complete() && d.parts().len() == s * s, || format!("{name}, s={s}: incomplete"))?;
            ensure(d.host().edge_count() == f.edge_count() * s * s, || format!("{name}, s={s}: host size"))?;
            let h = d.to_colored().map_err(|e| e.to_string())?;
            let report = verify_packing(&h, f);
            ensure(report.ok && report.classes == s * s, || format!("{name}, s={s}: {:?}", report.offender))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} decompositions verified"))
}

fn ruzsa_constructions() -> Outcome {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for (k, bound) in [(3, 2), (3, 5), (3, 10), (5, 2), (5, 3)] {
        let a = avoiding_set(bound, k).map_err(|e| e.to_string())?;
        let inst = ruzsa_host(k, bound, &a).map_err(|e| e.to_string())?;
        let ck = SimpleGraph::cycle(k);
        let h = inst.colored();
        ensure(inst.packing().len() == bound * a.len(), || format!("k={k}, N={bound}: packing size"))?;
        // monochromatic k-cycles counted by plain enumeration
        let mono = enumerate_copies(h.graph(), &ck, usize::MAX)
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|c| {
                let colors: BTreeSet<_> =
                    edge_set(&ck, &c.images).iter().map(|e| h.color(e.0, e.1).unwrap()).collect();
                colors.len() == 1
            })
            .count();
        ensure(mono == bound * a.len(), || format!("k={k}, N={bound}: {mono} monochromatic cycles"))?;
        ensure(verify_packing(h, &ck).ok, || format!("k={k}, N={bound}: packing check failed"))?;
        ensure(
            contains_rainbow_copy(h, &ck).map_err(|e| e.to_string())?.is_none(),
            || format!("k={k}, N={bound}: rainbow C{k} found"),
        )?;
        let mut owners: BTreeMap<Edge, usize> = BTreeMap::new();
        for c in inst.packing().copies() {
            for e in edge_set(&ck, &c.images) {
                *owners.entry(e).or_default() += 1;
            }
        }
        for e in inst.full_host().edges() {
            let parts = (inst.locate(e.0).0, inst.locate(e.1).0);
            if parts.0.min(parts.1) == 1 && parts.0.max(parts.1) == 2 {
                let count = owners.get(&e).copied().unwrap_or(0);
                ensure(count == 1, || format!("k={k}, N={bound}: first-pair edge {e} in {count} cycles"))?;
            }
        }
        sizes.push(format!("k{k}N{bound}:{}", inst.packing().len()));
    }
    let took = start.elapsed();
    ensure(took < RUZSA_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{} in {took:?} < {RUZSA_BUDGET:?}", sizes.join(" ")))
}

fn random_host(rng: &mut ChaCha8Rng, n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn packing_sandwich() -> Outcome {
    let lim = PackingLimits::default();
    let k4 = PackingProblem::new(&SimpleGraph::complete(4), &SimpleGraph::cycle(3), lim).unwrap();
    let lp = fractional_packing_lp(&k4).map_err(|e| e.to_string())?;
    let ilp = max_packing_exact(&k4, lim).map_err(|e| e.to_string())?;
    ensure(lp.value == rat(2) && ilp.value == 1, || format!("K4/C3: {} and {}", lp.value, ilp.value))?;
    let mut rng = ChaCha8Rng::seed_from_u64(SANDWICH_SEED);
    let mut checked = 0;
    for i in 0..SANDWICH_HOSTS {
        let n = 8 + i % 5;
        let host = random_host(&mut rng, n);
        for k in 3..=5 {
            let p = PackingProblem::new(&host, &SimpleGraph::cycle(k), lim).map_err(|e| e.to_string())?;
            let nu = max_packing_exact(&p, lim).map_err(|e| e.to_string())?.value;
            let edge_bound = BigRational::new(host.edge_count().into(), k.into());
            let nu_star = if p.copies().is_empty() {
                rat(0)
            } else {
                let lp = fractional_packing_lp(&p).map_err(|e| e.to_string())?;
                lp.certify(&p).map_err(|e| format!("host {i}, C{k}: {e}"))?;
                let dual = lp.dual.iter().fold(rat(0), |acc, y| acc + y);
                let primal = lp.primal.total();
                ensure(dual == lp.value && primal == lp.value, || format!("host {i}, C{k}: duality gap"))?;
                lp.value
            };
            ensure(rat(nu) <= nu_star && nu_star <= edge_bound, || {
                format!("host {i}, C{k}: {nu} <= {nu_star} <= {edge_bound} fails")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} host/pattern pairs, K4/C3 = (1, 2)"))
}

fn oracle_consistency() -> Outcome {
    let c3 = SimpleGraph::cycle(3);
    let lim = OracleLimits::default();
    let mut values = Vec::new();
    let mut at_seven = Duration::ZERO;
    for n in 3..=7 {
        let start = Instant::now();
        let exact = ex_multicolor_exact(n, &c3, &c3, lim).map_err(|e| e.to_string())?;
        if n == 7 {
            at_seven = start.elapsed();
        }
        let report = verify_packing(&exact.witness, &c3);
        ensure(report.ok && report.classes == exact.value, || format!("n={n}: witness is not a packing"))?;
        ensure(
            contains_rainbow_copy(&exact.witness, &c3).map_err(|e| e.to_string())?.is_none(),
            || format!("n={n}: witness has a rainbow triangle"),
        )?;
        if n <= 6 {
            let slow = ex_multicolor_unpruned(n, &c3, &c3, lim).map_err(|e| e.to_string())?;
            ensure(slow.value == exact.value, || format!("n={n}: {} vs {}", exact.value, slow.value))?;
        }
        values.push(exact.value);
    }
    ensure(values[0] == 1 && values[1] == 1, || format!("n=3,4 gave {:?}", &values[..2]))?;
    ensure(at_seven < ORACLE_BUDGET, || format!("n=7 took {at_seven:?}"))?;
    Ok(format!("values n=3..7 {values:?}, n=7 in {at_seven:?} < {ORACLE_BUDGET:?}"))
}

/// `e ≤ (√2·n^{3/2} + n)/2` in integers: `2e - n ≤ 0` or `(2e - n)² ≤ 2n³`.
fn edge_bound_holds(e: usize, n: usize) -> bool {
    let lhs = 2 * e as i128 - n as i128;
    lhs <= 0 || lhs * lhs <= 2 * (n as i128).pow(3)
}

fn c4_instances() -> Outcome {
    let mut notes = Vec::new();
    for q in [2, 3] {
        let inst = c4_lower_bound_instance(q).map_err(|e| e.to_string())?;
        let h = &inst.colored;
        let n = h.n();
        ensure(
            contains_rainbow_copy(h, &SimpleGraph::cycle(4)).map_err(|e| e.to_string())?.is_none(),
            || format!("q={q}: rainbow C4"),
        )?;
        let cherries = rainbow_cherry_count(h).map_err(|e| e.to_string())?;
        let by_degree: u64 = (0..n)
            .map(|v| {
                let m = (h.graph().degree(v) / 2) as u64;
                m * m.saturating_sub(1) / 2
            })
            .sum();
        ensure(cherries == 4 * by_degree, || format!("q={q}: cherries {cherries} vs 4·{by_degree}"))?;
        let c = pair_census(h);
        let pairs = (n * (n - 1) / 2) as u64;
        ensure(c.small + c.medium + c.large == pairs, || format!("q={q}: census misses pairs"))?;
        ensure(2 * c.large <= c.small, || format!("q={q}: l={} s={}", c.large, c.small))?;
        let chain = 3 * c.large + 2 * c.medium + c.small;
        ensure(c.cherries <= chain && chain <= 2 * pairs, || {
            format!("q={q}: {} <= {chain} <= {} fails", c.cherries, 2 * pairs)
        })?;
        ensure(edge_bound_holds(h.edge_count(), n), || format!("q={q}: edge bound fails"))?;
        ensure(c.all_ok(), || format!("q={q}: census flags {:?}", c.violations))?;
        notes.push(format!("q{q}: e={} cherries={cherries} s/m/l={}/{}/{}", h.edge_count(), c.small, c.medium, c.large));
    }
    Ok(notes.join("; "))
}

/// Adds a monochromatic 4-cycle on fresh or existing vertices, or drops a
/// color class.
fn mutate(h: &EdgeColoredGraph, rng: &mut ChaCha8Rng) -> Option<EdgeColoredGraph> {
    let classes = h.color_classes();
    if rng.gen_bool(0.2) && classes.len() > 1 {
        let drop = *classes.keys().nth(rng.gen_range(0..classes.len())).unwrap();
        let kept: Vec<(usize, usize, usize)> =
            h.colored_edges().filter(|(_, c)| *c != drop).map(|(e, c)| (e.0, e.1, c)).collect();
        return EdgeColoredGraph::from_colored_edges(h.n(), kept).ok();
    }
    let extra = rng.gen_range(0..=2);
    let n = h.n() + extra;
    let mut cycle: Vec<usize> = Vec::new();
    while cycle.len() < 4 {
        let v = rng.gen_range(0..n);
        if !cycle.contains(&v) {
            cycle.push(v);
        }
    }
    let color = classes.keys().next_back().map_or(0, |c| c + 1);
    let mut triples: Vec<(usize, usize, usize)> = h.colored_edges().map(|(e, c)| (e.0, e.1, c)).collect();
    for i in 0..4 {
        let (a, b) = (cycle[i], cycle[(i + 1) % 4]);
        if h.graph().n() > a.max(b) && h.graph().has_edge(a, b) {
            return None;
        }
        triples.push((a, b, color));
    }
    EdgeColoredGraph::from_colored_edges(n, triples).ok()
}

fn lemma53_sweep() -> Outcome {
    let type1 = colored_from_cycles(7, &[vec![0, 2, 5, 3], vec![1, 2, 6, 4], vec![0, 4, 3, 1]]);
    let type2 = colored_from_cycles(8, &[vec![3, 0, 5, 1, 2], vec![4, 0, 6, 1, 3], vec![2, 0, 7, 1, 4]]);
    let mut generated: Vec<(String, EdgeColoredGraph, usize)> = vec![
        ("type1".into(), type1.clone(), 4),
        ("type2".into(), type2, 5),
    ];
    for q in [2, 3, 4, 5] {
        generated.push((format!("polarity q={q}"), c4_lower_bound_instance(q).unwrap().colored, 4));
    }
    let mut verified = 0;
    let mut large = 0;
    for (name, h, k) in &generated {
        let s = lemma53_check(h, *k).map_err(|e| e.to_string())?;
        ensure(!s.is_counterexample(), || format!("{name}: {:?}", s.violations))?;
        if s.preconditions {
            verified += 1;
            large += s.large_pairs;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MUTATION_SEED);
    let seeds = [type1, c4_lower_bound_instance(2).unwrap().colored];
    let mut states = seeds.to_vec();
    let mut accepted = 0;
    let mut attempts = 0;
    let c4 = SimpleGraph::cycle(4);
    while accepted < MUTATIONS && attempts < MUTATION_ATTEMPTS {
        attempts += 1;
        let slot = attempts % states.len();
        let Some(next) = mutate(&states[slot], &mut rng) else { continue };
        if !verify_packing(&next, &c4).ok || contains_rainbow_copy(&next, &c4).map_err(|e| e.to_string())?.is_some() {
            continue;
        }
        let s = lemma53_check(&next, 4).map_err(|e| e.to_string())?;
        ensure(s.preconditions, || "mutation verified but sweep preconditions fail".into())?;
        ensure(s.violations.is_empty(), || format!("verified counterexample: {:?}", s.violations))?;
        large += s.large_pairs;
        accepted += 1;
        states[slot] = next;
    }
    ensure(accepted == MUTATIONS, || format!("only {accepted} verified mutations in {attempts} attempts"))?;
    Ok(format!(
        "{verified} generated + {accepted} mutated instances, {large} Large pairs, no violations"
    ))
}

fn theorem1_weighting() -> Outcome {
    let c6 = SimpleGraph::cycle(6);
    let mut notes = Vec::new();
    for (n, expected) in [(20usize, 9usize), (27, 16)] {
        let t = theorem1_host(&c6, 0, 3, n).map_err(|e| e.to_string())?;
        let s = &t.summary;
        // recount loads edge by edge from the copy list
        let mut counts: BTreeMap<Edge, usize> = BTreeMap::new();
        for c in &t.copies {
            ensure(c.is_valid_in(&c6, &t.host), || format!("n={n}: copy outside the host"))?;
            for e in edge_set(&c6, &c.images) {
                *counts.entry(e).or_default() += 1;
            }
        }
        let labels = t.partition.labels();
        let one = rat(1);
        for e in t.host.edges() {
            let load = &s.weight * rat(counts.get(&e).copied().unwrap_or(0));
            ensure(load <= one, || format!("n={n}: edge {e} load {load}"))?;
            let pair = (labels[e.0].min(labels[e.1]), labels[e.0].max(labels[e.1]));
            if pair == s.target_pair {
                ensure(load == one, || format!("n={n}: target edge {e} load {load}"))?;
            }
        }
        let total = &s.weight * rat(t.copies.len());
        ensure(total == rat(expected) && s.total == total, || format!("n={n}: total {total}, want {expected}"))?;
        ensure(s.target_edges == expected, || format!("n={n}: target pair has {} edges", s.target_edges))?;
        notes.push(format!("n={n}: total {total} = {expected}"));
    }
    Ok(notes.join("; "))
}

/// Runs the CLI in `dir`, returning stdout.
fn mct(dir: &Path, args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_mct"))
        .args(args)
        .current_dir(dir)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("mct {args:?} failed: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

/// Every file in `dir` by name; catalog lines lose their wall time.
fn snapshot(dir: &Path) -> Result<BTreeMap<String, String>, String> {
    let mut files = BTreeMap::new();
    for entry in fs::read_dir(dir).map_err(|e| e.to_string())? {
        let entry = entry.map_err(|e| e.to_string())?;
        let name = entry.file_name().to_string_lossy().into_owned();
        let text = fs::read_to_string(entry.path()).map_err(|e| e.to_string())?;
        let text = if name.ends_with(".jsonl") {
            text.lines()
                .map(|line| {
                    let mut v: serde_json::Value = serde_json::from_str(line).expect("catalog line");
                    v.as_object_mut().unwrap().remove("wall_time_ms");
                    v.to_string()
                })
                .collect::<Vec<_>>()
                .join("\n")
        } else {
            text
        };
        files.insert(name, text);
    }
    Ok(files)
}

fn determinism() -> Outcome {
    let runs: &[&[&str]] = &[
        &["construct", "cycle-blowup", "--k", "5", "--t", "3", "--out", "cb.txt"],
        &["construct", "prime-blowup", "--pattern", "K4", "--s", "5", "--out", "pb.txt"],
        &["construct", "ruzsa", "--k", "3", "--N", "5", "--out", "ru.txt"],
        &["construct", "er-blowup", "--q", "3", "--out", "er.txt"],
        &["construct", "theorem1", "--pattern", "C6", "--u", "0", "--v", "3", "--n", "20", "--out", "t1.txt"],
        &["construct", "avoiding-set", "--N", "50", "--k", "3", "--out", "av.txt"],
        &["verify", "er.txt", "--pattern", "C4", "--forbidden", "C4", "--checks",
          "packing,certificate,rainbow,census,cherries,lemma53,witness", "--seed", "11"],
        &["pack", "cb.txt", "--pattern", "C5", "--out", "packed.txt"],
        &["oracle", "--n", "6", "--pattern", "C3", "--forbidden", "C3", "--out", "or.txt"],
        &["construct", "ruzsa", "--k", "3", "--N", "1"],
        &["report", "catalog.jsonl"],
    ];
    let mut results = Vec::new();
    for _ in 0..2 {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let mut stdout = Vec::new();
        for args in runs {
            let mut full: Vec<&str> = args.to_vec();
            full.extend(["--catalog", "catalog.jsonl", "--format", "json-lines"]);
            stdout.push(mct(dir.path(), &full)?);
            stdout.push(mct(dir.path(), args)?);
        }
        results.push((stdout, snapshot(dir.path())?));
    }
    let files = results[0].1.len();
    ensure(results[0].0 == results[1].0, || "stdout differs between runs".into())?;
    ensure(results[0].1 == results[1].1, || "files differ between runs".into())?;
    Ok(format!("{} invocations, {files} files identical across runs", 2 * runs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("cycle blow-up decompositions", cycle_decompositions),
        ("prime blow-up decompositions", prime_decompositions),
        ("progression-cycle constructions", ruzsa_constructions),
        ("integral/fractional packing sandwich", packing_sandwich),
        ("oracle self-consistency", oracle_consistency),
        ("C4 instance counting chain", c4_instances),
        ("rainbow common neighbor sweep", lemma53_sweep),
        ("fractional weighting of the contracted host", theorem1_weighting),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
