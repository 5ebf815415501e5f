//! One line per acceptance criterion; exits non-zero if any fails.
//!
//! `cargo test -p arrowsimp --test acceptance`

use std::process::ExitCode;
use std::time::Instant;

use arrowsimp::verify::{
    identity_suite, lakhlifi_suite, paley_suite, sweep, theorem9_suite, Population, SweepConfig,
};
use arrowsimp::*;

const PALEY_ORDERS: [u64; 5] = [3, 7, 11, 19, 23];

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail_of(r: &SuiteReport) -> String {
    match r.first_failure() {
        Some((check, f)) => format!("{check} failed on {}: {}", f.instance, f.detail),
        None => "suite failed".into(),
    }
}

fn paley7_maximum() -> Outcome {
    let t = paley_tournament(7).map_err(|e| e.to_string())?;
    let r = arrow_simplicity(&t).map_err(|e| e.to_string())?;
    ensure(r.s == 3, || format!("s = {}", r.s))?;
    let k = is_doubly_regular(&t).map_err(|e| e.to_string())?;
    ensure(k == Some(1), || format!("doubly regular k = {k:?}"))?;
    Ok("s = 3 = (7-1)/2, doubly regular with k = 1".into())
}

fn exhaustive_small_orders() -> Outcome {
    let opts = SearchOptions::default();
    let mut parts = Vec::new();
    for (n, max_s) in [(4usize, 0usize), (5, 1), (6, 2)] {
        let mut config = SweepConfig::new(Population::Exhaustive { n });
        config.identities = false;
        config.oracle = false;
        let r = sweep(&config, &opts).map_err(|e| e.to_string())?;
        ensure(r.passed(), || fail_of(&r))?;
        let worst = r.s_distribution.keys().max().copied().unwrap_or(0);
        ensure(worst <= max_s, || format!("n = {n}: max s = {worst} > {max_s}"))?;
        ensure(n != 4 || r.s_distribution.keys().eq([0].iter()), || {
            format!("n = 4: s values {:?}", r.s_distribution)
        })?;
        parts.push(format!("n={n}: {} tournaments, max s {worst}", r.instances));
    }
    Ok(parts.join("; "))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for bits in 0..64 {
        let t = Tournament::from_pair_bits(4, bits);
        let (a, b) = (arrow_simplicity(&t).unwrap().s, direct_oracle(&t).unwrap());
        ensure(a == b, || format!("labeled 4-tournament {bits}: {a} vs oracle {b}"))?;
        checked += 1;
    }
    for seed in 0..256 {
        let t = random_tournament(5, seed).unwrap();
        let (a, b) = (arrow_simplicity(&t).unwrap().s, direct_oracle(&t).unwrap());
        ensure(a == b, || format!("random 5-tournament seed {seed}: {a} vs oracle {b}"))?;
        checked += 1;
    }
    Ok(format!("{checked} tournaments agree (64 labeled n=4, 256 random n=5)"))
}

fn paley11_deletions() -> Outcome {
    let r = theorem9_suite(11, &SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.passed(), || fail_of(&r))?;
    let two = r.check_named("two_deletions").map_or(0, |c| c.evaluated);
    let three = r.check_named("three_deletions").map_or(0, |c| c.evaluated);
    ensure(two == 55 && three == 165, || format!("evaluated {two}/{three}"))?;
    Ok("55 two-vertex deletions s = 3, 165 three-vertex deletions s = 2".into())
}

fn one_vertex_deletions() -> Outcome {
    for (q, want) in [(7u64, 2usize), (11, 4)] {
        let t = paley_tournament(q).unwrap();
        for v in 0..t.n() {
            let sub = t.delete_vertices(VertexSet::singleton(v)).unwrap();
            let s = arrow_simplicity(&sub).unwrap().s;
            ensure(s == want, || format!("Paley-{q} minus {v}: s = {s}, want {want}"))?;
            let ext = near_regular_partition(&sub).and_then(|p| lakhlifi_extend(&sub, &p));
            let ext = ext.map_err(|e| format!("Paley-{q} minus {v}: {e}"))?;
            ensure(is_doubly_regular(&ext).unwrap().is_some(), || {
                format!("Paley-{q} minus {v}: extension not doubly regular")
            })?;
        }
    }
    Ok("Paley-7 minus a vertex s = 2, Paley-11 minus a vertex s = 4, all extend".into())
}

fn identities_random() -> Outcome {
    let mut config = SweepConfig::new(Population::Sample { n_min: 3, n_max: 16, count: 500, seed: 0 });
    config.bounds = false;
    config.oracle = false;
    let r = sweep(&config, &SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.passed() && r.instances == 500, || fail_of(&r))?;
    // cross-check the single-instance entry point on the same population
    for i in 0..500 {
        let (t, label) = config.instance(i).unwrap();
        let r = identity_suite(&t, &label).unwrap();
        ensure(r.passed(), || fail_of(&r))?;
    }
    let evals: u64 = r.checks.iter().map(|c| c.evaluated).sum();
    Ok(format!("500 tournaments, {evals} identity evaluations"))
}

fn separator_conditions_and_profile() -> Outcome {
    for q in [7, 11] {
        let r = lakhlifi_suite(q).map_err(|e| e.to_string())?;
        ensure(r.passed(), || fail_of(&r))?;
    }
    for q in PALEY_ORDERS {
        let t = paley_tournament(q).unwrap();
        ensure(dr_pair_profile_check(&t).unwrap(), || format!("Paley-{q} pair profile"))?;
    }
    Ok("arc cases and (C1)/(C2) on all deletions of Paley-7/11; profile for q in 3,7,11,19,23".into())
}

fn hadamard_bridge() -> Outcome {
    for q in PALEY_ORDERS {
        let t = paley_tournament(q).unwrap();
        let h = dr_to_skew_hadamard(&t).map_err(|e| format!("q = {q}: {e}"))?;
        let m = h.order();
        for i in 0..m {
            for j in 0..m {
                let sym = h.get(i, j) + h.get(j, i);
                ensure(sym == if i == j { 2 } else { 0 }, || format!("q = {q}: H+H^T at ({i},{j})"))?;
                let dot: i64 = (0..m).map(|c| (h.get(i, c) * h.get(j, c)) as i64).sum();
                ensure(dot == if i == j { m as i64 } else { 0 }, || {
                    format!("q = {q}: HH^T at ({i},{j}) = {dot}")
                })?;
            }
        }
        let r = paley_suite(q).map_err(|e| e.to_string())?;
        ensure(r.check_named("hadamard_bridge").is_some_and(|c| c.passed()), || fail_of(&r))?;
    }
    Ok("H+H^T = 2I, HH^T = (q+1)I, byte-identical round trip for q in 3,7,11,19,23".into())
}

fn witness_validity() -> Outcome {
    for i in 0..100u64 {
        let n = 5 + (i % 8) as usize;
        let seed = 9000 + i;
        let t = random_tournament(n, seed).unwrap();
        let r = arrow_simplicity(&t).unwrap();
        let flipped = t.reverse_arcs(&r.witness_arcs).map_err(|e| e.to_string())?;
        ensure(is_module(&flipped, r.witness_module), || {
            format!("n = {n} seed = {seed}: {} is not a module after reversal", r.witness_module)
        })?;
        ensure(r.witness_arcs.len() == r.s, || format!("n = {n} seed = {seed}: |witness| != s"))?;
        let size = r.witness_module.len();
        ensure((2..n).contains(&size), || format!("n = {n} seed = {seed}: trivial witness"))?;
    }
    Ok("100 random tournaments, n in 5..=12".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Paley-7 maximum", paley7_maximum),
        ("exhaustive n = 4, 5, 6 bounds", exhaustive_small_orders),
        ("oracle equivalence", oracle_equivalence),
        ("Paley-11 two/three deletions", paley11_deletions),
        ("one-vertex deletions extend", one_vertex_deletions),
        ("identity suite", identities_random),
        ("separator conditions and pair profile", separator_conditions_and_profile),
        ("skew-Hadamard bridge", hadamard_bridge),
        ("witness validity", witness_validity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("[PASS] {}. {name}: {msg} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {msg} ({secs:.2}s)", i + 1);
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
