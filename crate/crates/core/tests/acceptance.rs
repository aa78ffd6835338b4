//! Acceptance run: one PASS/FAIL line per criterion, with timings.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hamcycle::count::{count_by_crossing_type, count_hamilton_cycles, count_with, CountOptions};
use hamcycle::formulas::{n5_count, rl_count, schwenk_count};
use hamcycle::generators::{
    base38, base38_four_cycles, fixture, generalized_petersen, ladder_extension, nanotube, ring_of_ladders,
    FourCycleHandle, FIXTURE_NAMES,
};
use hamcycle::graph::Graph;
use hamcycle::transfer::{self, build_transfer_system, growth_constants, total_nanotube_count, typed_count};
use num_bigint::{BigInt, BigUint};

type Check = Result<(), String>;

/// Name, check, and time limit in seconds.
type Criterion = (&'static str, fn() -> Check, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hc(g: &Graph) -> Result<u64, String> {
    count_hamilton_cycles(g).map(|c| c.total).map_err(|e| e.to_string())
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn fixture_counts() -> Check {
    let limits = [
        ("base38", 4, Duration::from_secs(5)),
        ("cc5_64_a", 16, Duration::from_secs(600)),
        ("cc5_64_b", 16, Duration::from_secs(600)),
        ("fullerene56", 1746, Duration::from_secs(600)),
    ];
    for (name, expected, limit) in limits {
        let g = fixture(name).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let got = hc(&g)?;
        let took = start.elapsed();
        ensure(got == expected, || format!("{name}: {got} != {expected}"))?;
        ensure(took <= limit, || format!("{name}: {took:?} over {limit:?}"))?;
    }
    Ok(())
}

fn extension_chain() -> Check {
    let mut g = base38();
    let mut handle = base38_four_cycles()[0];
    for n in [42, 46] {
        let old_n = g.n();
        g = ladder_extension(&g, &handle, true).map_err(|e| e.to_string())?;
        ensure(g.n() == n, || format!("expected {n} vertices, got {}", g.n()))?;
        let got = hc(&g)?;
        ensure(got == 4, || format!("{n} vertices: {got} cycles"))?;
        let cc4 = g.is_cyclically_k_edge_connected(4).map_err(|e| e.to_string())?;
        ensure(cc4, || format!("{n} vertices: not cyclically 4-edge-connected"))?;
        handle = FourCycleHandle::middle_after_extension(old_n);
    }
    Ok(())
}

fn schwenk_agreement() -> Check {
    for (m, published) in [(10, 30), (12, 34), (14, 56), (16, 108), (18, 150)] {
        let formula = schwenk_count(m).map_err(|e| e.to_string())?;
        let counted = hc(&generalized_petersen(m, 2).map_err(|e| e.to_string())?)?;
        ensure(formula == big(counted) && counted == published, || {
            format!("m = {m}: formula {formula}, enumeration {counted}, published {published}")
        })?;
    }
    Ok(())
}

fn rl_lemma() -> Check {
    for m in 2..=10 {
        for k in 2..=10 {
            if 2 * m * k > 40 {
                continue;
            }
            let formula = rl_count(m, k).map_err(|e| e.to_string())?;
            let counted = hc(&ring_of_ladders(m, k).map_err(|e| e.to_string())?)?;
            ensure(formula == big(counted), || format!("RL({m},{k}): formula {formula}, enumeration {counted}"))?;
        }
    }
    let v = rl_count(5, 4).map_err(|e| e.to_string())?;
    ensure(v == big(542), || format!("RL(5,4) = {v}"))
}

fn nanotube_theorem() -> Check {
    for k in 1..=50usize {
        let formula = n5_count(k).map_err(|e| e.to_string())?;
        let tm = total_nanotube_count(5, k as u64).map_err(|e| e.to_string())?;
        ensure(formula == tm, || format!("k = {k}: formula {formula}, transfer {tm}"))?;
    }
    for (k, expected) in [(1, 30), (2, 20), (3, 280), (4, 80)] {
        let counted = hc(&nanotube(5, k).map_err(|e| e.to_string())?.graph)?;
        ensure(counted == expected, || format!("N(5,{k}): enumeration {counted}, expected {expected}"))?;
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn transfer_exactness() -> Check {
    let as_u64 = |v: &[BigUint]| v.iter().map(|x| u64::try_from(x).unwrap_or(u64::MAX)).collect::<Vec<_>>();
    let five = build_transfer_system(5, 2, true).map_err(|e| e.to_string())?;
    let m5: Vec<Vec<u64>> = five.matrix.iter().map(|r| as_u64(r)).collect();
    ensure(m5 == vec![vec![0, 3], vec![4, 0]], || format!("M(5,2) = {m5:?}"))?;
    ensure(as_u64(&five.start) == [0, 5] && as_u64(&five.finish) == [1, 0], || {
        format!("v_s = {:?}, v_f = {:?}", five.start, five.finish)
    })?;

    let ref_m = [
        [0, 2, 0, 0, 0, 1],
        [2, 0, 1, 1, 0, 0],
        [1, 0, 1, 2, 1, 0],
        [1, 0, 2, 1, 1, 0],
        [0, 2, 0, 0, 0, 2],
        [0, 0, 2, 2, 2, 0],
    ];
    let (ref_s, ref_f) = ([0, 6, 0, 0, 0, 3], [1, 0, 0, 0, 1, 0]);
    let six = build_transfer_system(6, 2, true).map_err(|e| e.to_string())?;
    ensure(six.dim() == 6, || format!("w = 6 system has dimension {}", six.dim()))?;
    let m6: Vec<Vec<u64>> = six.matrix.iter().map(|r| as_u64(r)).collect();
    let (s6, f6) = (as_u64(&six.start), as_u64(&six.finish));
    let matches = permutations(6).into_iter().any(|p| {
        (0..6).all(|i| s6[p[i]] == ref_s[i] && f6[p[i]] == ref_f[i] && (0..6).all(|j| m6[p[i]][p[j]] == ref_m[i][j]))
    });
    ensure(matches, || format!("w = 6 system differs:\n{}", six.render()))?;

    let typed = typed_count(6, 2, 4).map_err(|e| e.to_string())?;
    ensure(typed == big(1104), || format!("typed_count(6,2,4) = {typed}"))?;
    let total = total_nanotube_count(6, 4).map_err(|e| e.to_string())?;
    ensure(total == big(1232), || format!("total_nanotube_count(6,4) = {total}"))
}

fn oracle_equivalence() -> Check {
    for w in 4..=7usize {
        for k in 1..=3usize {
            let lg = nanotube(w, k).map_err(|e| e.to_string())?;
            let buckets = count_by_crossing_type(&lg).map_err(|e| e.to_string())?;
            for c in 1..=w / 2 {
                let expected = buckets.get(&(2 * c)).copied().unwrap_or(0);
                let got = typed_count(w, c, k as u64).map_err(|e| e.to_string())?;
                ensure(got == big(expected), || format!("w = {w}, c = {c}, k = {k}: {got} vs {expected}"))?;
            }
        }
    }
    Ok(())
}

fn asymptotics() -> Check {
    let g = growth_constants(6, 2).map_err(|e| e.to_string())?;
    ensure((g.dominant_root - 4.493959207).abs() <= 1e-6, || format!("B = {}", g.dominant_root))?;
    let cubic: Vec<BigInt> = [8, -4, -4, 1].iter().map(|&x| BigInt::from(x)).collect();
    let b = g.dominant_root;
    ensure((b.powi(3) - 4.0 * b * b - 4.0 * b + 8.0).abs() < 1e-6, || "B is not a root of the cubic".into())?;
    let char_asc: Vec<BigInt> = g.char_poly.iter().rev().cloned().collect();
    let (_, rem) = transfer::poly::div_rem(&transfer::poly::to_rat(&char_asc), &transfer::poly::to_rat(&cubic));
    ensure(transfer::poly::is_zero_poly(&rem), || "cubic does not divide the characteristic polynomial".into())?;
    ensure((g.prefactor - 2.756982978).abs() <= 1e-3, || format!("A = {}", g.prefactor))?;
    let sys = build_transfer_system(6, 2, true).map_err(|e| e.to_string())?;
    for (k, tol) in [(5usize, 1e-2), (10, 1e-4)] {
        let exact: f64 = sys.count(k as u64).to_string().parse().map_err(|_| "count parse".to_string())?;
        let est = g.estimate(k).ok_or("no estimate")?;
        let rel = (est - exact).abs() / exact;
        ensure(rel <= tol, || format!("k = {k}: relative error {rel:.2e}"))?;
    }
    Ok(())
}

fn crossover() -> Check {
    let e = |x: hamcycle::formulas::FormulaError| x.to_string();
    ensure(n5_count(1).map_err(e)? == big(30) && schwenk_count(10).map_err(e)? == big(30), || {
        "N(5,1) and P(10,2) do not both have 30".into()
    })?;
    for t in 2..=20 {
        let n5 = n5_count(2 * t - 1).map_err(e)?;
        let p = schwenk_count(10 * t).map_err(e)?;
        ensure(n5 > p, || format!("t = {t}: {n5} <= {p}"))?;
    }
    Ok(())
}

fn property_suites() -> Check {
    let mut graphs: Vec<(String, Graph)> = FIXTURE_NAMES
        .iter()
        .map(|n| (n.to_string(), fixture(n).expect("fixture loads")))
        .collect();
    for m in 5..=20 {
        for k in 1..=3 {
            if 2 * k < m {
                graphs.push((format!("P({m},{k})"), generalized_petersen(m, k).map_err(|e| e.to_string())?));
            }
        }
    }
    for m in 2..=10 {
        for k in 2..=10 {
            if 2 * m * k <= 40 {
                graphs.push((format!("RL({m},{k})"), ring_of_ladders(m, k).map_err(|e| e.to_string())?));
            }
        }
    }
    for w in 3..=10 {
        for k in 1..=5 {
            if 2 * w * (k + 1) <= 40 {
                graphs.push((format!("N({w},{k})"), nanotube(w, k).map_err(|e| e.to_string())?.graph));
            }
        }
    }
    let opts = CountOptions {
        per_edge: true,
        budget: None,
    };
    for (name, g) in &graphs {
        let c = count_with(g, opts).map_err(|e| format!("{name}: {e}"))?;
        let per = c.per_edge.expect("requested");
        ensure(per.iter().all(|x| x % 2 == 0), || format!("{name}: odd per-edge count"))?;
        ensure(c.total == 0 || c.total >= 3, || format!("{name}: {} cycles", c.total))?;
    }
    for (w, c) in [(4, 1), (4, 2), (5, 1), (5, 2), (6, 1), (6, 2), (6, 3)] {
        let full = build_transfer_system(w, c, false).map_err(|e| e.to_string())?;
        let reduced = build_transfer_system(w, c, true).map_err(|e| e.to_string())?;
        for k in 0..=8 {
            ensure(full.count(k) == reduced.count(k), || format!("w = {w}, c = {c}, k = {k}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fixture counts", fixture_counts, 1800),
        ("ladder-extension chain", extension_chain, 120),
        ("P(m,2) formula vs enumeration", schwenk_agreement, 300),
        ("ring-of-ladders formula vs enumeration", rl_lemma, 600),
        ("width-5 nanotube formula", nanotube_theorem, 300),
        ("transfer systems", transfer_exactness, 60),
        ("transfer vs enumeration by type", oracle_equivalence, 900),
        ("growth constants", asymptotics, 60),
        ("nanotube/Petersen crossover", crossover, 10),
        ("property suites", property_suites, 600),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(took.as_secs() <= *limit, || format!("took {took:.1?}, limit {limit}s"))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({:.2}s)", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2}s): {why}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
