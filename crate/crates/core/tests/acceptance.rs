//! Acceptance run: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p fmzv-core --test acceptance`.

use std::time::{Duration, Instant};

use fmzv_core::algebra::{muneta_sides, repeat, Index, IndexCombination};
use fmzv_core::engine::{mhs, mhs_bruteforce};
use fmzv_core::identities::{
    default_instances, ratio_probe, verify_adelic, verify_symbolic, Identity, ProbeReport,
};
use fmzv_core::modular::{primes_in, PrimeRange};

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

/// Verifies every instance over `(weight + 2, hi]`. Every prime in that
/// window must be evaluated, gated and passing, except primes where
/// `beta_k` is not evaluated (`p <= k + 2`), which must be reported as such.
fn adelic_grid(instances: &[Identity], hi: u64) -> Outcome {
    let mut checked = 0;
    let mut beta_skips = 0;
    for identity in instances {
        let range = PrimeRange::new(identity.threshold() + 1, hi);
        let expected = primes_in(&range).len();
        let report = match verify_adelic(identity, &range) {
            Ok(r) => r,
            Err(e) => return fail(format!("{identity}: {e}")),
        };
        if !report.passed() {
            return fail(format!("{identity}: failures at {:?}", report.failures));
        }
        if let Some(s) = report.skipped.iter().find(|s| !s.reason.contains("beta_")) {
            return fail(format!("{identity}: unexpected skip {s:?}"));
        }
        if report.gated_primes + report.skipped.len() != expected {
            return fail(format!(
                "{identity}: {} of {expected} primes gated",
                report.gated_primes
            ));
        }
        checked += report.gated_primes;
        beta_skips += report.skipped.len();
    }
    ok(format!(
        "{} instances, {checked} prime checks, {beta_skips} beta-threshold skips",
        instances.len()
    ))
}

fn lm_grid(lo: u32, hi: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for l in 0..=hi / 2 {
        for m in 0..=hi - 2 * l {
            if (lo..=hi).contains(&(2 * l + m)) {
                v.push((l, m));
            }
        }
    }
    v
}

fn c1_muneta() -> Outcome {
    for l in 0..=4 {
        for m in 0..=5 {
            let (lhs, rhs) = muneta_sides(l, m);
            if lhs != rhs {
                return fail(format!("l={l} m={m}: difference {}", &lhs - &rhs));
            }
            let report = verify_symbolic(&Identity::Muneta {
                l: l as u32,
                m: m as u32,
            })
            .unwrap();
            if !report.passed() {
                return fail(format!("registry disagrees at l={l} m={m}"));
            }
        }
    }
    ok("30 instances exact")
}

fn c2_vandermonde() -> Outcome {
    for l in 0..=40 {
        for m in 0..=40 {
            for id in [Identity::Vdm1 { l, m }, Identity::Vdm2 { l, m }] {
                let r = verify_symbolic(&id).unwrap();
                if !r.passed() {
                    return fail(format!("{id}: {:?}", r.symbolic));
                }
            }
        }
    }
    ok("3362 instances exact")
}

fn c3_main_theorem() -> Outcome {
    let mut instances = Vec::new();
    for (l, m) in lm_grid(1, 5) {
        instances.push(Identity::Mt1 { l, m });
        instances.push(Identity::Mt2 { l, m });
    }
    adelic_grid(&instances, 400)
}

fn c4_zeta_twos() -> Outcome {
    let instances: Vec<Identity> = (1..=6)
        .flat_map(|r| [Identity::Zc { r }, Identity::ZcStar { r }])
        .collect();
    adelic_grid(&instances, 400)
}

fn c5_two_three() -> Outcome {
    let mut instances = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 - a {
            instances.push(Identity::TwoThree { a, b });
        }
    }
    adelic_grid(&instances, 400)
}

fn c6_shuffle_a2() -> Outcome {
    let instances: Vec<Identity> = default_instances()
        .into_iter()
        .filter(|i| matches!(i, Identity::ShuffleA2 { .. }))
        .collect();
    let mut checked = 0;
    for identity in &instances {
        let range = PrimeRange::new(9, 200);
        let report = verify_adelic(identity, &range).unwrap();
        if !report.passed() || report.gated_primes != primes_in(&range).len() {
            return fail(format!("{identity}: failures at {:?}", report.failures));
        }
        checked += report.gated_primes;
    }
    ok(format!(
        "{} index pairs, {checked} prime checks",
        instances.len()
    ))
}

fn c7_aaa_yam() -> Outcome {
    let mut instances = Vec::new();
    for (l, m) in lm_grid(1, 4) {
        instances.push(Identity::Aaa { l, m });
        instances.push(Identity::Yam { l, m });
    }
    let aaa: Vec<Identity> = instances
        .iter()
        .filter(|i| i.id() == "aaa")
        .cloned()
        .collect();
    let yam: Vec<Identity> = instances
        .iter()
        .filter(|i| i.id() == "yam")
        .cloned()
        .collect();
    let a = adelic_grid(&aaa, 300);
    if !a.pass {
        return a;
    }
    let y = adelic_grid(&yam, 300);
    if !y.pass {
        return y;
    }
    ok(format!("aaa: {}; yam: {}", a.detail, y.detail))
}

fn c8_saito_wakabayashi() -> Outcome {
    let mut instances = Vec::new();
    for (a, b, c) in [(1, 3, 2), (1, 5, 2), (3, 3, 4)] {
        for l in 0..=3 {
            for m in 0..=3 - l {
                if (l, m) != (0, 0) {
                    instances.push(Identity::Sw { a, b, c, l, m });
                    instances.push(Identity::SwStar { a, b, c, l, m });
                }
            }
        }
    }
    adelic_grid(&instances, 300)
}

fn indices_up_to(max_weight: u32, max_depth: usize) -> Vec<Index> {
    let mut out = vec![Vec::<u32>::new()];
    let mut i = 0;
    while i < out.len() {
        let prefix = out[i].clone();
        i += 1;
        if prefix.len() == max_depth {
            continue;
        }
        let used: u32 = prefix.iter().sum();
        for k in 1..=max_weight - used {
            let mut next = prefix.clone();
            next.push(k);
            out.push(next);
        }
    }
    out.into_iter().map(|e| Index::new(e).unwrap()).collect()
}

fn c9_oracle() -> Outcome {
    let indices = indices_up_to(6, 3);
    let mut n = 0;
    for index in &indices {
        for p in [5u64, 7, 11, 13] {
            for power in [1u8, 2] {
                for star in [false, true] {
                    let dp = mhs(index, p, power, star).unwrap();
                    let brute = mhs_bruteforce(index, p, power, star).unwrap();
                    if dp != brute {
                        return fail(format!(
                            "({index}) p={p} n={power} star={star}: {dp} vs {brute}"
                        ));
                    }
                    n += 1;
                }
            }
        }
    }
    ok(format!("{} indices, {n} comparisons", indices.len()))
}

fn c10_wolstenholme() -> Outcome {
    let primes = primes_in(&PrimeRange::new(5, 1000));
    for &p in &primes {
        let v = mhs(&Index::from([1]), p, 2, false).unwrap();
        if !v.is_zero() {
            return fail(format!("p={p}: {v}"));
        }
    }
    ok(format!("{} primes", primes.len()))
}

fn probe(index: Index, k: u32, range: &PrimeRange) -> ProbeReport {
    ratio_probe(&IndexCombination::basis(index), k, range, false).unwrap()
}

fn c11_ratio_probe() -> Outcome {
    // p^{1/3} must reach the heights 9 and 2 of the expected ratios.
    let range = PrimeRange::new(730, 1100);
    let a = probe(Index::from([1, 3]), 5, &range);
    if !(a.consistent && a.candidate.as_deref() == Some("-9/2") && a.support >= 3) {
        return fail(format!("(1,3): {:?} support {}", a.candidate, a.support));
    }
    let b = probe(repeat(&Index::from([2]), 3), 7, &range);
    if !(b.consistent && b.candidate.as_deref() == Some("2") && b.support >= 3) {
        return fail(format!("(2,2,2): {:?} support {}", b.candidate, b.support));
    }
    let c = probe(Index::from([1, 5, 1, 5]), 13, &range);
    ok(format!(
        "-9/2 from {} primes, 2 from {} primes; diagnostic (1,5,1,5)/beta_13: consistent={} candidate={:?} support={}",
        a.support, b.support, c.consistent, c.candidate, c.support
    ))
}

fn c12_performance(grid_time: Duration) -> Outcome {
    let index = Index::from([1, 2, 3, 4]);
    let start = Instant::now();
    let v = mhs(&index, 100_003, 2, false).unwrap();
    let single = start.elapsed();
    let pass = single < Duration::from_secs(1) && grid_time < Duration::from_secs(300);
    let detail = format!(
        "depth-4 sum at p=100003: {single:.2?} (value {}); main-theorem grid: {grid_time:.2?}",
        v.value()
    );
    if pass {
        ok(detail)
    } else {
        fail(detail)
    }
}

fn main() {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build_global()
        .expect("single-threaded pool");

    let mut results: Vec<(&str, Outcome)> = Vec::new();
    let mut run = |name: &'static str, f: &dyn Fn() -> Outcome| -> Duration {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        println!(
            "[{}] {name} ({elapsed:.2?}): {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
        results.push((name, outcome));
        elapsed
    };

    run("C1 muneta exact, l<=4 m<=5", &c1_muneta);
    run("C2 vdm1/vdm2 exact, l,m<=40", &c2_vandermonde);
    let grid = run("C3 mt1/mt2 mod p^2, 2l+m<=5, p<=400", &c3_main_theorem);
    run("C4 zc/zc_star mod p^2, r<=6, p<=400", &c4_zeta_twos);
    run("C5 two_three mod p, a+b<=4, p<=400", &c5_two_three);
    run("C6 shuffle_a2 mod p^2, weight<=6, 8<p<=200", &c6_shuffle_a2);
    run("C7 aaa/yam mod p^2, 2l+m<=4, p<=300", &c7_aaa_yam);
    run("C8 sw/sw_star mod p, l+m<=3, p<=300", &c8_saito_wakabayashi);
    run("C9 DP vs brute force, weight<=6 depth<=3", &c9_oracle);
    run("C10 Wolstenholme mod p^2, 5<=p<=1000", &c10_wolstenholme);
    run("C11 ratio probe", &c11_ratio_probe);
    run("C12 performance", &|| c12_performance(grid));

    let failed: Vec<&str> = results
        .iter()
        .filter(|(_, o)| !o.pass)
        .map(|(n, _)| *n)
        .collect();
    println!(
        "acceptance: {} passed, {} failed",
        results.len() - failed.len(),
        failed.len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
