//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use boolfactor::dyadic;
use boolfactor::factor::{self, candidate_value, FactorOptions};
use boolfactor::generic::{g_mul_sym, hamming_weight_sym};
use boolfactor::satsolve::{self, forced_assignments, DEFAULT_BUDGET};
use boolfactor::{BoolExpr, DyadicInt, GenericInt, Instantiation, Term, VarSet};
use boolfactor_cli::bench::{self, BenchConfig, BenchRecord};
use boolfactor_cli::commands::cmd_divide;
use boolfactor_cli::Flags;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn odd_divisors_of_length(n: u64, len: usize) -> Vec<u64> {
    (1..=n)
        .step_by(2)
        .filter(|d| n % d == 0 && (64 - d.leading_zeros()) as usize == len)
        .collect()
}

fn random_expr(rng: &mut ChaCha8Rng, nvars: usize, max_terms: usize) -> BoolExpr {
    let k = rng.gen_range(0..=max_terms);
    BoolExpr::from_terms((0..k).map(|_| Term::from_mask(rng.gen_range(0..1u64 << nvars))))
}

fn random_coeffs(rng: &mut ChaCha8Rng, nvars: usize, width: usize) -> Vec<BoolExpr> {
    (0..width).map(|_| random_expr(rng, nvars, 3)).collect()
}

fn c1_division_goldens() -> Verdict {
    // (a, b, gamma, verdict, quotient line)
    let cases = [
        (209, 19, 4, "exact: c(4) = borrows(4)", "quotient = 1011 = 11"),
        (209, 21, 4, "not exact: c(4) != borrows(4)", "quotient = 1101 = 13"),
        (209, 17, 4, "not exact: c(4) != borrows(4)", "quotient = 0001 = 1"),
        (513, 27, 6, "exact: c(6) = borrows(6)", "quotient = 010011 = 19"),
    ];
    for (a, b, g, verdict, quotient) in cases {
        let out = cmd_divide(a, b, None, &Flags::default());
        ensure(out.code == 0, || format!("divide {a} {b} exited {}", out.code))?;
        let lines: Vec<&str> = out.stdout.lines().collect();
        let gamma = format!("gamma = {g}");
        for want in [gamma.as_str(), verdict, quotient] {
            ensure(lines.contains(&want), || {
                format!("divide {a} {b}: missing line {want:?}")
            })?;
        }
    }
    Ok("209/19, 209/21, 209/17, 513/27".into())
}

fn c2_bf_goldens() -> Verdict {
    for (n, j, want) in [(21, 0, "x1"), (77, 0, "x1*x2+x1*x3"), (95, 0, "0"), (95, 1, "x1*x2+x2")] {
        let got = factor::bf_build(n, j).map_err(|e| e.to_string())?.e.to_string();
        ensure(got == want, || format!("N={n} j={j}: e = {got}, want {want}"))?;
    }
    // N, level, the satisfying instantiation as (x1, x2, ...), divisor, cofactor.
    let cases: [(u64, usize, &[bool], u64, u64); 3] = [
        (21, 0, &[true, true], 7, 3),
        (77, 0, &[true, false, true], 11, 7),
        (95, 1, &[false, true], 5, 19),
    ];
    for (n, j, phi, d, q) in cases {
        let inst = factor::bf_build(n, j).map_err(|e| e.to_string())?;
        let out =
            satsolve::solve_scarce(&inst.system(), inst.universe(), DEFAULT_BUDGET, true).map_err(|e| e.to_string())?;
        let got: Vec<Vec<bool>> = out
            .solutions
            .iter()
            .map(|s| (1..=phi.len()).map(|i| s.get(i)).collect())
            .collect();
        ensure(got == vec![phi.to_vec()], || format!("N={n}: solutions {got:?}"))?;
        let report = factor::bf_factor(n, &FactorOptions::default()).map_err(|e| e.to_string())?;
        let pairs: Vec<(u64, u64)> = report.factors.iter().map(|p| (p.divisor, p.cofactor)).collect();
        ensure(pairs == vec![(d, q)], || format!("N={n}: factors {pairs:?}"))?;
        ensure(report.stages.last().map(|s| s.level) == Some(j), || {
            format!("N={n}: stopped late")
        })?;
    }
    Ok("four equations, three factorisations".into())
}

fn c3_division_sweep() -> Verdict {
    let mut count = 0u64;
    for b in (1..=255i128).step_by(2) {
        let db = DyadicInt::from_int(b);
        for a in 1..=10000i128 {
            let d = dyadic::divides_exactly(&DyadicInt::from_int(a), &db).map_err(|e| e.to_string())?;
            let divisible = a % b == 0;
            ensure(d.exact == divisible, || format!("{a}/{b}: exact = {}", d.exact))?;
            if divisible {
                let q = d.quotient.to_u128_mod().map_err(|e| e.to_string())?;
                ensure(q == (a / b) as u128, || format!("{a}/{b}: quotient {q}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} divisions, 0 mismatches"))
}

fn c4_homomorphism() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (exact_pairs, truncated_pairs) = (1000, 500);
    for k in 0..exact_pairs + truncated_pairs {
        let nvars = rng.gen_range(1..=6);
        let (wa, wb) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let err = |e: boolfactor::Error| format!("pair {k}: {e}");
        if k < exact_pairs {
            let a = GenericInt::exact(random_coeffs(&mut rng, nvars, wa), random_expr(&mut rng, nvars, 2));
            let b = GenericInt::exact(random_coeffs(&mut rng, nvars, wb), random_expr(&mut rng, nvars, 2));
            let ops = [a.add(&b), a.mul(&b), a.sub(&b), a.negate()];
            let ops: Vec<GenericInt> = ops.into_iter().collect::<Result<_, _>>().map_err(err)?;
            for phi in Instantiation::all(nvars) {
                let (x, y) = (a.instantiate(&phi).map_err(err)?, b.instantiate(&phi).map_err(err)?);
                let got: Vec<i128> = ops
                    .iter()
                    .map(|g| g.instantiate(&phi))
                    .collect::<Result<_, _>>()
                    .map_err(err)?;
                ensure(got == [x + y, x * y, x - y, -x], || {
                    format!("pair {k} ({a}; {b}) at {phi:?}: {got:?}")
                })?;
            }
        } else {
            let w = wa;
            let a = GenericInt::truncated(random_coeffs(&mut rng, nvars, w));
            let b = GenericInt::truncated(random_coeffs(&mut rng, nvars, w));
            let m = 1u128 << w;
            let ops = [a.add(&b), a.mul(&b), a.sub(&b), a.negate()];
            let ops: Vec<GenericInt> = ops.into_iter().collect::<Result<_, _>>().map_err(err)?;
            for phi in Instantiation::all(nvars) {
                let (x, y) = (
                    a.instantiate_mod(&phi).map_err(err)?,
                    b.instantiate_mod(&phi).map_err(err)?,
                );
                let got: Vec<u128> = ops
                    .iter()
                    .map(|g| g.instantiate_mod(&phi).map(|v| v % m))
                    .collect::<Result<_, _>>()
                    .map_err(err)?;
                let want = [(x + y) % m, x * y % m, (x + m - y) % m, (m - x) % m];
                ensure(got == want, || {
                    format!("truncated pair {k} ({a}; {b}) at {phi:?}: {got:?}")
                })?;
            }
        }
    }
    Ok(format!("{exact_pairs} exact and {truncated_pairs} truncated pairs"))
}

fn c5_symmetric_multiplier() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pairs = 250;
    for k in 0..pairs {
        let nvars = rng.gen_range(1..=5);
        let (wa, wb) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = GenericInt::exact(random_coeffs(&mut rng, nvars, wa), BoolExpr::zero());
        let b = GenericInt::exact(random_coeffs(&mut rng, nvars, wb), BoolExpr::zero());
        let err = |e: boolfactor::Error| format!("pair {k}: {e}");
        let sym = g_mul_sym(&a, &b).map_err(err)?;
        let plain = a.mul(&b).map_err(err)?;
        for phi in Instantiation::all(nvars) {
            let (s, p) = (
                sym.instantiate(&phi).map_err(err)?,
                plain.instantiate(&phi).map_err(err)?,
            );
            let want = a.instantiate(&phi).map_err(err)? * b.instantiate(&phi).map_err(err)?;
            ensure(s == p && s == want, || {
                format!("pair {k} ({a}; {b}) at {phi:?}: {s} vs {p}")
            })?;
        }
    }
    let mut strings = 0u64;
    for m in 0..=12usize {
        for bits in 0..1u64 << m {
            let s: Vec<bool> = (0..m).map(|i| bits >> i & 1 == 1).collect();
            let w = hamming_weight_sym(&s);
            ensure(w == bits.count_ones() as u64, || format!("weight of {s:?} = {w}"))?;
            strings += 1;
        }
    }
    Ok(format!("{pairs} pairs; {strings} bitstrings"))
}

fn c6_level_bijection() -> Verdict {
    let mut levels = 0;
    for n in (3u64..512).step_by(2) {
        let (_, beta, _) = factor::parameters(n);
        for j in 0..beta {
            let inst = factor::bf_build(n, j).map_err(|e| e.to_string())?;
            let out = satsolve::solve_scarce(&inst.system(), inst.universe(), DEFAULT_BUDGET, true)
                .map_err(|e| e.to_string())?;
            ensure(!out.exhausted, || format!("N={n} j={j}: budget exhausted"))?;
            let len = beta - j;
            let mut found: Vec<u64> = out.solutions.iter().map(|p| candidate_value(p, len)).collect();
            found.sort_unstable();
            let want = odd_divisors_of_length(n, len);
            ensure(found == want, || format!("N={n} j={j}: {found:?} vs {want:?}"))?;
            for phi in &out.solutions {
                let d = candidate_value(phi, len);
                ensure(inst.cofactor(phi) == n / d, || format!("N={n} j={j}: cofactor of {d}"))?;
            }
            levels += 1;
        }
    }
    Ok(format!("{levels} levels, 0 mismatches"))
}

fn c7_completeness() -> Verdict {
    let opts = FactorOptions::default();
    let xinv = factor::mbf_precompute(6, 26).map_err(|e| e.to_string())?;
    let (mut composites, mut primes) = (0, 0);
    for n in (3u64..4096).step_by(2) {
        let bf = factor::bf_factor(n, &opts).map_err(|e| format!("bf {n}: {e}"))?;
        for p in &bf.factors {
            ensure(p.divisor * p.cofactor == n && p.divisor > 1 && p.divisor < n, || {
                format!("N={n}: {p:?}")
            })?;
        }
        if is_prime(n) {
            ensure(bf.factors.is_empty(), || {
                format!("prime {n} factored: {:?}", bf.factors)
            })?;
            primes += 1;
        } else {
            ensure(!bf.factors.is_empty(), || format!("composite {n} not factored"))?;
            composites += 1;
        }
        let mbf = factor::mbf_factor(n, &xinv, &opts).map_err(|e| format!("mbf {n}: {e}"))?;
        ensure(mbf.factor_set() == bf.factor_set(), || {
            format!("N={n}: mbf {:?} vs bf {:?}", mbf.factor_set(), bf.factor_set())
        })?;
    }
    Ok(format!(
        "{composites} composites factored, {primes} primes left whole, MBF agrees"
    ))
}

fn c8_solver() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cases = 500;
    for k in 0..cases {
        let nvars = rng.gen_range(1..=8);
        let e = random_expr(&mut rng, nvars, 12);
        let universe = VarSet::range(0, nvars);
        let out = satsolve::solve_scarce(&e, universe, DEFAULT_BUDGET, true).map_err(|e| e.to_string())?;
        let mut brute: Vec<Instantiation> = Instantiation::all(nvars).filter(|p| e.evaluate(p)).collect();
        brute.sort_by_key(|p| (0..nvars).map(|i| p.get(i)).collect::<Vec<_>>());
        ensure(out.solutions == brute, || format!("case {k}: {e}"))?;
        let mut forced: Vec<BTreeMap<usize, bool>> = vec![out.forced.clone()];
        if let Ok(f) = forced_assignments(&e) {
            forced.push(f);
        }
        for phi in &brute {
            for (&i, &bit) in forced.iter().flatten() {
                ensure(phi.get(i) == bit, || format!("case {k}: {e} forces x{i}={bit}"))?;
            }
        }
    }
    Ok(format!("{cases} expressions"))
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Ranks with ties given their average position.
fn ranks(v: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
    let mut r = vec![0.0; v.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
            j += 1;
        }
        for &k in &idx[i..=j] {
            r[k] = (i + j) as f64 / 2.0 + 1.0;
        }
        i = j + 1;
    }
    r
}

fn spearman(x: &[f64], y: &[f64]) -> f64 {
    let (rx, ry) = (ranks(x), ranks(y));
    let n = x.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let sxy: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let syy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    sxy / (sxx * syy).sqrt()
}

fn c9_exponential_runtime() -> Verdict {
    let config = BenchConfig {
        repeats: 3,
        ..BenchConfig::default()
    };
    let records: Vec<BenchRecord> = bench::run(9, (1 << 14) - 1, &config).map_err(|e| e.to_string())?;
    let mut buckets: BTreeMap<usize, Vec<&BenchRecord>> = BTreeMap::new();
    for r in &records {
        buckets.entry(r.beta).or_default().push(r);
    }
    let betas: Vec<f64> = buckets.keys().map(|&b| b as f64).collect();
    let times: Vec<f64> = buckets
        .values()
        .map(|rs| median(rs.iter().map(|r| r.wall_time_s).collect()))
        .collect();
    let terms: Vec<f64> = buckets
        .values()
        .map(|rs| median(rs.iter().map(|r| r.anf_peak_terms as f64).collect()))
        .collect();
    let strictly_increasing = |v: &[f64]| v.windows(2).all(|w| w[0] < w[1]);
    let (rho_t, rho_s) = (spearman(&betas, &times), spearman(&betas, &terms));
    let table: Vec<String> = betas
        .iter()
        .zip(times.iter().zip(&terms))
        .map(|(b, (t, s))| format!("beta {b}: {:.1} us, {s} terms", t * 1e6))
        .collect();
    let detail = format!(
        "{} records; rho(time) = {rho_t:.3}, rho(terms) = {rho_s:.3}, slope {:.3}; {}",
        records.len(),
        bench::time_slope(&records).unwrap_or(f64::NAN),
        table.join("; ")
    );
    ensure(rho_t > 0.9 && rho_s > 0.9, || format!("correlation too weak: {detail}"))?;
    ensure(strictly_increasing(&times), || {
        format!("median time not strictly increasing: {detail}")
    })?;
    ensure(strictly_increasing(&terms), || {
        format!("median terms not strictly increasing: {detail}")
    })?;
    Ok(detail)
}

fn main() {
    let criteria: [(&str, fn() -> Verdict, Duration); 9] = [
        ("lopsided-division goldens", c1_division_goldens, Duration::from_secs(1)),
        ("BF goldens", c2_bf_goldens, Duration::from_secs(1)),
        ("division oracle sweep", c3_division_sweep, Duration::from_secs(30)),
        ("instantiation homomorphism", c4_homomorphism, Duration::from_secs(60)),
        (
            "symmetric multiplier and Hamming weight",
            c5_symmetric_multiplier,
            Duration::from_secs(60),
        ),
        (
            "level systems biject with divisors",
            c6_level_bijection,
            Duration::from_secs(300),
        ),
        (
            "BF completeness and MBF agreement",
            c7_completeness,
            Duration::from_secs(1800),
        ),
        ("scarce solver against brute force", c8_solver, Duration::from_secs(60)),
        ("runtime grows with beta", c9_exponential_runtime, Duration::MAX),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:.0?}")),
            v => v,
        };
        match verdict {
            Ok(detail) => println!("PASS {}. {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name} ({elapsed:.2?}): {detail}", k + 1);
            }
        }
    }
    println!("{}/9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
